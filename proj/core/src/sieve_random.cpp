// Copyright 2026 The galsieve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "galsieve/sieve_random.hpp"

#include <mutex>

#include "galsieve/error.hpp"

namespace galsieve {

const std::vector<TablePtr>& small_group_tables() {
  static std::once_flag once;
  static std::vector<TablePtr> tables;
  std::call_once(once, [] {
    std::vector<GroupPtr> groups = {cyclic_group(2),     cyclic_group(3),   cyclic_group(5),      cyclic_group(12),
                                    dihedral_group(4),   dihedral_group(5), quaternion_group(),   alternating_group(4),
                                    symmetric_group(3),  symmetric_group(4), symmetric_group(5),  gl2(3)};
    for (const auto& G : groups) tables.push_back(std::make_shared<const CharacterTable>(char_table_generic(G)));
  });
  return tables;
}

SieveInstance random_sieve_instance(std::mt19937_64& rng, const RandomInstanceParams& params) {
  const auto& pool = small_group_tables();
  std::vector<TablePtr> allowed;
  for (const auto& t : pool)
    if (t->group->order() <= params.max_group_order) allowed.push_back(t);
  if (allowed.empty() || params.max_components == 0 || params.max_x == 0)
    throw DomainError("random_sieve_instance: empty parameter range");

  auto uniform = [&](u64 lo, u64 hi) { return std::uniform_int_distribution<u64>(lo, hi)(rng); };
  SieveInstance inst;
  inst.x_size = uniform(1, params.max_x);
  const size_t k = uniform(1, params.max_components);
  std::vector<u64> weights;
  for (size_t i = 0; i < k; ++i) {
    SieveComponent c;
    c.label = "lambda" + std::to_string(i);
    c.table = allowed[uniform(0, allowed.size() - 1)];
    const auto& G = *c.table->group;
    const auto& cp = G.classes();
    c.rho.resize(inst.x_size);
    for (auto& r : c.rho) r = cp.class_of[uniform(0, G.order() - 1)];
    std::vector<bool> adm(cp.count(), false);
    adm[uniform(0, cp.count() - 1)] = true;
    for (size_t j = 0; j < cp.count(); ++j)
      if (uniform(0, 2) == 0) adm[j] = true;
    c.delta = class_measure(G, adm);
    c.admissible = std::move(adm);
    inst.components.push_back(std::move(c));
    weights.push_back(uniform(2, 7));
  }
  double full = 1;
  for (u64 w : weights) full *= static_cast<double>(w);
  inst.support = support_products(weights, static_cast<double>(uniform(1, static_cast<u64>(full))));
  return inst;
}

}  // namespace galsieve

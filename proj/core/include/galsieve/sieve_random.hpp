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

#ifndef GALSIEVE_SIEVE_RANDOM_HPP_
#define GALSIEVE_SIEVE_RANDOM_HPP_

#include <random>
#include <vector>

#include "galsieve/sieve.hpp"

namespace galsieve {

struct RandomInstanceParams {
  size_t max_x = 2000;
  size_t max_components = 4;
  u64 max_group_order = 120;
};

// Small groups with their character tables, built once: cyclic groups,
// dihedral groups, Q8, A4, S3, S4, S5 and GL2(F_3), all of order <= 120.
const std::vector<TablePtr>& small_group_tables();

// A random instance: components drawn from small_group_tables(), rho from
// uniformly random elements, admissible sets random nonempty class sets
// with delta their exact measure, and Z a random downward-closed family.
SieveInstance random_sieve_instance(std::mt19937_64& rng, const RandomInstanceParams& params = {});

}  // namespace galsieve

#endif  // GALSIEVE_SIEVE_RANDOM_HPP_

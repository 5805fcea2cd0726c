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

#include "galsieve/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "galsieve/error.hpp"

namespace galsieve {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
constexpr u64 kMaxProductOrder = 200000;
constexpr u64 kPermTableLimit = 1500;

}  // namespace

// ---------------------------------------------------------------- FiniteGroup

Elem FiniteGroup::power(Elem x, u64 e) const {
  Elem r = identity();
  while (e > 0) {
    if (e & 1) r = multiply(r, x);
    x = multiply(x, x);
    e >>= 1;
  }
  return r;
}

u64 FiniteGroup::element_order(Elem x) const {
  u64 k = 1;
  Elem y = x;
  while (y != identity()) {
    y = multiply(y, x);
    ++k;
  }
  return k;
}

const ClassPartition& FiniteGroup::classes() const {
  std::call_once(classes_once_, [this] { classes_ = std::make_unique<ClassPartition>(compute_classes()); });
  return *classes_;
}

ClassPartition FiniteGroup::compute_classes() const {
  const u64 n = order();
  const auto gens = generators();
  ClassPartition cp;
  cp.class_of.assign(n, kUnset);
  auto orbit = [&](Elem start) {
    const auto c = static_cast<std::uint32_t>(cp.classes.size());
    std::vector<Elem> members{start};
    cp.class_of[start] = c;
    for (size_t i = 0; i < members.size(); ++i) {
      for (Elem g : gens) {
        Elem y = conjugate(g, members[i]);
        if (cp.class_of[y] == kUnset) {
          cp.class_of[y] = c;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    cp.classes.push_back(std::move(members));
  };
  orbit(identity());
  for (Elem x = 0; x < n; ++x)
    if (cp.class_of[x] == kUnset) orbit(x);
  return cp;
}

// ---------------------------------------------------------------- CayleyGroup

CayleyGroup::CayleyGroup(std::string name, std::vector<std::vector<Elem>> table, std::vector<Elem> generators)
    : name_(std::move(name)), table_(std::move(table)), gens_(std::move(generators)) {
  const size_t n = table_.size();
  bool found = false;
  for (Elem e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw DomainError("CayleyGroup: table has no identity");
  inverse_.assign(n, kUnset);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (table_[x][y] == identity_) inverse_[x] = y;
  for (Elem x = 0; x < n; ++x)
    if (inverse_[x] == kUnset) throw DomainError("CayleyGroup: element without inverse");
}

// ---------------------------------------------------------------- PermutationGroup

namespace {

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint8_t>(i);
  return r;
}

Perm identity_perm(int n) {
  Perm r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

}  // namespace

PermutationGroup::PermutationGroup(std::string name, int degree, const std::vector<Perm>& generators)
    : name_(std::move(name)), degree_(degree) {
  std::set<Perm> seen{identity_perm(degree)};
  std::vector<Perm> frontier{identity_perm(degree)};
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != degree) throw DomainError("PermutationGroup: generator degree mismatch");
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        Perm y = compose(g, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  elems_.assign(seen.begin(), seen.end());
  for (const auto& g : generators) gens_.push_back(index_of(g));
  if (elems_.size() <= kPermTableLimit) {
    const size_t n = elems_.size();
    mult_.resize(n * n);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) mult_[a * n + b] = index_of(compose(elems_[a], elems_[b]));
  }
}

Elem PermutationGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  if (it == elems_.end() || *it != p) throw DomainError("PermutationGroup: permutation not in group");
  return static_cast<Elem>(it - elems_.begin());
}

bool PermutationGroup::contains(const Perm& p) const { return std::binary_search(elems_.begin(), elems_.end(), p); }

Elem PermutationGroup::multiply(Elem a, Elem b) const {
  if (!mult_.empty()) return mult_[static_cast<size_t>(a) * elems_.size() + b];
  return index_of(compose(elems_[a], elems_[b]));
}

Elem PermutationGroup::inverse(Elem a) const { return index_of(perm_inverse(elems_[a])); }

// ---------------------------------------------------------------- ProductGroup

ProductGroup::ProductGroup(std::vector<GroupPtr> factors) : factors_(std::move(factors)) {
  strides_.resize(factors_.size());
  for (size_t i = factors_.size(); i-- > 0;) {
    strides_[i] = order_;
    order_ *= factors_[i]->order();
    if (order_ > std::numeric_limits<Elem>::max()) throw CapacityError("ProductGroup: order too large");
  }
}

std::vector<Elem> ProductGroup::split(Elem a) const {
  std::vector<Elem> parts(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) parts[i] = static_cast<Elem>((a / strides_[i]) % factors_[i]->order());
  return parts;
}

Elem ProductGroup::join(const std::vector<Elem>& parts) const {
  u64 idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i) idx += parts[i] * strides_[i];
  return static_cast<Elem>(idx);
}

Elem ProductGroup::multiply(Elem a, Elem b) const {
  auto pa = split(a), pb = split(b);
  for (size_t i = 0; i < factors_.size(); ++i) pa[i] = factors_[i]->multiply(pa[i], pb[i]);
  return join(pa);
}

Elem ProductGroup::inverse(Elem a) const {
  auto pa = split(a);
  for (size_t i = 0; i < factors_.size(); ++i) pa[i] = factors_[i]->inverse(pa[i]);
  return join(pa);
}

Elem ProductGroup::identity() const {
  std::vector<Elem> parts(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) parts[i] = factors_[i]->identity();
  return join(parts);
}

std::vector<Elem> ProductGroup::generators() const {
  std::vector<Elem> out;
  std::vector<Elem> base(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) base[i] = factors_[i]->identity();
  for (size_t i = 0; i < factors_.size(); ++i) {
    for (Elem g : factors_[i]->generators()) {
      auto parts = base;
      parts[i] = g;
      out.push_back(join(parts));
    }
  }
  return out;
}

std::string ProductGroup::name() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < factors_.size(); ++i) s += (i ? " x " : "") + factors_[i]->name();
  return s;
}

size_t ProductGroup::class_index(const std::vector<size_t>& cc) const {
  size_t idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i]->class_count() + cc[i];
  return idx;
}

std::vector<size_t> ProductGroup::split_class(size_t c) const {
  std::vector<size_t> cc(factors_.size());
  for (size_t i = factors_.size(); i-- > 0;) {
    const size_t k = factors_[i]->class_count();
    cc[i] = c % k;
    c /= k;
  }
  return cc;
}

ClassPartition ProductGroup::compute_classes() const {
  size_t total = 1;
  for (const auto& f : factors_) total *= f->class_count();
  ClassPartition cp;
  cp.classes.resize(total);
  cp.class_of.resize(order_);
  std::vector<size_t> cc(factors_.size());
  for (Elem x = 0; x < order_; ++x) {
    auto parts = split(x);
    for (size_t i = 0; i < factors_.size(); ++i) cc[i] = factors_[i]->classes().class_of[parts[i]];
    const auto c = class_index(cc);
    cp.class_of[x] = static_cast<std::uint32_t>(c);
    cp.classes[c].push_back(x);
  }
  return cp;
}

// ---------------------------------------------------------------- SubgroupView

SubgroupView::SubgroupView(GroupPtr parent, std::vector<Elem> elements, std::vector<Elem> parent_generators)
    : parent_(std::move(parent)), elems_(std::move(elements)), parent_gens_(std::move(parent_generators)) {
  std::sort(elems_.begin(), elems_.end());
}

Elem SubgroupView::local_index(Elem pe) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), pe);
  if (it == elems_.end() || *it != pe) throw DomainError("SubgroupView: element not in subgroup");
  return static_cast<Elem>(it - elems_.begin());
}

Elem SubgroupView::multiply(Elem a, Elem b) const { return local_index(parent_->multiply(elems_[a], elems_[b])); }
Elem SubgroupView::inverse(Elem a) const { return local_index(parent_->inverse(elems_[a])); }
Elem SubgroupView::identity() const { return local_index(parent_->identity()); }

std::vector<Elem> SubgroupView::generators() const {
  std::vector<Elem> out;
  for (Elem g : parent_gens_) out.push_back(local_index(g));
  return out;
}

// ---------------------------------------------------------------- constructors

GroupPtr cyclic_group(u64 n) {
  if (n == 0) throw DomainError("cyclic_group: n must be positive");
  if (n > 5000) throw CapacityError("cyclic_group: table too large");
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (u64 a = 0; a < n; ++a)
    for (u64 b = 0; b < n; ++b) t[a][b] = static_cast<Elem>((a + b) % n);
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  return std::make_shared<CayleyGroup>("C" + std::to_string(n), std::move(t), std::move(gens));
}

GroupPtr symmetric_group(int n) {
  if (n < 1 || n > 8) throw CapacityError("symmetric_group: n must lie in [1, 8]");
  std::vector<Perm> gens;
  if (n >= 2) {
    Perm t = identity_perm(n);
    std::swap(t[0], t[1]);
    gens.push_back(t);
    Perm c(n);
    for (int i = 0; i < n; ++i) c[i] = static_cast<std::uint8_t>((i + 1) % n);
    gens.push_back(c);
  }
  return std::make_shared<PermutationGroup>("S" + std::to_string(n), n, gens);
}

GroupPtr alternating_group(int n) {
  if (n < 1 || n > 8) throw CapacityError("alternating_group: n must lie in [1, 8]");
  std::vector<Perm> gens;
  for (int k = 2; k < n; ++k) {
    Perm c = identity_perm(n);
    c[0] = 1;
    c[1] = static_cast<std::uint8_t>(k);
    c[k] = 0;
    gens.push_back(c);
  }
  return std::make_shared<PermutationGroup>("A" + std::to_string(n), n, gens);
}

GroupPtr dihedral_group(int n) {
  if (n < 3 || n > 60) throw DomainError("dihedral_group: n must lie in [3, 60]");
  Perm r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = static_cast<std::uint8_t>((i + 1) % n);
    s[i] = static_cast<std::uint8_t>((n - i) % n);
  }
  return std::make_shared<PermutationGroup>("D" + std::to_string(2 * n), n, std::vector<Perm>{r, s});
}

GroupPtr quaternion_group() {
  // Index 4*s + u encodes (-1)^s * {1, i, j, k}[u].
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<Elem>> t(8, std::vector<Elem>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int sa = a / 4, ua = a % 4, sb = b / 4, ub = b % 4;
      int s = (sa + sb + unit_sign[ua][ub]) % 2;
      t[a][b] = static_cast<Elem>(4 * s + unit_prod[ua][ub]);
    }
  return std::make_shared<CayleyGroup>("Q8", std::move(t), std::vector<Elem>{1, 2});
}

std::shared_ptr<const ProductGroup> direct_product(const std::vector<GroupPtr>& groups) {
  u64 order = 1;
  for (const auto& g : groups) {
    order *= g->order();
    if (order > kMaxProductOrder) throw CapacityError("direct_product: order exceeds 2*10^5");
  }
  return std::make_shared<ProductGroup>(groups);
}

// ---------------------------------------------------------------- subgroup tools

std::vector<Elem> closure(const FiniteGroup& G, const std::vector<Elem>& gens) {
  std::vector<char> seen(G.order(), 0);
  std::vector<Elem> members{G.identity()};
  seen[G.identity()] = 1;
  for (size_t i = 0; i < members.size(); ++i) {
    for (Elem g : gens) {
      Elem y = G.multiply(members[i], g);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_normal(const FiniteGroup& G, const std::vector<Elem>& H) {
  for (Elem g : G.generators())
    for (Elem h : H)
      if (!std::binary_search(H.begin(), H.end(), G.conjugate(g, h))) return false;
  return true;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

size_t quotient_class_count(const FiniteGroup& G, const std::vector<Elem>& N) {
  std::vector<std::uint32_t> coset(G.order(), kUnset);
  std::uint32_t ncosets = 0;
  for (Elem x = 0; x < G.order(); ++x) {
    if (coset[x] != kUnset) continue;
    for (Elem n : N) coset[G.multiply(x, n)] = ncosets;
    ++ncosets;
  }
  UnionFind uf(ncosets);
  for (const auto& cls : G.classes().classes)
    for (Elem y : cls) uf.unite(coset[cls.front()], coset[y]);
  size_t count = 0;
  for (std::uint32_t c = 0; c < ncosets; ++c)
    if (uf.find(c) == c) ++count;
  return count;
}

bool gallagher_check(const GroupPtr& G, const std::vector<Elem>& normal_gens) {
  auto N = closure(*G, normal_gens);
  if (!is_normal(*G, N)) throw DomainError("gallagher_check: subgroup is not normal");
  SubgroupView view(G, N, normal_gens);
  const size_t lhs = G->class_count();
  const size_t rhs = quotient_class_count(*G, N) * view.class_count();
  return lhs <= rhs;
}

std::optional<size_t> jordan_missed_class(const FiniteGroup& G, const std::vector<Elem>& gens) {
  auto H = closure(G, gens);
  if (H.size() == G.order()) return std::nullopt;
  std::vector<char> in_h(G.order(), 0);
  for (Elem h : H) in_h[h] = 1;
  const auto& cp = G.classes();
  for (size_t c = 0; c < cp.count(); ++c) {
    bool hit = false;
    for (Elem x : cp.classes[c])
      if (in_h[x]) {
        hit = true;
        break;
      }
    if (!hit) return c;
  }
  throw InvariantViolation("jordan_missed_class: proper subgroup meets every class");
}

std::vector<std::vector<Elem>> subgroup_lattice(const FiniteGroup& G) {
  if (G.order() > 100) throw CapacityError("subgroup_lattice: |G| above 100");
  std::set<std::vector<Elem>> all;
  std::vector<Elem> cyclic_gens;
  std::set<std::vector<Elem>> cyclic;
  for (Elem g = 0; g < G.order(); ++g) {
    if (cyclic.insert(closure(G, {g})).second) cyclic_gens.push_back(g);
  }
  all = cyclic;
  std::vector<std::vector<Elem>> frontier(cyclic.begin(), cyclic.end());
  while (!frontier.empty()) {
    std::vector<std::vector<Elem>> next;
    for (const auto& A : frontier) {
      for (Elem c : cyclic_gens) {
        if (std::binary_search(A.begin(), A.end(), c)) continue;
        std::vector<Elem> gens = A;
        gens.push_back(c);
        auto J = closure(G, gens);
        if (all.insert(J).second) next.push_back(std::move(J));
      }
    }
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

// ---------------------------------------------------------------- homomorphisms

bool GroupHom::check(size_t samples, u64 seed) const {
  if (image[source->identity()] != target->identity()) return false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> pick(0, source->order() - 1);
  for (size_t i = 0; i < samples; ++i) {
    auto a = static_cast<Elem>(pick(rng)), b = static_cast<Elem>(pick(rng));
    if (image[source->multiply(a, b)] != target->multiply(image[a], image[b])) return false;
  }
  return true;
}

std::vector<Elem> GroupHom::kernel() const {
  std::vector<Elem> k;
  for (Elem a = 0; a < source->order(); ++a)
    if (image[a] == target->identity()) k.push_back(a);
  return k;
}

// ---------------------------------------------------------------- W_2g

WeylGroup weyl_group(int g) {
  if (g < 1 || g > 3) throw DomainError("weyl_group: g must lie in [1, 3]");
  const int n = 2 * g;
  std::vector<Perm> gens;
  Perm swap0 = identity_perm(n);
  std::swap(swap0[0], swap0[1]);
  gens.push_back(swap0);
  if (g >= 2) {
    Perm pair_swap = identity_perm(n);
    std::swap(pair_swap[0], pair_swap[2]);
    std::swap(pair_swap[1], pair_swap[3]);
    gens.push_back(pair_swap);
  }
  if (g >= 3) {
    Perm pair_cycle(n);
    for (int i = 0; i < n; ++i) pair_cycle[i] = static_cast<std::uint8_t>((i + 2) % n);
    gens.push_back(pair_cycle);
  }
  auto W = std::make_shared<PermutationGroup>("W" + std::to_string(n), n, gens);

  auto project = [g](const Perm& p) {
    Perm q(g);
    for (int i = 0; i < g; ++i) q[i] = static_cast<std::uint8_t>(p[2 * i] / 2);
    return q;
  };
  std::vector<Perm> sgens;
  for (const auto& p : gens) sgens.push_back(project(p));
  auto S = std::make_shared<PermutationGroup>("S" + std::to_string(g), g, sgens);

  GroupHom phi{W, S, {}};
  phi.image.resize(W->order());
  for (Elem a = 0; a < W->order(); ++a) phi.image[a] = S->index_of(project(W->perm(a)));
  return WeylGroup{g, W, S, std::move(phi)};
}

bool w_group_criterion(const WeylGroup& wg, const std::vector<Elem>& H_gens) {
  auto H = closure(*wg.W, H_gens);
  bool has_transposition = false;
  std::set<Elem> image;
  for (Elem h : H) {
    const Perm& p = wg.W->perm(h);
    int moved = 0;
    for (size_t i = 0; i < p.size(); ++i) moved += p[i] != i;
    if (moved == 2) has_transposition = true;
    image.insert(wg.phi(h));
  }
  const bool criterion = has_transposition && image.size() == wg.S_g->order();
  if (criterion && H.size() != wg.W->order())
    throw InvariantViolation("w_group_criterion: criterion holds for a proper subgroup");
  return criterion;
}

}  // namespace galsieve

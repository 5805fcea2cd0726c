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

#ifndef GALSIEVE_GROUP_HPP_
#define GALSIEVE_GROUP_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "galsieve/modarith.hpp"

namespace galsieve {

using Elem = std::uint32_t;

struct ClassPartition {
  // classes[0] is always the identity class; the rest are ordered by their
  // smallest element index unless a backend documents otherwise.
  std::vector<std::vector<Elem>> classes;
  std::vector<std::uint32_t> class_of;

  size_t count() const { return classes.size(); }
  size_t size(size_t c) const { return classes[c].size(); }
  Elem representative(size_t c) const { return classes[c].front(); }
};

// A finite group whose elements are the indices 0..order()-1.
class FiniteGroup {
 public:
  virtual ~FiniteGroup() = default;

  virtual u64 order() const = 0;
  virtual Elem multiply(Elem a, Elem b) const = 0;
  virtual Elem inverse(Elem a) const = 0;
  virtual Elem identity() const = 0;
  // A generating set; conjugacy orbits are computed under these.
  virtual std::vector<Elem> generators() const = 0;
  virtual std::string name() const = 0;

  Elem conjugate(Elem g, Elem x) const { return multiply(multiply(g, x), inverse(g)); }
  Elem power(Elem x, u64 e) const;
  u64 element_order(Elem x) const;

  // Computed once, then shared read-only.
  const ClassPartition& classes() const;
  size_t class_count() const { return classes().count(); }

 protected:
  virtual ClassPartition compute_classes() const;

 private:
  mutable std::once_flag classes_once_;
  mutable std::unique_ptr<ClassPartition> classes_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Explicit multiplication table.
class CayleyGroup : public FiniteGroup {
 public:
  CayleyGroup(std::string name, std::vector<std::vector<Elem>> table, std::vector<Elem> generators);

  u64 order() const override { return table_.size(); }
  Elem multiply(Elem a, Elem b) const override { return table_[a][b]; }
  Elem inverse(Elem a) const override { return inverse_[a]; }
  Elem identity() const override { return identity_; }
  std::vector<Elem> generators() const override { return gens_; }
  std::string name() const override { return name_; }

 private:
  std::string name_;
  std::vector<std::vector<Elem>> table_;
  std::vector<Elem> inverse_;
  std::vector<Elem> gens_;
  Elem identity_ = 0;
};

using Perm = std::vector<std::uint8_t>;

// Group generated by permutations of {0,..,n-1}; elements sorted, so the
// identity permutation is element 0.
class PermutationGroup : public FiniteGroup {
 public:
  PermutationGroup(std::string name, int degree, const std::vector<Perm>& generators);

  u64 order() const override { return elems_.size(); }
  Elem multiply(Elem a, Elem b) const override;  // (ab)(i) = a(b(i))
  Elem inverse(Elem a) const override;
  Elem identity() const override { return 0; }
  std::vector<Elem> generators() const override { return gens_; }
  std::string name() const override { return name_; }

  int degree() const { return degree_; }
  const Perm& perm(Elem a) const { return elems_[a]; }
  Elem index_of(const Perm& p) const;
  bool contains(const Perm& p) const;

 private:
  std::string name_;
  int degree_;
  std::vector<Perm> elems_;
  std::vector<Elem> gens_;
  std::vector<Elem> mult_;  // full table when order is small
};

// Direct product with mixed-radix element and class indices.
class ProductGroup : public FiniteGroup {
 public:
  explicit ProductGroup(std::vector<GroupPtr> factors);

  u64 order() const override { return order_; }
  Elem multiply(Elem a, Elem b) const override;
  Elem inverse(Elem a) const override;
  Elem identity() const override;
  std::vector<Elem> generators() const override;
  std::string name() const override;

  const std::vector<GroupPtr>& factors() const { return factors_; }
  std::vector<Elem> split(Elem a) const;
  Elem join(const std::vector<Elem>& parts) const;
  // Product class index of component class indices (mixed radix).
  size_t class_index(const std::vector<size_t>& component_classes) const;
  std::vector<size_t> split_class(size_t c) const;

 protected:
  ClassPartition compute_classes() const override;

 private:
  std::vector<GroupPtr> factors_;
  std::vector<u64> strides_;
  u64 order_ = 1;
};

// A subgroup presented as a group of its own (elements re-indexed).
class SubgroupView : public FiniteGroup {
 public:
  SubgroupView(GroupPtr parent, std::vector<Elem> elements, std::vector<Elem> parent_generators);

  u64 order() const override { return elems_.size(); }
  Elem multiply(Elem a, Elem b) const override;
  Elem inverse(Elem a) const override;
  Elem identity() const override;
  std::vector<Elem> generators() const override;
  std::string name() const override { return "subgroup of " + parent_->name(); }

  Elem parent_element(Elem a) const { return elems_[a]; }
  Elem local_index(Elem parent_elem) const;

 private:
  GroupPtr parent_;
  std::vector<Elem> elems_;  // sorted parent indices
  std::vector<Elem> parent_gens_;
};

GroupPtr cyclic_group(u64 n);
GroupPtr symmetric_group(int n);
GroupPtr alternating_group(int n);
GroupPtr dihedral_group(int n);  // order 2n
GroupPtr quaternion_group();

// Capacity-checked direct product (order <= 2*10^5).
std::shared_ptr<const ProductGroup> direct_product(const std::vector<GroupPtr>& groups);

// Sorted element list of the subgroup generated by gens.
std::vector<Elem> closure(const FiniteGroup& G, const std::vector<Elem>& gens);

bool is_normal(const FiniteGroup& G, const std::vector<Elem>& subgroup_elems);

// |(G/N)^#| from coset labels merged along conjugacy classes of G.
size_t quotient_class_count(const FiniteGroup& G, const std::vector<Elem>& normal_elems);

// |G^#| <= |(G/N)^#| |N^#|; throws DomainError when N is not normal.
bool gallagher_check(const GroupPtr& G, const std::vector<Elem>& normal_gens);

// A class of G disjoint from the subgroup generated by gens, or nullopt if
// the subgroup is all of G.
std::optional<size_t> jordan_missed_class(const FiniteGroup& G, const std::vector<Elem>& gens);

// Every subgroup of G as a sorted element list (|G| <= 100).
std::vector<std::vector<Elem>> subgroup_lattice(const FiniteGroup& G);

struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> image;

  Elem operator()(Elem a) const { return image[a]; }
  // Multiplicativity on `samples` seeded random pairs plus identity check.
  bool check(size_t samples, u64 seed) const;
  std::vector<Elem> kernel() const;
};

struct WeylGroup {
  int g;
  std::shared_ptr<const PermutationGroup> W;    // pair-preserving subgroup of S_2g
  std::shared_ptr<const PermutationGroup> S_g;  // permutations of the pairs
  GroupHom phi;
};

// Pairs are {0,1}, {2,3}, ..., {2g-2, 2g-1}.
WeylGroup weyl_group(int g);

// True iff H contains a transposition and phi(H) = S_g. Throws
// InvariantViolation if the criterion holds but H != W_2g.
bool w_group_criterion(const WeylGroup& W, const std::vector<Elem>& H_gens);

}  // namespace galsieve

#endif  // GALSIEVE_GROUP_HPP_

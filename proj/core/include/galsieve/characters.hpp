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

#ifndef GALSIEVE_CHARACTERS_HPP_
#define GALSIEVE_CHARACTERS_HPP_

#include <complex>
#include <memory>
#include <vector>

#include "galsieve/group.hpp"
#include "galsieve/matrix_group.hpp"

namespace galsieve {

using cd = std::complex<double>;

// Complex values indexed by the conjugacy classes of `group`.
struct ClassFunction {
  GroupPtr group;
  std::vector<cd> values;
};

// |G|^-1 sum_C |C| f(C) conj(g(C)); throws DomainError on a group mismatch.
cd inner_product(const ClassFunction& f, const ClassFunction& g);

struct CharacterTable {
  GroupPtr group;
  std::vector<std::vector<cd>> rows;  // rows[chi][class]; rows[0] is trivial
  std::vector<long> degrees;

  size_t size() const { return rows.size(); }
  ClassFunction row(size_t i) const { return {group, rows[i]}; }
  // max |<chi_i, chi_j> - delta_ij|
  double row_orthogonality_residual() const;
  // max |sum_chi chi(C_k) conj(chi(C_l)) |C_k|/|G| - delta_kl|
  double column_orthogonality_residual() const;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

// Burnside-Dixon: eigenvectors of a seeded random combination of the class
// multiplication matrices. Requires at most 60 classes.
CharacterTable char_table_generic(const GroupPtr& G, u64 seed = 0);

// The classical table of GL2(F_q), q an odd prime, with columns aligned to
// the class partition of G = gl2(q).
CharacterTable char_table_gl2(const MatrixGroupPtr& G);

// External products chi_1 ... chi_k on the product group, rows in mixed
// radix order of the factor rows.
CharacterTable product_irreducibles(const std::shared_ptr<const ProductGroup>& P,
                                    const std::vector<TablePtr>& tables);

// Rows of the product table whose every factor is nontrivial. With no
// factors this is the trivial character of the trivial group.
std::vector<ClassFunction> primitive_characters(const std::shared_ptr<const ProductGroup>& P,
                                                const std::vector<TablePtr>& tables);

}  // namespace galsieve

#endif  // GALSIEVE_CHARACTERS_HPP_

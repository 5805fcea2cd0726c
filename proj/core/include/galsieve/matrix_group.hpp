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

#ifndef GALSIEVE_MATRIX_GROUP_HPP_
#define GALSIEVE_MATRIX_GROUP_HPP_

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "galsieve/group.hpp"
#include "galsieve/polynomial.hpp"

namespace galsieve {

// Square matrix of size 2 or 4 over F_p, p < 16, row major.
struct SmallMatrix {
  int n = 2;
  u64 p = 2;
  std::array<std::uint8_t, 16> a{};

  std::uint8_t& at(int i, int j) { return a[i * n + j]; }
  std::uint8_t at(int i, int j) const { return a[i * n + j]; }

  static SmallMatrix identity(int n, u64 p);
  static SmallMatrix from_rows(u64 p, const std::vector<std::vector<i64>>& rows);

  u64 pack() const;
  static SmallMatrix unpack(u64 key, int n, u64 p);

  u64 trace() const;
  u64 det() const;
  // det(T I - A) as a monic polynomial over F_p.
  ModPolynomial charpoly() const;

  bool operator==(const SmallMatrix& o) const { return n == o.n && p == o.p && a == o.a; }
};

SmallMatrix operator*(const SmallMatrix& x, const SmallMatrix& y);
SmallMatrix mat_pow(SmallMatrix x, u64 e);

// Standard alternating form with <e1,e3> = <e2,e4> = 1.
i64 symplectic_form(const SmallMatrix& A, int col_i, int col_j);
// The multiplier m(A) if <Av,Aw> = m <v,w> on all basis pairs, else 0.
u64 similitude_multiplier(const SmallMatrix& A);

// Matrix group with elements stored as sorted packed keys.
class MatrixGroup : public FiniteGroup {
 public:
  MatrixGroup(std::string name, int n, u64 p, std::vector<u64> sorted_keys, std::vector<SmallMatrix> generators);

  u64 order() const override { return keys_.size(); }
  Elem multiply(Elem a, Elem b) const override;
  Elem inverse(Elem a) const override { return inverse_[a]; }
  Elem identity() const override { return identity_; }
  std::vector<Elem> generators() const override { return gens_; }
  std::string name() const override { return name_; }

  int dimension() const { return n_; }
  u64 field_size() const { return p_; }
  SmallMatrix matrix(Elem a) const { return SmallMatrix::unpack(keys_[a], n_, p_); }
  Elem index_of(const SmallMatrix& m) const;

 private:
  std::string name_;
  int n_;
  u64 p_;
  std::vector<u64> keys_;
  std::vector<Elem> gens_;
  std::vector<Elem> inverse_;
  Elem identity_ = 0;
};

using MatrixGroupPtr = std::shared_ptr<const MatrixGroup>;

u64 gl2_order(u64 q);
u64 sl2_order(u64 q);
mpz_class sp_order(int g, u64 q);
mpz_class gsp_order(int g, u64 q);

// Throws DomainError for non-prime q and CapacityError beyond the
// enumerable range (gl2/sl2: q <= 13; sp4/gsp4: q <= 3).
MatrixGroupPtr gl2(u64 q);
MatrixGroupPtr sl2(u64 q);
MatrixGroupPtr sp4(u64 q);
MatrixGroupPtr gsp4(u64 q);

// Random-walk sampler for GSp4(F_q), q in {5, 7}: each sample multiplies
// `steps` uniformly chosen generators (transvections and a similitude of
// primitive-root multiplier).
class SampledGSp4 {
 public:
  explicit SampledGSp4(u64 q, int steps = 40);

  u64 field_size() const { return q_; }
  mpz_class order() const { return gsp_order(2, q_); }
  int steps() const { return steps_; }
  SmallMatrix sample(std::mt19937_64& rng) const;
  const std::vector<SmallMatrix>& generators() const { return gens_; }
  // Always throws UnsupportedOperation.
  [[noreturn]] void conjugacy_classes() const;

 private:
  u64 q_;
  int steps_;
  std::vector<SmallMatrix> gens_;
};

// Closed forms for GL2(F_q), q prime.
u64 count_trace(u64 q, u64 t);
u64 count_trace_det(u64 q, u64 t, u64 d);

}  // namespace galsieve

#endif  // GALSIEVE_MATRIX_GROUP_HPP_

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

#ifndef GALSIEVE_CURVES_HPP_
#define GALSIEVE_CURVES_HPP_

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "galsieve/polynomial.hpp"

namespace galsieve {

// y^2 = x^3 + a x + b over Q.
class EllipticCurveQ {
 public:
  EllipticCurveQ(i64 a, i64 b);

  i64 a() const { return a_; }
  i64 b() const { return b_; }
  const mpz_class& discriminant() const { return disc_; }  // -16(4a^3 + 27b^2)
  const std::vector<u64>& bad_primes() const { return bad_; }
  bool is_good(u64 p) const;  // odd and not dividing the discriminant

 private:
  i64 a_, b_;
  mpz_class disc_;
  std::vector<u64> bad_;
};

// a_p = p + 1 - #E(F_p). Dispatches to the character sum for small p and
// to baby-step giant-step point orders above.
i64 ap(const EllipticCurveQ& E, u64 p);
i64 ap_character_sum(const EllipticCurveQ& E, u64 p);
i64 ap_bsgs(const EllipticCurveQ& E, u64 p);
u64 group_order(const EllipticCurveQ& E, u64 p);

// y^2 = f(x) with deg f in {5, 6}.
class Genus2CurveQ {
 public:
  explicit Genus2CurveQ(IntPolynomial f);

  const IntPolynomial& f() const { return f_; }
  const mpz_class& discriminant() const { return disc_; }
  const std::vector<u64>& bad_primes() const { return bad_; }
  bool is_good(u64 p) const;

 private:
  IntPolynomial f_;
  mpz_class disc_;
  std::vector<u64> bad_;
};

struct PointCounts {
  u64 n1;  // #C(F_p)
  u64 n2;  // #C(F_{p^2})
};

// Smooth-model point counts. Uses N1 by a Legendre table and s2 from the
// Cartier-Manin matrix, disambiguated on the Jacobian.
PointCounts count_points_g2(const Genus2CurveQ& C, u64 p);
// Direct O(p^2) count over F_{p^2} via norms.
PointCounts count_points_g2_direct(const Genus2CurveQ& C, u64 p);

struct WeilPolynomial {
  IntPolynomial P;  // degree 2g, monic
  mpz_class q;
  int genus() const { return P.degree() / 2; }
  // coeff_i = q^(g-i) coeff_(2g-i) for all i.
  bool satisfies_functional_equation() const;
};

WeilPolynomial frobenius_poly_g1(i64 a_p, u64 p);
// T^4 - s1 T^3 + s2 T^2 - p s1 T + p^2; throws DataCorruptionError on a
// parity failure in s2.
WeilPolynomial frobenius_poly_g2(const PointCounts& counts, u64 p);

// Hasse and Weil bounds.
bool hasse_ok(i64 a_p, u64 p);
bool weil_ok(const PointCounts& counts, u64 p);

}  // namespace galsieve

#endif  // GALSIEVE_CURVES_HPP_

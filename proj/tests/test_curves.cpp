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

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "galsieve/curves.hpp"
#include "galsieve/error.hpp"
#include "galsieve/numbers.hpp"
#include "oracles.hpp"

using namespace galsieve;

namespace {

// |roots| of a real monic polynomial via the companion matrix (test-side).
std::vector<double> root_abs(const IntPolynomial& P) {
  const int n = P.degree();
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) C(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) C(i, n - 1) = -P.coeff(i).get_d();
  std::vector<double> out;
  const Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
  for (const auto& z : es.eigenvalues()) out.push_back(std::abs(z));
  return out;
}

const std::vector<std::pair<i64, i64>> kFixtures = {{1, 1}, {-7, 6}, {1, 0}};

}  // namespace

TEST_CASE("elliptic curve basics") {
  const EllipticCurveQ E(1, 1);
  CHECK(E.discriminant() == -496);
  CHECK(E.bad_primes() == std::vector<u64>{2, 31});
  CHECK_FALSE(E.is_good(2));
  CHECK_FALSE(E.is_good(31));
  CHECK(E.is_good(5));
  CHECK(ap(E, 5) == -3);
  CHECK(group_order(E, 5) == 9);
  CHECK_THROWS_AS(ap(E, 31), DomainError);
  CHECK_THROWS_AS(group_order(E, 2), DomainError);
  CHECK_THROWS_AS(EllipticCurveQ(0, 0), DomainError);
  CHECK_THROWS_AS(EllipticCurveQ(-3, 2), DomainError);  // (x-1)^2 (x+2)
}

TEST_CASE("a_p by character sum equals point enumeration") {
  for (auto [a, b] : kFixtures) {
    const EllipticCurveQ E(a, b);
    for (u64 p : oracle::eratosthenes(1000)) {
      if (!E.is_good(p)) continue;
      const i64 want = static_cast<i64>(p + 1) - static_cast<i64>(oracle::count_points_naive(a, b, p));
      REQUIRE(ap_character_sum(E, p) == want);
      REQUIRE(ap(E, p) == want);
      REQUIRE(group_order(E, p) == oracle::count_points_naive(a, b, p));
    }
  }
}

TEST_CASE("BSGS a_p equals character sum") {
  for (auto [a, b] : kFixtures) {
    const EllipticCurveQ E(a, b);
    int n = 0;
    for (u64 p : primes_up_to(30000)) {
      if (p < 1000 || !E.is_good(p) || (n++ % 7)) continue;
      REQUIRE(ap_bsgs(E, p) == ap_character_sum(E, p));
    }
  }
}

TEST_CASE("CM curve has a_p = 0 at p = 3 mod 4") {
  const EllipticCurveQ E(1, 0);
  for (u64 p : {7ull, 11ull, 19ull}) CHECK(oracle::count_points_naive(1, 0, p) == p + 1);
  for (u64 p : primes_up_to(50000))
    if (E.is_good(p) && p % 4 == 3) REQUIRE(ap(E, p) == 0);
}

TEST_CASE("Hasse bound and group order interval") {
  const EllipticCurveQ E(1, 1);
  for (u64 p : primes_up_to(200000)) {
    if (!E.is_good(p)) continue;
    const i64 a = ap(E, p);
    REQUIRE(hasse_ok(a, p));
    REQUIRE(a * a <= 4 * static_cast<i64>(p));
    REQUIRE(group_order(E, p) == static_cast<u64>(static_cast<i64>(p) + 1 - a));
  }
  CHECK_FALSE(hasse_ok(5, 5));
  CHECK(hasse_ok(4, 5));
}

TEST_CASE("genus 2 curve basics") {
  const Genus2CurveQ C(IntPolynomial{1, -1, 0, 0, 0, 1});
  CHECK(C.discriminant() == 2869);
  CHECK(C.bad_primes() == std::vector<u64>{2, 19, 151});
  CHECK(C.is_good(3));
  CHECK_THROWS_AS(count_points_g2(C, 19), DomainError);
  CHECK_THROWS_AS(Genus2CurveQ(IntPolynomial{0, 0, 0, 0, 1}), DomainError);           // degree 4
  CHECK_THROWS_AS(Genus2CurveQ(IntPolynomial{0, 0, 1, 0, 0, 1}), DomainError);        // x^2 (x^3 + 1)
}

TEST_CASE("genus 2 counts against naive enumeration") {
  const std::vector<std::vector<i64>> curves = {
      {1, -1, 0, 0, 0, 1},     // x^5 - x + 1
      {1, 1, 0, 0, 0, 0, 1},   // x^6 + x + 1
      {-1, 0, 2, 0, 0, 0, 3},  // 3x^6 + 2x^2 - 1
      {2, 3, -1, 0, 1, 5},     // 5x^5 + x^4 - x^2 + 3x + 2
  };
  for (const auto& f : curves) {
    std::vector<mpz_class> c;
    for (i64 v : f) c.emplace_back(static_cast<long>(v));
    const Genus2CurveQ C{IntPolynomial(c)};
    for (u64 p : oracle::eratosthenes(200)) {
      if (!C.is_good(p)) continue;
      const auto got = count_points_g2(C, p);
      REQUIRE(got.n1 == oracle::count_g2_naive(f, p));
      REQUIRE(got.n2 == oracle::count_g2_naive_p2(f, p));
      const auto direct = count_points_g2_direct(C, p);
      REQUIRE(direct.n1 == got.n1);
      REQUIRE(direct.n2 == got.n2);
      REQUIRE(weil_ok(got, p));
    }
  }
}

TEST_CASE("fast genus 2 counts equal the direct count at larger p") {
  const Genus2CurveQ C(IntPolynomial{1, -1, 0, 0, 0, 1});
  int n = 0;
  for (u64 p : primes_up_to(1200)) {
    if (p < 200 || !C.is_good(p) || (n++ % 6)) continue;
    const auto a = count_points_g2(C, p), b = count_points_g2_direct(C, p);
    REQUIRE(a.n1 == b.n1);
    REQUIRE(a.n2 == b.n2);
  }
}

TEST_CASE("Weil polynomials") {
  const auto P1 = frobenius_poly_g1(-3, 5);
  CHECK(P1.P == IntPolynomial{5, 3, 1});
  CHECK(P1.satisfies_functional_equation());
  // s1 = 0, N2 = p^2 + 1 -> P = T^4 + p^2
  const u64 p = 7;
  const auto P0 = frobenius_poly_g2({p + 1, p * p + 1}, p);
  CHECK(P0.P == IntPolynomial{49, 0, 0, 0, 1});
  // parity failure
  CHECK_THROWS_AS(frobenius_poly_g2({p + 1, p * p + 2}, p), DataCorruptionError);

  const Genus2CurveQ C(IntPolynomial{1, -1, 0, 0, 0, 1});
  for (u64 q : primes_up_to(2000)) {
    if (!C.is_good(q)) continue;
    const auto counts = count_points_g2(C, q);
    const auto W = frobenius_poly_g2(counts, q);
    REQUIRE(W.genus() == 2);
    REQUIRE(W.satisfies_functional_equation());
    for (int i = 0; i <= 4; ++i) {
      mpz_class qp;
      mpz_pow_ui(qp.get_mpz_t(), mpz_class(static_cast<unsigned long>(q)).get_mpz_t(), i <= 2 ? 2 - i : 0);
      if (i <= 2) REQUIRE(W.P.coeff(i) == qp * W.P.coeff(4 - i));
    }
    for (double r : root_abs(W.P)) REQUIRE(std::abs(r - std::sqrt(static_cast<double>(q))) < 1e-6 * std::sqrt(q));
    // round trip: N1 = q + 1 - s1 with s1 = -coeff_3
    REQUIRE(static_cast<i64>(q + 1) + W.P.coeff(3).get_si() == static_cast<i64>(counts.n1));
  }
}

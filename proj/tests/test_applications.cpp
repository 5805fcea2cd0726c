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

#include <cmath>
#include <set>

#include "galsieve/applications.hpp"
#include "galsieve/error.hpp"
#include "galsieve/numbers.hpp"
#include "galsieve/polynomial.hpp"
#include "oracles.hpp"

using namespace galsieve;

namespace {

mpq_class ratio(u64 n, u64 d) {
  mpq_class v(static_cast<unsigned long>(n), static_cast<unsigned long>(d));
  v.canonicalize();
  return v;
}

const CurveDescriptor kE = CurveDescriptor::elliptic(1, 1);
const CurveDescriptor kCM = CurveDescriptor::elliptic(1, 0);
const CurveDescriptor kC = CurveDescriptor::genus2({1, -1, 0, 0, 0, 1});

const TraceTable& table_e() {
  static const TraceTable t = build_trace_table(kE, 100000);
  return t;
}
const TraceTable& table_cm() {
  static const TraceTable t = build_trace_table(kCM, 100000);
  return t;
}

// Test-side closed form for the Koblitz factor.
mpq_class factor_formula(u64 l) {
  const mpz_class L(static_cast<unsigned long>(l));
  mpq_class v = mpq_class(1, L) + mpq_class(2 * L * L - L - 3, L * L * L * L - 2 * L * L * L - L * L + 3 * L);
  v.canonicalize();
  return v;
}

u64 count_koblitz_set(u64 l) {
  u64 n = 0;
  for (const auto& A : oracle::gl2_elements(l)) {
    const u64 a = (l + 1 - A[0]) % l, d = (l + 1 - A[3]) % l;
    if ((a * d + l * l - A[1] * A[2] % l) % l) ++n;
  }
  return n;
}

mpq_class measure_of(const Gl2Data& d, const std::vector<bool>& set) {
  u64 hit = 0;
  const auto& cls = d.group->classes().classes;
  for (size_t i = 0; i < cls.size(); ++i)
    if (set[i]) hit += cls[i].size();
  return ratio(hit, d.group->order());
}

std::string part_str(const std::vector<int>& parts) {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

// Monic integer quartic/quadratic irreducible over Q, by exhaustive factor search.
bool irreducible_over_q(const IntPolynomial& P) {
  std::vector<long> c;
  for (int i = 0; i <= P.degree(); ++i) c.push_back(P.coeff(i).get_si());
  auto divisors = [](long n) {
    std::vector<long> out;
    for (long d = 1; d <= std::labs(n); ++d)
      if (n % d == 0) {
        out.push_back(d);
        out.push_back(-d);
      }
    return out;
  };
  auto value = [&](long x) {
    long v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
  };
  for (long r : divisors(c[0]))
    if (value(r) == 0) return false;
  if (c.size() == 3) return true;
  // (T^2 + aT + b)(T^2 + eT + d), b d = c0
  for (long b : divisors(c[0])) {
    const long d = c[0] / b;
    for (long a = -200; a <= 200; ++a) {
      const long e = c[3] - a;
      if (a * e + b + d == c[2] && a * d + b * e == c[1]) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("Koblitz factor: closed form and enumeration") {
  CHECK(koblitz_factor(2) == 2);
  CHECK(koblitz_factor(3) == mpq_class(7, 9));
  CHECK(koblitz_factor(5) == mpq_class(23, 73));
  for (u64 l : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    const u64 n = count_koblitz_set(l);
    CHECK(n == l * l * l * l - 2 * l * l * l - l * l + 3 * l);
    const mpq_class mu = ratio(n, oracle::gl2_elements(l).size());
    mpq_class f = (1 - mu) / mu;
    CHECK(koblitz_factor(l) == f);
    CHECK(koblitz_factor(l) == factor_formula(l));
    CHECK(koblitz_factor_enumerated(l) == f);
    CHECK(measure_of(gl2_data(l), koblitz_admissible_set(l, 1)) == 1 / (1 + f));
  }
  CHECK(measure_of(gl2_data(5), koblitz_admissible_set(5, 1)) == mpq_class(73, 96));
  CHECK(1 - measure_of(gl2_data(3), koblitz_admissible_set(3, 1)) == mpq_class(7, 16));
  // ell | t: t (Z/ell)^x = {0}, so the set is det(I - A) = 0
  CHECK(measure_of(gl2_data(3), koblitz_admissible_set(3, 3)) == mpq_class(7, 16));
  CHECK_THROWS_AS(koblitz_admissible_set(17, 1), CapacityError);
}

TEST_CASE("Koblitz count against a recount") {
  const auto t = build_trace_table(kE, 1000);
  u64 want = 0;
  for (const auto& r : t.records())
    if (oracle::trial_prime(r.p + 1 - r.ap)) ++want;
  CHECK(koblitz_count(t, 1000).count == want);
  CHECK(koblitz_count(t, 1000, 1).skipped == 0);
  // t = 2: (p + 1 - a_p)/2 prime where the order is even
  u64 want2 = 0, skipped = 0;
  for (const auto& r : t.records()) {
    const u64 n = r.p + 1 - r.ap;
    if (n % 2) ++skipped;
    else if (oracle::trial_prime(n / 2)) ++want2;
  }
  const auto k2 = koblitz_count(t, 1000, 2);
  CHECK(k2.count == want2);
  CHECK(k2.skipped == skipped);
  CHECK(koblitz_count(t, 2).count == 0);
}

TEST_CASE("Koblitz L(Q)") {
  CHECK(koblitz_L_subsets(1) == 1);
  CHECK(koblitz_L_coefficients(1) == 1);
  // subsets {}, {2}, {3}, {5}, {7}, {2,3}, {2,5}
  mpq_class want = 1;
  for (u64 l : {2ull, 3ull, 5ull, 7ull}) want += factor_formula(l);
  want += factor_formula(2) * factor_formula(3) + factor_formula(2) * factor_formula(5);
  CHECK(want == mpq_class(341668, 52779));
  CHECK(koblitz_L_subsets(10) == want);
  CHECK(koblitz_L_coefficients(10) == want);

  // Oracle: squarefree n <= Q, product of the closed form.
  const auto coeffs = koblitz_coefficients(2000);
  mpq_class running = 0;
  for (u64 n = 1; n <= 2000; ++n) {
    mpq_class b = 0;
    if (oracle::mobius_trial(n) != 0) {
      b = 1;
      for (u64 l : oracle::distinct_prime_factors(n)) b *= factor_formula(l);
    }
    REQUIRE(coeffs[n] == b);
    running += b;
    if (n % 97 == 0 || n == 2000) {
      REQUIRE(koblitz_L_subsets(static_cast<double>(n)) == running);
      REQUIRE(koblitz_L_coefficients(static_cast<double>(n)) == running);
    }
  }
  CHECK(koblitz_L(2000) == doctest::Approx(running.get_d()).epsilon(1e-12));
  CHECK(koblitz_L_subsets(10000) == koblitz_L_coefficients(10000));

  const double r1 = koblitz_L(1e4) / std::log(1e4), r2 = koblitz_L(2e4) / std::log(2e4);
  CHECK(std::abs(r2 / r1 - 1) < 0.10);

  // a custom factor
  const PrimeFactor one = [](u64) { return mpq_class(1); };
  CHECK(koblitz_L_subsets(30, one) == 19);  // squarefree n <= 30
  CHECK(koblitz_L_coefficients(30, one) == 19);
}

TEST_CASE("generic Koblitz constant") {
  const auto c2 = generic_koblitz_constant(2);
  CHECK(c2.inverse == doctest::Approx(1.5));
  const auto a = generic_koblitz_constant(100000), b = generic_koblitz_constant(1000000);
  CHECK(b.tail_width < 1e-6);
  CHECK(std::abs(a.value - b.value) < a.tail_width);
  CHECK(b.value == doctest::Approx(1 / b.inverse));
  CHECK(b.value > 0);
}

TEST_CASE("Koblitz experiment rows") {
  const auto rows = koblitz_experiment(table_e(), {2, 1e4, 1e5});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].count == 0);
  CHECK(rows[1].count == koblitz_count(table_e(), 1e4).count);
  const double ratio = rows[2].count / rows[2].conjecture;
  CHECK(ratio >= 1.0 / 3);
  CHECK(ratio <= 3);
  CHECK(rows[2].ratio_conjecture == doctest::Approx(ratio));
  CHECK(rows[2].q_grh > 0);
  CHECK(rows[2].bound_grh > 0);
}

TEST_CASE("Lang-Trotter") {
  const auto& t = table_e();
  for (i64 tr : {-3, 0, 1, 2, 7}) {
    u64 want = 0;
    for (const auto& r : t.up_to(20000))
      if (r.ap == tr) ++want;
    CHECK(lang_trotter_count(t, 20000, tr) == want);
  }
  CHECK(lang_trotter_count(t, 100, 1000) == 0);

  for (u64 l : {3ull, 5ull, 7ull, 11ull}) {
    const auto G = oracle::gl2_elements(l);
    for (u64 tr = 0; tr < l; ++tr) {
      u64 n = 0;
      for (const auto& A : G)
        if ((A[0] + A[3]) % l == tr) ++n;
      CHECK(lt_trace_measure(l, static_cast<i64>(tr)) ==
            ratio(n, G.size()));
      if (tr != 0) {
        const long L = static_cast<long>(l);
        CHECK(lt_trace_measure(l, static_cast<i64>(tr)) == mpq_class(L * L - L - 1, (L - 1) * (L - 1) * (L + 1)));
      }
    }
    CHECK(lt_trace_measure(l, -1) == lt_trace_measure(l, static_cast<i64>(l) - 1));
  }

  // CM curve: a_p = 0 for every p = 3 mod 4
  const double half = static_cast<double>(lang_trotter_count(table_cm(), 1e5, 0)) / table_cm().up_to(1e5).size();
  CHECK(half >= 0.4);
  CHECK(half <= 0.6);
}

TEST_CASE("lt_L_lower") {
  CHECK(lt_L_lower(1) == 1);
  CHECK(lt_L_lower(10) == 14);
  for (double Q : {50.0, 300.0, 1000.0}) {
    u64 want = 0;
    for (u64 d = 1; d <= static_cast<u64>(Q); ++d) {
      if (oracle::mobius_trial(d) == 0) continue;
      u64 psi = 1;
      for (u64 l : oracle::distinct_prime_factors(d)) psi *= l + 1;
      if (psi <= Q) want += oracle::phi_count(d);
    }
    CHECK(lt_L_lower(Q) == want);
  }
  std::vector<double> r;
  for (double Q : {1e3, 1e4, 1e5}) r.push_back(lt_L_lower(Q) / (Q * Q));
  CHECK(*std::max_element(r.begin(), r.end()) / *std::min_element(r.begin(), r.end()) < 1.25);
  CHECK_THROWS_AS(lt_L_lower(2e6), CapacityError);
}

TEST_CASE("Lang-Trotter experiment and degree check") {
  const auto rows = lt_experiment(table_e(), 1, {1e4, 1e5});
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    CHECK(row.count == lang_trotter_count(table_e(), row.x, 1));
    CHECK(row.shape == doctest::Approx(std::pow(row.x, 0.8) / std::pow(std::log(row.x), 0.2)));
    CHECK(row.ratio == doctest::Approx(row.count / row.shape));
  }
  CHECK(lt_experiment(table_e(), 5000, {1e4})[0].count == 0);
  const auto dc = lt_degree_check({2, 3, 5, 7, 11, 13}, 200);
  CHECK(dc.ok);
  CHECK(dc.max_degree <= 200);
  CHECK(dc.degree_sum <= std::pow(200.0, 4));
  CHECK(dc.support_size > 1);
}

TEST_CASE("thin sets") {
  const auto& e = table_e();
  CHECK(thin_set_count({&e}, false_predicate(1), 1e5) == 0);
  CHECK(thin_set_count({&e, &e}, trace_equality_predicate(), 1e5) == e.up_to(1e5).size());

  const auto& cm = table_cm();
  u64 split = 0;
  for (const auto& r : cm.up_to(1e5))
    if (r.p % 4 == 1) ++split;
  CHECK(thin_set_count({&cm}, frobenius_field_predicate(-4), 1e5) == split);
  const double frac = static_cast<double>(split) / cm.up_to(1e5).size();
  CHECK(frac == doctest::Approx(0.5).epsilon(0.05));

  // a^2 - 4p = D c^2 directly
  const auto pred = frobenius_field_predicate(-3);
  u64 want = 0;
  for (const auto& r : e.up_to(5000)) {
    const i64 v = r.ap * r.ap - 4 * static_cast<i64>(r.p);
    if (v % -3 == 0 && is_perfect_square(v / -3)) ++want;
  }
  CHECK(thin_set_count({&e}, pred, 5000) == want);
}

TEST_CASE("Chavdarov test") {
  const auto cert = chavdarov_test(frobenius_poly_g1(1, 5));  // T^2 - T + 5
  CHECK(cert.certified);
  CHECK(cert.witnesses.at("P:(2)") == 3);
  // (T - 1)(T - q)
  for (u64 q : {3ull, 5ull, 7ull, 11ull}) {
    const long Q = static_cast<long>(q);
    CHECK_FALSE(chavdarov_test(WeilPolynomial{IntPolynomial{Q, -(Q + 1), 1}, mpz_class(Q)}).certified);
  }
  // product of two genus 1 factors
  const IntPolynomial prod = IntPolynomial{5, 1, 1} * IntPolynomial{5, -2, 1};
  CHECK_FALSE(chavdarov_test(WeilPolynomial{prod, 5}).certified);

  const auto t = build_trace_table(kC, 3000);
  u64 certified = 0;
  for (const auto& r : t.records()) {
    const auto W = t.frobenius(r);
    const auto c = chavdarov_test(W);
    if (!c.certified) continue;
    ++certified;
    REQUIRE(irreducible_over_q(W.P));
    for (const auto& [key, ell] : c.witnesses) {
      const auto& poly = key[0] == 'P' ? W.P : weil_q_poly(W.P, W.q);
      const auto ct = cycle_type_mod(poly, ell);
      REQUIRE(ct.has_value());
      REQUIRE(key.substr(2) == part_str(ct->parts));
    }
    REQUIRE(c.missing.empty());
  }
  CHECK(certified > t.size() / 2);
}

TEST_CASE("Chavdarov density") {
  const auto t = build_trace_table(kC, 5000);
  CHECK(chavdarov_density(t, {2}).rows.empty());
  const auto rep = chavdarov_density(t, {2, 2000, 5000});
  REQUIRE(rep.rows.size() == 2);
  for (size_t i = 0; i < 2; ++i) {
    const auto& row = rep.rows[i];
    CHECK(row.primes == t.up_to(row.x).size());
    CHECK(row.fraction == ratio(row.certified, row.primes));
  }
  u64 certified = 0;
  for (const auto& [p, ok] : rep.per_prime) {
    if (ok) {
      ++certified;
      REQUIRE(chavdarov_test(t.frobenius(*t.find(p))).certified);
    }
  }
  CHECK(certified == rep.rows[1].certified);
  CHECK(rep.rows[1].fraction >= mpq_class(3, 4));
  CHECK_THROWS(chavdarov_density(table_e(), {100}));
}

TEST_CASE("GSp4 bad sets") {
  const auto m = gsp_bad_measures(3, MeasureMode::kExact);
  CHECK(m.exact);
  CHECK(*m.sets.at("C1").exact == mpq_class(4, 5));
  CHECK(*m.sets.at("C2").exact == mpq_class(7, 8));
  CHECK(*m.sets.at("C3").exact == 1);
  CHECK(*m.sets.at("C(2)").exact == mpq_class(109, 160));
  CHECK(*m.sets.at("C(1,1)").exact == mpq_class(87, 128));
  REQUIRE(m.irreducible_witness.has_value());
  const auto& B = *m.irreducible_witness;
  CHECK(similitude_multiplier(B) != 0);
  CHECK(factor_mod(B.charpoly()).size() == 1);
  CHECK(factor_mod(B.charpoly())[0].factor.degree() == 4);

  const auto mc = gsp_bad_measures(5, MeasureMode::kMonteCarlo, 20000, 7);
  CHECK_FALSE(mc.exact);
  const auto& c1 = mc.sets.at("C1");
  CHECK(c1.total == 20000);
  CHECK(c1.lo <= c1.estimate);
  CHECK(c1.estimate <= c1.hi);
  CHECK(c1.estimate < 0.8);
  const auto again = gsp_bad_measures(5, MeasureMode::kMonteCarlo, 20000, 7);
  CHECK(again.sets.at("C1").hits == c1.hits);
  CHECK_THROWS_AS(gsp_bad_measures(5, MeasureMode::kExact), CapacityError);
}

TEST_CASE("empirical Chebotarev") {
  const u64 l = 5;
  const auto rep = chebotarev_empirical(table_e(), l, 20000);
  CHECK(rep.mu_sum == 1);
  CHECK(rep.fibers.size() == l * (l - 1));
  const auto G = oracle::gl2_elements(l);
  u64 observed = 0;
  std::set<std::pair<u64, u64>> seen;
  for (const auto& f : rep.fibers) {
    observed += f.observed;
    seen.insert({f.t, f.d});
    u64 n = 0;
    for (const auto& A : G)
      if ((A[0] + A[3]) % l == f.t && (A[0] * A[3] + l * l - A[1] * A[2]) % l == f.d) ++n;
    CHECK(f.mu == ratio(n, G.size()));
    u64 direct = 0;
    for (const auto& r : table_e().up_to(20000))
      if (r.p != l && ((r.ap % 5 + 5) % 5) == static_cast<i64>(f.t) && r.p % l == f.d) ++direct;
    CHECK(f.observed == direct);
  }
  CHECK(seen.size() == l * (l - 1));
  CHECK(observed == rep.counted);
  CHECK(rep.counted == table_e().up_to(20000).size() - 1);  // p = 5 excluded
}

TEST_CASE("surjectivity evidence") {
  CHECK(surjectivity_evidence(table_e(), 5, 1e5).surjective_looking);
  const auto cm = surjectivity_evidence(table_cm(), 5, 1e5);
  CHECK_FALSE(cm.surjective_looking);
  CHECK_FALSE(cm.misses.empty());
  const auto tiny = surjectivity_evidence(table_e(), 5, 10);
  CHECK_FALSE(tiny.surjective_looking);
  CHECK(tiny.misses.size() >= 20 - 3);
}

TEST_CASE("toy square-trace sieve") {
  for (u64 l : {3ull, 5ull, 7ull, 11ull, 13ull}) {
    u64 n = 0;
    const auto G = oracle::gl2_elements(l);
    std::set<u64> squares;
    for (u64 y = 0; y < l; ++y) squares.insert(y * y % l);
    for (const auto& A : G)
      if (squares.count((A[0] + A[3]) % l)) ++n;
    const mpq_class mu = ratio(n, G.size());
    CHECK(measure_of(gl2_data(l), square_trace_set(l)) == mu);
    const double e = mu.get_d() - 0.5;
    CHECK(std::abs(e) * l <= 3);
  }
  CHECK(is_perfect_square(0));
  CHECK(is_perfect_square(1));
  CHECK(is_perfect_square(144));
  CHECK_FALSE(is_perfect_square(-4));
  CHECK_FALSE(is_perfect_square(2));

  const std::vector<u64> ells{3, 5, 7};
  const auto rep = toy_square_trace(table_e(), 5000, ells, 15, true);
  u64 x_size = 0, squares = 0;
  for (const auto& r : table_e().up_to(5000)) {
    if (std::find(ells.begin(), ells.end(), r.p) != ells.end()) continue;
    ++x_size;
    const i64 s = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(std::max<i64>(r.ap, 0)))));
    if (r.ap >= 0 && s * s == r.ap) ++squares;
  }
  CHECK(rep.x_size == x_size);
  CHECK(rep.square_count == squares);
  REQUIRE(rep.sieve.survivor_count.has_value());
  CHECK(*rep.sieve.survivor_count >= squares);
  CHECK(rep.sieve.l_value * static_cast<double>(*rep.sieve.survivor_count) <= rep.sieve.delta_bound * (1 + 1e-9));
  CHECK(rep.sieve.l_value * static_cast<double>(rep.square_count) <= *rep.sieve.delta_exact * (1 + 1e-9));
}

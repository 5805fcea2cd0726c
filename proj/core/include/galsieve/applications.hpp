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

#ifndef GALSIEVE_APPLICATIONS_HPP_
#define GALSIEVE_APPLICATIONS_HPP_

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galsieve/characters.hpp"
#include "galsieve/sieve.hpp"
#include "galsieve/trace_cache.hpp"

namespace galsieve {

// GL2(F_ell) with its class partition and table, built once per ell and
// shared read-only.
struct Gl2Data {
  MatrixGroupPtr group;
  TablePtr table;
  // Class of rho(Frob_p) from (trace, det). A repeated eigenvalue maps to
  // the non-semisimple class.
  std::map<std::pair<u64, u64>, std::uint32_t> class_of_trace_det;
};
const Gl2Data& gl2_data(u64 ell);

// ---------------------------------------------------------------- Koblitz

mpq_class koblitz_factor(u64 ell);  // closed form
// Classes of A with det(I - A) in t (Z/ell)^x.
std::vector<bool> koblitz_admissible_set(u64 ell, u64 t = 1);
// (1 - mu) / mu with mu the enumerated measure of the admissible set.
mpq_class koblitz_factor_enumerated(u64 ell);

struct KoblitzCount {
  u64 count = 0;
  u64 skipped = 0;  // primes where t does not divide the group order
};
// Good p <= x with (p + 1 - a_p) / t prime.
KoblitzCount koblitz_count(const TraceTable& table, double x, u64 t = 1);

using PrimeFactor = std::function<mpq_class(u64)>;
// sum over squarefree D with prod D <= Q of prod factor(ell).
mpq_class koblitz_L_subsets(double Q, const PrimeFactor& factor = koblitz_factor);
// Partial sum sum_{n <= Q} b_n of prod_ell (1 + factor(ell) ell^-s).
mpq_class koblitz_L_coefficients(double Q, const PrimeFactor& factor = koblitz_factor);
// b[n] for 0 <= n <= N (b[0] = 0), for exact comparisons at every Q <= N.
std::vector<mpq_class> koblitz_coefficients(u64 N, const PrimeFactor& factor = koblitz_factor);
double koblitz_L(double Q);  // double precision, Q up to 1e7

struct EulerConstant {
  u64 cutoff = 0;
  double inverse = 0;     // prod_{ell <= cutoff}
  double inverse_hi = 0;  // times the tail bracket
  double value = 0;       // 1 / inverse
  double tail_width = 0;  // |value - 1 / inverse_hi|
};
EulerConstant generic_koblitz_constant(u64 cutoff);

// GL2 parameters (r, s) of the large sieve for Frobenius.
inline constexpr double kGl2R = 4, kGl2S = 2;

struct KoblitzRow {
  double x = 0;
  u64 count = 0;
  double conjecture = 0;  // C x / (log x)^2
  double q_unconditional = 0, bound_unconditional = 0;
  double q_grh = 0, bound_grh = 0;
  double ratio_conjecture = 0;
};
std::vector<KoblitzRow> koblitz_experiment(const TraceTable& table, const std::vector<double>& xs,
                                           double c_abs = 1.0, u64 euler_cutoff = 1000000);  // x < 3: zero row

// ---------------------------------------------------------------- Lang-Trotter

u64 lang_trotter_count(const TraceTable& table, double x, i64 t);
mpq_class lt_trace_measure(u64 ell, i64 t);  // count_trace / |GL2|
// sum of phi(d) over squarefree d with psi(d) <= Q.
u64 lt_L_lower(double Q);

struct LangTrotterRow {
  double x = 0;
  u64 count = 0;
  double shape = 0;  // x^(4/5) / (log x)^(1/5)
  double ratio = 0;
};
std::vector<LangTrotterRow> lt_experiment(const TraceTable& table, i64 t, const std::vector<double>& xs);

struct DegreeCheck {
  double Q = 0;
  u64 support_size = 0;
  double degree_sum = 0;   // sum_D sum_{chi prim} chi(1)
  double max_degree = 0;
  bool ok = false;         // degree_sum <= Q^4 and max_degree <= Q
};
// Support over ells with psi(D) = prod (ell + 1) <= Q.
DegreeCheck lt_degree_check(const std::vector<u64>& ells, double Q);

// ---------------------------------------------------------------- thin sets

struct ThinSetPredicate {
  std::string name;
  int arity = 1;
  std::function<bool(const std::vector<i64>& traces, u64 p)> decide;
};
// a^2 - 4p = D c^2 for some integer c.
ThinSetPredicate frobenius_field_predicate(i64 D);
// a_p(E_1) = a_p(E_2).
ThinSetPredicate trace_equality_predicate();
ThinSetPredicate false_predicate(int arity);

u64 thin_set_count(const std::vector<const TraceTable*>& tables, const ThinSetPredicate& pred, double x);

// ---------------------------------------------------------------- Chavdarov

struct ChavdarovCertificate {
  bool certified = false;
  std::map<std::string, u64> witnesses;  // "P:(4)", "P:(2,1,1)", "Q:(1,1)", ... -> ell
  std::vector<std::string> missing;
};
ChavdarovCertificate chavdarov_test(const WeilPolynomial& P, u64 ell_bound = 1000);

struct ChavdarovRow {
  double x = 0;
  u64 primes = 0;
  u64 certified = 0;
  mpq_class fraction;
  double heuristic_shape = 0;  // x^(1-1/52) (log x)^(2/26) / pi(x)
};
struct ChavdarovReport {
  std::vector<ChavdarovRow> rows;
  std::vector<std::pair<u64, bool>> per_prime;
};
// x values with no good primes produce no row.
ChavdarovReport chavdarov_density(const TraceTable& table, const std::vector<double>& xs,
                                  const std::optional<mpz_class>& s_override = std::nullopt,
                                  u64 ell_bound = 1000);

struct Measure {
  std::optional<mpq_class> exact;
  double estimate = 0, lo = 0, hi = 0;  // Wilson 95% interval when sampled
  u64 hits = 0, total = 0;
};
struct GspBadMeasures {
  u64 ell = 0;
  bool exact = false;
  std::map<std::string, Measure> sets;  // C1, C2, C3, C(2), C(1,1)
  std::optional<SmallMatrix> irreducible_witness;
};
enum class MeasureMode { kExact, kMonteCarlo };
GspBadMeasures gsp_bad_measures(u64 ell, MeasureMode mode, u64 samples = 100000, u64 seed = 0,
                                const std::optional<mpz_class>& s_override = std::nullopt);

// ---------------------------------------------------------------- Chebotarev

struct FiberRow {
  u64 t = 0, d = 0;
  u64 observed = 0;
  mpq_class mu;
  double expected = 0;
  double rel_dev = 0;
};
struct ChebotarevReport {
  u64 ell = 0;
  double x = 0;
  u64 counted = 0;
  std::vector<FiberRow> fibers;
  double max_rel_dev = 0;
  mpq_class mu_sum;
};
ChebotarevReport chebotarev_empirical(const TraceTable& table, u64 ell, double x);

struct SurjectivityEvidence {
  bool surjective_looking = false;
  std::vector<std::pair<u64, u64>> misses;  // fibers (t, d) with mu > 0 never hit
};
SurjectivityEvidence surjectivity_evidence(const TraceTable& table, u64 ell, double x);

// ---------------------------------------------------------------- toy sieve

// Classes of A whose trace is a square (0 included) in F_ell.
std::vector<bool> square_trace_set(u64 ell);

struct ToySieveReport {
  double x = 0, Q = 0;
  std::vector<u64> ells;
  u64 x_size = 0;
  u64 square_count = 0;  // p in X with a_p a perfect square, 0 included
  SieveReport sieve;
};
// X = good primes <= x outside the ells; Z = subsets with product <= Q.
ToySieveReport toy_square_trace(const TraceTable& table, double x, const std::vector<u64>& ells, double Q,
                                bool with_exact = false);

bool is_perfect_square(i64 a);

}  // namespace galsieve

#endif  // GALSIEVE_APPLICATIONS_HPP_

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

#include "galsieve/applications.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>

#include "galsieve/error.hpp"

namespace galsieve {

namespace {

std::string partition_string(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.parts.size(); ++i) s += (i ? "," : "") + std::to_string(p.parts[i]);
  return s + ")";
}

u64 mod_signed(i64 a, u64 m) { return reduce_signed(a, m); }

// Records with p <= x, throwing when the table stops short of x.
std::vector<TraceRecord> records_to(const TraceTable& table, double x) {
  if (!table.covers(x))
    throw DataGapError("trace table covers p <= " + std::to_string(table.max_prime()) + ", need " +
                       std::to_string(static_cast<u64>(x)));
  return table.up_to(x);
}

void require_genus(const TraceTable& table, int g) {
  if (table.curve().genus != g) throw DomainError("operation needs a genus " + std::to_string(g) + " trace table");
}

// Classes of GL2(F_ell) whose representative satisfies pred.
std::vector<bool> classes_where(u64 ell, const std::function<bool(const SmallMatrix&)>& pred) {
  const auto& G = *gl2_data(ell).group;
  const auto& cp = G.classes();
  std::vector<bool> out(cp.count());
  for (size_t c = 0; c < cp.count(); ++c) out[c] = pred(G.matrix(cp.representative(c)));
  return out;
}

double li_or_zero(double x) { return x >= 2 ? log_integral(x) : 0.0; }

}  // namespace

const Gl2Data& gl2_data(u64 ell) {
  static std::mutex mu;
  static std::map<u64, std::unique_ptr<Gl2Data>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[ell];
  if (!slot) {
    auto data = std::make_unique<Gl2Data>();
    data->group = gl2(ell);
    data->table = std::make_shared<const CharacterTable>(ell == 2 ? char_table_generic(data->group)
                                                                  : char_table_gl2(data->group));
    const auto& cp = data->group->classes();
    for (size_t c = 0; c < cp.count(); ++c) {
      const SmallMatrix A = data->group->matrix(cp.representative(c));
      const bool scalar = A.at(0, 1) == 0 && A.at(1, 0) == 0 && A.at(0, 0) == A.at(1, 1);
      auto key = std::make_pair(A.trace(), A.det());
      auto it = data->class_of_trace_det.find(key);
      if (it == data->class_of_trace_det.end() || !scalar) data->class_of_trace_det[key] = static_cast<std::uint32_t>(c);
    }
    slot = std::move(data);
  }
  return *slot;
}

// ---------------------------------------------------------------- Koblitz

mpq_class koblitz_factor(u64 ell) {
  if (ell < 2) throw DomainError("koblitz_factor: ell must be >= 2");
  const mpz_class l(static_cast<unsigned long>(ell));
  mpq_class r = mpq_class(1, 1) / mpq_class(l) +
                mpq_class(2 * l * l - l - 3) / mpq_class(l * l * l * l - 2 * l * l * l - l * l + 3 * l);
  r.canonicalize();
  return r;
}

std::vector<bool> koblitz_admissible_set(u64 ell, u64 t) {
  if (t == 0) throw DomainError("koblitz_admissible_set: t must be >= 1");
  return classes_where(ell, [&](const SmallMatrix& A) {
    const u64 v = submod(addmod(1, A.det(), ell), A.trace(), ell);  // det(I - A)
    return t % ell == 0 ? v == 0 : v != 0;
  });
}

mpq_class koblitz_factor_enumerated(u64 ell) {
  const mpq_class mu = class_measure(*gl2_data(ell).group, koblitz_admissible_set(ell, 1));
  mpq_class r = (1 - mu) / mu;
  r.canonicalize();
  return r;
}

KoblitzCount koblitz_count(const TraceTable& table, double x, u64 t) {
  require_genus(table, 1);
  if (t == 0) throw DomainError("koblitz_count: t must be >= 1");
  KoblitzCount out;
  for (const auto& r : records_to(table, x)) {
    const u64 n = static_cast<u64>(static_cast<i64>(r.p) + 1 - r.ap);
    if (n % t != 0) {
      ++out.skipped;
      continue;
    }
    if (is_prime(n / t)) ++out.count;
  }
  if (out.skipped) spdlog::warn("koblitz_count: t={} does not divide the group order at {} primes", t, out.skipped);
  return out;
}

mpq_class koblitz_L_subsets(double Q, const PrimeFactor& factor) {
  if (Q > 1e5) throw CapacityError("koblitz_L_subsets: Q must be <= 1e5");
  if (Q < 1) return 0;
  const auto primes = primes_up_to(Q);
  std::vector<mpq_class> f;
  for (u64 p : primes) f.push_back(factor(p));
  mpq_class L = 0;
  std::function<void(size_t, u64, const mpq_class&)> rec = [&](size_t start, u64 d, const mpq_class& term) {
    L += term;
    for (size_t k = start; k < primes.size() && static_cast<double>(d * primes[k]) <= Q; ++k)
      rec(k + 1, d * primes[k], term * f[k]);
  };
  rec(0, 1, mpq_class(1));
  return L;
}

std::vector<mpq_class> koblitz_coefficients(u64 N, const PrimeFactor& factor) {
  if (N > 10000000) throw CapacityError("koblitz_coefficients: N must be <= 1e7");
  std::vector<std::uint32_t> spf(N + 1, 0);
  for (u64 i = 2; i <= N; ++i)
    if (!spf[i])
      for (u64 j = i; j <= N; j += i)
        if (!spf[j]) spf[j] = static_cast<std::uint32_t>(i);
  std::vector<mpq_class> b(N + 1, mpq_class(0));
  std::map<u64, mpq_class> f;
  if (N >= 1) b[1] = 1;
  for (u64 n = 2; n <= N; ++n) {
    const u64 p = spf[n], m = n / p;
    if (m % p == 0) continue;
    auto it = f.find(p);
    if (it == f.end()) it = f.emplace(p, factor(p)).first;
    b[n] = b[m] * it->second;
  }
  return b;
}

mpq_class koblitz_L_coefficients(double Q, const PrimeFactor& factor) {
  if (Q < 1) return 0;
  const auto b = koblitz_coefficients(static_cast<u64>(std::floor(Q)), factor);
  mpq_class L = 0;
  for (size_t n = 1; n < b.size(); ++n) L += b[n];
  return L;
}

double koblitz_L(double Q) {
  if (Q < 1) return 0;
  if (Q > 1e7) throw CapacityError("koblitz_L: Q must be <= 1e7");
  const u64 N = static_cast<u64>(std::floor(Q));
  std::vector<std::uint32_t> spf(N + 1, 0);
  std::vector<double> b(N + 1, 0.0), f(N + 1, 0.0);
  double L = 1;
  if (N >= 1) b[1] = 1;
  for (u64 i = 2; i <= N; ++i) {
    if (!spf[i]) {
      f[i] = koblitz_factor(i).get_d();
      for (u64 j = i; j <= N; j += i)
        if (!spf[j]) spf[j] = static_cast<std::uint32_t>(i);
    }
    const u64 p = spf[i], m = i / p;
    if (m % p == 0) continue;
    b[i] = b[m] * f[p];
    L += b[i];
  }
  return L;
}

EulerConstant generic_koblitz_constant(u64 cutoff) {
  if (cutoff < 2) throw DomainError("generic_koblitz_constant: cutoff must be >= 2");
  if (cutoff > 100000000) throw CapacityError("generic_koblitz_constant: cutoff must be <= 1e8");
  auto e = [](u64 l) {
    const long double L = static_cast<long double>(l);
    const long double c = (2 * L * L - L - 3) / (L * L * L * L - 2 * L * L * L - L * L + 3 * L);
    return (1 + 1 / L + c) * (1 - 1 / L);
  };
  long double prod = 1;
  for (u64 l : primes_up_to(static_cast<double>(cutoff))) prod *= e(l);
  // Tail: 1 <= factor <= 1 + 3/ell^2 for ell >= 3. Explicit terms to 1000,
  // then sum_{p > X} 1/p^2 <= 2 * 1.25506 / (X log X) (Rosser-Schoenfeld).
  long double tail = 0;
  const u64 X = std::max<u64>(cutoff, 1000);
  for (u64 l : primes_up_to(static_cast<double>(X)))
    if (l > cutoff) tail += std::log(e(l));
  tail += 3.0L * 2 * 1.25506L / (static_cast<long double>(X) * std::log(static_cast<long double>(X)));
  EulerConstant out;
  out.cutoff = cutoff;
  out.inverse = static_cast<double>(prod);
  out.inverse_hi = static_cast<double>(prod * std::exp(tail));
  out.value = static_cast<double>(1 / prod);
  out.tail_width = static_cast<double>(1 / prod - 1 / (prod * std::exp(tail)));
  return out;
}

std::vector<KoblitzRow> koblitz_experiment(const TraceTable& table, const std::vector<double>& xs, double c_abs,
                                           u64 euler_cutoff) {
  const double C = generic_koblitz_constant(euler_cutoff).value;
  std::vector<KoblitzRow> rows;
  for (double x : xs) {
    KoblitzRow r;
    r.x = x;
    if (x < 3) {  // no good primes yet; the bound evaluators need x >= 3
      rows.push_back(r);
      continue;
    }
    r.count = koblitz_count(table, x, 1).count;
    const double lx = std::log(x);
    r.conjecture = C * x / (lx * lx);
    r.ratio_conjecture = r.conjecture > 0 ? r.count / r.conjecture : 0;
    r.q_unconditional = std::pow(lx / std::pow(std::log(lx), 2), 1.0 / 24);
    r.q_grh = std::pow(std::sqrt(x) / (lx * lx), 1.0 / (2 * kGl2R + kGl2S + 1));
    r.bound_unconditional = frobenius_bound_evaluator(x, r.q_unconditional, kGl2R, kGl2S,
                                                      koblitz_L(r.q_unconditional), Regime::kUnconditional, c_abs)
                                .value;
    r.bound_grh =
        frobenius_bound_evaluator(x, r.q_grh, kGl2R, kGl2S, koblitz_L(r.q_grh), Regime::kGRH, c_abs).value;
    rows.push_back(r);
  }
  return rows;
}

// ---------------------------------------------------------------- Lang-Trotter

u64 lang_trotter_count(const TraceTable& table, double x, i64 t) {
  require_genus(table, 1);
  u64 n = 0;
  for (const auto& r : records_to(table, x)) n += r.ap == t;
  return n;
}

mpq_class lt_trace_measure(u64 ell, i64 t) {
  mpq_class m(static_cast<unsigned long>(count_trace(ell, mod_signed(t, ell))),
              static_cast<unsigned long>(gl2_order(ell)));
  m.canonicalize();
  return m;
}

u64 lt_L_lower(double Q) {
  if (Q > 1e6) throw CapacityError("lt_L_lower: Q must be <= 1e6");
  if (Q < 1) return 0;
  const auto primes = primes_up_to(Q);
  u64 L = 0;
  std::function<void(size_t, u64, u64)> rec = [&](size_t start, u64 psi_d, u64 phi_d) {
    L += phi_d;
    for (size_t k = start; k < primes.size() && static_cast<double>(psi_d * (primes[k] + 1)) <= Q; ++k)
      rec(k + 1, psi_d * (primes[k] + 1), phi_d * (primes[k] - 1));
  };
  rec(0, 1, 1);
  return L;
}

std::vector<LangTrotterRow> lt_experiment(const TraceTable& table, i64 t, const std::vector<double>& xs) {
  std::vector<LangTrotterRow> rows;
  for (double x : xs) {
    LangTrotterRow r;
    r.x = x;
    r.count = lang_trotter_count(table, x, t);
    r.shape = std::pow(x, 0.8) / std::pow(std::log(x), 0.2);
    r.ratio = r.count / r.shape;
    rows.push_back(r);
  }
  return rows;
}

DegreeCheck lt_degree_check(const std::vector<u64>& ells, double Q) {
  std::vector<u64> weights;
  std::vector<double> deg_sum, deg_max;
  for (u64 l : ells) {
    weights.push_back(l + 1);
    const auto& degs = gl2_data(l).table->degrees;
    double s = 0, m = 0;
    for (size_t i = 1; i < degs.size(); ++i) {
      s += static_cast<double>(degs[i]);
      m = std::max(m, static_cast<double>(degs[i]));
    }
    deg_sum.push_back(s);
    deg_max.push_back(m);
  }
  DegreeCheck out;
  out.Q = Q;
  for (const auto& D : support_products(weights, Q)) {
    double s = 1, m = 1;
    for (size_t i : D) {
      s *= deg_sum[i];
      m *= deg_max[i];
    }
    out.degree_sum += s;
    out.max_degree = std::max(out.max_degree, m);
    ++out.support_size;
  }
  out.ok = out.degree_sum <= std::pow(Q, 4) && out.max_degree <= Q;
  return out;
}

// ---------------------------------------------------------------- thin sets

bool is_perfect_square(i64 a) {
  if (a < 0) return false;
  i64 r = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(a))));
  while (r * r > a) --r;
  while ((r + 1) * (r + 1) <= a) ++r;
  return r * r == a;
}

ThinSetPredicate frobenius_field_predicate(i64 D) {
  if (D == 0) throw DomainError("frobenius_field_predicate: D must be nonzero");
  return {"frobenius-field(" + std::to_string(D) + ")", 1, [D](const std::vector<i64>& a, u64 p) {
            const i64 v = a[0] * a[0] - 4 * static_cast<i64>(p);
            return v % D == 0 && v / D > 0 && is_perfect_square(v / D);
          }};
}

ThinSetPredicate trace_equality_predicate() {
  return {"trace-equality", 2, [](const std::vector<i64>& a, u64) { return a[0] == a[1]; }};
}

ThinSetPredicate false_predicate(int arity) {
  return {"false", arity, [](const std::vector<i64>&, u64) { return false; }};
}

u64 thin_set_count(const std::vector<const TraceTable*>& tables, const ThinSetPredicate& pred, double x) {
  if (static_cast<int>(tables.size()) != pred.arity)
    throw DomainError("thin_set_count: predicate arity does not match the curve count");
  if (tables.empty()) return 0;
  for (const auto* t : tables) require_genus(*t, 1);
  u64 n = 0;
  std::vector<i64> a(tables.size());
  for (const auto& r : records_to(*tables[0], x)) {
    bool common = true;
    for (size_t i = 0; i < tables.size() && common; ++i) {
      const TraceRecord* q = i == 0 ? &r : tables[i]->find(r.p);
      if (!q) {
        if (!tables[i]->covers(x)) records_to(*tables[i], x);  // throws the gap
        common = false;
      } else {
        a[i] = q->ap;
      }
    }
    if (common && pred.decide(a, r.p)) ++n;
  }
  return n;
}

// ---------------------------------------------------------------- Chavdarov

ChavdarovCertificate chavdarov_test(const WeilPolynomial& P, u64 ell_bound) {
  const int g = P.genus();
  if (g != 1 && g != 2) throw DomainError("chavdarov_test: genus must be 1 or 2");
  if (ell_bound > 1000) throw CapacityError("chavdarov_test: ell_bound must be <= 1000");
  if (!P.satisfies_functional_equation()) throw DomainError("chavdarov_test: not a Weil polynomial");
  const IntPolynomial Q = weil_q_poly(P.P, P.q);

  std::map<std::string, Partition> need;  // key -> cycle type, prefixed by the polynomial
  need["P:" + partition_string(make_partition({2 * g}))] = make_partition({2 * g});
  std::vector<int> transposition(2 * g - 1, 1);
  transposition[0] = 2;
  need["P:" + partition_string(make_partition(transposition))] = make_partition(transposition);
  std::map<std::string, Partition> need_q;
  for (const auto& s : partitions(g)) need_q["Q:" + partition_string(s)] = s;

  ChavdarovCertificate cert;
  // Odd ell only: the quadratic substitution behind Q is taken over odd
  // characteristic.
  for (u64 ell : primes_up_to(static_cast<double>(ell_bound))) {
    if (ell == 2 || mpz_divisible_ui_p(P.q.get_mpz_t(), ell)) continue;
    if (cert.witnesses.size() == need.size() + need_q.size()) break;
    if (auto ct = cycle_type_mod(P.P, ell)) {
      for (const auto& [key, part] : need)
        if (*ct == part && !cert.witnesses.count(key)) cert.witnesses[key] = ell;
    }
    if (auto ct = cycle_type_mod(Q, ell)) {
      for (const auto& [key, part] : need_q)
        if (*ct == part && !cert.witnesses.count(key)) cert.witnesses[key] = ell;
    }
  }
  for (const auto* m : {&need, &need_q})
    for (const auto& [key, part] : *m)
      if (!cert.witnesses.count(key)) cert.missing.push_back(key);
  cert.certified = cert.missing.empty();
  return cert;
}

ChavdarovReport chavdarov_density(const TraceTable& table, const std::vector<double>& xs,
                                  const std::optional<mpz_class>& s_override, u64 ell_bound) {
  require_genus(table, 2);
  ChavdarovReport rep;
  if (xs.empty()) return rep;
  const mpz_class s = stability_exponent(4, s_override);
  const double xmax = *std::max_element(xs.begin(), xs.end());
  for (const auto& r : records_to(table, xmax)) {
    const WeilPolynomial P = table.frobenius(r);
    const bool ok = chavdarov_test(P, ell_bound).certified && power_roots_separable(P.P, s);
    rep.per_prime.emplace_back(r.p, ok);
  }
  if (rep.per_prime.empty()) return rep;
  for (double x : xs) {
    ChavdarovRow row;
    row.x = x;
    for (const auto& [p, ok] : rep.per_prime) {
      if (static_cast<double>(p) > x) break;
      ++row.primes;
      row.certified += ok;
    }
    if (row.primes == 0) continue;
    row.fraction = mpq_class(static_cast<unsigned long>(row.certified), static_cast<unsigned long>(row.primes));
    row.fraction.canonicalize();
    row.heuristic_shape = std::pow(x, 1.0 - 1.0 / 52) * std::pow(std::log(x), 2.0 / 26);
    rep.rows.push_back(row);
  }
  return rep;
}

namespace {

SmallMatrix companion4(const ModPolynomial& P) {
  SmallMatrix C;
  C.n = 4;
  C.p = P.modulus();
  for (int i = 1; i < 4; ++i) C.at(i, i - 1) = 1;
  for (int i = 0; i < 4; ++i) C.at(i, 3) = static_cast<std::uint8_t>(submod(0, P.coeff(i), C.p));
  return C;
}

bool factors_as(const ModPolynomial& f, std::vector<int> degrees) {
  const auto fac = factor_mod(f);
  std::vector<int> got;
  for (const auto& x : fac) {
    if (x.multiplicity != 1) return false;
    got.push_back(x.factor.degree());
  }
  std::sort(got.begin(), got.end());
  std::sort(degrees.begin(), degrees.end());
  return got == degrees;
}

struct BadFlags {
  bool c1, c2, c3, s2, s11;
};

BadFlags classify(const SmallMatrix& B, u64 s) {
  const u64 ell = B.p;
  const ModPolynomial P = B.charpoly();
  const u64 m = similitude_multiplier(B);
  BadFlags f{};
  f.c1 = !factors_as(P, {4});
  f.c2 = !factors_as(P, {1, 1, 2});
  f.c3 = !is_separable_mod(mat_pow(companion4(P), s).charpoly());
  // P = T^2 Q(T + m/T) with Q = T^2 + a T + (b - 2m).
  const ModPolynomial Q(ell, {submod(P.coeff(2), addmod(m, m, ell), ell), P.coeff(3), 1});
  f.s2 = !factors_as(Q, {2});
  f.s11 = !factors_as(Q, {1, 1});
  return f;
}

void wilson(Measure& m) {
  const double n = static_cast<double>(m.total), z = 1.959963984540054;
  const double ph = m.hits / n;
  const double denom = 1 + z * z / n;
  const double centre = (ph + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(ph * (1 - ph) / n + z * z / (4 * n * n)) / denom;
  m.estimate = ph;
  m.lo = std::max(0.0, centre - half);
  m.hi = std::min(1.0, centre + half);
}

}  // namespace

GspBadMeasures gsp_bad_measures(u64 ell, MeasureMode mode, u64 samples, u64 seed,
                                const std::optional<mpz_class>& s_override) {
  const mpz_class s_big = stability_exponent(4, s_override);
  if (!s_big.fits_ulong_p()) throw CapacityError("gsp_bad_measures: s exceeds 64 bits");
  const u64 s = s_big.get_ui();
  GspBadMeasures out;
  out.ell = ell;
  out.exact = mode == MeasureMode::kExact;
  std::map<std::pair<u64, u64>, BadFlags> memo;  // (charpoly, multiplier)
  u64 hits[5] = {0, 0, 0, 0, 0}, total = 0;
  auto visit = [&](const SmallMatrix& B) {
    const ModPolynomial P = B.charpoly();
    u64 key = 0;
    for (int i = 3; i >= 0; --i) key = key * ell + P.coeff(i);
    const u64 m = similitude_multiplier(B);
    auto it = memo.find({key, m});
    if (it == memo.end()) it = memo.emplace(std::make_pair(key, m), classify(B, s)).first;
    const BadFlags& f = it->second;
    hits[0] += f.c1;
    hits[1] += f.c2;
    hits[2] += f.c3;
    hits[3] += f.s2;
    hits[4] += f.s11;
    ++total;
    if (!f.c1 && !out.irreducible_witness) out.irreducible_witness = B;
  };
  if (out.exact) {
    if (ell != 3) throw CapacityError("gsp_bad_measures: exact mode enumerates GSp4(F_3) only");
    const auto G = gsp4(ell);
    for (Elem e = 0; e < G->order(); ++e) visit(G->matrix(e));
  } else {
    if (ell != 5 && ell != 7) throw CapacityError("gsp_bad_measures: sampling supports ell in {5, 7}");
    if (samples == 0 || samples > 1000000) throw CapacityError("gsp_bad_measures: samples must be in [1, 1e6]");
    const SampledGSp4 G(ell);
    std::mt19937_64 rng(seed);
    for (u64 i = 0; i < samples; ++i) visit(G.sample(rng));
  }
  const char* names[5] = {"C1", "C2", "C3", "C(2)", "C(1,1)"};
  for (int i = 0; i < 5; ++i) {
    Measure m;
    m.hits = hits[i];
    m.total = total;
    if (out.exact) {
      m.exact = mpq_class(static_cast<unsigned long>(hits[i]), static_cast<unsigned long>(total));
      m.exact->canonicalize();
      m.estimate = m.lo = m.hi = m.exact->get_d();
    } else {
      wilson(m);
    }
    out.sets[names[i]] = m;
  }
  return out;
}

// ---------------------------------------------------------------- Chebotarev

ChebotarevReport chebotarev_empirical(const TraceTable& table, u64 ell, double x) {
  require_genus(table, 1);
  if (ell > 13 || !is_prime(ell)) throw DomainError("chebotarev_empirical: ell must be a prime <= 13");
  ChebotarevReport rep;
  rep.ell = ell;
  rep.x = x;
  std::vector<u64> obs(ell * ell, 0);
  for (const auto& r : records_to(table, x)) {
    if (r.p == ell) continue;
    ++obs[mod_signed(r.ap, ell) * ell + r.p % ell];
    ++rep.counted;
  }
  const double li = li_or_zero(x);
  const u64 G = gl2_order(ell);
  rep.mu_sum = 0;
  for (u64 t = 0; t < ell; ++t) {
    for (u64 d = 1; d < ell; ++d) {
      FiberRow f;
      f.t = t;
      f.d = d;
      f.observed = obs[t * ell + d];
      f.mu = mpq_class(static_cast<unsigned long>(count_trace_det(ell, t, d)), static_cast<unsigned long>(G));
      f.mu.canonicalize();
      f.expected = f.mu.get_d() * li;
      f.rel_dev = f.expected > 0 ? std::abs(static_cast<double>(f.observed) - f.expected) / f.expected : 0;
      rep.max_rel_dev = std::max(rep.max_rel_dev, f.rel_dev);
      rep.mu_sum += f.mu;
      rep.fibers.push_back(f);
    }
  }
  return rep;
}

SurjectivityEvidence surjectivity_evidence(const TraceTable& table, u64 ell, double x) {
  const auto rep = chebotarev_empirical(table, ell, x);
  SurjectivityEvidence out;
  for (const auto& f : rep.fibers)
    if (f.mu > 0 && f.observed == 0) out.misses.emplace_back(f.t, f.d);
  out.surjective_looking = out.misses.empty();
  return out;
}

// ---------------------------------------------------------------- toy sieve

std::vector<bool> square_trace_set(u64 ell) {
  std::vector<bool> square(ell, false);
  for (u64 y = 0; y < ell; ++y) square[mulmod(y, y, ell)] = true;
  return classes_where(ell, [&](const SmallMatrix& A) { return square[A.trace()]; });
}

ToySieveReport toy_square_trace(const TraceTable& table, double x, const std::vector<u64>& ells, double Q,
                                bool with_exact) {
  require_genus(table, 1);
  for (u64 l : ells)
    if (l < 3 || l > 13 || !is_prime(l)) throw DomainError("toy_square_trace: ells must be odd primes <= 13");
  ToySieveReport rep;
  rep.x = x;
  rep.Q = Q;
  rep.ells = ells;
  std::vector<TraceRecord> X;
  for (const auto& r : records_to(table, x))
    if (std::find(ells.begin(), ells.end(), r.p) == ells.end()) X.push_back(r);
  rep.x_size = X.size();
  for (const auto& r : X) rep.square_count += is_perfect_square(r.ap);

  SieveInstance inst;
  inst.x_size = X.size();
  for (u64 l : ells) {
    const auto& data = gl2_data(l);
    SieveComponent c;
    c.label = "ell=" + std::to_string(l);
    c.table = data.table;
    c.rho.reserve(X.size());
    for (const auto& r : X) c.rho.push_back(data.class_of_trace_det.at({mod_signed(r.ap, l), r.p % l}));
    c.admissible = square_trace_set(l);
    c.delta = class_measure(*data.group, *c.admissible);
    inst.components.push_back(std::move(c));
  }
  inst.support = support_products(ells, Q);
  rep.sieve = sieve_upper_bound(inst, with_exact);
  return rep;
}

}  // namespace galsieve

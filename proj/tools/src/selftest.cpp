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

#include <fmt/format.h>

#include <functional>
#include <ostream>
#include <random>

#include "cli.hpp"
#include "galsieve/applications.hpp"
#include "galsieve/error.hpp"
#include "galsieve/modarith.hpp"
#include "galsieve/sieve_random.hpp"

namespace galsieve::cli {

namespace {

struct Suite {
  std::string name;
  u64 checks = 0;
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

void arith_suite(Suite& s, std::mt19937_64& rng) {
  const auto primes = primes_up_to(5000);
  u64 idx = 0;
  for (u64 n = 0; n <= 5000; ++n) {
    const bool listed = idx < primes.size() && primes[idx] == n;
    if (listed) ++idx;
    s.expect(is_prime(n) == listed, fmt::format("is_prime({})", n));
  }
  for (int i = 0; i < 2000; ++i) {
    const u64 m = (rng() >> 1) | 1;
    const u64 a = rng() % m, b = rng() % m;
    const u64 want = static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
    s.expect(mulmod(a, b, m) == want, fmt::format("mulmod({},{},{})", a, b, m));
  }
  for (u64 p : {3ull, 101ull, 1009ull, 65537ull}) {
    for (int i = 0; i < 50; ++i) {
      const u64 a = 1 + rng() % (p - 1);
      s.expect(mulmod(a, invmod(a, p), p) == 1, fmt::format("invmod({},{})", a, p));
      if (legendre(static_cast<i64>(a), p) == 1) {
        const u64 r = sqrtmod(a, p);
        s.expect(mulmod(r, r, p) == a, fmt::format("sqrtmod({},{})", a, p));
      }
    }
  }
}

void group_suite(Suite& s) {
  for (u64 q : {2ull, 3ull, 5ull}) {
    const auto G = gl2(q);
    s.expect(G->order() == gl2_order(q), fmt::format("|GL2({})|", q));
    s.expect(G->class_count() == q * q - 1, fmt::format("classes of GL2({})", q));
    const auto S = sl2(q);
    s.expect(S->order() == sl2_order(q), fmt::format("|SL2({})|", q));
  }
  for (const auto& t : small_group_tables()) {
    const auto& G = *t->group;
    u64 sum = 0;
    for (const auto& c : G.classes().classes) sum += c.size();
    s.expect(sum == G.order(), fmt::format("class sizes of a group of order {}", G.order()));
  }
}

void character_suite(Suite& s) {
  for (const auto& t : small_group_tables()) {
    const auto n = t->group->order();
    long sq = 0;
    for (long d : t->degrees) sq += d * d;
    s.expect(static_cast<u64>(sq) == n, fmt::format("sum chi(1)^2 for order {}", n));
    s.expect(t->size() == t->group->class_count(), fmt::format("square table for order {}", n));
    s.expect(t->row_orthogonality_residual() < 1e-8, fmt::format("row orthogonality for order {}", n));
    s.expect(t->column_orthogonality_residual() < 1e-8, fmt::format("column orthogonality for order {}", n));
  }
  for (u64 q : {3ull, 5ull, 7ull}) {
    const auto& d = gl2_data(q);
    s.expect(d.table->row_orthogonality_residual() < 1e-8, fmt::format("GL2({}) table orthogonality", q));
  }
}

void sieve_suite(Suite& s, std::mt19937_64& rng) {
  for (int i = 0; i < 40; ++i) {
    const auto inst = random_sieve_instance(rng);
    const auto r = sieve_upper_bound(inst, true, i);
    const double lhs = r.l_value * static_cast<double>(*r.survivor_count);
    s.expect(lhs <= *r.delta_exact * (1 + 1e-6) + 1e-9, fmt::format("instance {}: L |S| <= Delta_exact", i));
    s.expect(*r.delta_exact <= r.delta_bound * (1 + 1e-9), fmt::format("instance {}: Delta_exact <= bound", i));
  }
}

void curve_suite(Suite& s) {
  const EllipticCurveQ E(1, 1);
  for (u64 p : primes_up_to(3000)) {
    if (!E.is_good(p) || p == 2) continue;
    s.expect(hasse_ok(ap(E, p), p), fmt::format("Hasse at p={}", p));
  }
  for (u64 p : {1009ull, 2003ull, 4001ull, 10007ull})
    s.expect(ap_bsgs(E, p) == ap_character_sum(E, p), fmt::format("BSGS vs character sum at p={}", p));
  const Genus2CurveQ C{IntPolynomial({mpz_class(1), mpz_class(-1), mpz_class(0), mpz_class(0), mpz_class(0),
                                      mpz_class(1)})};
  for (u64 p : primes_up_to(120)) {
    if (!C.is_good(p)) continue;
    const auto a = count_points_g2(C, p), b = count_points_g2_direct(C, p);
    s.expect(a.n1 == b.n1 && a.n2 == b.n2, fmt::format("genus 2 counts at p={}", p));
    s.expect(weil_ok(a, p), fmt::format("Weil bounds at p={}", p));
  }
}

void cache_suite(Suite& s) {
  const auto t = build_trace_table(CurveDescriptor::elliptic(1, 1), 500);
  const auto bytes = t.serialize();
  const auto back = TraceTable::deserialize(bytes);
  s.expect(back.records().size() == t.records().size() && back.max_prime() == t.max_prime(), "round trip");
  std::string bad = bytes;
  bad[bad.size() / 2] ^= 0x10;
  bool raised = false;
  try {
    TraceTable::deserialize(bad);
  } catch (const FormatError&) {
    raised = true;
  }
  s.expect(raised, "flipped byte raises FormatError");
}

void application_suite(Suite& s, const std::string& inject) {
  for (u64 l : {2ull, 3ull, 5ull, 7ull}) {
    mpq_class closed = koblitz_factor(l);
    if (inject == "koblitz-factor") closed += mpq_class(1, 1000);
    s.expect(closed == koblitz_factor_enumerated(l), fmt::format("koblitz factor at ell={}", l));
  }
  s.expect(koblitz_L_subsets(1000) == koblitz_L_coefficients(1000), "L by subsets equals L by coefficients");
  const auto table = build_trace_table(CurveDescriptor::elliptic(1, 1), 20000);
  const auto cheb = chebotarev_empirical(table, 5, 20000);
  s.expect(cheb.mu_sum == 1, "fiber measures sum to 1");
  const auto toy = toy_square_trace(table, 5000, {3, 5, 7}, 15, true);
  const auto& r = toy.sieve;
  s.expect(static_cast<double>(toy.square_count) <= static_cast<double>(*r.survivor_count),
           "squares survive the sieve");
  s.expect(r.l_value * static_cast<double>(*r.survivor_count) <= r.delta_bound * (1 + 1e-9),
           "toy inequality");
}

}  // namespace

int selftest(const SelftestOptions& opts, std::ostream& out) {
  std::mt19937_64 rng(opts.seed);
  if (!opts.inject.empty() && opts.inject != "koblitz-factor") {
    out << "unknown injection: " << opts.inject << '\n';
    return kConfigError;
  }
  std::vector<std::pair<std::string, std::function<void(Suite&)>>> suites = {
      {"arith", [&](Suite& s) { arith_suite(s, rng); }},
      {"groups", [&](Suite& s) { group_suite(s); }},
      {"characters", [&](Suite& s) { character_suite(s); }},
      {"sieve", [&](Suite& s) { sieve_suite(s, rng); }},
      {"curves", [&](Suite& s) { curve_suite(s); }},
      {"cache", [&](Suite& s) { cache_suite(s); }},
      {"applications", [&](Suite& s) { application_suite(s, opts.inject); }},
  };
  bool all = true;
  for (auto& [name, fn] : suites) {
    Suite s{name};
    try {
      fn(s);
    } catch (const std::exception& e) {
      s.failures.push_back(std::string("exception: ") + e.what());
    }
    out << fmt::format("{:<14}{}/{} passed\n", name, s.checks - std::min<u64>(s.checks, s.failures.size()), s.checks);
    for (const auto& f : s.failures) out << "  FAILED " << f << '\n';
    all = all && s.failures.empty();
  }
  out << (all ? "selftest: ok\n" : "selftest: FAILED\n");
  return all ? kOk : 1;
}

}  // namespace galsieve::cli

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

#include "cli.hpp"

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "galsieve/applications.hpp"
#include "galsieve/error.hpp"
#include "galsieve/sieve_random.hpp"

namespace galsieve::cli {

namespace {

std::string num(double v) { return fmt::format("{:.10g}", v); }
std::string num(u64 v) { return std::to_string(v); }
std::string num(i64 v) { return std::to_string(v); }
std::string num(const mpq_class& v) { return v.get_str(); }

// A config problem tied to one option.
struct ConfigError : Error {
  ConfigError(const std::string& key, const std::string& what) : Error("--" + key + ": " + what) {}
};

struct Options {
  std::vector<std::string> curves;
  std::string g2;
  std::vector<double> xs;
  std::vector<double> qs;
  std::vector<u64> ells;
  std::string cache;
  u64 seed = 0;
  std::string out;
  std::string json;
  double c_abs = 1.0;
  unsigned workers = 1;
  bool build = false;
  // subcommand specific
  u64 torsion = 1;
  u64 cutoff = 1000000;
  i64 trace = 1;
  double degree_q = 2197;
  std::string predicate = "frobenius-field";
  i64 disc = -4;
  std::string s;
  std::string weil;
  u64 ell_bound = 1000;
  u64 weil_q = 5;
  u64 samples = 100000;
  double Q = 15;
  bool exact = false;
  double max = 1e5;
  bool symplectic = false;
  unsigned instances = 20;
  double toy_x = 1e4;
};

void add_output(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "CSV output path (stdout when omitted)");
  sub->add_option("--json", o.json, "JSON mirror output path");
}

void add_curve(CLI::App* sub, Options& o, const std::string& def = "1,1") {
  o.curves = {def};
  sub->add_option("--curve", o.curves, "elliptic curve a,b for y^2 = x^3 + a x + b")->capture_default_str();
}

void add_data(CLI::App* sub, Options& o) {
  sub->add_option("--cache", o.cache, "trace cache file");
  sub->add_flag("--build", o.build, "compute missing trace data and write it to the cache");
  sub->add_option("--workers", o.workers, "worker threads for point counting")->check(CLI::Range(1u, 256u));
}

void add_xs(CLI::App* sub, Options& o, std::vector<double> def) {
  o.xs = std::move(def);
  sub->add_option("--x", o.xs, "x schedule, comma separated and ascending")->delimiter(',')->capture_default_str();
}

std::vector<i64> parse_ints(const std::string& key, const std::string& s) {
  std::vector<i64> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoll(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ConfigError(key, "'" + tok + "' is not an integer");
    }
  }
  return out;
}

CurveDescriptor elliptic_from(const std::string& s) {
  const auto v = parse_ints("curve", s);
  if (v.size() != 2) throw ConfigError("curve", "expected a,b");
  try {
    EllipticCurveQ check(v[0], v[1]);
  } catch (const DomainError& e) {
    throw ConfigError("curve", e.what());
  }
  return CurveDescriptor::elliptic(v[0], v[1]);
}

CurveDescriptor genus2_from(const std::string& s) {
  auto v = parse_ints("g2", s);
  if (v.size() != 6 && v.size() != 7) throw ConfigError("g2", "expected c5,...,c0 or c6,...,c0");
  std::reverse(v.begin(), v.end());
  while (v.size() > 6 && v.back() == 0) v.pop_back();
  auto d = CurveDescriptor::genus2(v);
  try {
    std::vector<mpz_class> f;
    for (i64 c : v) f.emplace_back(static_cast<long>(c));
    Genus2CurveQ check{IntPolynomial(f)};
  } catch (const DomainError& e) {
    throw ConfigError("g2", e.what());
  }
  return d;
}

void check_schedule(const std::string& key, const std::vector<double>& xs, double lo = 1) {
  if (xs.empty()) throw ConfigError(key, "schedule is empty");
  for (size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] >= lo)) throw ConfigError(key, "values must be >= " + num(lo));
    if (i && xs[i] <= xs[i - 1]) throw ConfigError(key, "schedule must be strictly ascending");
  }
}

void check_ells(const std::vector<u64>& ells, u64 lo, u64 hi) {
  if (ells.empty()) throw ConfigError("ell", "list is empty");
  for (u64 l : ells)
    if (!is_prime(l) || l < lo || l > hi)
      throw ConfigError("ell", std::to_string(l) + " is not a prime in [" + num(lo) + ", " + num(hi) + "]");
}

TraceTable acquire(const CurveDescriptor& curve, double x, const Options& o) {
  if (o.cache.empty()) return build_trace_table(curve, x, std::nullopt, o.workers);
  const std::filesystem::path path(o.cache);
  if (o.build) return build_trace_table(curve, x, path, o.workers);
  return require_trace_table(curve, x, path);
}

std::string join(const std::vector<std::string>& v, const char* sep = ",") {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

template <typename T>
std::string join_nums(const std::vector<T>& v) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(num(x));
  return join(s);
}

void emit(const Table& t, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    write_csv(t, out);
  } else {
    std::ofstream f(o.out);
    if (!f) throw ConfigError("out", "cannot write " + o.out);
    write_csv(t, f);
  }
  if (!o.json.empty()) {
    std::ofstream f(o.json);
    if (!f) throw ConfigError("json", "cannot write " + o.json);
    write_json(t, f);
  }
}

Table header(const std::string& command, const std::map<std::string, std::string>& config) {
  Table t;
  t.comments.push_back(std::string("galsieve ") + GALSIEVE_VERSION);
  t.comments.push_back("command: " + command);
  for (const auto& [k, v] : config) t.comments.push_back("config: " + k + "=" + v);
  return t;
}

// ---------------------------------------------------------------- commands

Table cmd_koblitz(const Options& o, u64 torsion, u64 euler_cutoff) {
  check_schedule("x", o.xs, 3);
  if (torsion == 0) throw ConfigError("torsion", "must be >= 1");
  if (torsion > 1)
    spdlog::warn("--torsion {}: the level M with v_ell(t) < v_ell(M) is not derived; the M-factor is omitted", torsion);
  const auto curve = elliptic_from(o.curves.at(0));
  const auto table = acquire(curve, o.xs.back(), o);
  Table t = header("koblitz", {{"curve", o.curves[0]}, {"x", join_nums(o.xs)}, {"torsion", num(torsion)},
                               {"c-abs", num(o.c_abs)}, {"euler-cutoff", num(euler_cutoff)}});
  t.comments.push_back("bound_* columns are heuristic: implied constants replaced by c-abs");
  t.columns = {"x", "count", "conjecture", "ratio", "q_unconditional", "bound_unconditional", "q_grh", "bound_grh"};
  const auto rows = koblitz_experiment(table, o.xs, o.c_abs, euler_cutoff);
  for (const auto& r : rows) {
    const u64 count = torsion == 1 ? r.count : koblitz_count(table, r.x, torsion).count;
    t.rows.push_back({num(r.x), num(count), num(r.conjecture), num(count / r.conjecture), num(r.q_unconditional),
                      num(r.bound_unconditional), num(r.q_grh), num(r.bound_grh)});
  }
  return t;
}

Table cmd_lang_trotter(const Options& o, i64 trace, double degree_q) {
  check_schedule("x", o.xs, 3);
  check_ells(o.ells, 2, 13);
  const auto curve = elliptic_from(o.curves.at(0));
  const auto table = acquire(curve, o.xs.back(), o);
  Table t = header("lang-trotter", {{"curve", o.curves[0]}, {"x", join_nums(o.xs)}, {"t", num(trace)},
                                    {"ell", join_nums(o.ells)}, {"degree-q", num(degree_q)}});
  const auto dc = lt_degree_check(o.ells, degree_q);
  t.comments.push_back(fmt::format("degree check: |Z|={} sum chi(1)={} <= Q^4={} max chi(1)={} <= Q={} ok={}",
                                   dc.support_size, num(dc.degree_sum), num(std::pow(degree_q, 4)),
                                   num(dc.max_degree), num(degree_q), dc.ok ? 1 : 0));
  t.columns = {"x", "count", "shape", "ratio"};
  for (const auto& r : lt_experiment(table, trace, o.xs))
    t.rows.push_back({num(r.x), num(r.count), num(r.shape), num(r.ratio)});
  return t;
}

Table cmd_thin_set(const Options& o, const std::string& pred_name, i64 disc) {
  check_schedule("x", o.xs, 3);
  std::vector<TraceTable> tables;
  // One cache file per curve: PATH, PATH.1, PATH.2, ...
  for (size_t i = 0; i < o.curves.size(); ++i) {
    Options oi = o;
    if (i && !o.cache.empty()) oi.cache = o.cache + "." + std::to_string(i);
    tables.push_back(acquire(elliptic_from(o.curves[i]), o.xs.back(), oi));
  }
  ThinSetPredicate pred;
  if (pred_name == "frobenius-field") {
    if (disc == 0) throw ConfigError("disc", "must be nonzero");
    pred = frobenius_field_predicate(disc);
  } else if (pred_name == "trace-equality") {
    pred = trace_equality_predicate();
  } else if (pred_name == "false") {
    pred = false_predicate(static_cast<int>(tables.size()));
  } else {
    throw ConfigError("predicate", "unknown predicate " + pred_name);
  }
  if (pred.arity != static_cast<int>(tables.size()))
    throw ConfigError("curve", fmt::format("predicate {} needs {} curve(s)", pred.name, pred.arity));
  std::vector<const TraceTable*> ptrs;
  for (const auto& tb : tables) ptrs.push_back(&tb);
  Table t = header("thin-set", {{"curve", join(o.curves, ";")}, {"x", join_nums(o.xs)}, {"predicate", pred.name}});
  t.columns = {"x", "count", "common_primes", "ratio"};
  for (double x : o.xs) {
    const u64 n = thin_set_count(ptrs, pred, x);
    const u64 common = thin_set_count(ptrs, {"true", pred.arity, [](const std::vector<i64>&, u64) { return true; }}, x);
    t.rows.push_back({num(x), num(n), num(common), num(common ? static_cast<double>(n) / common : 0.0)});
  }
  return t;
}

Table cmd_chavdarov(const Options& o, const std::string& s_override, u64 ell_bound, const std::string& weil, u64 q) {
  if (ell_bound < 3 || ell_bound > 1000) throw ConfigError("ell-bound", "must be in [3, 1000]");
  if (!weil.empty()) {
    const auto c = parse_ints("weil", weil);
    std::vector<mpz_class> low;
    for (auto it = c.rbegin(); it != c.rend(); ++it) low.emplace_back(static_cast<long>(*it));
    const WeilPolynomial P{IntPolynomial(low), mpz_class(static_cast<unsigned long>(q))};
    if (!P.satisfies_functional_equation() || (P.genus() != 1 && P.genus() != 2))
      throw ConfigError("weil", "not a monic Weil polynomial of genus 1 or 2 for --q");
    const auto cert = chavdarov_test(P, ell_bound);
    Table t = header("chavdarov", {{"weil", weil}, {"q", num(q)}, {"ell-bound", num(ell_bound)}});
    t.comments.push_back(std::string("certified: ") + (cert.certified ? "1" : "0"));
    t.columns = {"cycle_type", "witness_ell"};
    for (const auto& [k, l] : cert.witnesses) t.rows.push_back({k, num(l)});
    for (const auto& k : cert.missing) t.rows.push_back({k, "none"});
    return t;
  }
  check_schedule("x", o.xs, 3);
  if (o.xs.back() > 2e4) throw ConfigError("x", "genus-2 experiments are capped at 2e4");
  std::optional<mpz_class> s;
  if (!s_override.empty()) {
    mpz_class v;
    if (v.set_str(s_override, 10) != 0 || v <= 0) throw ConfigError("s", "must be a positive integer");
    s = v;
  }
  const auto curve = genus2_from(o.g2);
  const auto table = acquire(curve, o.xs.back(), o);
  const auto rep = chavdarov_density(table, o.xs, s, ell_bound);
  Table t = header("chavdarov", {{"g2", o.g2}, {"x", join_nums(o.xs)}, {"s", s ? s->get_str() : "default"},
                                 {"ell-bound", num(ell_bound)}});
  t.comments.push_back("heuristic_shape is the bound shape without its implied constant");
  t.columns = {"x", "primes", "certified", "fraction", "fraction_decimal", "heuristic_shape"};
  for (const auto& r : rep.rows)
    t.rows.push_back({num(r.x), num(r.primes), num(r.certified), num(r.fraction), num(r.fraction.get_d()),
                      num(r.heuristic_shape)});
  return t;
}

Table cmd_gsp(const Options& o, u64 samples, const std::string& s_override) {
  check_ells(o.ells, 3, 7);
  std::optional<mpz_class> s;
  if (!s_override.empty()) {
    mpz_class v;
    if (v.set_str(s_override, 10) != 0 || v <= 0) throw ConfigError("s", "must be a positive integer");
    s = v;
  }
  Table t = header("gsp-measures", {{"ell", join_nums(o.ells)}, {"samples", num(samples)}, {"seed", num(o.seed)},
                                    {"s", s ? s->get_str() : "default"}});
  t.columns = {"ell", "mode", "set", "hits", "total", "exact", "estimate", "lo95", "hi95"};
  for (u64 l : o.ells) {
    const auto mode = l == 3 ? MeasureMode::kExact : MeasureMode::kMonteCarlo;
    const auto m = gsp_bad_measures(l, mode, samples, o.seed, s);
    for (const auto& [name, v] : m.sets)
      t.rows.push_back({num(l), m.exact ? "exact" : "montecarlo", name, num(v.hits), num(v.total),
                        v.exact ? num(*v.exact) : "", num(v.estimate), num(v.lo), num(v.hi)});
  }
  return t;
}

Table cmd_chebotarev(const Options& o) {
  check_schedule("x", o.xs, 3);
  check_ells(o.ells, 2, 13);
  if (o.ells.size() != 1) throw ConfigError("ell", "chebotarev takes one ell");
  if (o.xs.size() != 1) throw ConfigError("x", "chebotarev takes one x");
  const auto curve = elliptic_from(o.curves.at(0));
  const auto table = acquire(curve, o.xs[0], o);
  const auto rep = chebotarev_empirical(table, o.ells[0], o.xs[0]);
  const auto surj = surjectivity_evidence(table, o.ells[0], o.xs[0]);
  Table t = header("chebotarev", {{"curve", o.curves[0]}, {"x", num(o.xs[0])}, {"ell", num(o.ells[0])}});
  t.comments.push_back(fmt::format("counted primes: {}; mu sum: {}; max rel dev: {}", rep.counted,
                                   rep.mu_sum.get_str(), num(rep.max_rel_dev)));
  std::vector<std::string> misses;
  for (const auto& [a, b] : surj.misses) misses.push_back(fmt::format("({},{})", a, b));
  t.comments.push_back(fmt::format("surjectivity evidence: {}; missed fibers: {}", surj.surjective_looking ? 1 : 0,
                                   misses.empty() ? "none" : join(misses, " ")));
  t.columns = {"t", "d", "observed", "mu", "expected", "rel_dev"};
  for (const auto& f : rep.fibers)
    t.rows.push_back({num(f.t), num(f.d), num(f.observed), num(f.mu), num(f.expected), num(f.rel_dev)});
  return t;
}

Table cmd_toy(const Options& o, double Q, bool exact) {
  check_schedule("x", o.xs, 3);
  check_ells(o.ells, 3, 13);
  const auto curve = elliptic_from(o.curves.at(0));
  const auto table = acquire(curve, o.xs.back(), o);
  Table t = header("toy-sieve", {{"curve", o.curves[0]}, {"x", join_nums(o.xs)}, {"ell", join_nums(o.ells)},
                                 {"q", num(Q)}, {"exact", exact ? "1" : "0"}, {"seed", num(o.seed)}});
  t.comments.push_back("count: p <= x outside ell with a_p a perfect square (0 included)");
  t.columns = {"x", "count", "L", "Delta", "bound"};
  for (double x : o.xs) {
    const auto r = toy_square_trace(table, x, o.ells, Q, exact);
    t.comments.push_back(fmt::format("x={}: |X|={} survivors={}{}", num(x), r.x_size, *r.sieve.survivor_count,
                                     r.sieve.delta_exact ? " Delta_exact=" + num(*r.sieve.delta_exact) : ""));
    t.rows.push_back({num(x), num(r.square_count), num(r.sieve.l_value), num(r.sieve.delta_bound),
                      num(r.sieve.upper_bound)});
  }
  return t;
}

Table cmd_constants(const Options& o, u64 euler_cutoff) {
  check_ells(o.ells, 2, 13);
  check_schedule("q", o.qs, 1);
  Table t = header("constants", {{"ell", join_nums(o.ells)}, {"q", join_nums(o.qs)},
                                 {"euler-cutoff", num(euler_cutoff)}});
  t.columns = {"name", "parameter", "exact", "decimal"};
  for (u64 l : o.ells) {
    const auto kf = koblitz_factor(l);
    t.rows.push_back({"koblitz_factor", num(l), num(kf), num(kf.get_d())});
    const auto mu = class_measure(*gl2_data(l).group, koblitz_admissible_set(l, 1));
    t.rows.push_back({"koblitz_admissible_measure", num(l), num(mu), num(mu.get_d())});
    const auto sq = class_measure(*gl2_data(l).group, square_trace_set(l));
    t.rows.push_back({"square_trace_measure", num(l), num(sq), num(sq.get_d())});
    const auto lt = lt_trace_measure(l, 1);
    t.rows.push_back({"trace_equals_1_measure", num(l), num(lt), num(lt.get_d())});
  }
  const auto C = generic_koblitz_constant(euler_cutoff);
  t.rows.push_back({"koblitz_constant", num(euler_cutoff), "", num(C.value)});
  t.rows.push_back({"koblitz_constant_tail_width", num(euler_cutoff), "", num(C.tail_width)});
  for (double q : o.qs) {
    if (q <= 1e4) {
      // The exact value is printed while it stays readable.
      const auto L = koblitz_L_subsets(q);
      const auto exact = num(L);
      t.rows.push_back({"koblitz_L", num(q), exact.size() <= 40 ? exact : "", num(L.get_d())});
    } else {
      t.rows.push_back({"koblitz_L", num(q), "", num(koblitz_L(q))});
    }
    t.rows.push_back({"lt_L_lower", num(q), num(lt_L_lower(q)), num(static_cast<double>(lt_L_lower(q)))});
  }
  return t;
}

Table cmd_trace_table(const Options& o, double max) {
  if (o.cache.empty()) throw ConfigError("cache", "trace-table needs a cache path");
  if (!(max >= 3)) throw ConfigError("max", "must be >= 3");
  const bool g2 = !o.g2.empty();
  if (g2 && max > 3e4) throw ConfigError("max", "genus-2 tables are capped at 3e4");
  if (!g2 && max > 2e7) throw ConfigError("max", "genus-1 tables are capped at 2e7");
  const auto curve = g2 ? genus2_from(o.g2) : elliptic_from(o.curves.at(0));
  const auto table = build_trace_table(curve, max, std::filesystem::path(o.cache), o.workers);
  Table t = header("trace-table", {{"curve", curve.to_string()}, {"max", num(max)}, {"cache", o.cache}});
  t.columns = {"genus", "max_prime", "records", "first_p", "last_p"};
  const auto& r = table.records();
  t.rows.push_back({num(static_cast<u64>(curve.genus)), num(table.max_prime()), num(static_cast<u64>(r.size())),
                    r.empty() ? "" : num(r.front().p), r.empty() ? "" : num(r.back().p)});
  return t;
}

Table cmd_group_tables(const Options& o, bool symplectic) {
  check_ells(o.ells, 2, 13);
  Table t = header("group-tables", {{"ell", join_nums(o.ells)}, {"symplectic", symplectic ? "1" : "0"}});
  t.columns = {"group", "q", "order", "formula_order", "classes", "formula_classes"};
  for (u64 q : o.ells) {
    const auto G = gl2(q);
    t.rows.push_back({"GL2", num(q), num(G->order()), num(gl2_order(q)), num(static_cast<u64>(G->class_count())),
                      num(q * q - 1)});
    const auto S = sl2(q);
    t.rows.push_back({"SL2", num(q), num(S->order()), num(sl2_order(q)), num(static_cast<u64>(S->class_count())),
                      q == 2 ? "3" : num(q + 4)});
  }
  if (symplectic) {
    const auto S = sp4(3);
    t.rows.push_back({"Sp4", "3", num(S->order()), sp_order(2, 3).get_str(), num(static_cast<u64>(S->class_count())), ""});
    const auto G = gsp4(3);
    t.rows.push_back({"GSp4", "3", num(G->order()), gsp_order(2, 3).get_str(), num(static_cast<u64>(G->class_count())), ""});
  }
  return t;
}

Table cmd_sieve_demo(const Options& o, unsigned instances, double toy_x) {
  if (instances > 10000) throw ConfigError("instances", "must be <= 10000");
  Table t = header("sieve-demo", {{"instances", num(static_cast<u64>(instances))}, {"seed", num(o.seed)},
                                  {"toy-x", num(toy_x)}});
  t.columns = {"instance", "x_size", "L", "delta_bound", "delta_exact", "survivors", "bound", "pass"};
  auto row = [&](const std::string& id, u64 xs, const SieveReport& r) {
    const double lhs = r.l_value * static_cast<double>(*r.survivor_count);
    const bool pass = lhs <= r.delta_bound * (1 + 1e-9) + 1e-9 && *r.delta_exact <= r.delta_bound * (1 + 1e-9) &&
                      lhs <= *r.delta_exact * (1 + 1e-6) + 1e-9;
    t.rows.push_back({id, num(xs), num(r.l_value), num(r.delta_bound), num(*r.delta_exact), num(*r.survivor_count),
                      num(r.upper_bound), pass ? "1" : "0"});
  };
  if (toy_x >= 3) {
    const auto table = build_trace_table(CurveDescriptor::elliptic(1, 1), toy_x);
    const auto r = toy_square_trace(table, toy_x, {3, 5, 7, 11, 13}, 15, true);
    row("toy", r.x_size, r.sieve);
  }
  std::mt19937_64 rng(o.seed);
  for (unsigned i = 0; i < instances; ++i) {
    const auto inst = random_sieve_instance(rng);
    row(std::to_string(i), inst.x_size, sieve_upper_bound(inst, true, o.seed + i));
  }
  return t;
}

}  // namespace

void write_csv(const Table& t, std::ostream& out) {
  for (const auto& c : t.comments) out << "# " << c << '\n';
  auto cell = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  for (size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << cell(t.columns[i]);
  out << '\n';
  for (const auto& r : t.rows) {
    for (size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << cell(r[i]);
    out << '\n';
  }
}

void write_json(const Table& t, std::ostream& out) {
  nlohmann::ordered_json j;
  j["comments"] = t.comments;
  j["columns"] = t.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json obj;
    for (size_t i = 0; i < r.size() && i < t.columns.size(); ++i) obj[t.columns[i]] = r[i];
    j["rows"].push_back(obj);
  }
  out << j.dump(2) << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"galsieve: large sieve experiments for Galois representations"};
  app.set_config("--config", "", "INI config file; [subcommand] sections hold its options");
  app.set_version_flag("--version", std::string(GALSIEVE_VERSION));
  app.require_subcommand(1);

  // One option set per subcommand so that defaults do not leak between them.
  std::map<std::string, Options> opts;
  std::function<Table()> action;
  bool is_selftest = false;
  SelftestOptions st;
  auto add = [&](const std::string& name, const std::string& help) {
    return std::pair<CLI::App*, Options*>{app.add_subcommand(name, help), &opts[name]};
  };

  {
    auto [sub, o] = add("koblitz", "count p with (p + 1 - a_p)/t prime against the heuristics");
    add_curve(sub, *o);
    add_xs(sub, *o, {1e4, 1e5});
    add_data(sub, *o);
    add_output(sub, *o);
    sub->add_option("--torsion", o->torsion, "torsion divisor t")->capture_default_str();
    sub->add_option("--euler-cutoff", o->cutoff, "prime cutoff for the Euler product")->capture_default_str();
    sub->add_option("--c-abs", o->c_abs, "stand-in for the implied constants")->capture_default_str();
    sub->callback([&action, o = o] { action = [o] { return cmd_koblitz(*o, o->torsion, o->cutoff); }; });
  }
  {
    auto [sub, o] = add("lang-trotter", "count p with a_p = t");
    add_curve(sub, *o);
    add_xs(sub, *o, {1e4, 1e5});
    add_data(sub, *o);
    add_output(sub, *o);
    o->ells = {3, 5, 7, 11, 13};
    sub->add_option("--t", o->trace, "trace value")->capture_default_str();
    sub->add_option("--ell", o->ells, "ells for the character degree check")->delimiter(',')->capture_default_str();
    sub->add_option("--degree-q", o->degree_q, "Q for the character degree check")->capture_default_str();
    sub->callback([&action, o = o] { action = [o] { return cmd_lang_trotter(*o, o->trace, o->degree_q); }; });
  }
  {
    auto [sub, o] = add("thin-set", "count p where a predicate holds on the traces");
    add_curve(sub, *o);
    add_xs(sub, *o, {1e4, 1e5});
    add_data(sub, *o);
    add_output(sub, *o);
    sub->add_option("--predicate", o->predicate, "frobenius-field | trace-equality | false")->capture_default_str();
    sub->add_option("--disc", o->disc, "fundamental discriminant for frobenius-field")->capture_default_str();
    sub->callback([&action, o = o] { action = [o] { return cmd_thin_set(*o, o->predicate, o->disc); }; });
  }
  {
    auto [sub, o] = add("chavdarov", "certify W_2g Galois groups of Frobenius polynomials");
    o->g2 = "1,0,0,0,-1,1";
    sub->add_option("--g2", o->g2, "genus 2 curve y^2 = f(x), coefficients c5,...,c0")->capture_default_str();
    add_xs(sub, *o, {5e3, 1e4, 2e4});
    add_data(sub, *o);
    add_output(sub, *o);
    sub->add_option("--s", o->s, "override for the stability exponent s(4)");
    sub->add_option("--ell-bound", o->ell_bound, "largest ell searched for cycle types")->capture_default_str();
    sub->add_option("--weil", o->weil, "test one Weil polynomial, coefficients high degree first");
    sub->add_option("--q", o->weil_q, "multiplier q for --weil")->capture_default_str();
    sub->callback([&action, o = o] {
      action = [o] { return cmd_chavdarov(*o, o->s, o->ell_bound, o->weil, o->weil_q); };
    });
  }
  {
    auto [sub, o] = add("gsp-measures", "bad-set measures in GSp4(F_ell)");
    o->ells = {3};
    sub->add_option("--ell", o->ells, "3 enumerates exactly; 5 and 7 sample")->delimiter(',')->capture_default_str();
    sub->add_option("--samples", o->samples, "Monte Carlo sample count")->capture_default_str();
    sub->add_option("--seed", o->seed, "sampler seed")->capture_default_str();
    sub->add_option("--s", o->s, "override for the stability exponent s(4)");
    add_output(sub, *o);
    sub->callback([&action, o = o] { action = [o] { return cmd_gsp(*o, o->samples, o->s); }; });
  }
  {
    auto [sub, o] = add("chebotarev", "(a_p, p) mod ell statistics against class measures");
    add_curve(sub, *o);
    add_xs(sub, *o, {1e5});
    add_data(sub, *o);
    add_output(sub, *o);
    o->ells = {5};
    sub->add_option("--ell", o->ells, "one prime ell <= 13")->delimiter(',')->capture_default_str();
    sub->callback([&action, o = o] { action = [o] { return cmd_chebotarev(*o); }; });
  }
  {
    auto [sub, o] = add("toy-sieve", "square-trace sieve with the assembled bound");
    add_curve(sub, *o);
    add_xs(sub, *o, {1e5});
    add_data(sub, *o);
    add_output(sub, *o);
    o->ells = {3, 5, 7, 11, 13};
    sub->add_option("--ell", o->ells, "sieving primes")->delimiter(',')->capture_default_str();
    sub->add_option("--q", o->Q, "support bound Q on prod D")->capture_default_str();
    sub->add_flag("--exact", o->exact, "also compute the optimal constant by power iteration");
    sub->add_option("--seed", o->seed, "seed for power iteration")->capture_default_str();
    sub->callback([&action, o = o] { action = [o] { return cmd_toy(*o, o->Q, o->exact); }; });
  }
  {
    auto [sub, o] = add("constants", "exact constants and measures");
    o->ells = {2, 3, 5, 7, 11, 13};
    o->qs = {10, 1000, 10000};
    sub->add_option("--ell", o->ells, "ells")->delimiter(',')->capture_default_str();
    sub->add_option("--q", o->qs, "Q values for L sums")->delimiter(',')->capture_default_str();
    sub->add_option("--euler-cutoff", o->cutoff, "prime cutoff for the Euler product")->capture_default_str();
    add_output(sub, *o);
    sub->callback([&action, o = o] { action = [o] { return cmd_constants(*o, o->cutoff); }; });
  }
  {
    auto [sub, o] = add("trace-table", "build or extend a trace cache");
    add_curve(sub, *o);
    sub->add_option("--g2", o->g2, "genus 2 curve, coefficients c5,...,c0 (overrides --curve)");
    sub->add_option("--max", o->max, "largest prime covered")->capture_default_str();
    sub->add_option("--cache", o->cache, "trace cache file")->required();
    sub->add_option("--workers", o->workers, "worker threads")->check(CLI::Range(1u, 256u));
    add_output(sub, *o);
    sub->callback([&action, o = o] { action = [o] { return cmd_trace_table(*o, o->max); }; });
  }
  {
    auto [sub, o] = add("group-tables", "orders and class counts by enumeration");
    o->ells = {2, 3, 5, 7, 11};
    sub->add_option("--ell", o->ells, "field sizes q")->delimiter(',')->capture_default_str();
    sub->add_flag("--symplectic", o->symplectic, "include Sp4(F_3) and GSp4(F_3)");
    add_output(sub, *o);
    sub->callback([&action, o = o] { action = [o] { return cmd_group_tables(*o, o->symplectic); }; });
  }
  {
    auto [sub, o] = add("sieve-demo", "random instances and the toy instance through the sieve");
    sub->add_option("--instances", o->instances, "random instance count")->capture_default_str();
    sub->add_option("--toy-x", o->toy_x, "x for the toy instance (0 skips it)")->capture_default_str();
    sub->add_option("--seed", o->seed, "seed")->capture_default_str();
    add_output(sub, *o);
    sub->callback([&action, o = o] { action = [o] { return cmd_sieve_demo(*o, o->instances, o->toy_x); }; });
  }
  {
    auto* sub = app.add_subcommand("selftest", "run every invariant suite");
    sub->add_option("--seed", st.seed, "seed")->capture_default_str();
    sub->add_option("--inject", st.inject, "break a named constant (mutation check)");
    sub->callback([&] { is_selftest = true; });
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kConfigError;
  }

  try {
    if (is_selftest) return selftest(st, out);
    emit(action(), opts[app.get_subcommands().front()->get_name()], out);
    return kOk;
  } catch (const DataGapError& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const FormatError& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const DataCorruptionError& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kDataError;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kDataError;
  } catch (const Error& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace galsieve::cli

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

#include "galsieve/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "galsieve/error.hpp"
#include "galsieve/numbers.hpp"

namespace galsieve {

namespace {

constexpr size_t kMaxColumns = 100000;
constexpr size_t kMaxEntries = 20000000;
constexpr size_t kMaxSupport = 10000000;

// Calls f(rows) for every tuple of nontrivial rows of the components in D.
void for_each_primitive(const SieveInstance& inst, const std::vector<size_t>& D,
                        const std::function<void(const std::vector<size_t>&)>& f) {
  std::vector<size_t> rows(D.size(), 1);
  for (size_t i = 0; i < D.size(); ++i)
    if (inst.components[D[i]].table->size() < 2) return;
  while (true) {
    f(rows);
    size_t i = D.size();
    while (i > 0) {
      --i;
      if (++rows[i] < inst.components[D[i]].table->size()) break;
      rows[i] = 1;
      if (i == 0) return;
    }
    if (D.empty()) return;
  }
}

cd character_value(const SieveInstance& inst, const std::vector<size_t>& D, const std::vector<size_t>& rows,
                   size_t v) {
  cd val = 1.0;
  for (size_t i = 0; i < D.size(); ++i) {
    const auto& comp = inst.components[D[i]];
    val *= comp.table->rows[rows[i]][comp.rho[v]];
  }
  return val;
}

}  // namespace

void SieveInstance::validate() const {
  for (const auto& c : components) {
    if (!c.table) throw DomainError("sieve component " + c.label + " has no character table");
    if (c.rho.size() != x_size) throw DomainError("sieve component " + c.label + ": rho length differs from |X|");
    const size_t nclasses = c.table->group->class_count();
    for (auto cls : c.rho)
      if (cls >= nclasses) throw DomainError("sieve component " + c.label + ": foreign class index");
    if (c.delta <= 0 || c.delta > 1) throw DomainError("sieve component " + c.label + ": delta outside (0,1]");
    if (c.admissible) {
      if (c.admissible->size() != nclasses) throw DomainError("sieve component " + c.label + ": class set size");
      if (class_measure(*c.table->group, *c.admissible) > c.delta)
        throw DomainError("sieve component " + c.label + ": measure of C exceeds delta");
    }
  }
  for (const auto& D : support)
    for (size_t i : D)
      if (i >= components.size()) throw DomainError("support set refers to an unknown component");
}

mpq_class class_measure(const FiniteGroup& G, const std::vector<bool>& U) {
  const auto& cp = G.classes();
  if (U.size() != cp.count()) throw DomainError("class_measure: class set size differs from class count");
  mpz_class num = 0;
  for (size_t c = 0; c < cp.count(); ++c)
    if (U[c]) num += static_cast<unsigned long>(cp.size(c));
  mpq_class r(num, mpz_class(static_cast<unsigned long>(G.order())));
  r.canonicalize();
  return r;
}

mpq_class class_measure(const FiniteGroup& G, const std::vector<size_t>& classes) {
  std::vector<bool> U(G.class_count(), false);
  for (size_t c : classes) {
    if (c >= U.size()) throw DomainError("class_measure: foreign class index");
    U[c] = true;
  }
  return class_measure(G, U);
}

mpq_class l_value(const std::vector<std::vector<size_t>>& Z, const std::vector<mpq_class>& delta) {
  mpq_class total = 0;
  for (const auto& D : Z) {
    mpq_class term = 1;
    for (size_t i : D) {
      if (i >= delta.size()) throw DomainError("l_value: unknown label");
      const mpq_class& d = delta[i];
      if (d <= 0 || d > 1) throw DomainError("l_value: delta outside (0,1]");
      term *= (1 - d) / d;
    }
    total += term;
  }
  return total;
}

double l_value(const std::vector<std::vector<size_t>>& Z, const std::vector<double>& delta) {
  double total = 0;
  for (const auto& D : Z) {
    double term = 1;
    for (size_t i : D) {
      if (i >= delta.size()) throw DomainError("l_value: unknown label");
      const double d = delta[i];
      if (!(d > 0 && d <= 1)) throw DomainError("l_value: delta outside (0,1]");
      term *= (1 - d) / d;
    }
    total += term;
  }
  return total;
}

std::vector<std::vector<size_t>> support_products(const std::vector<u64>& weights, double Q) {
  if (Q > 1e6) throw CapacityError("support_products: Q above 10^6");
  for (u64 w : weights)
    if (w < 2) throw DomainError("support_products: weights must be >= 2");
  std::vector<size_t> order(weights.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return weights[a] < weights[b]; });

  std::vector<std::vector<size_t>> out{{}};
  std::vector<size_t> cur;
  std::function<void(size_t, double)> rec = [&](size_t start, double prod) {
    for (size_t k = start; k < order.size(); ++k) {
      const double next = prod * static_cast<double>(weights[order[k]]);
      if (next > Q) break;
      cur.push_back(order[k]);
      out.push_back(cur);
      if (out.size() > kMaxSupport) throw CapacityError("support_products: more than 10^7 subsets");
      rec(k + 1, next);
      cur.pop_back();
    }
  };
  rec(0, 1.0);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

CoefficientMatrix coefficient_matrix(const SieveInstance& inst) {
  inst.validate();
  // Group X by the full class profile.
  std::map<std::vector<std::uint32_t>, size_t> profiles;
  std::vector<std::uint32_t> key(inst.components.size());
  std::vector<size_t> representative;
  for (size_t v = 0; v < inst.x_size; ++v) {
    for (size_t i = 0; i < key.size(); ++i) key[i] = inst.components[i].rho[v];
    auto [it, inserted] = profiles.try_emplace(key, 0);
    ++it->second;
  }
  CoefficientMatrix cm;
  for (size_t d = 0; d < inst.support.size(); ++d) {
    for_each_primitive(inst, inst.support[d], [&](const std::vector<size_t>& rows) {
      cm.columns.emplace_back(d, rows);
      if (cm.columns.size() > kMaxColumns) throw CapacityError("coefficient_matrix: more than 10^5 characters");
    });
  }
  const size_t nrows = profiles.size(), ncols = cm.columns.size();
  if (nrows * ncols > kMaxEntries) throw CapacityError("coefficient_matrix: matrix too large");
  cm.C.resize(static_cast<Eigen::Index>(nrows), static_cast<Eigen::Index>(ncols));
  size_t r = 0;
  for (const auto& [profile, mult] : profiles) {
    const double w = std::sqrt(static_cast<double>(mult));
    for (size_t c = 0; c < ncols; ++c) {
      const auto& D = inst.support[cm.columns[c].first];
      const auto& rows = cm.columns[c].second;
      cd val = w;
      for (size_t i = 0; i < D.size(); ++i) val *= inst.components[D[i]].table->rows[rows[i]][profile[D[i]]];
      cm.C(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = val;
    }
    ++r;
  }
  return cm;
}

double delta_bound(const SieveInstance& inst) {
  const auto cm = coefficient_matrix(inst);
  const Eigen::Index n = cm.C.cols();
  constexpr Eigen::Index kBlock = 256;
  double best = 0;
  for (Eigen::Index start = 0; start < n; start += kBlock) {
    const Eigen::Index len = std::min(kBlock, n - start);
    Eigen::MatrixXcd block = cm.C.adjoint() * cm.C.middleCols(start, len);
    for (Eigen::Index j = 0; j < len; ++j) best = std::max(best, block.col(j).cwiseAbs().sum());
  }
  return best;
}

double spectral_norm_sq(const Eigen::MatrixXcd& A, u64 seed) {
  if (A.size() == 0) return 0.0;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd v(A.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cd(gauss(rng), gauss(rng));
  v.normalize();
  double lambda = 0, settled_since = 0;
  for (int it = 0; it < 10000; ++it) {
    Eigen::VectorXcd w = A.adjoint() * (A * v);
    const double next = v.dot(w).real();
    const double wn = w.norm();
    if (wn == 0) return 0.0;
    const double residual = (w - next * v).norm();
    if (residual <= 1e-8 * std::abs(next)) return next;
    if (std::abs(next - lambda) <= 1e-12 * std::abs(next))
      settled_since += 1;
    else
      settled_since = 0;
    if (settled_since >= 100) return next;
    lambda = next;
    v = w / wn;
  }
  throw NumericError("spectral_norm_sq: power iteration did not converge");
}

double delta_exact(const SieveInstance& inst, u64 seed) {
  const auto cm = coefficient_matrix(inst);
  if (cm.C.rows() > 10000 || cm.C.cols() > 10000) throw CapacityError("delta_exact: matrix above 10^4 x 10^4");
  return spectral_norm_sq(cm.C, seed);
}

boost::dynamic_bitset<> survivors(const SieveInstance& inst) {
  boost::dynamic_bitset<> s(inst.x_size);
  s.set();
  for (const auto& c : inst.components) {
    if (!c.admissible) throw PreconditionError("survivors: component " + c.label + " has no admissible set");
    for (size_t v = 0; v < inst.x_size; ++v)
      if (!(*c.admissible)[c.rho[v]]) s.reset(v);
  }
  return s;
}

SieveReport sieve_upper_bound(const SieveInstance& inst, bool with_exact, u64 seed) {
  inst.validate();
  std::vector<mpq_class> deltas;
  for (const auto& c : inst.components) deltas.push_back(c.delta);
  SieveReport rep;
  rep.l_value = l_value(inst.support, deltas).get_d();
  rep.delta_bound = delta_bound(inst);
  if (with_exact) rep.delta_exact = delta_exact(inst, seed);
  if (rep.l_value <= 0) {
    rep.unbounded = true;
    rep.upper_bound = std::numeric_limits<double>::infinity();
  } else {
    rep.upper_bound = rep.delta_bound / rep.l_value;
  }
  bool all_admissible = true;
  for (const auto& c : inst.components) all_admissible = all_admissible && c.admissible.has_value();
  if (all_admissible) {
    rep.survivor_count = survivors(inst).count();
    const double s = static_cast<double>(*rep.survivor_count);
    if (s > rep.upper_bound * (1 + 1e-9) + 1e-9)
      throw InvariantViolation("sieve_upper_bound: survivor count exceeds the large sieve bound");
  }
  return rep;
}

bool verify_algebra_lemma(const SieveInstance& inst, const std::vector<size_t>& D, const std::vector<cd>& a) {
  if (a.size() != inst.x_size) throw DomainError("verify_algebra_lemma: vector length differs from |X|");
  const auto S = survivors(inst);
  cd total = 0;
  for (size_t v = 0; v < a.size(); ++v) {
    if (a[v] != cd(0) && !S.test(v)) throw DomainError("verify_algebra_lemma: vector not supported on survivors");
    total += a[v];
  }
  double factor = 1;
  for (size_t i : D) {
    const double d = inst.components.at(i).delta.get_d();
    factor *= (1 - d) / d;
  }
  const double lhs = factor * std::norm(total);
  double rhs = 0;
  for_each_primitive(inst, D, [&](const std::vector<size_t>& rows) {
    cd s = 0;
    for (size_t v = 0; v < a.size(); ++v)
      if (a[v] != cd(0)) s += a[v] * character_value(inst, D, rows, v);
    rhs += std::norm(s);
  });
  return lhs <= rhs * (1 + 1e-9) + 1e-9;
}

DualityResult duality_check(const Eigen::MatrixXcd& C, u64 seed) {
  if (C.rows() > 500 || C.cols() > 500) throw CapacityError("duality_check: matrix above 500 x 500");
  DualityResult r{};
  r.norm_sq = spectral_norm_sq(C, seed);
  r.adjoint_norm_sq = spectral_norm_sq(C.adjoint(), seed + 1);
  Eigen::MatrixXcd gram = C.adjoint() * C;
  for (Eigen::Index i = 0; i < gram.rows(); ++i) r.bound = std::max(r.bound, gram.row(i).cwiseAbs().sum());
  const double scale = std::max(1.0, r.norm_sq);
  if (r.norm_sq > r.bound * (1 + 1e-9) + 1e-12) throw InvariantViolation("duality_check: norm exceeds row-sum bound");
  if (std::abs(std::sqrt(r.norm_sq) - std::sqrt(r.adjoint_norm_sq)) > 1e-8 * std::sqrt(scale))
    throw InvariantViolation("duality_check: ||C|| differs from ||C*||");
  return r;
}

mpq_class classical_sieve_L(double Q, const std::map<u64, mpq_class>& delta) {
  if (Q < 2) throw DomainError("classical_sieve: Q must be >= 2");
  // Primes without an entry are not sieved (delta = 1, factor 0).
  std::vector<u64> primes;
  std::vector<mpq_class> factor;
  for (const auto& [p, d] : delta) {
    if (d <= 0 || d > 1) throw DomainError("classical_sieve: delta outside (0,1]");
    if (static_cast<double>(p) > Q || d == 1) continue;
    primes.push_back(p);
    factor.push_back((1 - d) / d);
  }
  mpq_class L = 0;
  std::function<void(size_t, u64, const mpq_class&)> rec = [&](size_t start, u64 d, const mpq_class& term) {
    L += term;
    for (size_t k = start; k < primes.size(); ++k) {
      if (static_cast<double>(d) * static_cast<double>(primes[k]) > Q) break;
      rec(k + 1, d * primes[k], term * factor[k]);
    }
  };
  rec(0, 1, mpq_class(1));
  return L;
}

double classical_sieve_bound(double N, double Q, const std::map<u64, mpq_class>& delta) {
  const mpq_class L = classical_sieve_L(Q, delta);
  return (N + Q * Q) / L.get_d();
}

BoundEvaluation frobenius_bound_evaluator(double x, double Q, double r, double s, double L, Regime regime,
                                          double c_abs, double B) {
  if (!(x >= 3)) throw DomainError("frobenius_bound_evaluator: x must be >= 3");
  const double li = log_integral(x), lx = std::log(x);
  double err = 0;
  std::string label;
  switch (regime) {
    case Regime::kUnconditional:
      err = x / std::pow(lx, 1 + B);
      label = "heuristic: unconditional, c_abs*x/(log x)^(1+B)";
      break;
    case Regime::kGRH:
      err = std::pow(Q, 2 * r + s + 1) * std::sqrt(x) * lx;
      label = "heuristic: GRH, c_abs*Q^(2r+s+1)*x^(1/2)*log x";
      break;
    case Regime::kGRHAHC:
      err = std::pow(Q, r + s / 2 + 1) * std::sqrt(x) * lx;
      label = "heuristic: GRH+AHC, c_abs*Q^(r+s/2+1)*x^(1/2)*log x";
      break;
  }
  const double value = L > 0 ? (li + c_abs * err) / L : std::numeric_limits<double>::infinity();
  return {value, label};
}

}  // namespace galsieve

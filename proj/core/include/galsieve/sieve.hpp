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

#ifndef GALSIEVE_SIEVE_HPP_
#define GALSIEVE_SIEVE_HPP_

#include <gmpxx.h>

#include <Eigen/Dense>
#include <boost/dynamic_bitset.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galsieve/characters.hpp"

namespace galsieve {

// One sieving condition lambda.
struct SieveComponent {
  std::string label;
  TablePtr table;                          // table->group is G_lambda
  std::vector<std::uint32_t> rho;          // class index of rho_lambda(v) for v in X
  std::optional<std::vector<bool>> admissible;  // C_lambda as a class set
  mpq_class delta = 1;                     // density bound in (0, 1]
};

struct SieveInstance {
  size_t x_size = 0;
  std::vector<SieveComponent> components;
  std::vector<std::vector<size_t>> support;  // Z: subsets of component indices

  // Throws DomainError when an invariant fails.
  void validate() const;
};

struct SieveReport {
  double l_value = 0;
  double delta_bound = 0;
  std::optional<double> delta_exact;
  std::optional<u64> survivor_count;
  double upper_bound = 0;
  bool unbounded = false;  // L = 0: the trivial bound +infinity
};

// sum_{C in U} |C| / |G|
mpq_class class_measure(const FiniteGroup& G, const std::vector<bool>& U);
mpq_class class_measure(const FiniteGroup& G, const std::vector<size_t>& classes);

// sum_{D in Z} prod_{lambda in D} (1 - delta) / delta
mpq_class l_value(const std::vector<std::vector<size_t>>& Z, const std::vector<mpq_class>& delta);
double l_value(const std::vector<std::vector<size_t>>& Z, const std::vector<double>& delta);

// Subsets D of label indices with prod of weights <= Q, depth-first over
// ascending weights; includes the empty set.
std::vector<std::vector<size_t>> support_products(const std::vector<u64>& weights, double Q);

// Matrix c_{v,chi} = chi(rho_D(v)) over (D, chi primitive), rows grouped by
// class profile and scaled by sqrt(multiplicity).
struct CoefficientMatrix {
  Eigen::MatrixXcd C;
  std::vector<std::pair<size_t, std::vector<size_t>>> columns;  // (D index, factor rows)
};
CoefficientMatrix coefficient_matrix(const SieveInstance& inst);

double delta_bound(const SieveInstance& inst);
double delta_exact(const SieveInstance& inst, u64 seed = 0);

// Largest eigenvalue of A^* A by seeded power iteration (relative 1e-8,
// at most 10^4 iterations).
double spectral_norm_sq(const Eigen::MatrixXcd& A, u64 seed = 0);

// Exact survivor set as a bitset over X; requires every C_lambda.
boost::dynamic_bitset<> survivors(const SieveInstance& inst);

SieveReport sieve_upper_bound(const SieveInstance& inst, bool with_exact = false, u64 seed = 0);

// Checks prod_{lambda in D} (1-delta)/delta |sum a|^2 <= sum_{chi in Prim(G_D)} |sum a_v chi(rho_D(v))|^2.
bool verify_algebra_lemma(const SieveInstance& inst, const std::vector<size_t>& D, const std::vector<cd>& a);

struct DualityResult {
  double norm_sq;
  double adjoint_norm_sq;
  double bound;  // max row abs-sum of C^* C
};
DualityResult duality_check(const Eigen::MatrixXcd& C, u64 seed = 0);

// (N + Q^2) / L with L over squarefree d <= Q. Primes absent from delta
// are not sieved.
mpq_class classical_sieve_L(double Q, const std::map<u64, mpq_class>& delta);
double classical_sieve_bound(double N, double Q, const std::map<u64, mpq_class>& delta);

enum class Regime { kUnconditional, kGRH, kGRHAHC };

struct BoundEvaluation {
  double value;
  std::string label;  // always marks the value as heuristic
};

// c_abs stands in for the unspecified implied constants.
BoundEvaluation frobenius_bound_evaluator(double x, double Q, double r, double s, double L, Regime regime,
                                          double c_abs = 1.0, double B = 1.0);

}  // namespace galsieve

#endif  // GALSIEVE_SIEVE_HPP_

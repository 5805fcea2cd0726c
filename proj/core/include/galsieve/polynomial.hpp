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

#ifndef GALSIEVE_POLYNOMIAL_HPP_
#define GALSIEVE_POLYNOMIAL_HPP_

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "galsieve/modarith.hpp"
#include "galsieve/numbers.hpp"

namespace galsieve {

// Polynomial over Z, coefficients lowest degree first. The zero polynomial
// has an empty coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(int degree, const mpz_class& c = 1);
  static IntPolynomial from_roots(const std::vector<mpz_class>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<mpz_class>& coefficients() const { return c_; }
  mpz_class coeff(int i) const;
  const mpz_class& leading() const;

  IntPolynomial derivative() const;
  mpz_class eval(const mpz_class& x) const;
  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const mpz_class& k, const IntPolynomial& a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Polynomial over F_ell with coefficients in [0, ell).
class ModPolynomial {
 public:
  ModPolynomial() = default;
  ModPolynomial(u64 modulus, std::vector<u64> coeffs);

  static ModPolynomial reduce(const IntPolynomial& f, u64 modulus);
  static ModPolynomial x(u64 modulus);
  static ModPolynomial constant(u64 modulus, u64 c);

  u64 modulus() const { return ell_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<u64>& coefficients() const { return c_; }
  u64 coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  u64 leading() const { return c_.empty() ? 0 : c_.back(); }

  ModPolynomial monic() const;
  ModPolynomial derivative() const;
  u64 eval(u64 x) const;
  std::string to_string() const;

  friend ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b);
  friend ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b);
  friend ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b);
  friend bool operator==(const ModPolynomial& a, const ModPolynomial& b) {
    return a.ell_ == b.ell_ && a.c_ == b.c_;
  }
  friend bool operator<(const ModPolynomial& a, const ModPolynomial& b);

 private:
  void trim();
  u64 ell_ = 2;
  std::vector<u64> c_;
};

// Quotient and remainder of a by a nonzero b.
void divmod(const ModPolynomial& a, const ModPolynomial& b, ModPolynomial& q, ModPolynomial& r);
ModPolynomial operator%(const ModPolynomial& a, const ModPolynomial& b);
ModPolynomial operator/(const ModPolynomial& a, const ModPolynomial& b);
ModPolynomial gcd(ModPolynomial a, ModPolynomial b);  // monic, or zero
ModPolynomial powmod(const ModPolynomial& base, u64 exp, const ModPolynomial& f);

struct ModFactor {
  ModPolynomial factor;  // monic irreducible
  int multiplicity;
};

// Factorization of f up to its leading unit, sorted by (degree, coefficients).
std::vector<ModFactor> factor_mod(const ModPolynomial& f);

bool is_separable_mod(const ModPolynomial& f);

// Degrees of the irreducible factors of a squarefree monic f, descending.
std::vector<int> factor_degrees_squarefree(const ModPolynomial& f);

// Cycle type of f mod ell, or nullopt when the reduction is inseparable.
std::optional<Partition> cycle_type_mod(const IntPolynomial& f, u64 ell);

// T^g Q(T + q/T) for Q of degree g.
IntPolynomial weil_expand(const IntPolynomial& Q, const mpz_class& q);

// The monic Q of degree g with T^g Q(T + q/T) = P, deg P = 2g.
IntPolynomial weil_q_poly(const IntPolynomial& P, const mpz_class& q);

enum class PowerRootsMethod { kNewton, kCompanion };

// prod (T - alpha_i^m) over the roots alpha_i of the monic P.
IntPolynomial power_roots_poly(const IntPolynomial& P, u64 m,
                               PowerRootsMethod method = PowerRootsMethod::kNewton);

// Resultant via Bareiss elimination of the Sylvester matrix.
mpz_class resultant(const IntPolynomial& a, const IntPolynomial& b);
mpz_class discriminant(const IntPolynomial& P);

// Whether P^(s) is separable over Q, checked through the witness orders of s.
bool power_roots_separable(const IntPolynomial& P, const mpz_class& s);

// Fraction-free determinant of a square integer matrix (row-major).
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m);

}  // namespace galsieve

#endif  // GALSIEVE_POLYNOMIAL_HPP_

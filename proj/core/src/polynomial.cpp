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

#include "galsieve/polynomial.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "galsieve/error.hpp"

namespace galsieve {

// ---------------------------------------------------------------- IntPolynomial

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::monomial(int degree, const mpz_class& c) {
  std::vector<mpz_class> v(static_cast<size_t>(degree) + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::from_roots(const std::vector<mpz_class>& roots) {
  IntPolynomial out{1};
  for (const auto& r : roots) out = out * IntPolynomial(std::vector<mpz_class>{-r, 1});
  return out;
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPolynomial::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : mpz_class(0);
}

const mpz_class& IntPolynomial::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<mpz_class> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return IntPolynomial(std::move(d));
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& a = c_[i];
    if (a == 0) continue;
    mpz_class mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << "T";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(r));
}

IntPolynomial operator*(const mpz_class& k, const IntPolynomial& a) {
  std::vector<mpz_class> r = a.c_;
  for (auto& v : r) v *= k;
  return IntPolynomial(std::move(r));
}

// ---------------------------------------------------------------- ModPolynomial

ModPolynomial::ModPolynomial(u64 modulus, std::vector<u64> coeffs) : ell_(modulus), c_(std::move(coeffs)) {
  if (ell_ < 2) throw DomainError("ModPolynomial: modulus must be >= 2");
  for (auto& v : c_) v %= ell_;
  trim();
}

ModPolynomial ModPolynomial::reduce(const IntPolynomial& f, u64 modulus) {
  std::vector<u64> c;
  mpz_class m(static_cast<unsigned long>(modulus));
  for (const auto& a : f.coefficients()) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    c.push_back(r.get_ui());
  }
  return ModPolynomial(modulus, std::move(c));
}

ModPolynomial ModPolynomial::x(u64 modulus) { return ModPolynomial(modulus, {0, 1}); }

ModPolynomial ModPolynomial::constant(u64 modulus, u64 c) { return ModPolynomial(modulus, {c}); }

void ModPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPolynomial ModPolynomial::monic() const {
  if (c_.empty()) return *this;
  u64 inv = invmod(c_.back(), ell_);
  std::vector<u64> r = c_;
  for (auto& v : r) v = mulmod(v, inv, ell_);
  return ModPolynomial(ell_, std::move(r));
}

ModPolynomial ModPolynomial::derivative() const {
  std::vector<u64> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(mulmod(c_[i], i % ell_, ell_));
  return ModPolynomial(ell_, std::move(d));
}

u64 ModPolynomial::eval(u64 xv) const {
  u64 acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = addmod(mulmod(acc, xv, ell_), *it, ell_);
  return acc;
}

std::string ModPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) os << "T";
    if (i >= 2) os << "^" << i;
  }
  os << " (mod " << ell_ << ")";
  return os.str();
}

namespace {

void check_same_field(const ModPolynomial& a, const ModPolynomial& b) {
  if (a.modulus() != b.modulus()) throw DomainError("ModPolynomial: modulus mismatch");
}

}  // namespace

ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b) {
  check_same_field(a, b);
  std::vector<u64> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = addmod(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)), a.ell_);
  return ModPolynomial(a.ell_, std::move(r));
}

ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b) {
  check_same_field(a, b);
  std::vector<u64> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = submod(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)), a.ell_);
  return ModPolynomial(a.ell_, std::move(r));
}

ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b) {
  check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return ModPolynomial(a.ell_, {});
  const u64 m = a.ell_;
  std::vector<u128> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    for (size_t j = 0; j < b.c_.size(); ++j) {
      acc[i + j] += static_cast<u128>(a.c_[i]) * b.c_[j];
      if (acc[i + j] >> 120) acc[i + j] %= m;
    }
  }
  std::vector<u64> r(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<u64>(acc[i] % m);
  return ModPolynomial(m, std::move(r));
}

bool operator<(const ModPolynomial& a, const ModPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

void divmod(const ModPolynomial& a, const ModPolynomial& b, ModPolynomial& q, ModPolynomial& r) {
  check_same_field(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const u64 m = a.modulus();
  std::vector<u64> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  const u64 inv = invmod(b.leading(), m);
  if (a.degree() < db) {
    q = ModPolynomial(m, {});
    r = a;
    return;
  }
  std::vector<u64> quo(static_cast<size_t>(a.degree() - db) + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    u64 coef = mulmod(rem[i], inv, m);
    quo[i - db] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= db; ++j) rem[i - db + j] = submod(rem[i - db + j], mulmod(coef, bc[j], m), m);
  }
  rem.resize(db);
  q = ModPolynomial(m, std::move(quo));
  r = ModPolynomial(m, std::move(rem));
}

ModPolynomial operator%(const ModPolynomial& a, const ModPolynomial& b) {
  ModPolynomial q, r;
  divmod(a, b, q, r);
  return r;
}

ModPolynomial operator/(const ModPolynomial& a, const ModPolynomial& b) {
  ModPolynomial q, r;
  divmod(a, b, q, r);
  return q;
}

ModPolynomial gcd(ModPolynomial a, ModPolynomial b) {
  while (!b.is_zero()) {
    ModPolynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ModPolynomial powmod(const ModPolynomial& base, u64 exp, const ModPolynomial& f) {
  ModPolynomial result = ModPolynomial::constant(f.modulus(), 1) % f;
  ModPolynomial b = base % f;
  while (exp > 0) {
    if (exp & 1) result = (result * b) % f;
    b = (b * b) % f;
    exp >>= 1;
  }
  return result;
}

namespace {

// Replaces every exponent i*ell by i, valid when f' = 0.
ModPolynomial pth_root(const ModPolynomial& f) {
  const u64 p = f.modulus();
  std::vector<u64> r;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) r.push_back(f.coeff(i));
  return ModPolynomial(p, std::move(r));
}

// Square-free decomposition of a monic f: pairs (g_i, i) with f = prod g_i^i.
void squarefree_rec(const ModPolynomial& f, int scale, std::vector<std::pair<ModPolynomial, int>>& out) {
  if (f.degree() < 1) return;
  ModPolynomial fp = f.derivative();
  if (fp.is_zero()) {
    squarefree_rec(pth_root(f), scale * static_cast<int>(f.modulus()), out);
    return;
  }
  ModPolynomial c = gcd(f, fp);
  ModPolynomial w = f / c;
  int i = 1;
  while (!w.is_one()) {
    ModPolynomial y = gcd(w, c);
    ModPolynomial fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * scale);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree_rec(pth_root(c.monic()), scale * static_cast<int>(f.modulus()), out);
}

// Distinct-degree factorization of a squarefree monic f: pairs (g_d, d).
std::vector<std::pair<ModPolynomial, int>> ddf(ModPolynomial f) {
  std::vector<std::pair<ModPolynomial, int>> out;
  const u64 p = f.modulus();
  const ModPolynomial x = ModPolynomial::x(p);
  ModPolynomial h = x % f;
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, p, f);
    ModPolynomial g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus) of g, a product of degree-d irreducibles.
void edf(const ModPolynomial& g, int d, std::mt19937_64& rng, std::vector<ModPolynomial>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const u64 p = g.modulus();
  while (true) {
    std::vector<u64> rc(static_cast<size_t>(g.degree()));
    for (auto& v : rc) v = rng() % p;
    ModPolynomial a(p, std::move(rc));
    if (a.degree() < 1) continue;
    ModPolynomial t;
    if (p == 2) {
      t = a % g;
      ModPolynomial acc = t;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % g;
        acc = acc + t;
      }
      t = acc;
    } else {
      // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
      ModPolynomial norm = a % g;
      ModPolynomial frob = a % g;
      for (int i = 1; i < d; ++i) {
        frob = powmod(frob, p, g);
        norm = (norm * frob) % g;
      }
      t = powmod(norm, (p - 1) / 2, g) - ModPolynomial::constant(p, 1);
    }
    ModPolynomial h = gcd(g, t);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      edf(h, d, rng, out);
      edf(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<ModFactor> factor_mod(const ModPolynomial& f) {
  if (f.is_zero()) throw DomainError("factor_mod: zero polynomial");
  std::vector<ModFactor> out;
  if (f.degree() == 0) return out;
  std::vector<std::pair<ModPolynomial, int>> sqf;
  squarefree_rec(f.monic(), 1, sqf);
  std::mt19937_64 rng(0x5eedULL);
  for (const auto& [g, mult] : sqf) {
    for (const auto& [gd, d] : ddf(g)) {
      std::vector<ModPolynomial> pieces;
      edf(gd, d, rng, pieces);
      for (auto& piece : pieces) out.push_back({std::move(piece), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const ModFactor& a, const ModFactor& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return a.factor < b.factor;
  });
  // The square-free parts are coprime, so no factor repeats; merge defensively.
  std::vector<ModFactor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().factor == fac.factor)
      merged.back().multiplicity += fac.multiplicity;
    else
      merged.push_back(std::move(fac));
  }
  return merged;
}

bool is_separable_mod(const ModPolynomial& f) {
  if (f.is_zero()) return false;
  if (f.degree() <= 0) return true;
  ModPolynomial fp = f.derivative();
  if (fp.is_zero()) return false;
  return gcd(f, fp).degree() == 0;
}

std::vector<int> factor_degrees_squarefree(const ModPolynomial& f) {
  std::vector<int> degs;
  for (const auto& [g, d] : ddf(f.monic())) {
    for (int k = 0; k < g.degree() / d; ++k) degs.push_back(d);
  }
  std::sort(degs.begin(), degs.end(), std::greater<>());
  return degs;
}

std::optional<Partition> cycle_type_mod(const IntPolynomial& f, u64 ell) {
  if (f.degree() < 1) throw DomainError("cycle_type_mod: degree must be >= 1");
  ModPolynomial fm = ModPolynomial::reduce(f, ell);
  if (fm.degree() != f.degree()) throw DomainError("cycle_type_mod: ell divides the leading coefficient");
  if (!is_separable_mod(fm)) return std::nullopt;
  return make_partition(factor_degrees_squarefree(fm));
}

// ---------------------------------------------------------------- Weil polynomials

IntPolynomial weil_expand(const IntPolynomial& Q, const mpz_class& q) {
  const int g = Q.degree();
  const IntPolynomial t2q(std::vector<mpz_class>{q, 0, 1});
  IntPolynomial out;
  IntPolynomial pw{1};
  for (int j = 0; j <= g; ++j) {
    out = out + Q.coeff(j) * (IntPolynomial::monomial(g - j) * pw);
    pw = pw * t2q;
  }
  return out;
}

IntPolynomial weil_q_poly(const IntPolynomial& P, const mpz_class& q) {
  const int n = P.degree();
  if (n < 2 || n % 2 != 0) throw DomainError("weil_q_poly: degree must be even and positive");
  const int g = n / 2;
  if (g > 3) throw DomainError("weil_q_poly: genus above 3");
  if (!P.is_monic()) throw PreconditionError("weil_q_poly: polynomial is not monic");
  for (int i = 0; i < g; ++i) {
    mpz_class qp;
    mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(g - i));
    if (P.coeff(i) != qp * P.coeff(2 * g - i)) {
      throw PreconditionError("weil_q_poly: functional equation fails for coefficient pair (" +
                              std::to_string(i) + ", " + std::to_string(2 * g - i) + ")");
    }
  }
  // Coefficient of T^(g+j) in T^(g-k) (T^2+q)^k is C(k,(k+j)/2) q^((k-j)/2).
  std::vector<mpz_class> b(static_cast<size_t>(g) + 1, 0);
  for (int j = g; j >= 0; --j) {
    mpz_class v = P.coeff(g + j);
    for (int k = j + 2; k <= g; k += 2) {
      mpz_class binom, qp;
      mpz_bin_uiui(binom.get_mpz_t(), k, (k + j) / 2);
      mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>((k - j) / 2));
      v -= b[k] * binom * qp;
    }
    b[j] = v;
  }
  IntPolynomial Q(std::move(b));
  if (!(weil_expand(Q, q) == P)) throw InvariantViolation("weil_q_poly: re-expansion mismatch");
  return Q;
}

// ---------------------------------------------------------------- power roots

namespace {

// Power sums p_1..p_K of the roots of a monic P (Newton recursion).
std::vector<mpz_class> power_sums(const IntPolynomial& P, u64 K) {
  const int n = P.degree();
  std::vector<mpz_class> e(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) e[k] = (k % 2 == 0 ? 1 : -1) * P.coeff(n - k);
  std::vector<mpz_class> p(K + 1, 0);
  for (u64 k = 1; k <= K; ++k) {
    mpz_class acc = 0;
    const u64 top = std::min<u64>(k - 1, static_cast<u64>(n));
    for (u64 i = 1; i <= top; ++i) {
      if (i % 2 == 1)
        acc += e[i] * p[k - i];
      else
        acc -= e[i] * p[k - i];
    }
    if (k <= static_cast<u64>(n)) {
      mpz_class term = e[k] * static_cast<unsigned long>(k);
      if (k % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    p[k] = acc;
  }
  return p;
}

// Monic polynomial of degree n from power sums ps[1..n].
IntPolynomial from_power_sums(const std::vector<mpz_class>& ps, int n) {
  std::vector<mpz_class> e(static_cast<size_t>(n) + 1, 0);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    mpz_class acc = 0;
    for (int i = 1; i <= k; ++i) {
      if (i % 2 == 1)
        acc += e[k - i] * ps[i];
      else
        acc -= e[k - i] * ps[i];
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(k)))
      throw InvariantViolation("power sums do not define an integer polynomial");
    e[k] = acc / k;
  }
  std::vector<mpz_class> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[n - k] = (k % 2 == 0 ? 1 : -1) * e[k];
  return IntPolynomial(std::move(c));
}

using Mat = std::vector<std::vector<mpz_class>>;

Mat matmul(const Mat& a, const Mat& b) {
  const size_t n = a.size();
  Mat r(n, std::vector<mpz_class>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

}  // namespace

IntPolynomial power_roots_poly(const IntPolynomial& P, u64 m, PowerRootsMethod method) {
  if (!P.is_monic()) throw PreconditionError("power_roots_poly: polynomial must be monic");
  if (m == 0) throw DomainError("power_roots_poly: m must be positive");
  if (P.degree() > 8) throw DomainError("power_roots_poly: degree above 8");
  const int n = P.degree();
  if (n == 0) return P;
  if (method == PowerRootsMethod::kNewton) {
    auto p = power_sums(P, m * static_cast<u64>(n));
    std::vector<mpz_class> ps(static_cast<size_t>(n) + 1, 0);
    for (int k = 1; k <= n; ++k) ps[k] = p[k * m];
    return from_power_sums(ps, n);
  }
  // Companion matrix C of P, then traces of (C^m)^k.
  Mat C(n, std::vector<mpz_class>(n, 0));
  for (int i = 1; i < n; ++i) C[i][i - 1] = 1;
  for (int i = 0; i < n; ++i) C[i][n - 1] = -P.coeff(i);
  Mat M(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i) M[i][i] = 1;
  Mat base = C;
  for (u64 e = m; e > 0; e >>= 1) {
    if (e & 1) M = matmul(M, base);
    if (e > 1) base = matmul(base, base);
  }
  std::vector<mpz_class> ps(static_cast<size_t>(n) + 1, 0);
  Mat pw = M;
  for (int k = 1; k <= n; ++k) {
    mpz_class tr = 0;
    for (int i = 0; i < n; ++i) tr += pw[i][i];
    ps[k] = tr;
    if (k < n) pw = matmul(pw, M);
  }
  return from_power_sums(ps, n);
}

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

mpz_class resultant(const IntPolynomial& a, const IntPolynomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da < 0 || db < 0) return 0;
  if (da == 0 && db == 0) return 1;
  const int n = da + db;
  std::vector<std::vector<mpz_class>> s(n, std::vector<mpz_class>(n, 0));
  for (int r = 0; r < db; ++r)
    for (int i = 0; i <= da; ++i) s[r][r + i] = a.coeff(da - i);
  for (int r = 0; r < da; ++r)
    for (int i = 0; i <= db; ++i) s[db + r][r + i] = b.coeff(db - i);
  return bareiss_determinant(std::move(s));
}

mpz_class discriminant(const IntPolynomial& P) {
  const int n = P.degree();
  if (n < 1) throw DomainError("discriminant: degree must be >= 1");
  if (n == 1) return 1;
  mpz_class r = resultant(P, P.derivative());
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), P.leading().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

bool power_roots_separable(const IntPolynomial& P, const mpz_class& s) {
  const int n = P.degree();
  if (n <= 1) return true;
  for (u64 k : stability_witness_orders(n, s)) {
    if (discriminant(power_roots_poly(P, k)) == 0) return false;
  }
  return true;
}

}  // namespace galsieve

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

#include "galsieve/curves.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <unordered_map>

#include "galsieve/error.hpp"

namespace galsieve {

namespace {

std::vector<u64> prime_divisors(mpz_class n) {
  if (n == 0) throw DomainError("singular curve: discriminant is zero");
  if (n < 0) n = -n;
  std::vector<u64> out;
  for (u64 p = 2; mpz_class(p) * p <= n; ++p) {
    if (p > 100000000ULL) throw CapacityError("discriminant has a large cofactor");
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.push_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
  }
  if (n > 1) {
    if (!n.fits_ulong_p()) throw CapacityError("discriminant prime factor exceeds 64 bits");
    out.push_back(n.get_ui());
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Affine Weierstrass arithmetic on y^2 = x^3 + a x + b over F_p.
struct Pt {
  u64 x = 0, y = 0;
  bool inf = true;
};

struct Ec {
  u64 a, b, p;

  Pt add(const Pt& P, const Pt& Q) const {
    if (P.inf) return Q;
    if (Q.inf) return P;
    u64 lam;
    if (P.x == Q.x) {
      if (addmod(P.y, Q.y, p) == 0) return {};
      u64 num = addmod(mulmod(3, mulmod(P.x, P.x, p), p), a, p);
      lam = mulmod(num, invmod(addmod(P.y, P.y, p), p), p);
    } else {
      lam = mulmod(submod(Q.y, P.y, p), invmod(submod(Q.x, P.x, p), p), p);
    }
    u64 x3 = submod(submod(mulmod(lam, lam, p), P.x, p), Q.x, p);
    u64 y3 = submod(mulmod(lam, submod(P.x, x3, p), p), P.y, p);
    return {x3, y3, false};
  }

  Pt neg(const Pt& P) const { return P.inf ? P : Pt{P.x, (p - P.y) % p, false}; }

  Pt mul(Pt P, u64 k) const {
    Pt R;
    while (k) {
      if (k & 1) R = add(R, P);
      P = add(P, P);
      k >>= 1;
    }
    return R;
  }

  Pt random_point(std::mt19937_64& rng) const {
    std::uniform_int_distribution<u64> d(0, p - 1);
    for (;;) {
      u64 x = d(rng);
      u64 rhs = addmod(addmod(mulmod(mulmod(x, x, p), x, p), mulmod(a, x, p), p), b, p);
      if (rhs == 0) return {x, 0, false};
      if (legendre(static_cast<i64>(rhs), p) == 1) return {x, sqrtmod(rhs, p), false};
    }
  }

  // Order of P, given that it divides some integer in [lo, hi].
  u64 point_order(const Pt& P, u64 lo, u64 hi) const {
    const u64 width = hi - lo + 1;
    const u64 m = isqrt(width) + 1;
    std::unordered_map<u64, std::vector<u64>> baby;  // x -> j with jP = (x, .)
    Pt J;
    std::vector<Pt> bp(m + 1);
    for (u64 j = 0; j <= m; ++j) {
      bp[j] = J;
      if (!J.inf) baby[J.x].push_back(j);
      J = add(J, P);
    }
    const Pt step = mul(P, 2 * m + 1);
    Pt G = mul(P, lo + m);  // giant i covers [lo + i(2m+1), lo + i(2m+1) + 2m]
    std::optional<u64> found;
    for (u64 i = 0; !found && lo + i * (2 * m + 1) <= hi + m; ++i) {
      const u64 centre = lo + m + i * (2 * m + 1);
      if (G.inf) {
        found = centre;
        break;
      }
      auto it = baby.find(G.x);
      if (it != baby.end()) {
        for (u64 j : it->second) {
          // G = centre P; G == jP -> (centre - j)P = O, G == -jP -> (centre + j)P = O.
          if (bp[j].y == G.y && centre > j) {
            found = centre - j;
            break;
          }
          if (bp[j].y != G.y) {
            found = centre + j;
            break;
          }
        }
      }
      G = add(G, step);
    }
    if (!found) throw InvariantViolation("point order search left the Hasse interval");
    u64 n = *found;
    for (const auto& [q, e] : factorize(n)) {
      (void)e;
      while (n % q == 0 && mul(P, n / q).inf) n /= q;
    }
    return n;
  }
};

u64 lcm_u64(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

// Unique multiple of L in [lo, hi], if any.
std::optional<u64> unique_multiple(u64 L, u64 lo, u64 hi) {
  u64 first = (lo + L - 1) / L * L;
  if (first > hi) return std::nullopt;
  if (first + L <= hi) return std::nullopt;
  return first;
}

}  // namespace

EllipticCurveQ::EllipticCurveQ(i64 a, i64 b) : a_(a), b_(b) {
  mpz_class A(static_cast<long>(a)), B(static_cast<long>(b));
  disc_ = -16 * (4 * A * A * A + 27 * B * B);
  bad_ = prime_divisors(disc_);
}

bool EllipticCurveQ::is_good(u64 p) const {
  return p > 2 && !std::binary_search(bad_.begin(), bad_.end(), p);
}

i64 ap_character_sum(const EllipticCurveQ& E, u64 p) {
  if (!E.is_good(p) || !is_prime(p)) throw DomainError("ap: p must be an odd prime of good reduction");
  const auto chi = legendre_table(p);
  const u64 a = reduce_signed(E.a(), p), b = reduce_signed(E.b(), p);
  i64 s = 0;
  for (u64 x = 0; x < p; ++x) {
    u64 r = addmod(addmod(mulmod(mulmod(x, x, p), x, p), mulmod(a, x, p), p), b, p);
    s += chi[r];
  }
  return -s;
}

u64 group_order(const EllipticCurveQ& E, u64 p) {
  if (!E.is_good(p) || !is_prime(p)) throw DomainError("group_order: p must be an odd prime of good reduction");
  if (p < 1000) return static_cast<u64>(static_cast<i64>(p) + 1 - ap_character_sum(E, p));
  const u64 a = reduce_signed(E.a(), p), b = reduce_signed(E.b(), p);
  u64 d = 2;
  while (legendre(static_cast<i64>(d), p) != -1) ++d;
  const Ec e{a, b, p};
  const u64 d2 = mulmod(d, d, p);
  const Ec tw{mulmod(a, d2, p), mulmod(b, mulmod(d2, d, p), p), p};
  const u64 r = 2 * isqrt(p) + 2;
  const u64 lo = p + 1 - r, hi = p + 1 + r;
  std::mt19937_64 rng(0x5eedULL ^ p);
  u64 L = 1, Lt = 1;
  for (int round = 0; round < 64; ++round) {
    L = lcm_u64(L, e.point_order(e.random_point(rng), lo, hi));
    if (auto m = unique_multiple(L, lo, hi)) return *m;
    Lt = lcm_u64(Lt, tw.point_order(tw.random_point(rng), lo, hi));
    if (auto m = unique_multiple(Lt, lo, hi)) return 2 * p + 2 - *m;
  }
  return static_cast<u64>(static_cast<i64>(p) + 1 - ap_character_sum(E, p));
}

i64 ap_bsgs(const EllipticCurveQ& E, u64 p) {
  return static_cast<i64>(p) + 1 - static_cast<i64>(group_order(E, p));
}

i64 ap(const EllipticCurveQ& E, u64 p) { return ap_bsgs(E, p); }

// ---------------------------------------------------------------- genus 2

Genus2CurveQ::Genus2CurveQ(IntPolynomial f) : f_(std::move(f)) {
  if (f_.degree() != 5 && f_.degree() != 6) throw DomainError("genus 2 curve needs deg f in {5, 6}");
  disc_ = galsieve::discriminant(f_);
  if (disc_ == 0) throw DomainError("genus 2 curve: f is not squarefree");
  auto bad = prime_divisors(disc_);
  for (u64 q : prime_divisors(f_.leading())) bad.push_back(q);
  bad.push_back(2);
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  bad_ = std::move(bad);
}

bool Genus2CurveQ::is_good(u64 p) const {
  return p > 2 && !std::binary_search(bad_.begin(), bad_.end(), p);
}

namespace {

// F_{p^2} = F_p[i]/(i^2 - r), r a non-residue.
struct Fp2 {
  u64 p, r;
  using E = std::pair<u64, u64>;
  E mul(E a, E b) const {
    return {addmod(mulmod(a.first, b.first, p), mulmod(r, mulmod(a.second, b.second, p), p), p),
            addmod(mulmod(a.first, b.second, p), mulmod(a.second, b.first, p), p)};
  }
  u64 norm(E a) const {
    return submod(mulmod(a.first, a.first, p), mulmod(r, mulmod(a.second, a.second, p), p), p);
  }
};

std::vector<u64> reduce_coeffs(const IntPolynomial& f, u64 p) {
  std::vector<u64> c(f.degree() + 1);
  for (int i = 0; i <= f.degree(); ++i) {
    mpz_class v = f.coeff(i) % p;
    if (v < 0) v += p;
    c[i] = v.get_ui();
  }
  return c;
}

u64 infinity_points_fp(const std::vector<u64>& c, u64 p) {
  if (c.size() == 6) return 1;
  return 1 + legendre(static_cast<i64>(c.back()), p);
}

u64 count_n1(const std::vector<u64>& c, u64 p) {
  const auto chi = legendre_table(p);
  const ModPolynomial f(p, c);
  i64 n = 0;
  for (u64 x = 0; x < p; ++x) n += 1 + chi[f.eval(x)];
  return static_cast<u64>(n) + infinity_points_fp(c, p);
}

// h_0..h_{count-1} of g^k mod p via g h' = k g' h; needs g_0 != 0 and count <= p.
std::vector<u64> power_series_coeffs(const std::vector<u64>& g, u64 k, u64 p, size_t count) {
  std::vector<u64> h(count, 0);
  h[0] = powmod(g[0], k, p);
  const u64 inv_g0 = invmod(g[0], p);
  const u64 kk = k % p;
  std::vector<u64> inv(count + 1, 1);  // inv[i] = -(p / i) inv[p mod i]
  for (size_t i = 2; i <= count && i < p; ++i) inv[i] = mulmod(p - p / i, inv[p % i], p);
  for (size_t n = 0; n + 1 < count; ++n) {
    // g0 (n+1) h_{n+1} = - sum_{i>=1} g_i (n+1-i-k i) h_{n+1-i}
    u64 acc = 0;
    for (size_t i = 1; i < g.size() && i <= n + 1; ++i) {
      const u64 coef = submod(reduce_signed(static_cast<i64>(n + 1) - static_cast<i64>(i), p), mulmod(kk, i % p, p), p);
      acc = addmod(acc, mulmod(mulmod(g[i], coef, p), h[n + 1 - i], p), p);
    }
    h[n + 1] = mulmod(submod(0, acc, p), mulmod(inv_g0, inv[n + 1], p), p);
  }
  return h;
}

// Coefficients of f(x + t).
std::vector<u64> translate(const std::vector<u64>& c, u64 t, u64 p) {
  std::vector<u64> out(c.size(), 0);
  // Horner in the shifted variable.
  for (size_t i = c.size(); i-- > 0;) {
    std::vector<u64> next(c.size(), 0);
    for (size_t j = 0; j + 1 < c.size(); ++j) {
      next[j + 1] = addmod(next[j + 1], out[j], p);
      next[j] = addmod(next[j], mulmod(out[j], t, p), p);
    }
    next[0] = addmod(next[0], c[i], p);
    out = std::move(next);
  }
  return out;
}

// Hasse-Witt trace and determinant mod p.
std::pair<u64, u64> hasse_witt(std::vector<u64> c, u64 p) {
  const ModPolynomial f(p, c);
  u64 t = 0;
  while (t < p && f.eval(t) == 0) ++t;
  if (t == p) throw DomainError("hasse_witt: f vanishes on F_p");
  c = translate(c, t, p);
  const size_t d = c.size() - 1;
  const u64 k = (p - 1) / 2;
  const auto low = power_series_coeffs(c, k, p, p);
  std::vector<u64> rev(c.rbegin(), c.rend());
  if (rev[0] == 0) throw DomainError("hasse_witt: leading coefficient vanishes mod p");
  const auto high = power_series_coeffs(rev, k, p, p);
  const size_t top = d * k;
  auto coef = [&](size_t n) -> u64 {
    if (n > top) return 0;
    if (n < p) return low[n];
    const size_t m = top - n;
    if (m < p) return high[m];
    throw InvariantViolation("hasse_witt: coefficient out of reach");
  };
  const u64 a11 = coef(p - 1), a12 = coef(p - 2), a21 = coef(2 * p - 1), a22 = coef(2 * p - 2);
  return {addmod(a11, a22, p), submod(mulmod(a11, a22, p), mulmod(a12, a21, p), p)};
}

// Mumford representation on y^2 = F(x), F monic of degree 5.
struct Divisor {
  ModPolynomial u, v;
};

void xgcd(const ModPolynomial& a, const ModPolynomial& b, ModPolynomial& g, ModPolynomial& s, ModPolynomial& t) {
  const u64 p = a.modulus();
  ModPolynomial r0 = a, r1 = b, s0 = ModPolynomial::constant(p, 1), s1 = ModPolynomial::constant(p, 0),
                t0 = ModPolynomial::constant(p, 0), t1 = ModPolynomial::constant(p, 1);
  while (!r1.is_zero()) {
    ModPolynomial q, r;
    divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPolynomial s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    g = r0;
    s = s0;
    t = t0;
    return;
  }
  const u64 inv = invmod(r0.leading(), p);
  const auto k = ModPolynomial::constant(p, inv);
  g = k * r0;
  s = k * s0;
  t = k * t0;
}

struct Jacobian {
  ModPolynomial F;

  Divisor zero() const { return {ModPolynomial::constant(F.modulus(), 1), ModPolynomial::constant(F.modulus(), 0)}; }

  Divisor add(const Divisor& A, const Divisor& B) const {
    ModPolynomial d1, e1, e2, d, c1, c2;
    xgcd(A.u, B.u, d1, e1, e2);
    xgcd(d1, A.v + B.v, d, c1, c2);
    const ModPolynomial s1 = c1 * e1, s2 = c1 * e2, s3 = c2;
    ModPolynomial u = (A.u * B.u) / (d * d);
    ModPolynomial v = ((s1 * A.u * B.v + s2 * B.u * A.v + s3 * (A.v * B.v + F)) / d) % u;
    while (u.degree() > 2) {
      ModPolynomial u2 = (F - v * v) / u;
      ModPolynomial v2 = (ModPolynomial::constant(F.modulus(), 0) - v) % u2;
      u = std::move(u2);
      v = std::move(v2);
    }
    const u64 inv = invmod(u.leading(), F.modulus());
    u = ModPolynomial::constant(F.modulus(), inv) * u;
    return {u, v % u};
  }

  Divisor mul(Divisor D, u64 k) const {
    Divisor R = zero();
    while (k) {
      if (k & 1) R = add(R, D);
      D = add(D, D);
      k >>= 1;
    }
    return R;
  }

  static bool is_zero(const Divisor& D) { return D.u.is_one(); }

  Divisor random_divisor(std::mt19937_64& rng) const {
    const u64 p = F.modulus();
    std::uniform_int_distribution<u64> dist(0, p - 1);
    auto point = [&]() -> Divisor {
      for (;;) {
        u64 x = dist(rng);
        u64 y2 = F.eval(x);
        if (y2 != 0 && legendre(static_cast<i64>(y2), p) != 1) continue;
        u64 y = y2 == 0 ? 0 : sqrtmod(y2, p);
        if (dist(rng) & 1) y = (p - y) % p;
        return {ModPolynomial(p, {(p - x) % p, 1}), ModPolynomial::constant(p, y)};
      }
    };
    return add(point(), point());
  }
};

// Monic quintic model of y^2 = f(x) over F_p, or nullopt for a sextic
// without an F_p-rational root.
std::optional<ModPolynomial> quintic_model(const std::vector<u64>& c, u64 p) {
  std::vector<u64> q = c;
  if (q.size() == 7) {
    const ModPolynomial f(p, c);
    u64 r = 0;
    while (r < p && f.eval(r) != 0) ++r;
    if (r == p) return std::nullopt;
    // u^6 f(r + 1/u): coefficient of u^(6-i) in f(r + x) read backwards.
    auto g = translate(c, r, p);  // g_0 = f(r) = 0
    q.assign(6, 0);
    for (int i = 1; i <= 6; ++i) q[6 - i] = g[i];
  }
  // X = c5 x, Y = c5^2 y makes the model monic.
  const u64 lead = q[5];
  u64 pw = 1;
  std::vector<u64> m(6);
  for (int i = 5; i >= 0; --i) {
    m[i] = mulmod(q[i], pw, p);
    pw = mulmod(pw, lead, p);
  }
  const u64 inv = invmod(m[5], p);
  for (auto& x : m) x = mulmod(x, inv, p);
  return ModPolynomial(p, m);
}

}  // namespace

PointCounts count_points_g2_direct(const Genus2CurveQ& C, u64 p) {
  if (!C.is_good(p) || !is_prime(p)) throw DomainError("count_points_g2: p must be an odd prime of good reduction");
  const auto c = reduce_coeffs(C.f(), p);
  const auto chi = legendre_table(p);
  u64 r = 2;
  while (legendre(static_cast<i64>(r), p) != -1) ++r;
  const Fp2 K{p, r};
  u64 n2 = 0;
  for (u64 a = 0; a < p; ++a) {
    for (u64 b = 0; b < p; ++b) {
      Fp2::E x{a, b}, acc{c.back(), 0};
      for (size_t i = c.size() - 1; i-- > 0;) {
        acc = K.mul(acc, x);
        acc.first = addmod(acc.first, c[i], p);
      }
      if (acc.first == 0 && acc.second == 0) {
        n2 += 1;
      } else {
        n2 += chi[K.norm(acc)] == 1 ? 2 : 0;
      }
    }
  }
  n2 += c.size() == 6 ? 1 : 2;
  return {count_n1(c, p), n2};
}

PointCounts count_points_g2(const Genus2CurveQ& C, u64 p) {
  if (!C.is_good(p) || !is_prime(p)) throw DomainError("count_points_g2: p must be an odd prime of good reduction");
  if (p < 13) return count_points_g2_direct(C, p);
  const auto c = reduce_coeffs(C.f(), p);
  const u64 n1 = count_n1(c, p);
  const i64 P = static_cast<i64>(p);
  const i64 s1 = P + 1 - static_cast<i64>(n1);
  const auto [tr, det] = hasse_witt(c, p);
  if (reduce_signed(s1, p) != tr) throw InvariantViolation("Hasse-Witt trace disagrees with N1");
  // 2 sqrt(p)|s1| - 2p <= s2 <= s1^2/4 + 2p
  const double sp = std::sqrt(static_cast<double>(p));
  const i64 lo = static_cast<i64>(std::floor(2 * sp * std::abs(static_cast<double>(s1)))) - 2 * P - 1;
  const i64 hi = s1 * s1 / 4 + 2 * P + 1;
  std::vector<i64> cand;
  for (i64 s2 = lo + static_cast<i64>((det + p - reduce_signed(lo, p)) % p); s2 <= hi; s2 += P)
    cand.push_back(s2);
  auto to_counts = [&](i64 s2) {
    const i64 n2 = P * P + 1 - (s1 * s1 - 2 * s2);
    return PointCounts{n1, static_cast<u64>(n2)};
  };
  if (cand.size() == 1) return to_counts(cand[0]);
  if (auto F = quintic_model(c, p)) {
    const Jacobian J{*F};
    std::mt19937_64 rng(0x5eedULL ^ p);
    for (int round = 0; round < 16 && cand.size() > 1; ++round) {
      const Divisor D = J.random_divisor(rng);
      std::vector<i64> keep;
      for (i64 s2 : cand) {
        const i64 order = 1 - s1 + s2 - P * s1 + P * P;  // P(1)
        if (order > 0 && Jacobian::is_zero(J.mul(D, static_cast<u64>(order)))) keep.push_back(s2);
      }
      cand = std::move(keep);
    }
    if (cand.size() == 1) return to_counts(cand[0]);
  }
  return count_points_g2_direct(C, p);
}

// ---------------------------------------------------------------- Weil polys

bool WeilPolynomial::satisfies_functional_equation() const {
  const int d = P.degree();
  if (d < 0 || d % 2 != 0 || !P.is_monic()) return false;
  const int g = d / 2;
  for (int i = 0; i <= d; ++i) {
    const int e = g - i;
    if (e >= 0) {
      mpz_class qe;
      mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), e);
      if (P.coeff(i) != qe * P.coeff(d - i)) return false;
    }
  }
  return true;
}

WeilPolynomial frobenius_poly_g1(i64 a_p, u64 p) {
  const mpz_class q(static_cast<unsigned long>(p));
  return {IntPolynomial(std::vector<mpz_class>{q, mpz_class(static_cast<long>(-a_p)), mpz_class(1)}), q};
}

WeilPolynomial frobenius_poly_g2(const PointCounts& counts, u64 p) {
  const mpz_class q(static_cast<unsigned long>(p));
  const mpz_class s1 = q + 1 - mpz_class(static_cast<unsigned long>(counts.n1));
  const mpz_class twice = s1 * s1 - (q * q + 1 - mpz_class(static_cast<unsigned long>(counts.n2)));
  if (!mpz_even_p(twice.get_mpz_t())) throw DataCorruptionError("frobenius_poly_g2: N1, N2 give a non-integral s2");
  const mpz_class s2 = twice / 2;
  return {IntPolynomial(std::vector<mpz_class>{q * q, -q * s1, s2, -s1, mpz_class(1)}), q};
}

bool hasse_ok(i64 a_p, u64 p) {
  return static_cast<double>(a_p) * static_cast<double>(a_p) <= 4.0 * static_cast<double>(p);
}

bool weil_ok(const PointCounts& counts, u64 p) {
  const double P = static_cast<double>(p);
  const double e1 = static_cast<double>(counts.n1) - P - 1;
  const double e2 = static_cast<double>(counts.n2) - P * P - 1;
  return e1 * e1 <= 16 * P + 1e-9 && std::abs(e2) <= 4 * P + 1e-9;
}

}  // namespace galsieve

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

// Independent reference implementations used only by the tests. Each one is
// deliberately naive and shares no code with the library.
#ifndef GALSIEVE_TESTS_ORACLES_HPP_
#define GALSIEVE_TESTS_ORACLES_HPP_

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline std::vector<u64> eratosthenes(u64 n) {
  std::vector<bool> comp(n + 1, false);
  std::vector<u64> out;
  for (u64 i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= n; j += i) comp[j] = true;
  }
  return out;
}

inline bool trial_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> f;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

// phi by counting coprime residues.
inline u64 phi_count(u64 n) {
  u64 c = 0;
  for (u64 k = 1; k <= n; ++k) {
    u64 a = k, b = n;
    while (b) {
      a %= b;
      std::swap(a, b);
    }
    if (a == 1) ++c;
  }
  return c;
}

inline int mobius_trial(u64 n) {
  int s = 1;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      s = -s;
    }
  if (n > 1) s = -s;
  return s;
}

// Partition count p(n) via the recurrence p(n, k) over largest part <= k.
inline u64 partition_count(int n) {
  std::vector<std::vector<u64>> t(n + 1, std::vector<u64>(n + 1, 0));
  for (int k = 0; k <= n; ++k) t[0][k] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= n; ++k) t[m][k] = t[m][k - 1] + (m >= k ? t[m - k][k] : 0);
  return t[n][n];
}

// Composite Simpson on integral_{log 2}^{log x} e^u / u du.
inline long double li_simpson(long double x, int n = 400000) {
  const long double a = std::log(2.0L), b = std::log(x);
  const long double h = (b - a) / n;
  auto f = [](long double u) { return std::exp(u) / u; };
  long double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4 : 2);
  return s * h / 3;
}

// #E(F_p) including infinity by enumerating all (x, y).
inline u64 count_points_naive(i64 a, i64 b, u64 p) {
  std::vector<u64> sq(p, 0);
  for (u64 y = 0; y < p; ++y) ++sq[y * y % p];
  const i64 P = static_cast<i64>(p);
  u64 n = 1;
  for (i64 x = 0; x < P; ++x) {
    i64 r = ((x * x % P) * x + (a % P + P) % P * x + (b % P + P)) % P;
    n += sq[static_cast<u64>(r)];
  }
  return n;
}

// Affine count of y^2 = f(x) over F_p plus the points at infinity of the
// smooth model (1 for odd degree, 1 + legendre(lead) for even degree).
inline u64 count_g2_naive(const std::vector<i64>& f_low, u64 p) {
  std::vector<u64> sq(p, 0);
  for (u64 y = 0; y < p; ++y) ++sq[y * y % p];
  const i64 P = static_cast<i64>(p);
  u64 n = 0;
  for (i64 x = 0; x < P; ++x) {
    i64 v = 0;
    for (size_t i = f_low.size(); i-- > 0;) v = ((v * x + f_low[i]) % P + P) % P;
    n += sq[static_cast<u64>(v)];
  }
  const int deg = static_cast<int>(f_low.size()) - 1;
  if (deg % 2 == 1) return n + 1;
  const u64 lead = static_cast<u64>((f_low.back() % P + P) % P);
  return n + (sq[lead] ? 2 : 0);
}

// #C(F_{p^2}) for y^2 = f(x) by enumerating x in F_p[i]/(i^2 - n), n a
// nonsquare; z != 0 is a square in F_{p^2} iff its norm is a square in F_p.
inline u64 count_g2_naive_p2(const std::vector<i64>& f_low, u64 p) {
  std::vector<int> chi(p, -1);
  chi[0] = 0;
  for (u64 y = 1; y < p; ++y) chi[y * y % p] = 1;
  u64 n = 2;
  while (chi[n] != -1) ++n;
  std::vector<u64> c;
  for (i64 v : f_low) c.push_back(static_cast<u64>((v % static_cast<i64>(p) + static_cast<i64>(p)) % static_cast<i64>(p)));
  u64 count = 0;
  for (u64 a = 0; a < p; ++a)
    for (u64 b = 0; b < p; ++b) {
      // Horner in F_{p^2}: (u + v i)
      u64 u = 0, v = 0;
      for (size_t k = c.size(); k-- > 0;) {
        const u64 nu = (u * a + v * b % p * n) % p;
        const u64 nv = (u * b + v * a) % p;
        u = (nu + c[k]) % p;
        v = nv;
      }
      const u64 norm = (u * u % p + p - n * (v * v % p) % p) % p;
      if (u == 0 && v == 0) count += 1;
      else count += chi[norm] == 1 ? 2 : 0;
    }
  const int deg = static_cast<int>(f_low.size()) - 1;
  return count + (deg % 2 == 1 ? 1 : 2);
}

// Bitwise CRC-64/XZ (reflected, poly 0x42F0E1EBA9EA3693).
inline u64 crc64_bitwise(const void* data, size_t n) {
  const u64 poly = 0xC96C5795D7870F42ull;  // reflected
  u64 crc = ~0ull;
  auto* b = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    crc ^= b[i];
    for (int k = 0; k < 8; ++k) crc = (crc & 1) ? (crc >> 1) ^ poly : crc >> 1;
  }
  return ~crc;
}

// 2x2 matrices over F_q as (a, b, c, d).
using M2 = std::array<u64, 4>;

inline std::vector<M2> gl2_elements(u64 q) {
  std::vector<M2> out;
  for (u64 a = 0; a < q; ++a)
    for (u64 b = 0; b < q; ++b)
      for (u64 c = 0; c < q; ++c)
        for (u64 d = 0; d < q; ++d)
          if ((a * d + q * q - b * c) % q) out.push_back({a, b, c, d});
  return out;
}

inline M2 mul(const M2& x, const M2& y, u64 q) {
  return {(x[0] * y[0] + x[1] * y[2]) % q, (x[0] * y[1] + x[1] * y[3]) % q, (x[2] * y[0] + x[3] * y[2]) % q,
          (x[2] * y[1] + x[3] * y[3]) % q};
}

// Number of conjugacy classes of GL2(F_q) as the average number of fixed
// points of conjugation (Burnside): |G^#| = |{(g, h) : gh = hg}| / |G|.
inline u64 gl2_class_count_burnside(u64 q) {
  const auto G = gl2_elements(q);
  u64 commuting = 0;
  for (const auto& g : G)
    for (const auto& h : G)
      if (mul(g, h, q) == mul(h, g, q)) ++commuting;
  return commuting / G.size();
}

// Squarefree n <= Q as lists of prime factors.
inline std::vector<std::vector<u64>> squarefree_up_to(u64 Q) {
  std::vector<std::vector<u64>> out;
  for (u64 n = 1; n <= Q; ++n) {
    if (mobius_trial(n) == 0) continue;
    out.push_back(distinct_prime_factors(n));
  }
  return out;
}

// Polynomial with the given integer roots, low degree first.
inline std::vector<mpz_class> from_roots(const std::vector<mpz_class>& roots) {
  std::vector<mpz_class> c{1};
  for (const auto& r : roots) {
    std::vector<mpz_class> n(c.size() + 1, 0);
    for (size_t i = 0; i < c.size(); ++i) {
      n[i + 1] += c[i];
      n[i] -= r * c[i];
    }
    c = n;
  }
  return c;
}

// Largest eigenvalue of a Hermitian matrix by Jacobi-free brute force: the
// maximum of the Rayleigh quotient over many power steps in long double.
template <typename Mat>
double dense_top_eigenvalue(const Mat& H, int iters = 5000) {
  const size_t n = H.size();
  std::vector<std::complex<long double>> v(n, 1), w(n);
  for (size_t i = 0; i < n; ++i) v[i] = {1.0L + 0.001L * i, 0.0005L * i};
  long double lambda = 0;
  for (int it = 0; it < iters; ++it) {
    for (size_t i = 0; i < n; ++i) {
      w[i] = 0;
      for (size_t j = 0; j < n; ++j) w[i] += std::complex<long double>(H[i][j]) * v[j];
    }
    long double norm = 0;
    for (auto& x : w) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm == 0) return 0;
    lambda = norm;
    for (size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
  }
  return static_cast<double>(lambda);
}

}  // namespace oracle

#endif  // GALSIEVE_TESTS_ORACLES_HPP_

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

#include "galsieve/numbers.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <cmath>
#include <functional>

#include "galsieve/error.hpp"

namespace galsieve {

namespace {

constexpr double kMaxSieveBound = 281474976710656.0;  // 2^48
constexpr u64 kSegment = 1u << 18;

std::vector<u64> simple_sieve(u64 n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<u64> out;
  for (u64 i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::vector<u64> primes_up_to(double x) {
  if (!(x >= 2)) return {};
  if (x > kMaxSieveBound) throw CapacityError("primes_up_to: bound exceeds 2^48");
  const u64 n = static_cast<u64>(std::floor(x));
  const u64 root = isqrt(n);
  std::vector<u64> base = simple_sieve(root);
  if (n <= root) return base;

  std::vector<u64> out = base;
  std::vector<char> seg(kSegment);
  for (u64 lo = root + 1; lo <= n; lo += kSegment) {
    const u64 hi = std::min(n, lo + kSegment - 1);
    std::fill(seg.begin(), seg.begin() + (hi - lo + 1), 1);
    for (u64 p : base) {
      u64 start = std::max(p * p, (lo + p - 1) / p * p);
      for (u64 j = start; j <= hi; j += p) seg[j - lo] = 0;
    }
    for (u64 i = lo; i <= hi; ++i)
      if (seg[i - lo]) out.push_back(i);
  }
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 b : kBases) {
    if (n % b == 0) return n == b;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : kBases) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
  if (n == 0) throw DomainError("factorize: zero");
  std::vector<std::pair<u64, int>> out;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int mobius(u64 n) {
  if (n == 0) throw DomainError("mobius: n must be positive");
  int mu = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

u64 euler_phi(u64 n) {
  if (n == 0) throw DomainError("euler_phi: n must be positive");
  u64 r = n;
  for (const auto& [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

u64 psi(u64 n) {
  if (n == 0) throw DomainError("psi: n must be positive");
  u64 r = n;
  for (const auto& [p, e] : factorize(n)) r = r / p * (p + 1);
  return r;
}

std::vector<std::uint32_t> phi_table(std::uint32_t N) {
  std::vector<std::uint32_t> phi(static_cast<size_t>(N) + 1, 0);
  std::vector<std::uint32_t> primes;
  if (N >= 1) phi[1] = 1;
  for (std::uint32_t i = 2; i <= N; ++i) {
    if (phi[i] == 0) {
      phi[i] = i - 1;
      primes.push_back(i);
    }
    for (std::uint32_t p : primes) {
      u64 ip = static_cast<u64>(i) * p;
      if (ip > N) break;
      if (i % p == 0) {
        phi[ip] = phi[i] * p;
        break;
      }
      phi[ip] = phi[i] * (p - 1);
    }
  }
  return phi;
}

double log_integral(double x) {
  if (!(x >= 2)) throw DomainError("log_integral: x must be >= 2");
  if (x == 2) return 0.0;
  if (x < 4) {
    auto f = [](double t) { return 1.0 / std::log(t); };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 2.0, x, 15, 1e-15);
  }
  return boost::math::expint(std::log(x)) - boost::math::expint(std::log(2.0));
}

u64 prime_pi(double x) { return primes_up_to(x).size(); }

Partition make_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  Partition p;
  for (int v : parts) {
    if (v <= 0) throw DomainError("partition parts must be positive");
    p.total += v;
  }
  p.parts = std::move(parts);
  return p;
}

std::vector<Partition> partitions(int n) {
  if (n < 1 || n > 30) throw DomainError("partitions: n must lie in [1, 30]");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back(Partition{cur, n});
      return;
    }
    for (int k = std::min(remaining, cap); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

mpz_class stability_exponent(int n, std::optional<mpz_class> override_value) {
  if (override_value) {
    if (*override_value <= 0) throw DomainError("stability exponent override must be positive");
    return *override_value;
  }
  if (n < 2 || n > 8) throw DomainError("stability_exponent: degree must lie in [2, 8]");
  const u64 bound = static_cast<u64>(n) * n;
  mpz_class s = 1;
  // phi(k) >= sqrt(k / 2), so k <= 2 bound^2 covers every candidate.
  for (u64 k = 1; k <= 2 * bound * bound; ++k) {
    if (euler_phi(k) <= bound) mpz_lcm_ui(s.get_mpz_t(), s.get_mpz_t(), k);
  }
  return s;
}

std::vector<u64> stability_witness_orders(int n, const mpz_class& s) {
  const u64 bound = static_cast<u64>(n) * n;
  std::vector<u64> ks;
  for (u64 k = 1; k <= 2 * bound * bound; ++k) {
    if (euler_phi(k) <= bound && mpz_divisible_ui_p(s.get_mpz_t(), k)) ks.push_back(k);
  }
  std::vector<u64> maximal;
  for (u64 k : ks) {
    bool dominated = false;
    for (u64 m : ks) {
      if (m != k && m % k == 0) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(k);
  }
  return maximal;
}

double empirical_phi_cdf(std::uint32_t N, double z) {
  if (N == 0) throw DomainError("empirical_phi_cdf: N must be positive");
  if (N > 10000000u) throw CapacityError("empirical_phi_cdf: N above 10^7");
  if (z < 0 || z > 1) {
    spdlog::warn("empirical_phi_cdf: z={} clamped to [0,1]", z);
    z = std::clamp(z, 0.0, 1.0);
  }
  auto phi = phi_table(N);
  u64 count = 0;
  for (std::uint32_t n = 1; n <= N; ++n) {
    if (static_cast<double>(phi[n]) < z * static_cast<double>(n)) ++count;
  }
  return static_cast<double>(count) / N;
}

}  // namespace galsieve

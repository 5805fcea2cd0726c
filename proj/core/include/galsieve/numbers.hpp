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

#ifndef GALSIEVE_NUMBERS_HPP_
#define GALSIEVE_NUMBERS_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "galsieve/modarith.hpp"

namespace galsieve {

// Primes p <= x in ascending order (segmented sieve). Returns an empty list
// for x < 2; throws CapacityError above 2^48.
std::vector<u64> primes_up_to(double x);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(u64 n);

// Trial-division factorization, ascending primes with exponents.
std::vector<std::pair<u64, int>> factorize(u64 n);

int mobius(u64 n);
u64 euler_phi(u64 n);
u64 psi(u64 n);

// phi(n) for 0 <= n <= N by a linear sieve (phi[0] = 0).
std::vector<std::uint32_t> phi_table(std::uint32_t N);

// Li(x) = integral from 2 to x of dt / log t.
double log_integral(double x);

// pi(x) via primes_up_to.
u64 prime_pi(double x);

struct Partition {
  std::vector<int> parts;  // weakly decreasing
  int total = 0;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;
};

Partition make_partition(std::vector<int> parts);

// All partitions of n in descending lexicographic order, 1 <= n <= 30.
std::vector<Partition> partitions(int n);

// Default s(n) = lcm{k : phi(k) <= n^2}, or the override when given.
mpz_class stability_exponent(int n, std::optional<mpz_class> override_value = std::nullopt);

// Divisors k of s with phi(k) <= n^2 that are maximal under divisibility.
// P^(s) is separable iff P^(k) is separable for each returned k.
std::vector<u64> stability_witness_orders(int n, const mpz_class& s);

// |{n <= N : phi(n)/n < z}| / N. z is clamped to [0, 1].
double empirical_phi_cdf(std::uint32_t N, double z);

}  // namespace galsieve

#endif  // GALSIEVE_NUMBERS_HPP_

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

#ifndef GALSIEVE_MODARITH_HPP_
#define GALSIEVE_MODARITH_HPP_

#include <cstdint>
#include <vector>

namespace galsieve {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  if ((a | b) >> 32 == 0) return a * b % m;
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return (s >= m || s < a) ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

// Reduces a signed value into [0, m).
inline u64 reduce_signed(i64 a, u64 m) {
  i64 r = a % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

u64 powmod(u64 base, u64 exp, u64 m);

// Inverse of a modulo m; requires gcd(a, m) = 1.
u64 invmod(u64 a, u64 m);

// Legendre symbol (a / p) for an odd prime p; returns -1, 0 or 1.
int legendre(i64 a, u64 p);

// Square root of a quadratic residue modulo an odd prime (Tonelli-Shanks).
u64 sqrtmod(u64 a, u64 p);

// Smallest primitive root modulo a prime p.
u64 primitive_root(u64 p);

// Table t with t[x] = (x / p) for x in [0, p), as -1/0/1.
std::vector<std::int8_t> legendre_table(u64 p);

}  // namespace galsieve

#endif  // GALSIEVE_MODARITH_HPP_

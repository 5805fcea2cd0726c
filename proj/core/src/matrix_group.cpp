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

#include "galsieve/matrix_group.hpp"

#include <algorithm>
#include <unordered_set>

#include "galsieve/error.hpp"
#include "galsieve/numbers.hpp"

namespace galsieve {

// ---------------------------------------------------------------- SmallMatrix

SmallMatrix SmallMatrix::identity(int n, u64 p) {
  SmallMatrix m;
  m.n = n;
  m.p = p;
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

SmallMatrix SmallMatrix::from_rows(u64 p, const std::vector<std::vector<i64>>& rows) {
  SmallMatrix m;
  m.n = static_cast<int>(rows.size());
  m.p = p;
  if ((m.n != 2 && m.n != 4) || p >= 16) throw DomainError("SmallMatrix: size must be 2 or 4 and p < 16");
  for (int i = 0; i < m.n; ++i) {
    if (static_cast<int>(rows[i].size()) != m.n) throw DomainError("SmallMatrix: ragged rows");
    for (int j = 0; j < m.n; ++j) m.at(i, j) = static_cast<std::uint8_t>(reduce_signed(rows[i][j], p));
  }
  return m;
}

u64 SmallMatrix::pack() const {
  u64 key = 0;
  for (int i = 0; i < n * n; ++i) key |= static_cast<u64>(a[i]) << (4 * i);
  return key;
}

SmallMatrix SmallMatrix::unpack(u64 key, int n, u64 p) {
  SmallMatrix m;
  m.n = n;
  m.p = p;
  for (int i = 0; i < n * n; ++i) m.a[i] = static_cast<std::uint8_t>((key >> (4 * i)) & 0xF);
  return m;
}

u64 SmallMatrix::trace() const {
  u64 t = 0;
  for (int i = 0; i < n; ++i) t += at(i, i);
  return t % p;
}

namespace {

// Determinant of the principal-free submatrix on rows/cols `idx` (Laplace).
i64 minor_det(const SmallMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  const size_t k = rows.size();
  if (k == 0) return 1;
  if (k == 1) return m.at(rows[0], cols[0]);
  i64 acc = 0;
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < k; ++j) {
    std::vector<int> sub_cols;
    for (size_t c = 0; c < k; ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    i64 term = m.at(rows[0], cols[j]) * minor_det(m, sub_rows, sub_cols);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace

u64 SmallMatrix::det() const {
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  return reduce_signed(minor_det(*this, idx, idx), p);
}

ModPolynomial SmallMatrix::charpoly() const {
  // Coefficient of T^(n-k) is (-1)^k times the sum of k x k principal minors.
  std::vector<u64> c(static_cast<size_t>(n) + 1, 0);
  c[n] = 1;
  for (int k = 1; k <= n; ++k) {
    i64 sum = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (__builtin_popcount(mask) != k) continue;
      std::vector<int> idx;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) idx.push_back(i);
      sum += minor_det(*this, idx, idx);
    }
    c[n - k] = reduce_signed(k % 2 == 0 ? sum : -sum, p);
  }
  return ModPolynomial(p, std::move(c));
}

SmallMatrix operator*(const SmallMatrix& x, const SmallMatrix& y) {
  SmallMatrix r;
  r.n = x.n;
  r.p = x.p;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      unsigned s = 0;
      for (int k = 0; k < x.n; ++k) s += static_cast<unsigned>(x.at(i, k)) * y.at(k, j);
      r.at(i, j) = static_cast<std::uint8_t>(s % x.p);
    }
  return r;
}

SmallMatrix mat_pow(SmallMatrix x, u64 e) {
  SmallMatrix r = SmallMatrix::identity(x.n, x.p);
  while (e > 0) {
    if (e & 1) r = r * x;
    x = x * x;
    e >>= 1;
  }
  return r;
}

namespace {

SmallMatrix mat_inverse(const SmallMatrix& m) {
  const int n = m.n;
  const u64 p = m.p;
  std::vector<std::vector<u64>> aug(n, std::vector<u64>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = m.at(i, j);
    aug[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) throw DomainError("matrix is singular");
    std::swap(aug[piv], aug[col]);
    u64 inv = invmod(aug[col][col], p);
    for (auto& v : aug[col]) v = mulmod(v, inv, p);
    for (int r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      u64 f = aug[r][col];
      for (int j = 0; j < 2 * n; ++j) aug[r][j] = submod(aug[r][j], mulmod(f, aug[col][j], p), p);
    }
  }
  SmallMatrix r;
  r.n = n;
  r.p = p;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = static_cast<std::uint8_t>(aug[i][n + j]);
  return r;
}

}  // namespace

i64 symplectic_form(const SmallMatrix& A, int i, int j) {
  // <x,y> = x1 y3 + x2 y4 - x3 y1 - x4 y2 on columns i and j.
  auto x = [&](int r) { return static_cast<i64>(A.at(r, i)); };
  auto y = [&](int r) { return static_cast<i64>(A.at(r, j)); };
  i64 v = x(0) * y(2) + x(1) * y(3) - x(2) * y(0) - x(3) * y(1);
  return static_cast<i64>(reduce_signed(v, A.p));
}

u64 similitude_multiplier(const SmallMatrix& A) {
  if (A.n != 4) throw DomainError("similitude_multiplier: 4x4 matrices only");
  const SmallMatrix I = SmallMatrix::identity(4, A.p);
  const u64 m = static_cast<u64>(symplectic_form(A, 0, 2));
  if (m == 0) return 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      u64 lhs = static_cast<u64>(symplectic_form(A, i, j));
      u64 rhs = mulmod(m, static_cast<u64>(symplectic_form(I, i, j)), A.p);
      if (lhs != rhs) return 0;
    }
  return m;
}

// ---------------------------------------------------------------- MatrixGroup

MatrixGroup::MatrixGroup(std::string name, int n, u64 p, std::vector<u64> keys, std::vector<SmallMatrix> generators)
    : name_(std::move(name)), n_(n), p_(p), keys_(std::move(keys)) {
  identity_ = index_of(SmallMatrix::identity(n, p));
  for (const auto& g : generators) gens_.push_back(index_of(g));
  inverse_.resize(keys_.size());
  for (Elem a = 0; a < keys_.size(); ++a) inverse_[a] = index_of(mat_inverse(matrix(a)));
}

Elem MatrixGroup::index_of(const SmallMatrix& m) const {
  const u64 key = m.pack();
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) throw DomainError("MatrixGroup: matrix not in group");
  return static_cast<Elem>(it - keys_.begin());
}

Elem MatrixGroup::multiply(Elem a, Elem b) const { return index_of(matrix(a) * matrix(b)); }

// ---------------------------------------------------------------- orders

u64 gl2_order(u64 q) { return q * (q - 1) * (q - 1) * (q + 1); }
u64 sl2_order(u64 q) { return q * (q * q - 1); }

mpz_class sp_order(int g, u64 q) {
  mpz_class Q(static_cast<unsigned long>(q)), r;
  mpz_pow_ui(r.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(g * g));
  for (int i = 1; i <= g; ++i) {
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(2 * i));
    r *= t - 1;
  }
  return r;
}

mpz_class gsp_order(int g, u64 q) { return sp_order(g, q) * static_cast<unsigned long>(q - 1); }

namespace {

void check_prime_field(u64 q, u64 max_q, const char* what) {
  if (q < 2 || !is_prime(q)) throw DomainError(std::string(what) + ": q must be prime (prime powers unsupported)");
  if (q > max_q) throw CapacityError(std::string(what) + ": q beyond the enumerable range");
}

std::vector<SmallMatrix> sl2_generators(u64 q) {
  return {SmallMatrix::from_rows(q, {{1, 1}, {0, 1}}), SmallMatrix::from_rows(q, {{1, 0}, {1, 1}})};
}

MatrixGroupPtr enumerate_gl2(u64 q, bool special) {
  std::vector<u64> keys;
  for (u64 a = 0; a < q; ++a)
    for (u64 b = 0; b < q; ++b)
      for (u64 c = 0; c < q; ++c)
        for (u64 d = 0; d < q; ++d) {
          u64 det = submod(mulmod(a, d, q), mulmod(b, c, q), q);
          if (det == 0 || (special && det != 1)) continue;
          SmallMatrix m;
          m.n = 2;
          m.p = q;
          m.a = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c),
                 static_cast<std::uint8_t>(d)};
          keys.push_back(m.pack());
        }
  std::sort(keys.begin(), keys.end());
  auto gens = sl2_generators(q);
  if (!special && q > 2) {
    const auto g = static_cast<i64>(primitive_root(q));
    gens.push_back(SmallMatrix::from_rows(q, {{g, 0}, {0, 1}}));
  }
  const std::string nm = std::string(special ? "SL2(" : "GL2(") + std::to_string(q) + ")";
  return std::make_shared<MatrixGroup>(nm, 2, q, std::move(keys), std::move(gens));
}

SmallMatrix transvection(u64 q, const std::array<i64, 4>& v) {
  // T_v(x) = x + <x,v> v, i.e. I + v (J v)^T with <x,y> = x^T J y.
  const std::array<i64, 4> Jv = {v[2], v[3], -v[0], -v[1]};
  std::vector<std::vector<i64>> rows(4, std::vector<i64>(4, 0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rows[i][j] = (i == j ? 1 : 0) + v[i] * Jv[j];
  return SmallMatrix::from_rows(q, rows);
}

std::vector<SmallMatrix> symplectic_generators(u64 q, bool similitude) {
  std::vector<SmallMatrix> gens;
  for (int mask = 1; mask < 16; ++mask) {
    std::array<i64, 4> v{};
    for (int i = 0; i < 4; ++i) v[i] = mask >> i & 1;
    gens.push_back(transvection(q, v));
  }
  if (similitude && q > 2) {
    const auto g = static_cast<i64>(primitive_root(q));
    gens.push_back(SmallMatrix::from_rows(q, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, g, 0}, {0, 0, 0, g}}));
  }
  return gens;
}

MatrixGroupPtr enumerate_symplectic(u64 q, bool similitude) {
  auto gens = symplectic_generators(q, similitude);
  std::unordered_set<u64> seen;
  std::vector<SmallMatrix> frontier{SmallMatrix::identity(4, q)};
  seen.insert(frontier.front().pack());
  while (!frontier.empty()) {
    std::vector<SmallMatrix> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        SmallMatrix y = x * g;
        if (seen.insert(y.pack()).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  std::vector<u64> keys(seen.begin(), seen.end());
  std::sort(keys.begin(), keys.end());
  const mpz_class expected = similitude ? gsp_order(2, q) : sp_order(2, q);
  if (mpz_class(static_cast<unsigned long>(keys.size())) != expected)
    throw InvariantViolation("symplectic closure has unexpected order");
  const std::string nm = std::string(similitude ? "GSp4(" : "Sp4(") + std::to_string(q) + ")";
  return std::make_shared<MatrixGroup>(nm, 4, q, std::move(keys), std::move(gens));
}

}  // namespace

MatrixGroupPtr gl2(u64 q) {
  check_prime_field(q, 13, "gl2");
  return enumerate_gl2(q, false);
}

MatrixGroupPtr sl2(u64 q) {
  check_prime_field(q, 13, "sl2");
  return enumerate_gl2(q, true);
}

MatrixGroupPtr sp4(u64 q) {
  check_prime_field(q, 3, "sp4");
  return enumerate_symplectic(q, false);
}

MatrixGroupPtr gsp4(u64 q) {
  check_prime_field(q, 3, "gsp4");
  return enumerate_symplectic(q, true);
}

// ---------------------------------------------------------------- sampler

SampledGSp4::SampledGSp4(u64 q, int steps) : q_(q), steps_(steps) {
  if (q < 3 || !is_prime(q) || q > 13) throw DomainError("SampledGSp4: q must be an odd prime <= 13");
  if (steps < 1) throw DomainError("SampledGSp4: steps must be positive");
  gens_ = symplectic_generators(q, true);
}

SmallMatrix SampledGSp4::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<size_t> pick(0, gens_.size() - 1);
  SmallMatrix m = SmallMatrix::identity(4, q_);
  for (int i = 0; i < steps_; ++i) m = m * gens_[pick(rng)];
  return m;
}

void SampledGSp4::conjugacy_classes() const {
  throw UnsupportedOperation("GSp4(" + std::to_string(q_) + ") is sampling-only; class partition unavailable");
}

// ---------------------------------------------------------------- counting

u64 count_trace(u64 q, u64 t) {
  if (!is_prime(q)) throw DomainError("count_trace: q must be prime");
  const u64 nonzero = q * (q * q - q - 1);
  if (t % q != 0) return nonzero;
  return gl2_order(q) - (q - 1) * nonzero;
}

u64 count_trace_det(u64 q, u64 t, u64 d) {
  if (q < 3 || !is_prime(q)) throw DomainError("count_trace_det: q must be an odd prime");
  if (d % q == 0) throw DomainError("count_trace_det: d must be nonzero mod q");
  const i64 disc = static_cast<i64>(mulmod(t % q, t % q, q)) - 4 * static_cast<i64>(d % q);
  const int leg = legendre(disc, q);
  return q * static_cast<u64>(static_cast<i64>(q) + leg);
}

}  // namespace galsieve

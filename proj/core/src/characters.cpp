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

#include "galsieve/characters.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "galsieve/error.hpp"

namespace galsieve {

cd inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.group != g.group) throw DomainError("inner_product: class functions on different groups");
  const auto& cp = f.group->classes();
  if (f.values.size() != cp.count() || g.values.size() != cp.count())
    throw DomainError("inner_product: length differs from class count");
  cd acc = 0;
  for (size_t c = 0; c < cp.count(); ++c) acc += static_cast<double>(cp.size(c)) * f.values[c] * std::conj(g.values[c]);
  return acc / static_cast<double>(f.group->order());
}

double CharacterTable::row_orthogonality_residual() const {
  double worst = 0;
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i; j < rows.size(); ++j) {
      cd ip = inner_product(row(i), row(j));
      worst = std::max(worst, std::abs(ip - cd(i == j ? 1.0 : 0.0)));
    }
  return worst;
}

double CharacterTable::column_orthogonality_residual() const {
  const auto& cp = group->classes();
  const double order = static_cast<double>(group->order());
  double worst = 0;
  for (size_t k = 0; k < cp.count(); ++k)
    for (size_t l = k; l < cp.count(); ++l) {
      cd acc = 0;
      for (const auto& r : rows) acc += r[k] * std::conj(r[l]);
      acc *= static_cast<double>(cp.size(k)) / order;
      worst = std::max(worst, std::abs(acc - cd(k == l ? 1.0 : 0.0)));
    }
  return worst;
}

namespace {

void sort_rows(CharacterTable& t) {
  std::vector<size_t> idx(t.rows.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto key = [&](size_t i) {
    std::vector<double> k{static_cast<double>(t.degrees[i])};
    for (const auto& v : t.rows[i]) {
      k.push_back(std::round(v.real() * 1e8) / 1e8);
      k.push_back(std::round(v.imag() * 1e8) / 1e8);
    }
    return k;
  };
  auto is_trivial = [&](size_t i) {
    for (const auto& v : t.rows[i])
      if (std::abs(v - cd(1.0)) > 1e-6) return false;
    return true;
  };
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    return key(a) < key(b);
  });
  CharacterTable out{t.group, {}, {}};
  for (size_t i : idx) {
    out.rows.push_back(std::move(t.rows[i]));
    out.degrees.push_back(t.degrees[i]);
  }
  t = std::move(out);
}

}  // namespace

CharacterTable char_table_generic(const GroupPtr& G, u64 seed) {
  const auto& cp = G->classes();
  const size_t r = cp.count();
  if (r > 60) throw CapacityError("char_table_generic: more than 60 classes");
  const double order = static_cast<double>(G->order());

  // M[j](i, k) = #{x in C_j : x^-1 z_k in C_i}
  std::vector<Eigen::MatrixXd> M(r, Eigen::MatrixXd::Zero(r, r));
  for (size_t k = 0; k < r; ++k) {
    const Elem z = cp.representative(k);
    for (size_t j = 0; j < r; ++j)
      for (Elem x : cp.classes[j]) M[j](cp.class_of[G->multiply(G->inverse(x), z)], k) += 1;
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int attempt = 0; attempt < 50; ++attempt) {
    Eigen::MatrixXd comb = Eigen::MatrixXd::Zero(r, r);
    for (size_t j = 0; j < r; ++j) comb += coef(rng) * M[j];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comb.cast<cd>());
    if (es.info() != Eigen::Success) continue;
    const auto& ev = es.eigenvalues();
    double scale = 1.0;
    for (size_t i = 0; i < r; ++i) scale = std::max(scale, std::abs(ev(i)));
    bool split = true;
    for (size_t a = 0; a < r && split; ++a)
      for (size_t b = a + 1; b < r && split; ++b)
        if (std::abs(ev(a) - ev(b)) < 1e-7 * scale) split = false;
    if (!split) continue;

    CharacterTable t{G, {}, {}};
    bool ok = true;
    for (size_t e = 0; e < r && ok; ++e) {
      Eigen::VectorXcd v = es.eigenvectors().col(e);
      if (std::abs(v(0)) < 1e-12) {
        ok = false;
        break;
      }
      v /= v(0);
      double norm = 0;
      for (size_t k = 0; k < r; ++k) norm += std::norm(v(k)) / static_cast<double>(cp.size(k));
      const double degf = std::sqrt(order / norm);
      const long deg = std::lround(degf);
      if (std::abs(degf - deg) > 1e-6) {
        ok = false;
        break;
      }
      std::vector<cd> vals(r);
      for (size_t k = 0; k < r; ++k) vals[k] = static_cast<double>(deg) * v(k) / static_cast<double>(cp.size(k));
      t.rows.push_back(std::move(vals));
      t.degrees.push_back(deg);
    }
    if (!ok) continue;
    long sum_sq = 0;
    for (long d : t.degrees) sum_sq += d * d;
    if (sum_sq != static_cast<long>(G->order())) continue;
    sort_rows(t);
    return t;
  }
  throw NumericError("char_table_generic: eigenspaces did not split");
}

// ---------------------------------------------------------------- GL2(F_q)

namespace {

// F_{q^2} = F_q[i] / (i^2 - r), element x + y i stored as index y*q + x.
struct QuadraticField {
  u64 q, r;
  std::vector<u64> dlog;  // discrete log base the smallest primitive element
  u64 order() const { return q * q - 1; }

  u64 mul(u64 u, u64 v) const {
    u64 x1 = u % q, y1 = u / q, x2 = v % q, y2 = v / q;
    u64 x = addmod(mulmod(x1, x2, q), mulmod(r, mulmod(y1, y2, q), q), q);
    u64 y = addmod(mulmod(x1, y2, q), mulmod(x2, y1, q), q);
    return y * q + x;
  }

  explicit QuadraticField(u64 q_) : q(q_), r(2) {
    while (legendre(static_cast<i64>(r), q) != -1) ++r;
    dlog.assign(q * q, 0);
    for (u64 cand = 1; cand < q * q; ++cand) {
      std::vector<u64> seen(q * q, 0);
      u64 x = 1;
      u64 k = 0;
      bool full = true;
      for (; k < order(); ++k) {
        if (seen[x]) {
          full = false;
          break;
        }
        seen[x] = 1;
        dlog[x] = k;
        x = mul(x, cand);
      }
      if (full && x == 1) return;
    }
    throw InvariantViolation("QuadraticField: no primitive element");
  }
};

cd root_of_unity(u64 num, u64 den) {
  const double ang = 2.0 * std::numbers::pi * static_cast<double>(num % den) / static_cast<double>(den);
  return {std::cos(ang), std::sin(ang)};
}

}  // namespace

CharacterTable char_table_gl2(const MatrixGroupPtr& G) {
  const u64 q = G->field_size();
  if (q < 3 || G->dimension() != 2 || G->order() != gl2_order(q))
    throw DomainError("char_table_gl2: expects gl2(q) for an odd prime q");
  const auto& cp = G->classes();
  const u64 g = primitive_root(q);
  std::vector<u64> dlog_q(q, 0);
  for (u64 k = 0, x = 1; k < q - 1; ++k, x = mulmod(x, g, q)) dlog_q[x] = k;
  QuadraticField F(q);

  enum Kind { kCentral, kJordan, kSplit, kElliptic };
  struct ClassData {
    Kind kind;
    u64 a = 0, b = 0;  // eigenvalues in F_q (split: a != b)
    u64 z = 0;         // elliptic eigenvalue in F_{q^2}
  };
  const u64 inv2 = invmod(2, q);
  std::vector<ClassData> info;
  for (size_t c = 0; c < cp.count(); ++c) {
    SmallMatrix A = G->matrix(cp.representative(c));
    const u64 t = A.trace(), d = A.det();
    const i64 disc = static_cast<i64>(mulmod(t, t, q)) - 4 * static_cast<i64>(d);
    const int leg = legendre(disc, q);
    ClassData cd_;
    if (leg == 0) {
      const u64 lam = mulmod(t, inv2, q);
      cd_.kind = (A.at(0, 1) == 0 && A.at(1, 0) == 0) ? kCentral : kJordan;
      cd_.a = cd_.b = lam;
    } else if (leg == 1) {
      const u64 s = sqrtmod(reduce_signed(disc, q), q);
      cd_.kind = kSplit;
      cd_.a = mulmod(addmod(t, s, q), inv2, q);
      cd_.b = mulmod(submod(t, s, q), inv2, q);
    } else {
      const u64 y = sqrtmod(mulmod(reduce_signed(disc, q), invmod(F.r, q), q), q);
      cd_.kind = kElliptic;
      cd_.z = mulmod(y, inv2, q) * q + mulmod(t, inv2, q);
    }
    info.push_back(cd_);
  }

  const u64 qm1 = q - 1, q2m1 = q * q - 1;
  auto alpha = [&](u64 j, u64 a) { return root_of_unity(j * dlog_q[a], qm1); };
  auto theta = [&](u64 j, u64 z) { return root_of_unity(j * F.dlog[z], q2m1); };
  auto embed = [&](u64 a) { return a; };  // a + 0 i has index a
  auto conj_q = [&](u64 z) { return ((q - z / q) % q) * q + z % q; };
  auto norm = [&](u64 z) {
    u64 x = z % q, y = z / q;
    return submod(mulmod(x, x, q), mulmod(F.r, mulmod(y, y, q), q), q);
  };
  const double dq = static_cast<double>(q);

  CharacterTable t{G, {}, {}};
  auto add_row = [&](long deg, auto value_fn) {
    std::vector<cd> vals(cp.count());
    for (size_t c = 0; c < cp.count(); ++c) vals[c] = value_fn(info[c]);
    t.rows.push_back(std::move(vals));
    t.degrees.push_back(deg);
  };

  for (u64 j = 0; j < qm1; ++j) {
    add_row(1, [&](const ClassData& c) -> cd {
      if (c.kind == kElliptic) return alpha(j, norm(c.z));
      return alpha(j, c.a) * alpha(j, c.b);
    });
  }
  for (u64 j = 0; j < qm1; ++j) {
    add_row(static_cast<long>(q), [&](const ClassData& c) -> cd {
      switch (c.kind) {
        case kCentral: return dq * alpha(j, c.a) * alpha(j, c.a);
        case kJordan: return 0.0;
        case kSplit: return alpha(j, c.a) * alpha(j, c.b);
        default: return -alpha(j, norm(c.z));
      }
    });
  }
  for (u64 j1 = 0; j1 < qm1; ++j1)
    for (u64 j2 = j1 + 1; j2 < qm1; ++j2) {
      add_row(static_cast<long>(q + 1), [&](const ClassData& c) -> cd {
        switch (c.kind) {
          case kCentral: return (dq + 1) * alpha(j1, c.a) * alpha(j2, c.a);
          case kJordan: return alpha(j1, c.a) * alpha(j2, c.a);
          case kSplit: return alpha(j1, c.a) * alpha(j2, c.b) + alpha(j1, c.b) * alpha(j2, c.a);
          default: return 0.0;
        }
      });
    }
  for (u64 j = 1; j < q2m1; ++j) {
    if (j % (q + 1) == 0) continue;
    if (mulmod(j, q, q2m1) < j) continue;  // keep one of {theta, theta^q}
    add_row(static_cast<long>(q - 1), [&](const ClassData& c) -> cd {
      switch (c.kind) {
        case kCentral: return (dq - 1) * theta(j, embed(c.a));
        case kJordan: return -theta(j, embed(c.a));
        case kSplit: return 0.0;
        default: return -(theta(j, c.z) + theta(j, conj_q(c.z)));
      }
    });
  }
  if (t.rows.size() != cp.count()) throw InvariantViolation("char_table_gl2: row count differs from class count");
  return t;
}

// ---------------------------------------------------------------- products

CharacterTable product_irreducibles(const std::shared_ptr<const ProductGroup>& P, const std::vector<TablePtr>& tables) {
  const auto& factors = P->factors();
  if (factors.size() != tables.size()) throw DomainError("product_irreducibles: factor count mismatch");
  for (size_t i = 0; i < tables.size(); ++i)
    if (tables[i]->group != factors[i]) throw DomainError("product_irreducibles: table does not match factor");
  const size_t nclasses = P->class_count();
  size_t nrows = 1;
  for (const auto& t : tables) nrows *= t->size();
  CharacterTable out{P, {}, {}};
  std::vector<size_t> ridx(tables.size());
  for (size_t row = 0; row < nrows; ++row) {
    size_t rr = row;
    long deg = 1;
    for (size_t i = tables.size(); i-- > 0;) {
      ridx[i] = rr % tables[i]->size();
      rr /= tables[i]->size();
    }
    for (size_t i = 0; i < tables.size(); ++i) deg *= tables[i]->degrees[ridx[i]];
    std::vector<cd> vals(nclasses);
    for (size_t c = 0; c < nclasses; ++c) {
      auto cc = P->split_class(c);
      cd v = 1.0;
      for (size_t i = 0; i < tables.size(); ++i) v *= tables[i]->rows[ridx[i]][cc[i]];
      vals[c] = v;
    }
    out.rows.push_back(std::move(vals));
    out.degrees.push_back(deg);
  }
  return out;
}

std::vector<ClassFunction> primitive_characters(const std::shared_ptr<const ProductGroup>& P,
                                                const std::vector<TablePtr>& tables) {
  CharacterTable full = product_irreducibles(P, tables);
  std::vector<ClassFunction> out;
  for (size_t row = 0; row < full.size(); ++row) {
    size_t rr = row;
    bool primitive = true;
    for (size_t i = tables.size(); i-- > 0;) {
      if (rr % tables[i]->size() == 0) primitive = false;
      rr /= tables[i]->size();
    }
    if (primitive) out.push_back(full.row(row));
  }
  return out;
}

}  // namespace galsieve

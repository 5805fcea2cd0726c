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

#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "galsieve/error.hpp"
#include "galsieve/group.hpp"
#include "galsieve/matrix_group.hpp"
#include "oracles.hpp"

using namespace galsieve;

namespace {

void check_class_equation(const FiniteGroup& G) {
  const auto& cp = G.classes();
  u64 sum = 0;
  std::vector<bool> seen(G.order(), false);
  REQUIRE(cp.size(0) == 1);
  REQUIRE(cp.representative(0) == G.identity());
  for (size_t c = 0; c < cp.count(); ++c) {
    REQUIRE(G.order() % cp.size(c) == 0);
    sum += cp.size(c);
    for (Elem x : cp.classes[c]) {
      REQUIRE_FALSE(seen[x]);
      seen[x] = true;
      REQUIRE(cp.class_of[x] == c);
    }
  }
  REQUIRE(sum == G.order());
}

}  // namespace

TEST_CASE("GL2 orders and class counts") {
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull}) {
    const auto G = gl2(q);
    CHECK(G->order() == q * (q - 1) * (q - 1) * (q + 1));
    CHECK(G->order() == gl2_order(q));
    CHECK(G->order() == oracle::gl2_elements(q).size());
    CHECK(G->class_count() == q * q - 1);
    check_class_equation(*G);
  }
  CHECK(gl2(3)->order() == 48);
  CHECK(gl2(5)->order() == 480);
  CHECK(gl2(2)->order() == 6);
  CHECK(gl2(3)->class_count() == 8);
  CHECK(gl2(5)->class_count() == 24);
  CHECK_THROWS_AS(gl2(4), DomainError);
}

TEST_CASE("GL2 class count by Burnside oracle") {
  for (u64 q : {2ull, 3ull, 5ull}) CHECK(gl2(q)->class_count() == oracle::gl2_class_count_burnside(q));
}

TEST_CASE("SL2, Sp4, GSp4") {
  CHECK(sl2(5)->order() == 120);
  for (u64 q : {2ull, 3ull, 5ull, 7ull}) {
    CHECK(sl2(q)->order() == q * (q * q - 1));
    check_class_equation(*sl2(q));
  }
  CHECK(sp_order(2, 3) == 51840);
  CHECK(gsp_order(2, 3) == 103680);
  const auto S = sp4(3);
  const auto G = gsp4(3);
  CHECK(S->order() == 51840);
  CHECK(G->order() == 103680);
  check_class_equation(*G);
  // Class count of GSp4(F_3) is at most twice that of Sp4(F_3).
  CHECK(G->class_count() <= 2 * S->class_count());
  CHECK_THROWS_AS(gsp4(5), CapacityError);
  CHECK_THROWS_AS(SampledGSp4(5).conjugacy_classes(), UnsupportedOperation);
}

TEST_CASE("GSp4(F_3) similitude identity on every element") {
  const auto G = gsp4(3);
  for (Elem e = 0; e < G->order(); ++e) {
    const auto A = G->matrix(e);
    const u64 m = similitude_multiplier(A);
    REQUIRE(m != 0);
    // Standard form <e1,e3> = <e2,e4> = 1.
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        i64 omega = 0;
        if (i == 0 && j == 2) omega = 1;
        if (i == 2 && j == 0) omega = -1;
        if (i == 1 && j == 3) omega = 1;
        if (i == 3 && j == 1) omega = -1;
        const i64 lhs = ((symplectic_form(A, i, j) % 3) + 3) % 3;
        const i64 rhs = ((static_cast<i64>(m) * omega % 3) + 3) % 3;
        REQUIRE(lhs == rhs);
      }
  }
}

TEST_CASE("GSp4 charpoly functional equation on samples") {
  std::mt19937_64 rng(11);
  const auto G = gsp4(3);
  for (int i = 0; i < 10000; ++i) {
    const auto A = G->matrix(static_cast<Elem>(rng() % G->order()));
    const u64 m = similitude_multiplier(A);
    const auto P = A.charpoly();
    // c_i = m^(2-i) c_(4-i) for i = 0, 1
    REQUIRE(P.coeff(0) == m * m % 3 * P.coeff(4) % 3);
    REQUIRE(P.coeff(1) == m * P.coeff(3) % 3);
  }
  for (u64 q : {5ull, 7ull}) {
    const SampledGSp4 S(q);
    for (int i = 0; i < 2000; ++i) {
      const auto A = S.sample(rng);
      const u64 m = similitude_multiplier(A);
      REQUIRE(m != 0);
      const auto P = A.charpoly();
      REQUIRE(P.coeff(0) == m * m % q * P.coeff(4) % q);
      REQUIRE(P.coeff(1) == m * P.coeff(3) % q);
    }
  }
}

TEST_CASE("count_trace and count_trace_det against enumeration") {
  CHECK(count_trace(3, 1) == 15);
  CHECK(count_trace(3, 0) == 18);
  CHECK(count_trace(5, 2) == 95);
  CHECK(count_trace_det(3, 0, 1) == 6);
  CHECK(count_trace_det(5, 1, 1) == 20);
  CHECK(count_trace_det(3, 2, 1) == 9);
  CHECK_THROWS_AS(count_trace_det(5, 1, 0), DomainError);
  for (u64 q : {3ull, 5ull, 7ull, 13ull}) {
    std::map<u64, u64> by_t;
    std::map<std::pair<u64, u64>, u64> by_td;
    for (const auto& m : oracle::gl2_elements(q)) {
      const u64 t = (m[0] + m[3]) % q, d = (m[0] * m[3] + q * q - m[1] * m[2]) % q;
      ++by_t[t];
      ++by_td[{t, d}];
    }
    for (u64 t = 0; t < q; ++t) {
      REQUIRE(count_trace(q, t) == by_t[t]);
      for (u64 d = 1; d < q; ++d) REQUIRE(count_trace_det(q, t, d) == by_td[{t, d}]);
    }
    u64 total = 0;
    for (u64 t = 0; t < q; ++t) total += count_trace(q, t);
    CHECK(total == gl2_order(q));
    for (u64 d = 1; d < q; ++d) {
      u64 s = 0;
      for (u64 t = 0; t < q; ++t) s += count_trace_det(q, t, d);
      CHECK(s == sl2_order(q));
    }
  }
}

TEST_CASE("direct products") {
  const auto E = direct_product({});
  CHECK(E->order() == 1);
  CHECK(E->class_count() == 1);
  const auto P = direct_product({gl2(3), cyclic_group(2)});
  CHECK(P->order() == 96);
  CHECK(P->class_count() == 16);
  check_class_equation(*P);
  const auto P2 = direct_product({symmetric_group(3), dihedral_group(4), cyclic_group(3)});
  CHECK(P2->class_count() == 3 * 5 * 3);
  check_class_equation(*P2);
  CHECK_THROWS_AS(direct_product({gl2(11), gl2(11)}), CapacityError);
}

TEST_CASE("small groups") {
  CHECK(cyclic_group(7)->class_count() == 7);
  CHECK(symmetric_group(3)->class_count() == 3);
  CHECK(symmetric_group(4)->class_count() == 5);
  CHECK(symmetric_group(5)->class_count() == 7);
  CHECK(alternating_group(4)->class_count() == 4);
  CHECK(dihedral_group(4)->order() == 8);
  CHECK(dihedral_group(5)->class_count() == 4);
  CHECK(quaternion_group()->class_count() == 5);
  for (const auto& G : {cyclic_group(12), symmetric_group(4), alternating_group(4), quaternion_group()})
    check_class_equation(*G);
}

TEST_CASE("Gallagher's inequality") {
  const auto G = gl2(3);
  const auto S = sl2(3);
  std::vector<Elem> gens;
  for (Elem e : S->generators()) gens.push_back(G->index_of(S->matrix(e)));
  CHECK(gallagher_check(G, gens));
  const auto S3 = symmetric_group(3);
  // A3 is generated by a 3-cycle
  Elem three_cycle = 0;
  for (Elem e = 0; e < S3->order(); ++e)
    if (S3->element_order(e) == 3) three_cycle = e;
  CHECK(gallagher_check(S3, {three_cycle}));
  Elem transposition = 0;
  for (Elem e = 0; e < S3->order(); ++e)
    if (S3->element_order(e) == 2) transposition = e;
  CHECK_THROWS_AS(gallagher_check(S3, {transposition}), DomainError);
  const auto C = cyclic_group(12);
  CHECK(gallagher_check(C, {C->power(C->generators()[0], 3)}));
  CHECK(quotient_class_count(*C, closure(*C, {C->power(C->generators()[0], 3)})) == 3);
}

TEST_CASE("Weyl groups") {
  const auto W2 = weyl_group(2);
  const auto W3 = weyl_group(3);
  CHECK(W2.W->order() == 8);
  CHECK(W3.W->order() == 48);
  CHECK(weyl_group(1).W->order() == 2);
  CHECK(W2.phi.kernel().size() == 4);
  CHECK(W3.phi.kernel().size() == 8);
  CHECK(W2.phi.check(200, 1));
  CHECK(W3.phi.check(200, 1));
}

TEST_CASE("Jordan's lemma") {
  const auto W2 = weyl_group(2);
  const auto ker = W2.phi.kernel();
  CHECK(jordan_missed_class(*W2.W, ker).has_value());
  CHECK_FALSE(jordan_missed_class(*W2.W, W2.W->generators()).has_value());
  const auto S3 = symmetric_group(3);
  Elem transposition = 0;
  for (Elem e = 0; e < S3->order(); ++e)
    if (S3->element_order(e) == 2) transposition = e;
  const auto missed = jordan_missed_class(*S3, {transposition});
  REQUIRE(missed.has_value());
  CHECK(S3->element_order(S3->classes().representative(*missed)) == 3);
  // Every proper subgroup of W4 and W6 misses a class.
  for (int g : {2, 3}) {
    const auto W = weyl_group(g);
    for (const auto& H : subgroup_lattice(*W.W)) {
      const bool proper = H.size() < W.W->order();
      REQUIRE(jordan_missed_class(*W.W, H).has_value() == proper);
    }
  }
}

TEST_CASE("W-group criterion over all subgroups") {
  for (int g : {2, 3}) {
    const auto W = weyl_group(g);
    const auto lattice = subgroup_lattice(*W.W);
    u64 true_count = 0;
    for (const auto& H : lattice) {
      const bool crit = w_group_criterion(W, H);
      if (crit) {
        ++true_count;
        REQUIRE(H.size() == W.W->order());
      }
    }
    CHECK(true_count == 1);
    CHECK(w_group_criterion(W, W.W->generators()));
    CHECK_FALSE(w_group_criterion(W, W.phi.kernel()));
  }
  // Subgroup counts of the lattices: D4 has 10 subgroups; W6 = C2 x S4 has 98.
  CHECK(subgroup_lattice(*weyl_group(2).W).size() == 10);
  CHECK(subgroup_lattice(*weyl_group(3).W).size() == 98);
}

#include <gtest/gtest.h>

#include <random>

#include "ybpa/diagram.hpp"

using namespace ybpa;

namespace {

struct TL {
  AlphabetPtr a = make_alphabet({"d"}, {Reality::Real});
  RationalFn d = RationalFn::var(a, "d");
  DiagramTower tower{DiagramKind::TL, d, 6};
};

struct FC {
  AlphabetPtr a = make_alphabet({"g"}, {Reality::Real});
  RationalFn g = RationalFn::var(a, "g");
  DiagramTower tower{DiagramKind::FC, g, 4};
};

Vec random_vec(const FiniteAlgebra& A, std::mt19937_64& rng) {
  Vec v = A.zero();
  for (int k = 0; k < 3; ++k) v[rng() % A.dim()] += RationalFn(long(rng() % 7) - 3);
  return v;
}

}  // namespace

TEST(Diagram, PairingCountsMatchClosedForms) {
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(long(noncrossing_pairings(n).size()), dimension_tl(n));
  TL tl;
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(tl.tower.level(n).dim(), dimension_tl(n));
  FC fc;
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(fc.tower.level(n).dim(), dimension_fc(n));
  const long tl_expect[] = {1, 1, 2, 5, 14, 42};
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(dimension_tl(n), tl_expect[n]);
  const long fc_expect[] = {1, 3, 12, 55};
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(dimension_fc(n), fc_expect[n - 1]);
  const long bmw_expect[] = {1, 3, 15, 105};
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(dimension_bmw(n), bmw_expect[n - 1]);
  for (auto& p : noncrossing_pairings(5)) EXPECT_TRUE(p.valid());
}

TEST(Diagram, TlProducts) {
  TL tl;
  const auto& A2 = tl.tower.level(2);
  Vec e = A2.gen("e1");
  EXPECT_EQ(A2.mul(e, e), vec_scale(e, tl.d));
  const auto& A3 = tl.tower.level(3);
  Vec e1 = A3.gen("e1"), e2 = A3.gen("e2");
  EXPECT_EQ(A3.mul({e1, e2, e1}), e1);
  EXPECT_EQ(A3.mul({e2, e1, e2}), e2);
  std::mt19937_64 rng(1);
  Vec x = random_vec(A3, rng);
  EXPECT_EQ(A3.mul(A3.one(), x), x);
  EXPECT_EQ(A3.mul(x, A3.one()), x);
  // The standard pictures: identity = {(1,4),(2,3)}, e = {(1,2),(3,4)}.
  EXPECT_EQ(tl.tower.diagrams(2)[A2.unit].pairs(), (std::vector<std::pair<int, int>>{{1, 4}, {2, 3}}));
}

TEST(Diagram, TlTraces) {
  TL tl;
  const auto& A2 = tl.tower.level(2);
  EXPECT_EQ(tl.tower.trace(2, A2.one()), tl.d * tl.d);
  EXPECT_EQ(tl.tower.trace(2, A2.gen("e1")), tl.d);
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(tl.tower.trace(n, tl.tower.level(n).one()), tl.d.pow(n));
}

TEST(Diagram, Rotation) {
  TL tl;
  const auto& A2 = tl.tower.level(2);
  Vec one = A2.one(), e = A2.gen("e1");
  EXPECT_EQ(tl.tower.rotate(2, one, 1), e);
  EXPECT_EQ(tl.tower.rotate(2, e, 1), one);
  EXPECT_EQ(tl.tower.rotate(2, e, 0), e);
  for (int n = 1; n <= 4; ++n) {
    const auto& A = tl.tower.level(n);
    for (int i = 0; i < A.dim(); ++i) {
      Vec b = A.basis(i);
      EXPECT_EQ(tl.tower.rotate(n, b, 2 * n), b);
      // The closure tangle is preserved by the half-turn.
      EXPECT_EQ(tl.tower.trace(n, tl.tower.rotate(n, b, n)), tl.tower.trace(n, b));
    }
  }
}

TEST(Diagram, Sphericality) {
  TL tl;
  for (int n = 1; n <= 4; ++n) {
    const auto& A = tl.tower.level(n);
    for (int i = 0; i < A.dim(); ++i) EXPECT_EQ(tl.tower.left_trace(n, A.basis(i)), tl.tower.trace(n, A.basis(i)));
  }
}

TEST(DiagramProperty, AssociativityAndStar) {
  TL tl;
  FC fc;
  std::mt19937_64 rng(7);
  for (const DiagramTower* t : {&tl.tower, &fc.tower}) {
    const auto& A = t->level(3);
    for (int it = 0; it < 30; ++it) {
      int i = int(rng() % A.dim()), j = int(rng() % A.dim()), k = int(rng() % A.dim());
      Vec a = A.basis(i), b = A.basis(j), c = A.basis(k);
      EXPECT_EQ(A.mul(A.mul(a, b), c), A.mul(a, A.mul(b, c)));
      EXPECT_EQ(A.star_of(A.mul(a, b)), A.mul(A.star_of(b), A.star_of(a)));
    }
  }
}

TEST(Diagram, JonesWenzl) {
  TL tl;
  EXPECT_EQ(jones_wenzl(tl.tower, 1), tl.tower.level(1).one());
  const auto& A2 = tl.tower.level(2);
  EXPECT_EQ(jones_wenzl(tl.tower, 2), vec_sub(A2.one(), vec_scale(A2.gen("e1"), 1 / tl.d)));
  for (int n = 1; n <= 5; ++n) {
    const auto& A = tl.tower.level(n);
    Vec jw = jones_wenzl(tl.tower, n);
    EXPECT_EQ(A.mul(jw, jw), jw) << "n=" << n;
    for (int i = 1; i < n; ++i) {
      Vec e = A.gen("e" + std::to_string(i));
      EXPECT_TRUE(vec_is_zero(A.mul(e, jw)));
      EXPECT_TRUE(vec_is_zero(A.mul(jw, e)));
    }
    RationalFn tr = tl.tower.trace(n, jw);
    EXPECT_EQ(tr, chebyshev_u(tl.d, n));
    EXPECT_EQ(tr, cosine_product(tl.d, n));
  }
  EXPECT_EQ(cosine_product(tl.d, 3), tl.d.pow(3) - 2 * tl.d);
}

TEST(Diagram, FcProducts) {
  FC fc;
  const auto& A2 = fc.tower.level(2);
  Vec E = A2.gen("E1"), P = A2.gen("P1");
  EXPECT_EQ(A2.mul(E, E), vec_scale(E, fc.g * fc.g));
  EXPECT_EQ(A2.mul(P, E), vec_scale(E, fc.g));
  EXPECT_EQ(A2.mul(E, P), vec_scale(E, fc.g));
  const auto& A3 = fc.tower.level(3);
  Vec E1 = A3.gen("E1"), P2 = A3.gen("P2");
  EXPECT_EQ(A3.mul({E1, P2, E1}), vec_scale(E1, fc.g));
  // Rotation by one click exchanges 1 and E and fixes P.
  EXPECT_EQ(fc.tower.rotate(2, A2.one(), 1), E);
  EXPECT_EQ(fc.tower.rotate(2, E, 1), A2.one());
  EXPECT_EQ(fc.tower.rotate(2, P, 1), P);
}

TEST(Diagram, GramMatrices) {
  TL tl;
  auto g = gram_matrix(tl.tower, 2);
  RationalFn d = tl.d;
  EXPECT_EQ(g[0][0], d * d);
  EXPECT_EQ(g[0][1], d);
  EXPECT_EQ(g[1][0], d);
  EXPECT_EQ(g[1][1], d * d);
  FC fc;
  auto f = gram_matrix(fc.tower, 1);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0][0], fc.g * fc.g);
  // Diagonal entries: closure of a* a, counted directly.
  for (int n = 1; n <= 4; ++n) {
    auto gn = gram_matrix(tl.tower, n);
    const auto& basis = tl.tower.diagrams(n);
    for (size_t i = 0; i < basis.size(); ++i) {
      Composite c = compose(reflect(basis[i]), basis[i]);
      int loops = c.loops + closure_loops(c.diagram);
      EXPECT_EQ(gn[i][i], d.pow(loops));
      EXPECT_GE(loops, n);
      EXPECT_TRUE(gn[i][i].subs("d", RationalFn(2)).constant_value().re > 0);
    }
  }
}

#include <gtest/gtest.h>

#include "ybpa/diagram.hpp"
#include "ybpa/integrability.hpp"
#include "ybpa/tangle.hpp"

using namespace ybpa;

namespace {

AlphabetPtr alph(std::vector<std::string> names, Reality uv = Reality::Real) {
  std::vector<Reality> r;
  for (auto& n : names) r.push_back(n == "u" || n == "v" ? uv : Reality::Real);
  return make_alphabet(std::move(names), r);
}

GQ q(long a, long b = 1) { return GQ(mpq_class(a, b)); }

std::vector<Baxterisation> generic_families(int max_level) {
  std::vector<Baxterisation> out;
  out.push_back(fc_baxterisation(alph({"gamma", "u", "v"}), max_level));
  for (int w : {0, 1}) out.push_back(bmw_baxterisation(alph({"tau", "q", "u", "v"}), w, BmwStar::Same, max_level));
  for (int mu : {1, -1})
    for (GQ eps : {GQ::i(), -GQ::i()})
      out.push_back(liu_baxterisation(alph({"delta", "u", "v"}, Reality::UnitModulus), mu, eps, max_level));
  return out;
}

// Additive TL solution at delta = 2.
RFunction tl_additive(std::shared_ptr<const Tower> t) {
  return [t](const RationalFn& w) {
    const auto& A = t->level(2);
    Vec r = vec_scale(A.one(), 1 - w);
    vec_axpy(r, w, A.gen("e1"));
    return r;
  };
}

}  // namespace

TEST(Transfer, OneStrandIsScalar) {
  for (auto& b : generic_families(2)) {
    auto f = transfer_operator(b, 1);
    ASSERT_EQ(f.T.size(), 1u);
    EXPECT_FALSE(f.T[0].is_zero()) << b.label;
  }
}

TEST(Transfer, MatchesCompiledNet) {
  for (auto& b : generic_families(4)) {
    if (b.family == Family::BMW) continue;  // level 4 of generic BMW is slow to build
    for (int n = 1; n <= 2; ++n) {
      Vec r = b.R(b.u);
      Vec compiled = compile(build_transfer_net(n, r, r), *b.tower);
      EXPECT_EQ(compiled, transfer_operator(b, n).T) << b.label << " n=" << n;
    }
  }
  auto b = bmw_baxterisation_at(q(3, 2), q(5, 2), 1, 4);
  Vec r = b.R(b.u);
  EXPECT_EQ(compile(build_transfer_net(2, r, r), *b.tower), transfer_operator(b, 2).T);
}

TEST(Transfer, LiuBranchExpansionOracle) {
  // Expand every box over {1, e, s}, compile the 81 pure-basis nets and sum.
  auto b = liu_baxterisation(alph({"delta", "u", "v"}, Reality::UnitModulus), 1, GQ::i(), 4);
  const auto& A2 = b.tower->level(2);
  auto c = b.coeffs(b.u);
  std::vector<Vec> basis = {A2.one(), A2.gen("e1"), A2.gen("s1")};
  Vec sum = b.tower->level(2).zero();
  for (int code = 0; code < 81; ++code) {
    TangleNet net = build_transfer_net(2, A2.one(), A2.one());
    RationalFn w(1);
    int k = code, box = 0;
    for (auto& l : net.layers) {
      if (l.kind != TangleLayer::Kind::Box) continue;
      int a = k % 3;
      k /= 3;
      l.payload = basis[a];
      w *= c[a];
      ++box;
    }
    ASSERT_EQ(box, 4);
    vec_axpy(sum, w, compile(net, *b.tower));
  }
  EXPECT_EQ(sum, transfer_operator(b, 2).T);
}

TEST(Transfer, SpeciousFamilyIsConstantUpToScale) {
  auto a = alph({"delta", "u", "v"});
  auto L = std::shared_ptr<const Tower>(liu_tower(a, RationalFn::var(a, "delta"), GQ::i(), 4));
  RationalFn u = RationalFn::var(a, "u");
  auto r = [](const RationalFn& x) { return (x * x + 3) / (x - 5); };
  RFunction R = [&](const RationalFn& x) {
    const auto& A = L->level(2);
    Vec y = vec_scale(A.one(), RationalFn(2) * r(x));
    vec_axpy(y, RationalFn(-7) * r(x), A.gen("e1"));
    vec_axpy(y, r(x), A.gen("s1"));
    return y;
  };
  for (int n = 2; n <= 3; ++n) {
    auto f = transfer_operator("specious", L, n, R, u);
    Vec a0 = vec_scale(f.T, r(u).pow(-2 * n));
    for (auto& c : a0) EXPECT_EQ(c.subs("u", RationalFn(0)), c) << "n=" << n;
  }
}

TEST(Transfer, SymbolicCommutationSmall) {
  for (auto& b : generic_families(3)) {
    auto f = transfer_operator(b, 2);
    auto r = commutation_symbolic(f, b.v);
    EXPECT_TRUE(r.check.pass) << r.check.name;
  }
}

TEST(Transfer, SymbolicCommutationThreeStrands) {
  for (auto& b : generic_families(4)) {
    if (b.family == Family::BMW) continue;
    auto r = commutation_symbolic(transfer_operator(b, 3), b.v);
    EXPECT_TRUE(r.check.pass) << r.check.name;
  }
  for (int w : {0, 1}) {
    auto b = bmw_baxterisation_at(q(3, 2), q(5, 2), w, 4);
    auto r = commutation_symbolic(transfer_operator(b, 3), b.v);
    EXPECT_TRUE(r.check.pass) << r.check.name;
  }
}

TEST(Transfer, PerturbedRFailsToCommute) {
  // r_e += u breaks the local relations.
  auto b = fc_baxterisation_at(q(2), 4);
  auto c = b.coeffs;
  b.coeffs = [c](const RationalFn& x) {
    auto r = c(x);
    r[1] += x;
    return r;
  };
  EXPECT_FALSE(commutation_symbolic(transfer_operator(b, 3), b.v).check.pass);
  EXPECT_FALSE(commutation_randomized(transfer_operator(b, 3, false), 5, 7).check.pass);
  // n = 2 commutes for any R, so the control needs three strands.
  EXPECT_TRUE(commutation_symbolic(transfer_operator(b, 2), b.v).check.pass);
}

TEST(Transfer, RandomizedFourStrands) {
  auto uv = alph({"u", "v"});
  RationalFn u = RationalFn::var(uv, "u");
  auto tl = std::make_shared<DiagramTower>(DiagramKind::TL, RationalFn(q(10, 3)), 5);
  auto ftl = transfer_operator("TL", tl, 4, tl_r_function(tl, RationalFn(3)), u, {RationalFn(9)}, false);
  auto r1 = commutation_randomized(ftl, 5, 2024);
  EXPECT_TRUE(r1.check.pass) << r1.check.detail;
  EXPECT_EQ(r1.samples, 5);
  EXPECT_EQ(r1.seed, 2024u);

  auto fc = std::make_shared<DiagramTower>(DiagramKind::FC, RationalFn(q(2)), 5);
  auto b = fc_baxterisation_at(q(2), 2);
  auto ffc = transfer_operator("FC", fc, 4, r_function(b, fc), u, b.poles, false);
  auto r2 = commutation_randomized(ffc, 5, 2024);
  EXPECT_TRUE(r2.check.pass) << r2.check.detail;
  EXPECT_TRUE(ffc.is_excluded(RationalFn(3)));
  // Same seed, same report.
  auto r3 = commutation_randomized(ffc, 5, 2024);
  EXPECT_EQ(r3.check.name, r2.check.name);
  EXPECT_EQ(r3.resampled, r2.resampled);
}

TEST(Transfer, TlRSatisfiesYbe) {
  auto a = alph({"z", "u", "v"});
  RationalFn z = RationalFn::var(a, "z"), u = RationalFn::var(a, "u"), v = RationalFn::var(a, "v");
  auto tl = std::make_shared<DiagramTower>(DiagramKind::TL, z + z.inverse(), 3);
  auto R = tl_r_function(tl, z);
  const auto& A3 = tl->level(3);
  auto at = [&](const Vec& p, int pos) { return place(*tl, p, pos, 3); };
  EXPECT_EQ(A3.mul({at(R(u), 1), at(R(u * v), 2), at(R(v), 1)}), A3.mul({at(R(v), 2), at(R(u * v), 1), at(R(u), 2)}));
  EXPECT_EQ(R(RationalFn(1)), tl->level(2).one());
}

TEST(Transfer, SelfAdjointAtDomainPoints) {
  auto fc = fc_baxterisation_at(q(2), 4);  // delta = 4
  for (int n = 2; n <= 3; ++n) {
    auto checks = check_selfadjoint(transfer_operator(fc, n, false), {q(3, 2), q(-7, 5), GQ::i()});
    ASSERT_EQ(checks.size(), 3u);
    EXPECT_TRUE(checks[0].pass);
    EXPECT_TRUE(checks[1].pass);
    EXPECT_FALSE(checks[2].pass);
    EXPECT_EQ(checks[2].detail, "outside the self-adjointness domain");
  }
  for (int mu : {1, -1})
    for (GQ eps : {GQ::i(), -GQ::i()}) {
      auto liu = liu_baxterisation_at(q(7, 4), mu, eps, 4);
      auto checks = check_selfadjoint(transfer_operator(liu, 3, false),
                                      {unit_circle_point(mpq_class(1, 3)), unit_circle_point(mpq_class(-5, 2)), q(2)});
      EXPECT_TRUE(checks[0].pass) << liu.label;
      EXPECT_TRUE(checks[1].pass) << liu.label;
      EXPECT_FALSE(checks[2].pass);
    }
  auto bmw = bmw_baxterisation_at(q(3, 2), q(5, 2), 0, 4);
  for (auto& c : check_selfadjoint(transfer_operator(bmw, 3, false), {q(1, 2), q(7, 3)})) EXPECT_TRUE(c.pass);
}

TEST(Transfer, SymbolicSelfAdjoint) {
  auto fc = fc_baxterisation(alph({"gamma", "u", "v"}), 4);
  auto f = transfer_operator(fc, 3);
  EXPECT_EQ(f.tower->level(3).star_of(f.T), f.T);
}

TEST(Diagonalizability, Examples) {
  DiagramTower tl(DiagramKind::TL, RationalFn(q(2)), 3);
  const auto& A2 = tl.level(2);
  EXPECT_TRUE(diagonalizability_check(A2, A2.one()));
  EXPECT_EQ(minimal_polynomial(A2, A2.one()), (UPoly{q(-1), q(1)}));
  Vec e = A2.gen("e1");
  EXPECT_TRUE(diagonalizability_check(A2, e));
  EXPECT_EQ(minimal_polynomial(A2, e), (UPoly{q(0), q(-2), q(1)}));
  const auto& A3 = tl.level(3);
  Vec e1 = A3.gen("e1"), e2 = A3.gen("e2");
  Vec nil = vec_sub(A3.mul(e1, e2), vec_scale(e1, RationalFn(q(1, 2))));
  EXPECT_FALSE(vec_is_zero(nil));
  EXPECT_EQ(minimal_polynomial(A3, nil), (UPoly{q(0), q(0), q(1)}));
  EXPECT_FALSE(diagonalizability_check(A3, nil));
}

TEST(Diagonalizability, PolynomialHelpers) {
  // (x-1)^2 (x+2) and its derivative share x - 1.
  UPoly p{q(2), q(-3), q(0), q(1)};
  EXPECT_EQ(upoly_derivative(p), (UPoly{q(-3), q(0), q(3)}));
  EXPECT_EQ(upoly_gcd(p, upoly_derivative(p)), (UPoly{q(-1), q(1)}));
}

TEST(PolyGenerator, SingleSample) {
  auto fc = fc_baxterisation_at(q(2), 4);
  auto f = transfer_operator(fc, 2, false);
  Vec t = f.at(RationalFn(q(1, 2)));
  auto g = find_polynomial_generator(f.tower->level(2), {t});
  EXPECT_LE(g.residual, 1e-12);
  // b is a multiple of the sample.
  auto ex = exact_polynomial_in(f.tower->level(2), t, g.b);
  ASSERT_TRUE(ex);
}

TEST(PolyGenerator, TlDeltaTwo) {
  auto tl = std::make_shared<DiagramTower>(DiagramKind::TL, RationalFn(q(2)), 4);
  auto a = alph({"u", "v"});
  auto f = transfer_operator("TL", tl, 3, tl_additive(tl), RationalFn::var(a, "u"), {}, false);
  EXPECT_TRUE(commutation_randomized(f, 5, 3).check.pass);
  std::vector<Vec> s;
  for (GQ x : {q(1, 3), q(2, 3), q(5, 4), q(-1, 2)}) s.push_back(f.at(RationalFn(x)));
  auto g = find_polynomial_generator(tl->level(3), s);
  EXPECT_LE(g.residual, 1e-9);
}

TEST(PolyGenerator, ThreeStrandWitnesses) {
  struct Case {
    Baxterisation b;
    std::vector<GQ> pts;
  };
  std::vector<Case> cases;
  cases.push_back({fc_baxterisation_at(q(2), 4), {q(1, 2), q(3, 2), q(5, 2), q(-1, 3)}});
  for (int w : {0, 1}) cases.push_back({bmw_baxterisation_at(q(3, 2), q(5, 2), w, 4), {q(1, 2), q(3, 2), q(7, 3), q(-1, 3)}});
  // 1351/780 is a convergent of sqrt 3.
  for (int mu : {1, -1})
    for (GQ eps : {GQ::i(), -GQ::i()})
      cases.push_back({liu_baxterisation_at(q(1351, 780), mu, eps, 4),
                       {unit_circle_point(mpq_class(1, 3)), unit_circle_point(mpq_class(1, 2)),
                        unit_circle_point(mpq_class(2)), unit_circle_point(mpq_class(-3, 4))}});
  for (auto& cs : cases)
    for (int n = 2; n <= 3; ++n) {
      auto f = transfer_operator(cs.b, n, false);
      const auto& A = f.tower->level(n);
      std::vector<Vec> s;
      for (auto& p : cs.pts) s.push_back(f.at(RationalFn(p)));
      auto g = find_polynomial_generator(A, s);
      EXPECT_LE(g.residual, 1e-8) << cs.b.label << " n=" << n;
      EXPECT_EQ(g.values.size(), s.size());
      EXPECT_TRUE(diagonalizability_check(A, g.b)) << cs.b.label;
      // Exact cross-check: every sample lies in Q(i)[b].
      for (auto& x : s) EXPECT_TRUE(exact_polynomial_in(A, g.b, x).has_value()) << cs.b.label << " n=" << n;
    }
}

TEST(PolyGenerator, NonCommutingInputsFail) {
  DiagramTower tl(DiagramKind::TL, RationalFn(q(3)), 3);
  const auto& A = tl.level(3);
  auto g = find_polynomial_generator(A, {A.gen("e1"), A.gen("e2")});
  EXPECT_GT(g.residual, 1e-3);
}

TEST(Gram, PositivitySpotChecks) {
  auto min_eig = [](const Tower& t, int n) {
    auto e = gram_eigenvalues(t, n);
    return *std::min_element(e.begin(), e.end());
  };
  DiagramTower tl(DiagramKind::TL, RationalFn(q(2)), 4);
  for (int n = 1; n <= 4; ++n) EXPECT_GE(min_eig(tl, n), -1e-9) << "TL n=" << n;
  DiagramTower fc(DiagramKind::FC, RationalFn(q(2)), 3);
  for (int n = 1; n <= 3; ++n) EXPECT_GE(min_eig(fc, n), -1e-9) << "FC n=" << n;
  auto liu = liu_tower(alph({"u"}), RationalFn(q(1351, 780)), GQ::i(), 3);
  for (int n = 1; n <= 3; ++n) EXPECT_GE(min_eig(*liu, n), -1e-9) << "Liu n=" << n;
  // Below the TL threshold the form is indefinite.
  DiagramTower bad(DiagramKind::TL, RationalFn(q(1, 2)), 3);
  EXPECT_LT(min_eig(bad, 3), 0);
}

#include "ybpa/baxter.hpp"

#include "ybpa/tangle.hpp"

namespace ybpa {

Vec two_box_element(const Tower& t, const std::string& cupcap, const std::string& third,
                    const std::array<RationalFn, 3>& c) {
  const auto& A = t.level(2);
  Vec r = vec_scale(A.one(), c[0]);
  vec_axpy(r, c[1], A.gen(cupcap + "1"));
  vec_axpy(r, c[2], A.gen(third + "1"));
  return r;
}

Vec Baxterisation::element(const std::array<RationalFn, 3>& c) const {
  return two_box_element(*tower, family == Family::FC ? "E" : "e", third, c);
}

Vec Baxterisation::rot(const Vec& x, int clicks) const { return rotate_element(*tower, 2, x, clicks); }

Vec Baxterisation::Y(int i, const RationalFn& a, const RationalFn& b) const {
  switch (i) {
    case 1: return R(a * b);
    case 2: return rot(R(a / b), -1);
    case 3: return rot(R(a / b), 1);
  }
  throw std::invalid_argument("Y index must be 1, 2 or 3");
}

Vec Baxterisation::Ybar(int i, const RationalFn& a, const RationalFn& b) const {
  switch (i) {
    case 1: return ybar1(a * b);
    case 2: return rot(R(b / a), -1);
    case 3: return rot(R(b / a), 1);
  }
  throw std::invalid_argument("Y index must be 1, 2 or 3");
}

namespace {

Baxterisation base(Family f, std::string label, std::string third, const AlphabetPtr& a) {
  Baxterisation b;
  b.family = f;
  b.label = std::move(label);
  b.third = std::move(third);
  b.alphabet = a;
  b.u = RationalFn::var(a, "u");
  b.v = RationalFn::var(a, "v");
  return b;
}

void finish_fc(Baxterisation& b, const RationalFn& g, int max_level) {
  b.tower = fc_tower(b.alphabet, g, max_level);
  RationalFn d = g * g, c = d - 1;
  auto f = [d](const RationalFn& x) { return x * (x - 1) / (d - 1 - x); };
  b.coeffs = [f, g](const RationalFn& x) { return std::array<RationalFn, 3>{RationalFn(1), f(x), (x - 1) / g}; };
  auto coeffs = b.coeffs;
  auto tower = b.tower;
  b.ybar1 = [=](const RationalFn& w) {
    return vec_scale(two_box_element(*tower, "E", "P", coeffs(c * c / w)), f(w / c) * f(c / w));
  };
  b.ctilde = f;
  b.cross = [c](const RationalFn& x) { return c / x; };
  b.poles = {c};
}

void finish_bmw(Baxterisation& b, const RationalFn& tau, const RationalFn& q, int omega, BmwStar star,
                int max_level) {
  b.tower = bmw_tower(b.alphabet, tau, q, star, max_level);
  RationalFn Q = q - q.inverse(), q2 = q * q, om = omega == 0 ? -tau * q : tau / q;
  b.coeffs = [=](const RationalFn& x) {
    RationalFn pre = (q2 - 1) / (q2 - x);
    return std::array<RationalFn, 3>{pre, pre * (1 - x) / (x - om), pre * (1 - x) / (Q * x)};
  };
  auto bf = [=](const RationalFn& x) { return om * (1 - x) * (q2 - om / x) / (x * (x - om) * (q2 - x)); };
  auto coeffs = b.coeffs;
  auto tower = b.tower;
  b.ybar1 = [=](const RationalFn& w) {
    return vec_scale(two_box_element(*tower, "e", "g", coeffs(om * om / w)), bf(w / om) * bf(om / w));
  };
  b.ctilde = bf;
  b.cross = [om](const RationalFn& x) { return om / x; };
  b.poles = {q2, om};
}

void finish_liu(Baxterisation& b, const RationalFn& d, int mu, const GQ& eps, int max_level) {
  b.tower = liu_tower(b.alphabet, d, eps, max_level);
  RationalFn m(mu);
  b.coeffs = [=](const RationalFn& x) {
    RationalFn ph = liu_phi(x), k = (ph - d).inverse();
    return std::array<RationalFn, 3>{ph * k, k, m * d * k};
  };
  RationalFn D = liu_Delta(d);
  b.poles = {-D};
  auto coeffs = b.coeffs;
  auto tower = b.tower;
  b.ybar1 = [=](const RationalFn& w) {
    Vec r = rotate_element(*tower, 2, two_box_element(*tower, "e", "s", coeffs(D / w)), 2);
    return vec_scale(r, liu_phi(w) * liu_phi(D / w));
  };
}

std::string omega_label(int omega) { return omega == 0 ? "omega=-tau*q" : "omega=tau/q"; }

std::string liu_label(int mu, const GQ& eps) {
  return "Liu mu=" + std::to_string(mu) + " eps=" + (eps == GQ::i() ? "i" : "-i");
}

}  // namespace

RationalFn liu_phi(const RationalFn& x) { return RationalFn(GQ::i()) * (1 + x) / (1 - x); }

RationalFn liu_Delta(const RationalFn& delta) {
  RationalFn i(GQ::i());
  return (i - delta) / (i + delta);
}

Baxterisation fc_baxterisation(const AlphabetPtr& a, int max_level) {
  Baxterisation b = base(Family::FC, "FC", "P", a);
  finish_fc(b, RationalFn::var(a, "gamma"), max_level);
  return b;
}

Baxterisation bmw_baxterisation(const AlphabetPtr& a, int omega, BmwStar star, int max_level) {
  Baxterisation b = base(Family::BMW, "BMW " + omega_label(omega), "g", a);
  finish_bmw(b, RationalFn::var(a, "tau"), RationalFn::var(a, "q"), omega, star, max_level);
  return b;
}

Baxterisation liu_baxterisation(const AlphabetPtr& a, int mu, const GQ& eps, int max_level) {
  Baxterisation b = base(Family::Liu, liu_label(mu, eps), "s", a);
  finish_liu(b, RationalFn::var(a, "delta"), mu, eps, max_level);
  return b;
}

Baxterisation fc_baxterisation_at(const GQ& gamma, int max_level) {
  Baxterisation b = base(Family::FC, "FC", "P", make_alphabet({"u", "v"}, {Reality::Real, Reality::Real}));
  finish_fc(b, RationalFn(gamma), max_level);
  return b;
}

Baxterisation bmw_baxterisation_at(const GQ& tau, const GQ& q, int omega, int max_level) {
  Baxterisation b =
      base(Family::BMW, "BMW " + omega_label(omega), "g", make_alphabet({"u", "v"}, {Reality::Real, Reality::Real}));
  finish_bmw(b, RationalFn(tau), RationalFn(q), omega, BmwStar::Same, max_level);
  return b;
}

Baxterisation liu_baxterisation_at(const GQ& delta, int mu, const GQ& eps, int max_level) {
  Baxterisation b = base(Family::Liu, liu_label(mu, eps), "s",
                         make_alphabet({"u", "v"}, {Reality::UnitModulus, Reality::UnitModulus}));
  finish_liu(b, RationalFn(delta), mu, eps, max_level);
  return b;
}

Vec horizontal(const Tower& t, const Vec& a, const Vec& b) {
  const auto& A = t.level(2);
  return rotate_element(t, 2, A.mul(rotate_element(t, 2, a, 1), rotate_element(t, 2, b, 1)), -1);
}

Check check_inversion(const Baxterisation& b, int i) {
  const auto& A = b.tower->level(2);
  Vec p = A.mul(b.rot(b.Y(i, b.u, b.v), 1), b.rot(b.Ybar(i, b.u, b.v), 1));
  bool ok = p == A.one();
  return {b.label + " inversion " + std::to_string(i), ok, ok ? "" : A.to_string(p)};
}

Vec ybe_residual(const Baxterisation& b, int i) {
  const auto& A3 = b.tower->level(3);
  auto at = [&](const Vec& p, int pos) { return place(*b.tower, p, pos, 3); };
  Vec Ru = b.R(b.u), Rv = b.R(b.v), y = b.Y(i, b.u, b.v);
  Vec lhs, rhs;
  if (i == 1) {
    lhs = A3.mul({at(Ru, 1), at(y, 2), at(Rv, 1)});
    rhs = A3.mul({at(Rv, 2), at(y, 1), at(Ru, 2)});
  } else if (i == 2) {
    Vec Rr = b.rot(Ru, -1);
    lhs = A3.mul({at(Rr, 2), at(y, 1), at(Rv, 2)});
    rhs = A3.mul({at(Rv, 1), at(y, 2), at(Rr, 1)});
  } else if (i == 3) {
    Vec Rr = b.rot(Ru, 1);
    lhs = A3.mul({at(Rv, 2), at(y, 1), at(Rr, 2)});
    rhs = A3.mul({at(Rr, 1), at(y, 2), at(Rv, 1)});
  } else {
    throw std::invalid_argument("YBE index must be 1, 2 or 3");
  }
  return vec_sub(lhs, rhs);
}

Check check_ybe(const Baxterisation& b, int i) {
  Vec r = ybe_residual(b, i);
  bool ok = vec_is_zero(r);
  return {b.label + " YBE_" + std::to_string(i), ok, ok ? "" : b.tower->level(3).to_string(r)};
}

std::array<Check, 2> check_bybe(const Baxterisation& b) {
  const auto& A = b.tower->level(2);
  const RationalFn &u = b.u, &v = b.v;
  Vec l1 = A.mul(b.rot(b.Ybar(2, u, v), -1), b.Ybar(1, u, v));
  Vec r1 = A.mul(b.Ybar(1, v, u), b.rot(b.Ybar(3, u, v), 1));
  Vec l2 = A.mul(b.rot(b.Y(2, u, v), 1), b.Y(1, u, v));
  Vec r2 = A.mul(b.Y(1, v, u), b.rot(b.Y(3, u, v), -1));
  return {Check{b.label + " boundary YBE (barred)", l1 == r1, ""},
          Check{b.label + " boundary YBE", l2 == r2, ""}};
}

std::pair<int, int> liu_crossing_ranks(const Baxterisation& b) {
  const auto& A = b.tower->level(2);
  auto c = b.coeffs(b.u);
  // R(c) is proportional to phi(c) 1 + e + (r_s/r_e) s, with r_s/r_e fixed.
  RationalFn ratio = c[2] / c[1];
  Vec col_k = A.one();
  Vec col_l = vec_add(A.gen("e1"), vec_scale(A.gen(b.third + "1"), ratio));
  Vec rhs = b.rot(b.R(b.u), 1);
  Matrix M(A.dim(), std::vector<RationalFn>(2)), Aug(A.dim(), std::vector<RationalFn>(3));
  for (int i = 0; i < A.dim(); ++i) {
    M[i] = {col_k[i], col_l[i]};
    Aug[i] = {col_k[i], col_l[i], rhs[i]};
  }
  return {mat_rank(M), mat_rank(Aug)};
}

Check check_crossing(const Baxterisation& b) {
  if (!b.ctilde) {
    auto [r, ra] = liu_crossing_ranks(b);
    bool ok = r == 2 && ra == 3;
    return {b.label + " crossing system inconsistent", ok,
            "rank " + std::to_string(r) + ", augmented rank " + std::to_string(ra)};
  }
  Vec want = vec_scale(b.R(b.cross(b.u)), b.ctilde(b.u));
  bool ok = b.rot(b.R(b.u), 1) == want && b.rot(b.R(b.u), -1) == want;
  return {b.label + " crossing symmetry", ok, ""};
}

Check check_self_adjoint(const Baxterisation& b) {
  const auto& A = b.tower->level(2);
  Vec r = b.R(b.u);
  bool ok = A.star_of(r) == r;
  return {b.label + " R(u)* = R(u)", ok, ""};
}

bool specious(const std::function<std::array<RationalFn, 3>(const RationalFn&)>& coeffs, const RationalFn& u,
              const RationalFn& v) {
  auto cu = coeffs(u), cv = coeffs(v);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (cu[a] * cv[b] != cu[b] * cv[a]) return false;
  return true;
}

DefectExpansion ybe_defect_expansion(const AlphabetPtr& a, const RationalFn& delta, const RationalFn& alpha,
                                     const GQ& eps) {
  Presentation p = psg_presentation(3, a, delta, alpha, eps);
  RewriteSystem rs(p);
  rs.complete(6);
  auto X = [&](int k, int i) {
    if (k == 0) return FreeElem(RationalFn(1));
    return p.gen(k == 1 ? "e" : "s", i);
  };
  const char* words[5][2] = {{"e1", "e2"}, {"s1", "s2"}, {"s1 e2", "e1 s2"}, {"s2 e1", "e2 s1"},
                             {"s1 s2 s1", "s2 s1 s2"}};
  DefectExpansion out;
  out.in_span = true;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) {
        // r(u) sits on the right: R_1(v) Y_2 R_1(u) - R_2(u) Y_1 R_2(v).
        FreeElem d = rs.reduce(X(z, 1) * X(y, 2) * X(x, 1) - X(x, 2) * X(y, 1) * X(z, 2));
        for (int k = 0; k < 5; ++k) {
          Word plus = p.parse_word(words[k][0]), minus = p.parse_word(words[k][1]);
          RationalFn cp, cm;
          if (auto it = d.terms.find(plus); it != d.terms.end()) cp = it->second;
          if (auto it = d.terms.find(minus); it != d.terms.end()) cm = it->second;
          if (cp + cm != RationalFn(0)) out.in_span = false;
          if (!cp.is_zero()) out.brackets[k][{x, y, z}] = cp;
          d.terms.erase(plus);
          d.terms.erase(minus);
        }
        if (!d.terms.empty()) out.in_span = false;
      }
  return out;
}

BraidLimits braid_limits(const Baxterisation& b) {
  if (b.family != Family::Liu) throw std::invalid_argument("braid limits are defined for the Liu family");
  const auto& A = b.tower->level(2);
  RationalFn i(GQ::i());
  auto c0 = b.coeffs(RationalFn(0));
  // delta from the ratio r_s/r_e = mu delta.
  RationalFn mud = c0[2] / c0[1];
  BraidLimits out;
  RationalFn delta = b.tower->loop();
  out.at_zero = vec_scale(b.element(c0), 1 + i * delta);
  // u = 1/v, then v -> 0.
  int vi = b.alphabet->index("v");
  std::array<RationalFn, 3> cinf = b.coeffs(b.v.inverse());
  for (auto& c : cinf) c = c.subs({{vi, RationalFn(0)}});
  out.at_infinity = vec_scale(b.element(cinf), 1 - i * delta);

  Vec e = A.gen("e1"), s = A.gen("s1");
  auto hb = [&](const GQ& e1, const GQ& e2) {
    Vec x = A.one();
    vec_axpy(x, RationalFn(e1), e);
    vec_axpy(x, RationalFn(e2) * delta, s);
    return x;
  };
  RationalFn mu = mud / delta;
  out.checks.push_back({b.label + " (1+i delta)R(0) = 1 - i e - i mu delta s",
                        out.at_zero == hb(-GQ::i(), -GQ::i() * mu.constant_value()), ""});
  out.checks.push_back({b.label + " (1-i delta)R(inf) = 1 + i e + i mu delta s",
                        out.at_infinity == hb(GQ::i(), GQ::i() * mu.constant_value()), ""});
  const auto& A3 = b.tower->level(3);
  for (GQ e1 : {GQ::i(), -GQ::i()})
    for (GQ e2 : {GQ::i(), -GQ::i()}) {
      Vec x = hb(e1, e2);
      std::string tag = " b=1" + std::string(e1 == GQ::i() ? "+" : "-") + "ie" + (e2 == GQ::i() ? "+" : "-") +
                        "i delta s";
      Vec sq = A.mul(x, x);
      Vec want = vec_sub(vec_scale(x, RationalFn(2)), vec_scale(A.one(), delta * delta + 1));
      out.checks.push_back({b.label + tag + ": b^2 = 2b - (delta^2+1)", sq == want, ""});
      Vec inv = vec_scale(vec_sub(vec_scale(A.one(), RationalFn(2)), x), (delta * delta + 1).inverse());
      out.checks.push_back({b.label + tag + ": b b^-1 = 1", A.mul(x, inv) == A.one(), ""});
      Vec b1 = place(*b.tower, x, 1, 3), b2 = place(*b.tower, x, 2, 3);
      out.checks.push_back({b.label + tag + ": braid relation", A3.mul({b1, b2, b1}) == A3.mul({b2, b1, b2}), ""});
    }
  return out;
}

}  // namespace ybpa

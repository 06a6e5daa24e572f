#include "ybpa/presentations.hpp"

#include <stdexcept>

#include "ybpa/diagram.hpp"

namespace ybpa {

namespace {

Presentation skeleton(const std::string& name, int n, const AlphabetPtr& a, std::vector<std::string> fams) {
  Presentation p;
  p.name = name;
  p.n = n;
  p.alphabet = a;
  p.families = std::move(fams);
  return p;
}

// Self-adjoint letters.
void self_star(Presentation& p) {
  p.star_letter.clear();
  for (int f = 0; f < int(p.families.size()); ++f) {
    p.star_letter.push_back([f](int i) { return FreeElem::word(Word(1, letter(f, i))); });
  }
}

// x_i y_j = y_j x_i for every pair of families and |i-j| > 1.
void far_commute(Presentation& p) {
  for (auto& f1 : p.families)
    for (auto& f2 : p.families)
      for (int i = 1; i < p.n; ++i)
        for (int j = i + 2; j < p.n; ++j) p.relations.push_back(p.gen(f1, i) * p.gen(f2, j) - p.gen(f2, j) * p.gen(f1, i));
}

// Neighbouring pairs (i, j) with |i-j| = 1.
template <class F>
void neighbours(int n, F f) {
  for (int i = 1; i < n; ++i) {
    if (i + 1 < n) f(i, i + 1, 1);
    if (i - 1 >= 1) f(i, i - 1, -1);
  }
}

RationalFn epow(const GQ& eps, int k) { return k >= 0 ? RationalFn(eps) : RationalFn(eps.inverse()); }

}  // namespace

Presentation tl_presentation(int n, const AlphabetPtr& a, const RationalFn& delta) {
  Presentation p = skeleton("TL", n, a, {"e"});
  auto e = [&](int i) { return p.gen("e", i); };
  for (int i = 1; i < n; ++i) p.relations.push_back(e(i) * e(i) - delta * e(i));
  neighbours(n, [&](int i, int j, int) { p.relations.push_back(e(i) * e(j) * e(i) - e(i)); });
  far_commute(p);
  p.closure_identity = delta;
  p.closure_letter = {RationalFn(1)};
  self_star(p);
  return p;
}

Presentation psg_presentation(int n, const AlphabetPtr& a, const RationalFn& delta, const RationalFn& alpha,
                              const GQ& eps) {
  GQ e2 = eps * eps;
  if (e2 == GQ(-1) && !alpha.is_zero()) throw std::invalid_argument("PSG: alpha must vanish for imaginary eps");
  if (!(e2 == GQ(1) || e2 == GQ(-1))) throw std::invalid_argument("PSG: eps must be a fourth root of unity");
  Presentation p = skeleton("PSG", n, a, {"e", "s"});
  auto e = [&](int i) { return p.gen("e", i); };
  auto s = [&](int i) { return p.gen("s", i); };
  FreeElem one(RationalFn(1));
  RationalFn id = delta.inverse();
  for (int i = 1; i < n; ++i) {
    p.relations.push_back(s(i) * s(i) - one + id * e(i) - alpha * s(i));
    p.relations.push_back(e(i) * s(i));
    p.relations.push_back(s(i) * e(i));
    p.relations.push_back(e(i) * e(i) - delta * e(i));
  }
  neighbours(n, [&](int i, int j, int sg) {
    p.relations.push_back(e(i) * e(j) * e(i) - e(i));
    p.relations.push_back(e(i) * e(j) * s(i) - epow(eps, sg) * (e(i) * s(j)));
    p.relations.push_back(s(i) * e(j) * e(i) - epow(eps, -sg) * (s(j) * e(i)));
    p.relations.push_back(e(i) * s(j) * s(i) - e(i) * (epow(eps, -sg) * (e(j) - id * one) + alpha * s(j)));
    p.relations.push_back(s(i) * s(j) * e(i) - (epow(eps, sg) * (e(j) - id * one) + alpha * s(j)) * e(i));
    p.relations.push_back(e(i) * s(j) * e(i));
    if (sg == 1) p.relations.push_back(s(i) * e(j) * s(i) - s(j) * e(i) * s(j));
  });
  far_commute(p);
  p.closure_identity = delta;
  p.closure_letter = {RationalFn(1), RationalFn(0)};
  self_star(p);
  return p;
}

Presentation liu_presentation(int n, const AlphabetPtr& a, const RationalFn& delta, const GQ& eps) {
  if (!(eps * eps == GQ(-1))) throw std::invalid_argument("Liu: eps must be +-i");
  Presentation p = psg_presentation(n, a, delta, RationalFn(0), eps);
  p.name = "Liu";
  auto e = [&](int i) { return p.gen("e", i); };
  auto s = [&](int i) { return p.gen("s", i); };
  RationalFn id2 = delta.pow(-2), ep(eps);
  for (int i = 1; i + 1 < n; ++i) {
    int j = i + 1;
    FreeElem rhs = id2 * (s(i) - s(j) - ep * (e(i) * s(j) - s(j) * e(i) + e(j) * s(i) - s(i) * e(j)));
    p.relations.push_back(s(i) * s(j) * s(i) - s(j) * s(i) * s(j) - rhs);
  }
  return p;
}

Presentation fc_presentation(int n, const AlphabetPtr& a, const RationalFn& gamma) {
  Presentation p = skeleton("FC", n, a, {"E", "P"});
  auto E = [&](int i) { return p.gen("E", i); };
  auto P = [&](int i) { return p.gen("P", i); };
  RationalFn g2 = gamma * gamma;
  for (int i = 1; i < n; ++i) {
    p.relations.push_back(E(i) * E(i) - g2 * E(i));
    p.relations.push_back(P(i) * E(i) - gamma * E(i));
    p.relations.push_back(E(i) * P(i) - gamma * E(i));
    p.relations.push_back(P(i) * P(i) - gamma * P(i));
  }
  neighbours(n, [&](int i, int j, int) {
    p.relations.push_back(E(i) * E(j) * E(i) - E(i));
    p.relations.push_back(P(i) * E(j) * P(i) - P(i) * P(j));
    p.relations.push_back(P(i) * P(j) - P(j) * P(i));
    p.relations.push_back(E(i) * P(j) * E(i) - gamma * E(i));
    p.relations.push_back(P(i) * P(j) * E(i) - gamma * (P(j) * E(i)));
    p.relations.push_back(E(i) * P(j) * P(i) - gamma * (E(i) * P(j)));
    p.relations.push_back(P(i) * P(j) * P(i) - gamma * (P(i) * P(j)));
    p.relations.push_back(E(i) * E(j) * P(i) - E(i) * P(j));
    p.relations.push_back(P(i) * E(j) * E(i) - P(j) * E(i));
  });
  far_commute(p);
  p.closure_identity = g2;
  p.closure_letter = {RationalFn(1), gamma};
  self_star(p);
  return p;
}

RationalFn bmw_delta(const RationalFn& tau, const RationalFn& q) {
  RationalFn Q = q - q.inverse();
  return 1 + (tau - tau.inverse()) / Q;
}

RationalFn bmw_gamma(const RationalFn& tau, const RationalFn& q) {
  RationalFn Q = q - q.inverse();
  return (tau * tau + Q * tau - 1) * (tau * tau + Q * (Q * Q + 3) * tau - 1);
}

FreeElem bmw_ginv(const Presentation& p, int i) {
  const RationalFn& Q = p.params.at("Q");
  return p.gen("g", i) - Q * (FreeElem(RationalFn(1)) - p.gen("e", i));
}

Presentation bmw_presentation(int n, const AlphabetPtr& a, const RationalFn& tau, const RationalFn& q, BmwStar star) {
  Presentation p = bmw_presentation_Q(n, a, tau, q - q.inverse(), star);
  p.params["q"] = q;
  return p;
}

Presentation bmw_presentation_Q(int n, const AlphabetPtr& a, const RationalFn& tau, const RationalFn& Q, BmwStar star) {
  Presentation p = skeleton("BMW", n, a, {"e", "g"});
  RationalFn delta = 1 + (tau - tau.inverse()) / Q, ti = tau.inverse();
  p.closure_identity = delta;
  p.closure_letter = {RationalFn(1), tau};
  p.params = {{"tau", tau}, {"Q", Q}, {"delta", delta}};
  auto e = [&](int i) { return p.gen("e", i); };
  auto g = [&](int i) { return p.gen("g", i); };
  auto gi = [&](int i) { return bmw_ginv(p, i); };
  FreeElem one(RationalFn(1));
  for (int i = 1; i < n; ++i) {
    p.relations.push_back(g(i) * gi(i) - one);
    p.relations.push_back(g(i) * e(i) - ti * e(i));
    p.relations.push_back(e(i) * g(i) - ti * e(i));
    p.relations.push_back(e(i) * e(i) - delta * e(i));
  }
  neighbours(n, [&](int i, int j, int) {
    p.relations.push_back(g(i) * g(j) * g(i) - g(j) * g(i) * g(j));
    p.relations.push_back(g(i) * e(j) * g(i) - gi(j) * e(i) * gi(j));
    p.relations.push_back(e(i) * g(j) * g(i) - e(i) * e(j));
    p.relations.push_back(g(j) * g(i) * e(j) - e(i) * e(j));
    p.relations.push_back(e(i) * e(j) * e(i) - e(i));
    p.relations.push_back(g(i) * e(j) * e(i) - gi(j) * e(i));
    p.relations.push_back(e(i) * e(j) * g(i) - e(i) * gi(j));
    p.relations.push_back(e(i) * g(j) * e(i) - tau * e(i));
  });
  far_commute(p);
  p.star_letter.push_back([](int i) { return FreeElem::word(Word(1, letter(0, i))); });
  if (star == BmwStar::Same) {
    p.star_letter.push_back([](int i) { return FreeElem::word(Word(1, letter(1, i))); });
  } else {
    p.star_letter.push_back([Q](int i) {
      return FreeElem::word(Word(1, letter(1, i))) - Q * (FreeElem(RationalFn(1)) - FreeElem::word(Word(1, letter(0, i))));
    });
  }
  return p;
}

Presentation bs_presentation(int n, const AlphabetPtr& a) {
  Presentation p = skeleton("BS", n, a, {"b"});
  auto b = [&](int i) { return p.gen("b", i); };
  neighbours(n, [&](int i, int j, int sg) {
    if (sg == 1) p.relations.push_back(b(i) * b(j) * b(i) - b(j) * b(i) * b(j));
  });
  far_commute(p);
  self_star(p);
  return p;
}

long expected_dimension(const std::string& algebra, int n) {
  if (algebra == "TL") return dimension_tl(n);
  if (algebra == "FC") return dimension_fc(n);
  if (algebra == "BMW" || algebra == "Liu") return dimension_bmw(n);
  return -1;
}

namespace {

std::unique_ptr<PresentedTower> wrap(const std::string& name, const AlphabetPtr& a, PresentedTower::Factory f,
                                     int max_level) {
  return std::make_unique<PresentedTower>(name, a, std::move(f), max_level, 6, 16,
                                          [name](int n) { return expected_dimension(name, n); });
}

}  // namespace

std::unique_ptr<PresentedTower> tl_tower(const AlphabetPtr& a, const RationalFn& delta, int max_level) {
  return wrap("TL", a, [=](int n) { return tl_presentation(n, a, delta); }, max_level);
}

std::unique_ptr<PresentedTower> psg_tower(const AlphabetPtr& a, const RationalFn& delta, const RationalFn& alpha,
                                          const GQ& eps, int max_level) {
  if (max_level > 2) throw std::invalid_argument("PSG towers are infinite-dimensional beyond n = 2");
  return std::make_unique<PresentedTower>(
      "PSG", a, [=](int n) { return psg_presentation(n, a, delta, alpha, eps); }, max_level, 6, 8);
}

std::unique_ptr<PresentedTower> liu_tower(const AlphabetPtr& a, const RationalFn& delta, const GQ& eps, int max_level) {
  return wrap("Liu", a, [=](int n) { return liu_presentation(n, a, delta, eps); }, max_level);
}

std::unique_ptr<PresentedTower> fc_tower(const AlphabetPtr& a, const RationalFn& gamma, int max_level) {
  return wrap("FC", a, [=](int n) { return fc_presentation(n, a, gamma); }, max_level);
}

std::unique_ptr<PresentedTower> bmw_tower(const AlphabetPtr& a, const RationalFn& tau, const RationalFn& q,
                                          BmwStar star, int max_level) {
  return wrap("BMW", a, [=](int n) { return bmw_presentation(n, a, tau, q, star); }, max_level);
}

}  // namespace ybpa

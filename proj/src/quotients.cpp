#include "ybpa/quotients.hpp"

namespace ybpa {

namespace {

void append(QuotientReport& into, const QuotientReport& from, const std::string& prefix) {
  for (auto& c : from.checks) into.checks.push_back({prefix + c.name, c.pass});
}

// Completes the quotient presentation, then checks the source relations
// under the given substitution inside it.
long quotient_direction(Presentation quotient, const Presentation& source,
                        const std::function<Vec(const FiniteAlgebra&, const std::string&, int)>& subs,
                        QuotientReport& rep, const std::string& prefix) {
  BasisTable T(quotient, 6, 16);
  FiniteAlgebra A = T.algebra();
  auto r = verify_quotient_map(source, A, [&](const std::string& f, int i) { return subs(A, f, i); });
  append(rep, r, prefix);
  return A.dim();
}

}  // namespace

FreeElem fc_iota(const Presentation& p, int i, int j, const RationalFn& c) {
  FreeElem si = c * p.gen("s", i), sj = c * p.gen("s", j), ei = p.gen("e", i), ej = p.gen("e", j);
  return si * ej * si - si * sj + sj * ei + ej * si + ej * ei - si - sj - FreeElem(RationalFn(1));
}

FreeElem bmw_iota(const Presentation& p, int i, const RationalFn& c, const RationalFn& tau, const RationalFn& q) {
  return bmw_iota_Q(p, i, c, tau, q - q.inverse());
}

FreeElem bmw_iota_Q(const Presentation& p, int i, const RationalFn& c, const RationalFn& tau, const RationalFn& Q) {
  int j = i + 1;
  FreeElem si = c * p.gen("s", i), sj = c * p.gen("s", j), ei = p.gen("e", i), ej = p.gen("e", j);
  RationalFn k1 = Q * Q * tau * (tau * tau + 1) * (tau * tau + Q * (Q * Q + 3) * tau - 1);
  RationalFn k2 = Q * Q * tau * (Q + tau) * (1 - Q * tau);
  return si * sj * si - sj * si * sj + k1 * (ei - ej) - k2 * (si - sj + ei * sj - ej * si + sj * ei - si * ej);
}

FreeElem liu_iota(const Presentation& p, int i, const RationalFn& delta, const GQ& eps) {
  int j = i + 1;
  FreeElem si = p.gen("s", i), sj = p.gen("s", j), ei = p.gen("e", i), ej = p.gen("e", j);
  return si * sj * si - sj * si * sj -
         delta.pow(-2) * (si - sj - RationalFn(eps) * (ei * sj - sj * ei + ej * si - si * ej));
}

QuotientSummary check_fc_quotient(int n, int mu) {
  auto a = make_alphabet({"gamma"}, {Reality::Real});
  RationalFn g = RationalFn::var(a, "gamma"), gi = g.inverse(), m(mu);
  RationalFn alpha = m * (g - gi), delta = g * g, c = m * g;
  Presentation ps = psg_presentation(n, a, delta, alpha, GQ(1));
  std::vector<std::pair<std::string, FreeElem>> iotas;
  for (int i = 1; i < n; ++i)
    for (int j : {i - 1, i + 1})
      if (j >= 1 && j < n) iotas.emplace_back("iota_" + std::to_string(i) + "," + std::to_string(j), fc_iota(ps, i, j, c));

  QuotientSummary out;
  BasisTable fcT(fc_presentation(n, a, g), 6, 16);
  FiniteAlgebra FC = fcT.algebra();
  auto into_fc = [&](const std::string& f, int i) {
    std::string k = std::to_string(i);
    if (f == "e") return FC.gen("E" + k);
    Vec shat = vec_add(vec_scale(FC.one(), RationalFn(-1)), vec_scale(FC.gen("E" + k), RationalFn(-1)));
    vec_axpy(shat, g + gi, FC.gen("P" + k));
    return vec_scale(shat, c.inverse());
  };
  append(out.report, verify_quotient_map(ps, FC, into_fc, iotas), "FC side: ");

  Presentation quot = ps;
  quot.name = "PSG/iota";
  for (auto& [name, x] : iotas) quot.relations.push_back(x);
  out.quotient_dim = quotient_direction(
      quot, fc_presentation(n, a, g),
      [&](const FiniteAlgebra& A, const std::string& f, int i) {
        std::string k = std::to_string(i);
        if (f == "E") return A.gen("e" + k);
        Vec v = vec_add(A.one(), A.gen("e" + k));
        vec_axpy(v, c, A.gen("s" + k));
        return vec_scale(v, (g + gi).inverse());
      },
      out.report, "quotient side: ");
  return out;
}

QuotientSummary check_bmw_quotient(int n, int mu) {
  // Everything depends on q through Q = q - 1/q, so (tau, Q) are the symbols;
  // r is a formal square root of Gamma.
  auto base = make_alphabet({"tau", "Q", "r"}, {Reality::Real, Reality::Real, Reality::Real});
  RationalFn t0 = RationalFn::var(base, "tau"), Q0 = RationalFn::var(base, "Q");
  RationalFn G0 = (t0 * t0 + Q0 * t0 - 1) * (t0 * t0 + Q0 * (Q0 * Q0 + 3) * t0 - 1);
  auto ext = std::make_shared<Alphabet>(*base);
  ext->roots.push_back({2, G0.num()});
  AlphabetPtr a = ext;
  RationalFn tau = RationalFn::var(a, "tau"), Q = RationalFn::var(a, "Q"), sg = RationalFn::var(a, "r"), m(mu);
  RationalFn delta = 1 + (tau - tau.inverse()) / Q, alpha = m * Q * (tau * tau + 1) / sg, c = m * sg;
  RationalFn k0 = Q * tau * (Q + tau), k1 = Q * (1 - Q * tau), kg = tau * tau + 2 * Q * tau - 1;

  Presentation ps = psg_presentation(n, a, delta, alpha, GQ(1));
  std::vector<std::pair<std::string, FreeElem>> iotas;
  for (int i = 1; i + 1 < n; ++i) iotas.emplace_back("iota_" + std::to_string(i), bmw_iota_Q(ps, i, c, tau, Q));

  QuotientSummary out;
  BasisTable bT(bmw_presentation_Q(n, a, tau, Q), 6, 16);
  FiniteAlgebra B = bT.algebra();
  auto into_bmw = [&](const std::string& f, int i) {
    std::string k = std::to_string(i);
    if (f == "e") return B.gen("e" + k);
    Vec v = vec_scale(B.one(), k0);
    vec_axpy(v, k1, B.gen("e" + k));
    vec_axpy(v, -kg, B.gen("g" + k));
    return vec_scale(v, m / sg);
  };
  append(out.report, verify_quotient_map(ps, B, into_bmw, iotas), "BMW side: ");

  Presentation quot = ps;
  quot.name = "PSG/iota";
  for (auto& [name, x] : iotas) quot.relations.push_back(x);
  out.quotient_dim = quotient_direction(
      quot, bmw_presentation_Q(n, a, tau, Q),
      [&](const FiniteAlgebra& A, const std::string& f, int i) {
        std::string k = std::to_string(i);
        if (f == "e") return A.gen("e" + k);
        Vec v = vec_scale(A.one(), k0);
        vec_axpy(v, k1, A.gen("e" + k));
        vec_axpy(v, -c, A.gen("s" + k));
        return vec_scale(v, kg.inverse());
      },
      out.report, "quotient side: ");
  return out;
}

QuotientSummary check_liu_quotient(int n, const GQ& eps) {
  auto a = make_alphabet({"delta"}, {Reality::Real});
  RationalFn d = RationalFn::var(a, "delta");
  Presentation ps = psg_presentation(n, a, d, RationalFn(0), eps);
  std::vector<std::pair<std::string, FreeElem>> iotas;
  for (int i = 1; i + 1 < n; ++i) iotas.emplace_back("iota_" + std::to_string(i), liu_iota(ps, i, d, eps));

  QuotientSummary out;
  BasisTable lT(liu_presentation(n, a, d, eps), 6, 16);
  FiniteAlgebra L = lT.algebra();
  auto same = [](const FiniteAlgebra& A, const std::string& f, int i) { return A.gen(f + std::to_string(i)); };
  append(out.report, verify_quotient_map(ps, L, [&](const std::string& f, int i) { return same(L, f, i); }, iotas),
         "Liu side: ");
  Presentation quot = ps;
  quot.name = "PSG/iota";
  for (auto& [name, x] : iotas) quot.relations.push_back(x);
  out.quotient_dim = quotient_direction(quot, liu_presentation(n, a, d, eps), same, out.report, "quotient side: ");
  return out;
}

QuotientSummary check_braid_semigroup_quotient(int n) {
  auto a = make_alphabet({"tau", "q"}, {Reality::Real, Reality::Real});
  RationalFn tau = RationalFn::var(a, "tau"), q = RationalFn::var(a, "q"), Q = q - q.inverse();
  Presentation bs = bs_presentation(n, a);
  FreeElem one(RationalFn(1));
  auto b = [&](int i) { return bs.gen("b", i); };
  auto quad = [&](int i) { return b(i) * b(i) - Q * b(i) - one; };
  std::vector<std::pair<std::string, FreeElem>> extra;
  for (int i = 1; i < n; ++i) {
    std::string k = std::to_string(i);
    extra.emplace_back("iota_" + k, quad(i) * (tau * b(i) - one));
    FreeElem binv = -tau * (b(i) * b(i)) + (tau * Q + 1) * b(i) + (tau - Q) * one;
    extra.emplace_back("inverse_" + k, b(i) * binv - one);
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j >= n) continue;
      std::string kk = k + "," + std::to_string(j);
      extra.emplace_back("iota1_" + kk, Q * (b(i) * b(i) * b(j) * b(i) - Q * (b(i) * b(j) * b(i)) - b(j) * b(i)) +
                                            tau * (quad(i) * quad(j)));
      extra.emplace_back("iota2_" + kk, b(j) * b(i) * quad(j) * b(i) * b(j) - quad(i));
    }
  }
  QuotientSummary out;
  BasisTable bT(bmw_presentation(n, a, tau, q), 6, 16);
  FiniteAlgebra B = bT.algebra();
  append(out.report,
         verify_quotient_map(bs, B, [&](const std::string&, int i) { return B.gen("g" + std::to_string(i)); }, extra),
         "BMW side: ");
  // e_i = -(tau/Q)(b_i^2 - Q b_i - 1) must reproduce the BMW e_i.
  for (int i = 1; i < n; ++i) {
    Vec g = B.gen("g" + std::to_string(i));
    Vec v = vec_sub(vec_sub(B.mul(g, g), vec_scale(g, Q)), B.one());
    bool ok = vec_scale(v, -tau / Q) == B.gen("e" + std::to_string(i));
    out.report.checks.push_back({"BMW side: e_" + std::to_string(i) + " from b", ok});
  }

  Presentation quot = bs;
  quot.name = "BS/iota";
  for (auto& [name, x] : extra)
    if (name.rfind("iota", 0) == 0) quot.relations.push_back(x);
  out.quotient_dim = quotient_direction(
      quot, bmw_presentation(n, a, tau, q),
      [&](const FiniteAlgebra& A, const std::string& f, int i) {
        Vec bi = A.gen("b" + std::to_string(i));
        if (f == "g") return bi;
        Vec v = vec_sub(vec_sub(A.mul(bi, bi), vec_scale(bi, Q)), A.one());
        return vec_scale(v, -tau / Q);
      },
      out.report, "quotient side: ");
  return out;
}

}  // namespace ybpa

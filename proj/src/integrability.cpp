#include "ybpa/integrability.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <random>

#include "ybpa/diagram.hpp"
#include "ybpa/presented.hpp"
#include "ybpa/tangle.hpp"

namespace ybpa {

RFunction r_function(const Baxterisation& b, std::shared_ptr<const Tower> t) {
  std::string cc = b.family == Family::FC ? "E" : "e", third = b.third;
  auto coeffs = b.coeffs;
  return [=](const RationalFn& x) { return two_box_element(*t, cc, third, coeffs(x)); };
}

RFunction tl_r_function(std::shared_ptr<const Tower> t, const RationalFn& z) {
  return [=](const RationalFn& x) {
    const auto& A = t->level(2);
    Vec r = A.one();
    vec_axpy(r, z * (x - 1) / (z * z - x), A.gen("e1"));
    return r;
  };
}

Vec transfer_element(const Tower& t, int n, const Vec& lower, const Vec& upper) {
  const auto& A = t.level(n + 1);
  Vec X = A.one();
  for (int i = n; i >= 1; --i) X = A.mul(X, place(t, lower, i, n + 1));
  for (int i = 1; i <= n; ++i) X = A.mul(X, place(t, upper, i, n + 1));
  return t.ptrace(n + 1, X);
}

namespace {

int var_index(const RationalFn& x) {
  const auto& a = x.alphabet();
  if (a)
    for (int k = 0; k < a->size(); ++k)
      if (RationalFn::var(a, k) == x) return k;
  throw std::invalid_argument("expected a single variable, got " + x.to_string());
}

RationalFn common_denominator(const Vec& x) {
  RationalFn s(1);
  for (const auto& c : x) s *= RationalFn(s.alphabet() ? s.alphabet() : c.alphabet(), (c * s).den());
  return s;
}

}  // namespace

Vec TransferFamily::at(const RationalFn& x) const {
  if (T.empty()) {
    Vec r = R(x);
    return transfer_element(*tower, n, r, r);
  }
  int k = var_index(u);
  return vec_map(T, [&](const RationalFn& c) { return c.subs({{k, x}}); });
}

bool TransferFamily::is_excluded(const RationalFn& x) const {
  return std::any_of(excluded.begin(), excluded.end(), [&](const RationalFn& e) { return e == x; });
}

TransferFamily transfer_operator(std::string label, std::shared_ptr<const Tower> t, int n, RFunction R,
                                 const RationalFn& u, std::vector<RationalFn> excluded, bool symbolic) {
  if (n < 1) throw std::invalid_argument("transfer operator needs n >= 1");
  if (n + 1 > t->max_level())
    throw std::invalid_argument("transfer operator at n=" + std::to_string(n) + " needs level " +
                                std::to_string(n + 1) + " of " + t->name());
  TransferFamily f;
  f.label = std::move(label);
  f.tower = std::move(t);
  f.n = n;
  f.R = std::move(R);
  f.u = u;
  f.excluded = std::move(excluded);
  if (symbolic) {
    // Build from a polynomial multiple of R, divide once at the end.
    Vec r = f.R(u);
    RationalFn s = common_denominator(r);
    r = vec_scale(r, s);
    f.T = vec_scale(transfer_element(*f.tower, n, r, r), s.pow(-2 * n));
  }
  return f;
}

TransferFamily transfer_operator(const Baxterisation& b, int n, bool symbolic) {
  return transfer_operator(b.label, b.tower, n, [b](const RationalFn& x) { return b.R(x); }, b.u, b.poles,
                           symbolic);
}

CommutationReport commutation_symbolic(const TransferFamily& f, const RationalFn& v) {
  const auto& A = f.tower->level(f.n);
  // Clearing denominators keeps the products polynomial; a nonzero scalar
  // does not change whether T(u) and T(v) commute.
  Vec Nu = vec_scale(f.T, common_denominator(f.T));
  int k = var_index(f.u);
  Vec Nv = vec_map(Nu, [&](const RationalFn& c) { return c.subs({{k, v}}); });
  CommutationReport r;
  r.commutator = vec_sub(A.mul(Nu, Nv), A.mul(Nv, Nu));
  bool zero = vec_is_zero(r.commutator);
  r.check = {f.label + " [T_" + std::to_string(f.n) + "(u),T_" + std::to_string(f.n) + "(v)] = 0 symbolic", zero,
             zero ? "" : "nonzero commutator"};
  return r;
}

namespace {

GQ random_spectral(std::mt19937_64& rng, bool unit) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 40);
  mpq_class t(num(rng), den(rng));
  t.canonicalize();
  if (unit) return unit_circle_point(t);
  return GQ(t);
}

bool unit_modulus_u(const TransferFamily& f) {
  const auto& a = f.u.alphabet();
  return a && a->reality[var_index(f.u)] == Reality::UnitModulus;
}

}  // namespace

CommutationReport commutation_randomized(const TransferFamily& f, int samples, uint64_t seed) {
  const auto& A = f.tower->level(f.n);
  std::mt19937_64 rng(seed);
  bool unit = unit_modulus_u(f);
  CommutationReport r;
  r.seed = seed;
  bool ok = true;
  std::string detail;
  while (r.samples < samples) {
    RationalFn x(random_spectral(rng, unit)), y(random_spectral(rng, unit));
    if (x == y || f.is_excluded(x) || f.is_excluded(y)) {
      ++r.resampled;
      continue;
    }
    Vec Tx, Ty;
    try {
      Tx = f.at(x);
      Ty = f.at(y);
    } catch (const PoleError&) {
      ++r.resampled;
      continue;
    } catch (const DivisionByZero&) {
      ++r.resampled;
      continue;
    }
    ++r.samples;
    Vec c = vec_sub(A.mul(Tx, Ty), A.mul(Ty, Tx));
    if (!vec_is_zero(c)) {
      ok = false;
      detail = "nonzero at u=" + x.to_string() + " v=" + y.to_string();
    }
  }
  r.check = {f.label + " [T_" + std::to_string(f.n) + "(u),T_" + std::to_string(f.n) + "(v)] = 0 at " +
                 std::to_string(samples) + " samples (seed " + std::to_string(seed) + ")",
             ok, detail};
  return r;
}

std::vector<Check> check_selfadjoint(const TransferFamily& f, const std::vector<GQ>& points) {
  const auto& A = f.tower->level(f.n);
  bool unit = unit_modulus_u(f);
  std::vector<Check> out;
  for (const auto& p : points) {
    std::string name = f.label + " T_" + std::to_string(f.n) + "(" + p.to_string() + ")^* = T";
    bool in_domain = unit ? p.norm() == 1 : p.is_real();
    if (!in_domain) {
      out.push_back({name, false, "outside the self-adjointness domain"});
      continue;
    }
    Vec t = f.at(RationalFn(p));
    out.push_back({name, A.star_of(t) == t, ""});
  }
  return out;
}

namespace {

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly monic(UPoly p) {
  trim(p);
  if (p.empty()) return p;
  GQ l = p.back().inverse();
  for (auto& c : p) c *= l;
  return p;
}

UPoly upoly_rem(UPoly a, const UPoly& b) {
  trim(a);
  GQ lb = b.back().inverse();
  while (a.size() >= b.size()) {
    GQ f = a.back() * lb;
    size_t s = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[s + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

GQ constant(const RationalFn& c) {
  if (!c.is_constant()) throw std::invalid_argument("expected a numeric element, got coefficient " + c.to_string());
  return c.constant_value();
}

// Coefficients c with x = sum c_i cols_i, if any.
std::optional<std::vector<GQ>> solve_in_span(const std::vector<Vec>& cols, const Vec& x) {
  if (cols.empty()) return vec_is_zero(x) ? std::optional<std::vector<GQ>>(std::vector<GQ>{}) : std::nullopt;
  Matrix m(x.size(), std::vector<RationalFn>(cols.size()));
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) m[i][j] = cols[j][i];
  auto s = mat_solve(m, x);
  if (!s) return std::nullopt;
  std::vector<GQ> out;
  for (auto& c : *s) out.push_back(constant(c));
  return out;
}

}  // namespace

UPoly upoly_derivative(const UPoly& p) {
  UPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * GQ(mpq_class(long(i))));
  trim(d);
  return d;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = upoly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

UPoly minimal_polynomial(const FiniteAlgebra& A, const Vec& x) {
  for (auto& c : x) constant(c);
  std::vector<Vec> powers{A.one()};
  while (true) {
    Vec next = A.mul(x, powers.back());
    if (auto s = solve_in_span(powers, next)) {
      UPoly p;
      for (auto& c : *s) p.push_back(-c);
      p.push_back(GQ(1));
      return p;
    }
    powers.push_back(std::move(next));
  }
}

bool diagonalizability_check(const FiniteAlgebra& A, const Vec& x) {
  UPoly m = minimal_polynomial(A, x);
  return upoly_gcd(m, upoly_derivative(m)).size() == 1;
}

std::optional<std::vector<GQ>> exact_polynomial_in(const FiniteAlgebra& A, const Vec& b, const Vec& x) {
  int m = int(minimal_polynomial(A, b).size()) - 1;
  std::vector<Vec> powers{A.one()};
  for (int k = 1; k < m; ++k) powers.push_back(A.mul(b, powers.back()));
  return solve_in_span(powers, x);
}

namespace {

using CMat = Eigen::MatrixXcd;

CMat numeric_rep(const FiniteAlgebra& A, const Vec& x) {
  Matrix m = regular_representation(A, x);
  CMat out(A.dim(), A.dim());
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) out(i, j) = constant(m[i][j]).to_complex();
  return out;
}

PolyGenerator fit(const FiniteAlgebra& A, const std::vector<Vec>& samples, const Vec& b) {
  PolyGenerator g;
  g.b = b;
  // Distinct roots of the exact minimal polynomial fix the cluster count.
  UPoly mp = minimal_polynomial(A, b);
  UPoly sq = upoly_gcd(mp, upoly_derivative(mp));
  int distinct = int(mp.size()) - int(sq.size());
  CMat B = numeric_rep(A, b);
  int D = A.dim();
  Eigen::ComplexEigenSolver<CMat> es(B, true);
  const auto& ev = es.eigenvalues();
  double scale = 1;
  for (int i = 0; i < D; ++i) scale = std::max(scale, std::abs(ev(i)));
  // Greedy clustering around running means.
  std::vector<std::complex<double>> centre;
  std::vector<std::vector<int>> members;
  for (int i = 0; i < D; ++i) {
    size_t k = 0;
    while (k < centre.size() && std::abs(ev(i) - centre[k]) >= 1e-6 * scale) ++k;
    if (k == centre.size()) {
      centre.push_back(ev(i));
      members.emplace_back();
    }
    members[k].push_back(i);
    centre[k] += (ev(i) - centre[k]) / double(members[k].size());
  }
  if (int(centre.size()) != distinct) {
    g.residual = std::numeric_limits<double>::infinity();
    return g;
  }
  g.spectrum = centre;
  int m = distinct;
  // Spectral projectors from the eigenvectors.
  CMat W = es.eigenvectors(), Vinv = W.inverse();
  std::vector<CMat> P(m, CMat::Zero(D, D));
  for (int k = 0; k < m; ++k)
    for (int i : members[k]) P[k] += W.col(i) * Vinv.row(i);
  Eigen::MatrixXcd V(m, m);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i) V(k, i) = std::pow(g.spectrum[k], i);
  auto lu = V.partialPivLu();
  for (auto& s : samples) {
    CMat T = numeric_rep(A, s), pb = CMat::Zero(D, D);
    std::vector<std::complex<double>> vals;
    for (int k = 0; k < m; ++k) {
      std::complex<double> val = (T * P[k]).trace() / P[k].trace();
      vals.push_back(val);
      pb += val * P[k];
    }
    // Relative to the size of T(u_j); the family is only defined up to scale.
    g.residual = std::max(g.residual, (pb - T).cwiseAbs().maxCoeff() / std::max(1.0, T.cwiseAbs().maxCoeff()));
    Eigen::VectorXcd y = Eigen::Map<Eigen::VectorXcd>(vals.data(), m);
    Eigen::VectorXcd c = lu.solve(y);
    g.coefficients.emplace_back(c.data(), c.data() + m);
    g.values.push_back(std::move(vals));
  }
  return g;
}

}  // namespace

PolyGenerator find_polynomial_generator(const FiniteAlgebra& A, const std::vector<Vec>& samples, uint64_t seed) {
  if (samples.empty()) throw std::invalid_argument("find_polynomial_generator needs at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, 9);
  PolyGenerator best;
  best.residual = std::numeric_limits<double>::infinity();
  // A combination that merges joint eigenspaces shows up as a large
  // residual; try a few.
  for (int attempt = 0; attempt < 4 && !(best.residual <= 1e-8); ++attempt) {
    Vec b = A.zero();
    for (auto& s : samples) vec_axpy(b, RationalFn(pick(rng)), s);
    PolyGenerator g = fit(A, samples, b);
    if (!(g.residual >= best.residual)) best = std::move(g);
  }
  return best;
}

std::vector<double> gram_eigenvalues(const Tower& t, int n) {
  auto g = gram_matrix(t, n);
  int D = int(g.size());
  CMat m(D, D);
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) m(i, j) = constant(g[i][j]).to_complex();
  Eigen::SelfAdjointEigenSolver<CMat> es(m, Eigen::EigenvaluesOnly);
  auto e = es.eigenvalues();
  return {e.data(), e.data() + D};
}

GQ unit_circle_point(const mpq_class& t) {
  mpq_class d = 1 + t * t;
  return GQ(mpq_class((1 - t * t) / d), mpq_class(2 * t / d));
}

}  // namespace ybpa

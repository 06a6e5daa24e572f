#include <stdexcept>

#include "ybpa/presentations.hpp"

namespace ybpa {

Vec evaluate(const FreeElem& f, const FiniteAlgebra& A, const std::function<Vec(int family, int index)>& subs) {
  Vec out = A.zero();
  std::map<char, Vec> memo;
  for (auto& [w, c] : f.terms) {
    Vec v = A.one();
    for (char x : w) {
      auto it = memo.find(x);
      if (it == memo.end()) it = memo.emplace(x, subs(letter_family(x), letter_index(x))).first;
      v = A.mul(v, it->second);
    }
    vec_axpy(out, c, v);
  }
  return out;
}

bool QuotientReport::all_pass() const {
  for (auto& c : checks)
    if (!c.pass) return false;
  return true;
}

QuotientReport verify_quotient_map(const Presentation& source, const FiniteAlgebra& target,
                                   const std::function<Vec(const std::string& family, int index)>& substitution,
                                   const std::vector<std::pair<std::string, FreeElem>>& extra) {
  auto subs = [&](int f, int i) { return substitution(source.families.at(f), i); };
  QuotientReport rep;
  for (size_t k = 0; k < source.relations.size(); ++k) {
    const FreeElem& r = source.relations[k];
    std::string name = source.name + " relation " + std::to_string(k);
    if (!r.is_zero()) name += " [" + source.word_string(r.terms.begin()->first) + "]";
    rep.checks.push_back({name, vec_is_zero(evaluate(r, target, subs))});
  }
  for (auto& [name, x] : extra) rep.checks.push_back({name, vec_is_zero(evaluate(x, target, subs))});
  return rep;
}

Matrix regular_representation(const FiniteAlgebra& A, const Vec& x) {
  int D = A.dim();
  Matrix m(D, std::vector<RationalFn>(D));
  for (int j = 0; j < D; ++j) {
    Vec col = A.mul(x, A.basis(j));
    for (int i = 0; i < D; ++i) m[i][j] = col[i];
  }
  return m;
}

YbrSpanResult ybr_span_test(const RewriteSystem& rs, const std::vector<std::function<FreeElem(int pos)>>& two_box) {
  int m = int(two_box.size());
  std::vector<FreeElem> at1, at2;
  for (auto& f : two_box) {
    at1.push_back(f(1));
    at2.push_back(f(2));
  }
  std::vector<FreeElem> lhs, span;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z) {
        lhs.push_back(rs.reduce(at1[x] * at2[y] * at1[z]));
        span.push_back(rs.reduce(at2[x] * at1[y] * at2[z]));
      }
  std::map<Word, int> coord;
  for (auto* v : {&lhs, &span})
    for (auto& f : *v)
      for (auto& [w, c] : f.terms) coord.emplace(w, int(coord.size()));
  Matrix M(coord.size(), std::vector<RationalFn>(span.size()));
  for (size_t j = 0; j < span.size(); ++j)
    for (auto& [w, c] : span[j].terms) M[coord[w]][j] = c;
  YbrSpanResult res;
  res.holds = true;
  for (auto& f : lhs) {
    std::vector<RationalFn> b(coord.size());
    for (auto& [w, c] : f.terms) b[coord[w]] = c;
    auto sol = mat_solve(M, b);
    if (!sol) {
      res.holds = false;
      res.coefficients.clear();
      return res;
    }
    res.coefficients.push_back(*sol);
  }
  return res;
}

namespace {

std::optional<mpq_class> rational_sqrt(const GQ& x) {
  if (x.im != 0 || x.re < 0) return std::nullopt;
  mpz_class n = x.re.get_num(), d = x.re.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return mpq_class(rn, rd);
}

}  // namespace

Ps2Idempotents ps2_idempotents(const RationalFn& alpha, const RationalFn& delta, std::optional<RationalFn> sqrt_disc) {
  RationalFn disc = alpha * alpha + 4;
  if (disc.is_zero()) throw std::invalid_argument("ps2_idempotents: alpha = +-2i is degenerate");
  if (!sqrt_disc) {
    std::optional<mpq_class> r;
    if (disc.is_constant()) r = rational_sqrt(disc.constant_value());
    if (!r) throw std::invalid_argument("ps2_idempotents: alpha^2 + 4 needs an explicit square root");
    sqrt_disc = RationalFn(GQ(*r));
  }
  if (*sqrt_disc * *sqrt_disc != disc) throw std::invalid_argument("ps2_idempotents: bad square root");
  Ps2Idempotents out;
  out.p1 = (alpha + *sqrt_disc) / 2;
  out.p2 = (alpha - *sqrt_disc) / 2;
  AlphabetPtr a = delta.alphabet() ? delta.alphabet() : (alpha.alphabet() ? alpha.alphabet() : make_alphabet({}));
  BasisTable T(psg_presentation(2, a, delta, alpha, GQ(1)), 6, 8);
  FiniteAlgebra A = T.algebra();
  Vec one = A.one(), e = A.gen("e1"), s = A.gen("s1");
  Vec q = vec_sub(one, vec_scale(e, delta.inverse()));
  RationalFn w = (out.p1 - out.p2).inverse();
  out.P0 = vec_scale(e, delta.inverse());
  out.P1 = vec_scale(vec_sub(s, vec_scale(q, out.p2)), w);
  out.P2 = vec_scale(vec_sub(vec_scale(q, out.p1), s), w);
  out.complete = vec_add(vec_add(out.P0, out.P1), out.P2) == one;
  std::vector<Vec> P{out.P0, out.P1, out.P2};
  out.orthogonal = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec pr = A.mul(P[i], P[j]);
      if (i == j ? pr != P[i] : !vec_is_zero(pr)) out.orthogonal = false;
    }
  return out;
}

}  // namespace ybpa

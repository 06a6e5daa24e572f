#include "ybpa/scalar.hpp"

#include <algorithm>
#include <random>
#include <ostream>
#include <sstream>

namespace ybpa {

// ---------------------------------------------------------------- GaussianRational

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re *= o.re;
    return *this;
  }
  mpq_class r = re * o.re - im * o.im;
  mpq_class i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (is_real()) return {1 / re, mpq_class(0)};
  mpq_class n = norm();
  return {re / n, -im / n};
}

static mpq_class parse_rational(const std::string& s) {
  if (s.empty()) return 1;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpq_class a = parse_rational(s.substr(0, slash));
    mpq_class b = parse_rational(s.substr(slash + 1));
    if (sgn(b) == 0) throw DivisionByZero("zero denominator in literal " + s);
    return a / b;
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    mpz_class scale = 1;
    for (size_t k = dot + 1; k < s.size(); ++k) scale *= 10;
    mpq_class r(mpz_class(digits, 10), scale);
    r.canonicalize();
    return r;
  }
  for (char c : s)
    if (!isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad number: " + s);
  return mpq_class(mpz_class(s, 10));
}

GaussianRational GaussianRational::parse(const std::string& input) {
  std::string s;
  for (char c : input)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty number");
  GaussianRational out;
  size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    }
    size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string body = s.substr(pos, end - pos);
    bool imag = false;
    std::string cleaned;
    for (char c : body) {
      if (c == 'i' || c == 'I') imag = true;
      else if (c != '*') cleaned += c;
    }
    if (!cleaned.empty() && cleaned.front() == '/') cleaned = "1" + cleaned;
    mpq_class v = parse_rational(cleaned) * sign;
    (imag ? out.im : out.re) += v;
    pos = end;
  }
  return out;
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re.get_str();
  std::string imag;
  if (im == 1) imag = "i";
  else if (im == -1) imag = "-i";
  else imag = im.get_str() + "i";
  if (sgn(re) == 0) return imag;
  return re.get_str() + (sgn(im) > 0 ? "+" : "") + imag;
}

std::complex<double> GaussianRational::to_complex() const { return {re.get_d(), im.get_d()}; }

// ---------------------------------------------------------------- monomials

namespace {
constexpr Mono kHigh = (Mono(0x8000800080008000ULL) << 64) | Mono(0x8000800080008000ULL);
}

bool mono_divides(Mono a, Mono b) { return (((b | kHigh) - a) & kHigh) == kHigh; }

Mono mono_mul(Mono a, Mono b) {
  if (mono_deg(a) + mono_deg(b) > kMaxDegree) throw std::overflow_error("monomial degree exceeds 32767");
  return a + b;
}

Mono mono_gcd(Mono a, Mono b) {
  Mono r = 0;
  int tot = 0;
  for (int v = 0; v < kMaxVars; ++v) {
    int e = std::min(mono_exp(a, v), mono_exp(b, v));
    if (e) {
      r |= Mono(e) << mono_shift(v);
      tot += e;
    }
  }
  return r | (Mono(tot) << kDegShift);
}

Mono mono_from_exps(const std::vector<int>& e) {
  Mono r = 0;
  int tot = 0;
  for (size_t v = 0; v < e.size(); ++v) {
    if (e[v] < 0) throw std::invalid_argument("negative exponent");
    r |= Mono(e[v]) << mono_shift(v);
    tot += e[v];
  }
  if (tot > kMaxDegree) throw std::overflow_error("monomial degree exceeds 32767");
  return r | (Mono(tot) << kDegShift);
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::from_terms(std::vector<Term> t) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  MultiPoly p;
  for (auto& term : t) {
    if (!p.terms.empty() && p.terms.back().first == term.first) {
      p.terms.back().second += term.second;
    } else {
      if (!p.terms.empty() && p.terms.back().second.is_zero()) p.terms.pop_back();
      p.terms.push_back(std::move(term));
    }
  }
  if (!p.terms.empty() && p.terms.back().second.is_zero()) p.terms.pop_back();
  return p;
}

GQ MultiPoly::constant_value() const {
  if (!terms.empty() && terms.back().first == 0) return terms.back().second;
  return GQ(0);
}

int MultiPoly::degree(int v) const {
  int d = terms.empty() ? -1 : 0;
  for (auto& t : terms) d = std::max(d, mono_exp(t.first, v));
  return d;
}

uint32_t MultiPoly::var_mask() const {
  uint32_t m = 0;
  for (auto& t : terms)
    for (int v = 0; v < kMaxVars; ++v)
      if (mono_exp(t.first, v)) m |= 1u << v;
  return m;
}

bool MultiPoly::is_real() const {
  for (auto& t : terms)
    if (!t.second.is_real()) return false;
  return true;
}

static void merge_into(std::vector<MultiPoly::Term>& out, const std::vector<MultiPoly::Term>& a,
                       const std::vector<MultiPoly::Term>& b, bool subtract) {
  out.clear();
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.push_back(b[j++]);
      if (subtract) out.back().second = -out.back().second;
    } else {
      GQ c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!c.is_zero()) out.push_back({a[i].first, std::move(c)});
      ++i;
      ++j;
    }
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms.empty()) return *this;
  std::vector<Term> out;
  merge_into(out, terms, o.terms, false);
  terms.swap(out);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.terms.empty()) return *this;
  std::vector<Term> out;
  merge_into(out, terms, o.terms, true);
  terms.swap(out);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms.empty() || b.terms.empty()) return {};
  if (a.terms.size() == 1) return b.times_mono(a.terms[0].first).scaled(a.terms[0].second);
  if (b.terms.size() == 1) return a.times_mono(b.terms[0].first).scaled(b.terms[0].second);
  std::vector<MultiPoly::Term> prods;
  prods.reserve(a.terms.size() * b.terms.size());
  for (auto& x : a.terms)
    for (auto& y : b.terms) prods.push_back({mono_mul(x.first, y.first), x.second * y.second});
  return MultiPoly::from_terms(std::move(prods));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms) t.second = -t.second;
  return r;
}

MultiPoly MultiPoly::scaled(const GQ& c) const {
  if (c.is_zero()) return {};
  if (c.is_one()) return *this;
  MultiPoly r = *this;
  for (auto& t : r.terms) t.second *= c;
  return r;
}

MultiPoly MultiPoly::times_mono(Mono m) const {
  if (m == 0) return *this;
  MultiPoly r = *this;
  for (auto& t : r.terms) t.first = mono_mul(t.first, m);
  return r;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power of polynomial");
  MultiPoly r(1), base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return MultiPoly();
  if (b.is_constant()) return a.scaled(b.lc().inverse());
  if (b.terms.size() == 1) {
    Mono m = b.lm();
    MultiPoly q;
    q.terms.reserve(a.terms.size());
    GQ inv = b.lc().inverse();
    for (auto& t : a.terms) {
      if (!mono_divides(m, t.first)) return std::nullopt;
      q.terms.push_back({t.first - m, t.second * inv});
    }
    return q;
  }
  if (a.total_degree() < b.total_degree()) return std::nullopt;
  MultiPoly r = a;
  std::vector<Term> q;
  GQ inv = b.lc().inverse();
  Mono blm = b.lm();
  while (!r.is_zero()) {
    Mono m = r.lm();
    if (!mono_divides(blm, m)) return std::nullopt;
    Mono qm = m - blm;
    GQ qc = r.lc() * inv;
    MultiPoly sub;
    sub.terms.reserve(b.terms.size());
    for (auto& t : b.terms) sub.terms.push_back({t.first + qm, t.second * qc});
    r -= sub;
    q.push_back({qm, std::move(qc)});
  }
  MultiPoly out;
  out.terms = std::move(q);
  return out;
}

MultiPoly MultiPoly::monic() const {
  if (terms.empty() || lc().is_one()) return *this;
  return scaled(lc().inverse());
}

MultiPoly MultiPoly::conj_coeffs() const {
  MultiPoly r = *this;
  for (auto& t : r.terms) t.second = t.second.conj();
  return r;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(int v) const {
  std::vector<std::vector<Term>> buckets(std::max(degree(v) + 1, 0));
  for (auto& t : terms) {
    int d = mono_exp(t.first, v);
    buckets[d].push_back({t.first - mono_var(v, d), t.second});
  }
  std::vector<MultiPoly> out(buckets.size());
  for (size_t d = 0; d < buckets.size(); ++d) out[d].terms = std::move(buckets[d]);  // order preserved
  return out;
}

MultiPoly MultiPoly::from_coeffs_in(int v, const std::vector<MultiPoly>& c) {
  std::vector<Term> all;
  for (size_t d = 0; d < c.size(); ++d)
    for (auto& t : c[d].terms) all.push_back({mono_mul(t.first, mono_var(v, int(d))), t.second});
  return from_terms(std::move(all));
}

GQ MultiPoly::eval(const std::vector<GQ>& point) const {
  GQ sum;
  for (auto& t : terms) {
    GQ val = t.second;
    for (int v = 0; v < kMaxVars; ++v) {
      int e = mono_exp(t.first, v);
      if (!e) continue;
      if (v >= int(point.size())) throw std::invalid_argument("evaluation point too short");
      for (int k = 0; k < e; ++k) val *= point[v];
    }
    sum += val;
  }
  return sum;
}

std::complex<double> MultiPoly::eval_complex(const std::vector<std::complex<double>>& point) const {
  std::complex<double> sum = 0;
  for (auto& t : terms) {
    std::complex<double> val = t.second.to_complex();
    for (int v = 0; v < kMaxVars; ++v) {
      int e = mono_exp(t.first, v);
      if (!e) continue;
      if (v >= int(point.size())) throw std::invalid_argument("evaluation point too short");
      val *= std::pow(point[v], e);
    }
    sum += val;
  }
  return sum;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms) {
    const GQ& c = t.second;
    bool unit_mono = t.first == 0;
    std::string cs;
    bool neg = false;
    if (c.is_real()) {
      neg = sgn(c.re) < 0;
      mpq_class a = abs(c.re);
      if (!(a == 1) || unit_mono) cs = a.get_str();
    } else if (sgn(c.re) == 0) {
      neg = sgn(c.im) < 0;
      mpq_class a = abs(c.im);
      cs = (a == 1 ? std::string() : a.get_str()) + "i";
    } else {
      cs = "(" + c.to_string() + ")";
    }
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    os << cs;
    bool need_star = !cs.empty();
    for (int v = 0; v < kMaxVars; ++v) {
      int e = mono_exp(t.first, v);
      if (!e) continue;
      if (need_star) os << "*";
      need_star = true;
      os << (v < int(names.size()) ? names[v] : "x" + std::to_string(v));
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- gcd

namespace {

using UPoly = std::vector<MultiPoly>;  // univariate, coefficients in the other variables

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return int(p.size()) - 1; }

MultiPoly content_in(const MultiPoly& p, int v);

// Pseudo-remainder of f by g (deg f >= deg g).
UPoly prem(UPoly f, const UPoly& g) {
  int n = udeg(g);
  int e = udeg(f) - n + 1;
  const MultiPoly& lg = g.back();
  int steps = 0;
  while (udeg(f) >= n && !f.empty()) {
    int shift = udeg(f) - n;
    MultiPoly lf = f.back();
    for (auto& c : f) c = c * lg;
    for (int k = 0; k <= n; ++k) f[k + shift] -= lf * g[k];
    trim(f);
    ++steps;
  }
  if (steps < e) {
    MultiPoly m = lg.pow(e - steps);
    for (auto& c : f) c = c * m;
  }
  return f;
}

MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = MultiPoly::divide_exact(a, b);
  if (!q) throw std::logic_error("internal: inexact division in gcd");
  return *q;
}

// Subresultant PRS; returns the last nonzero remainder.
UPoly subresultant_last(UPoly f, UPoly g) {
  if (udeg(f) < udeg(g)) std::swap(f, g);
  MultiPoly gg(1), h(1);
  while (true) {
    int d = udeg(f) - udeg(g);
    UPoly r = prem(f, g);
    if (r.empty()) return g;
    if (udeg(r) == 0) return r;
    f = std::move(g);
    MultiPoly div = gg * h.pow(d);
    for (auto& c : r) c = exact(c, div);
    g = std::move(r);
    gg = f.back();
    if (d == 0) {
      // h unchanged
    } else if (d == 1) {
      h = gg;
    } else {
      h = exact(gg.pow(d), h.pow(d - 1));
    }
  }
}

MultiPoly gcd_impl(MultiPoly a, MultiPoly b);

// Primitive PRS: slower than the subresultant one but its coefficients never
// outgrow the inputs by much, so it survives where the other overflows.
UPoly primitive_last(UPoly f, UPoly g) {
  if (udeg(f) < udeg(g)) std::swap(f, g);
  while (true) {
    UPoly r = prem(f, g);
    if (r.empty()) return g;
    if (udeg(r) == 0) return r;
    MultiPoly c;
    for (auto& x : r) {
      if (x.is_zero()) continue;
      c = c.is_zero() ? x.monic() : gcd_impl(c, x);
      if (c.is_constant()) break;
    }
    if (!c.is_constant())
      for (auto& x : r) x = exact(x, c);
    f = std::move(g);
    g = std::move(r);
  }
}

MultiPoly content_in(const MultiPoly& p, int v) {
  UPoly c = p.coeffs_in(v);
  std::vector<const MultiPoly*> nz;
  for (auto& x : c)
    if (!x.is_zero()) nz.push_back(&x);
  std::sort(nz.begin(), nz.end(), [](auto* x, auto* y) { return x->terms.size() < y->terms.size(); });
  MultiPoly g = nz.empty() ? MultiPoly() : nz[0]->monic();
  for (size_t k = 1; k < nz.size() && !g.is_constant(); ++k) g = gcd_impl(g, *nz[k]);
  return g;
}

MultiPoly gcd_impl(MultiPoly a, MultiPoly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  if (a.terms.size() == 1 || b.terms.size() == 1) {
    const MultiPoly& m = a.terms.size() == 1 ? a : b;
    const MultiPoly& o = a.terms.size() == 1 ? b : a;
    Mono g = m.lm();
    for (auto& t : o.terms) {
      g = mono_gcd(g, t.first);
      if (g == 0) break;
    }
    return MultiPoly::monomial(g, GQ(1));
  }
  uint32_t ma = a.var_mask(), mb = b.var_mask();
  uint32_t common = ma & mb;
  if (!common) return MultiPoly(1);
  if (ma != common || mb != common) {
    for (int v = 0; v < kMaxVars; ++v) {
      if ((ma & ~common) >> v & 1) {
        a = content_in(a, v);
        if (a.is_constant()) return MultiPoly(1);
      }
      if ((mb & ~common) >> v & 1) {
        b = content_in(b, v);
        if (b.is_constant()) return MultiPoly(1);
      }
    }
    return gcd_impl(std::move(a), std::move(b));
  }
  if (a.total_degree() >= b.total_degree()) {
    if (MultiPoly::divide_exact(a, b)) return b.monic();
  } else if (MultiPoly::divide_exact(b, a)) {
    return a.monic();
  }
  // Main variable: smallest combined degree.
  int main = -1, best = 1 << 30;
  for (int v = 0; v < kMaxVars; ++v) {
    if (!(common >> v & 1)) continue;
    int d = a.degree(v) + b.degree(v);
    if (d < best) {
      best = d;
      main = v;
    }
  }
  MultiPoly ca = content_in(a, main), cb = content_in(b, main);
  MultiPoly pa = exact(a, ca), pb = exact(b, cb);
  MultiPoly gc = gcd_impl(ca, cb);
  UPoly last;
  try {
    last = subresultant_last(pa.coeffs_in(main), pb.coeffs_in(main));
  } catch (const std::overflow_error&) {
    last = primitive_last(pa.coeffs_in(main), pb.coeffs_in(main));
  }
  MultiPoly gp(1);
  if (udeg(last) > 0) {
    MultiPoly g = MultiPoly::from_coeffs_in(main, last);
    gp = exact(g, content_in(g, main));
  }
  return (gc * gp).monic();
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) { return gcd_impl(a, b); }

// ---------------------------------------------------------------- Alphabet

int Alphabet::index(const std::string& name) const {
  for (int k = 0; k < size(); ++k)
    if (names[k] == name) return k;
  return -1;
}

bool Alphabet::is_root(int v) const {
  for (auto& r : roots)
    if (r.first == v) return true;
  return false;
}

AlphabetPtr make_alphabet(std::vector<std::string> names, std::vector<Reality> reality) {
  if (names.size() > size_t(kMaxVars)) throw std::invalid_argument("at most 7 variables");
  auto a = std::make_shared<Alphabet>();
  a->names = std::move(names);
  a->reality = std::move(reality);
  a->reality.resize(a->names.size(), Reality::Undeclared);
  return a;
}

// ---------------------------------------------------------------- RationalFn

RationalFn::RationalFn(AlphabetPtr a, MultiPoly num, MultiPoly den)
    : alpha_(std::move(a)), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

RationalFn RationalFn::var(const AlphabetPtr& a, const std::string& name) {
  int v = a->index(name);
  if (v < 0) throw std::invalid_argument("unknown variable " + name);
  return var(a, v);
}

RationalFn RationalFn::var(const AlphabetPtr& a, int v) {
  RationalFn r;
  r.alpha_ = a;
  r.num_ = MultiPoly::var(v);
  if (a->is_root(v)) r.normalize();
  return r;
}

GQ RationalFn::constant_value() const {
  if (!is_constant()) throw std::logic_error("not a constant: " + to_string());
  return num_.constant_value() / den_.constant_value();
}

namespace {

MultiPoly reduce_root(const MultiPoly& p, int v, const MultiPoly& sq) {
  if (p.degree(v) < 2) return p;
  auto c = p.coeffs_in(v);
  MultiPoly out;
  MultiPoly power(1);
  MultiPoly r = MultiPoly::var(v);
  for (size_t d = 0; d < c.size(); ++d) {
    if (d >= 2 && d % 2 == 0) power = power * sq;
    if (c[d].is_zero()) continue;
    MultiPoly term = c[d] * power;
    if (d % 2) term = term * r;
    out += term;
  }
  return out;
}

}  // namespace

void RationalFn::normalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (alpha_ && !alpha_->roots.empty()) {
    for (auto& [v, sq] : alpha_->roots) {
      num_ = reduce_root(num_, v, sq);
      den_ = reduce_root(den_, v, sq);
    }
    for (auto& [v, sq] : alpha_->roots) {
      if (den_.degree(v) < 1) continue;
      auto c = den_.coeffs_in(v);
      MultiPoly r = MultiPoly::var(v);
      MultiPoly conj = c[0] - c[1] * r;
      num_ = num_ * conj;
      den_ = c[0] * c[0] - c[1] * c[1] * sq;
      if (den_.is_zero()) throw DivisionByZero("root-extension denominator vanishes");
      for (auto& [w, sq2] : alpha_->roots) num_ = reduce_root(num_, w, sq2);
    }
  }
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    MultiPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *MultiPoly::divide_exact(num_, g);
      den_ = *MultiPoly::divide_exact(den_, g);
    }
  }
  if (!den_.lc().is_one()) {
    GQ inv = den_.lc().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

AlphabetPtr RationalFn::join(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (a->names == b->names && a->roots.size() == b->roots.size()) return a;
  throw AlphabetMismatch("rational functions over different alphabets");
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (o.is_zero()) return *this;
  alpha_ = join(alpha_, o.alpha_);
  if (is_zero()) {
    num_ = o.num_;
    den_ = o.den_;
    return *this;
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ += o.num_;  // both denominators are 1 after normalisation
    if (alpha_ && !alpha_->roots.empty()) normalize();
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  // Only factors of g = gcd(den, o.den) can survive into the sum's gcd.
  MultiPoly g = gcd(den_, o.den_);
  MultiPoly d1 = *MultiPoly::divide_exact(den_, g);
  MultiPoly d2 = *MultiPoly::divide_exact(o.den_, g);
  num_ = num_ * d2 + o.num_ * d1;
  den_ = d1 * o.den_;
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return *this;
  }
  if (!g.is_constant()) {
    MultiPoly h = gcd(num_, g);
    if (!h.is_constant()) {
      num_ = *MultiPoly::divide_exact(num_, h);
      den_ = *MultiPoly::divide_exact(den_, h);
    }
  }
  if (!den_.lc().is_one()) {
    GQ inv = den_.lc().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  if (alpha_ && !alpha_->roots.empty()) normalize();
  return *this;
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  alpha_ = join(alpha_, o.alpha_);
  if (is_zero()) return *this;
  if (o.is_zero()) {
    num_ = MultiPoly();
    den_ = MultiPoly(1);
    return *this;
  }
  if (alpha_ && !alpha_->roots.empty()) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  MultiPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (!d2.is_constant()) {
    MultiPoly g = gcd(n1, d2);
    if (!g.is_constant()) {
      n1 = *MultiPoly::divide_exact(n1, g);
      d2 = *MultiPoly::divide_exact(d2, g);
    }
  }
  if (!d1.is_constant()) {
    MultiPoly g = gcd(n2, d1);
    if (!g.is_constant()) {
      n2 = *MultiPoly::divide_exact(n2, g);
      d1 = *MultiPoly::divide_exact(d1, g);
    }
  }
  num_ = n1 * n2;
  den_ = d1 * d2;
  if (!den_.lc().is_one()) {
    GQ inv = den_.lc().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  return *this;
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  RationalFn r;
  r.alpha_ = alpha_;
  r.num_ = den_;
  r.den_ = num_;
  if (alpha_ && !alpha_->roots.empty()) {
    r.normalize();
  } else if (!r.den_.lc().is_one()) {
    GQ inv = r.den_.lc().inverse();
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) { return *this *= o.inverse(); }

RationalFn RationalFn::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RationalFn r(1), base = *this;
  r.alpha_ = alpha_;
  while (k) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

bool operator==(const RationalFn& a, const RationalFn& b) {
  if (a.alpha_ && b.alpha_) RationalFn::join(a.alpha_, b.alpha_);
  return a.num_ == b.num_ && a.den_ == b.den_;
}

namespace {

RationalFn subs_poly(const MultiPoly& p, const AlphabetPtr& a, const std::map<int, RationalFn>& m) {
  // Powers of substituted values are cached per variable.
  std::map<int, std::vector<RationalFn>> powers;
  auto power = [&](int v, int e) -> const RationalFn& {
    auto& vec = powers[v];
    if (vec.empty()) vec.push_back(RationalFn(1));
    while (int(vec.size()) <= e) vec.push_back(vec.back() * m.at(v));
    return vec[e];
  };
  // Group terms by their substituted part to limit rational additions.
  std::map<Mono, MultiPoly> groups;
  Mono mask = 0;
  for (auto& [v, val] : m) mask |= Mono(kExpMask) << mono_shift(v);
  for (auto& t : p.terms) {
    Mono sub = t.first & mask;
    Mono rest = t.first & ~mask & ~(Mono(kExpMask) << kDegShift);
    int rd = 0;
    for (int v = 0; v < kMaxVars; ++v) rd += mono_exp(rest, v);
    rest |= Mono(rd) << kDegShift;
    groups[sub].terms.push_back({rest, t.second});
  }
  RationalFn out;
  for (auto& [sub, poly] : groups) {
    MultiPoly q = MultiPoly::from_terms(poly.terms);
    RationalFn term(a, q);
    for (int v = 0; v < kMaxVars; ++v) {
      int e = mono_exp(sub, v);
      if (e) term *= power(v, e);
    }
    out += term;
  }
  return out;
}

}  // namespace

RationalFn RationalFn::subs(const std::map<int, RationalFn>& m) const {
  if (m.empty()) return *this;
  RationalFn n = subs_poly(num_, alpha_, m);
  RationalFn d = subs_poly(den_, alpha_, m);
  if (d.is_zero()) throw PoleError("substitution hits a pole: " + to_string());
  return n / d;
}

RationalFn RationalFn::subs(const std::string& name, const RationalFn& val) const {
  if (!alpha_) return *this;
  int v = alpha_->index(name);
  if (v < 0) throw std::invalid_argument("unknown variable " + name);
  return subs(std::map<int, RationalFn>{{v, val}});
}

RationalFn RationalFn::conj() const {
  RationalFn r = *this;
  r.num_ = num_.conj_coeffs();
  r.den_ = den_.conj_coeffs();
  if (!alpha_) return r;
  uint32_t used = num_.var_mask() | den_.var_mask();
  std::map<int, RationalFn> m;
  for (int v = 0; v < alpha_->size(); ++v) {
    if (!(used >> v & 1)) continue;
    Reality cls = alpha_->reality[v];
    if (alpha_->is_root(v) && cls == Reality::Undeclared) cls = Reality::Real;
    if (cls == Reality::Undeclared)
      throw UndeclaredReality("conjugation needs a reality class for " + alpha_->names[v]);
    if (cls == Reality::UnitModulus) m[v] = RationalFn::var(alpha_, v).inverse();
  }
  r.normalize();
  return r.subs(m);
}

GQ RationalFn::eval(const std::vector<GQ>& point) const {
  GQ d = den_.eval(point);
  if (d.is_zero()) throw PoleError("evaluation at a pole of " + to_string());
  return num_.eval(point) / d;
}

std::complex<double> RationalFn::eval_complex(const std::vector<std::complex<double>>& point) const {
  std::complex<double> d = den_.eval_complex(point);
  if (d == 0.0) throw PoleError("evaluation at a pole of " + to_string());
  return num_.eval_complex(point) / d;
}

RationalFn RationalFn::rebind(const AlphabetPtr& a) const {
  if (alpha_ && a && alpha_->names != a->names) throw AlphabetMismatch("rebind to a different alphabet");
  RationalFn r = *this;
  r.alpha_ = a;
  return r;
}

std::string RationalFn::to_string() const {
  static const std::vector<std::string> none;
  const auto& names = alpha_ ? alpha_->names : none;
  std::string n = num_.to_string(names);
  if (den_.is_constant()) return n;
  auto wrap = [](const MultiPoly& p, const std::string& s) {
    return p.terms.size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_, n) + "/" + wrap(den_, den_.to_string(names));
}

GQ random_point_value(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  return GQ(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

GQ random_eval(const RationalFn& f, uint64_t seed) {
  std::mt19937_64 rng(seed);
  int nv = f.alphabet() ? f.alphabet()->size() : 0;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<GQ> pt;
    for (int v = 0; v < nv; ++v) {
      GQ x = random_point_value(rng);
      x.re.canonicalize();
      x.im.canonicalize();
      pt.push_back(x);
    }
    try {
      return f.eval(pt);
    } catch (const PoleError&) {
    }
  }
  throw PoleError("random_eval: no pole-free point found");
}

GQ eval_at(const RationalFn& f, const std::map<std::string, GQ>& assignment) {
  std::vector<GQ> pt;
  if (f.alphabet()) {
    for (auto& name : f.alphabet()->names) {
      auto it = assignment.find(name);
      pt.push_back(it == assignment.end() ? GQ(0) : it->second);
    }
    uint32_t used = f.num().var_mask() | f.den().var_mask();
    for (int v = 0; v < f.alphabet()->size(); ++v)
      if ((used >> v & 1) && !assignment.count(f.alphabet()->names[v]))
        throw std::invalid_argument("assignment misses " + f.alphabet()->names[v]);
  }
  return f.eval(pt);
}

std::ostream& operator<<(std::ostream& os, const GQ& x) { return os << x.to_string(); }
std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string({}); }
std::ostream& operator<<(std::ostream& os, const RationalFn& f) { return os << f.to_string(); }

}  // namespace ybpa

#pragma once

// Exact scalars: Gaussian rationals, sparse multivariate polynomials and
// gcd-normalised rational functions over Q(i), with optional adjoined
// square roots.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ybpa {

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};
struct AlphabetMismatch : std::logic_error {
  using std::logic_error::logic_error;
};
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};
struct UndeclaredReality : std::logic_error {
  using std::logic_error::logic_error;
};

class GaussianRational {
 public:
  mpq_class re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long v) : re(v), im(0) {}  // NOLINT
  GaussianRational(int v) : re(v), im(0) {}   // NOLINT
  GaussianRational(const mpq_class& r) : re(r), im(0) { re.canonicalize(); }  // NOLINT
  GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
  // Accepts "3/2", "-i", "1/2+3i", "2-i/3" style literals.
  static GaussianRational parse(const std::string& s);

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }
  GaussianRational inverse() const;
  mpq_class norm() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::string to_string() const;
  std::complex<double> to_complex() const;
};
using GQ = GaussianRational;

// Monomials are packed into 128 bits as eight 16-bit fields: the top field
// holds the total degree and field 6-v the exponent of variable v, so integer
// comparison is graded lexicographic order and integer addition is
// multiplication.
using Mono = unsigned __int128;
constexpr int kExpBits = 16;
constexpr int kMaxVars = 7;
constexpr int kMaxDegree = 32767;
constexpr int kDegShift = kExpBits * kMaxVars;
constexpr unsigned kExpMask = 0xffff;
inline int mono_shift(int v) { return kExpBits * (kMaxVars - 1 - v); }

inline int mono_exp(Mono m, int v) { return int((m >> mono_shift(v)) & kExpMask); }
inline int mono_deg(Mono m) { return int((m >> kDegShift) & kExpMask); }
inline Mono mono_var(int v, int k = 1) {
  return (Mono(k) << mono_shift(v)) | (Mono(k) << kDegShift);
}
bool mono_divides(Mono a, Mono b);  // a | b
Mono mono_mul(Mono a, Mono b);
Mono mono_gcd(Mono a, Mono b);
Mono mono_from_exps(const std::vector<int>& e);

class MultiPoly {
 public:
  using Term = std::pair<Mono, GQ>;
  std::vector<Term> terms;  // strictly decreasing monomials, no zero coefficients

  MultiPoly() = default;
  MultiPoly(const GQ& c) {  // NOLINT
    if (!c.is_zero()) terms.push_back({Mono(0), c});
  }
  MultiPoly(long c) : MultiPoly(GQ(c)) {}  // NOLINT
  static MultiPoly var(int v, int k = 1) {
    MultiPoly p;
    p.terms.push_back({mono_var(v, k), GQ(1)});
    return p;
  }
  static MultiPoly monomial(Mono m, const GQ& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms.push_back({m, c});
    return p;
  }
  // Builds from arbitrary (possibly repeated, unsorted) terms.
  static MultiPoly from_terms(std::vector<Term> t);

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms[0].first == 0); }
  GQ constant_value() const;  // coefficient of the unit monomial
  const GQ& lc() const { return terms.front().second; }
  Mono lm() const { return terms.front().first; }
  int total_degree() const { return terms.empty() ? -1 : mono_deg(terms.front().first); }
  int degree(int v) const;
  uint32_t var_mask() const;
  bool is_real() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly scaled(const GQ& c) const;
  MultiPoly times_mono(Mono m) const;
  MultiPoly pow(int k) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms == b.terms; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Exact quotient a/b if b divides a, otherwise nullopt.
  static std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);
  MultiPoly monic() const;  // leading coefficient 1
  MultiPoly conj_coeffs() const;

  // Coefficients as a univariate polynomial in v (index = degree).
  std::vector<MultiPoly> coeffs_in(int v) const;
  static MultiPoly from_coeffs_in(int v, const std::vector<MultiPoly>& c);

  GQ eval(const std::vector<GQ>& point) const;
  std::complex<double> eval_complex(const std::vector<std::complex<double>>& point) const;
  std::string to_string(const std::vector<std::string>& names) const;
};

// Monic gcd (constant 1 when coprime).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

enum class Reality { Undeclared, Real, UnitModulus };

// Variable names plus metadata shared by all rational functions of one
// computation. A root rule declares var^2 = square.
struct Alphabet {
  std::vector<std::string> names;
  std::vector<Reality> reality;
  std::vector<std::pair<int, MultiPoly>> roots;

  int index(const std::string& name) const;  // -1 if absent
  int size() const { return int(names.size()); }
  bool is_root(int v) const;
};
using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names, std::vector<Reality> reality = {});

class RationalFn {
 public:
  RationalFn() : den_(1) {}
  RationalFn(const GQ& c) : num_(c), den_(1) {}  // NOLINT
  RationalFn(long c) : num_(GQ(c)), den_(1) {}  // NOLINT
  RationalFn(int c) : num_(GQ(c)), den_(1) {}  // NOLINT
  RationalFn(AlphabetPtr a, MultiPoly num, MultiPoly den = MultiPoly(1));

  static RationalFn var(const AlphabetPtr& a, const std::string& name);
  static RationalFn var(const AlphabetPtr& a, int v);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const AlphabetPtr& alphabet() const { return alpha_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_value().is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  GQ constant_value() const;  // throws if not constant

  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o);
  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  RationalFn operator-() const;
  RationalFn inverse() const;
  RationalFn pow(int k) const;  // k may be negative
  friend bool operator==(const RationalFn& a, const RationalFn& b);
  friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

  // Simultaneous substitution of variables by rational functions.
  RationalFn subs(const std::map<int, RationalFn>& m) const;
  RationalFn subs(const std::string& name, const RationalFn& val) const;
  // Complex conjugation using the alphabet's reality classes: real variables
  // are fixed, unit-modulus variables x map to 1/x.
  RationalFn conj() const;
  // Value at a point (every variable assigned); PoleError if the
  // denominator vanishes there.
  GQ eval(const std::vector<GQ>& point) const;
  std::complex<double> eval_complex(const std::vector<std::complex<double>>& point) const;
  // Rebinds to another alphabet with identical variable names.
  RationalFn rebind(const AlphabetPtr& a) const;

  std::string to_string() const;

 private:
  void normalize();
  static AlphabetPtr join(const AlphabetPtr& a, const AlphabetPtr& b);

  AlphabetPtr alpha_;
  MultiPoly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const GQ& x);
std::ostream& operator<<(std::ostream& os, const MultiPoly& p);
std::ostream& operator<<(std::ostream& os, const RationalFn& f);

// Value at a random Gaussian-rational point (parts with numerator and
// denominator at most 1e6), resampling on poles.
GQ random_eval(const RationalFn& f, uint64_t seed);
// Value at a named assignment; PoleError at a pole.
GQ eval_at(const RationalFn& f, const std::map<std::string, GQ>& assignment);

}  // namespace ybpa

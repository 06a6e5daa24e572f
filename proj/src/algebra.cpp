#include "ybpa/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace ybpa {

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t k = 0; k < b.size(); ++k)
    if (!b[k].is_zero()) r[k] += b[k];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t k = 0; k < b.size(); ++k)
    if (!b[k].is_zero()) r[k] -= b[k];
  return r;
}

Vec vec_scale(const Vec& a, const RationalFn& c) {
  Vec r(a.size());
  if (c.is_zero()) return r;
  for (size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero()) r[k] = a[k] * c;
  return r;
}

void vec_axpy(Vec& y, const RationalFn& c, const Vec& x) {
  if (c.is_zero()) return;
  for (size_t k = 0; k < x.size(); ++k)
    if (!x[k].is_zero()) y[k] += c * x[k];
}

bool vec_is_zero(const Vec& a) {
  for (auto& c : a)
    if (!c.is_zero()) return false;
  return true;
}

Vec vec_map(const Vec& a, const std::function<RationalFn(const RationalFn&)>& f) {
  Vec r(a.size());
  for (size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero()) r[k] = f(a[k]);
  return r;
}

Sparse to_sparse(const Vec& a) {
  Sparse s;
  for (size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero()) s.push_back({int(k), a[k]});
  return s;
}

Vec FiniteAlgebra::basis(int i) const {
  Vec v = zero();
  v[i] = RationalFn(1);
  return v;
}

Vec FiniteAlgebra::gen(const std::string& name) const {
  auto it = generators.find(name);
  if (it == generators.end()) throw std::invalid_argument("no generator " + name + " at level " + std::to_string(n));
  return from_sparse(it->second);
}

Vec FiniteAlgebra::from_sparse(const Sparse& s) const {
  Vec v = zero();
  for (auto& [k, c] : s) v[k] += c;
  return v;
}

Vec FiniteAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec r = zero();
  std::vector<int> nb;
  for (int j = 0; j < dim(); ++j)
    if (!b[j].is_zero()) nb.push_back(j);
  for (int i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j : nb) {
      RationalFn c = a[i] * b[j];
      for (auto& [k, s] : table[i][j]) r[k] += s.is_one() ? c : c * s;
    }
  }
  return r;
}

Vec FiniteAlgebra::mul(std::initializer_list<Vec> factors) const {
  Vec r = one();
  for (auto& f : factors) r = mul(r, f);
  return r;
}

Vec FiniteAlgebra::star_of(const Vec& a) const {
  Vec r = zero();
  for (int i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    RationalFn c = a[i].conj();
    for (auto& [k, s] : star[i]) r[k] += c * s;
  }
  return r;
}

std::string FiniteAlgebra::to_string(const Vec& a) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << a[i].to_string() << ")*" << labels[i];
  }
  if (first) os << "0";
  return os.str();
}

const Tower::LevelData& Tower::data(int n) const {
  if (n < 0 || n > max_level())
    throw std::out_of_range(name() + ": level " + std::to_string(n) + " unavailable");
  if (int(levels_.size()) <= n) levels_.resize(n + 1);
  if (!levels_[n]) {
    if (n > 0) data(n - 1);
    levels_[n] = std::make_unique<LevelData>(build(n));
  }
  return *levels_[n];
}

const FiniteAlgebra& Tower::level(int n) const { return data(n).alg; }

static Vec apply_map(const std::vector<Sparse>& m, const Vec& x, int out_dim) {
  Vec r(out_dim);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (auto& [k, c] : m[i]) r[k] += c.is_one() ? x[i] : x[i] * c;
  }
  return r;
}

Vec Tower::include(int n, const Vec& x) const {
  return apply_map(data(n + 1).include_below, x, level(n + 1).dim());
}

Vec Tower::shift(int n, const Vec& x) const {
  return apply_map(data(n + 1).shift_below, x, level(n + 1).dim());
}

Vec Tower::ptrace(int n, const Vec& x) const {
  if (n == 0) throw std::invalid_argument("partial trace of level 0");
  return apply_map(data(n).ptrace_down, x, level(n - 1).dim());
}

RationalFn Tower::trace(int n, const Vec& x) const {
  Vec y = x;
  for (int k = n; k > 0; --k) y = ptrace(k, y);
  return y[level(0).unit];
}

Vec Tower::lift(int from, int to, const Vec& x) const {
  Vec y = x;
  for (int k = from; k < to; ++k) y = include(k, y);
  return y;
}

Vec Tower::word(int n, const std::vector<std::string>& letters) const {
  const auto& a = level(n);
  Vec r = a.one();
  for (auto& l : letters) r = a.mul(r, a.gen(l));
  return r;
}

}  // namespace ybpa

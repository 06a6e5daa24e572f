#include "ybpa/linalg.hpp"

namespace ybpa {

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  Matrix c(n, std::vector<RationalFn>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (size_t j = 0; j < m; ++j)
        if (!b[t][j].is_zero()) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

Matrix mat_identity(int n) {
  Matrix m(n, std::vector<RationalFn>(n));
  for (int i = 0; i < n; ++i) m[i][i] = RationalFn(1);
  return m;
}

namespace {

// Row-reduces in place (augmented columns included); returns pivot columns
// among the first `cols` columns.
std::vector<int> eliminate(Matrix& m, size_t cols) {
  std::vector<int> piv;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    RationalFn inv = m[r][c].inverse();
    for (auto& x : m[r]) x *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      RationalFn f = m[i][c];
      for (size_t j = c; j < m[i].size(); ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    piv.push_back(int(c));
    ++r;
  }
  return piv;
}

}  // namespace

int mat_rank(Matrix m) {
  if (m.empty()) return 0;
  return int(eliminate(m, m[0].size()).size());
}

std::optional<std::vector<RationalFn>> mat_solve(Matrix a, std::vector<RationalFn> b) {
  size_t cols = a.empty() ? 0 : a[0].size();
  for (size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  auto piv = eliminate(a, cols);
  for (size_t i = piv.size(); i < a.size(); ++i)
    if (!a[i][cols].is_zero()) return std::nullopt;
  std::vector<RationalFn> x(cols);
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = a[i][cols];
  return x;
}

RationalFn mat_det(Matrix m) {
  size_t n = m.size();
  RationalFn det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return RationalFn(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    RationalFn inv = m[c][c].inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      RationalFn f = m[i][c] * inv;
      for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace ybpa

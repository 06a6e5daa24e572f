#include "ybpa/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ybpa {

bool PlanarPairing::valid() const {
  int p = points();
  if (p % 2) return false;
  for (int a = 0; a < p; ++a) {
    int b = partner[a];
    if (b >= p || b == a || partner[b] != a) return false;
    if (a < b) {
      for (int c = a + 1; c < b; ++c)
        if (partner[c] < a || partner[c] > b) return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> PlanarPairing::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < points(); ++a)
    if (a < partner[a]) out.push_back({a + 1, partner[a] + 1});
  return out;
}

namespace {

void enumerate(std::vector<int>& stack, std::vector<uint8_t>& cur, int pos, int total,
               std::vector<PlanarPairing>& out) {
  if (pos == total) {
    if (stack.empty()) out.push_back({cur});
    return;
  }
  int remaining = total - pos;
  if (int(stack.size()) < remaining) {  // open a new arc
    stack.push_back(pos);
    enumerate(stack, cur, pos + 1, total, out);
    stack.pop_back();
  }
  if (!stack.empty()) {  // close the innermost arc
    int a = stack.back();
    stack.pop_back();
    cur[a] = uint8_t(pos);
    cur[pos] = uint8_t(a);
    enumerate(stack, cur, pos + 1, total, out);
    stack.push_back(a);
  }
}

}  // namespace

std::vector<PlanarPairing> noncrossing_pairings(int strands) {
  std::vector<PlanarPairing> out;
  std::vector<int> stack;
  std::vector<uint8_t> cur(2 * strands);
  enumerate(stack, cur, 0, 2 * strands, out);
  std::sort(out.begin(), out.end());
  return out;
}

PlanarPairing identity_pairing(int strands) {
  PlanarPairing p;
  p.partner.resize(2 * strands);
  for (int j = 0; j < strands; ++j) {
    p.partner[j] = uint8_t(2 * strands - 1 - j);
    p.partner[2 * strands - 1 - j] = uint8_t(j);
  }
  return p;
}

Composite compose(const PlanarPairing& a, const PlanarPairing& b) {
  int P = a.points();
  if (b.points() != P) throw std::invalid_argument("compose: strand-count mismatch");
  int n = P / 2;
  // Nodes 0..P-1 are points of a, P..2P-1 points of b. The top of a (points
  // 0..n-1) is glued to the bottom of b.
  auto glued = [&](int node) -> int {
    if (node < P) return node < n ? P + (P - 1 - node) : -1;
    int p = node - P;
    return p >= n ? (P - 1 - p) : -1;
  };
  auto pair_of = [&](int node) -> int {
    return node < P ? a.partner[node] : P + b.partner[node - P];
  };
  std::vector<char> seen(2 * P, 0);
  Composite out;
  out.diagram.partner.assign(P, 0);
  auto label = [&](int node) { return node < P ? node : node - P; };
  for (int start = 0; start < 2 * P; ++start) {
    if (seen[start] || glued(start) >= 0) continue;
    int x = start;
    seen[x] = 1;
    while (true) {
      int y = pair_of(x);
      seen[y] = 1;
      int z = glued(y);
      if (z < 0) {
        out.diagram.partner[label(start)] = uint8_t(label(y));
        out.diagram.partner[label(y)] = uint8_t(label(start));
        break;
      }
      seen[z] = 1;
      x = z;
    }
  }
  for (int start = 0; start < 2 * P; ++start) {
    if (seen[start]) continue;
    ++out.loops;
    int x = start;
    do {
      seen[x] = 1;
      int y = pair_of(x);
      seen[y] = 1;
      x = glued(y);
    } while (x != start);
  }
  return out;
}

PlanarPairing rotate_points(const PlanarPairing& a, int clicks) {
  int P = a.points();
  if (P == 0) return a;
  int s = ((clicks % P) + P) % P;
  PlanarPairing r;
  r.partner.resize(P);
  for (int p = 0; p < P; ++p) r.partner[(p - s + P) % P] = uint8_t((a.partner[p] - s + P) % P);
  return r;
}

PlanarPairing reflect(const PlanarPairing& a) {
  int P = a.points();
  PlanarPairing r;
  r.partner.resize(P);
  for (int p = 0; p < P; ++p) r.partner[P - 1 - p] = uint8_t(P - 1 - a.partner[p]);
  return r;
}

int closure_loops(const PlanarPairing& a) {
  int P = a.points();
  std::vector<char> seen(P, 0);
  int loops = 0;
  for (int s = 0; s < P; ++s) {
    if (seen[s]) continue;
    ++loops;
    int x = s;
    do {
      seen[x] = 1;
      int y = a.partner[x];
      seen[y] = 1;
      x = P - 1 - y;  // closure arc joins column j top and bottom
    } while (x != s);
  }
  return loops;
}

Composite close_last(const PlanarPairing& a) {
  int P = a.points(), n = P / 2;
  int top = n - 1, bot = n;
  Composite out;
  std::vector<uint8_t> part(a.partner);
  if (part[top] == bot) {
    out.loops = 1;
  } else {
    int x = part[top], y = part[bot];
    part[x] = uint8_t(y);
    part[y] = uint8_t(x);
  }
  auto relabel = [&](int p) { return p < top ? p : p - 2; };
  out.diagram.partner.resize(P - 2);
  for (int p = 0; p < P; ++p) {
    if (p == top || p == bot) continue;
    out.diagram.partner[relabel(p)] = uint8_t(relabel(part[p]));
  }
  return out;
}

PlanarPairing add_right(const PlanarPairing& a) {
  int P = a.points(), n = P / 2;
  auto relabel = [&](int p) { return p < n ? p : p + 2; };
  PlanarPairing r;
  r.partner.resize(P + 2);
  for (int p = 0; p < P; ++p) r.partner[relabel(p)] = uint8_t(relabel(a.partner[p]));
  r.partner[n] = uint8_t(n + 1);
  r.partner[n + 1] = uint8_t(n);
  return r;
}

PlanarPairing add_left(const PlanarPairing& a) {
  int P = a.points();
  PlanarPairing r;
  r.partner.resize(P + 2);
  for (int p = 0; p < P; ++p) r.partner[p + 1] = uint8_t(a.partner[p] + 1);
  r.partner[0] = uint8_t(P + 1);
  r.partner[P + 1] = 0;
  return r;
}

static long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long dimension_tl(int n) { return binom(2 * n, n) / (n + 1); }
long dimension_fc(int n) { return binom(3 * n, n) / (2 * n + 1); }
long dimension_bmw(int n) {
  long r = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) r *= k;
  return r;
}

// ---------------------------------------------------------------- DiagramTower

DiagramTower::DiagramTower(DiagramKind kind, RationalFn weight, int max_level)
    : kind_(kind), weight_(std::move(weight)), max_level_(max_level) {
  alphabet_ = weight_.alphabet();
}

RationalFn DiagramTower::loop() const { return kind_ == DiagramKind::TL ? weight_ : weight_ * weight_; }

RationalFn DiagramTower::weight_pow(int k) const { return weight_.pow(k); }

const std::vector<PlanarPairing>& DiagramTower::diagrams(int n) const {
  level(n);
  return bases_[n];
}

int DiagramTower::index_of(int n, const PlanarPairing& p) const {
  level(n);
  auto it = index_[n].find(p);
  return it == index_[n].end() ? -1 : it->second;
}

namespace {

// Colour of TL point p in FC: pattern c1 c2 c2 c1 repeating along the boundary.
int fc_colour(int p) { return (p % 4 == 0 || p % 4 == 3) ? 0 : 1; }

bool fc_valid(const PlanarPairing& d) {
  for (int p = 0; p < d.points(); ++p)
    if (fc_colour(p) != fc_colour(d.partner[p])) return false;
  return true;
}

PlanarPairing tl_cup_cap(int strands, int col) {  // e at columns col, col+1
  PlanarPairing p = identity_pairing(strands);
  int P = 2 * strands;
  auto join = [&](int a, int b) {
    p.partner[a] = uint8_t(b);
    p.partner[b] = uint8_t(a);
  };
  join(col, col + 1);
  join(P - 1 - col, P - 2 - col);
  return p;
}

PlanarPairing fc_big(int blocks, int i) {  // E_i across TL columns 2i-2 .. 2i+1
  PlanarPairing p = identity_pairing(2 * blocks);
  int P = 4 * blocks;
  auto join = [&](int a, int b) {
    p.partner[a] = uint8_t(b);
    p.partner[b] = uint8_t(a);
  };
  int c = 2 * i - 2;
  join(c, c + 3);
  join(c + 1, c + 2);
  join(P - 1 - c, P - 4 - c);
  join(P - 2 - c, P - 3 - c);
  return p;
}

}  // namespace

Tower::LevelData DiagramTower::build(int n) const {
  int k = tl_points_per_strand();
  if (int(bases_.size()) <= n) {
    bases_.resize(n + 1);
    index_.resize(n + 1);
  }
  std::vector<PlanarPairing> basis;
  for (auto& d : noncrossing_pairings(k * n))
    if (kind_ == DiagramKind::TL || fc_valid(d)) basis.push_back(d);
  // Put the identity first.
  PlanarPairing id = identity_pairing(k * n);
  auto it = std::find(basis.begin(), basis.end(), id);
  std::rotate(basis.begin(), it, it + 1);
  bases_[n] = basis;
  for (size_t i = 0; i < basis.size(); ++i) index_[n][basis[i]] = int(i);

  LevelData ld;
  FiniteAlgebra& A = ld.alg;
  A.n = n;
  A.alphabet = alphabet_;
  A.unit = 0;
  int D = int(basis.size());
  std::vector<RationalFn> wp(2 * k * n + 2);
  for (size_t j = 0; j < wp.size(); ++j) wp[j] = weight_pow(int(j));
  for (int i = 0; i < D; ++i) {
    std::string lab = "D[";
    for (auto& [a, b] : basis[i].pairs()) lab += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    A.labels.push_back(lab + "]");
  }
  A.table.assign(D, std::vector<Sparse>(D));
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      Composite c = compose(basis[i], basis[j]);
      A.table[i][j] = {{index_[n].at(c.diagram), wp[c.loops]}};
    }
  A.star.resize(D);
  for (int i = 0; i < D; ++i) A.star[i] = {{index_[n].at(reflect(basis[i])), RationalFn(1)}};
  for (int i = 1; i < n; ++i) {
    if (kind_ == DiagramKind::TL) {
      A.generators["e" + std::to_string(i)] = {{index_[n].at(tl_cup_cap(n, i - 1)), RationalFn(1)}};
    } else {
      A.generators["E" + std::to_string(i)] = {{index_[n].at(fc_big(n, i)), RationalFn(1)}};
      A.generators["P" + std::to_string(i)] = {{index_[n].at(tl_cup_cap(2 * n, 2 * i - 1)), RationalFn(1)}};
    }
  }
  if (n > 0) {
    const auto& below = bases_[n - 1];
    for (auto& d : below) {
      PlanarPairing r = d, l = d;
      for (int t = 0; t < k; ++t) {
        r = add_right(r);
        l = add_left(l);
      }
      ld.include_below.push_back({{index_[n].at(r), RationalFn(1)}});
      ld.shift_below.push_back({{index_[n].at(l), RationalFn(1)}});
    }
    for (auto& d : basis) {
      Composite c{d, 0};
      for (int t = 0; t < k; ++t) {
        Composite c2 = close_last(c.diagram);
        c.diagram = c2.diagram;
        c.loops += c2.loops;
      }
      ld.ptrace_down.push_back({{index_[n - 1].at(c.diagram), wp[c.loops]}});
    }
  }
  return ld;
}

Vec DiagramTower::rotate(int n, const Vec& x, int clicks) const {
  const auto& A = level(n);
  Vec r = A.zero();
  for (int i = 0; i < A.dim(); ++i) {
    if (x[i].is_zero()) continue;
    PlanarPairing p = rotate_points(bases_[n][i], clicks * tl_points_per_strand());
    r[index_[n].at(p)] += x[i];
  }
  return r;
}

RationalFn DiagramTower::left_trace(int n, const Vec& x) const {
  // Left closure is the right closure of the half-turn rotated diagram.
  int k = tl_points_per_strand();
  const auto& A = level(n);
  RationalFn out;
  for (int i = 0; i < A.dim(); ++i) {
    if (x[i].is_zero()) continue;
    PlanarPairing p = rotate_points(bases_[n][i], k * n);
    out += x[i] * weight_pow(closure_loops(p));
  }
  return out;
}

RationalFn chebyshev_u(const RationalFn& d, int n) {
  RationalFn a(1), b = d;
  if (n == 0) return a;
  for (int k = 1; k < n; ++k) {
    RationalFn c = d * b - a;
    a = b;
    b = c;
  }
  return b;
}

Vec jones_wenzl(const DiagramTower& tl, int n) {
  if (tl.kind() != DiagramKind::TL) throw std::invalid_argument("jones_wenzl needs TL");
  RationalFn d = tl.weight();
  Vec jw = tl.level(1).one();
  if (n == 0) return tl.level(0).one();
  for (int k = 1; k < n; ++k) {
    const auto& A = tl.level(k + 1);
    Vec up = tl.include(k, jw);
    RationalFn uk = chebyshev_u(d, k);
    if (uk.is_zero()) throw DivisionByZero("Chebyshev value vanishes in JW recursion");
    RationalFn ratio = chebyshev_u(d, k - 1) / uk;
    Vec mid = A.mul({up, A.gen("e" + std::to_string(k)), up});
    jw = vec_sub(up, vec_scale(mid, ratio));
  }
  return jw;
}

RationalFn cosine_product(const RationalFn& d, int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("cosine_product supports 1 <= n <= 5");
  int m = n + 1;
  // cos(pi/m) = (a + b r)/c with r^2 = radicand.
  struct Exact { long a, b, c, radicand; };
  static const Exact table[] = {{0, 0, 1, 2}, {1, 0, 2, 2}, {0, 1, 2, 2}, {1, 1, 4, 5}, {0, 1, 2, 3}};
  const Exact& e = table[m - 2];
  double approx = (e.a + e.b * std::sqrt(double(e.radicand))) / e.c;
  if (std::abs(approx - std::cos(M_PI / m)) > 1e-12) throw std::logic_error("cosine table inconsistent");
  auto base = make_alphabet({"d", "r"}, {Reality::Real, Reality::Real});
  auto alpha = std::make_shared<Alphabet>(*base);
  alpha->roots.push_back({1, MultiPoly(long(e.radicand))});
  AlphabetPtr ap = alpha;
  RationalFn dd = RationalFn::var(ap, 0), r = RationalFn::var(ap, 1);
  RationalFn c = (RationalFn(e.a) + RationalFn(e.b) * r) / RationalFn(e.c);
  RationalFn tprev(1), tcur = c, prod(1);
  for (int k = 1; k <= n; ++k) {
    prod *= dd - 2 * tcur;
    RationalFn next = 2 * c * tcur - tprev;
    tprev = tcur;
    tcur = next;
  }
  if (prod.num().degree(1) > 0 || !prod.den().is_constant())
    throw std::logic_error("cosine product is not a polynomial over Q");
  RationalFn out;
  for (auto& [mono, coef] : prod.num().terms) out += RationalFn(coef) * d.pow(mono_exp(mono, 0));
  return out / RationalFn(prod.den().constant_value());
}

std::vector<std::vector<RationalFn>> gram_matrix(const Tower& t, int n) {
  const auto& A = t.level(n);
  int D = A.dim();
  std::vector<std::vector<RationalFn>> g(D, std::vector<RationalFn>(D));
  for (int i = 0; i < D; ++i) {
    Vec si = A.star_of(A.basis(i));
    for (int j = 0; j < D; ++j) g[i][j] = t.trace(n, A.mul(si, A.basis(j)));
  }
  return g;
}

}  // namespace ybpa

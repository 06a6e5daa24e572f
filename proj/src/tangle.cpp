#include "ybpa/tangle.hpp"

#include <algorithm>
#include <sstream>

namespace ybpa {

std::string cupcap_family(const Tower& t) {
  const auto& g = t.level(std::min(2, t.max_level())).generators;
  if (g.count("e1")) return "e";
  if (g.count("E1")) return "E";
  throw TangleError(t.name() + " has no cup-cap generator");
}

std::vector<int> tangle_widths(const TangleNet& net) {
  if (net.strands < 0) throw TangleError("negative strand count");
  std::vector<int> w{net.strands};
  for (size_t k = 0; k < net.layers.size(); ++k) {
    const auto& l = net.layers[k];
    int cur = w.back(), next = cur;
    std::string where = "layer " + std::to_string(k + 1) + ": ";
    switch (l.kind) {
      case TangleLayer::Kind::Box:
      case TangleLayer::Kind::Cap:
        if (l.pos < 1 || l.pos + 1 > cur)
          throw TangleError(where + "strands " + std::to_string(l.pos) + "," + std::to_string(l.pos + 1) +
                            " not present at width " + std::to_string(cur));
        if (l.kind == TangleLayer::Kind::Cap) next = cur - 2;
        break;
      case TangleLayer::Kind::Cup:
        if (l.pos < 1 || l.pos > cur + 1)
          throw TangleError(where + "cup position " + std::to_string(l.pos) + " outside width " + std::to_string(cur));
        next = cur + 2;
        break;
      case TangleLayer::Kind::Loop:
        break;
    }
    w.push_back(next);
  }
  if (w.back() != net.strands)
    throw TangleError("top has " + std::to_string(w.back()) + " points, bottom has " + std::to_string(net.strands));
  return w;
}

Vec place(const Tower& t, const Vec& p, int pos, int m) {
  Vec x = p;
  for (int k = 2; k < pos + 1; ++k) x = t.shift(k, x);
  return t.lift(pos + 1, m, x);
}

Vec rotate_element(const Tower& t, int n, const Vec& x, int clicks) {
  if (n == 0) return x;
  clicks %= 2 * n;
  if (clicks < 0) clicks += 2 * n;
  if (clicks == 0) return x;
  if (n + 1 > t.max_level()) throw TangleError("rotation of level " + std::to_string(n) + " needs level n+1");
  std::string f = cupcap_family(t);
  const auto& A = t.level(n + 1);
  // Forward click when that is shorter, otherwise go backwards.
  bool forward = clicks <= n;
  int steps = forward ? clicks : 2 * n - clicks;
  Vec y = x;
  for (int s = 0; s < steps; ++s) {
    Vec z = t.shift(n, y);
    for (int i = 1; i <= n; ++i) {
      // forward: shift(x) e_1 ... e_n, backward: e_n ... e_1 shift(x)
      Vec e = A.gen(f + std::to_string(i));
      z = forward ? A.mul(z, e) : A.mul(e, z);
    }
    y = t.ptrace(n + 1, z);
  }
  return y;
}

Vec compile(const TangleNet& net, const Tower& t) {
  auto widths = tangle_widths(net);
  int n = net.strands, M = *std::max_element(widths.begin(), widths.end());
  if (M > t.max_level())
    throw TangleError("network reaches width " + std::to_string(M) + ", tower " + t.name() + " stops at " +
                      std::to_string(t.max_level()));
  const auto& A = t.level(M);
  std::string f = M >= 2 ? cupcap_family(t) : "";
  auto E = [&](int i) { return A.gen(f + std::to_string(i)); };
  RationalFn loop = t.loop(), loop_inv = loop.inverse();

  Vec X = A.one();
  for (int k = n + 1; k < M; k += 2) X = A.mul(X, E(k));
  for (const auto& l : net.layers) {
    switch (l.kind) {
      case TangleLayer::Kind::Box:
        X = A.mul(X, place(t, l.rot ? rotate_element(t, 2, l.payload, l.rot) : l.payload, l.pos, M));
        break;
      case TangleLayer::Kind::Cap:
        for (int k = l.pos; k < M; ++k) X = A.mul(X, E(k));
        break;
      case TangleLayer::Kind::Cup:
        for (int k = M - 1; k >= l.pos; --k) X = A.mul(X, E(k));
        X = vec_scale(X, loop_inv);
        break;
      case TangleLayer::Kind::Loop:
        X = vec_scale(X, loop);
        break;
    }
  }
  for (int k = M; k > n; --k) X = t.ptrace(k, X);
  return vec_scale(X, loop_inv.pow((M - n) / 2));
}

TangleNet build_transfer_net(int n, const Vec& lower, const Vec& upper) {
  TangleNet net;
  net.strands = n;
  using K = TangleLayer::Kind;
  net.layers.push_back({K::Cup, n + 1, {}, 0});
  for (int i = n; i >= 1; --i) net.layers.push_back({K::Box, i, lower, 0});
  for (int i = 1; i <= n; ++i) net.layers.push_back({K::Box, i, upper, 0});
  net.layers.push_back({K::Cap, n + 1, {}, 0});
  return net;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

int parse_int(const std::string& s, const std::string& where) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw TangleError(where + ": expected an integer, got '" + s + "'");
}

Vec parse_payload(const std::string& text, const FiniteAlgebra& A2, const std::map<std::string, RationalFn>& params,
                  const std::string& where) {
  Vec out = A2.zero();
  // Split on top-level + and -, keeping the sign with each term.
  std::vector<std::pair<int, std::string>> terms;
  int sign = 1;
  std::string cur;
  auto flush = [&] {
    std::string t = trim(cur);
    if (!t.empty()) terms.emplace_back(sign, t);
    else if (!terms.empty() || sign < 0)
      throw TangleError(where + ": empty term in payload '" + text + "'");
    cur.clear();
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool after_op = trim(cur).empty() || trim(cur).back() == '*' || trim(cur).back() == '/';
    if ((c == '+' || c == '-') && !after_op) {
      flush();
      sign = c == '-' ? -1 : 1;
    } else if (c == '-' && trim(cur).empty() && terms.empty()) {
      sign = -sign;
    } else {
      cur += c;
    }
  }
  flush();
  if (terms.empty()) throw TangleError(where + ": empty payload");

  for (auto& [sg, term] : terms) {
    RationalFn coef(sg);
    Vec basis = A2.one();
    bool have_letter = false;
    std::stringstream ss(term);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
      factor = trim(factor);
      if (factor.empty()) throw TangleError(where + ": empty factor in '" + term + "'");
      if (auto it = params.find(factor); it != params.end()) {
        coef *= it->second;
      } else if (A2.generators.count(factor + "1")) {
        if (have_letter) throw TangleError(where + ": two letters in term '" + term + "'");
        basis = A2.gen(factor + "1");
        have_letter = true;
      } else {
        try {
          coef *= RationalFn(GQ::parse(factor));
        } catch (const std::exception&) {
          throw TangleError(where + ": unknown symbol '" + factor + "'");
        }
      }
    }
    vec_axpy(out, coef, basis);
  }
  return out;
}

}  // namespace

TangleNet parse_tangle(const std::string& text, const Tower& t, const std::map<std::string, RationalFn>& params) {
  TangleNet net;
  net.strands = -1;
  std::map<std::string, RationalFn> p = params;
  for (int v = 0; v < t.alphabet()->size(); ++v) p.emplace(t.alphabet()->names[v], RationalFn::var(t.alphabet(), v));
  std::stringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    std::string where = "line " + std::to_string(lineno);
    std::stringstream ls(line);
    std::string kw;
    ls >> kw;
    std::string rest;
    std::getline(ls, rest);
    rest = trim(rest);
    if (kw == "strands") {
      if (net.strands >= 0) throw TangleError(where + ": strands given twice");
      net.strands = parse_int(rest, where);
      continue;
    }
    if (net.strands < 0) throw TangleError(where + ": 'strands N' must come first");
    using K = TangleLayer::Kind;
    if (kw == "loop") {
      if (!rest.empty()) throw TangleError(where + ": loop takes no arguments");
      net.layers.push_back({K::Loop, 1, {}, 0});
    } else if (kw == "cup" || kw == "cap") {
      net.layers.push_back({kw == "cup" ? K::Cup : K::Cap, parse_int(rest, where), {}, 0});
    } else if (kw == "box") {
      std::stringstream rs(rest);
      std::string pos;
      rs >> pos;
      std::string payload;
      std::getline(rs, payload);
      payload = trim(payload);
      int rot = 0;
      if (auto r = payload.rfind(" rot "); r != std::string::npos) {
        rot = parse_int(trim(payload.substr(r + 5)), where);
        payload = trim(payload.substr(0, r));
      }
      if (payload.empty()) throw TangleError(where + ": box needs a payload");
      if (t.max_level() < 2) throw TangleError("tower has no 2-box space");
      net.layers.push_back({K::Box, parse_int(pos, where), parse_payload(payload, t.level(2), p, where), rot});
    } else {
      throw TangleError(where + ": unknown directive '" + kw + "'");
    }
  }
  if (net.strands < 0) throw TangleError("missing 'strands N'");
  tangle_widths(net);
  return net;
}

std::string format_tangle(const TangleNet& net, const Tower& t) {
  std::ostringstream os;
  os << "strands " << net.strands << "\n";
  for (const auto& l : net.layers) {
    switch (l.kind) {
      case TangleLayer::Kind::Loop: os << "loop\n"; break;
      case TangleLayer::Kind::Cup: os << "cup " << l.pos << "\n"; break;
      case TangleLayer::Kind::Cap: os << "cap " << l.pos << "\n"; break;
      case TangleLayer::Kind::Box: {
        const auto& A2 = t.level(2);
        os << "box " << l.pos << " ";
        bool first = true;
        for (int i = 0; i < A2.dim(); ++i) {
          if (l.payload[i].is_zero()) continue;
          std::string lab = i == A2.unit ? "1" : A2.labels[i];
          if (lab.size() > 1 && lab.back() == '1') lab.pop_back();
          os << (first ? "" : " + ") << "(" << l.payload[i] << ")*" << lab;
          first = false;
        }
        if (first) os << "0";
        if (l.rot) os << " rot " << l.rot;
        os << "\n";
      }
    }
  }
  return os.str();
}

}  // namespace ybpa

#include "ybpa/presented.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace ybpa {

void FreeElem::add(const Word& w, const RationalFn& c) {
  if (c.is_zero()) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

FreeElem& FreeElem::operator+=(const FreeElem& o) {
  for (auto& [w, c] : o.terms) add(w, c);
  return *this;
}

FreeElem& FreeElem::operator-=(const FreeElem& o) {
  for (auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

FreeElem operator*(const FreeElem& a, const FreeElem& b) {
  FreeElem r;
  for (auto& [wa, ca] : a.terms)
    for (auto& [wb, cb] : b.terms) r.add(wa + wb, ca * cb);
  return r;
}

FreeElem operator*(const RationalFn& c, const FreeElem& a) {
  FreeElem r;
  if (c.is_zero()) return r;
  for (auto& [w, x] : a.terms) r.terms.emplace(w, c * x);
  return r;
}

FreeElem FreeElem::operator-() const { return RationalFn(-1) * *this; }

// ---------------------------------------------------------------------------

FreeElem Presentation::gen(const std::string& family, int index) const {
  auto it = std::find(families.begin(), families.end(), family);
  if (it == families.end()) throw std::invalid_argument("unknown generator family " + family);
  if (index < 1 || index >= n) throw std::invalid_argument("generator index out of range");
  return FreeElem::word(Word(1, letter(int(it - families.begin()), index)));
}

Word Presentation::parse_word(const std::string& text) const {
  std::istringstream is(text);
  std::string tok;
  Word w;
  while (is >> tok) {
    if (tok == "1") continue;
    size_t k = 0;
    while (k < tok.size() && !isdigit((unsigned char)tok[k])) ++k;
    w += gen(tok.substr(0, k), std::stoi(tok.substr(k))).terms.begin()->first;
  }
  return w;
}

std::string Presentation::word_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (char c : w) {
    if (!s.empty()) s += ' ';
    s += families.at(letter_family(c)) + std::to_string(letter_index(c));
  }
  return s;
}

// ---------------------------------------------------------------------------

std::optional<RewriteSystem::Hit> RewriteSystem::find(const Word& w) const {
  for (int pos = 0; pos < int(w.size()); ++pos)
    for (auto& [len, cnt] : lengths_) {
      if (pos + len > int(w.size())) break;
      auto it = lhs_index_.find(w.substr(pos, len));
      if (it != lhs_index_.end()) return Hit{it->second, pos};
    }
  return std::nullopt;
}

bool RewriteSystem::reducible(const Word& w) const { return find(w).has_value(); }

bool RewriteSystem::suffix_reducible(const Word& w) const {
  for (auto& [len, cnt] : lengths_) {
    if (len > int(w.size())) break;
    if (lhs_index_.count(w.substr(w.size() - len))) return true;
  }
  return false;
}

FreeElem RewriteSystem::reduce(const FreeElem& f) const {
  FreeElem work = f, out;
  while (!work.terms.empty()) {
    auto it = work.terms.begin();
    Word w = it->first;
    RationalFn c = it->second;
    work.terms.erase(it);
    auto hit = find(w);
    if (!hit) {
      out.add(w, c);
      continue;
    }
    const Rule& r = rules_[hit->rule];
    Word pre = w.substr(0, hit->pos), post = w.substr(hit->pos + r.lhs.size());
    for (auto& [t, d] : r.rhs.terms) work.add(pre + t + post, c * d);
  }
  return out;
}

std::vector<const RewriteSystem::Rule*> RewriteSystem::active_rules() const {
  std::vector<const Rule*> r;
  for (auto& x : rules_)
    if (x.active) r.push_back(&x);
  return r;
}

void RewriteSystem::add_rule(FreeElem f, std::vector<FreeElem>& pending) {
  f = reduce(f);
  if (f.is_zero()) return;
  auto lead = f.terms.begin();
  Word lhs = lead->first;
  if (lhs.empty()) throw std::runtime_error("presentation collapses: a nonzero scalar equals zero");
  RationalFn inv = lead->second.inverse();
  f.terms.erase(lead);
  Rule rule{lhs, -(inv * f), true};
  int r = int(rules_.size());
  // Older rules whose left side contains the new one are retired and fed back.
  for (auto& old : rules_) {
    if (!old.active || old.lhs.find(lhs) == Word::npos) continue;
    old.active = false;
    lhs_index_.erase(old.lhs);
    if (--lengths_[int(old.lhs.size())] == 0) lengths_.erase(int(old.lhs.size()));
    pending.push_back(FreeElem::word(old.lhs) - old.rhs);
  }
  rules_.push_back(std::move(rule));
  lhs_index_[lhs] = r;
  ++lengths_[int(lhs.size())];
  for (int j = 0; j <= r; ++j) {
    if (!rules_[j].active) continue;
    new_pairs_.emplace_back(r, j, 0);
    if (j != r) new_pairs_.emplace_back(j, r, 0);
  }
}

CompletionStats RewriteSystem::complete(int overlap_cap) {
  CompletionStats st;
  std::vector<FreeElem> pending = pres_->relations;
  // (overlap word length, a, b, k): suffix of a of length k equals prefix of b.
  using Pair = std::tuple<int, int, int, int>;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs;
  for (;;) {
    while (!pending.empty()) {
      FreeElem f = std::move(pending.back());
      pending.pop_back();
      add_rule(std::move(f), pending);
    }
    for (auto& [a, b, unused] : new_pairs_) {
      (void)unused;
      const Word &la = rules_[a].lhs, &lb = rules_[b].lhs;
      int m = int(std::min(la.size(), lb.size()));
      for (int k = 1; k < m; ++k) {
        if (la.compare(la.size() - k, k, lb, 0, k) != 0) continue;
        int len = int(la.size() + lb.size()) - k;
        if (len > overlap_cap) {
          ++st.pairs_skipped_cap;
          continue;
        }
        pairs.emplace(len, a, b, k);
      }
    }
    new_pairs_.clear();
    if (pairs.empty()) break;
    auto [len, a, b, k] = pairs.top();
    pairs.pop();
    if (!rules_[a].active || !rules_[b].active) continue;
    ++st.pairs_examined;
    st.max_overlap_word = std::max(st.max_overlap_word, len);
    const Rule &ra = rules_[a], &rb = rules_[b];
    FreeElem s = ra.rhs * FreeElem::word(rb.lhs.substr(k)) -
                 FreeElem::word(ra.lhs.substr(0, ra.lhs.size() - k)) * rb.rhs;
    pending.push_back(std::move(s));
  }
  for (auto& r : rules_)
    if (r.active) r.rhs = reduce(r.rhs);
  st.rules = int(lhs_index_.size());
  return st;
}

// ---------------------------------------------------------------------------

BasisResult enumerate_words(const RewriteSystem& rs, int max_index, int length_cap) {
  const Presentation& p = rs.presentation();
  std::vector<char> letters;
  for (int f = 0; f < int(p.families.size()); ++f)
    for (int i = 1; i <= max_index; ++i) letters.push_back(letter(f, i));
  std::sort(letters.begin(), letters.end(), [](char a, char b) { return (unsigned char)a < (unsigned char)b; });
  BasisResult res;
  std::vector<Word> layer{Word()};
  int len = 0;
  while (!layer.empty()) {
    for (auto& w : layer) res.words.push_back(w);
    res.longest = len;
    if (len == length_cap) {
      res.cap_exceeded = true;
      break;
    }
    std::vector<Word> next;
    for (auto& w : layer)
      for (char x : letters) {
        Word v = w + x;
        if (!rs.suffix_reducible(v)) next.push_back(std::move(v));
      }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
    ++len;
  }
  return res;
}

BasisTable::BasisTable(const Presentation& p, int overlap_cap, int length_cap) : pres_(p), rs_(pres_) {
  stats_ = rs_.complete(overlap_cap);
  basis_ = enumerate_words(rs_, pres_.n - 1, length_cap);
  if (basis_.cap_exceeded)
    throw CapExceeded(pres_.name + ": irreducible words of length " + std::to_string(length_cap) +
                      " remain (n=" + std::to_string(pres_.n) + ")");
  for (int i = 0; i < int(basis_.words.size()); ++i) index_[basis_.words[i]] = i;
  right_.assign(basis_.words.size(), std::vector<std::optional<Sparse>>(256));
}

int BasisTable::index_of(const Word& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

Sparse BasisTable::normal_form(const FreeElem& f) const {
  FreeElem r = rs_.reduce(f);
  Sparse s;
  for (auto& [w, c] : r.terms) {
    int k = index_of(w);
    if (k < 0) throw std::runtime_error(pres_.name + ": reduced word outside basis: " + pres_.word_string(w));
    s.emplace_back(k, c);
  }
  std::sort(s.begin(), s.end(), [](auto& a, auto& b) { return a.first < b.first; });
  return s;
}

Sparse BasisTable::normal_form(const Word& w) const {
  auto it = nf_cache_.find(w);
  if (it != nf_cache_.end()) return it->second;
  Sparse s = normal_form(FreeElem::word(w));
  nf_cache_[w] = s;
  return s;
}

Sparse BasisTable::times_letter(int k, char x) const {
  auto& slot = right_[k][(unsigned char)x];
  if (!slot) slot = normal_form(basis_.words[k] + x);
  return *slot;
}

namespace {

Sparse accumulate(std::map<int, RationalFn>& acc) {
  Sparse s;
  for (auto& [k, c] : acc)
    if (!c.is_zero()) s.emplace_back(k, c);
  return s;
}

}  // namespace

FiniteAlgebra BasisTable::algebra() const {
  FiniteAlgebra A;
  A.n = pres_.n;
  A.alphabet = pres_.alphabet;
  A.unit = 0;
  const auto& words = basis_.words;
  int D = int(words.size());
  for (auto& w : words) A.labels.push_back(pres_.word_string(w));
  A.table.assign(D, std::vector<Sparse>(D));
  // Basis words are prefix-closed, so b_i b_j = (b_i b_j') x with j = j'x.
  for (int i = 0; i < D; ++i) {
    A.table[i][0] = {{i, RationalFn(1)}};
    for (int j = 1; j < D; ++j) {
      const Word& w = words[j];
      int jp = index_of(w.substr(0, w.size() - 1));
      char x = w.back();
      std::map<int, RationalFn> acc;
      for (auto& [k, c] : A.table[i][jp])
        for (auto& [m, d] : times_letter(k, x)) acc[m] += c * d;
      A.table[i][j] = accumulate(acc);
    }
  }
  A.star.resize(D);
  for (int i = 0; i < D; ++i) {
    FreeElem s(RationalFn(1));
    for (auto it = words[i].rbegin(); it != words[i].rend(); ++it)
      s = s * pres_.star_letter.at(letter_family(*it))(letter_index(*it));
    A.star[i] = normal_form(s);
  }
  for (int f = 0; f < int(pres_.families.size()); ++f)
    for (int i = 1; i < pres_.n; ++i)
      A.generators[pres_.families[f] + std::to_string(i)] = normal_form(Word(1, letter(f, i)));
  return A;
}

// ---------------------------------------------------------------------------

PresentedTower::PresentedTower(std::string name, AlphabetPtr alphabet, Factory factory, int max_level,
                               int overlap_cap, int length_cap, std::function<long(int)> expected_dim)
    : name_(std::move(name)),
      factory_(std::move(factory)),
      max_level_(max_level),
      overlap_cap_(overlap_cap),
      length_cap_(length_cap),
      expected_dim_(std::move(expected_dim)) {
  alphabet_ = std::move(alphabet);
}

RationalFn PresentedTower::loop() const { return factory_(1).closure_identity; }

const BasisTable& PresentedTower::table(int n) const {
  auto it = tables_.find(n);
  if (it != tables_.end()) return *it->second;
  auto t = std::make_unique<BasisTable>(factory_(n), overlap_cap_, length_cap_);
  if (expected_dim_) {
    long want = expected_dim_(n), got = long(t->basis().words.size());
    if (want != got) {
      std::ostringstream os;
      os << name_ << " n=" << n << ": " << got << " reduced words, expected " << want
         << "; longest reduced word has length " << t->basis().longest;
      throw DimensionMismatch(os.str());
    }
  }
  return *tables_.emplace(n, std::move(t)).first->second;
}

Tower::LevelData PresentedTower::build(int n) const {
  if (cache_dir_.empty()) return build_uncached(n);
  LevelData ld;
  if (load_cached(n, ld)) return ld;
  ld = build_uncached(n);
  store_cached(n, ld);
  return ld;
}

Tower::LevelData PresentedTower::build_uncached(int n) const {
  const BasisTable& T = table(n);
  LevelData ld;
  ld.alg = T.algebra();
  if (n == 0) return ld;
  const BasisTable& B = table(n - 1);
  const Presentation& p = T.presentation();
  for (auto& w : B.basis().words) {
    ld.include_below.push_back(T.normal_form(w));
    Word s = w;
    for (char& c : s) c = letter(letter_family(c), letter_index(c) + 1);
    ld.shift_below.push_back(T.normal_form(s));
  }
  for (auto& w : T.basis().words) {
    int top = -1, count = 0;
    for (int k = 0; k < int(w.size()); ++k)
      if (letter_index(w[k]) == n - 1) {
        top = k;
        ++count;
      }
    Sparse s;
    if (count == 0) {
      s = B.normal_form(w);
      for (auto& [k, c] : s) c *= p.closure_identity;
    } else if (count == 1) {
      s = B.normal_form(w.substr(0, top) + w.substr(top + 1));
      for (auto& [k, c] : s) c *= p.closure_letter.at(letter_family(w[top]));
    } else {
      throw std::runtime_error(name_ + ": basis word with two top generators: " + p.word_string(w));
    }
    ld.ptrace_down.push_back(s);
  }
  return ld;
}

}  // namespace ybpa

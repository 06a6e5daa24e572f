#pragma once

// Finitely presented unital algebras: words over indexed generator families,
// oriented rewrite rules in deglex order, critical-pair completion, reduced
// word bases and structure constants.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "ybpa/algebra.hpp"
#include "ybpa/linalg.hpp"

namespace ybpa {

// A letter packs (family, index) as family*32 + index; words are byte
// strings, so unsigned byte comparison orders letters by family precedence
// first and index second.
using Word = std::string;

inline char letter(int family, int index) { return char(family * 32 + index); }
inline int letter_family(char c) { return (unsigned char)c / 32; }
inline int letter_index(char c) { return (unsigned char)c % 32; }

struct DeglexGreater {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a > b;
  }
};

// Element of the free algebra; begin() is the leading word.
class FreeElem {
 public:
  using Map = std::map<Word, RationalFn, DeglexGreater>;
  Map terms;

  FreeElem() = default;
  FreeElem(const RationalFn& c) {  // NOLINT
    if (!c.is_zero()) terms[Word()] = c;
  }
  static FreeElem word(const Word& w, const RationalFn& c = RationalFn(1)) {
    FreeElem f;
    if (!c.is_zero()) f.terms[w] = c;
    return f;
  }

  bool is_zero() const { return terms.empty(); }
  void add(const Word& w, const RationalFn& c);
  FreeElem& operator+=(const FreeElem& o);
  FreeElem& operator-=(const FreeElem& o);
  friend FreeElem operator+(FreeElem a, const FreeElem& b) { return a += b; }
  friend FreeElem operator-(FreeElem a, const FreeElem& b) { return a -= b; }
  friend FreeElem operator*(const FreeElem& a, const FreeElem& b);
  friend FreeElem operator*(const RationalFn& c, const FreeElem& a);
  FreeElem operator-() const;
};

struct Presentation {
  std::string name;
  int n = 1;                          // strands; letters carry indices 1..n-1
  std::vector<std::string> families;  // in precedence order
  AlphabetPtr alphabet;
  std::vector<FreeElem> relations;    // each is set to zero
  // Right-closure values: loop value and the closure of each family's letter.
  RationalFn closure_identity;
  std::vector<RationalFn> closure_letter;
  // Star of each family's letter in the same algebra (antilinear extension).
  std::vector<std::function<FreeElem(int index)>> star_letter;
  std::map<std::string, RationalFn> params;  // named constants used by builders

  FreeElem gen(const std::string& family, int index) const;
  Word parse_word(const std::string& text) const;  // "e1 s2 e1"
  std::string word_string(const Word& w) const;
};

struct CompletionStats {
  int rules = 0;
  int pairs_examined = 0;
  int pairs_skipped_cap = 0;
  int max_overlap_word = 0;
};

class RewriteSystem {
 public:
  struct Rule {
    Word lhs;
    FreeElem rhs;
    bool active = true;
  };

  explicit RewriteSystem(const Presentation& p) : pres_(&p) {}

  // Critical-pair completion; overlaps whose word exceeds overlap_cap are
  // not examined.
  CompletionStats complete(int overlap_cap);
  FreeElem reduce(const FreeElem& f) const;
  bool reducible(const Word& w) const;
  // Only suffix occurrences; for words whose proper prefix is irreducible.
  bool suffix_reducible(const Word& w) const;
  std::vector<const Rule*> active_rules() const;
  const Presentation& presentation() const { return *pres_; }

 private:
  struct Hit {
    int rule;
    int pos;
  };
  std::optional<Hit> find(const Word& w) const;
  void add_rule(FreeElem f, std::vector<FreeElem>& pending);

  const Presentation* pres_;
  std::vector<Rule> rules_;
  std::unordered_map<Word, int> lhs_index_;
  std::map<int, int> lengths_;  // lhs length -> active rule count
  std::vector<std::tuple<int, int, int>> new_pairs_;
};

struct BasisResult {
  std::vector<Word> words;  // deglex ascending
  bool cap_exceeded = false;
  int longest = 0;
};
BasisResult enumerate_words(const RewriteSystem& rs, int alphabet_letters_max_index, int length_cap);

// Basis plus structure constants for one presentation.
class BasisTable {
 public:
  BasisTable(const Presentation& p, int overlap_cap, int length_cap);

  const Presentation& presentation() const { return pres_; }
  const RewriteSystem& system() const { return rs_; }
  const BasisResult& basis() const { return basis_; }
  const CompletionStats& stats() const { return stats_; }
  int index_of(const Word& w) const;  // -1 if not a basis word
  // Normal form of a word in basis coordinates.
  Sparse normal_form(const Word& w) const;
  Sparse normal_form(const FreeElem& f) const;
  FiniteAlgebra algebra() const;

 private:
  Presentation pres_;
  RewriteSystem rs_;
  CompletionStats stats_;
  BasisResult basis_;
  std::unordered_map<Word, int> index_;
  mutable std::unordered_map<Word, Sparse> nf_cache_;
  mutable std::vector<std::vector<std::optional<Sparse>>> right_;  // basis x letter
  Sparse times_letter(int k, char x) const;
};

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tower over presentations for n = 0..max_level. The factory builds the
// presentation for n strands.
class PresentedTower : public Tower {
 public:
  using Factory = std::function<Presentation(int n)>;
  PresentedTower(std::string name, AlphabetPtr alphabet, Factory factory, int max_level,
                 int overlap_cap = 6, int length_cap = 16,
                 std::function<long(int)> expected_dim = nullptr);

  std::string name() const override { return name_; }
  int max_level() const override { return max_level_; }
  RationalFn loop() const override;
  const BasisTable& table(int n) const;
  // Levels are read from and written to dir (created if missing). Empty
  // disables caching.
  void set_cache_dir(std::string dir) { cache_dir_ = std::move(dir); }
  const std::string& cache_dir() const { return cache_dir_; }
  // hits, misses, files rejected by version/key/hash checks, files written.
  std::array<int, 4> cache_counts() const { return {cache_hits_, cache_misses_, cache_rejected_, cache_written_}; }
  std::string cache_file(int n) const;

 protected:
  LevelData build(int n) const override;

 private:
  std::string name_;
  Factory factory_;
  int max_level_, overlap_cap_, length_cap_;
  std::function<long(int)> expected_dim_;
  mutable std::map<int, std::unique_ptr<BasisTable>> tables_;
  std::string cache_dir_;
  mutable int cache_hits_ = 0, cache_misses_ = 0, cache_rejected_ = 0, cache_written_ = 0;
  std::string cache_key(int n) const;
  bool load_cached(int n, LevelData& out) const;
  void store_cached(int n, const LevelData& ld) const;
  LevelData build_uncached(int n) const;
};

// Evaluates a free-algebra element in A by substituting every letter.
Vec evaluate(const FreeElem& f, const FiniteAlgebra& A, const std::function<Vec(int family, int index)>& subs);

struct RelationCheck {
  std::string name;
  bool pass = false;
};
struct QuotientReport {
  std::vector<RelationCheck> checks;
  bool all_pass() const;
};

// Substitutes source letters into target and checks that every source
// relation, and every extra element, vanishes there.
QuotientReport verify_quotient_map(const Presentation& source, const FiniteAlgebra& target,
                                   const std::function<Vec(const std::string& family, int index)>& substitution,
                                   const std::vector<std::pair<std::string, FreeElem>>& extra = {});

// Matrix of left multiplication by x: column j holds x b_j.
Matrix regular_representation(const FiniteAlgebra& A, const Vec& x);

// Whether every x_1 y_2 z_1 lies in span{a_2 b_1 c_2} for x..c running over a
// two-box basis placed at positions 1 and 2. Works on reduced words of the
// rewrite system, so it also applies to truncations of infinite algebras.
struct YbrSpanResult {
  bool holds = false;
  // coefficients[t] for triple t = (x,y,z) in lexicographic order, indexed
  // by (a,b,c) likewise.
  std::vector<std::vector<RationalFn>> coefficients;
};
YbrSpanResult ybr_span_test(const RewriteSystem& rs, const std::vector<std::function<FreeElem(int pos)>>& two_box);

// p1 + p2 = alpha, p1 p2 = -1 and the idempotents of PS_2 in the basis
// (1, e, s): P0 = e/delta, s = p1 P1 + p2 P2.
struct Ps2Idempotents {
  RationalFn p1, p2;
  Vec P0, P1, P2;
  bool complete = false, orthogonal = false;
};
// sqrt_disc is a square root of alpha^2 + 4; when absent the discriminant
// must be a rational square.
Ps2Idempotents ps2_idempotents(const RationalFn& alpha, const RationalFn& delta,
                               std::optional<RationalFn> sqrt_disc = std::nullopt);

}  // namespace ybpa

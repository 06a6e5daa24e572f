#pragma once

// Finite-dimensional algebras given by structure constants over a basis, and
// towers A_0 ⊂ A_1 ⊂ ... of them linked by inclusion, left shift and the
// right partial trace. Both the diagram engine and the rewriting engine
// produce these, so every downstream module is engine-agnostic.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ybpa/scalar.hpp"

namespace ybpa {

using Vec = std::vector<RationalFn>;
using Sparse = std::vector<std::pair<int, RationalFn>>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const RationalFn& c);
void vec_axpy(Vec& y, const RationalFn& c, const Vec& x);  // y += c x
bool vec_is_zero(const Vec& a);
Vec vec_map(const Vec& a, const std::function<RationalFn(const RationalFn&)>& f);
Sparse to_sparse(const Vec& a);

struct FiniteAlgebra {
  int n = 0;  // strand (or block) count
  AlphabetPtr alphabet;
  std::vector<std::string> labels;
  int unit = 0;
  std::vector<std::vector<Sparse>> table;  // table[i][j] = b_i b_j
  std::vector<Sparse> star;                // b_i^*, extended antilinearly
  std::map<std::string, Sparse> generators;

  int dim() const { return int(labels.size()); }
  Vec zero() const { return Vec(dim()); }
  Vec one() const { return basis(unit); }
  Vec basis(int i) const;
  Vec gen(const std::string& name) const;
  Vec from_sparse(const Sparse& s) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec mul(std::initializer_list<Vec> factors) const;
  Vec star_of(const Vec& a) const;
  std::string to_string(const Vec& a) const;
};

class Tower {
 public:
  virtual ~Tower() = default;
  virtual std::string name() const = 0;
  virtual int max_level() const = 0;
  // Loop weight: trace of the identity of level 1.
  virtual RationalFn loop() const = 0;
  AlphabetPtr alphabet() const { return alphabet_; }

  const FiniteAlgebra& level(int n) const;
  Vec include(int n, const Vec& x) const;  // A_n -> A_{n+1}, new strand on the right
  Vec shift(int n, const Vec& x) const;    // A_n -> A_{n+1}, new strand on the left
  Vec ptrace(int n, const Vec& x) const;   // A_n -> A_{n-1}, closes the rightmost strand
  RationalFn trace(int n, const Vec& x) const;  // full right closure
  // Embeds into a higher level by repeated inclusion.
  Vec lift(int from, int to, const Vec& x) const;
  // Element of level n from a word of generator names, e.g. {"e1","s2"}.
  Vec word(int n, const std::vector<std::string>& letters) const;
  // Applies a coefficient map (substitution, conjugation) entrywise.
  static Vec map_coeffs(const Vec& x, const std::function<RationalFn(const RationalFn&)>& f) {
    return vec_map(x, f);
  }

 protected:
  struct LevelData {
    FiniteAlgebra alg;
    std::vector<Sparse> include_below;  // basis of level n-1 -> level n
    std::vector<Sparse> shift_below;
    std::vector<Sparse> ptrace_down;    // basis of level n -> level n-1
  };
  // Fills data for level n; levels below are already built.
  virtual LevelData build(int n) const = 0;
  const LevelData& data(int n) const;

  AlphabetPtr alphabet_;

 private:
  mutable std::vector<std::unique_ptr<LevelData>> levels_;
};

}  // namespace ybpa

#pragma once

// Noncrossing pairings and the diagram algebras built on them: Temperley-Lieb
// TL_n and the two-colour Fuss-Catalan algebra FC_n, the latter realised as
// the colour-respecting subalgebra of TL_{2n}.
//
// Boundary points are numbered 0..2p-1 clockwise from the marker, which
// sits on the left edge: top points 0..p-1 left to right, then bottom points
// p..2p-1 right to left. Column j therefore owns top point j and bottom
// point 2p-1-j.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ybpa/algebra.hpp"

namespace ybpa {

struct PlanarPairing {
  std::vector<uint8_t> partner;  // partner[p] is the point matched to p

  int points() const { return int(partner.size()); }
  int strands() const { return points() / 2; }
  bool valid() const;  // perfect matching without crossings
  std::vector<std::pair<int, int>> pairs() const;  // 1-based (min, max), sorted
  friend bool operator<(const PlanarPairing& a, const PlanarPairing& b) { return a.partner < b.partner; }
  friend bool operator==(const PlanarPairing& a, const PlanarPairing& b) { return a.partner == b.partner; }
};

std::vector<PlanarPairing> noncrossing_pairings(int strands);
PlanarPairing identity_pairing(int strands);

struct Composite {
  PlanarPairing diagram;
  int loops = 0;
};
// b placed atop a.
Composite compose(const PlanarPairing& a, const PlanarPairing& b);
// Relabels point p to p - clicks (mod 2p); one click moves one point.
PlanarPairing rotate_points(const PlanarPairing& a, int clicks);
PlanarPairing reflect(const PlanarPairing& a);  // top/bottom mirror
int closure_loops(const PlanarPairing& a);      // right closure of every strand
// Closes the rightmost column.
Composite close_last(const PlanarPairing& a);
PlanarPairing add_right(const PlanarPairing& a);
PlanarPairing add_left(const PlanarPairing& a);

enum class DiagramKind { TL, FC };

// Closed-form dimensions: Catalan, Fuss-Catalan (k = 2) and (2n-1)!!.
long dimension_tl(int n);
long dimension_fc(int n);
long dimension_bmw(int n);

class DiagramTower : public Tower {
 public:
  // weight is the loop value (delta for TL, gamma for FC).
  DiagramTower(DiagramKind kind, RationalFn weight, int max_level = 5);

  std::string name() const override { return kind_ == DiagramKind::TL ? "TL" : "FC"; }
  int max_level() const override { return max_level_; }
  RationalFn loop() const override;
  DiagramKind kind() const { return kind_; }
  const RationalFn& weight() const { return weight_; }

  const std::vector<PlanarPairing>& diagrams(int n) const;
  int index_of(int n, const PlanarPairing& p) const;  // -1 if absent
  // Rotation by whole clicks: one TL point, or one FC block-half (two TL points).
  Vec rotate(int n, const Vec& x, int clicks) const;
  RationalFn left_trace(int n, const Vec& x) const;

 protected:
  LevelData build(int n) const override;

 private:
  int tl_points_per_strand() const { return kind_ == DiagramKind::TL ? 1 : 2; }
  RationalFn weight_pow(int k) const;

  DiagramKind kind_;
  RationalFn weight_;
  int max_level_;
  mutable std::vector<std::vector<PlanarPairing>> bases_;
  mutable std::vector<std::map<PlanarPairing, int>> index_;
};

// JW_n in TL_n via the two-term recursion with Chebyshev ratios.
Vec jones_wenzl(const DiagramTower& tl, int n);
// U_n(delta/2): U_0 = 1, U_1 = d, U_{k+1} = d U_k - U_{k-1}.
RationalFn chebyshev_u(const RationalFn& d, int n);

// prod_{k=1..n} (d - 2 cos(k pi/(n+1))) expanded exactly: cos(pi/(n+1)) is
// held in Q(sqrt m) and the cosines of multiples come from Chebyshev's
// T-recursion. Supports n <= 5.
RationalFn cosine_product(const RationalFn& d, int n);

// tr(a^* b) over the level-n basis.
std::vector<std::vector<RationalFn>> gram_matrix(const Tower& t, int n);

}  // namespace ybpa

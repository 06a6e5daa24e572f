#pragma once

// Planar networks of 4-leg boxes, described layer by layer from bottom to
// top, compiled into elements of a tower. A layer is a box on two adjacent
// strands, a cup creating two strands, a cap joining two, or a free loop.
//
// Compilation pads every intermediate width up to the maximum width M with
// cup/cap pairs on the right, so each layer is a product in A_M: a box is its
// payload, a cap at i is e_i e_{i+1} ... e_{M-1} and a cup at i is
// e_{M-1} ... e_i / loop. The padding is closed off by partial traces.

#include <map>
#include <string>
#include <vector>

#include "ybpa/algebra.hpp"

namespace ybpa {

struct TangleLayer {
  enum class Kind { Box, Cup, Cap, Loop };
  Kind kind = Kind::Box;
  int pos = 1;    // leftmost strand touched, 1-based
  Vec payload;    // Box only: element of A_2
  int rot = 0;    // Box only: clicks applied to the payload before placing it
};

struct TangleNet {
  int strands = 0;  // boundary points on each of the bottom and top edges
  std::vector<TangleLayer> layers;
};

struct TangleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "e" or "E": the family whose generators are the cup-cap elements.
std::string cupcap_family(const Tower& t);

// Widths after each layer; throws TangleError when a layer does not fit or
// the top width differs from the bottom.
std::vector<int> tangle_widths(const TangleNet& net);

Vec compile(const TangleNet& net, const Tower& t);

// One click moves the marker one boundary point; negative clicks go back.
Vec rotate_element(const Tower& t, int n, const Vec& x, int clicks);
// p in A_2 placed on strands (pos, pos+1) of A_m.
Vec place(const Tower& t, const Vec& p, int pos, int m);

// Double-row network: aux strand created by a cup on the right, threaded
// right-to-left through the row of `lower` boxes, then back through the
// row of `upper` boxes, and closed by a cap.
TangleNet build_transfer_net(int n, const Vec& lower, const Vec& upper);

// Text format, one directive per line, '#' starts a comment:
//   strands N
//   box POS PAYLOAD [rot K]
//   cup POS | cap POS | loop
// PAYLOAD is a sum of terms COEFF*LETTER, where LETTER is 1 or a generator
// family of A_2 (e, s, g, E, P) and COEFF is a product of numbers and named
// parameters, e.g. "1 + d*e - 1/2*s".
TangleNet parse_tangle(const std::string& text, const Tower& t, const std::map<std::string, RationalFn>& params);
std::string format_tangle(const TangleNet& net, const Tower& t);

}  // namespace ybpa

#pragma once

#include <variant>
#include <vector>

#include "detline/spaces.hpp"

namespace detline {

// Carrier of a top exterior power: a subspace or a quotient of some Q^n.
using LineCarrier = std::variant<Subspace, QuotientSpace>;

std::size_t carrier_dim(const LineCarrier& c);
std::size_t carrier_ambient(const LineCarrier& c);
// Coordinates in the carrier's canonical basis (RREF basis for a subspace,
// complement classes for a quotient).
std::vector<Rational> carrier_coords(const LineCarrier& c,
                                     const std::vector<Rational>& v);
// Ambient representative of the j-th canonical basis vector.
std::vector<Rational> carrier_basis_rep(const LineCarrier& c, std::size_t j);
bool carrier_eq(const LineCarrier& a, const LineCarrier& b);

// A determinant line: top exterior power of the carrier, or its dual.
struct LineSpace {
  LineCarrier carrier;
  bool dual = false;

  std::size_t dim() const { return carrier_dim(carrier); }
  // Z_2 degree: dimension of the carrier mod 2 (same for the dual line).
  int degree() const { return static_cast<int>(dim() % 2); }
};

bool operator==(const LineSpace& a, const LineSpace& b);

// scalar * (v_1 ^ ... ^ v_k) in the line, or, when the line is dual,
// scalar * (v_1 ^ ... ^ v_k)^* ; the v_i are ambient vectors (arbitrary
// lifts when the carrier is a quotient).
struct LineElement {
  LineSpace space;
  std::vector<std::vector<Rational>> frame;
  Rational scalar = 1;
};

// Determinant of the frame in canonical carrier coordinates.
Rational frame_det(const LineCarrier& carrier,
                   const std::vector<std::vector<Rational>>& frame);

// Coefficient relative to the canonical generator: scalar*det(frame) for a
// plain line, scalar/det(frame) for a dual line.  The zero element of a dual
// line must carry scalar 0; a degenerate predual frame with nonzero scalar
// is rejected.
Rational line_value(const LineElement& e);

// r with a == r * b in their (common) line; throws if b is zero.
Rational line_compare(const LineElement& a, const LineElement& b);

// Generator of the line: canonical frame, scalar 1.
LineElement canonical_generator(const LineSpace& space);

// Ordered tensor product of line elements with one overall scalar.
struct TensorElement {
  std::vector<LineElement> factors;
  Rational scalar = 1;
};

// Swap factors i and i+1, with the sign (-1)^{deg * deg}.
TensorElement swap_R(const TensorElement& t, std::size_t i);

// det(a_i(v_j)) and its sign-adjusted companion (-1)^{n(n-1)/2} det(a_i(v_j)),
// for functionals a_i (rows of `functionals`) and vectors v_j (rows of
// `vectors`).
std::pair<Rational, Rational> standard_pairings(
    const RationalMatrix& functionals, const RationalMatrix& vectors);
// Same on line elements: alpha over the dual coordinate space (functional
// rows), v over its carrier; scalars multiply both results.
std::pair<Rational, Rational> standard_pairings(const LineElement& alpha,
                                                const LineElement& v);

// The pairing between the top power of the dual and the dual of the top
// power.  Input lives in the top power of V^*: its frame vectors are
// functional coordinate rows relative to V's canonical basis.  Output is a
// dual-line element over V.
LineElement pairing_P(const LineCarrier& V, const LineElement& dual_coords);
// Same with V the plain coordinate space of matching dimension.
LineElement pairing_P(const LineElement& dual_coords);
// Inverse direction: dual-line element over V to an element of the top
// power of V^* (full coordinate space of dimension dim V).
LineElement pairing_P_inv(const LineElement& e);

// e_1 ^ ... ^ e_N over Q^N.
LineElement volume_tensor(std::size_t N);

}  // namespace detline

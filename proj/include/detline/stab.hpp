#pragma once

#include "detline/triple.hpp"

namespace detline {

// [D | Theta] : X (+) Q^N -> Y.
FinOperator stabilized(const FinOperator& D, const RationalMatrix& Theta);

// A stabilization of D together with its exact triple.
struct StabData {
  FinOperator D;
  RationalMatrix Theta;
  FinOperator D_Theta;
  ExactTriple triple;
};

StabData stabilize(const FinOperator& D, const RationalMatrix& Theta);
DetLineElement hat_iso(const StabData& s, const DetLineElement& e);
DetLineElement inv_iso(const StabData& s, const DetLineElement& e);

// The exact triple with rows 0 -> X -> X (+) Q^N -> Q^N -> 0 and
// 0 -> Y -> Y -> 0 -> 0 over the operators D, [D|Theta], 0.
ExactTriple stab_triple_basic(const FinOperator& D,
                              const RationalMatrix& Theta);

// det(D) -> det([D|Theta]), the triple isomorphism applied against the
// volume element of Q^N.
DetLineElement hat_iso(const FinOperator& D, const RationalMatrix& Theta,
                       const DetLineElement& e);

// det([D|Theta]) -> det(D) through the composition with the inclusion
// X -> X (+) Q^N.  Satisfies inv_iso o hat_iso = (-1)^{(ind D) N} id.
DetLineElement inv_iso(const FinOperator& D, const RationalMatrix& Theta,
                       const DetLineElement& e);

// Comparison factor of an exact row 0 -> Q^{N'} --i--> Q^N --j--> Q^{N''} -> 0
// against the volume elements: i(vol) ^ (j-lifted vol) = a_factor * vol.
Rational a_factor(const RationalMatrix& i, const RationalMatrix& j);

// Stabilization of a whole triple by compatible maps
// Theta': Q^{N'} -> Y', Theta: Q^N -> Y, Theta'': Q^{N''} -> Y''.
ExactTriple stab_triple(const ExactTriple& t, const RationalMatrix& i,
                        const RationalMatrix& j, const RationalMatrix& Thetap,
                        const RationalMatrix& Theta,
                        const RationalMatrix& Thetapp);

// Canonical isomorphism det(delta) -> det(0) for an arbitrary map delta,
// where 0 is the zero operator with the same shape.
DetLineElement iso_delta(const DetLineElement& e);

// Reversed-factor variant found in the literature; differs from iso_delta
// by (-1)^{rank delta}.
DetLineElement km_iso_delta(const DetLineElement& e);

}  // namespace detline

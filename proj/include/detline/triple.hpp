#pragma once

#include <optional>
#include <string>

#include "detline/operator.hpp"

namespace detline {

// Commuting diagram with short-exact rows:
//   0 -> X' --iX--> X --jX--> X'' -> 0
//        |D'        |D        |D''
//   0 -> Y' --iY--> Y --jY--> Y'' -> 0
struct ExactTriple {
  FinOperator Dp, D, Dpp;
  RationalMatrix iX, jX, iY, jY;
};

// Empty when the diagram is valid; otherwise the name of the first failed
// identity.
std::optional<std::string> validate_triple(const ExactTriple& t);

// The six connecting maps of the kernel/cokernel sequence
//   0 -> ker D' -> ker D -> ker D'' -> coker D' -> coker D -> coker D'' -> 0
// as matrices in the canonical bases.
struct SnakeData {
  RationalMatrix ker_in, ker_out, delta, coker_in, coker_out;
};

SnakeData snake(const ExactTriple& t);

// Exactness of the six-term sequence; empty if exact, else the failing spot.
std::optional<std::string> snake_exact(const ExactTriple& t,
                                       const SnakeData& s);

// Auxiliary frames entering the triple isomorphism: complements of
//   iX(ker D') in ker D          (u),
//   jX(ker D) in ker D''         (v),
//   im(delta) in coker D'        (w, ambient lifts in Y'),
//   iY(coker D') in coker D      (y, ambient lifts in Y).
struct AuxFrames {
  std::vector<std::vector<Rational>> u, v, w, y;
};

AuxFrames default_aux(const ExactTriple& t);

// The canonical isomorphism det(D') (x) det(D'') -> det(D) of an exact
// triple.  The result does not depend on the auxiliary frames.
DetLineElement psi(const ExactTriple& t, const DetLineElement& sp,
                   const DetLineElement& spp, const AuxFrames& aux);
DetLineElement psi(const ExactTriple& t, const DetLineElement& sp,
                   const DetLineElement& spp);

// Shortcut form of the triple isomorphism when D' is invertible.
DetLineElement iso_T_prime(const ExactTriple& t, const DetLineElement& sp,
                           const DetLineElement& spp);
// Shortcut form when D'' is invertible.
DetLineElement iso_T_dprime(const ExactTriple& t, const DetLineElement& sp,
                            const DetLineElement& spp);

// Split exact triple over the block sum D' (+) D''.
ExactTriple direct_sum_triple(const FinOperator& Dp, const FinOperator& Dpp);
// Closed form of the triple isomorphism for the split triple.
DetLineElement direct_sum_elem(const DetLineElement& sp,
                               const DetLineElement& spp);

// Exact triple encoding a composition D2 o D1, with middle operator
// (D2 D1) (+) id.
ExactTriple composition_triple(const FinOperator& D1, const FinOperator& D2);
// Closed form: det(D1) (x) det(D2) -> det(D2 D1).
DetLineElement compose_elem(const FinOperator& D1, const FinOperator& D2,
                            const DetLineElement& s1,
                            const DetLineElement& s2);

// Identifications det(E (+) id_k) <-> det(E).
DetLineElement drop_id_summand(const DetLineElement& e, std::size_t k);
DetLineElement add_id_summand(const DetLineElement& e, std::size_t k);

// Row-wise dualized diagram (transposed operators, reversed rows).
ExactTriple dual_triple(const ExactTriple& t);

// Composite of two triples sharing the middle row.
ExactTriple compose_triples(const ExactTriple& t1, const ExactTriple& t2);

}  // namespace detline

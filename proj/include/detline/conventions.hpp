#pragma once

#include <map>

#include "detline/stab.hpp"

namespace detline {

// Positive rescaling family A_{i,c} (index i, cokernel dimension c >= 0,
// c >= -i), stored as a finite table with a default outside it.
// A_{i,0} = 1 always.
class ConventionSystem {
 public:
  ConventionSystem() = default;

  void set(long i, long c, Rational value);
  Rational a(long i, long c) const;
  const std::map<std::pair<long, long>, Rational>& table() const {
    return table_;
  }
  void set_default(Rational d);
  const Rational& default_value() const { return default_; }

 private:
  std::map<std::pair<long, long>, Rational> table_;
  Rational default_ = 1;
};

// Rescaled triple isomorphism:
//   Psi' = (A_{ind D',dc(D')} A_{ind D'',dc(D'')} / A_{ind D,dc(D)}) Psi.
DetLineElement psi_system(const ConventionSystem& conv, const ExactTriple& t,
                          const DetLineElement& sp, const DetLineElement& spp);

// Rescaled dualization:
//   A_{-1,1}^{ind D} * (A_{ind D,dc(D)} / A_{-ind D,dk(D)}) * dualize_det.
DetLineElement dual_system(const ConventionSystem& conv,
                           const DetLineElement& e);

// Rescaled det(delta) -> det(0) map:
//   (A_{dV-dW,dc(delta)} / A_{dV-dW,dW}) * iso_delta.
DetLineElement iso_delta_system(const ConventionSystem& conv,
                                const DetLineElement& e);

// A_{-k,k} == A_{-1,1}^k for all k in [1, K].
bool is_norm_iii_star(const ConventionSystem& conv, long K);

// Parities of the literature sign factors.
int ms_overlap_exponent(long N, long Nprime, long cdim);
int salamon_exponent(long N, long ind, long cdim);
int km_reversal_exponent(const FinOperator& delta);

// Coefficient against 1 (x) 1^* when D is invertible, 0 otherwise.
Rational quillen_cosection(const FinOperator& D, const DetLineElement& sigma);

// The exact triple of the classification family: top row
// 0 -> Q^{i+c} -> Q^{i+2c} -> Q^c -> 0 over 0 -> Q^c -> Q^c -> 0 -> 0 with
// middle operator the projection onto the last c coordinates and zero outer
// operators.
ExactTriple classification_triple(long i, long c);

// Coefficient a with psi_system(Omega_{i+c} (x) Omega_c^* , Omega_c (x) 1)
// = (-1)^c * a * Omega_{i+c} (x) 1 on the classification triple.
Rational classification_value(const ConventionSystem& conv, long i, long c);

}  // namespace detline

#pragma once

#include "detline/line.hpp"

namespace detline {

// Linear map Q^n -> Q^m with cached kernel, image and cokernel data.
class FinOperator {
 public:
  FinOperator() = default;
  explicit FinOperator(RationalMatrix m);

  const RationalMatrix& matrix() const { return mat_; }
  std::size_t domain_dim() const { return mat_.cols(); }
  std::size_t codomain_dim() const { return mat_.rows(); }
  long index() const {
    return static_cast<long>(domain_dim()) -
           static_cast<long>(codomain_dim());
  }

  const Subspace& kernel() const { return ker_; }
  const Subspace& image() const { return im_; }
  const QuotientSpace& cokernel() const { return coker_; }
  std::size_t ker_dim() const { return ker_.dim(); }
  std::size_t coker_dim() const { return coker_.dim(); }

  bool operator==(const FinOperator& rhs) const { return mat_ == rhs.mat_; }

 private:
  RationalMatrix mat_;
  Subspace ker_, im_;
  QuotientSpace coker_;
};

// Element of the determinant line of an operator D:
//   scalar * (k_1 ^ ... ^ k_a)  tensor  (c_1 ^ ... ^ c_b)^*
// with k_i in ker D (domain vectors) and c_j codomain vectors representing
// classes in coker D.
struct DetLineElement {
  FinOperator op;
  std::vector<std::vector<Rational>> ker_frame;
  std::vector<std::vector<Rational>> coker_frame;
  Rational scalar = 1;
};

// Canonical generator of the determinant line of D.
DetLineElement det_line(const FinOperator& op);

// Checked constructor.
DetLineElement det_line(const FinOperator& op,
                        std::vector<std::vector<Rational>> ker_frame,
                        std::vector<std::vector<Rational>> coker_frame,
                        Rational scalar);

DetLineElement det_elem(const FinOperator& op,
                        std::vector<std::vector<Rational>> ker_frame,
                        std::vector<std::vector<Rational>> coker_frame,
                        Rational scalar = Rational(1));

LineElement ker_part(const DetLineElement& e);
LineElement coker_part(const DetLineElement& e);

// Coefficient relative to the canonical generator.
Rational det_value(const DetLineElement& e);

// r with a == r * b; operators must coincide, b must be nonzero.
Rational det_ratio(const DetLineElement& a, const DetLineElement& b);

bool det_equal(const DetLineElement& a, const DetLineElement& b);

DetLineElement scale(const DetLineElement& e, const Rational& c);

// Push an element of the determinant line of D through an isomorphism pair
// (phi, psi) of domain and codomain, landing in the determinant line of
// psi D phi^{-1}.
DetLineElement iso_induced(const RationalMatrix& phi, const RationalMatrix& psi,
                           const DetLineElement& e);

FinOperator dual_operator(const FinOperator& op);

// The two canonical maps ker D -> (coker D^t)^* and (coker D)^* -> ker D^t,
// as matrices in the canonical bases (columns indexed by the source basis).
struct DualityMaps {
  RationalMatrix ker_to_coker_dual;   // dim coker(D^t) x dim ker(D)
  RationalMatrix coker_dual_to_ker;   // dim ker(D^t) x dim coker(D)
};

DualityMaps duality_maps(const FinOperator& op);

// Canonical isomorphism det(D) -> det(D^t).
DetLineElement dualize_det(const DetLineElement& e);

}  // namespace detline

#include "detline/operator.hpp"

#include <stdexcept>

#include "detline/sign_tweaks.hpp"

namespace detline {

FinOperator::FinOperator(RationalMatrix m) : mat_(std::move(m)) {
  ker_ = Subspace::span(kernel_basis(mat_));
  im_ = Subspace::span(mat_.transpose());
  coker_ = QuotientSpace(mat_.rows(), im_);
}

DetLineElement det_line(const FinOperator& op) {
  DetLineElement e;
  e.op = op;
  for (std::size_t i = 0; i < op.ker_dim(); ++i)
    e.ker_frame.push_back(op.kernel().basis().row(i));
  for (std::size_t j = 0; j < op.coker_dim(); ++j)
    e.coker_frame.push_back(op.cokernel().basis_rep(j));
  e.scalar = 1;
  return e;
}

DetLineElement det_line(const FinOperator& op,
                        std::vector<std::vector<Rational>> ker_frame,
                        std::vector<std::vector<Rational>> coker_frame,
                        Rational scalar) {
  return det_elem(op, std::move(ker_frame), std::move(coker_frame),
                  std::move(scalar));
}

DetLineElement det_elem(const FinOperator& op,
                        std::vector<std::vector<Rational>> ker_frame,
                        std::vector<std::vector<Rational>> coker_frame,
                        Rational scalar) {
  if (ker_frame.size() != op.ker_dim() ||
      coker_frame.size() != op.coker_dim())
    throw std::invalid_argument("frame sizes do not match ker/coker dims");
  return DetLineElement{op, std::move(ker_frame), std::move(coker_frame),
                        std::move(scalar)};
}

LineElement ker_part(const DetLineElement& e) {
  return LineElement{LineSpace{e.op.kernel(), false}, e.ker_frame, e.scalar};
}

LineElement coker_part(const DetLineElement& e) {
  return LineElement{LineSpace{e.op.cokernel(), true}, e.coker_frame,
                     Rational(1)};
}

Rational det_value(const DetLineElement& e) {
  Rational kd = frame_det(LineCarrier{e.op.kernel()}, e.ker_frame);
  Rational cd = frame_det(LineCarrier{e.op.cokernel()}, e.coker_frame);
  if (cd == 0) {
    if (e.scalar * kd != 0)
      throw std::domain_error("degenerate cokernel frame, nonzero element");
    return Rational(0);
  }
  return e.scalar * kd / cd;
}

Rational det_ratio(const DetLineElement& a, const DetLineElement& b) {
  if (!(a.op == b.op))
    throw std::invalid_argument("det_ratio across different operators");
  Rational vb = det_value(b);
  if (vb == 0) throw std::domain_error("det_ratio against zero element");
  return det_value(a) / vb;
}

bool det_equal(const DetLineElement& a, const DetLineElement& b) {
  if (!(a.op == b.op)) return false;
  return det_value(a) == det_value(b);
}

DetLineElement scale(const DetLineElement& e, const Rational& c) {
  DetLineElement out = e;
  out.scalar *= c;
  return out;
}

DetLineElement iso_induced(const RationalMatrix& phi, const RationalMatrix& psi,
                           const DetLineElement& e) {
  FinOperator conj(psi * e.op.matrix() * inverse(phi));
  std::vector<std::vector<Rational>> kf, cf;
  for (const auto& v : e.ker_frame) kf.push_back(phi.apply(v));
  for (const auto& w : e.coker_frame) cf.push_back(psi.apply(w));
  return det_elem(conj, std::move(kf), std::move(cf), e.scalar);
}

FinOperator dual_operator(const FinOperator& op) {
  return FinOperator(op.matrix().transpose());
}

DualityMaps duality_maps(const FinOperator& op) {
  FinOperator dual = dual_operator(op);
  // ker D -> (coker D^t)^*: evaluate kernel vectors at the free coordinates
  // of coker(D^t) = Q^n / im(D^t).
  std::size_t k = op.ker_dim();
  const auto& free_n = dual.cokernel().free_cols();
  RationalMatrix m1(free_n.size(), k);
  for (std::size_t j = 0; j < free_n.size(); ++j)
    for (std::size_t i = 0; i < k; ++i)
      m1.at(j, i) = op.kernel().basis().at(i, free_n[j]);
  // (coker D)^* -> ker D^t: the functional dual to the j-th free class of
  // coker D is "free coordinate after reduction mod im D"; as a covector it
  // is e_q - sum_i r_i[q] e_{pivot_i}.
  const auto& free_m = op.cokernel().free_cols();
  const RationalMatrix& r = op.image().basis();
  const auto& piv = op.image().pivots();
  RationalMatrix m2(dual.ker_dim(), free_m.size());
  for (std::size_t j = 0; j < free_m.size(); ++j) {
    std::vector<Rational> f(op.codomain_dim(), Rational(0));
    f[free_m[j]] = 1;
    for (std::size_t i = 0; i < r.rows(); ++i)
      f[piv[i]] = -r.at(i, free_m[j]);
    std::vector<Rational> c = dual.kernel().coords(f);
    for (std::size_t i = 0; i < c.size(); ++i) m2.at(i, j) = c[i];
  }
  return {m1, m2};
}

DetLineElement dualize_det(const DetLineElement& e) {
  const FinOperator& D = e.op;
  FinOperator Dt = dual_operator(D);
  std::size_t k = D.ker_dim(), c = D.coker_dim();
  Rational val = det_value(e);
  DetLineElement out = det_line(Dt);
  if (val == 0) {
    out.scalar = 0;
    return out;
  }
  DualityMaps dm = duality_maps(D);
  // e = val * (canonical ker wedge) (x) (canonical coker wedge)^* ; push the
  // two canonical wedges through the pairing and the duality maps.
  Rational v1 = determinant(dm.coker_dual_to_ker);  // ker side of the output
  if ((c * (c - 1) / 2) % 2 == 1) v1 = -v1;
  Rational v2 = determinant(dm.ker_to_coker_dual);  // coker side
  if ((k * (k - 1) / 2) % 2 == 1) v2 = -v2;
  long ind = D.index();
  bool neg = ((ind % 2 + 2) % 2 == 1) && (c % 2 == 1);
  if (sign_tweaks().flip_dual_sign) neg = !neg;
  out.scalar = val * v1 * v2;
  if (neg) out.scalar = -out.scalar;
  return out;
}

}  // namespace detline

#include "detline/stab.hpp"

#include <stdexcept>

namespace detline {

namespace {

int parity(long v) { return static_cast<int>((v % 2 + 2) % 2); }

}  // namespace

FinOperator stabilized(const FinOperator& D, const RationalMatrix& Theta) {
  if (Theta.rows() != D.codomain_dim())
    throw std::invalid_argument("stabilization codomain mismatch");
  return FinOperator(hcat(D.matrix(), Theta));
}

ExactTriple stab_triple_basic(const FinOperator& D,
                              const RationalMatrix& Theta) {
  std::size_t n = D.domain_dim(), m = D.codomain_dim(), N = Theta.cols();
  ExactTriple t;
  t.Dp = D;
  t.D = stabilized(D, Theta);
  t.Dpp = FinOperator(zeros(0, N));
  t.iX = vcat(RationalMatrix::identity(n), zeros(N, n));
  t.jX = hcat(zeros(N, n), RationalMatrix::identity(N));
  t.iY = RationalMatrix::identity(m);
  t.jY = zeros(0, m);
  return t;
}

StabData stabilize(const FinOperator& D, const RationalMatrix& Theta) {
  StabData s;
  s.D = D;
  s.Theta = Theta;
  s.D_Theta = stabilized(D, Theta);
  s.triple = stab_triple_basic(D, Theta);
  return s;
}

DetLineElement hat_iso(const StabData& s, const DetLineElement& e) {
  return hat_iso(s.D, s.Theta, e);
}

DetLineElement inv_iso(const StabData& s, const DetLineElement& e) {
  return inv_iso(s.D, s.Theta, e);
}

DetLineElement hat_iso(const FinOperator& D, const RationalMatrix& Theta,
                       const DetLineElement& e) {
  std::size_t N = Theta.cols();
  ExactTriple t = stab_triple_basic(D, Theta);
  // Volume element of det(0: Q^N -> 0): full kernel frame, no cokernel.
  DetLineElement vol = det_line(t.Dpp);
  (void)N;
  return psi(t, e, vol);
}

DetLineElement inv_iso(const FinOperator& D, const RationalMatrix& Theta,
                       const DetLineElement& e) {
  std::size_t n = D.domain_dim(), N = Theta.cols();
  FinOperator DTh = stabilized(D, Theta);
  if (!(e.op == DTh))
    throw std::invalid_argument("inv_iso: element not over [D|Theta]");
  // Inclusion X -> X (+) Q^N; its cokernel classes are represented by the
  // trailing coordinate vectors, and the reference dual frame is their
  // predual.
  FinOperator incl(vcat(RationalMatrix::identity(n), zeros(N, n)));
  std::vector<std::vector<Rational>> cf;
  for (std::size_t i = 0; i < N; ++i) {
    std::vector<Rational> v(n + N, Rational(0));
    v[n + i] = 1;
    cf.push_back(std::move(v));
  }
  DetLineElement iota_elem = det_elem(incl, {}, std::move(cf));
  return compose_elem(incl, DTh, iota_elem, e);
}

Rational a_factor(const RationalMatrix& i, const RationalMatrix& j) {
  std::size_t Np = i.cols(), N = i.rows(), Npp = j.rows();
  if (j.cols() != N || Np + Npp != N)
    throw std::invalid_argument("a_factor: not an exact-row shape");
  RationalMatrix m(N, N);
  for (std::size_t k = 0; k < Np; ++k)
    for (std::size_t r = 0; r < N; ++r) m.at(k, r) = i.at(r, k);
  for (std::size_t k = 0; k < Npp; ++k) {
    std::vector<Rational> rhs(Npp, Rational(0));
    rhs[k] = 1;
    auto lift = solve(j, rhs);
    if (!lift) throw std::invalid_argument("a_factor: j not onto");
    for (std::size_t r = 0; r < N; ++r) m.at(Np + k, r) = (*lift)[r];
  }
  return determinant(m);
}

ExactTriple stab_triple(const ExactTriple& t, const RationalMatrix& i,
                        const RationalMatrix& j, const RationalMatrix& Thetap,
                        const RationalMatrix& Theta,
                        const RationalMatrix& Thetapp) {
  ExactTriple s;
  s.Dp = stabilized(t.Dp, Thetap);
  s.D = stabilized(t.D, Theta);
  s.Dpp = stabilized(t.Dpp, Thetapp);
  s.iX = dsum(t.iX, i);
  s.jX = dsum(t.jX, j);
  s.iY = t.iY;
  s.jY = t.jY;
  return s;
}

namespace {

// Shared frame construction of the two det(delta) -> det(0) maps: the output
// frames are (kernel basis ^ complement v) and (delta(v) ^ cokernel reps).
DetLineElement delta_to_zero(const DetLineElement& e, bool km_sign) {
  const FinOperator& d = e.op;
  std::size_t n = d.domain_dim(), m = d.codomain_dim();
  FinOperator zero(zeros(m, n));
  auto v = extend_basis(d.kernel(), Subspace::full(n));
  std::vector<std::vector<Rational>> kf;
  for (std::size_t it = 0; it < d.ker_dim(); ++it)
    kf.push_back(d.kernel().basis().row(it));
  kf.insert(kf.end(), v.begin(), v.end());
  std::vector<std::vector<Rational>> cf;
  for (const auto& vv : v) cf.push_back(d.matrix().apply(vv));
  for (std::size_t jt = 0; jt < d.coker_dim(); ++jt)
    cf.push_back(d.cokernel().basis_rep(jt));
  long dk = static_cast<long>(d.ker_dim()), dc = static_cast<long>(d.coker_dim());
  long dV = static_cast<long>(n), dW = static_cast<long>(m);
  long eps = km_sign ? dk * dc + dV * dW + (dV - dk) * dk
                     : (dW - dc) * dc;
  Rational c = det_value(e);
  if (parity(eps)) c = -c;
  return det_elem(zero, std::move(kf), std::move(cf), c);
}

}  // namespace

DetLineElement iso_delta(const DetLineElement& e) {
  return delta_to_zero(e, false);
}

DetLineElement km_iso_delta(const DetLineElement& e) {
  return delta_to_zero(e, true);
}

}  // namespace detline

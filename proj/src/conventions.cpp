#include "detline/conventions.hpp"

#include <stdexcept>

namespace detline {

void ConventionSystem::set(long i, long c, Rational value) {
  if (c < 0 || c < -i) throw std::invalid_argument("A index out of domain");
  if (value <= 0) throw std::invalid_argument("A values must be positive");
  if (c == 0 && value != 1)
    throw std::invalid_argument("A_{i,0} is forced to 1");
  table_[{i, c}] = std::move(value);
}

Rational ConventionSystem::a(long i, long c) const {
  if (c < 0 || c < -i) throw std::invalid_argument("A index out of domain");
  if (c == 0) return Rational(1);
  auto it = table_.find({i, c});
  return it == table_.end() ? default_ : it->second;
}

void ConventionSystem::set_default(Rational d) {
  if (d <= 0) throw std::invalid_argument("default must be positive");
  default_ = std::move(d);
}

DetLineElement psi_system(const ConventionSystem& conv, const ExactTriple& t,
                          const DetLineElement& sp,
                          const DetLineElement& spp) {
  Rational f = conv.a(t.Dp.index(), static_cast<long>(t.Dp.coker_dim())) *
               conv.a(t.Dpp.index(), static_cast<long>(t.Dpp.coker_dim())) /
               conv.a(t.D.index(), static_cast<long>(t.D.coker_dim()));
  return scale(psi(t, sp, spp), f);
}

DetLineElement dual_system(const ConventionSystem& conv,
                           const DetLineElement& e) {
  long ind = e.op.index();
  Rational f = rat_pow(conv.a(-1, 1), ind) *
               conv.a(ind, static_cast<long>(e.op.coker_dim())) /
               conv.a(-ind, static_cast<long>(e.op.ker_dim()));
  return scale(dualize_det(e), f);
}

DetLineElement iso_delta_system(const ConventionSystem& conv,
                                const DetLineElement& e) {
  long dV = static_cast<long>(e.op.domain_dim());
  long dW = static_cast<long>(e.op.codomain_dim());
  Rational f = conv.a(dV - dW, static_cast<long>(e.op.coker_dim())) /
               conv.a(dV - dW, dW);
  return scale(iso_delta(e), f);
}

bool is_norm_iii_star(const ConventionSystem& conv, long K) {
  for (long k = 1; k <= K; ++k)
    if (conv.a(-k, k) != rat_pow(conv.a(-1, 1), k)) return false;
  return true;
}

int ms_overlap_exponent(long N, long Nprime, long cdim) {
  return static_cast<int>((((Nprime - N) * cdim) % 2 + 2) % 2);
}

int salamon_exponent(long N, long ind, long cdim) {
  return static_cast<int>(((N * ind + cdim) % 2 + 2) % 2);
}

int km_reversal_exponent(const FinOperator& delta) {
  return static_cast<int>(rank(delta.matrix()) % 2);
}

Rational quillen_cosection(const FinOperator& D, const DetLineElement& sigma) {
  if (!(sigma.op == D))
    throw std::invalid_argument("quillen_cosection: element over wrong D");
  if (D.ker_dim() != 0 || D.coker_dim() != 0) return Rational(0);
  return det_value(sigma);
}

ExactTriple classification_triple(long i, long c) {
  if (c < 0 || i + c < 0)
    throw std::invalid_argument("classification indices out of range");
  std::size_t k = static_cast<std::size_t>(i + c);
  std::size_t cc = static_cast<std::size_t>(c);
  std::size_t n = k + cc;  // i + 2c
  ExactTriple t;
  t.Dp = FinOperator(zeros(cc, k));
  RationalMatrix proj = hcat(zeros(cc, k), RationalMatrix::identity(cc));
  t.D = FinOperator(proj);
  t.Dpp = FinOperator(zeros(0, cc));
  t.iX = vcat(RationalMatrix::identity(k), zeros(cc, k));
  t.jX = hcat(zeros(cc, k), RationalMatrix::identity(cc));
  t.iY = RationalMatrix::identity(cc);
  t.jY = zeros(0, cc);
  (void)n;
  return t;
}

Rational classification_value(const ConventionSystem& conv, long i, long c) {
  ExactTriple t = classification_triple(i, c);
  // Omega_{i+c} (x) Omega_c^* over the zero map, Omega_c (x) 1 over the
  // zero map to the zero space.
  DetLineElement sp = det_line(t.Dp);
  DetLineElement spp = det_line(t.Dpp);
  DetLineElement out = psi_system(conv, t, sp, spp);
  // Reference: wedge of the first i+c coordinate vectors, no cokernel.
  std::vector<std::vector<Rational>> kf;
  std::size_t k = static_cast<std::size_t>(i + c);
  std::size_t n = t.D.domain_dim();
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<Rational> v(n, Rational(0));
    v[r] = 1;
    kf.push_back(std::move(v));
  }
  DetLineElement ref = det_elem(t.D, std::move(kf), {});
  Rational r = det_ratio(out, ref);
  return c % 2 == 0 ? r : -r;
}

}  // namespace detline

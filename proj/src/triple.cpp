#include "detline/triple.hpp"

#include <stdexcept>

#include "detline/sign_tweaks.hpp"

namespace detline {

namespace {

Subspace image_of(const RationalMatrix& m) {
  return Subspace::span(m.transpose());
}

Subspace kernel_of(const RationalMatrix& m) {
  return Subspace::span(kernel_basis(m));
}

std::vector<std::vector<Rational>> map_frame(
    const RationalMatrix& m, const std::vector<std::vector<Rational>>& fr) {
  std::vector<std::vector<Rational>> out;
  out.reserve(fr.size());
  for (const auto& v : fr) out.push_back(m.apply(v));
  return out;
}

Subspace span_rows(const std::vector<std::vector<Rational>>& rows,
                   std::size_t ambient) {
  RationalMatrix m(rows.size(), ambient);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < ambient; ++c) m.at(r, c) = rows[r][c];
  return Subspace::span(m);
}

std::vector<Rational> must_solve(const RationalMatrix& m,
                                 const std::vector<Rational>& b,
                                 const char* what) {
  auto x = solve(m, b);
  if (!x) throw std::logic_error(std::string("unsolvable lift: ") + what);
  return *x;
}

// Connecting-map lift: ker D'' -> Y' representing delta(x'') in coker D'.
std::vector<Rational> delta_lift(const ExactTriple& t,
                                 const std::vector<Rational>& xpp) {
  std::vector<Rational> x = must_solve(t.jX, xpp, "jX preimage");
  std::vector<Rational> w = t.D.matrix().apply(x);
  return must_solve(t.iY, w, "iY preimage of Dx");
}

int parity(long v) { return static_cast<int>((v % 2 + 2) % 2); }

}  // namespace

std::optional<std::string> validate_triple(const ExactTriple& t) {
  const std::size_t np = t.Dp.domain_dim(), n = t.D.domain_dim(),
                    npp = t.Dpp.domain_dim();
  const std::size_t mp = t.Dp.codomain_dim(), m = t.D.codomain_dim(),
                    mpp = t.Dpp.codomain_dim();
  if (t.iX.rows() != n || t.iX.cols() != np) return "iX-shape";
  if (t.jX.rows() != npp || t.jX.cols() != n) return "jX-shape";
  if (t.iY.rows() != m || t.iY.cols() != mp) return "iY-shape";
  if (t.jY.rows() != mpp || t.jY.cols() != m) return "jY-shape";
  if (rank(t.iX) != np) return "iX-injective";
  if (rank(t.jX) != npp) return "jX-surjective";
  if (!(image_of(t.iX) == kernel_of(t.jX))) return "domain-row-exact";
  if (rank(t.iY) != mp) return "iY-injective";
  if (rank(t.jY) != mpp) return "jY-surjective";
  if (!(image_of(t.iY) == kernel_of(t.jY))) return "codomain-row-exact";
  if (!(t.D.matrix() * t.iX == t.iY * t.Dp.matrix()))
    return "left-square-commutes";
  if (!(t.Dpp.matrix() * t.jX == t.jY * t.D.matrix()))
    return "right-square-commutes";
  return std::nullopt;
}

SnakeData snake(const ExactTriple& t) {
  SnakeData s;
  const Subspace& Kp = t.Dp.kernel();
  const Subspace& K = t.D.kernel();
  const Subspace& Kpp = t.Dpp.kernel();
  s.ker_in = RationalMatrix(K.dim(), Kp.dim());
  for (std::size_t j = 0; j < Kp.dim(); ++j) {
    auto c = K.coords(t.iX.apply(Kp.basis().row(j)));
    for (std::size_t i = 0; i < c.size(); ++i) s.ker_in.at(i, j) = c[i];
  }
  s.ker_out = RationalMatrix(Kpp.dim(), K.dim());
  for (std::size_t j = 0; j < K.dim(); ++j) {
    auto c = Kpp.coords(t.jX.apply(K.basis().row(j)));
    for (std::size_t i = 0; i < c.size(); ++i) s.ker_out.at(i, j) = c[i];
  }
  s.delta = RationalMatrix(t.Dp.coker_dim(), Kpp.dim());
  for (std::size_t j = 0; j < Kpp.dim(); ++j) {
    auto c = t.Dp.cokernel().coords(delta_lift(t, Kpp.basis().row(j)));
    for (std::size_t i = 0; i < c.size(); ++i) s.delta.at(i, j) = c[i];
  }
  s.coker_in = RationalMatrix(t.D.coker_dim(), t.Dp.coker_dim());
  for (std::size_t j = 0; j < t.Dp.coker_dim(); ++j) {
    auto c = t.D.cokernel().coords(t.iY.apply(t.Dp.cokernel().basis_rep(j)));
    for (std::size_t i = 0; i < c.size(); ++i) s.coker_in.at(i, j) = c[i];
  }
  s.coker_out = RationalMatrix(t.Dpp.coker_dim(), t.D.coker_dim());
  for (std::size_t j = 0; j < t.D.coker_dim(); ++j) {
    auto c = t.Dpp.cokernel().coords(t.jY.apply(t.D.cokernel().basis_rep(j)));
    for (std::size_t i = 0; i < c.size(); ++i) s.coker_out.at(i, j) = c[i];
  }
  return s;
}

std::optional<std::string> snake_exact(const ExactTriple& t,
                                       const SnakeData& s) {
  if (rank(s.ker_in) != t.Dp.ker_dim()) return "kernel-head-injective";
  if (!(image_of(s.ker_in) == kernel_of(s.ker_out))) return "kernel-level";
  if (!(image_of(s.ker_out) == kernel_of(s.delta))) return "into-delta";
  if (!(image_of(s.delta) == kernel_of(s.coker_in))) return "out-of-delta";
  if (!(image_of(s.coker_in) == kernel_of(s.coker_out)))
    return "cokernel-level";
  if (rank(s.coker_out) != t.Dpp.coker_dim()) return "cokernel-tail-onto";
  return std::nullopt;
}

AuxFrames default_aux(const ExactTriple& t) {
  AuxFrames a;
  const Subspace& Kp = t.Dp.kernel();
  const Subspace& K = t.D.kernel();
  const Subspace& Kpp = t.Dpp.kernel();
  Subspace iK = span_rows(map_frame(t.iX, [&] {
                            std::vector<std::vector<Rational>> b;
                            for (std::size_t i = 0; i < Kp.dim(); ++i)
                              b.push_back(Kp.basis().row(i));
                            return b;
                          }()),
                          t.D.domain_dim());
  a.u = extend_basis(iK, K);
  std::vector<std::vector<Rational>> jkrows;
  for (std::size_t i = 0; i < K.dim(); ++i)
    jkrows.push_back(t.jX.apply(K.basis().row(i)));
  a.v = extend_basis(span_rows(jkrows, t.Dpp.domain_dim()), Kpp);
  std::vector<std::vector<Rational>> srows;
  for (std::size_t i = 0; i < t.Dp.image().dim(); ++i)
    srows.push_back(t.Dp.image().basis().row(i));
  for (std::size_t i = 0; i < Kpp.dim(); ++i)
    srows.push_back(delta_lift(t, Kpp.basis().row(i)));
  a.w = extend_basis(span_rows(srows, t.Dp.codomain_dim()),
                     Subspace::full(t.Dp.codomain_dim()));
  std::vector<std::vector<Rational>> trows;
  for (std::size_t i = 0; i < t.D.image().dim(); ++i)
    trows.push_back(t.D.image().basis().row(i));
  for (std::size_t c = 0; c < t.iY.cols(); ++c) {
    std::vector<Rational> col(t.iY.rows());
    for (std::size_t r = 0; r < t.iY.rows(); ++r) col[r] = t.iY.at(r, c);
    trows.push_back(std::move(col));
  }
  a.y = extend_basis(span_rows(trows, t.D.codomain_dim()),
                     Subspace::full(t.D.codomain_dim()));
  return a;
}

DetLineElement psi(const ExactTriple& t, const DetLineElement& sp,
                   const DetLineElement& spp, const AuxFrames& aux) {
  if (!(sp.op == t.Dp) || !(spp.op == t.Dpp))
    throw std::invalid_argument("psi: elements do not match the triple");
  // Reference element of det(D'): canonical kernel frame, cokernel frame
  // (delta of v) ^ w.
  std::vector<std::vector<Rational>> x;
  for (std::size_t i = 0; i < t.Dp.ker_dim(); ++i)
    x.push_back(t.Dp.kernel().basis().row(i));
  std::vector<std::vector<Rational>> cfp;
  for (const auto& v : aux.v) cfp.push_back(delta_lift(t, v));
  for (const auto& w : aux.w) cfp.push_back(w);
  DetLineElement ep = det_elem(t.Dp, x, cfp);
  // Reference element of det(D''): kernel frame jX(u) ^ v, cokernel frame
  // jY(y).
  std::vector<std::vector<Rational>> kfpp = map_frame(t.jX, aux.u);
  for (const auto& v : aux.v) kfpp.push_back(v);
  DetLineElement epp = det_elem(t.Dpp, kfpp, map_frame(t.jY, aux.y));
  Rational c = det_ratio(sp, ep) * det_ratio(spp, epp);
  // Output frames iX(x) ^ u and iY(w) ^ y.
  std::vector<std::vector<Rational>> kf = map_frame(t.iX, x);
  for (const auto& u : aux.u) kf.push_back(u);
  std::vector<std::vector<Rational>> cf = map_frame(t.iY, aux.w);
  for (const auto& y : aux.y) cf.push_back(y);
  int eps = (parity(t.Dpp.index()) * parity(t.Dp.coker_dim()) +
             parity(t.D.coker_dim()) * parity(aux.v.size())) %
            2;
  if (sign_tweaks().flip_triple_sign) eps ^= 1;
  if (eps) c = -c;
  return det_elem(t.D, std::move(kf), std::move(cf), c);
}

DetLineElement psi(const ExactTriple& t, const DetLineElement& sp,
                   const DetLineElement& spp) {
  return psi(t, sp, spp, default_aux(t));
}

DetLineElement iso_T_prime(const ExactTriple& t, const DetLineElement& sp,
                           const DetLineElement& spp) {
  if (t.Dp.ker_dim() != 0 || t.Dp.coker_dim() != 0)
    throw std::invalid_argument("iso_T_prime: left operator not invertible");
  Rational c = det_value(sp) * spp.scalar;
  // Kernel vectors of D pull back through jX; cokernel classes pull back
  // through the isomorphism induced by jY.
  RationalMatrix kstack = vcat(t.jX, t.D.matrix());
  std::vector<std::vector<Rational>> kf;
  for (const auto& v : spp.ker_frame) {
    std::vector<Rational> rhs = concat(v, std::vector<Rational>(
                                              t.D.codomain_dim(), Rational(0)));
    kf.push_back(must_solve(kstack, rhs, "kernel preimage under jX"));
  }
  RationalMatrix cstack = hcat(t.jY, t.Dpp.matrix());
  std::vector<std::vector<Rational>> cf;
  for (const auto& w : spp.coker_frame) {
    auto sol = must_solve(cstack, w, "cokernel preimage under jY");
    cf.emplace_back(sol.begin(), sol.begin() + t.D.codomain_dim());
  }
  return det_elem(t.D, std::move(kf), std::move(cf), c);
}

DetLineElement iso_T_dprime(const ExactTriple& t, const DetLineElement& sp,
                            const DetLineElement& spp) {
  if (t.Dpp.ker_dim() != 0 || t.Dpp.coker_dim() != 0)
    throw std::invalid_argument(
        "iso_T_dprime: right operator not invertible");
  Rational c = det_value(spp) * sp.scalar;
  return det_elem(t.D, map_frame(t.iX, sp.ker_frame),
                  map_frame(t.iY, sp.coker_frame), c);
}

ExactTriple direct_sum_triple(const FinOperator& Dp, const FinOperator& Dpp) {
  ExactTriple t;
  t.Dp = Dp;
  t.Dpp = Dpp;
  t.D = FinOperator(dsum(Dp.matrix(), Dpp.matrix()));
  std::size_t np = Dp.domain_dim(), npp = Dpp.domain_dim();
  std::size_t mp = Dp.codomain_dim(), mpp = Dpp.codomain_dim();
  t.iX = vcat(RationalMatrix::identity(np), zeros(npp, np));
  t.jX = hcat(zeros(npp, np), RationalMatrix::identity(npp));
  t.iY = vcat(RationalMatrix::identity(mp), zeros(mpp, mp));
  t.jY = hcat(zeros(mpp, mp), RationalMatrix::identity(mpp));
  return t;
}

namespace {

std::vector<Rational> pad(const std::vector<Rational>& v, std::size_t before,
                          std::size_t after) {
  std::vector<Rational> out(before, Rational(0));
  out.insert(out.end(), v.begin(), v.end());
  out.insert(out.end(), after, Rational(0));
  return out;
}

}  // namespace

DetLineElement direct_sum_elem(const DetLineElement& sp,
                               const DetLineElement& spp) {
  FinOperator D(dsum(sp.op.matrix(), spp.op.matrix()));
  std::size_t np = sp.op.domain_dim(), npp = spp.op.domain_dim();
  std::size_t mp = sp.op.codomain_dim(), mpp = spp.op.codomain_dim();
  std::vector<std::vector<Rational>> kf, cf;
  for (const auto& v : sp.ker_frame) kf.push_back(pad(v, 0, npp));
  for (const auto& v : spp.ker_frame) kf.push_back(pad(v, np, 0));
  for (const auto& w : sp.coker_frame) cf.push_back(pad(w, 0, mpp));
  for (const auto& w : spp.coker_frame) cf.push_back(pad(w, mp, 0));
  Rational c = sp.scalar * spp.scalar;
  int eps = parity(spp.op.index()) * parity(sp.op.coker_dim());
  if (sign_tweaks().flip_sum_sign) eps ^= 1;
  if (eps % 2) c = -c;
  return det_elem(D, std::move(kf), std::move(cf), c);
}

ExactTriple composition_triple(const FinOperator& D1, const FinOperator& D2) {
  if (D2.domain_dim() != D1.codomain_dim())
    throw std::invalid_argument("composition shape mismatch");
  std::size_t n1 = D1.domain_dim(), n2 = D1.codomain_dim(),
              n3 = D2.codomain_dim();
  ExactTriple t;
  t.Dp = D1;
  t.Dpp = D2;
  t.D = FinOperator(dsum(D2.matrix() * D1.matrix(),
                         RationalMatrix::identity(n2)));
  t.iX = vcat(RationalMatrix::identity(n1), D1.matrix());
  t.jX = hcat(D1.matrix(), -RationalMatrix::identity(n2));
  t.iY = vcat(D2.matrix(), RationalMatrix::identity(n2));
  t.jY = hcat(RationalMatrix::identity(n3), -D2.matrix());
  return t;
}

DetLineElement compose_elem(const FinOperator& D1, const FinOperator& D2,
                            const DetLineElement& s1,
                            const DetLineElement& s2) {
  if (!(s1.op == D1) || !(s2.op == D2))
    throw std::invalid_argument("compose_elem: element/operator mismatch");
  FinOperator D21(D2.matrix() * D1.matrix());
  std::size_t n2 = D1.codomain_dim();
  // Complements: u of ker D1 in ker(D2 D1); v of ker D2 /\ im D1 in ker D2;
  // w of ker D2 + im D1 in the middle space.
  auto u = extend_basis(D1.kernel(), D21.kernel());
  Subspace meet = D2.kernel().intersect(D1.image());
  auto v = extend_basis(meet, D2.kernel());
  auto w = extend_basis(D2.kernel().sum(D1.image()), Subspace::full(n2));
  // Reference elements.
  std::vector<std::vector<Rational>> x1;
  for (std::size_t i = 0; i < D1.ker_dim(); ++i)
    x1.push_back(D1.kernel().basis().row(i));
  std::vector<std::vector<Rational>> cf1 = v;
  cf1.insert(cf1.end(), w.begin(), w.end());
  DetLineElement e1 = det_elem(D1, x1, cf1);
  std::vector<std::vector<Rational>> kf2;
  for (const auto& uu : u) kf2.push_back(D1.matrix().apply(uu));
  kf2.insert(kf2.end(), v.begin(), v.end());
  std::vector<std::vector<Rational>> y2;
  for (std::size_t j = 0; j < D2.coker_dim(); ++j)
    y2.push_back(D2.cokernel().basis_rep(j));
  DetLineElement e2 = det_elem(D2, kf2, y2);
  Rational c = det_ratio(s1, e1) * det_ratio(s2, e2);
  // Output x1 ^ u and D2(w) ^ y2.
  std::vector<std::vector<Rational>> kf = x1;
  kf.insert(kf.end(), u.begin(), u.end());
  std::vector<std::vector<Rational>> cf;
  for (const auto& ww : w) cf.push_back(D2.matrix().apply(ww));
  cf.insert(cf.end(), y2.begin(), y2.end());
  int eps = (parity(D2.index()) * parity(D1.coker_dim()) +
             (parity(D1.coker_dim()) + parity(D2.coker_dim())) *
                 parity(v.size())) %
            2;
  if (sign_tweaks().flip_comp_sign) eps ^= 1;
  if (eps) c = -c;
  return det_elem(D21, std::move(kf), std::move(cf), c);
}

DetLineElement drop_id_summand(const DetLineElement& e, std::size_t k) {
  std::size_t n = e.op.domain_dim() - k, m = e.op.codomain_dim() - k;
  RationalMatrix inner(m, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) inner.at(r, c) = e.op.matrix().at(r, c);
  std::vector<std::vector<Rational>> kf, cf;
  for (const auto& v : e.ker_frame) {
    for (std::size_t i = n; i < v.size(); ++i)
      if (v[i] != 0)
        throw std::invalid_argument("kernel frame leaks into id summand");
    kf.emplace_back(v.begin(), v.begin() + n);
  }
  for (const auto& w : e.coker_frame) cf.emplace_back(w.begin(), w.begin() + m);
  return det_elem(FinOperator(inner), std::move(kf), std::move(cf), e.scalar);
}

DetLineElement add_id_summand(const DetLineElement& e, std::size_t k) {
  FinOperator big(dsum(e.op.matrix(), RationalMatrix::identity(k)));
  std::vector<std::vector<Rational>> kf, cf;
  for (const auto& v : e.ker_frame) kf.push_back(pad(v, 0, k));
  for (const auto& w : e.coker_frame) cf.push_back(pad(w, 0, k));
  return det_elem(big, std::move(kf), std::move(cf), e.scalar);
}

ExactTriple dual_triple(const ExactTriple& t) {
  ExactTriple d;
  d.Dp = dual_operator(t.Dpp);
  d.D = dual_operator(t.D);
  d.Dpp = dual_operator(t.Dp);
  d.iX = t.jY.transpose();
  d.jX = t.iY.transpose();
  d.iY = t.jX.transpose();
  d.jY = t.iX.transpose();
  return d;
}

ExactTriple compose_triples(const ExactTriple& t1, const ExactTriple& t2) {
  if (!(t1.iY == t2.iX) || !(t1.jY == t2.jX))
    throw std::invalid_argument("compose_triples: middle rows differ");
  ExactTriple c;
  c.Dp = FinOperator(t2.Dp.matrix() * t1.Dp.matrix());
  c.D = FinOperator(t2.D.matrix() * t1.D.matrix());
  c.Dpp = FinOperator(t2.Dpp.matrix() * t1.Dpp.matrix());
  c.iX = t1.iX;
  c.jX = t1.jX;
  c.iY = t2.iY;
  c.jY = t2.jY;
  return c;
}

}  // namespace detline

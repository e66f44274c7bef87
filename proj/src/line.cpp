#include "detline/line.hpp"

#include <stdexcept>

namespace detline {

std::size_t carrier_dim(const LineCarrier& c) {
  return std::visit([](const auto& s) { return s.dim(); }, c);
}

std::size_t carrier_ambient(const LineCarrier& c) {
  return std::visit([](const auto& s) { return s.ambient(); }, c);
}

std::vector<Rational> carrier_coords(const LineCarrier& c,
                                     const std::vector<Rational>& v) {
  return std::visit([&](const auto& s) { return s.coords(v); }, c);
}

std::vector<Rational> carrier_basis_rep(const LineCarrier& c, std::size_t j) {
  if (std::holds_alternative<Subspace>(c))
    return std::get<Subspace>(c).basis().row(j);
  return std::get<QuotientSpace>(c).basis_rep(j);
}

bool carrier_eq(const LineCarrier& a, const LineCarrier& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<Subspace>(a))
    return std::get<Subspace>(a) == std::get<Subspace>(b);
  return std::get<QuotientSpace>(a) == std::get<QuotientSpace>(b);
}

bool operator==(const LineSpace& a, const LineSpace& b) {
  return a.dual == b.dual && carrier_eq(a.carrier, b.carrier);
}

Rational frame_det(const LineCarrier& carrier,
                   const std::vector<std::vector<Rational>>& frame) {
  std::size_t k = carrier_dim(carrier);
  if (frame.size() != k)
    throw std::invalid_argument("frame size != carrier dimension");
  RationalMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> c = carrier_coords(carrier, frame[i]);
    for (std::size_t j = 0; j < k; ++j) m.at(i, j) = c[j];
  }
  return determinant(m);
}

Rational line_value(const LineElement& e) {
  Rational d = frame_det(e.space.carrier, e.frame);
  if (!e.space.dual) return e.scalar * d;
  if (d == 0) {
    if (e.scalar != 0)
      throw std::domain_error("degenerate predual frame with nonzero scalar");
    return Rational(0);
  }
  return e.scalar / d;
}

Rational line_compare(const LineElement& a, const LineElement& b) {
  if (!(a.space == b.space))
    throw std::invalid_argument("line_compare across different lines");
  Rational vb = line_value(b);
  if (vb == 0) throw std::domain_error("line_compare against zero element");
  return line_value(a) / vb;
}

LineElement canonical_generator(const LineSpace& space) {
  LineElement e;
  e.space = space;
  for (std::size_t j = 0; j < space.dim(); ++j)
    e.frame.push_back(carrier_basis_rep(space.carrier, j));
  e.scalar = 1;
  return e;
}

TensorElement swap_R(const TensorElement& t, std::size_t i) {
  if (i + 1 >= t.factors.size())
    throw std::invalid_argument("swap_R index out of range");
  TensorElement out = t;
  int d1 = out.factors[i].space.degree();
  int d2 = out.factors[i + 1].space.degree();
  std::swap(out.factors[i], out.factors[i + 1]);
  if (d1 == 1 && d2 == 1) out.scalar = -out.scalar;
  return out;
}

std::pair<Rational, Rational> standard_pairings(
    const RationalMatrix& functionals, const RationalMatrix& vectors) {
  if (functionals.rows() != vectors.rows() ||
      functionals.cols() != vectors.cols())
    throw std::invalid_argument("pairing shape mismatch");
  Rational d = determinant(functionals * vectors.transpose());
  std::size_t n = functionals.rows();
  Rational alt = (n * (n - 1) / 2) % 2 == 0 ? d : -d;
  return {d, alt};
}

std::pair<Rational, Rational> standard_pairings(const LineElement& alpha,
                                                const LineElement& v) {
  if (alpha.space.dual || v.space.dual)
    throw std::invalid_argument("standard_pairings expects plain elements");
  std::size_t n = v.space.dim();
  if (alpha.space.dim() != n)
    throw std::invalid_argument("pairing dimension mismatch");
  RationalMatrix f(n, n), m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto a = carrier_coords(alpha.space.carrier, alpha.frame[i]);
    auto b = carrier_coords(v.space.carrier, v.frame[i]);
    for (std::size_t j = 0; j < n; ++j) {
      f.at(i, j) = a[j];
      m.at(i, j) = b[j];
    }
  }
  auto [d, alt] = standard_pairings(f, m);
  Rational s = alpha.scalar * v.scalar;
  return {s * d, s * alt};
}

LineElement pairing_P(const LineCarrier& V, const LineElement& dual_coords) {
  std::size_t n = carrier_dim(V);
  if (dual_coords.space.dual || dual_coords.space.dim() != n ||
      carrier_ambient(dual_coords.space.carrier) != n)
    throw std::invalid_argument("pairing_P input must fill the dual of V");
  Rational v = line_value(dual_coords);
  LineElement out = canonical_generator(LineSpace{V, true});
  out.scalar = (n * (n - 1) / 2) % 2 == 0 ? v : -v;
  return out;
}

LineElement pairing_P(const LineElement& dual_coords) {
  return pairing_P(LineCarrier{Subspace::full(dual_coords.space.dim())},
                   dual_coords);
}

LineElement pairing_P_inv(const LineElement& e) {
  if (!e.space.dual)
    throw std::invalid_argument("pairing_P_inv expects a dual-line element");
  std::size_t n = e.space.dim();
  Rational v = line_value(e);
  LineElement out = volume_tensor(n);
  out.scalar = (n * (n - 1) / 2) % 2 == 0 ? v : -v;
  return out;
}

LineElement volume_tensor(std::size_t N) {
  LineElement e;
  e.space = LineSpace{Subspace::full(N), false};
  for (std::size_t j = 0; j < N; ++j) {
    std::vector<Rational> v(N, Rational(0));
    v[j] = 1;
    e.frame.push_back(std::move(v));
  }
  e.scalar = 1;
  return e;
}

}  // namespace detline

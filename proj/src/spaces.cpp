#include "detline/spaces.hpp"

#include <stdexcept>

namespace detline {

Subspace Subspace::span(const RationalMatrix& gens) {
  Subspace s(gens.cols());
  RrefResult r = rref(gens);
  s.basis_ = r.mat;
  s.pivots_ = r.pivots;
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  return span(RationalMatrix::identity(ambient));
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient mismatch");
  std::vector<Rational> res = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    Rational c = res[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t k = 0; k < ambient_; ++k) res[k] -= c * basis_.at(i, k);
  }
  return is_zero_vec(res);
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis().row(i))) return false;
  return true;
}

std::vector<Rational> Subspace::coords(const std::vector<Rational>& v) const {
  if (!contains(v)) throw std::domain_error("vector outside subspace");
  std::vector<Rational> c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("ambient mismatch");
  return span(vcat(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("ambient mismatch");
  // Null space of stacked coefficients: a in A-coords, b in B-coords with
  // A^T a - B^T b = 0 gives intersection vectors A^T a.
  RationalMatrix m = hcat(basis_.transpose(), -other.basis_.transpose());
  RationalMatrix ker = kernel_basis(m);
  RationalMatrix gens(ker.rows(), ambient_);
  for (std::size_t r = 0; r < ker.rows(); ++r)
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t k = 0; k < ambient_; ++k)
        gens.at(r, k) += ker.at(r, i) * basis_.at(i, k);
  return span(gens);
}

QuotientSpace::QuotientSpace(std::size_t ambient, Subspace denominator)
    : ambient_(ambient), denom_(std::move(denominator)) {
  if (denom_.ambient() != ambient_)
    throw std::invalid_argument("ambient mismatch");
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : denom_.pivots()) is_pivot[p] = true;
  for (std::size_t c = 0; c < ambient_; ++c)
    if (!is_pivot[c]) free_cols_.push_back(c);
}

std::vector<Rational> QuotientSpace::project_to_complement(
    const std::vector<Rational>& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient mismatch");
  std::vector<Rational> res = v;
  const RationalMatrix& b = denom_.basis();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    Rational c = res[denom_.pivots()[i]];
    if (c == 0) continue;
    for (std::size_t k = 0; k < ambient_; ++k) res[k] -= c * b.at(i, k);
  }
  return res;
}

std::vector<Rational> QuotientSpace::coords(
    const std::vector<Rational>& v) const {
  std::vector<Rational> p = project_to_complement(v);
  std::vector<Rational> c(dim());
  for (std::size_t j = 0; j < dim(); ++j) c[j] = p[free_cols_[j]];
  return c;
}

std::vector<Rational> QuotientSpace::lift(
    const std::vector<Rational>& coords) const {
  if (coords.size() != dim()) throw std::invalid_argument("coord mismatch");
  std::vector<Rational> v(ambient_, Rational(0));
  for (std::size_t j = 0; j < dim(); ++j) v[free_cols_[j]] = coords[j];
  return v;
}

std::vector<Rational> QuotientSpace::basis_rep(std::size_t j) const {
  std::vector<Rational> v(ambient_, Rational(0));
  v[free_cols_.at(j)] = 1;
  return v;
}

bool QuotientSpace::equal_mod(const std::vector<Rational>& u,
                              const std::vector<Rational>& v) const {
  return denom_.contains(u - v);
}

std::vector<std::vector<Rational>> extend_basis(const Subspace& small,
                                                const Subspace& big) {
  if (small.ambient() != big.ambient())
    throw std::invalid_argument("ambient mismatch");
  if (!big.contains(small))
    throw std::invalid_argument("extend_basis: not nested");
  std::vector<std::vector<Rational>> out;
  RationalMatrix acc = small.basis();
  std::size_t r = acc.rows();
  for (std::size_t i = 0; i < big.dim() && r + out.size() < big.dim(); ++i) {
    std::vector<Rational> cand = big.basis().row(i);
    RationalMatrix trial = vcat(acc, RationalMatrix::from_rows({cand}));
    if (rank(trial) > acc.rows()) {
      out.push_back(cand);
      acc = trial;
    }
  }
  if (r + out.size() != big.dim())
    throw std::logic_error("extend_basis failed");
  return out;
}

}  // namespace detline

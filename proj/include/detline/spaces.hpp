#pragma once

#include <vector>

#include "detline/matrix.hpp"

namespace detline {

// Subspace of Q^n, held as its unique RREF basis (rows).
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(std::size_t ambient)
      : ambient_(ambient), basis_(0, ambient) {}
  // Span of the rows of `gens`.
  static Subspace span(const RationalMatrix& gens);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& rhs) const = default;

  // Coordinates of v in the RREF basis; throws if v is outside.
  std::vector<Rational> coords(const std::vector<Rational>& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

 private:
  std::size_t ambient_;
  RationalMatrix basis_;
  std::vector<std::size_t> pivots_;
};

// Quotient Q^n / W.  The canonical basis is the classes of the standard
// basis vectors at the non-pivot columns of W's RREF basis.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(std::size_t ambient, Subspace denominator);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return free_cols_.size(); }
  const Subspace& denominator() const { return denom_; }
  const std::vector<std::size_t>& free_cols() const { return free_cols_; }

  // Unique representative of [v] with zero entries at all pivot columns.
  std::vector<Rational> project_to_complement(
      const std::vector<Rational>& v) const;
  // Coordinates of [v] in the canonical basis.
  std::vector<Rational> coords(const std::vector<Rational>& v) const;
  // Ambient representative of given canonical coordinates.
  std::vector<Rational> lift(const std::vector<Rational>& coords) const;
  // Ambient representative of the j-th canonical basis class.
  std::vector<Rational> basis_rep(std::size_t j) const;

  bool equal_mod(const std::vector<Rational>& u,
                 const std::vector<Rational>& v) const;
  bool operator==(const QuotientSpace& rhs) const = default;

 private:
  std::size_t ambient_ = 0;
  Subspace denom_;
  std::vector<std::size_t> free_cols_;
};

inline QuotientSpace quotient_of(std::size_t ambient, Subspace w) {
  return QuotientSpace(ambient, std::move(w));
}

// Vectors of `big` extending a basis of `small` to one of `big`, chosen
// greedily from the canonical basis of `big` (deterministic).
std::vector<std::vector<Rational>> extend_basis(const Subspace& small,
                                                const Subspace& big);

}  // namespace detline

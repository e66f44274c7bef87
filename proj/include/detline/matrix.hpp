#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "detline/rational.hpp"

namespace detline {

// Dense rational matrix, row-major.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(std::vector<std::vector<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  std::vector<Rational> row(std::size_t r) const;

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix operator-() const;
  bool operator==(const RationalMatrix& rhs) const = default;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  bool is_zero() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

struct RrefResult {
  RationalMatrix mat;          // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each remaining row
};

RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// Basis of the right null space, rows of the result, in RREF.
RationalMatrix kernel_basis(const RationalMatrix& m);

// Basis of the column space, expressed in RREF row form.
RationalMatrix image_basis(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);

// Inverse of a square matrix; throws std::domain_error if singular.
RationalMatrix inverse(const RationalMatrix& m);

// One solution x of m x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m,
                                           const std::vector<Rational>& b);

std::vector<Rational> operator+(const std::vector<Rational>& a,
                                const std::vector<Rational>& b);
std::vector<Rational> operator-(const std::vector<Rational>& a,
                                const std::vector<Rational>& b);
std::vector<Rational> operator*(const Rational& c,
                                const std::vector<Rational>& v);
bool is_zero_vec(const std::vector<Rational>& v);

// Horizontal block [a | b]; rows must agree.
RationalMatrix hcat(const RationalMatrix& a, const RationalMatrix& b);
// Vertical block; columns must agree.
RationalMatrix vcat(const RationalMatrix& a, const RationalMatrix& b);
// Block diagonal.
RationalMatrix dsum(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix zeros(std::size_t rows, std::size_t cols);

std::vector<Rational> concat(const std::vector<Rational>& a,
                             const std::vector<Rational>& b);

}  // namespace detline

#include "detline/matrix.hpp"

#include <stdexcept>

namespace detline {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(
    std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return RationalMatrix(0, 0);
  RationalMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols())
      throw std::invalid_argument("ragged row list");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
  std::vector<Rational> out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("shape mismatch in *");
  RationalMatrix p(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = at(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        p.at(r, c) += x * rhs.at(k, c);
    }
  return p;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("shape mismatch in +");
  RationalMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + rhs.a_[i];
  return s;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("shape mismatch in -");
  RationalMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - rhs.a_[i];
  return s;
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = -a_[i];
  return s;
}

std::vector<Rational> RationalMatrix::apply(
    const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("shape mismatch in apply");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != 0) out[r] += at(r, c) * v[c];
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

RrefResult rref(const RationalMatrix& m) {
  RationalMatrix w = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
    std::size_t p = r;
    while (p < w.rows() && w.at(p, c) == 0) ++p;
    if (p == w.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < w.cols(); ++k)
        std::swap(w.at(p, k), w.at(r, k));
    Rational inv = Rational(1) / w.at(r, c);
    for (std::size_t k = c; k < w.cols(); ++k) w.at(r, k) *= inv;
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (i == r || w.at(i, c) == 0) continue;
      Rational f = w.at(i, c);
      for (std::size_t k = c; k < w.cols(); ++k)
        w.at(i, k) -= f * w.at(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  RationalMatrix out(pivots.size(), w.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t k = 0; k < w.cols(); ++k) out.at(i, k) = w.at(i, k);
  return {out, pivots};
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

RationalMatrix kernel_basis(const RationalMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[c] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = -r.mat.at(i, c);
    rows.push_back(std::move(v));
  }
  RationalMatrix raw =
      rows.empty() ? RationalMatrix(0, m.cols())
                   : RationalMatrix::from_rows(std::move(rows));
  return rref(raw).mat;  // canonical form
}

RationalMatrix image_basis(const RationalMatrix& m) {
  return rref(m.transpose()).mat;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square");
  RationalMatrix w = m;
  std::size_t n = w.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && w.at(p, c) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(w.at(p, k), w.at(c, k));
      det = -det;
    }
    det *= w.at(c, c);
    Rational inv = Rational(1) / w.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (w.at(i, c) == 0) continue;
      Rational f = w.at(i, c) * inv;
      for (std::size_t k = c; k < n; ++k) w.at(i, k) -= f * w.at(c, k);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square");
  std::size_t n = m.rows();
  RrefResult r = rref(hcat(m, RationalMatrix::identity(n)));
  if (r.pivots.size() != n || (n > 0 && r.pivots[n - 1] != n - 1))
    throw std::domain_error("singular matrix");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m,
                                           const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve shape mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  RrefResult r = rref(aug);
  for (auto p : r.pivots)
    if (p == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    x[r.pivots[i]] = r.mat.at(i, m.cols());
  return x;
}

std::vector<Rational> operator+(const std::vector<Rational>& a,
                                const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector + mismatch");
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::vector<Rational> operator-(const std::vector<Rational>& a,
                                const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector - mismatch");
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::vector<Rational> operator*(const Rational& c,
                                const std::vector<Rational>& v) {
  std::vector<Rational> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

bool is_zero_vec(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RationalMatrix hcat(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat row mismatch");
  RationalMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c)
      out.at(r, a.cols() + c) = b.at(r, c);
  }
  return out;
}

RationalMatrix vcat(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vcat col mismatch");
  RationalMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      out.at(a.rows() + r, c) = b.at(r, c);
  return out;
}

RationalMatrix dsum(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      out.at(a.rows() + r, a.cols() + c) = b.at(r, c);
  return out;
}

RationalMatrix zeros(std::size_t rows, std::size_t cols) {
  return RationalMatrix(rows, cols);
}

std::vector<Rational> concat(const std::vector<Rational>& a,
                             const std::vector<Rational>& b) {
  std::vector<Rational> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace detline

#include "doctest.h"

#include "detline/generate.hpp"
#include "detline/spaces.hpp"

using namespace detline;

namespace {

RationalMatrix mk(std::vector<std::vector<long>> rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

std::vector<Rational> vec(std::vector<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("rref is canonical and drops zero rows") {
  RationalMatrix a = mk({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}, 3);
  RationalMatrix b = mk({{0, 1, 1}, {1, 3, 4}}, 3);  // same row space
  auto ra = rref(a), rb = rref(b);
  CHECK(ra.mat == rb.mat);
  CHECK(ra.pivots == rb.pivots);
  CHECK(ra.mat.rows() == 2);
}

TEST_CASE("kernel of the zero map is everything") {
  RationalMatrix z = zeros(3, 2);
  RationalMatrix k = kernel_basis(z);
  CHECK(k.rows() == 2);
  CHECK(Subspace::span(k) == Subspace::full(2));
}

TEST_CASE("image and quotient dimensions") {
  CHECK(image_basis(zeros(2, 2)).rows() == 0);
  RationalMatrix col = mk({{1}, {1}}, 1);
  Subspace im = Subspace::span(image_basis(col));
  CHECK(im.dim() == 1);
  CHECK(im.contains(vec({1, 1})));

  Subspace e12 = Subspace::span(mk({{1, 0, 0}, {0, 1, 0}}, 3));
  CHECK(quotient_of(3, e12).dim() == 1);
  CHECK(quotient_of(2, Subspace(2)).dim() == 2);
}

TEST_CASE("quotient representatives and coset equality") {
  QuotientSpace q = quotient_of(2, Subspace::span(mk({{1, 0}}, 2)));
  CHECK(q.project_to_complement(vec({3, 5})) == vec({0, 5}));
  CHECK(q.equal_mod(vec({3, 5}), vec({7, 5})));
  CHECK_FALSE(q.equal_mod(vec({3, 5}), vec({3, 6})));
  // Idempotent and lift-consistent.
  auto p = q.project_to_complement(vec({3, 5}));
  CHECK(q.project_to_complement(p) == p);
  CHECK(q.equal_mod(vec({3, 5}), p));
}

TEST_CASE("rank-nullity on random matrices") {
  for (std::size_t trial = 0; trial < 50; ++trial) {
    auto g = trial_rng(42, "rank-nullity", trial);
    std::size_t r = (std::size_t)rand_int(g, 0, 8);
    std::size_t c = (std::size_t)rand_int(g, 0, 8);
    RationalMatrix m = rand_matrix(g, r, c, 5);
    CHECK(kernel_basis(m).rows() + rank(m) == c);
  }
}

TEST_CASE("determinant, inverse, solve") {
  RationalMatrix m = mk({{2, 1}, {1, 1}}, 2);
  CHECK(determinant(m) == 1);
  CHECK(inverse(m) * m == RationalMatrix::identity(2));
  CHECK_THROWS_AS((void)inverse(zeros(2, 2)), std::domain_error);

  auto x = solve(m, vec({3, 2}));
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == vec({3, 2}));
  CHECK_FALSE(solve(zeros(2, 2), vec({1, 0})).has_value());
}

TEST_CASE("subspace coords, sum, intersection") {
  Subspace s = Subspace::span(mk({{1, 1, 0}, {0, 0, 1}}, 3));
  auto c = s.coords(vec({2, 2, 3}));
  CHECK(c == vec({2, 3}));
  CHECK_THROWS((void)s.coords(vec({1, 0, 0})));

  Subspace a = Subspace::span(mk({{1, 0}}, 2));
  Subspace b = Subspace::span(mk({{0, 1}}, 2));
  CHECK(a.sum(b) == Subspace::full(2));
  CHECK(a.intersect(b).dim() == 0);
  CHECK(a.intersect(Subspace::full(2)) == a);
}

TEST_CASE("extend_basis completes a basis deterministically") {
  Subspace small = Subspace::span(mk({{1, 1, 0}}, 3));
  auto ext = extend_basis(small, Subspace::full(3));
  CHECK(ext.size() == 2);
  RationalMatrix all = small.basis();
  for (const auto& v : ext) all = vcat(all, RationalMatrix::from_rows({v}));
  CHECK(rank(all) == 3);
  CHECK(ext == extend_basis(small, Subspace::full(3)));
}

TEST_CASE("rational string round trip") {
  CHECK(rat_str(rat(3, 6)) == "1/2");
  CHECK(rat_str(rat(-4, 2)) == "-2");
  CHECK(rat_parse("7/3") == rat(7, 3));
  CHECK_THROWS((void)rat_parse("x"));
}

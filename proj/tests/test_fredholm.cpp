#include "doctest.h"

#include "detline/generate.hpp"
#include "detline/operator.hpp"

using namespace detline;

namespace {

std::vector<Rational> vec(std::vector<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("determinant line of simple operators") {
  FinOperator inv(RationalMatrix::identity(2));
  DetLineElement e = det_line(inv);
  CHECK(e.ker_frame.empty());
  CHECK(e.coker_frame.empty());
  CHECK(det_value(e) == 1);

  FinOperator z(zeros(1, 1));
  DetLineElement ez = det_line(z);
  CHECK(ez.ker_frame.size() == 1);
  CHECK(ez.coker_frame.size() == 1);
  CHECK(det_value(ez) == 1);

  // Degenerate kernel frame gives the zero element.
  DetLineElement bad = det_elem(FinOperator(zeros(1, 2)),
                                {vec({1, 0}), vec({2, 0})}, {vec({1})}, 1);
  CHECK(det_value(bad) == 0);
}

TEST_CASE("index and degree bookkeeping") {
  FinOperator d(zeros(3, 2));
  CHECK(d.index() == -1);
  CHECK(d.ker_dim() == 2);
  CHECK(d.coker_dim() == 3);
  CHECK(dual_operator(d).index() == 1);
  CHECK((long)d.ker_dim() - (long)d.coker_dim() == d.index());
}

TEST_CASE("iso_induced is functorial") {
  auto g = trial_rng(17, "iso-functorial", 0);
  for (std::size_t trial = 0; trial < 40; ++trial) {
    std::size_t n = (std::size_t)rand_int(g, 0, 4);
    std::size_t m = (std::size_t)rand_int(g, 0, 4);
    FinOperator D(rand_matrix(g, m, n, 3));
    DetLineElement e = gen_element(g, D, 3);

    // Identity pair is the identity.
    CHECK(det_equal(iso_induced(RationalMatrix::identity(n),
                                RationalMatrix::identity(m), e),
                    e));

    // Composites.
    RationalMatrix p1 = rand_invertible(g, n, 3), p2 = rand_invertible(g, n, 3);
    RationalMatrix q1 = rand_invertible(g, m, 3), q2 = rand_invertible(g, m, 3);
    DetLineElement oneshot = iso_induced(p2 * p1, q2 * q1, e);
    DetLineElement stepped = iso_induced(p2, q2, iso_induced(p1, q1, e));
    CHECK(det_equal(oneshot, stepped));
  }
}

TEST_CASE("iso_induced scales by the kernel determinant") {
  FinOperator D(zeros(1, 1));
  DetLineElement e = det_line(D);
  RationalMatrix two(1, 1);
  two.at(0, 0) = 2;
  DetLineElement pushed = iso_induced(two, RationalMatrix::identity(1), e);
  CHECK(det_value(pushed) == 2);
}

TEST_CASE("duality maps are isomorphisms") {
  FinOperator inv(RationalMatrix::identity(3));
  DualityMaps dm = duality_maps(inv);
  CHECK(dm.ker_to_coker_dual.rows() == 0);
  CHECK(dm.coker_dual_to_ker.rows() == 0);

  FinOperator z(zeros(2, 3));
  DualityMaps dz = duality_maps(z);
  CHECK(rank(dz.ker_to_coker_dual) == 3);
  CHECK(rank(dz.coker_dual_to_ker) == 2);

  RationalMatrix r1(2, 2);
  r1.at(0, 0) = 1;
  r1.at(0, 1) = 2;
  r1.at(1, 0) = 2;
  r1.at(1, 1) = 4;
  FinOperator rank1(r1);
  DualityMaps dr = duality_maps(rank1);
  CHECK(rank(dr.ker_to_coker_dual) == 1);
  CHECK(rank(dr.coker_dual_to_ker) == 1);
}

TEST_CASE("dualize_det on an invertible operator is trivial") {
  auto g = trial_rng(23, "dual-invertible", 0);
  FinOperator D(rand_invertible(g, 3, 3));
  DetLineElement e = det_line(D);
  DetLineElement d = dualize_det(e);
  CHECK(d.op == dual_operator(D));
  CHECK(det_value(d) == 1);
}

TEST_CASE("dualize_det is an involution up to the index sign") {
  for (std::size_t trial = 0; trial < 60; ++trial) {
    auto g = trial_rng(29, "dual-involution", trial);
    std::size_t n = (std::size_t)rand_int(g, 0, 5);
    std::size_t m = (std::size_t)rand_int(g, 0, 5);
    FinOperator D(rand_matrix(g, m, n, 3));
    DetLineElement e = gen_element(g, D, 3);
    DetLineElement twice = dualize_det(dualize_det(e));
    CHECK(det_equal(twice, scale(e, parity_sign(D.index()))));
  }
}

TEST_CASE("det_ratio and det_equal agree") {
  auto g = trial_rng(31, "ratio", 0);
  FinOperator D(rand_matrix(g, 3, 4, 3));
  DetLineElement a = gen_element(g, D, 3);
  DetLineElement b = gen_element(g, D, 3);
  Rational r = det_ratio(a, b);
  CHECK(det_equal(a, scale(b, r)));
}

#include "doctest.h"

#include "detline/generate.hpp"
#include "detline/line.hpp"

using namespace detline;

namespace {

std::vector<Rational> vec(std::vector<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

LineElement plain(std::size_t n, std::vector<std::vector<Rational>> frame,
                  Rational s = 1) {
  LineElement e;
  e.space = LineSpace{Subspace::full(n), false};
  e.frame = std::move(frame);
  e.scalar = std::move(s);
  return e;
}

}  // namespace

TEST_CASE("line_compare on wedge frames") {
  LineElement a = plain(2, {vec({1, 0}), vec({0, 1})}, 2);
  LineElement b = plain(2, {vec({0, 1}), vec({1, 0})});
  CHECK(line_compare(a, b) == -2);

  LineElement sheared = plain(2, {vec({1, 1}), vec({0, 1})});
  LineElement std2 = plain(2, {vec({1, 0}), vec({0, 1})});
  CHECK(line_compare(sheared, std2) == 1);

  LineElement zero = plain(2, {vec({1, 0}), vec({0, 1})}, 0);
  CHECK(line_compare(zero, std2) == 0);
}

TEST_CASE("line_compare is multiplicative") {
  for (std::size_t trial = 0; trial < 30; ++trial) {
    auto g = trial_rng(5, "line-mult", trial);
    std::size_t n = (std::size_t)rand_int(g, 1, 5);
    RationalMatrix f1 = rand_invertible(g, n, 4);
    RationalMatrix f2 = rand_invertible(g, n, 4);
    RationalMatrix f3 = rand_invertible(g, n, 4);
    auto rows = [&](const RationalMatrix& m) {
      std::vector<std::vector<Rational>> out;
      for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
      return out;
    };
    LineElement a = plain(n, rows(f1), rand_nonzero_rational(g, 4));
    LineElement b = plain(n, rows(f2), rand_nonzero_rational(g, 4));
    LineElement c = plain(n, rows(f3), rand_nonzero_rational(g, 4));
    CHECK(line_compare(a, b) * line_compare(b, c) == line_compare(a, c));
  }
}

TEST_CASE("swap_R carries the Koszul sign") {
  LineElement odd = plain(1, {vec({1})});
  LineElement even = plain(2, {vec({1, 0}), vec({0, 1})});

  TensorElement t;
  t.factors = {odd, odd};
  t.scalar = 1;
  TensorElement s = swap_R(t, 0);
  CHECK(s.scalar == -1);
  TensorElement ss = swap_R(s, 0);
  CHECK(ss.scalar == 1);

  t.factors = {odd, even};
  CHECK(swap_R(t, 0).scalar == 1);
}

TEST_CASE("pairing P and its inverse") {
  // n = 1: P(e1*) = (e1)*.
  LineElement a1 = plain(1, {vec({1})});
  LineElement p1 = pairing_P(a1);
  CHECK(p1.space.dual);
  CHECK(line_value(p1) == 1);

  // n = 2: P(e1* ^ e2*) = -(e1 ^ e2)*.
  LineElement a2 = plain(2, {vec({1, 0}), vec({0, 1})});
  LineElement p2 = pairing_P(a2);
  CHECK(line_value(p2) == -1);

  // n = 0: P(1) = 1*.
  LineElement a0 = plain(0, {});
  CHECK(line_value(pairing_P(a0)) == 1);

  // Round trip.
  LineElement back = pairing_P_inv(p2);
  CHECK(line_compare(back, a2) == 1);
}

TEST_CASE("standard pairings differ by the binomial sign") {
  RationalMatrix id2 = RationalMatrix::identity(2);
  auto [q, h] = standard_pairings(id2, id2);
  CHECK(q == 1);
  CHECK(h == -1);

  RationalMatrix id1 = RationalMatrix::identity(1);
  auto p1 = standard_pairings(id1, id1);
  CHECK(p1.first == p1.second);

  for (std::size_t trial = 0; trial < 20; ++trial) {
    auto g = trial_rng(9, "pairings-3", trial);
    RationalMatrix f = rand_matrix(g, 3, 3, 4);
    RationalMatrix v = rand_matrix(g, 3, 3, 4);
    auto [qq, hh] = standard_pairings(f, v);
    CHECK(hh == -qq);  // C(3,2) = 3 is odd
  }
}

TEST_CASE("volume tensor") {
  CHECK(volume_tensor(0).frame.empty());
  CHECK(volume_tensor(0).scalar == 1);
  LineElement w2 = volume_tensor(2);
  CHECK(line_value(w2) == 1);
  LineElement rev = plain(2, {vec({0, 1}), vec({1, 0})});
  CHECK(line_compare(w2, rev) == -1);
}

TEST_CASE("quotient-carrier frames are lift independent") {
  // Q^3 / span(e1): frames may differ by anything in the denominator.
  QuotientSpace q = quotient_of(3, Subspace::span(RationalMatrix::from_rows(
                                       {vec({1, 0, 0})})));
  LineElement a, b;
  a.space = b.space = LineSpace{q, false};
  a.frame = {vec({0, 1, 0}), vec({0, 0, 1})};
  b.frame = {vec({5, 1, 0}), vec({-2, 0, 1})};
  CHECK(line_compare(a, b) == 1);
}

TEST_CASE("degenerate dual frame is rejected unless the element is zero") {
  LineElement d;
  d.space = LineSpace{Subspace::full(2), true};
  d.frame = {vec({1, 0}), vec({2, 0})};
  d.scalar = 1;
  CHECK_THROWS((void)line_value(d));
  d.scalar = 0;
  CHECK(line_value(d) == 0);
}

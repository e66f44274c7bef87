#include "detline/generate.hpp"

#include <functional>

namespace detline {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, const std::string& label,
                          std::size_t trial) {
  std::uint64_t h = splitmix(seed);
  for (char c : label) h = splitmix(h ^ static_cast<std::uint64_t>(c));
  h = splitmix(h ^ static_cast<std::uint64_t>(trial));
  return std::mt19937_64(h);
}

long rand_int(std::mt19937_64& g, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(g);
}

Rational rand_rational(std::mt19937_64& g, long bound) {
  long num = rand_int(g, -bound, bound);
  long den = rand_int(g, 1, bound);
  return rat(num, den);
}

Rational rand_nonzero_rational(std::mt19937_64& g, long bound) {
  Rational r;
  do {
    r = rand_rational(g, bound);
  } while (r == 0);
  return r;
}

RationalMatrix rand_matrix(std::mt19937_64& g, std::size_t rows,
                           std::size_t cols, long bound) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rand_rational(g, bound);
  return m;
}

RationalMatrix rand_invertible(std::mt19937_64& g, std::size_t n, long bound) {
  for (;;) {
    RationalMatrix m = rand_matrix(g, n, n, bound);
    if (determinant(m) != 0) return m;
  }
}

RationalMatrix rand_onto(std::mt19937_64& g, std::size_t rows,
                         std::size_t cols, long bound) {
  if (rows > cols) throw std::invalid_argument("rand_onto: rows > cols");
  for (;;) {
    RationalMatrix m = rand_matrix(g, rows, cols, bound);
    if (rank(m) == rows) return m;
  }
}

FinOperator gen_operator(std::mt19937_64& g, const GenConfig& cfg) {
  std::size_t n = static_cast<std::size_t>(
      rand_int(g, 0, static_cast<long>(cfg.max_dim)));
  std::size_t m = static_cast<std::size_t>(
      rand_int(g, 0, static_cast<long>(cfg.max_dim)));
  return FinOperator(rand_matrix(g, m, n, cfg.entry_bound));
}

DetLineElement gen_element(std::mt19937_64& g, const FinOperator& op,
                           long bound) {
  std::size_t k = op.ker_dim(), c = op.coker_dim();
  RationalMatrix mk = rand_invertible(g, k, bound);
  std::vector<std::vector<Rational>> kf;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> v(op.domain_dim(), Rational(0));
    for (std::size_t j = 0; j < k; ++j)
      v = v + mk.at(i, j) * op.kernel().basis().row(j);
    kf.push_back(std::move(v));
  }
  RationalMatrix mc = rand_invertible(g, c, bound);
  std::vector<std::vector<Rational>> cf;
  for (std::size_t i = 0; i < c; ++i) {
    std::vector<Rational> v(op.codomain_dim(), Rational(0));
    for (std::size_t j = 0; j < c; ++j)
      v = v + mc.at(i, j) * op.cokernel().basis_rep(j);
    // Arbitrary lift shift inside im(op).
    for (std::size_t j = 0; j < op.image().dim(); ++j)
      v = v + rand_rational(g, bound) * op.image().basis().row(j);
    cf.push_back(std::move(v));
  }
  return det_elem(op, std::move(kf), std::move(cf),
                  rand_nonzero_rational(g, bound));
}

ExactTriple gen_triple(std::mt19937_64& g, const GenConfig& cfg,
                       TripleShape shape) {
  long b = cfg.entry_bound;
  std::size_t cap = std::max<std::size_t>(cfg.max_dim / 2, 1);
  std::size_t np = static_cast<std::size_t>(rand_int(g, 0, (long)cap));
  std::size_t npp = static_cast<std::size_t>(rand_int(g, 0, (long)cap));
  std::size_t mp, mpp;
  if (shape.prime_invertible) {
    mp = np;
  } else if (shape.surjective) {
    mp = np == 0 ? 0 : static_cast<std::size_t>(rand_int(g, 0, (long)np));
  } else {
    mp = static_cast<std::size_t>(rand_int(g, 0, (long)cap));
  }
  if (shape.dprime_invertible) {
    mpp = npp;
  } else if (shape.surjective) {
    mpp = npp == 0 ? 0 : static_cast<std::size_t>(rand_int(g, 0, (long)npp));
  } else {
    mpp = static_cast<std::size_t>(rand_int(g, 0, (long)cap));
  }
  RationalMatrix Dp = shape.prime_invertible ? rand_invertible(g, np, b)
                      : shape.surjective     ? rand_onto(g, mp, np, b)
                                             : rand_matrix(g, mp, np, b);
  RationalMatrix Dpp = shape.dprime_invertible ? rand_invertible(g, npp, b)
                       : shape.surjective      ? rand_onto(g, mpp, npp, b)
                                               : rand_matrix(g, mpp, npp, b);
  RationalMatrix B = rand_matrix(g, mp, npp, b);
  // Split middle operator  [Dp B; 0 Dpp], then conjugate everything.
  RationalMatrix Dm = vcat(hcat(Dp, B), hcat(zeros(mpp, np), Dpp));
  RationalMatrix PXp = rand_invertible(g, np, b);
  RationalMatrix PX = rand_invertible(g, np + npp, b);
  RationalMatrix PXpp = rand_invertible(g, npp, b);
  RationalMatrix QYp = rand_invertible(g, mp, b);
  RationalMatrix QY = rand_invertible(g, mp + mpp, b);
  RationalMatrix QYpp = rand_invertible(g, mpp, b);
  RationalMatrix inclX = vcat(RationalMatrix::identity(np), zeros(npp, np));
  RationalMatrix projX = hcat(zeros(npp, np), RationalMatrix::identity(npp));
  RationalMatrix inclY = vcat(RationalMatrix::identity(mp), zeros(mpp, mp));
  RationalMatrix projY = hcat(zeros(mpp, mp), RationalMatrix::identity(mpp));
  ExactTriple t;
  t.Dp = FinOperator(QYp * Dp * inverse(PXp));
  t.D = FinOperator(QY * Dm * inverse(PX));
  t.Dpp = FinOperator(QYpp * Dpp * inverse(PXpp));
  t.iX = PX * inclX * inverse(PXp);
  t.jX = PXpp * projX * inverse(PX);
  t.iY = QY * inclY * inverse(QYp);
  t.jY = QYpp * projY * inverse(QY);
  return t;
}

std::pair<ExactTriple, ExactTriple> gen_composable_triples(
    std::mt19937_64& g, const GenConfig& cfg) {
  long b = cfg.entry_bound;
  std::size_t cap = std::max<std::size_t>(cfg.max_dim / 2, 1);
  auto d = [&] { return static_cast<std::size_t>(rand_int(g, 0, (long)cap)); };
  std::size_t np = d(), npp = d(), mp = d(), mpp = d(), pp = d(), ppp = d();
  RationalMatrix D1p = rand_matrix(g, mp, np, b);
  RationalMatrix D1pp = rand_matrix(g, mpp, npp, b);
  RationalMatrix B1 = rand_matrix(g, mp, npp, b);
  RationalMatrix D1m = vcat(hcat(D1p, B1), hcat(zeros(mpp, np), D1pp));
  RationalMatrix D2p = rand_matrix(g, pp, mp, b);
  RationalMatrix D2pp = rand_matrix(g, ppp, mpp, b);
  RationalMatrix B2 = rand_matrix(g, pp, mpp, b);
  RationalMatrix D2m = vcat(hcat(D2p, B2), hcat(zeros(ppp, mp), D2pp));
  RationalMatrix PXp = rand_invertible(g, np, b);
  RationalMatrix PX = rand_invertible(g, np + npp, b);
  RationalMatrix PXpp = rand_invertible(g, npp, b);
  RationalMatrix PMp = rand_invertible(g, mp, b);
  RationalMatrix PM = rand_invertible(g, mp + mpp, b);
  RationalMatrix PMpp = rand_invertible(g, mpp, b);
  RationalMatrix PYp = rand_invertible(g, pp, b);
  RationalMatrix PY = rand_invertible(g, pp + ppp, b);
  RationalMatrix PYpp = rand_invertible(g, ppp, b);
  auto incl = [](std::size_t a, std::size_t bdim) {
    return vcat(RationalMatrix::identity(a), zeros(bdim, a));
  };
  auto proj = [](std::size_t a, std::size_t bdim) {
    return hcat(zeros(bdim, a), RationalMatrix::identity(bdim));
  };
  ExactTriple t1, t2;
  t1.Dp = FinOperator(PMp * D1p * inverse(PXp));
  t1.D = FinOperator(PM * D1m * inverse(PX));
  t1.Dpp = FinOperator(PMpp * D1pp * inverse(PXpp));
  t1.iX = PX * incl(np, npp) * inverse(PXp);
  t1.jX = PXpp * proj(np, npp) * inverse(PX);
  t1.iY = PM * incl(mp, mpp) * inverse(PMp);
  t1.jY = PMpp * proj(mp, mpp) * inverse(PM);
  t2.Dp = FinOperator(PYp * D2p * inverse(PMp));
  t2.D = FinOperator(PY * D2m * inverse(PM));
  t2.Dpp = FinOperator(PYpp * D2pp * inverse(PMpp));
  t2.iX = t1.iY;
  t2.jX = t1.jY;
  t2.iY = PY * incl(pp, ppp) * inverse(PYp);
  t2.jY = PYpp * proj(pp, ppp) * inverse(PY);
  return {t1, t2};
}

ExactSquare gen_square(std::mt19937_64& g, const GenConfig& cfg) {
  long b = cfg.entry_bound;
  std::size_t cap = std::max<std::size_t>(cfg.max_dim / 2, 1);
  cap = std::min<std::size_t>(cap, 2);
  auto d = [&] { return static_cast<std::size_t>(rand_int(g, 0, (long)cap)); };
  // Corner dimensions: domain xa, codomain ya, indexed [T/B][L/R].
  std::size_t xa[2][2], ya[2][2];
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      xa[r][c] = d();
      ya[r][c] = d();
    }
  RationalMatrix A[2][2];
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) A[r][c] = rand_matrix(g, ya[r][c], xa[r][c], b);
  // Couplings into earlier blocks of the order (TL, TR, BL, BR); the
  // (TR <- BL) block must vanish for the edge maps to commute.
  RationalMatrix Bttr = rand_matrix(g, ya[0][0], xa[0][1], b);  // TL <- TR
  RationalMatrix Btbl = rand_matrix(g, ya[0][0], xa[1][0], b);  // TL <- BL
  RationalMatrix Btbr = rand_matrix(g, ya[0][0], xa[1][1], b);  // TL <- BR
  RationalMatrix Btrbr = rand_matrix(g, ya[0][1], xa[1][1], b); // TR <- BR
  RationalMatrix Bblbr = rand_matrix(g, ya[1][0], xa[1][1], b); // BL <- BR
  auto block2 = [&](const RationalMatrix& a, const RationalMatrix& up,
                    std::size_t zr, std::size_t zc, const RationalMatrix& dn) {
    return vcat(hcat(a, up), hcat(zeros(zr, zc), dn));
  };
  // Split operators.
  RationalMatrix opTM = block2(A[0][0], Bttr, ya[0][1], xa[0][0], A[0][1]);
  RationalMatrix opBM = block2(A[1][0], Bblbr, ya[1][1], xa[1][0], A[1][1]);
  RationalMatrix opCL = block2(A[0][0], Btbl, ya[1][0], xa[0][0], A[1][0]);
  RationalMatrix opCR = block2(A[0][1], Btrbr, ya[1][1], xa[0][1], A[1][1]);
  std::size_t xm = xa[0][0] + xa[0][1] + xa[1][0] + xa[1][1];
  std::size_t ym = ya[0][0] + ya[0][1] + ya[1][0] + ya[1][1];
  RationalMatrix opCM(ym, xm);
  // Row/column offsets in the (TL, TR, BL, BR) ordering.
  std::size_t xo[4] = {0, xa[0][0], xa[0][0] + xa[0][1],
                       xa[0][0] + xa[0][1] + xa[1][0]};
  std::size_t yo[4] = {0, ya[0][0], ya[0][0] + ya[0][1],
                       ya[0][0] + ya[0][1] + ya[1][0]};
  std::size_t xd[4] = {xa[0][0], xa[0][1], xa[1][0], xa[1][1]};
  std::size_t yd[4] = {ya[0][0], ya[0][1], ya[1][0], ya[1][1]};
  auto put = [&](int br, int bc, const RationalMatrix& m) {
    for (std::size_t r = 0; r < yd[br]; ++r)
      for (std::size_t c = 0; c < xd[bc]; ++c)
        opCM.at(yo[br] + r, xo[bc] + c) = m.at(r, c);
  };
  put(0, 0, A[0][0]);
  put(0, 1, Bttr);
  put(0, 2, Btbl);
  put(0, 3, Btbr);
  put(1, 1, A[0][1]);
  put(1, 3, Btrbr);
  put(2, 2, A[1][0]);
  put(2, 3, Bblbr);
  put(3, 3, A[1][1]);
  // Selection maps in split coordinates.
  auto sel = [](const std::vector<std::size_t>& offs,
                const std::vector<std::size_t>& dims, std::size_t total,
                const std::vector<int>& picks) {
    std::size_t rows = 0;
    for (int p : picks) rows += dims[p];
    RationalMatrix m(rows, total);
    std::size_t at = 0;
    for (int p : picks) {
      for (std::size_t r = 0; r < dims[p]; ++r) m.at(at + r, offs[p] + r) = 1;
      at += dims[p];
    }
    return m;
  };
  std::vector<std::size_t> xov(xo, xo + 4), xdv(xd, xd + 4), yov(yo, yo + 4),
      ydv(yd, yd + 4);
  auto embed = [](const RationalMatrix& selm) { return selm.transpose(); };
  ExactSquare s;
  // Operators (split form first).
  RationalMatrix ops[3][3] = {{A[0][0], opTM, A[0][1]},
                              {opCL, opCM, opCR},
                              {A[1][0], opBM, A[1][1]}};
  // Split edge maps.  Rows: L -> M -> R.  Columns: T -> C -> B.
  auto incl2 = [](std::size_t a, std::size_t bdim) {
    return vcat(RationalMatrix::identity(a), zeros(bdim, a));
  };
  auto proj2 = [](std::size_t a, std::size_t bdim) {
    return hcat(zeros(bdim, a), RationalMatrix::identity(bdim));
  };
  RationalMatrix riX[3], rjX[3], riY[3], rjY[3], ciX[3], cjX[3], ciY[3],
      cjY[3];
  riX[0] = incl2(xa[0][0], xa[0][1]);
  rjX[0] = proj2(xa[0][0], xa[0][1]);
  riY[0] = incl2(ya[0][0], ya[0][1]);
  rjY[0] = proj2(ya[0][0], ya[0][1]);
  riX[2] = incl2(xa[1][0], xa[1][1]);
  rjX[2] = proj2(xa[1][0], xa[1][1]);
  riY[2] = incl2(ya[1][0], ya[1][1]);
  rjY[2] = proj2(ya[1][0], ya[1][1]);
  riX[1] = embed(sel(xov, xdv, xm, {0, 2}));
  rjX[1] = sel(xov, xdv, xm, {1, 3});
  riY[1] = embed(sel(yov, ydv, ym, {0, 2}));
  rjY[1] = sel(yov, ydv, ym, {1, 3});
  ciX[0] = incl2(xa[0][0], xa[1][0]);
  cjX[0] = proj2(xa[0][0], xa[1][0]);
  ciY[0] = incl2(ya[0][0], ya[1][0]);
  cjY[0] = proj2(ya[0][0], ya[1][0]);
  ciX[2] = incl2(xa[0][1], xa[1][1]);
  cjX[2] = proj2(xa[0][1], xa[1][1]);
  ciY[2] = incl2(ya[0][1], ya[1][1]);
  cjY[2] = proj2(ya[0][1], ya[1][1]);
  ciX[1] = embed(sel(xov, xdv, xm, {0, 1}));
  cjX[1] = sel(xov, xdv, xm, {2, 3});
  ciY[1] = embed(sel(yov, ydv, ym, {0, 1}));
  cjY[1] = sel(yov, ydv, ym, {2, 3});
  // Conjugate everything by random automorphisms of the 9 + 9 spaces.
  RationalMatrix PX[3][3], PY[3][3];
  std::size_t xdim[3][3] = {{xa[0][0], xa[0][0] + xa[0][1], xa[0][1]},
                            {xa[0][0] + xa[1][0], xm, xa[0][1] + xa[1][1]},
                            {xa[1][0], xa[1][0] + xa[1][1], xa[1][1]}};
  std::size_t ydim[3][3] = {{ya[0][0], ya[0][0] + ya[0][1], ya[0][1]},
                            {ya[0][0] + ya[1][0], ym, ya[0][1] + ya[1][1]},
                            {ya[1][0], ya[1][0] + ya[1][1], ya[1][1]}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      PX[r][c] = rand_invertible(g, xdim[r][c], b);
      PY[r][c] = rand_invertible(g, ydim[r][c], b);
      s.op[r][c] = FinOperator(PY[r][c] * ops[r][c] * inverse(PX[r][c]));
    }
  for (int r = 0; r < 3; ++r) {
    s.row_iX[r] = PX[r][1] * riX[r] * inverse(PX[r][0]);
    s.row_jX[r] = PX[r][2] * rjX[r] * inverse(PX[r][1]);
    s.row_iY[r] = PY[r][1] * riY[r] * inverse(PY[r][0]);
    s.row_jY[r] = PY[r][2] * rjY[r] * inverse(PY[r][1]);
  }
  for (int c = 0; c < 3; ++c) {
    s.col_iX[c] = PX[1][c] * ciX[c] * inverse(PX[0][c]);
    s.col_jX[c] = PX[2][c] * cjX[c] * inverse(PX[1][c]);
    s.col_iY[c] = PY[1][c] * ciY[c] * inverse(PY[0][c]);
    s.col_jY[c] = PY[2][c] * cjY[c] * inverse(PY[1][c]);
  }
  return s;
}

StabRow gen_stab_row(std::mt19937_64& g, const ExactTriple& t,
                     const GenConfig& cfg) {
  long b = cfg.entry_bound;
  std::size_t Np = static_cast<std::size_t>(rand_int(g, 0, 2));
  std::size_t Npp = static_cast<std::size_t>(rand_int(g, 0, 2));
  std::size_t N = Np + Npp;
  RationalMatrix P = rand_invertible(g, N, b);
  RationalMatrix Pp = rand_invertible(g, Np, b);
  RationalMatrix Ppp = rand_invertible(g, Npp, b);
  RationalMatrix incl = vcat(RationalMatrix::identity(Np), zeros(Npp, Np));
  RationalMatrix proj = hcat(zeros(Npp, Np), RationalMatrix::identity(Npp));
  RationalMatrix sec = vcat(zeros(Np, Npp), RationalMatrix::identity(Npp));
  RationalMatrix pinv = hcat(RationalMatrix::identity(Np), zeros(Np, Npp));
  StabRow s;
  s.i = P * incl * inverse(Pp);
  s.j = Ppp * proj * inverse(P);
  RationalMatrix sj = P * sec * inverse(Ppp);   // section of j
  RationalMatrix iinv = Pp * pinv * inverse(P); // left inverse of i
  s.Thetap = rand_matrix(g, t.Dp.codomain_dim(), Np, b);
  RationalMatrix T = rand_matrix(g, t.D.codomain_dim(), Npp, b);
  RationalMatrix idN = RationalMatrix::identity(N);
  s.Theta = t.iY * s.Thetap * iinv * (idN - sj * s.j) + T * s.j;
  s.Thetapp = t.jY * T;
  return s;
}

StabData gen_stab(std::mt19937_64& g, const GenConfig& cfg) {
  FinOperator D = gen_operator(g, cfg);
  std::size_t N = static_cast<std::size_t>(
      rand_int(g, 0, static_cast<long>(cfg.max_dim)));
  RationalMatrix Theta =
      rand_matrix(g, D.codomain_dim(), N, cfg.entry_bound);
  return stabilize(D, Theta);
}

AuxFrames random_aux(std::mt19937_64& g, const ExactTriple& t, long bound) {
  AuxFrames a = default_aux(t);
  auto mix = [&](std::vector<std::vector<Rational>>& fr,
                 const std::vector<std::vector<Rational>>& slack) {
    std::size_t k = fr.size();
    if (k == 0) return;
    RationalMatrix m = rand_invertible(g, k, bound);
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Rational> v(fr[0].size(), Rational(0));
      for (std::size_t j = 0; j < k; ++j) v = v + m.at(i, j) * fr[j];
      for (const auto& sv : slack) v = v + rand_rational(g, bound) * sv;
      out.push_back(std::move(v));
    }
    fr = std::move(out);
  };
  // Slack directions: the subspaces the aux frames are complements of.
  std::vector<std::vector<Rational>> s_u, s_v, s_w, s_y;
  for (std::size_t i = 0; i < t.Dp.ker_dim(); ++i)
    s_u.push_back(t.iX.apply(t.Dp.kernel().basis().row(i)));
  for (std::size_t i = 0; i < t.D.ker_dim(); ++i)
    s_v.push_back(t.jX.apply(t.D.kernel().basis().row(i)));
  for (std::size_t i = 0; i < t.Dp.image().dim(); ++i)
    s_w.push_back(t.Dp.image().basis().row(i));
  {
    // Lifted images of delta also shift w harmlessly.
    SnakeData sd = snake(t);
    for (std::size_t jc = 0; jc < sd.delta.cols(); ++jc) {
      std::vector<Rational> col(t.Dp.coker_dim());
      for (std::size_t r = 0; r < sd.delta.rows(); ++r) col[r] = sd.delta.at(r, jc);
      s_w.push_back(t.Dp.cokernel().lift(col));
    }
  }
  for (std::size_t i = 0; i < t.D.image().dim(); ++i)
    s_y.push_back(t.D.image().basis().row(i));
  for (std::size_t c = 0; c < t.iY.cols(); ++c) {
    std::vector<Rational> col(t.iY.rows());
    for (std::size_t r = 0; r < t.iY.rows(); ++r) col[r] = t.iY.at(r, c);
    s_y.push_back(std::move(col));
  }
  mix(a.u, s_u);
  mix(a.v, s_v);
  mix(a.w, s_w);
  mix(a.y, s_y);
  return a;
}

ConventionSystem gen_convention(std::mt19937_64& g, long i_max, long c_max,
                                long bound, bool multiplicative) {
  ConventionSystem conv;
  auto pos = [&]() -> Rational {
    return Rational(rand_int(g, 1, bound)) / Rational(rand_int(g, 1, bound));
  };
  for (long i = -i_max; i <= i_max; ++i)
    for (long c = 1; c <= c_max; ++c) {
      if (c < -i) continue;
      conv.set(i, c, pos());
    }
  if (multiplicative) {
    Rational base = pos();
    for (long k = 1; k <= std::max(i_max, c_max); ++k)
      if (k <= c_max && -k >= -i_max) conv.set(-k, k, rat_pow(base, k));
  }
  return conv;
}

}  // namespace detline

#include "detline/suites.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>

namespace detline {

namespace {

// Baseline maps, rescaled when a convention system is in play.

DetLineElement psi_c(const ConventionSystem* conv, const ExactTriple& t,
                     const DetLineElement& sp, const DetLineElement& spp) {
  return conv ? psi_system(*conv, t, sp, spp) : psi(t, sp, spp);
}

DetLineElement dual_c(const ConventionSystem* conv, const DetLineElement& e) {
  return conv ? dual_system(*conv, e) : dualize_det(e);
}

DetLineElement compose_c(const ConventionSystem* conv, const FinOperator& D1,
                         const FinOperator& D2, const DetLineElement& s1,
                         const DetLineElement& s2) {
  DetLineElement out = compose_elem(D1, D2, s1, s2);
  if (conv) {
    Rational f = conv->a(D1.index(), static_cast<long>(D1.coker_dim())) *
                 conv->a(D2.index(), static_cast<long>(D2.coker_dim())) /
                 conv->a(out.op.index(), static_cast<long>(out.op.coker_dim()));
    out = scale(out, f);
  }
  return out;
}

DetLineElement sum_c(const ConventionSystem* conv, const DetLineElement& sp,
                     const DetLineElement& spp) {
  DetLineElement out = direct_sum_elem(sp, spp);
  if (conv) {
    Rational f =
        conv->a(sp.op.index(), static_cast<long>(sp.op.coker_dim())) *
        conv->a(spp.op.index(), static_cast<long>(spp.op.coker_dim())) /
        conv->a(out.op.index(), static_cast<long>(out.op.coker_dim()));
    out = scale(out, f);
  }
  return out;
}

json cex(std::size_t trial, const std::string& check) {
  return json{{"trial", trial}, {"check", check}};
}

using TrialFn = std::function<std::optional<json>(
    std::mt19937_64&, std::size_t, const GenConfig&, const ConventionSystem*)>;

// --- individual suites -----------------------------------------------------

std::optional<json> trial_well_definedness(std::mt19937_64& g, std::size_t n,
                                           const GenConfig& cfg,
                                           const ConventionSystem* conv) {
  ExactTriple t = gen_triple(g, cfg);
  if (auto bad = validate_triple(t)) {
    json j = cex(n, "generated-triple-valid");
    j["detail"] = *bad;
    j["triple"] = to_json(t);
    return j;
  }
  if (auto bad = snake_exact(t, snake(t))) {
    json j = cex(n, "snake-sequence-exact");
    j["detail"] = *bad;
    j["triple"] = to_json(t);
    return j;
  }
  DetLineElement sp = gen_element(g, t.Dp, cfg.entry_bound);
  DetLineElement spp = gen_element(g, t.Dpp, cfg.entry_bound);
  DetLineElement a = psi_c(conv, t, sp, spp);
  AuxFrames aux = random_aux(g, t, cfg.entry_bound);
  DetLineElement b = psi(t, sp, spp, aux);
  if (conv) {
    Rational f = conv->a(t.Dp.index(), static_cast<long>(t.Dp.coker_dim())) *
                 conv->a(t.Dpp.index(), static_cast<long>(t.Dpp.coker_dim())) /
                 conv->a(t.D.index(), static_cast<long>(t.D.coker_dim()));
    b = scale(b, f);
  }
  if (!det_equal(a, b)) {
    json j = cex(n, "aux-frame-independence");
    j["triple"] = to_json(t);
    j["prime"] = to_json(sp);
    j["dprime"] = to_json(spp);
    j["default_aux"] = to_json(a);
    j["random_aux"] = to_json(b);
    return j;
  }
  return std::nullopt;
}

std::optional<json> trial_normalization_ii(std::mt19937_64& g, std::size_t n,
                                           const GenConfig& cfg,
                                           const ConventionSystem* conv) {
  TripleShape shape;
  shape.surjective = true;
  ExactTriple t = gen_triple(g, cfg, shape);
  DetLineElement sp = gen_element(g, t.Dp, cfg.entry_bound);
  DetLineElement spp = gen_element(g, t.Dpp, cfg.entry_bound);
  // Oracle: with all cokernels zero the triple isomorphism is the wedge
  //   x_1 ^ ... ^ x_a ^ u~_1 ^ ... ^ u~_b
  // with u~_i the kernel lift of the i-th frame vector of spp through jX.
  std::vector<std::vector<Rational>> frame;
  for (const auto& x : sp.ker_frame) frame.push_back(t.iX.apply(x));
  RationalMatrix lift_sys = vcat(t.jX, t.D.matrix());
  for (const auto& u : spp.ker_frame) {
    std::vector<Rational> rhs(u.begin(), u.end());
    rhs.resize(lift_sys.rows(), Rational(0));
    auto z = solve(lift_sys, rhs);
    if (!z) {
      json j = cex(n, "kernel-lift-exists");
      j["triple"] = to_json(t);
      return j;
    }
    frame.push_back(*z);
  }
  DetLineElement oracle =
      det_elem(t.D, frame, {}, sp.scalar * spp.scalar);
  DetLineElement out = psi_c(conv, t, sp, spp);
  if (!det_equal(out, oracle)) {
    json j = cex(n, "surjective-wedge-oracle");
    j["triple"] = to_json(t);
    j["prime"] = to_json(sp);
    j["dprime"] = to_json(spp);
    j["psi"] = to_json(out);
    j["oracle"] = to_json(oracle);
    return j;
  }
  return std::nullopt;
}

std::optional<json> trial_naturality_ii(std::mt19937_64& g, std::size_t n,
                                        const GenConfig& cfg,
                                        const ConventionSystem* conv) {
  ExactTriple t = gen_triple(g, cfg);
  long b = cfg.entry_bound;
  RationalMatrix pXp = rand_invertible(g, t.Dp.domain_dim(), b);
  RationalMatrix pX = rand_invertible(g, t.D.domain_dim(), b);
  RationalMatrix pXpp = rand_invertible(g, t.Dpp.domain_dim(), b);
  RationalMatrix qYp = rand_invertible(g, t.Dp.codomain_dim(), b);
  RationalMatrix qY = rand_invertible(g, t.D.codomain_dim(), b);
  RationalMatrix qYpp = rand_invertible(g, t.Dpp.codomain_dim(), b);
  ExactTriple t2;
  t2.Dp = FinOperator(qYp * t.Dp.matrix() * inverse(pXp));
  t2.D = FinOperator(qY * t.D.matrix() * inverse(pX));
  t2.Dpp = FinOperator(qYpp * t.Dpp.matrix() * inverse(pXpp));
  t2.iX = pX * t.iX * inverse(pXp);
  t2.jX = pXpp * t.jX * inverse(pX);
  t2.iY = qY * t.iY * inverse(qYp);
  t2.jY = qYpp * t.jY * inverse(qY);
  if (auto bad = validate_triple(t2)) {
    json j = cex(n, "conjugated-triple-valid");
    j["detail"] = *bad;
    return j;
  }
  DetLineElement sp = gen_element(g, t.Dp, b);
  DetLineElement spp = gen_element(g, t.Dpp, b);
  DetLineElement lhs = iso_induced(pX, qY, psi_c(conv, t, sp, spp));
  DetLineElement rhs = psi_c(conv, t2, iso_induced(pXp, qYp, sp),
                             iso_induced(pXpp, qYpp, spp));
  if (!det_equal(lhs, rhs)) {
    json j = cex(n, "psi-commutes-with-isomorphisms");
    j["triple"] = to_json(t);
    j["lhs"] = to_json(lhs);
    j["rhs"] = to_json(rhs);
    return j;
  }
  return std::nullopt;
}

std::optional<json> trial_naturality_iii(std::mt19937_64& g, std::size_t n,
                                         const GenConfig& cfg,
                                         const ConventionSystem*) {
  {
    TripleShape shape;
    shape.prime_invertible = true;
    ExactTriple t = gen_triple(g, cfg, shape);
    DetLineElement sp = gen_element(g, t.Dp, cfg.entry_bound);
    DetLineElement spp = gen_element(g, t.Dpp, cfg.entry_bound);
    DetLineElement a = psi(t, sp, spp);
    DetLineElement b = iso_T_prime(t, sp, spp);
    if (!det_equal(a, b)) {
      json j = cex(n, "prime-invertible-shortcut");
      j["triple"] = to_json(t);
      j["psi"] = to_json(a);
      j["shortcut"] = to_json(b);
      return j;
    }
  }
  {
    TripleShape shape;
    shape.dprime_invertible = true;
    ExactTriple t = gen_triple(g, cfg, shape);
    DetLineElement sp = gen_element(g, t.Dp, cfg.entry_bound);
    DetLineElement spp = gen_element(g, t.Dpp, cfg.entry_bound);
    DetLineElement a = psi(t, sp, spp);
    DetLineElement b = iso_T_dprime(t, sp, spp);
    if (!det_equal(a, b)) {
      json j = cex(n, "dprime-invertible-shortcut");
      j["triple"] = to_json(t);
      j["psi"] = to_json(a);
      j["shortcut"] = to_json(b);
      return j;
    }
  }
  return std::nullopt;
}

std::optional<json> trial_compositions_1(std::mt19937_64& g, std::size_t n,
                                         const GenConfig& cfg,
                                         const ConventionSystem* conv) {
  std::size_t cap = cfg.max_dim;
  std::size_t d0 = static_cast<std::size_t>(rand_int(g, 0, (long)cap));
  std::size_t d1 = static_cast<std::size_t>(rand_int(g, 0, (long)cap));
  std::size_t d2 = static_cast<std::size_t>(rand_int(g, 0, (long)cap));
  std::size_t d3 = static_cast<std::size_t>(rand_int(g, 0, (long)cap));
  long b = cfg.entry_bound;
  FinOperator D1(rand_matrix(g, d1, d0, b));
  FinOperator D2(rand_matrix(g, d2, d1, b));
  FinOperator D3(rand_matrix(g, d3, d2, b));
  DetLineElement s1 = gen_element(g, D1, b);
  DetLineElement s2 = gen_element(g, D2, b);
  DetLineElement s3 = gen_element(g, D3, b);
  // Closed form against the triple isomorphism of the composition triple.
  {
    ExactTriple ct = composition_triple(D1, D2);
    if (auto bad = validate_triple(ct)) {
      json j = cex(n, "composition-triple-valid");
      j["detail"] = *bad;
      return j;
    }
    DetLineElement via_psi =
        drop_id_summand(psi_c(conv, ct, s1, s2), d1);
    DetLineElement direct = compose_c(conv, D1, D2, s1, s2);
    if (!det_equal(direct, via_psi)) {
      json j = cex(n, "closed-form-matches-triple-iso");
      j["D1"] = to_json(D1);
      j["D2"] = to_json(D2);
      j["direct"] = to_json(direct);
      j["via_psi"] = to_json(via_psi);
      return j;
    }
  }
  // Associativity of the composition map.
  FinOperator D21(D2.matrix() * D1.matrix());
  FinOperator D32(D3.matrix() * D2.matrix());
  DetLineElement lhs =
      compose_c(conv, D21, D3, compose_c(conv, D1, D2, s1, s2), s3);
  DetLineElement rhs =
      compose_c(conv, D1, D32, s1, compose_c(conv, D2, D3, s2, s3));
  if (!det_equal(lhs, rhs)) {
    json j = cex(n, "composition-associative");
    j["D1"] = to_json(D1);
    j["D2"] = to_json(D2);
    j["D3"] = to_json(D3);
    j["lhs"] = to_json(lhs);
    j["rhs"] = to_json(rhs);
    return j;
  }
  return std::nullopt;
}

std::optional<json> trial_compositions_2(std::mt19937_64& g, std::size_t n,
                                         const GenConfig& cfg,
                                         const ConventionSystem* conv) {
  auto [t1, t2] = gen_composable_triples(g, cfg);
  if (auto bad = validate_triple(t1)) {
    json j = cex(n, "first-triple-valid");
    j["detail"] = *bad;
    return j;
  }
  if (auto bad = validate_triple(t2)) {
    json j = cex(n, "second-triple-valid");
    j["detail"] = *bad;
    return j;
  }
  long b = cfg.entry_bound;
  DetLineElement s1p = gen_element(g, t1.Dp, b);
  DetLineElement s1pp = gen_element(g, t1.Dpp, b);
  DetLineElement s2p = gen_element(g, t2.Dp, b);
  DetLineElement s2pp = gen_element(g, t2.Dpp, b);
  ExactTriple tc = compose_triples(t1, t2);
  DetLineElement lhs = psi_c(conv, tc, compose_c(conv, t1.Dp, t2.Dp, s1p, s2p),
                             compose_c(conv, t1.Dpp, t2.Dpp, s1pp, s2pp));
  lhs = scale(lhs, parity_sign(t1.Dpp.index() * t2.Dp.index()));
  DetLineElement rhs = compose_c(conv, t1.D, t2.D, psi_c(conv, t1, s1p, s1pp),
                                 psi_c(conv, t2, s2p, s2pp));
  if (!det_equal(lhs, rhs)) {
    json j = cex(n, "psi-compatible-with-composition");
    j["t1"] = to_json(t1);
    j["t2"] = to_json(t2);
    j["lhs"] = to_json(lhs);
    j["rhs"] = to_json(rhs);
    return j;
  }
  return std::nullopt;
}

std::optional<json> trial_direct_sum_comm(std::mt19937_64& g, std::size_t n,
                                          const GenConfig& cfg,
                                          const ConventionSystem* conv) {
  FinOperator Dp = gen_operator(g, cfg);
  FinOperator Dpp = gen_operator(g, cfg);
  long b = cfg.entry_bound;
  DetLineElement sp = gen_element(g, Dp, b);
  DetLineElement spp = gen_element(g, Dpp, b);
  // Closed form against the triple isomorphism of the split triple.
  DetLineElement direct = sum_c(conv, sp, spp);
  DetLineElement via_psi = psi_c(conv, direct_sum_triple(Dp, Dpp), sp, spp);
  if (!det_equal(direct, via_psi)) {
    json j = cex(n, "closed-form-matches-triple-iso");
    j["Dp"] = to_json(Dp);
    j["Dpp"] = to_json(Dpp);
    j["direct"] = to_json(direct);
    j["via_psi"] = to_json(via_psi);
    return j;
  }
  // Commutativity up to the block swap and the Koszul sign.
  std::size_t a1 = Dp.domain_dim(), a2 = Dpp.domain_dim();
  std::size_t c1 = Dp.codomain_dim(), c2 = Dpp.codomain_dim();
  RationalMatrix swapX = vcat(hcat(zeros(a2, a1), RationalMatrix::identity(a2)),
                              hcat(RationalMatrix::identity(a1), zeros(a1, a2)));
  RationalMatrix swapY = vcat(hcat(zeros(c2, c1), RationalMatrix::identity(c2)),
                              hcat(RationalMatrix::identity(c1), zeros(c1, c2)));
  DetLineElement lhs = iso_induced(swapX, swapY, direct);
  DetLineElement rhs =
      scale(sum_c(conv, spp, sp), parity_sign(Dp.index() * Dpp.index()));
  if (!det_equal(lhs, rhs)) {
    json j = cex(n, "sum-commutes-up-to-index-sign");
    j["Dp"] = to_json(Dp);
    j["Dpp"] = to_json(Dpp);
    j["lhs"] = to_json(lhs);
    j["rhs"] = to_json(rhs);
    return j;
  }
  return std::nullopt;
}

std::optional<json> trial_direct_sum_assoc(std::mt19937_64& g, std::size_t n,
                                           const GenConfig& cfg,
                                           const ConventionSystem* conv) {
  FinOperator D1 = gen_operator(g, cfg);
  FinOperator D2 = gen_operator(g, cfg);
  FinOperator D3 = gen_operator(g, cfg);
  long b = cfg.entry_bound;
  DetLineElement s1 = gen_element(g, D1, b);
  DetLineElement s2 = gen_element(g, D2, b);
  DetLineElement s3 = gen_element(g, D3, b);
  DetLineElement lhs = sum_c(conv, sum_c(conv, s1, s2), s3);
  DetLineElement rhs = sum_c(conv, s1, sum_c(conv, s2, s3));
  if (!det_equal(lhs, rhs)) {
    json j = cex(n, "sum-associative");
    j["D1"] = to_json(D1);
    j["D2"] = to_json(D2);
    j["D3"] = to_json(D3);
    j["lhs"] = to_json(lhs);
    j["rhs"] = to_json(rhs);
    return j;
  }
  return std::nullopt;
}

std::optional<json> trial_exact_squares(std::mt19937_64& g, std::size_t n,
                                        const GenConfig& cfg,
                                        const ConventionSystem* conv) {
  ExactSquare s = gen_square(g, cfg);
  if (auto bad = validate_square(s)) {
    json j = cex(n, "generated-square-valid");
    j["detail"] = *bad;
    j["square"] = to_json(s);
    return j;
  }
  long b = cfg.entry_bound;
  DetLineElement tl = gen_element(g, s.op[0][0], b);
  DetLineElement tr = gen_element(g, s.op[0][2], b);
  DetLineElement bl = gen_element(g, s.op[2][0], b);
  DetLineElement br = gen_element(g, s.op[2][2], b);
  DetLineElement lhs =
      psi_c(conv, row_triple(s, 1), psi_c(conv, col_triple(s, 0), tl, bl),
            psi_c(conv, col_triple(s, 2), tr, br));
  DetLineElement rhs =
      psi_c(conv, col_triple(s, 1), psi_c(conv, row_triple(s, 0), tl, tr),
            psi_c(conv, row_triple(s, 2), bl, br));
  rhs = scale(rhs, parity_sign(s.op[2][0].index() * s.op[0][2].index()));
  if (!det_equal(lhs, rhs)) {
    json j = cex(n, "rows-then-columns-vs-columns-then-rows");
    j["square"] = to_json(s);
    j["lhs"] = to_json(lhs);
    j["rhs"] = to_json(rhs);
    return j;
  }
  return std::nullopt;
}

std::optional<json> trial_dual_triples(std::mt19937_64& g, std::size_t n,
                                       const GenConfig& cfg,
                                       const ConventionSystem* conv) {
  ExactTriple t = gen_triple(g, cfg);
  long b = cfg.entry_bound;
  DetLineElement sp = gen_element(g, t.Dp, b);
  DetLineElement spp = gen_element(g, t.Dpp, b);
  ExactTriple dt = dual_triple(t);
  if (auto bad = validate_triple(dt)) {
    json j = cex(n, "dual-triple-valid");
    j["detail"] = *bad;
    j["triple"] = to_json(t);
    return j;
  }
  DetLineElement lhs =
      psi_c(conv, dt, dual_c(conv, spp), dual_c(conv, sp));
  lhs = scale(lhs, parity_sign(t.Dp.index() * t.Dpp.index()));
  DetLineElement rhs = dual_c(conv, psi_c(conv, t, sp, spp));
  if (!det_equal(lhs, rhs)) {
    json j = cex(n, "dualize-commutes-with-psi");
    j["triple"] = to_json(t);
    j["lhs"] = to_json(lhs);
    j["rhs"] = to_json(rhs);
    return j;
  }
  // Dualizing twice is (-1)^{ind} on each factor.
  DetLineElement twice = dual_c(conv, dual_c(conv, sp));
  if (!det_equal(twice, scale(sp, parity_sign(t.Dp.index())))) {
    json j = cex(n, "dualize-involutive-up-to-index-sign");
    j["element"] = to_json(sp);
    j["twice"] = to_json(twice);
    return j;
  }
  return std::nullopt;
}

std::optional<json> trial_stab_lemma(std::mt19937_64& g, std::size_t n,
                                     const GenConfig& cfg,
                                     const ConventionSystem*) {
  ExactTriple t = gen_triple(g, cfg);
  StabRow s = gen_stab_row(g, t, cfg);
  ExactTriple ts = stab_triple(t, s.i, s.j, s.Thetap, s.Theta, s.Thetapp);
  if (auto bad = validate_triple(ts)) {
    json j = cex(n, "stabilized-triple-valid");
    j["detail"] = *bad;
    j["triple"] = to_json(t);
    return j;
  }
  long b = cfg.entry_bound;
  DetLineElement shp = gen_element(g, ts.Dp, b);
  DetLineElement shpp = gen_element(g, ts.Dpp, b);
  long Npp = static_cast<long>(s.Thetapp.cols());
  DetLineElement lhs = inv_iso(t.D, s.Theta, psi(ts, shp, shpp));
  DetLineElement rhs = psi(t, inv_iso(t.Dp, s.Thetap, shp),
                           inv_iso(t.Dpp, s.Thetapp, shpp));
  rhs = scale(rhs, a_factor(s.i, s.j) *
                       Rational(parity_sign(t.Dp.index() * Npp)));
  if (!det_equal(lhs, rhs)) {
    json j = cex(n, "stabilization-compatible-with-psi");
    j["triple"] = to_json(t);
    j["lhs"] = to_json(lhs);
    j["rhs"] = to_json(rhs);
    return j;
  }
  return std::nullopt;
}

std::optional<json> trial_transition_maps(std::mt19937_64& g, std::size_t n,
                                          const GenConfig& cfg,
                                          const ConventionSystem*) {
  FinOperator D = gen_operator(g, cfg);
  long b = cfg.entry_bound;
  std::size_t N1 = static_cast<std::size_t>(rand_int(g, 0, 2));
  std::size_t N2 = static_cast<std::size_t>(rand_int(g, 0, 2));
  RationalMatrix Th1 = rand_matrix(g, D.codomain_dim(), N1, b);
  RationalMatrix Th2 = rand_matrix(g, D.codomain_dim(), N2, b);
  FinOperator DTh1 = stabilized(D, Th1);
  FinOperator DTh2 = stabilized(D, Th2);
  DetLineElement sigma = gen_element(g, DTh1, b);
  // Cross-stabilization consistency: stabilize D_Th1 by Th2, swap the two
  // auxiliary blocks, then peel in the other order.
  std::size_t dX = D.domain_dim();
  RationalMatrix R = RationalMatrix::identity(dX + N1 + N2);
  {
    RationalMatrix top = hcat(RationalMatrix::identity(dX), zeros(dX, N1 + N2));
    RationalMatrix mid = hcat(zeros(N2, dX + N1), RationalMatrix::identity(N2));
    RationalMatrix bot =
        hcat(hcat(zeros(N1, dX), RationalMatrix::identity(N1)), zeros(N1, N2));
    R = vcat(vcat(top, mid), bot);
  }
  DetLineElement tmp =
      scale(hat_iso(DTh1, Th2, sigma),
            parity_sign(DTh1.index() * static_cast<long>(N2)));
  tmp = iso_induced(R, RationalMatrix::identity(D.codomain_dim()), tmp);
  tmp = inv_iso(DTh2, Th1, tmp);
  tmp = inv_iso(D, Th2, tmp);
  DetLineElement lhs = inv_iso(D, Th1, sigma);
  DetLineElement rhs =
      scale(tmp, parity_sign(static_cast<long>(N1) * static_cast<long>(N2)));
  if (!det_equal(lhs, rhs)) {
    json j = cex(n, "transition-maps-consistent");
    j["D"] = to_json(D);
    j["Theta1"] = to_json(Th1);
    j["Theta2"] = to_json(Th2);
    j["lhs"] = to_json(lhs);
    j["rhs"] = to_json(rhs);
    return j;
  }
  // Round trip sign.
  {
    DetLineElement e = gen_element(g, D, b);
    DetLineElement back = inv_iso(D, Th1, hat_iso(D, Th1, e));
    DetLineElement want =
        scale(e, parity_sign(D.index() * static_cast<long>(N1)));
    if (!det_equal(back, want)) {
      json j = cex(n, "round-trip-sign");
      j["D"] = to_json(D);
      j["Theta"] = to_json(Th1);
      j["back"] = to_json(back);
      j["want"] = to_json(want);
      return j;
    }
  }
  return std::nullopt;
}

std::optional<json> trial_classification_roundtrip(
    std::mt19937_64& g, std::size_t n, const GenConfig& cfg,
    const ConventionSystem* conv) {
  ConventionSystem local;
  if (!conv) {
    bool mult = rand_int(g, 0, 1) == 1;
    local = gen_convention(g, 2, 3, cfg.entry_bound, mult);
  }
  const ConventionSystem& c = conv ? *conv : local;
  for (long i = -2; i <= 2; ++i) {
    for (long cc = 0; cc <= 3; ++cc) {
      if (cc < -i) continue;
      Rational got = classification_value(c, i, cc);
      Rational want = c.a(i, cc);
      if (got != want) {
        json j = cex(n, "recover-convention-entry");
        j["i"] = i;
        j["c"] = cc;
        j["got"] = rat_str(got);
        j["want"] = rat_str(want);
        j["system"] = to_json(c);
        return j;
      }
    }
  }
  return std::nullopt;
}

// Reference form of the dual map on a surjective operator: pair the kernel
// through the canonical map onto the dual of coker(D^t).
DetLineElement dual_surjective_ref(const DetLineElement& e) {
  const FinOperator& D = e.op;
  std::size_t k = D.ker_dim();
  RationalMatrix M = duality_maps(D).ker_to_coker_dual;
  RationalMatrix X(k, k);
  for (std::size_t c = 0; c < k; ++c) {
    auto coords = D.kernel().coords(e.ker_frame[c]);
    for (std::size_t r = 0; r < k; ++r) X.at(r, c) = coords[r];
  }
  Rational val = e.scalar * determinant(M) * determinant(X) *
                 Rational(parity_sign(static_cast<long>(k * (k - 1) / 2)));
  FinOperator Dt = dual_operator(D);
  DetLineElement out = det_line(Dt);
  out.scalar = val;
  return out;
}

std::optional<json> trial_norm_iii_star(std::mt19937_64& g, std::size_t n,
                                        const GenConfig& cfg,
                                        const ConventionSystem* conv) {
  long b = cfg.entry_bound;
  long K = 3;
  std::vector<std::pair<ConventionSystem, bool>> fixtures;
  if (conv) {
    bool expect = true;
    for (long k = 1; k <= K; ++k)
      if (conv->a(-k, k) != rat_pow(conv->a(-1, 1), k)) expect = false;
    fixtures.emplace_back(*conv, expect);
  } else {
    ConventionSystem mult = gen_convention(g, K, K, b, true);
    ConventionSystem free = gen_convention(g, K, K, b, false);
    bool free_mult = true;
    for (long k = 1; k <= K; ++k)
      if (free.a(-k, k) != rat_pow(free.a(-1, 1), k)) free_mult = false;
    fixtures.emplace_back(mult, true);
    fixtures.emplace_back(free, free_mult);
  }
  for (const auto& [c, expect] : fixtures) {
    if (is_norm_iii_star(c, K) != expect) {
      json j = cex(n, "norm-iii-star-predicate");
      j["system"] = to_json(c);
      j["expect"] = expect;
      return j;
    }
  }
  // On a surjective operator of index k the rescaled dual map agrees with
  // the reference pairing form exactly when A_{-k,k} = A_{-1,1}^k.
  std::size_t k = static_cast<std::size_t>(rand_int(g, 1, K));
  std::size_t m = static_cast<std::size_t>(rand_int(g, 0, 2));
  FinOperator D(rand_onto(g, m, m + k, b));
  if (D.coker_dim() != 0) {
    json j = cex(n, "surjective-generator");
    j["D"] = to_json(D);
    return j;
  }
  DetLineElement e = gen_element(g, D, b);
  DetLineElement ref = dual_surjective_ref(e);
  if (!det_equal(dualize_det(e), ref)) {
    json j = cex(n, "baseline-dual-matches-pairing-form");
    j["D"] = to_json(D);
    j["element"] = to_json(e);
    return j;
  }
  for (const auto& [c, expect] : fixtures) {
    bool star_here =
        c.a(-(long)k, (long)k) == rat_pow(c.a(-1, 1), (long)k);
    bool agrees = det_equal(dual_system(c, e), ref);
    if (agrees != star_here) {
      json j = cex(n, "rescaled-dual-vs-pairing-form");
      j["system"] = to_json(c);
      j["D"] = to_json(D);
      j["agrees"] = agrees;
      j["star_at_k"] = star_here;
      return j;
    }
    (void)expect;
  }
  return std::nullopt;
}

std::optional<json> trial_convention_signs(std::mt19937_64& g, std::size_t n,
                                           const GenConfig& cfg,
                                           const ConventionSystem*) {
  long b = cfg.entry_bound;
  // Reversed-factor variant of the det(delta) -> det(0) map differs from the
  // baseline by the parity of rank(delta).
  {
    std::size_t rows = static_cast<std::size_t>(rand_int(g, 0, 3));
    std::size_t cols = static_cast<std::size_t>(rand_int(g, 0, 3));
    FinOperator delta(rand_matrix(g, rows, cols, b));
    DetLineElement e = gen_element(g, delta, b);
    DetLineElement a = km_iso_delta(e);
    DetLineElement want =
        scale(iso_delta(e), parity_sign(km_reversal_exponent(delta)));
    if (km_reversal_exponent(delta) !=
        static_cast<int>(rank(delta.matrix()) % 2)) {
      json j = cex(n, "reversal-exponent-is-rank-parity");
      j["delta"] = to_json(delta);
      return j;
    }
    if (!det_equal(a, want)) {
      json j = cex(n, "reversed-factor-ratio");
      j["delta"] = to_json(delta);
      j["variant"] = to_json(a);
      j["want"] = to_json(want);
      return j;
    }
  }
  // Overlap exponent: cocycle in the stabilization size and the stated parity.
  {
    long N = rand_int(g, 0, 4), Np = rand_int(g, 0, 4), Npp = rand_int(g, 0, 4);
    long c = rand_int(g, 0, 4);
    int ab = ms_overlap_exponent(N, Np, c);
    int bc = ms_overlap_exponent(Np, Npp, c);
    int ac = ms_overlap_exponent(N, Npp, c);
    if ((ab + bc) % 2 != ac % 2) {
      json j = cex(n, "overlap-exponent-cocycle");
      return j;
    }
    if (ab != (((Np - N) * c) % 2 + 2) % 2) {
      json j = cex(n, "overlap-exponent-parity");
      return j;
    }
    long ind = rand_int(g, -3, 3);
    int sa = salamon_exponent(N, ind, c);
    if (sa != ((N * ind + c) % 2 + 2) % 2) {
      json j = cex(n, "stabilization-exponent-parity");
      return j;
    }
  }
  // Cosection is multiplicative under composition and vanishes off the
  // invertible locus.
  {
    std::size_t d = static_cast<std::size_t>(rand_int(g, 0, 3));
    FinOperator D1(rand_invertible(g, d, b));
    FinOperator D2(rand_invertible(g, d, b));
    DetLineElement s1 = gen_element(g, D1, b);
    DetLineElement s2 = gen_element(g, D2, b);
    FinOperator D21(D2.matrix() * D1.matrix());
    Rational lhs = quillen_cosection(D21, compose_elem(D1, D2, s1, s2));
    Rational rhs = quillen_cosection(D1, s1) * quillen_cosection(D2, s2);
    if (lhs != rhs) {
      json j = cex(n, "cosection-multiplicative");
      j["D1"] = to_json(D1);
      j["D2"] = to_json(D2);
      return j;
    }
    FinOperator sing(zeros(d + 1, d + 1));
    if (quillen_cosection(sing, det_line(sing)) != 0) {
      json j = cex(n, "cosection-vanishes-when-singular");
      return j;
    }
  }
  // For invertible delta the map det(delta) -> det(0) sends the canonical
  // generator to (standard basis) (x) (delta columns)^*.
  {
    std::size_t d = static_cast<std::size_t>(rand_int(g, 1, 3));
    FinOperator delta(rand_invertible(g, d, b));
    DetLineElement e = det_line(delta);
    std::vector<std::vector<Rational>> kf, cf;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Rational> ei(d, Rational(0));
      ei[i] = 1;
      kf.push_back(ei);
      cf.push_back(delta.matrix().apply(ei));
    }
    FinOperator zero(zeros(d, d));
    DetLineElement want = det_elem(zero, kf, cf, Rational(1));
    if (!det_equal(iso_delta(e), want)) {
      json j = cex(n, "invertible-delta-normal-form");
      j["delta"] = to_json(delta);
      return j;
    }
  }
  return std::nullopt;
}

const std::vector<std::pair<std::string, TrialFn>>& suite_table() {
  static const std::vector<std::pair<std::string, TrialFn>> table = {
      {"well-definedness", trial_well_definedness},
      {"normalization-ii", trial_normalization_ii},
      {"naturality-ii", trial_naturality_ii},
      {"naturality-iii", trial_naturality_iii},
      {"compositions-1", trial_compositions_1},
      {"compositions-2", trial_compositions_2},
      {"direct-sum-comm", trial_direct_sum_comm},
      {"direct-sum-assoc", trial_direct_sum_assoc},
      {"exact-squares", trial_exact_squares},
      {"dual-triples", trial_dual_triples},
      {"stab-lemma", trial_stab_lemma},
      {"transition-maps", trial_transition_maps},
      {"classification-roundtrip", trial_classification_roundtrip},
      {"norm-iii-star", trial_norm_iii_star},
      {"convention-signs", trial_convention_signs},
  };
  return table;
}

}  // namespace

json to_json(const SuiteReport& r) {
  return json{{"name", r.name},
              {"trials", r.trials},
              {"failures", r.failures},
              {"first_counterexample", r.first_counterexample},
              {"wall_ms", r.wall_ms}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const GenConfig& cfg,
                      const ConventionSystem* conv) {
  const TrialFn* fn = nullptr;
  for (const auto& [n, f] : suite_table())
    if (n == name) fn = &f;
  if (!fn) throw std::invalid_argument("unknown suite: " + name);
  SuiteReport rep;
  rep.name = name;
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t k = 0; k < cfg.trials; ++k) {
    std::mt19937_64 g = trial_rng(cfg.seed, name, k);
    std::optional<json> bad = (*fn)(g, k, cfg, conv);
    ++rep.trials;
    if (bad) {
      ++rep.failures;
      if (rep.first_counterexample.is_null()) rep.first_counterexample = *bad;
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  rep.wall_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

std::vector<SuiteReport> run_all_suites(const GenConfig& cfg,
                                        const ConventionSystem* conv) {
  std::vector<SuiteReport> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, cfg, conv));
  return out;
}

}  // namespace detline

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "detline/conventions.hpp"
#include "detline/square.hpp"
#include "detline/stab.hpp"

namespace detline {

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t max_dim = 5;
  long entry_bound = 3;
  std::size_t trials = 100;
};

// Splittable per-trial stream: one independent engine per (seed, label,
// trial), so trials are reproducible in any order.
std::mt19937_64 trial_rng(std::uint64_t seed, const std::string& label,
                          std::size_t trial);

long rand_int(std::mt19937_64& g, long lo, long hi);
Rational rand_rational(std::mt19937_64& g, long bound);
Rational rand_nonzero_rational(std::mt19937_64& g, long bound);
RationalMatrix rand_matrix(std::mt19937_64& g, std::size_t rows,
                           std::size_t cols, long bound);
RationalMatrix rand_invertible(std::mt19937_64& g, std::size_t n, long bound);
// Full-rank matrix of the given shape.
RationalMatrix rand_onto(std::mt19937_64& g, std::size_t rows,
                         std::size_t cols, long bound);

FinOperator gen_operator(std::mt19937_64& g, const GenConfig& cfg);

// Random nonzero element of the determinant line of op.
DetLineElement gen_element(std::mt19937_64& g, const FinOperator& op,
                           long bound);

// Split construction conjugated by random automorphisms; always valid.
// Flags force the left/right verticals invertible or all three surjective.
struct TripleShape {
  bool prime_invertible = false;
  bool dprime_invertible = false;
  bool surjective = false;
};

ExactTriple gen_triple(std::mt19937_64& g, const GenConfig& cfg,
                       TripleShape shape = {});

// Pair of triples with t1's codomain row equal to t2's domain row.
std::pair<ExactTriple, ExactTriple> gen_composable_triples(
    std::mt19937_64& g, const GenConfig& cfg);

ExactSquare gen_square(std::mt19937_64& g, const GenConfig& cfg);

// Compatible stabilization data over a triple: exact row (i, j) and maps
// Theta', Theta, Theta'' commuting with iY, jY.
struct StabRow {
  RationalMatrix i, j, Thetap, Theta, Thetapp;
};

StabRow gen_stab_row(std::mt19937_64& g, const ExactTriple& t,
                     const GenConfig& cfg);

// Random stabilization of a random operator.
StabData gen_stab(std::mt19937_64& g, const GenConfig& cfg);

// Randomized (but still valid) auxiliary frames for the triple isomorphism.
AuxFrames random_aux(std::mt19937_64& g, const ExactTriple& t, long bound);

// Random convention table over the window i in [-i_max, i_max],
// c in [1, c_max] (with c >= -i).  When multiplicative is set, the entries
// A_{-k,k} are forced to A_{-1,1}^k.
ConventionSystem gen_convention(std::mt19937_64& g, long i_max, long c_max,
                                long bound, bool multiplicative);

}  // namespace detline

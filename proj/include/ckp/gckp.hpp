#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ckp/core.hpp"

namespace ckp {

/// An item of the 3-dimensional knapsack relaxation: weights are the scaled
/// projection dR+dI, dR and dI, so weight[0] == weight[1] + weight[2] is an
/// invariant asserted at construction.
struct ThreeDItem {
  ThreeDItem(int id, std::array<Rational, 3> weight, Rational value);

  int id;
  std::array<Rational, 3> weight;
  Rational value;
};

struct FractionalSolution {
  std::vector<Rational> level;  // aligned with the item list, each in [0,1]
  Rational objective;
};

/// Exact LP relaxation: max sum v_k x_k subject to the three weight rows and
/// 0 <= x <= 1, solved by a dense rational simplex with Bland's rule (lowest
/// index enters; ties in the ratio test leave by lowest basis index). The
/// returned basic optimum has at most 3 strictly fractional coordinates.
FractionalSolution lp_relax_solve(const std::vector<ThreeDItem>& items,
                                  const std::array<Rational, 3>& residual_caps);

struct ThreeDSolution {
  std::vector<int> selected;  // sorted ids
  Rational total_value;
  std::array<Rational, 3> total_weight;
};

struct PtasConfig {
  /// Budget on the number of seed sets enumerated, roughly n^ceil(3/eps).
  std::int64_t max_seed_sets = 2'000'000;
};

/// Guess-and-round PTAS for 3-KP: enumerates every feasible seed set of size
/// at most h = min(n, ceil(3/epsilon)), restricts the remaining items to
/// value <= min value in the seed, solves the LP relaxation on the residual
/// capacities, drops fractional coordinates, and keeps the best candidate.
/// Value >= (1-epsilon)*OPT.
ThreeDSolution ptas_3kp(const std::vector<ThreeDItem>& items, const std::array<Rational, 3>& caps,
                        const Rational& epsilon, const PtasConfig& config = {});

/// Alg^c for GC-KP: S1 = ptas_3kp over (dR+dI, dR, dI) with caps
/// (C, C^R, C^I) (sqrt(2) cancelled throughout), S2 = the max-value
/// singleton in the four-inequality D2 region; returns the better one.
/// Requires a preprocessed gckp instance with a rational magnitude capacity.
Solution alg_c(const Instance& inst, const Rational& epsilon, const PtasConfig& config = {});

}  // namespace ckp

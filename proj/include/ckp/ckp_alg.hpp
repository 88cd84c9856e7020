#pragma once

#include <utility>
#include <vector>

#include "ckp/core.hpp"
#include "ckp/knapsack1d.hpp"

namespace ckp {

/// Two-candidate projection algorithm for C-KP: S1 = fptas over scaled
/// projections with capacity C (sqrt(2) cancelled on both sides), S2 = the
/// max-value singleton among D2 demands; returns the better of the two.
/// Output is feasible with value >= ((1-epsilon)/2)*OPT. Requires a
/// preprocessed, non-symbolic instance of kind CKP.
Solution alg_a(const Instance& inst, const Rational& epsilon, const DpConfig& config = {});

/// Monotone single-call variant: D2 demands get the symbolic full-capacity
/// weight (so they combine with nothing), and one run of monotone_fptas
/// decides everything. Same ratio as alg_a, plus selection monotonicity.
/// Additionally requires positive integer values.
Solution alg_b(const Instance& inst, const Rational& epsilon, const DpConfig& config = {});

/// Constructive subset split: given positive reals with sum <= sqrt(c_sq),
/// each entry <= c_prime, and c_prime >= sqrt(c_sq/2), produces two
/// complementary index sets whose sums are each <= c_prime, by the prefix
/// argument (split at the first index whose prefix exceeds c_prime).
std::pair<std::vector<int>, std::vector<int>> split_subset(const std::vector<Rational>& a,
                                                           const Rational& c_sq,
                                                           const Rational& c_prime);

}  // namespace ckp

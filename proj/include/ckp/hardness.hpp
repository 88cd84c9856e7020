#pragma once

#include <vector>

#include "ckp/core.hpp"

namespace ckp {

struct EquipartitionInput {
  std::vector<Integer> weights;  // positive integers, even count
};

/// The equipartition -> C-KP decision instance: unit values, dR_k = w_k and
/// dI_k = beta*(w_max - w_k) with beta^2 = W/(n*w_max - W). beta is usually
/// irrational, so items store the integer multiplier w_max - w_k and the
/// instance carries im_scale_sq = beta^2; feasibility only ever needs the
/// squared aggregate (sum dR)^2 + beta^2*(sum mult)^2, which is rational.
struct ReducedInstance {
  Instance instance;      // kind CKP, unit values
  int cardinality_bound;  // M = n/2
  Rational beta_sq;
  Rational c_sq;
};

/// Builds the reduction. All-equal weights set beta = 0 (trivially "yes").
/// Odd count or nonpositive weight -> ContractError.
ReducedInstance reduce_equipartition(const EquipartitionInput& input);

/// Decision version with the cardinality objective: is there a subset S with
/// |S| >= M whose aggregate demand magnitude stays within C?
bool decide_ckp_cardinality(const ReducedInstance& reduced, int limit = kDefaultOracleLimit);

/// Exhaustive check of the equipartition definition itself.
bool equipartition_brute(const EquipartitionInput& input, int limit = kDefaultOracleLimit);

/// The geometric pinch at the tangent point P: a feasible subset of size
/// >= M must have exactly |S| = M and sum of real parts W/2. Vacuously true
/// for infeasible or small subsets.
bool verify_tangency(const ReducedInstance& reduced, const std::vector<int>& subset);

}  // namespace ckp

#pragma once

#include <cstdint>
#include <vector>

#include "ckp/rational.hpp"

namespace ckp {

/// A one-dimensional weight: either an exact rational amount, or the
/// symbolic "exactly the knapsack capacity" used to cut off D2 demands.
/// A solution containing a full-capacity item contains nothing else.
struct OneDWeight {
  Rational amount;
  bool full_capacity = false;

  static OneDWeight of(Rational w) { return {std::move(w), false}; }
  static OneDWeight capacity() { return {Rational(0), true}; }
};

struct OneDItem {
  int id = 0;
  OneDWeight weight;
  Rational value;
};

struct OneDSolution {
  std::vector<int> selected;  // sorted item ids
  Rational total_value;
  OneDWeight total_weight;
};

struct DpConfig {
  /// Upper bound on the sum of (rounded) values, i.e. on the DP table size.
  std::int64_t max_value_sum = 8'000'000;
  /// Fixed deployment-wide bound: monotone_fptas accepts values up to 2^B.
  int value_bits = 62;
};

/// Exact 0/1 knapsack over integer values: maximizes total value subject to
/// (sum of weights)^2 <= capacity_sq, via a value-indexed min-weight table.
/// Ties resolve to the smaller total weight, then the lexicographically
/// smallest id set. Non-integer values -> ContractError; table bound
/// exceeded -> ResourceError.
OneDSolution dp_exact(const std::vector<OneDItem>& items, const Rational& capacity_sq,
                      const DpConfig& config = {});

/// Classical FPTAS: scales values by K = epsilon*v_max/n, rounds down, and
/// runs dp_exact. Output value (in true values) >= (1-epsilon)*OPT.
OneDSolution fptas(const std::vector<OneDItem>& items, const Rational& capacity_sq,
                   const Rational& epsilon, const DpConfig& config = {});

/// Monotone FPTAS: runs dp_exact once per scaling factor 2^j from a fixed,
/// input-independent ladder j = 0..B, with per-item rounded values capped at
/// U = ceil(2n^2/epsilon), and returns the best witness by true value (ties:
/// smaller j). Requires positive integer values bounded by 2^B. The induced
/// selection rule is monotone: a selected item stays selected under a higher
/// value or a smaller weight.
OneDSolution monotone_fptas(const std::vector<OneDItem>& items, const Rational& capacity_sq,
                            const Rational& epsilon, const DpConfig& config = {});

}  // namespace ckp

#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "ckp/core.hpp"
#include "ckp/knapsack1d.hpp"

namespace ckp::testing {

// Independent oracle #2 for C-KP: plain bitmask sweep, no pruning, sums
// recomputed from scratch per subset. Deliberately shares no code with
// brute_force_opt.
inline Solution bitmask_opt(const Instance& inst) {
  const int n = inst.size();
  Solution best;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<int> ids;
    for (int k = 0; k < n; ++k) {
      if (mask & (1ul << k)) ids.push_back(k);
    }
    if (!is_feasible(inst, ids)) continue;
    Solution cand = make_solution(inst, ids);
    if (solution_better(inst, cand, best)) best = std::move(cand);
  }
  return best;
}

// Exhaustive 1-KP oracle over (sum weight)^2 <= capacity_sq with the same
// value/weight/lex order the solvers use. Full-capacity items are singleton
// candidates only.
inline OneDSolution oned_brute(const std::vector<OneDItem>& items, const Rational& capacity_sq) {
  const int n = static_cast<int>(items.size());
  OneDSolution best;
  const auto better = [&](const OneDSolution& a, const OneDSolution& b) {
    const int by_value = cmp(a.total_value, b.total_value);
    if (by_value != 0) return by_value > 0;
    const Rational wa = a.total_weight.full_capacity ? Rational(0) : a.total_weight.amount;
    const Rational wb = b.total_weight.full_capacity ? Rational(0) : b.total_weight.amount;
    const Rational sa = a.total_weight.full_capacity ? Rational(1) : Rational(0);
    const Rational sb = b.total_weight.full_capacity ? Rational(1) : Rational(0);
    // weight as w + s*sqrt(capacity_sq)
    const int by_weight = cmp_affine_sqrt(wa, sa, wb, sb, capacity_sq);
    if (by_weight != 0) return by_weight < 0;
    return std::lexicographical_compare(a.selected.begin(), a.selected.end(),
                                        b.selected.begin(), b.selected.end());
  };
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    OneDSolution cand;
    int cut_count = 0;
    int picked = 0;
    for (int k = 0; k < n; ++k) {
      if (!(mask & (1ul << k))) continue;
      ++picked;
      cand.selected.push_back(items[k].id);
      cand.total_value += items[k].value;
      if (items[k].weight.full_capacity) {
        ++cut_count;
        cand.total_weight = OneDWeight::capacity();
      } else if (!cand.total_weight.full_capacity) {
        cand.total_weight.amount += items[k].weight.amount;
      }
    }
    if (cut_count > 0 && picked > 1) continue;  // cut items combine with nothing
    if (cut_count == 0 && cand.total_weight.amount.squared() > capacity_sq) continue;
    std::sort(cand.selected.begin(), cand.selected.end());
    if (better(cand, best)) best = std::move(cand);
  }
  return best;
}

// Deterministic small-rational generator for property tests.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : engine_(seed) {}

  long range(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = 0;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
  }

  Rational rational(long max_num, long max_den) {
    return Rational(Integer(range(0, max_num)), Integer(range(1, max_den)));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ckp::testing

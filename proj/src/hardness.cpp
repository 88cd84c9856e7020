#include "ckp/hardness.hpp"

#include <algorithm>

namespace ckp {

namespace {

void check_input(const EquipartitionInput& input) {
  if (input.weights.empty() || input.weights.size() % 2 != 0) {
    throw ContractError("equipartition needs an even, nonzero number of weights");
  }
  for (const Integer& w : input.weights) {
    if (sgn(w) <= 0) throw ContractError("equipartition weights must be positive integers");
  }
}

}  // namespace

ReducedInstance reduce_equipartition(const EquipartitionInput& input) {
  check_input(input);
  const std::size_t n = input.weights.size();
  Integer total = 0;
  Integer w_max = input.weights.front();
  for (const Integer& w : input.weights) {
    total += w;
    w_max = std::max(w_max, w);
  }
  const bool all_equal =
      std::all_of(input.weights.begin(), input.weights.end(),
                  [&](const Integer& w) { return w == input.weights.front(); });

  ReducedInstance reduced;
  reduced.cardinality_bound = static_cast<int>(n / 2);
  const Rational half_w = Rational(total) / Rational(2);
  reduced.beta_sq =
      all_equal ? Rational(0)
                : Rational(total) / Rational(Integer(static_cast<long>(n)) * w_max - total);
  const Rational lever = Rational(Integer(static_cast<long>(n)) * w_max) / Rational(2) - half_w;
  reduced.c_sq = half_w.squared() + reduced.beta_sq * lever.squared();

  Instance& inst = reduced.instance;
  inst.kind = InstanceKind::CKP;
  inst.capacity = CapacitySpec::from_magnitude_sq(reduced.c_sq);
  inst.im_scale_sq = reduced.beta_sq;
  for (std::size_t k = 0; k < n; ++k) {
    // With beta = 0 the imaginary parts vanish; store plain zeros then.
    const Integer mult = all_equal ? Integer(0) : w_max - input.weights[k];
    inst.items.push_back({static_cast<int>(k),
                          ComplexDemand{Rational(input.weights[k]), Rational(mult)},
                          Rational(1)});
  }
  if (all_equal) inst.im_scale_sq = Rational(1);  // literal instance, all im = 0
  validate_instance(inst);
  return reduced;
}

bool decide_ckp_cardinality(const ReducedInstance& reduced, int limit) {
  const Instance& inst = reduced.instance;
  const int n = inst.size();
  if (n > limit) {
    throw ResourceError("decide_ckp_cardinality refuses " + std::to_string(n) +
                        " items (limit " + std::to_string(limit) + ")");
  }
  const int need = reduced.cardinality_bound;

  // Depth-first over ids; infeasible partial sums cannot recover (components
  // are nonnegative), so their whole subtree is pruned.
  std::vector<int> stack;
  const auto walk = [&](auto&& self, int next, int count, const Rational& re_sum,
                        const Rational& im_sum) -> bool {
    if (count >= need) return true;
    if (count + (n - next) < need) return false;
    for (int id = next; id < n; ++id) {
      const Rational re = re_sum + inst.items[id].demand.re;
      const Rational im = im_sum + inst.items[id].demand.im;
      if (!sums_feasible(inst, re, im)) continue;
      if (self(self, id + 1, count + 1, re, im)) return true;
    }
    return false;
  };
  return walk(walk, 0, 0, Rational(0), Rational(0));
}

bool equipartition_brute(const EquipartitionInput& input, int limit) {
  check_input(input);
  const std::size_t n = input.weights.size();
  if (static_cast<int>(n) > limit) {
    throw ResourceError("equipartition_brute refuses " + std::to_string(n) + " weights (limit " +
                        std::to_string(limit) + ")");
  }
  Integer total = 0;
  for (const Integer& w : input.weights) total += w;
  if (total % 2 != 0) return false;
  const Integer half = total / 2;

  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) != n / 2) continue;
    Integer sum = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (1ul << k)) sum += input.weights[k];
    }
    if (sum == half) return true;
  }
  return false;
}

bool verify_tangency(const ReducedInstance& reduced, const std::vector<int>& subset) {
  if (static_cast<int>(subset.size()) < reduced.cardinality_bound) return true;
  if (!is_feasible(reduced.instance, subset)) return true;
  if (static_cast<int>(subset.size()) != reduced.cardinality_bound) return false;
  Rational re_sum;
  Rational total;
  for (const Item& item : reduced.instance.items) total += item.demand.re;
  for (int id : subset) re_sum += reduced.instance.items[id].demand.re;
  return re_sum == total / Rational(2);
}

}  // namespace ckp

#include "ckp/ckp_alg.hpp"

#include <stdexcept>

namespace ckp {

namespace {

void check_ckp_input(const Instance& inst) {
  if (inst.kind != InstanceKind::CKP) {
    throw ContractError("expected a ckp instance, got " + kind_name(inst.kind));
  }
  if (inst.symbolic_imaginary()) {
    throw ContractError("symbolic-imaginary instances are only accepted by oracle solvers");
  }
  if (!is_preprocessed(inst)) {
    throw ContractError("instance must be preprocessed (every singleton feasible)");
  }
  validate_instance(inst);
}

Solution best_d2_singleton(const Instance& inst) {
  Solution best;  // empty
  bool have = false;
  for (const Item& item : inst.items) {
    if (classify_region(item.demand, inst.capacity) != Region::D2) continue;
    if (!have || item.value > best.total_value) {
      best = make_solution(inst, {item.id});
      have = true;
    }
  }
  return best;
}

Solution check_output(const Instance& inst, Solution s) {
  if (!is_feasible(inst, s.selected)) throw std::logic_error("solver produced an infeasible set");
  return s;
}

}  // namespace

Solution alg_a(const Instance& inst, const Rational& epsilon, const DpConfig& config) {
  check_ckp_input(inst);

  std::vector<OneDItem> projected;
  projected.reserve(inst.items.size());
  for (const Item& item : inst.items) {
    projected.push_back({item.id, OneDWeight::of(scaled_projection(item.demand)), item.value});
  }
  const OneDSolution s1 = fptas(projected, inst.capacity.magnitude_sq(), epsilon, config);

  const Solution cand1 = make_solution(inst, s1.selected);
  const Solution cand2 = best_d2_singleton(inst);
  return check_output(inst, solution_better(inst, cand2, cand1) ? cand2 : cand1);
}

Solution alg_b(const Instance& inst, const Rational& epsilon, const DpConfig& config) {
  check_ckp_input(inst);
  for (const Item& item : inst.items) {
    if (!item.value.is_integer()) {
      throw ContractError("alg_b requires positive integer values; item " +
                          std::to_string(item.id) + " has value " + item.value.str());
    }
  }

  const Rational c_sq = inst.capacity.magnitude_sq();
  std::vector<OneDItem> cut;
  cut.reserve(inst.items.size());
  for (const Item& item : inst.items) {
    const Rational proj = scaled_projection(item.demand);
    // min(dR+dI, C): projections beyond C become the full-capacity weight.
    if (proj.squared() <= c_sq) {
      cut.push_back({item.id, OneDWeight::of(proj), item.value});
    } else {
      cut.push_back({item.id, OneDWeight::capacity(), item.value});
    }
  }
  const OneDSolution s = monotone_fptas(cut, c_sq, epsilon, config);
  return check_output(inst, make_solution(inst, s.selected));
}

std::pair<std::vector<int>, std::vector<int>> split_subset(const std::vector<Rational>& a,
                                                           const Rational& c_sq,
                                                           const Rational& c_prime) {
  Rational sum;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_positive()) {
      throw ContractError("split_subset entries must be positive (index " + std::to_string(i) + ")");
    }
    if (a[i] > c_prime) {
      throw ContractError("split_subset requires every entry <= c_prime");
    }
    sum += a[i];
  }
  if (!leq_sqrt(sum, c_sq)) throw ContractError("split_subset requires sum(a) <= sqrt(c_sq)");
  if (c_prime.is_negative() || Rational(2) * c_prime.squared() < c_sq) {
    throw ContractError("split_subset requires c_prime >= sqrt(c_sq/2)");
  }

  std::vector<int> all(a.size());
  for (size_t i = 0; i < a.size(); ++i) all[i] = static_cast<int>(i);
  if (sum <= c_prime) return {all, {}};

  // First index whose prefix sum exceeds c_prime.
  size_t j = 0;
  Rational prefix;
  while (prefix + a[j] <= c_prime) {
    prefix += a[j];
    ++j;
  }
  Rational suffix_with_j = sum - prefix;  // a_j + everything after it
  std::vector<int> head(all.begin(), all.begin() + static_cast<long>(j));
  if (suffix_with_j <= c_prime) {
    return {head, std::vector<int>(all.begin() + static_cast<long>(j), all.end())};
  }
  // y + z > c_prime: then x + y < c_prime, so everything but j fits.
  std::vector<int> rest = head;
  rest.insert(rest.end(), all.begin() + static_cast<long>(j) + 1, all.end());
  return {rest, {static_cast<int>(j)}};
}

}  // namespace ckp

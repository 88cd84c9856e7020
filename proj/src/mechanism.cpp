#include "ckp/mechanism.hpp"

#include <algorithm>
#include <optional>

#include "ckp/ckp_alg.hpp"

namespace ckp {

namespace {

Instance assemble(const std::vector<AgentType>& profile, const CapacitySpec& capacity) {
  if (capacity.has_axis_caps()) {
    throw ContractError("the mechanism runs on ckp capacities (no per-axis caps)");
  }
  Instance inst;
  inst.kind = InstanceKind::CKP;
  inst.capacity = capacity;
  for (std::size_t k = 0; k < profile.size(); ++k) {
    if (sgn(profile[k].value) <= 0) {
      throw ContractError("agent " + std::to_string(k) + " must report a positive integer value");
    }
    inst.items.push_back(
        {static_cast<int>(k), profile[k].demand, Rational(profile[k].value)});
  }
  validate_instance(inst);
  return inst;
}

bool covers(const ComplexDemand& assigned, const ComplexDemand& needed) {
  return needed.re <= assigned.re && needed.im <= assigned.im;
}

bool contains(const std::vector<int>& sorted_ids, int id) {
  return std::binary_search(sorted_ids.begin(), sorted_ids.end(), id);
}

}  // namespace

std::vector<int> select_agents(const std::vector<AgentType>& profile, const CapacitySpec& capacity,
                               const Rational& epsilon) {
  const Instance inst = assemble(profile, capacity);
  const PreprocessResult pre = preprocess(inst);
  const Solution s = alg_b(pre.instance, epsilon);
  std::vector<int> agents;
  agents.reserve(s.selected.size());
  for (int id : s.selected) agents.push_back(pre.old_ids[id]);
  std::sort(agents.begin(), agents.end());
  return agents;
}

Integer critical_value(int agent, const std::vector<AgentType>& profile,
                       const CapacitySpec& capacity, const Rational& epsilon) {
  if (agent < 0 || agent >= static_cast<int>(profile.size())) {
    throw ContractError("unknown agent id " + std::to_string(agent));
  }
  if (!contains(select_agents(profile, capacity, epsilon), agent)) {
    throw ContractError("critical_value requires the agent to be selected at his reported value");
  }
  std::vector<AgentType> probe = profile;
  Integer lo = 1;
  Integer hi = profile[agent].value;
  while (lo < hi) {
    const Integer mid = (lo + hi) / 2;
    probe[agent].value = mid;
    if (contains(select_agents(probe, capacity, epsilon), agent)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

MechanismOutcome run_mechanism(const std::vector<AgentType>& profile, const CapacitySpec& capacity,
                               const Rational& epsilon) {
  MechanismOutcome outcome;
  outcome.selected = select_agents(profile, capacity, epsilon);
  for (std::size_t k = 0; k < profile.size(); ++k) {
    const int agent = static_cast<int>(k);
    outcome.payments[agent] = contains(outcome.selected, agent)
                                  ? critical_value(agent, profile, capacity, epsilon)
                                  : Integer(0);
  }
  return outcome;
}

Rational utility(int agent, const AgentType& true_type, const AgentType& reported,
                 const MechanismOutcome& outcome) {
  if (!contains(outcome.selected, agent)) return Rational(0);
  // Exactness: a selected agent is assigned exactly his reported demand.
  const Rational valuation =
      covers(reported.demand, true_type.demand) ? Rational(true_type.value) : Rational(0);
  const auto it = outcome.payments.find(agent);
  const Rational payment = it == outcome.payments.end() ? Rational(0) : Rational(it->second);
  return valuation - payment;
}

namespace {

std::vector<IcViolation> verify_ic_impl(const std::vector<AgentType>& profile,
                                        const CapacitySpec& capacity, const Rational& epsilon,
                                        const std::optional<PaymentRule>& custom_rule) {
  std::vector<IcViolation> violations;
  const Instance inst = assemble(profile, capacity);

  const auto pay = [&](int agent, const std::vector<AgentType>& reported_profile) -> Integer {
    if (custom_rule) return (*custom_rule)(agent, reported_profile);
    return critical_value(agent, reported_profile, capacity, epsilon);
  };

  const std::vector<int> truthful_selected = select_agents(profile, capacity, epsilon);
  const std::vector<Rational> demand_scales = {Rational(1, 2), Rational(1), Rational(3, 2),
                                               Rational(2)};

  for (std::size_t k = 0; k < profile.size(); ++k) {
    const int agent = static_cast<int>(k);
    const AgentType& truth = profile[k];
    const bool truthful_in = contains(truthful_selected, agent);

    Integer theta = 0;
    Rational truthful_utility;
    if (truthful_in) {
      theta = pay(agent, profile);
      truthful_utility = Rational(truth.value) - Rational(theta);

      if (truthful_utility.is_negative()) {
        violations.push_back({agent, "ir",
                              "truthful utility " + truthful_utility.str() + " is negative"});
      }
      // Threshold replay: the payment must be the minimal winning report.
      std::vector<AgentType> probe = profile;
      probe[agent].value = theta;
      if (!contains(select_agents(probe, capacity, epsilon), agent)) {
        violations.push_back({agent, "payment-threshold",
                              "not selected when reporting the payment " + theta.get_str()});
      }
      if (theta > 1) {
        probe[agent].value = theta - 1;
        if (contains(select_agents(probe, capacity, epsilon), agent)) {
          violations.push_back({agent, "payment-threshold",
                                "still selected when reporting " + Integer(theta - 1).get_str()});
        }
      }
    }

    // Misreport grid: demand scaled per axis, then a small value grid per
    // demand variant (the critical value depends on the demand only, so it
    // is computed once per variant on the default rule).
    std::vector<ComplexDemand> variants;
    for (const Rational& sr : demand_scales) {
      for (const Rational& si : demand_scales) {
        ComplexDemand d{truth.demand.re * sr, truth.demand.im * si};
        bool seen = false;
        for (const ComplexDemand& v : variants) {
          if (v.re == d.re && v.im == d.im) {
            seen = true;
            break;
          }
        }
        if (!seen) variants.push_back(std::move(d));
      }
    }

    for (const ComplexDemand& reported_demand : variants) {
      const bool same_demand =
          reported_demand.re == truth.demand.re && reported_demand.im == truth.demand.im;
      if (!sums_feasible(inst, reported_demand.re, reported_demand.im)) {
        // An individually infeasible report is never selected: utility 0.
        if (truthful_utility.is_negative()) {
          violations.push_back({agent, "ic",
                                "an unselected misreport (utility 0) beats truth-telling"});
        }
        continue;
      }

      std::vector<Integer> value_grid = {Integer(1), (truth.value + 1) / 2, truth.value,
                                         2 * truth.value};
      if (same_demand && truthful_in) {
        value_grid.push_back(theta);
        value_grid.push_back(theta + 1);
        if (theta > 1) value_grid.push_back(theta - 1);
      }
      std::sort(value_grid.begin(), value_grid.end());
      value_grid.erase(std::unique(value_grid.begin(), value_grid.end()), value_grid.end());

      std::optional<Integer> variant_theta;
      for (const Integer& reported_value : value_grid) {
        if (same_demand && reported_value == truth.value) continue;  // the truthful report
        std::vector<AgentType> misreport = profile;
        misreport[k] = {reported_demand, reported_value};

        Rational misreport_utility;
        if (contains(select_agents(misreport, capacity, epsilon), agent)) {
          Integer payment;
          if (custom_rule) {
            payment = (*custom_rule)(agent, misreport);
          } else {
            if (!variant_theta) {
              variant_theta = critical_value(agent, misreport, capacity, epsilon);
            }
            payment = *variant_theta;
          }
          const Rational valuation =
              covers(reported_demand, truth.demand) ? Rational(truth.value) : Rational(0);
          misreport_utility = valuation - Rational(payment);
        }
        if (misreport_utility > truthful_utility) {
          violations.push_back(
              {agent, "ic",
               "reporting demand (" + reported_demand.re.str() + ", " + reported_demand.im.str() +
                   ") value " + reported_value.get_str() + " yields utility " +
                   misreport_utility.str() + " > truthful " + truthful_utility.str()});
        }
      }
    }
  }
  return violations;
}

}  // namespace

std::vector<IcViolation> verify_ic(const std::vector<AgentType>& profile,
                                   const CapacitySpec& capacity, const Rational& epsilon) {
  return verify_ic_impl(profile, capacity, epsilon, std::nullopt);
}

std::vector<IcViolation> verify_ic_with_payments(const std::vector<AgentType>& profile,
                                                 const CapacitySpec& capacity,
                                                 const Rational& epsilon,
                                                 const PaymentRule& payment_rule) {
  return verify_ic_impl(profile, capacity, epsilon, payment_rule);
}

std::vector<MonotoneViolation> verify_monotone(const CkpAlgorithm& algorithm,
                                               const Instance& inst, const Rational& epsilon,
                                               const std::vector<Perturbation>& perturbations) {
  const Solution base = algorithm(inst, epsilon);
  std::vector<MonotoneViolation> violations;
  for (std::size_t p = 0; p < perturbations.size(); ++p) {
    const Perturbation& pert = perturbations[p];
    if (pert.agent < 0 || pert.agent >= inst.size()) {
      throw ContractError("perturbation targets unknown agent " + std::to_string(pert.agent));
    }
    const Item& item = inst.items[pert.agent];
    if (Rational(pert.new_value) < item.value || pert.new_demand.re > item.demand.re ||
        pert.new_demand.im > item.demand.im) {
      throw ContractError("malformed perturbation: requires v' >= v and d' <= d componentwise");
    }
    if (!contains(base.selected, pert.agent)) continue;

    Instance probe = inst;
    probe.items[pert.agent].demand = pert.new_demand;
    probe.items[pert.agent].value = Rational(pert.new_value);
    const Solution replay = algorithm(probe, epsilon);
    if (!contains(replay.selected, pert.agent)) {
      violations.push_back({p, pert.agent});
    }
  }
  return violations;
}

std::vector<Perturbation> standard_perturbations(const Instance& inst,
                                                 const std::vector<int>& agents) {
  const std::vector<std::pair<Rational, Rational>> demand_scales = {
      {Rational(1), Rational(1)},
      {Rational(1), Rational(1, 2)},
      {Rational(1, 2), Rational(1)},
      {Rational(1, 2), Rational(1, 2)},
  };
  std::vector<Perturbation> grid;
  for (int agent : agents) {
    if (agent < 0 || agent >= inst.size()) {
      throw ContractError("unknown agent id " + std::to_string(agent));
    }
    const Item& item = inst.items[agent];
    const Integer v = item.value.to_integer();
    for (const Integer& value : {v, Integer(v + 1), Integer(2 * v)}) {
      for (const auto& [sr, si] : demand_scales) {
        grid.push_back({agent,
                        ComplexDemand{item.demand.re * sr, item.demand.im * si},
                        value});
      }
    }
  }
  return grid;
}

}  // namespace ckp

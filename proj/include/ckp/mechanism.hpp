#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ckp/core.hpp"
#include "ckp/knapsack1d.hpp"

namespace ckp {

/// A single-minded agent's reported type: one demand bundle plus a positive
/// integer value (integrality is what makes the payment binary search work).
struct AgentType {
  ComplexDemand demand;
  Integer value;
};

struct MechanismOutcome {
  std::vector<int> selected;       // sorted agent ids
  std::map<int, Integer> payments; // every agent, 0 when unselected
};

struct Perturbation {
  int agent = 0;
  ComplexDemand new_demand;
  Integer new_value;
};

/// Selection rule of the mechanism: assemble a CKP instance, preprocess it,
/// run alg_b, and map ids back to agent ids.
std::vector<int> select_agents(const std::vector<AgentType>& profile, const CapacitySpec& capacity,
                               const Rational& epsilon);

/// Smallest integer value in [1, v_k] at which the agent is still selected
/// with everything else fixed; found by binary search, valid because alg_b
/// is monotone. The agent must be selected at his reported value.
Integer critical_value(int agent, const std::vector<AgentType>& profile,
                       const CapacitySpec& capacity, const Rational& epsilon);

/// Selection by alg_b plus critical-value payments (0 for unselected).
MechanismOutcome run_mechanism(const std::vector<AgentType>& profile, const CapacitySpec& capacity,
                               const Rational& epsilon);

/// Utility of an agent whose true type is true_type after reporting
/// `reported`: a selected agent is assigned exactly the reported demand, so
/// his valuation is his true value only if the true demand is componentwise
/// covered by the report; unselected agents have utility 0.
Rational utility(int agent, const AgentType& true_type, const AgentType& reported,
                 const MechanismOutcome& outcome);

struct IcViolation {
  int agent = 0;
  std::string kind;  // "ic", "ir" or "payment-threshold"
  std::string detail;
};

/// Payment rule hook: maps (agent, full reported profile) to a payment.
using PaymentRule =
    std::function<Integer(int agent, const std::vector<AgentType>& profile)>;

/// Replays the mechanism over the misreport grid (demand scaled by
/// {1/2, 1, 3/2, 2} per axis, value in {1, ~v/2, v, 2v} plus the boundary
/// reports theta-1, theta, theta+1) and returns every case where a
/// misreport strictly beats truth-telling, plus payment threshold replay
/// failures (selected at theta, unselected at theta-1) and IR failures.
std::vector<IcViolation> verify_ic(const std::vector<AgentType>& profile,
                                   const CapacitySpec& capacity, const Rational& epsilon);

/// Same harness with an injectable payment rule; used to prove the checker
/// actually detects broken payments.
std::vector<IcViolation> verify_ic_with_payments(const std::vector<AgentType>& profile,
                                                 const CapacitySpec& capacity,
                                                 const Rational& epsilon,
                                                 const PaymentRule& payment_rule);

using CkpAlgorithm = std::function<Solution(const Instance&, const Rational& epsilon)>;

struct MonotoneViolation {
  std::size_t perturbation_index = 0;
  int agent = 0;
};

/// Replays `algorithm` once per perturbation (v' >= v, d' <= d, enforced)
/// and reports every case where a previously selected agent drops out.
std::vector<MonotoneViolation> verify_monotone(const CkpAlgorithm& algorithm,
                                               const Instance& inst, const Rational& epsilon,
                                               const std::vector<Perturbation>& perturbations);

/// The fixed perturbation grid used by the property suites: for each listed
/// agent, values {v, v+1, 2v} crossed with per-axis demand scalings
/// {1, 1/2}^2, identity included.
std::vector<Perturbation> standard_perturbations(const Instance& inst,
                                                 const std::vector<int>& agents);

}  // namespace ckp

#include "ckp/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace ckp {

namespace {

// Rational square root when one exists (p and q both perfect squares).
std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.is_negative()) return std::nullopt;
  const Integer num = r.numerator();
  const Integer den = r.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Integer num_root, den_root;
  mpz_sqrt(num_root.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), den.get_mpz_t());
  return Rational(num_root, den_root);
}

}  // namespace

CapacitySpec CapacitySpec::from_magnitude(const Rational& c) {
  if (!c.is_positive()) throw ContractError("capacity magnitude must be positive");
  CapacitySpec spec;
  spec.magnitude_ = c;
  spec.magnitude_sq_ = c.squared();
  return spec;
}

CapacitySpec CapacitySpec::from_magnitude_sq(const Rational& c_sq) {
  if (!c_sq.is_positive()) throw ContractError("squared capacity must be positive");
  CapacitySpec spec;
  spec.magnitude_sq_ = c_sq;
  spec.magnitude_ = exact_sqrt(c_sq);
  return spec;
}

CapacitySpec CapacitySpec::with_axis_caps(const Rational& cap_re, const Rational& cap_im) const {
  if (!cap_re.is_positive() || !cap_im.is_positive()) {
    throw ContractError("per-axis capacities must be positive");
  }
  CapacitySpec spec = *this;
  spec.cap_re_ = cap_re;
  spec.cap_im_ = cap_im;
  return spec;
}

std::string kind_name(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::OneKP: return "1kp";
    case InstanceKind::CKP: return "ckp";
    case InstanceKind::GCKP: return "gckp";
  }
  return "?";
}

std::string region_name(Region r) {
  switch (r) {
    case Region::D1: return "D1";
    case Region::D2: return "D2";
    case Region::Infeasible: return "infeasible";
  }
  return "?";
}

void validate_instance(const Instance& inst) {
  if (inst.im_scale_sq.is_negative()) {
    throw ContractError("im_scale_sq must be nonnegative");
  }
  const bool has_caps = inst.capacity.has_axis_caps();
  if ((inst.kind == InstanceKind::GCKP) != has_caps) {
    throw ContractError("kind gckp if and only if per-axis caps are present");
  }
  for (size_t k = 0; k < inst.items.size(); ++k) {
    const Item& item = inst.items[k];
    if (item.id != static_cast<int>(k)) {
      throw ContractError("item ids must be contiguous 0..n-1 in order");
    }
    if (item.demand.re.is_negative() || item.demand.im.is_negative()) {
      throw ContractError("item " + std::to_string(item.id) + " has a negative demand component");
    }
    if (!item.value.is_positive()) {
      throw ContractError("item " + std::to_string(item.id) + " must have positive value");
    }
    if (inst.kind == InstanceKind::OneKP && !item.demand.im.is_zero()) {
      throw ContractError("1kp instances require zero imaginary parts");
    }
  }
}

Region classify_region(const ComplexDemand& d, const CapacitySpec& capacity) {
  const Rational c_sq = capacity.magnitude_sq();
  const Rational proj = scaled_projection(d);
  bool caps_ok = true;
  if (capacity.has_axis_caps()) {
    caps_ok = d.re <= *capacity.cap_re() && d.im <= *capacity.cap_im();
  }
  // d~ <= C/sqrt(2) after cancelling sqrt(2): dR + dI <= C.
  if ((proj.sign() <= 0 || proj.squared() <= c_sq) && caps_ok) return Region::D1;
  const Rational norm_sq = d.re.squared() + d.im.squared();
  if (norm_sq <= c_sq && caps_ok) return Region::D2;
  return Region::Infeasible;
}

bool sums_feasible(const Instance& inst, const Rational& re_sum, const Rational& im_sum) {
  const Rational norm_sq = re_sum.squared() + inst.im_scale_sq * im_sum.squared();
  if (norm_sq > inst.capacity.magnitude_sq()) return false;
  if (inst.capacity.has_axis_caps()) {
    if (re_sum > *inst.capacity.cap_re()) return false;
    // Imaginary axis: sqrt(im_scale_sq)*im_sum <= C^I, via squares.
    const Rational cap_im = *inst.capacity.cap_im();
    if (inst.im_scale_sq * im_sum.squared() > cap_im.squared()) return false;
  }
  return true;
}

namespace {

void check_ids(const Instance& inst, const std::vector<int>& selected) {
  std::unordered_set<int> seen;
  for (int id : selected) {
    if (id < 0 || id >= inst.size()) {
      throw ContractError("unknown item id " + std::to_string(id));
    }
    if (!seen.insert(id).second) {
      throw ContractError("duplicate item id " + std::to_string(id) + " in selection");
    }
  }
}

}  // namespace

bool is_feasible(const Instance& inst, const std::vector<int>& selected) {
  check_ids(inst, selected);
  Rational re_sum, im_sum;
  for (int id : selected) {
    re_sum += inst.items[id].demand.re;
    im_sum += inst.items[id].demand.im;
  }
  return sums_feasible(inst, re_sum, im_sum);
}

Solution make_solution(const Instance& inst, std::vector<int> selected) {
  std::sort(selected.begin(), selected.end());
  check_ids(inst, selected);
  Solution s;
  for (int id : selected) {
    s.total_value += inst.items[id].value;
    s.total_demand.re += inst.items[id].demand.re;
    s.total_demand.im += inst.items[id].demand.im;
  }
  s.selected = std::move(selected);
  return s;
}

bool solution_better(const Instance& inst, const Solution& a, const Solution& b) {
  const int by_value = cmp(a.total_value, b.total_value);
  if (by_value != 0) return by_value > 0;
  // Projection sum re + sqrt(im_scale_sq)*im, compared exactly.
  const int by_proj = cmp_affine_sqrt(a.total_demand.re, a.total_demand.im,
                                      b.total_demand.re, b.total_demand.im,
                                      inst.im_scale_sq);
  if (by_proj != 0) return by_proj < 0;
  return std::lexicographical_compare(a.selected.begin(), a.selected.end(),
                                      b.selected.begin(), b.selected.end());
}

PreprocessResult preprocess(const Instance& inst) {
  PreprocessResult result;
  result.instance.capacity = inst.capacity;
  result.instance.kind = inst.kind;
  result.instance.im_scale_sq = inst.im_scale_sq;
  for (const Item& item : inst.items) {
    if (!sums_feasible(inst, item.demand.re, item.demand.im)) continue;
    Item kept = item;
    kept.id = static_cast<int>(result.instance.items.size());
    result.instance.items.push_back(std::move(kept));
    result.old_ids.push_back(item.id);
  }
  return result;
}

bool is_preprocessed(const Instance& inst) {
  for (const Item& item : inst.items) {
    if (!sums_feasible(inst, item.demand.re, item.demand.im)) return false;
  }
  return true;
}

namespace {

struct BruteState {
  const Instance& inst;
  std::vector<int> current;
  Rational re_sum;
  Rational im_sum;
  Rational value_sum;
  Solution best;

  explicit BruteState(const Instance& instance) : inst(instance) {}

  void consider() {
    Solution cand;
    cand.selected = current;
    cand.total_value = value_sum;
    cand.total_demand = {re_sum, im_sum};
    if (solution_better(inst, cand, best)) best = std::move(cand);
  }

  void walk(int next) {
    consider();
    for (int id = next; id < inst.size(); ++id) {
      const Item& item = inst.items[id];
      const Rational re = re_sum + item.demand.re;
      const Rational im = im_sum + item.demand.im;
      // Components are nonnegative, so infeasible partial sums never recover.
      if (!sums_feasible(inst, re, im)) continue;
      current.push_back(id);
      re_sum = re;
      im_sum = im;
      value_sum += item.value;
      walk(id + 1);
      current.pop_back();
      re_sum -= item.demand.re;
      im_sum -= item.demand.im;
      value_sum -= item.value;
    }
  }
};

}  // namespace

Solution brute_force_opt(const Instance& inst, int limit) {
  if (inst.size() > limit) {
    throw ResourceError("brute_force_opt refuses " + std::to_string(inst.size()) +
                        " items (limit " + std::to_string(limit) + ")");
  }
  BruteState state(inst);
  state.walk(0);
  return state.best;
}

}  // namespace ckp

#include "ckp/gckp.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ckp {

ThreeDItem::ThreeDItem(int id_in, std::array<Rational, 3> weight_in, Rational value_in)
    : id(id_in), weight(std::move(weight_in)), value(std::move(value_in)) {
  for (const Rational& w : weight) {
    if (w.is_negative()) throw ContractError("3-KP weights must be nonnegative");
  }
  if (weight[0] != weight[1] + weight[2]) {
    throw ContractError("3-KP weight[0] must equal weight[1] + weight[2]");
  }
  if (!value.is_positive()) throw ContractError("3-KP items must have positive value");
}

namespace {

// Dense rational simplex in standard form. Columns: n structural x, then 3
// row slacks, then n upper-bound slacks (x_k + u_k = 1). A basic solution
// has at most n+3 basic variables, and each fractional x_k forces both x_k
// and u_k basic, so at most 3 coordinates end up strictly fractional.
class BoxedSimplex {
 public:
  BoxedSimplex(const std::vector<ThreeDItem>& items, const std::array<Rational, 3>& caps)
      : n_(items.size()), rows_(3 + n_), cols_(2 * n_ + 3) {
    tableau_.assign(rows_, std::vector<Rational>(cols_ + 1));
    cost_.assign(cols_ + 1, Rational(0));
    basis_.resize(rows_);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t k = 0; k < n_; ++k) tableau_[r][k] = items[k].weight[r];
      tableau_[r][n_ + r] = Rational(1);
      tableau_[r][cols_] = caps[r];
      basis_[r] = n_ + r;
    }
    for (std::size_t k = 0; k < n_; ++k) {
      const std::size_t r = 3 + k;
      tableau_[r][k] = Rational(1);
      tableau_[r][n_ + 3 + k] = Rational(1);
      tableau_[r][cols_] = Rational(1);
      basis_[r] = n_ + 3 + k;
    }
    for (std::size_t k = 0; k < n_; ++k) cost_[k] = items[k].value;
  }

  void solve() {
    while (true) {
      std::size_t entering = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (cost_[j].is_positive()) {
          entering = j;
          break;
        }
      }
      if (entering == cols_) return;

      std::size_t leaving = rows_;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (!tableau_[r][entering].is_positive()) continue;
        const Rational ratio = tableau_[r][cols_] / tableau_[r][entering];
        if (leaving == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving == rows_) throw std::logic_error("boxed LP cannot be unbounded");
      pivot(leaving, entering);
    }
  }

  std::vector<Rational> levels() const {
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < n_) x[basis_[r]] = tableau_[r][cols_];
    }
    return x;
  }

 private:
  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = Rational(1) / tableau_[row][col];
    for (Rational& cell : tableau_[row]) cell *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || tableau_[r][col].is_zero()) continue;
      const Rational factor = tableau_[r][col];
      for (std::size_t j = 0; j <= cols_; ++j) tableau_[r][j] -= factor * tableau_[row][j];
    }
    if (!cost_[col].is_zero()) {
      const Rational factor = cost_[col];
      for (std::size_t j = 0; j <= cols_; ++j) cost_[j] -= factor * tableau_[row][j];
    }
    basis_[row] = col;
  }

  std::size_t n_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> tableau_;
  std::vector<Rational> cost_;
  std::vector<std::size_t> basis_;
};

void check_unique_ids(const std::vector<ThreeDItem>& items) {
  std::unordered_set<int> ids;
  for (const ThreeDItem& it : items) {
    if (!ids.insert(it.id).second) {
      throw ContractError("duplicate item id " + std::to_string(it.id));
    }
  }
}

bool fits(const std::array<Rational, 3>& weight, const std::array<Rational, 3>& caps) {
  for (int axis = 0; axis < 3; ++axis) {
    if (weight[axis] > caps[axis]) return false;
  }
  return true;
}

// Value descending, projection-axis weight ascending, lex smallest id set.
bool threed_better(const ThreeDSolution& a, const ThreeDSolution& b) {
  const int by_value = cmp(a.total_value, b.total_value);
  if (by_value != 0) return by_value > 0;
  const int by_weight = cmp(a.total_weight[0], b.total_weight[0]);
  if (by_weight != 0) return by_weight < 0;
  return std::lexicographical_compare(a.selected.begin(), a.selected.end(),
                                      b.selected.begin(), b.selected.end());
}

ThreeDSolution collect(const std::vector<ThreeDItem>& items, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ThreeDSolution s;
  for (int id : ids) {
    for (const ThreeDItem& it : items) {
      if (it.id != id) continue;
      s.total_value += it.value;
      for (int axis = 0; axis < 3; ++axis) s.total_weight[axis] += it.weight[axis];
      break;
    }
  }
  s.selected = std::move(ids);
  return s;
}

}  // namespace

FractionalSolution lp_relax_solve(const std::vector<ThreeDItem>& items,
                                  const std::array<Rational, 3>& residual_caps) {
  check_unique_ids(items);
  for (const Rational& cap : residual_caps) {
    if (cap.is_negative()) throw ContractError("residual capacities must be nonnegative");
  }

  BoxedSimplex simplex(items, residual_caps);
  simplex.solve();

  FractionalSolution sol;
  sol.level = simplex.levels();
  int fractional = 0;
  for (std::size_t k = 0; k < items.size(); ++k) {
    sol.objective += items[k].value * sol.level[k];
    if (sol.level[k].is_positive() && sol.level[k] < Rational(1)) ++fractional;
  }
  if (fractional > 3) throw std::logic_error("basic LP optimum has more than 3 fractional levels");
  return sol;
}

ThreeDSolution ptas_3kp(const std::vector<ThreeDItem>& items, const std::array<Rational, 3>& caps,
                        const Rational& epsilon, const PtasConfig& config) {
  if (!epsilon.is_positive() || epsilon >= Rational(1)) {
    throw ContractError("epsilon must lie in (0,1), got " + epsilon.str());
  }
  check_unique_ids(items);

  std::vector<ThreeDItem> pool;
  for (const ThreeDItem& it : items) {
    if (fits(it.weight, caps)) pool.push_back(it);
  }
  std::sort(pool.begin(), pool.end(),
            [](const ThreeDItem& a, const ThreeDItem& b) { return a.id < b.id; });

  const std::size_t n = pool.size();
  const Integer h_raw = (Rational(3) / epsilon).ceil();
  const std::size_t h = h_raw > static_cast<long>(n) ? n : h_raw.get_ui();

  ThreeDSolution best;  // the empty seed always contributes a candidate
  std::int64_t seeds = 0;

  std::vector<std::size_t> seed;
  std::array<Rational, 3> used{};

  const auto evaluate_seed = [&]() {
    if (++seeds > config.max_seed_sets) {
      throw ResourceError("ptas_3kp enumeration budget exceeded at n=" + std::to_string(n) +
                          ", epsilon=" + epsilon.str());
    }
    std::array<Rational, 3> residual;
    for (int axis = 0; axis < 3; ++axis) residual[axis] = caps[axis] - used[axis];

    bool have_min = false;
    Rational min_value;
    for (std::size_t idx : seed) {
      if (!have_min || pool[idx].value < min_value) {
        min_value = pool[idx].value;
        have_min = true;
      }
    }

    std::vector<ThreeDItem> eligible;
    std::vector<char> in_seed(n, 0);
    for (std::size_t idx : seed) in_seed[idx] = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (in_seed[k]) continue;
      if (have_min && pool[k].value > min_value) continue;
      eligible.push_back(pool[k]);
    }

    std::vector<int> chosen;
    for (std::size_t idx : seed) chosen.push_back(pool[idx].id);
    if (!eligible.empty()) {
      const FractionalSolution lp = lp_relax_solve(eligible, residual);
      for (std::size_t k = 0; k < eligible.size(); ++k) {
        if (lp.level[k] == Rational(1)) chosen.push_back(eligible[k].id);
      }
    }
    ThreeDSolution cand = collect(pool, std::move(chosen));
    if (threed_better(cand, best)) best = std::move(cand);
  };

  // Seeds are enumerated ids ascending; feasibility prunes whole subtrees
  // (weights are nonnegative, so supersets of infeasible sets stay out).
  const auto recurse = [&](auto&& self, std::size_t next) -> void {
    evaluate_seed();
    if (seed.size() == h) return;
    for (std::size_t k = next; k < n; ++k) {
      std::array<Rational, 3> grown;
      bool ok = true;
      for (int axis = 0; axis < 3; ++axis) {
        grown[axis] = used[axis] + pool[k].weight[axis];
        if (grown[axis] > caps[axis]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      seed.push_back(k);
      std::swap(used, grown);
      self(self, k + 1);
      std::swap(used, grown);
      seed.pop_back();
    }
  };
  recurse(recurse, 0);
  return best;
}

Solution alg_c(const Instance& inst, const Rational& epsilon, const PtasConfig& config) {
  if (inst.kind != InstanceKind::GCKP) {
    throw ContractError("expected a gckp instance, got " + kind_name(inst.kind));
  }
  if (inst.symbolic_imaginary()) {
    throw ContractError("symbolic-imaginary instances are only accepted by oracle solvers");
  }
  if (!inst.capacity.magnitude_exact().has_value()) {
    throw ContractError("alg_c needs rational magnitude: only C^2 is known and it is not a perfect square");
  }
  if (!is_preprocessed(inst)) {
    throw ContractError("instance must be preprocessed (every singleton feasible)");
  }
  validate_instance(inst);

  std::vector<ThreeDItem> projected;
  projected.reserve(inst.items.size());
  for (const Item& item : inst.items) {
    projected.emplace_back(item.id,
                           std::array<Rational, 3>{scaled_projection(item.demand),
                                                   item.demand.re, item.demand.im},
                           item.value);
  }
  const std::array<Rational, 3> caps{*inst.capacity.magnitude_exact(), *inst.capacity.cap_re(),
                                     *inst.capacity.cap_im()};
  const ThreeDSolution s1 = ptas_3kp(projected, caps, epsilon, config);
  const Solution cand1 = make_solution(inst, s1.selected);

  Solution cand2;
  bool have = false;
  for (const Item& item : inst.items) {
    if (classify_region(item.demand, inst.capacity) != Region::D2) continue;
    if (!have || item.value > cand2.total_value) {
      cand2 = make_solution(inst, {item.id});
      have = true;
    }
  }

  Solution out = solution_better(inst, cand2, cand1) ? cand2 : cand1;
  if (!is_feasible(inst, out.selected)) throw std::logic_error("alg_c produced an infeasible set");
  return out;
}

}  // namespace ckp

#include "ckp/knapsack1d.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ckp/errors.hpp"

namespace ckp {

namespace {

// Sign of w - sqrt(cap_sq) for w >= 0.
int cmp_weight_vs_capacity(const Rational& w, const Rational& capacity_sq) {
  return cmp(w.squared(), capacity_sq);
}

int cmp_weights(const OneDWeight& a, const OneDWeight& b, const Rational& capacity_sq) {
  if (a.full_capacity && b.full_capacity) return 0;
  if (a.full_capacity) return -cmp_weight_vs_capacity(b.amount, capacity_sq);
  if (b.full_capacity) return cmp_weight_vs_capacity(a.amount, capacity_sq);
  return cmp(a.amount, b.amount);
}

// Value descending, weight ascending, lexicographically smallest id set.
bool oned_better(const OneDSolution& a, const OneDSolution& b, const Rational& capacity_sq) {
  const int by_value = cmp(a.total_value, b.total_value);
  if (by_value != 0) return by_value > 0;
  const int by_weight = cmp_weights(a.total_weight, b.total_weight, capacity_sq);
  if (by_weight != 0) return by_weight < 0;
  return std::lexicographical_compare(a.selected.begin(), a.selected.end(),
                                      b.selected.begin(), b.selected.end());
}

void validate_common(const std::vector<OneDItem>& items, const Rational& capacity_sq) {
  if (capacity_sq.is_negative()) throw ContractError("capacity_sq must be nonnegative");
  std::unordered_set<int> ids;
  for (const OneDItem& it : items) {
    if (!ids.insert(it.id).second) {
      throw ContractError("duplicate item id " + std::to_string(it.id));
    }
    if (!it.value.is_positive()) {
      throw ContractError("item " + std::to_string(it.id) + " must have positive value");
    }
    if (!it.weight.full_capacity && it.weight.amount.is_negative()) {
      throw ContractError("item " + std::to_string(it.id) + " has negative weight");
    }
  }
}

// Sums true values and weights for a chosen id set out of the given universe.
OneDSolution rescore(const std::vector<OneDItem>& universe, std::vector<int> ids) {
  std::unordered_map<int, const OneDItem*> by_id;
  for (const OneDItem& it : universe) by_id.emplace(it.id, &it);
  std::sort(ids.begin(), ids.end());
  OneDSolution s;
  for (int id : ids) {
    const OneDItem& it = *by_id.at(id);
    s.total_value += it.value;
    if (it.weight.full_capacity) {
      s.total_weight = OneDWeight::capacity();
    } else if (!s.total_weight.full_capacity) {
      s.total_weight.amount += it.weight.amount;
    }
  }
  s.selected = std::move(ids);
  return s;
}

}  // namespace

OneDSolution dp_exact(const std::vector<OneDItem>& items, const Rational& capacity_sq,
                      const DpConfig& config) {
  validate_common(items, capacity_sq);

  std::vector<const OneDItem*> dp_items;
  std::vector<const OneDItem*> cut_items;
  Integer value_sum = 0;
  for (const OneDItem& it : items) {
    if (!it.value.is_integer()) {
      throw ContractError("dp_exact requires integer values; item " + std::to_string(it.id) +
                          " has value " + it.value.str());
    }
    if (it.weight.full_capacity) {
      cut_items.push_back(&it);
    } else {
      dp_items.push_back(&it);
      value_sum += it.value.to_integer();
    }
  }
  if (value_sum > config.max_value_sum) {
    throw ResourceError("dp_exact value sum " + value_sum.get_str() + " exceeds table bound " +
                        std::to_string(config.max_value_sum));
  }
  const auto by_id = [](const OneDItem* a, const OneDItem* b) { return a->id < b->id; };
  std::sort(dp_items.begin(), dp_items.end(), by_id);
  std::sort(cut_items.begin(), cut_items.end(), by_id);

  const std::size_t n = dp_items.size();
  const std::size_t total = value_sum.get_ui();

  // Common denominator so the table holds integers only.
  Integer denom = 1;
  for (const OneDItem* it : dp_items) {
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), it->weight.amount.denominator().get_mpz_t());
  }
  std::vector<Integer> weight(n);
  std::vector<std::size_t> value(n);
  for (std::size_t i = 0; i < n; ++i) {
    weight[i] = dp_items[i]->weight.amount.numerator() *
                (denom / dp_items[i]->weight.amount.denominator());
    value[i] = dp_items[i]->value.to_integer().get_ui();
  }
  const Rational cap_scaled = capacity_sq * Rational(denom * denom);
  const Integer cap_num = cap_scaled.numerator();
  const Integer cap_den = cap_scaled.denominator();
  const auto fits = [&](const Integer& w) { return w * w * cap_den <= cap_num; };

  // min_weight per exact total value, over item suffixes: item i is folded in
  // after all items > i, and take[i][v] records whether including i attains
  // the suffix minimum. Walking ids ascending at reconstruction and greedily
  // including whenever attainable yields the lex-smallest witness.
  struct DpTable {
    std::vector<Integer> min_weight;
    std::vector<char> reachable;
    std::vector<char> take;  // n rows of (value_sum + 1) backpointer bits
  };
  DpTable table{std::vector<Integer>(total + 1), std::vector<char>(total + 1, 0),
                std::vector<char>(n * (total + 1), 0)};
  table.reachable[0] = 1;
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t vi = value[i];
    char* row = table.take.data() + i * (total + 1);
    for (std::size_t v = total; v >= vi && v > 0; --v) {
      if (!table.reachable[v - vi]) continue;
      Integer cand = table.min_weight[v - vi] + weight[i];
      if (!table.reachable[v] || cand < table.min_weight[v]) {
        table.min_weight[v] = std::move(cand);
        table.reachable[v] = 1;
        row[v] = 1;
      } else {
        row[v] = (cand == table.min_weight[v]);
      }
    }
  }

  std::size_t best_v = 0;
  for (std::size_t v = total; v > 0; --v) {
    if (table.reachable[v] && fits(table.min_weight[v])) {
      best_v = v;
      break;
    }
  }

  OneDSolution best;
  std::size_t residual = best_v;
  for (std::size_t i = 0; i < n && residual > 0; ++i) {
    if (value[i] <= residual && table.take[i * (total + 1) + residual]) {
      best.selected.push_back(dp_items[i]->id);
      residual -= value[i];
    }
  }
  if (residual != 0) throw std::logic_error("dp_exact reconstruction failed");
  best.total_value = Rational(Integer(static_cast<unsigned long>(best_v)));
  best.total_weight =
      OneDWeight::of(best_v == 0 ? Rational(0) : Rational(table.min_weight[best_v], denom));

  // Full-capacity items are standalone candidates; they combine with nothing.
  for (const OneDItem* it : cut_items) {
    OneDSolution cand{{it->id}, it->value, OneDWeight::capacity()};
    if (oned_better(cand, best, capacity_sq)) best = std::move(cand);
  }
  return best;
}

OneDSolution fptas(const std::vector<OneDItem>& items, const Rational& capacity_sq,
                   const Rational& epsilon, const DpConfig& config) {
  if (!epsilon.is_positive() || epsilon >= Rational(1)) {
    throw ContractError("epsilon must lie in (0,1), got " + epsilon.str());
  }
  validate_common(items, capacity_sq);

  std::vector<OneDItem> feasible;
  for (const OneDItem& it : items) {
    if (it.weight.full_capacity || it.weight.amount.squared() <= capacity_sq) {
      feasible.push_back(it);
    }
  }
  if (feasible.empty()) return {};

  Rational v_max;
  for (const OneDItem& it : feasible) v_max = std::max(v_max, it.value);
  const Rational scale = epsilon * v_max / Rational(static_cast<long>(feasible.size()));

  std::vector<OneDItem> rounded;
  for (const OneDItem& it : feasible) {
    const Integer rv = (it.value / scale).floor();
    if (rv > 0) rounded.push_back({it.id, it.weight, Rational(rv)});
  }
  const OneDSolution scaled = dp_exact(rounded, capacity_sq, config);
  return rescore(feasible, scaled.selected);
}

OneDSolution monotone_fptas(const std::vector<OneDItem>& items, const Rational& capacity_sq,
                            const Rational& epsilon, const DpConfig& config) {
  if (!epsilon.is_positive() || epsilon >= Rational(1)) {
    throw ContractError("epsilon must lie in (0,1), got " + epsilon.str());
  }
  validate_common(items, capacity_sq);
  const Integer value_bound = Integer(1) << config.value_bits;
  for (const OneDItem& it : items) {
    if (!it.value.is_integer()) {
      throw ContractError("monotone_fptas requires integer values; item " +
                          std::to_string(it.id) + " has value " + it.value.str());
    }
    if (it.value.to_integer() > value_bound) {
      throw ContractError("item " + std::to_string(it.id) + " value exceeds the 2^" +
                          std::to_string(config.value_bits) + " deployment bound");
    }
  }

  std::vector<OneDItem> feasible;
  for (const OneDItem& it : items) {
    if (it.weight.full_capacity || it.weight.amount.squared() <= capacity_sq) {
      feasible.push_back(it);
    }
  }
  if (feasible.empty()) return {};

  // The cap is input-size dependent but value independent, as required for
  // monotonicity of the composed rule.
  const Integer n(static_cast<long>(items.size()));
  const Integer cap_u = (Rational(2 * n * n) / epsilon).ceil();
  Integer v_max = 0;
  for (const OneDItem& it : feasible) v_max = std::max(v_max, it.value.to_integer());

  OneDSolution best;
  Integer best_score = 0;
  bool have = false;
  Integer pow = 1;
  for (int j = 0; j <= config.value_bits && pow <= v_max; ++j, pow <<= 1) {
    std::vector<OneDItem> rounded;
    for (const OneDItem& it : feasible) {
      Integer rv = it.value.to_integer() >> static_cast<unsigned long>(j);
      if (rv > cap_u) rv = cap_u;
      if (rv > 0) rounded.push_back({it.id, it.weight, Rational(rv)});
    }
    const OneDSolution run = dp_exact(rounded, capacity_sq, config);
    OneDSolution scored = rescore(feasible, run.selected);
    const Integer score = scored.total_value.to_integer();
    if (!have || score > best_score) {
      best = std::move(scored);
      best_score = score;
      have = true;
    }
  }
  return best;
}

}  // namespace ckp

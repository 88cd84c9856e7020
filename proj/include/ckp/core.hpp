#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckp/rational.hpp"

namespace ckp {

/// A demand in the first quadrant of the complex plane. When the owning
/// instance carries im_scale_sq != 1, `im` is a rational multiplier and the
/// true imaginary part is im * sqrt(im_scale_sq); all feasibility tests go
/// through squared aggregates, so everything stays rational either way.
struct ComplexDemand {
  Rational re;
  Rational im;
};

/// dR + dI: the projection of a demand onto the pi/4 line, scaled by sqrt(2).
/// The sqrt(2) factor cancels against the matching factor in the capacity
/// (C/sqrt(2) becomes C), which is the scaling convention used throughout.
inline Rational scaled_projection(const ComplexDemand& d) { return d.re + d.im; }

struct Item {
  int id = 0;
  ComplexDemand demand;
  Rational value;
};

/// Capacity description. The canonical datum is C^2 (always rational even
/// when C itself is irrational, e.g. in the equipartition reduction); C is
/// kept alongside whenever it is rational, since the GC-KP subroutine needs
/// it as an LP right-hand side. Optional per-axis caps turn C-KP into GC-KP.
class CapacitySpec {
 public:
  /// Unit capacity; placeholder so aggregates stay default-constructible.
  CapacitySpec() : magnitude_sq_(1), magnitude_(Rational(1)) {}

  static CapacitySpec from_magnitude(const Rational& c);
  static CapacitySpec from_magnitude_sq(const Rational& c_sq);

  CapacitySpec with_axis_caps(const Rational& cap_re, const Rational& cap_im) const;

  const Rational& magnitude_sq() const { return magnitude_sq_; }
  const std::optional<Rational>& magnitude_exact() const { return magnitude_; }
  const std::optional<Rational>& cap_re() const { return cap_re_; }
  const std::optional<Rational>& cap_im() const { return cap_im_; }
  bool has_axis_caps() const { return cap_re_.has_value(); }

 private:
  Rational magnitude_sq_;
  std::optional<Rational> magnitude_;
  std::optional<Rational> cap_re_;
  std::optional<Rational> cap_im_;
};

enum class InstanceKind { OneKP, CKP, GCKP };

std::string kind_name(InstanceKind kind);

struct Instance {
  std::vector<Item> items;
  CapacitySpec capacity;
  InstanceKind kind = InstanceKind::CKP;
  /// Imaginary parts are im * sqrt(im_scale_sq); 1 for ordinary instances.
  Rational im_scale_sq = Rational(1);

  bool symbolic_imaginary() const { return im_scale_sq != Rational(1); }
  int size() const { return static_cast<int>(items.size()); }
};

/// Throws ContractError if any type invariant fails (negative demand,
/// nonpositive value, non-contiguous ids, kind/capacity mismatch, ...).
void validate_instance(const Instance& inst);

struct Solution {
  std::vector<int> selected;  // sorted item ids
  Rational total_value;
  ComplexDemand total_demand;
};

enum class Region { D1, D2, Infeasible };

std::string region_name(Region r);

/// Classifies a single literal demand against the capacity: D1 is the closed
/// triangle dR+dI <= C (per-axis caps honored), D2 the circular segment
/// beyond the chord but inside the quarter disk. Comparisons against the
/// possibly irrational C are squared.
Region classify_region(const ComplexDemand& d, const CapacitySpec& capacity);

/// Exact feasibility of aggregate demand sums against an instance's
/// capacity: (sum dR)^2 + im_scale_sq*(sum dI)^2 <= C^2 plus axis caps.
bool sums_feasible(const Instance& inst, const Rational& re_sum, const Rational& im_sum);

/// Feasibility of a selection. Unknown or duplicate ids -> ContractError.
bool is_feasible(const Instance& inst, const std::vector<int>& selected);

/// Builds a Solution for the given ids, recomputing value and demand totals.
Solution make_solution(const Instance& inst, std::vector<int> selected);

/// The suite-wide tie-break: higher total value first, then smaller
/// scaled-projection sum, then lexicographically smaller id set. Returns
/// true when a is strictly better than b.
bool solution_better(const Instance& inst, const Solution& a, const Solution& b);

struct PreprocessResult {
  Instance instance;
  std::vector<int> old_ids;  // old_ids[new_id] = id in the original instance
};

/// Drops every item whose singleton selection is infeasible and re-indexes
/// ids contiguously.
PreprocessResult preprocess(const Instance& inst);

/// True when every singleton selection is feasible (the precondition of the
/// approximation algorithms).
bool is_preprocessed(const Instance& inst);

inline constexpr int kDefaultOracleLimit = 20;

/// Exhaustive oracle: maximizes total value over all feasible subsets, ties
/// per the core tie-break. Refuses instances above the limit.
Solution brute_force_opt(const Instance& inst, int limit = kDefaultOracleLimit);

}  // namespace ckp

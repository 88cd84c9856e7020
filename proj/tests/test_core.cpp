#include <doctest.h>

#include "ckp/core.hpp"
#include "ckp/generate.hpp"
#include "helpers.hpp"

using namespace ckp;

namespace {

Instance ckp_instance(std::vector<std::pair<std::pair<long, long>, long>> items, long c_sq) {
  Instance inst;
  inst.kind = InstanceKind::CKP;
  inst.capacity = CapacitySpec::from_magnitude_sq(Rational(c_sq));
  int id = 0;
  for (const auto& [demand, value] : items) {
    inst.items.push_back({id++, {Rational(demand.first), Rational(demand.second)}, Rational(value)});
  }
  validate_instance(inst);
  return inst;
}

}  // namespace

TEST_CASE("feasibility of selections") {
  const Instance one = ckp_instance({{{3, 4}, 1}}, 25);
  CHECK(is_feasible(one, {0}));  // 9 + 16 = 25, boundary equality

  const Instance two = ckp_instance({{{3, 4}, 1}, {{1, 0}, 1}}, 25);
  CHECK(!is_feasible(two, {0, 1}));  // sum (4,4): 32 > 25
  CHECK(is_feasible(two, {}));
  CHECK_THROWS_AS(is_feasible(two, {5}), ContractError);
  CHECK_THROWS_AS(is_feasible(two, {0, 0}), ContractError);
}

TEST_CASE("region classification") {
  const CapacitySpec cap = CapacitySpec::from_magnitude_sq(Rational(25));
  CHECK(classify_region({Rational(3), Rational(4)}, cap) == Region::D2);  // 49 > 25, 25 <= 25
  CHECK(classify_region({Rational(2), Rational(2)}, cap) == Region::D1);  // 16 <= 25
  CHECK(classify_region({Rational(4), Rational(4)}, cap) == Region::Infeasible);
  CHECK(classify_region({Rational(0), Rational(0)}, cap) == Region::D1);

  const CapacitySpec boxed = cap.with_axis_caps(Rational(3), Rational(4));
  CHECK(classify_region({Rational(3), Rational(4)}, boxed) == Region::D2);
  const CapacitySpec tight = cap.with_axis_caps(Rational(2), Rational(4));
  CHECK(classify_region({Rational(3), Rational(4)}, tight) == Region::Infeasible);
}

TEST_CASE("scaled projection") {
  CHECK(scaled_projection({Rational(3), Rational(4)}) == Rational(7));
  CHECK(scaled_projection({Rational(0), Rational(0)}) == Rational(0));
  CHECK(scaled_projection({Rational(1, 2), Rational(1, 3)}) == Rational(5, 6));
}

TEST_CASE("projection is additive") {
  testing::TestRng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const ComplexDemand a{rng.rational(30, 8), rng.rational(30, 8)};
    const ComplexDemand b{rng.rational(30, 8), rng.rational(30, 8)};
    const ComplexDemand sum{a.re + b.re, a.im + b.im};
    CHECK(scaled_projection(a) + scaled_projection(b) == scaled_projection(sum));
  }
}

TEST_CASE("preprocess removes infeasible singletons") {
  const Instance inst = ckp_instance({{{3, 4}, 1}, {{6, 6}, 1}}, 25);
  const PreprocessResult pre = preprocess(inst);
  CHECK(pre.instance.size() == 1);
  CHECK(pre.instance.items[0].demand.re == Rational(3));
  CHECK(pre.old_ids == std::vector<int>{0});
  CHECK(is_preprocessed(pre.instance));
  CHECK(!is_preprocessed(inst));

  const Instance fine = ckp_instance({{{1, 1}, 1}, {{2, 0}, 2}}, 25);
  CHECK(preprocess(fine).instance.size() == 2);

  const Instance hopeless = ckp_instance({{{9, 9}, 1}}, 25);
  CHECK(preprocess(hopeless).instance.size() == 0);
}

TEST_CASE("brute force oracle") {
  const Instance inst = ckp_instance({{{2, 0}, 3}, {{3, 0}, 4}, {{4, 0}, 5}}, 25);
  const Solution best = brute_force_opt(inst);
  CHECK(best.selected == std::vector<int>{0, 1});
  CHECK(best.total_value == Rational(7));

  const Instance single = ckp_instance({{{3, 4}, 9}}, 25);
  CHECK(brute_force_opt(single).selected == std::vector<int>{0});

  const Instance none = ckp_instance({{{9, 9}, 5}}, 25);
  CHECK(brute_force_opt(none).selected.empty());
  CHECK(brute_force_opt(none).total_value == Rational(0));
}

TEST_CASE("brute force refuses oversized instances") {
  Instance inst;
  inst.kind = InstanceKind::CKP;
  inst.capacity = CapacitySpec::from_magnitude_sq(Rational(10000));
  for (int k = 0; k < 21; ++k) {
    inst.items.push_back({k, {Rational(1), Rational(0)}, Rational(1)});
  }
  CHECK_THROWS_AS(brute_force_opt(inst), ResourceError);
  CHECK(brute_force_opt(inst, 21).selected.size() == 21);
}

TEST_CASE("tie-break picks the lexicographically smallest winner") {
  const Instance inst = ckp_instance({{{1, 0}, 5}, {{1, 0}, 5}}, 1);
  const Solution best = brute_force_opt(inst);
  CHECK(best.selected == std::vector<int>{0});
}

TEST_CASE("brute force agrees with the independent bitmask oracle") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = generate_instance(seed, 1 + static_cast<int>(seed % 12),
                                            InstanceKind::CKP, GenProfile::Mixed);
    const Solution a = brute_force_opt(inst);
    const Solution b = testing::bitmask_opt(inst);
    CHECK(a.selected == b.selected);
    CHECK(a.total_value == b.total_value);
    CHECK(is_feasible(inst, a.selected));
    const Solution recomputed = make_solution(inst, a.selected);
    CHECK(recomputed.total_value == a.total_value);
    CHECK(recomputed.total_demand.re == a.total_demand.re);
    CHECK(recomputed.total_demand.im == a.total_demand.im);
  }
}

TEST_CASE("feasible selections are downward closed") {
  testing::TestRng rng(17);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Instance inst = generate_instance(seed, 8, InstanceKind::CKP, GenProfile::Mixed);
    const Solution best = brute_force_opt(inst);
    // Drop random subsets of the optimum and expect feasibility throughout.
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> subset;
      for (int id : best.selected) {
        if (rng.range(0, 1)) subset.push_back(id);
      }
      CHECK(is_feasible(inst, subset));
    }
  }
}

TEST_CASE("region label matches singleton feasibility") {
  for (std::uint64_t seed = 50; seed < 70; ++seed) {
    const Instance inst = generate_instance(seed, 6, InstanceKind::CKP, GenProfile::Mixed);
    for (const Item& item : inst.items) {
      const bool feasible = is_feasible(inst, {item.id});
      const Region region = classify_region(item.demand, inst.capacity);
      CHECK(feasible == (region != Region::Infeasible));
    }
  }
}

TEST_CASE("instance invariants are enforced") {
  Instance inst = ckp_instance({{{1, 1}, 1}}, 25);
  inst.items[0].value = Rational(0);
  CHECK_THROWS_AS(validate_instance(inst), ContractError);

  Instance negative = ckp_instance({{{1, 1}, 1}}, 25);
  negative.items[0].demand.re = Rational(-1);
  CHECK_THROWS_AS(validate_instance(negative), ContractError);

  Instance misnumbered = ckp_instance({{{1, 1}, 1}, {{1, 0}, 1}}, 25);
  misnumbered.items[1].id = 7;
  CHECK_THROWS_AS(validate_instance(misnumbered), ContractError);

  Instance onekp = ckp_instance({{{1, 1}, 1}}, 25);
  onekp.kind = InstanceKind::OneKP;
  CHECK_THROWS_AS(validate_instance(onekp), ContractError);

  CHECK_THROWS_AS(CapacitySpec::from_magnitude_sq(Rational(0)), ContractError);
  CHECK_THROWS_AS(CapacitySpec::from_magnitude(Rational(-2)), ContractError);
  CHECK_THROWS_AS(CapacitySpec().with_axis_caps(Rational(0), Rational(1)), ContractError);
}

TEST_CASE("capacity detects rational magnitudes") {
  const CapacitySpec from_c = CapacitySpec::from_magnitude(Rational(10));
  CHECK(from_c.magnitude_sq() == Rational(100));
  REQUIRE(from_c.magnitude_exact().has_value());
  CHECK(*from_c.magnitude_exact() == Rational(10));

  const CapacitySpec square = CapacitySpec::from_magnitude_sq(Rational(49, 4));
  REQUIRE(square.magnitude_exact().has_value());
  CHECK(*square.magnitude_exact() == Rational(7, 2));

  const CapacitySpec irrational = CapacitySpec::from_magnitude_sq(Rational(40));
  CHECK(!irrational.magnitude_exact().has_value());
}

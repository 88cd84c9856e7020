#include <doctest.h>

#include "ckp/generate.hpp"
#include "ckp/io.hpp"

using namespace ckp;

TEST_CASE("generation is deterministic in the seed") {
  const Instance a = generate_instance(123, 7, InstanceKind::CKP, GenProfile::Mixed);
  const Instance b = generate_instance(123, 7, InstanceKind::CKP, GenProfile::Mixed);
  CHECK(serialize_instance(a) == serialize_instance(b));
  const Instance other = generate_instance(124, 7, InstanceKind::CKP, GenProfile::Mixed);
  CHECK(serialize_instance(a) != serialize_instance(other));
}

TEST_CASE("d2-heavy instances contain a segment demand") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Instance inst = generate_instance(seed, 5, InstanceKind::CKP, GenProfile::D2Heavy);
    bool has_d2 = false;
    for (const Item& item : inst.items) {
      has_d2 = has_d2 || classify_region(item.demand, inst.capacity) == Region::D2;
    }
    CHECK(has_d2);
  }
}

TEST_CASE("generated demands stay inside the quarter disk") {
  for (std::uint64_t seed = 60; seed <= 90; ++seed) {
    const Instance inst = generate_instance(seed, 6, InstanceKind::CKP, GenProfile::Mixed);
    for (const Item& item : inst.items) {
      CHECK(classify_region(item.demand, inst.capacity) != Region::Infeasible);
      CHECK(item.value.is_integer());
      CHECK(item.value >= Rational(1));
      CHECK(item.value <= Rational(100));
    }
  }
}

TEST_CASE("kind shapes and bad arguments") {
  const Instance one = generate_instance(5, 4, InstanceKind::OneKP, GenProfile::Mixed);
  for (const Item& item : one.items) CHECK(item.demand.im.is_zero());

  const Instance boxed = generate_instance(5, 4, InstanceKind::GCKP, GenProfile::Mixed);
  CHECK(boxed.capacity.has_axis_caps());

  CHECK_THROWS_AS(generate_instance(5, 0, InstanceKind::CKP, GenProfile::Mixed), ContractError);
  CHECK_THROWS_AS(parse_profile("bogus"), ContractError);
  CHECK(parse_profile("d1-heavy") == GenProfile::D1Heavy);
  CHECK(profile_name(GenProfile::D2Heavy) == "d2-heavy");
}

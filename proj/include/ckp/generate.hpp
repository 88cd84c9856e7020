#pragma once

#include <cstdint>
#include <string>

#include "ckp/core.hpp"

namespace ckp {

/// Region mix of the generated demands, chosen to exercise all three cases
/// of the two-candidate analysis (optimum in the triangle, a D2 demand
/// present, optimum in the segment with every demand in the triangle).
enum class GenProfile { D1Heavy, D2Heavy, Mixed };

GenProfile parse_profile(const std::string& text);
std::string profile_name(GenProfile profile);

/// Deterministic instance generator: demands are small-denominator rationals
/// inside the quarter disk, values uniform integers in [1, 100]. The same
/// (seed, n, kind, profile) always produces the same instance, independent
/// of platform. d2-heavy output is post-checked to contain a D2 demand.
Instance generate_instance(std::uint64_t seed, int n, InstanceKind kind, GenProfile profile);

}  // namespace ckp

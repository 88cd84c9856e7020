#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ckp/core.hpp"

namespace ckp {

/// Parses an instance document (JSON, UTF-8). Every numeric field is an
/// integer or a "p/q" string; floating-point literals, unknown fields and
/// duplicate ids are rejected with field context. Exactly one of "c" and
/// "c_sq" describes the capacity; "c_re"/"c_im" add GC-KP axis caps; an
/// optional "im_scale_sq" marks symbolic-imaginary instances.
Instance parse_instance(const std::string& document);

/// Canonical serialization; parse(serialize(inst)) gives an equivalent
/// instance, with rationals rendered as "p/q" strings (never floats).
std::string serialize_instance(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

struct RunReport {
  std::string algorithm;
  std::optional<Rational> epsilon;
  std::vector<int> selected;
  Rational value;
  ComplexDemand total_demand;
  std::optional<std::map<int, Integer>> payments;
  std::optional<Rational> oracle;
  std::int64_t micros = 0;
};

/// Deterministic report JSON; wall time is included only when asked for, so
/// that solver output files are byte-identical across runs.
std::string serialize_report(const RunReport& report, bool include_timing = false);

}  // namespace ckp

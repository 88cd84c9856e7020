#include "ckp/generate.hpp"

#include <random>

namespace ckp {

namespace {

// Thin deterministic layer over mt19937_64: the engine's sequence is pinned
// by the standard, and the rejection mapping below avoids the
// implementation-defined std::uniform_int_distribution.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound == 0 ? 0 : UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = 0;
    do {
      x = engine_();
    } while (bound != 0 && x >= limit);
    return bound == 0 ? 0 : x % bound;
  }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(long num, long den) { return static_cast<long>(below(den)) < num; }

 private:
  std::mt19937_64 engine_;
};

const long kDenominators[] = {1, 2, 3, 4, 5, 6, 8};

ComplexDemand sample_d1(SeededRng& rng, long c) {
  const long q = kDenominators[rng.below(std::size(kDenominators))];
  const long budget = c * q;
  const long a = rng.range(0, budget);
  const long b = rng.range(0, budget - a);
  return {Rational(Integer(a), Integer(q)), Rational(Integer(b), Integer(q))};
}

ComplexDemand d2_fallback(long c) {
  // (3C/5, 4C/5): on the circle, projection 7C/5 > C.
  return {Rational(Integer(3 * c), Integer(5)), Rational(Integer(4 * c), Integer(5))};
}

ComplexDemand sample_d2(SeededRng& rng, long c, const CapacitySpec& capacity) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    const long q = kDenominators[rng.below(std::size(kDenominators))];
    const long budget = c * q;
    const ComplexDemand d{Rational(Integer(rng.range(0, budget)), Integer(q)),
                          Rational(Integer(rng.range(0, budget)), Integer(q))};
    if (classify_region(d, capacity) == Region::D2) return d;
  }
  return d2_fallback(c);
}

}  // namespace

GenProfile parse_profile(const std::string& text) {
  if (text == "d1-heavy") return GenProfile::D1Heavy;
  if (text == "d2-heavy") return GenProfile::D2Heavy;
  if (text == "mixed") return GenProfile::Mixed;
  throw ContractError("unknown profile \"" + text + "\" (want d1-heavy, d2-heavy or mixed)");
}

std::string profile_name(GenProfile profile) {
  switch (profile) {
    case GenProfile::D1Heavy: return "d1-heavy";
    case GenProfile::D2Heavy: return "d2-heavy";
    case GenProfile::Mixed: return "mixed";
  }
  return "?";
}

Instance generate_instance(std::uint64_t seed, int n, InstanceKind kind, GenProfile profile) {
  if (n < 1) throw ContractError("generate_instance needs n >= 1");
  SeededRng rng(seed);

  const long c = rng.range(8, 40);
  Instance inst;
  inst.kind = kind;
  inst.capacity = CapacitySpec::from_magnitude(Rational(Integer(c)));
  if (kind == InstanceKind::GCKP) {
    const long cap_re = rng.range((c + 1) / 2, c);
    const long cap_im = rng.range((c + 1) / 2, c);
    inst.capacity =
        inst.capacity.with_axis_caps(Rational(Integer(cap_re)), Rational(Integer(cap_im)));
  }

  for (int k = 0; k < n; ++k) {
    ComplexDemand demand;
    if (kind == InstanceKind::OneKP) {
      const long q = kDenominators[rng.below(std::size(kDenominators))];
      demand = {Rational(Integer(rng.range(0, c * q)), Integer(q)), Rational(0)};
    } else {
      bool want_d2 = false;
      switch (profile) {
        case GenProfile::D1Heavy: want_d2 = false; break;
        case GenProfile::D2Heavy: want_d2 = rng.chance(1, 2); break;
        case GenProfile::Mixed: want_d2 = rng.chance(1, 3); break;
      }
      demand = want_d2 ? sample_d2(rng, c, inst.capacity) : sample_d1(rng, c);
    }
    inst.items.push_back({k, std::move(demand), Rational(rng.range(1, 100))});
  }

  if (kind == InstanceKind::CKP && profile == GenProfile::D2Heavy) {
    bool has_d2 = false;
    for (const Item& item : inst.items) {
      has_d2 = has_d2 || classify_region(item.demand, inst.capacity) == Region::D2;
    }
    if (!has_d2) inst.items.back().demand = d2_fallback(c);
  }

  validate_instance(inst);
  return inst;
}

}  // namespace ckp

#include <doctest.h>

#include "ckp/ckp_alg.hpp"
#include "ckp/generate.hpp"
#include "ckp/io.hpp"

using namespace ckp;

namespace {

const char* kMinimal = R"({
  "kind": "ckp",
  "c": "10",
  "items": [{"id": 0, "re": "3", "im": 4, "value": "5"}]
})";

bool equivalent(const Instance& a, const Instance& b) {
  if (a.kind != b.kind || a.size() != b.size()) return false;
  if (a.capacity.magnitude_sq() != b.capacity.magnitude_sq()) return false;
  if (a.capacity.has_axis_caps() != b.capacity.has_axis_caps()) return false;
  if (a.capacity.has_axis_caps() &&
      (*a.capacity.cap_re() != *b.capacity.cap_re() || *a.capacity.cap_im() != *b.capacity.cap_im())) {
    return false;
  }
  if (a.im_scale_sq != b.im_scale_sq) return false;
  for (int k = 0; k < a.size(); ++k) {
    if (a.items[k].demand.re != b.items[k].demand.re) return false;
    if (a.items[k].demand.im != b.items[k].demand.im) return false;
    if (a.items[k].value != b.items[k].value) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("minimal document parses") {
  const Instance inst = parse_instance(kMinimal);
  CHECK(inst.size() == 1);
  CHECK(inst.kind == InstanceKind::CKP);
  CHECK(inst.capacity.magnitude_sq() == Rational(100));
  CHECK(inst.items[0].demand.im == Rational(4));
}

TEST_CASE("symbolic-imaginary documents are oracle-only") {
  const std::string doc = R"({
    "kind": "ckp",
    "c_sq": "40",
    "im_scale_sq": "5/3",
    "items": [
      {"id": 0, "re": "1", "im": "3", "value": "1"},
      {"id": 1, "re": "4", "im": "0", "value": "1"}
    ]
  })";
  const Instance inst = parse_instance(doc);
  CHECK(inst.symbolic_imaginary());
  // The oracle accepts it...
  const Solution best = brute_force_opt(inst);
  CHECK(best.total_value == Rational(2));  // {0,1}: 25 + (5/3)*9 = 40 <= 40
  // ...the approximation algorithms do not.
  CHECK_THROWS_AS(alg_a(inst, Rational(1, 2)), ContractError);
}

TEST_CASE("documents are rejected with context") {
  const auto rejects = [](const std::string& doc, const char* needle) {
    try {
      parse_instance(doc);
      FAIL_CHECK("expected ParseError for " << needle);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  rejects(R"({"kind": "ckp", "c": "10", "items": [{"id": 0, "re": "1", "im": "0", "value": "0"}]})",
          "value");
  rejects(R"({"kind": "ckp", "c": "10", "items": [
            {"id": 0, "re": "1", "im": "0", "value": "1"},
            {"id": 0, "re": "2", "im": "0", "value": "1"}]})",
          "duplicate");
  rejects(R"({"kind": "ckp", "c": "10", "wat": 1, "items": []})", "unknown field");
  rejects(R"({"kind": "ckp", "c": "10", "items": [{"id": 0, "re": 1.5, "im": "0", "value": "1"}]})",
          "re");
  rejects(R"({"kind": "ckp", "items": []})", "capacity");
  rejects(R"({"kind": "ckp", "c": "0", "items": []})", "positive");
  rejects(R"({"kind": "ckp", "c": "-3", "items": []})", "positive");
  rejects(R"({"kind": "ckp", "c": "10", "c_sq": "100", "items": []})", "capacity");
  rejects(R"({"kind": "ckp", "c": "10", "c_re": "5", "items": []})", "c_re");
  rejects(R"({"kind": "ckp", "c": "10", "items": [{"id": 0, "re": "-1", "im": "0", "value": "1"}]})",
          "nonnegative");
  rejects(R"({"kind": "gckp", "c": "10", "items": []})", "gckp");
  rejects(R"({"kind": "1kp", "c": "10", "items": [{"id": 0, "re": "1", "im": "2", "value": "1"}]})",
          "1kp");
  rejects(R"({"kind": "ckp", "c": "10", "items": [{"id": 1, "re": "1", "im": "0", "value": "1"}]})",
          "contiguous");
  rejects("not json at all", "JSON");
}

TEST_CASE("round trip is identity on generated instances") {
  for (std::uint64_t seed = 900; seed < 930; ++seed) {
    const InstanceKind kind = seed % 3 == 0   ? InstanceKind::OneKP
                              : seed % 3 == 1 ? InstanceKind::CKP
                                              : InstanceKind::GCKP;
    const Instance inst = generate_instance(seed, 5, kind, GenProfile::Mixed);
    const Instance back = parse_instance(serialize_instance(inst));
    CHECK(equivalent(inst, back));
    CHECK(serialize_instance(back) == serialize_instance(inst));
  }
}

TEST_CASE("reports serialize deterministically") {
  RunReport report;
  report.algorithm = "alg-b";
  report.epsilon = Rational(1, 2);
  report.selected = {0};
  report.value = Rational(10);
  report.total_demand = {Rational(7), Rational(7)};
  report.payments = std::map<int, Integer>{{0, Integer(9)}, {1, Integer(0)}};
  report.micros = 1234;

  const std::string text = serialize_report(report);
  CHECK(text.find("\"micros\"") == std::string::npos);
  CHECK(text == serialize_report(report));
  CHECK(serialize_report(report, true).find("\"micros\"") != std::string::npos);
  CHECK(text.find("\"payment\": \"9\"") != std::string::npos);
}

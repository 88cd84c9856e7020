#include "ckp/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ckp {

namespace {

using Json = nlohmann::ordered_json;

Rational parse_number(const Json& node, const std::string& where) {
  if (node.is_string()) {
    try {
      return Rational::parse(node.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (node.is_number_integer()) {
    return Rational(Integer(static_cast<long>(node.get<std::int64_t>())));
  }
  if (node.is_number_unsigned()) {
    std::ostringstream out;
    out << node.get<std::uint64_t>();
    return Rational(Integer(out.str(), 10));
  }
  throw ParseError(where + ": expected an integer or a \"p/q\" string");
}

void check_keys(const Json& node, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : node.items()) {
    if (!allowed.count(key)) throw ParseError(where + ": unknown field \"" + key + "\"");
  }
}

InstanceKind parse_kind(const std::string& text) {
  if (text == "1kp") return InstanceKind::OneKP;
  if (text == "ckp") return InstanceKind::CKP;
  if (text == "gckp") return InstanceKind::GCKP;
  throw ParseError("kind: expected \"1kp\", \"ckp\" or \"gckp\", got \"" + text + "\"");
}

}  // namespace

Instance parse_instance(const std::string& document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
  check_keys(doc, {"kind", "c", "c_sq", "c_re", "c_im", "im_scale_sq", "items"}, "instance");
  for (const char* required : {"kind", "items"}) {
    if (!doc.contains(required)) {
      throw ParseError(std::string("instance: missing field \"") + required + "\"");
    }
  }
  if (!doc["kind"].is_string()) throw ParseError("kind: expected a string");

  Instance inst;
  inst.kind = parse_kind(doc["kind"].get<std::string>());

  const bool has_c = doc.contains("c");
  const bool has_c_sq = doc.contains("c_sq");
  if (has_c == has_c_sq) {
    throw ParseError("capacity: exactly one of \"c\" and \"c_sq\" is required");
  }
  try {
    inst.capacity = has_c ? CapacitySpec::from_magnitude(parse_number(doc["c"], "c"))
                          : CapacitySpec::from_magnitude_sq(parse_number(doc["c_sq"], "c_sq"));
    if (doc.contains("c_re") != doc.contains("c_im")) {
      throw ParseError("capacity: \"c_re\" and \"c_im\" must appear together");
    }
    if (doc.contains("c_re")) {
      inst.capacity = inst.capacity.with_axis_caps(parse_number(doc["c_re"], "c_re"),
                                                   parse_number(doc["c_im"], "c_im"));
    }
    if (doc.contains("im_scale_sq")) {
      inst.im_scale_sq = parse_number(doc["im_scale_sq"], "im_scale_sq");
      if (inst.im_scale_sq.is_negative()) throw ParseError("im_scale_sq: must be nonnegative");
    }
  } catch (const ContractError& e) {
    throw ParseError(std::string("capacity: ") + e.what());
  }

  if (!doc["items"].is_array()) throw ParseError("items: expected an array");
  std::vector<Item> items;
  std::set<int> seen;
  int index = 0;
  for (const Json& node : doc["items"]) {
    const std::string where = "items[" + std::to_string(index++) + "]";
    if (!node.is_object()) throw ParseError(where + ": expected an object");
    check_keys(node, {"id", "re", "im", "value"}, where);
    for (const char* required : {"id", "re", "im", "value"}) {
      if (!node.contains(required)) {
        throw ParseError(where + ": missing field \"" + required + "\"");
      }
    }
    const Rational id_number = parse_number(node["id"], where + ".id");
    if (!id_number.is_integer() || id_number.is_negative() ||
        !id_number.numerator().fits_sint_p()) {
      throw ParseError(where + ".id: expected a small nonnegative integer");
    }
    const int id = static_cast<int>(id_number.to_integer().get_si());
    if (!seen.insert(id).second) {
      throw ParseError(where + ": duplicate item id " + std::to_string(id));
    }
    Item item;
    item.id = id;
    item.demand.re = parse_number(node["re"], where + ".re");
    item.demand.im = parse_number(node["im"], where + ".im");
    item.value = parse_number(node["value"], where + ".value");
    if (item.demand.re.is_negative() || item.demand.im.is_negative()) {
      throw ParseError(where + ": demand components must be nonnegative");
    }
    if (!item.value.is_positive()) {
      throw ParseError(where + ".value: must be positive");
    }
    items.push_back(std::move(item));
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.id < b.id; });
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (items[k].id != static_cast<int>(k)) {
      throw ParseError("items: ids must form a contiguous range 0..n-1");
    }
  }
  inst.items = std::move(items);

  try {
    validate_instance(inst);
  } catch (const ContractError& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  Json doc;
  doc["kind"] = kind_name(inst.kind);
  if (inst.capacity.magnitude_exact()) {
    doc["c"] = inst.capacity.magnitude_exact()->str();
  } else {
    doc["c_sq"] = inst.capacity.magnitude_sq().str();
  }
  if (inst.capacity.has_axis_caps()) {
    doc["c_re"] = inst.capacity.cap_re()->str();
    doc["c_im"] = inst.capacity.cap_im()->str();
  }
  if (inst.symbolic_imaginary()) {
    doc["im_scale_sq"] = inst.im_scale_sq.str();
  }
  doc["items"] = Json::array();
  for (const Item& item : inst.items) {
    Json node;
    node["id"] = item.id;
    node["re"] = item.demand.re.str();
    node["im"] = item.demand.im.str();
    node["value"] = item.value.str();
    doc["items"].push_back(std::move(node));
  }
  return doc.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write instance file: " + path);
  out << serialize_instance(inst);
}

std::string serialize_report(const RunReport& report, bool include_timing) {
  Json doc;
  doc["algorithm"] = report.algorithm;
  if (report.epsilon) doc["epsilon"] = report.epsilon->str();
  doc["selected"] = report.selected;
  doc["value"] = report.value.str();
  doc["total_re"] = report.total_demand.re.str();
  doc["total_im"] = report.total_demand.im.str();
  if (report.payments) {
    Json payments = Json::array();
    for (const auto& [agent, payment] : *report.payments) {
      Json node;
      node["agent"] = agent;
      node["payment"] = payment.get_str();
      payments.push_back(std::move(node));
    }
    doc["payments"] = std::move(payments);
  }
  if (report.oracle) doc["oracle"] = report.oracle->str();
  if (include_timing) doc["micros"] = report.micros;
  return doc.dump(2) + "\n";
}

}  // namespace ckp

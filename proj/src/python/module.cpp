#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ckp/ckp_alg.hpp"
#include "ckp/gckp.hpp"
#include "ckp/generate.hpp"
#include "ckp/hardness.hpp"
#include "ckp/io.hpp"
#include "ckp/mechanism.hpp"

namespace py = pybind11;
using namespace ckp;

namespace {

// Exact big-integer crossing: GMP integer -> python int via its decimal text.
py::int_ to_py_int(const Integer& n) {
  PyObject* obj = PyLong_FromString(n.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

Rational rational_arg(const py::object& value) {
  if (py::isinstance<py::int_>(value)) {
    return Rational(Integer(py::str(value).cast<std::string>(), 10));
  }
  if (py::isinstance<py::str>(value)) {
    return Rational::parse(value.cast<std::string>());
  }
  throw ContractError("expected an int or an exact rational string like \"3/4\"");
}

InstanceKind kind_arg(const std::string& text) {
  if (text == "1kp") return InstanceKind::OneKP;
  if (text == "ckp") return InstanceKind::CKP;
  if (text == "gckp") return InstanceKind::GCKP;
  throw ContractError("unknown kind \"" + text + "\"");
}

py::dict solution_dict(const Solution& s) {
  py::dict out;
  out["selected"] = s.selected;
  out["value"] = s.total_value.str();
  out["total_re"] = s.total_demand.re.str();
  out["total_im"] = s.total_demand.im.str();
  return out;
}

std::vector<AgentType> profile_of(const Instance& inst) {
  std::vector<AgentType> profile;
  for (const Item& item : inst.items) {
    profile.push_back({item.demand, item.value.to_integer()});
  }
  return profile;
}

std::vector<OneDItem> one_d_items(const std::vector<py::object>& weights,
                                  const std::vector<py::object>& values) {
  if (weights.size() != values.size()) {
    throw ContractError("weights and values must have equal length");
  }
  std::vector<OneDItem> items;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    items.push_back({static_cast<int>(k), OneDWeight::of(rational_arg(weights[k])),
                     rational_arg(values[k])});
  }
  return items;
}

py::dict one_d_dict(const OneDSolution& s) {
  py::dict out;
  out["selected"] = s.selected;
  out["value"] = s.total_value.str();
  out["weight"] = s.total_weight.full_capacity ? std::string("capacity")
                                               : s.total_weight.amount.str();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-rational solvers and a truthful mechanism for the complex-demand knapsack";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Instance>(m, "Instance")
      .def_property_readonly("n", &Instance::size)
      .def_property_readonly("kind", [](const Instance& inst) { return kind_name(inst.kind); })
      .def_property_readonly("symbolic_imaginary", &Instance::symbolic_imaginary)
      .def_property_readonly("c_sq",
                             [](const Instance& inst) { return inst.capacity.magnitude_sq().str(); })
      .def_property_readonly("items",
                             [](const Instance& inst) {
                               py::list items;
                               for (const Item& item : inst.items) {
                                 py::dict node;
                                 node["id"] = item.id;
                                 node["re"] = item.demand.re.str();
                                 node["im"] = item.demand.im.str();
                                 node["value"] = item.value.str();
                                 items.append(std::move(node));
                               }
                               return items;
                             })
      .def("__repr__", [](const Instance& inst) {
        return "<ckpsolve.Instance kind=" + kind_name(inst.kind) + " n=" +
               std::to_string(inst.size()) + ">";
      });

  m.def("parse_instance", &parse_instance, py::arg("document"));
  m.def("serialize_instance", &serialize_instance, py::arg("instance"));
  m.def(
      "generate_instance",
      [](std::uint64_t seed, int n, const std::string& kind, const std::string& profile) {
        return generate_instance(seed, n, kind_arg(kind), parse_profile(profile));
      },
      py::arg("seed"), py::arg("n"), py::arg("kind") = "ckp", py::arg("profile") = "mixed");

  m.def("is_feasible", &is_feasible, py::arg("instance"), py::arg("selected"));
  m.def(
      "classify_region",
      [](const Instance& inst, int item) {
        if (item < 0 || item >= inst.size()) throw ContractError("unknown item id");
        return region_name(classify_region(inst.items[item].demand, inst.capacity));
      },
      py::arg("instance"), py::arg("item"));
  m.def(
      "preprocess",
      [](const Instance& inst) {
        PreprocessResult pre = preprocess(inst);
        return py::make_tuple(pre.instance, pre.old_ids);
      },
      py::arg("instance"));
  m.def(
      "brute_force_opt",
      [](const Instance& inst, int limit) { return solution_dict(brute_force_opt(inst, limit)); },
      py::arg("instance"), py::arg("limit") = kDefaultOracleLimit);

  m.def(
      "alg_a",
      [](const Instance& inst, const py::object& eps) {
        return solution_dict(alg_a(inst, rational_arg(eps)));
      },
      py::arg("instance"), py::arg("epsilon"));
  m.def(
      "alg_b",
      [](const Instance& inst, const py::object& eps) {
        return solution_dict(alg_b(inst, rational_arg(eps)));
      },
      py::arg("instance"), py::arg("epsilon"));
  m.def(
      "alg_c",
      [](const Instance& inst, const py::object& eps) {
        return solution_dict(alg_c(inst, rational_arg(eps)));
      },
      py::arg("instance"), py::arg("epsilon"));

  m.def(
      "dp_exact",
      [](const std::vector<py::object>& weights, const std::vector<py::object>& values,
         const py::object& capacity_sq) {
        return one_d_dict(dp_exact(one_d_items(weights, values), rational_arg(capacity_sq)));
      },
      py::arg("weights"), py::arg("values"), py::arg("capacity_sq"));
  m.def(
      "fptas",
      [](const std::vector<py::object>& weights, const std::vector<py::object>& values,
         const py::object& capacity_sq, const py::object& eps) {
        return one_d_dict(
            fptas(one_d_items(weights, values), rational_arg(capacity_sq), rational_arg(eps)));
      },
      py::arg("weights"), py::arg("values"), py::arg("capacity_sq"), py::arg("epsilon"));
  m.def(
      "monotone_fptas",
      [](const std::vector<py::object>& weights, const std::vector<py::object>& values,
         const py::object& capacity_sq, const py::object& eps) {
        return one_d_dict(monotone_fptas(one_d_items(weights, values), rational_arg(capacity_sq),
                                         rational_arg(eps)));
      },
      py::arg("weights"), py::arg("values"), py::arg("capacity_sq"), py::arg("epsilon"));

  m.def(
      "split_subset",
      [](const std::vector<py::object>& entries, const py::object& c_sq,
         const py::object& c_prime) {
        std::vector<Rational> a;
        for (const py::object& e : entries) a.push_back(rational_arg(e));
        return split_subset(a, rational_arg(c_sq), rational_arg(c_prime));
      },
      py::arg("entries"), py::arg("c_sq"), py::arg("c_prime"));

  m.def(
      "run_mechanism",
      [](const Instance& inst, const py::object& eps) {
        if (inst.kind != InstanceKind::CKP || inst.symbolic_imaginary()) {
          throw ContractError("the mechanism needs a plain ckp instance");
        }
        const MechanismOutcome out = run_mechanism(profile_of(inst), inst.capacity,
                                                   rational_arg(eps));
        py::dict result;
        result["selected"] = out.selected;
        py::dict payments;
        for (const auto& [agent, payment] : out.payments) {
          payments[py::int_(agent)] = to_py_int(payment);
        }
        result["payments"] = std::move(payments);
        return result;
      },
      py::arg("instance"), py::arg("epsilon"));
  m.def(
      "critical_value",
      [](int agent, const Instance& inst, const py::object& eps) {
        return to_py_int(critical_value(agent, profile_of(inst), inst.capacity,
                                        rational_arg(eps)));
      },
      py::arg("agent"), py::arg("instance"), py::arg("epsilon"));
  m.def(
      "verify_ic",
      [](const Instance& inst, const py::object& eps) {
        py::list out;
        for (const IcViolation& v : verify_ic(profile_of(inst), inst.capacity,
                                              rational_arg(eps))) {
          py::dict node;
          node["agent"] = v.agent;
          node["kind"] = v.kind;
          node["detail"] = v.detail;
          out.append(std::move(node));
        }
        return out;
      },
      py::arg("instance"), py::arg("epsilon"));

  m.def(
      "verify_monotone",
      [](const std::string& algorithm, const Instance& inst, const py::object& eps,
         const std::vector<py::dict>& perturbations) {
        CkpAlgorithm handle;
        if (algorithm == "alg-a") {
          handle = [](const Instance& i, const Rational& e) { return alg_a(i, e); };
        } else if (algorithm == "alg-b") {
          handle = [](const Instance& i, const Rational& e) { return alg_b(i, e); };
        } else {
          throw ContractError("verify_monotone probes alg-a or alg-b");
        }
        std::vector<Perturbation> grid;
        for (const py::dict& p : perturbations) {
          Perturbation pert;
          pert.agent = p["agent"].cast<int>();
          pert.new_demand.re = rational_arg(p["re"]);
          pert.new_demand.im = rational_arg(p["im"]);
          pert.new_value = Integer(py::str(p["value"]).cast<std::string>(), 10);
          grid.push_back(std::move(pert));
        }
        py::list out;
        for (const MonotoneViolation& v : verify_monotone(handle, inst, rational_arg(eps), grid)) {
          py::dict node;
          node["perturbation"] = v.perturbation_index;
          node["agent"] = v.agent;
          out.append(std::move(node));
        }
        return out;
      },
      py::arg("algorithm"), py::arg("instance"), py::arg("epsilon"), py::arg("perturbations"));

  m.def(
      "reduce_equipartition",
      [](const std::vector<py::int_>& weights) {
        EquipartitionInput input;
        for (const py::int_& w : weights) {
          input.weights.emplace_back(py::str(w).cast<std::string>(), 10);
        }
        const ReducedInstance reduced = reduce_equipartition(input);
        py::dict out;
        out["instance"] = reduced.instance;
        out["m"] = reduced.cardinality_bound;
        out["beta_sq"] = reduced.beta_sq.str();
        out["c_sq"] = reduced.c_sq.str();
        out["answer"] = decide_ckp_cardinality(reduced);
        return out;
      },
      py::arg("weights"));
  m.def(
      "equipartition_brute",
      [](const std::vector<py::int_>& weights) {
        EquipartitionInput input;
        for (const py::int_& w : weights) {
          input.weights.emplace_back(py::str(w).cast<std::string>(), 10);
        }
        return equipartition_brute(input);
      },
      py::arg("weights"));

  m.def(
      "rational",
      [](const py::object& value) { return rational_arg(value).str(); },
      py::arg("value"), "Canonicalize an exact rational given as int or \"p/q\" string");
}

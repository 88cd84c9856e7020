#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "ckp/ckp_alg.hpp"
#include "ckp/gckp.hpp"
#include "ckp/generate.hpp"
#include "ckp/hardness.hpp"
#include "ckp/io.hpp"
#include "ckp/mechanism.hpp"

namespace {

using namespace ckp;

// Exit codes: 0 success, 1 usage or verification failure, 2 parse error,
// 3 contract error, 4 resource limit.
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitContract = 3;
constexpr int kExitResource = 4;

int oracle_limit() {
  if (const char* env = std::getenv("CKPSOLVE_ORACLE_LIMIT")) {
    try {
      return std::stoi(env);
    } catch (...) {
      throw ContractError("CKPSOLVE_ORACLE_LIMIT is not an integer");
    }
  }
  return kDefaultOracleLimit;
}

Rational parse_epsilon(const std::string& text) {
  const Rational eps = Rational::parse(text);
  if (!eps.is_positive() || eps >= Rational(1)) {
    throw ContractError("epsilon must lie in (0,1), got " + text);
  }
  return eps;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw ParseError("cannot write output file: " + output_path);
  out << text;
}

std::vector<OneDItem> as_one_d(const Instance& inst) {
  if (inst.kind != InstanceKind::OneKP) {
    throw ContractError("algorithm expects a 1kp instance, got " + kind_name(inst.kind));
  }
  std::vector<OneDItem> items;
  for (const Item& item : inst.items) {
    items.push_back({item.id, OneDWeight::of(item.demand.re), item.value});
  }
  return items;
}

const std::vector<std::string> kAlgorithms = {"alg-a",   "alg-b",      "alg-c",
                                              "dp-1kp",  "fptas-1kp",  "monotone-fptas"};

// Runs one algorithm on a raw instance, mapping ids back to file ids.
RunReport run_algorithm(const std::string& algorithm, const Instance& inst,
                        const std::optional<Rational>& epsilon) {
  const auto need_eps = [&]() -> const Rational& {
    if (!epsilon) throw ContractError(algorithm + " needs --epsilon");
    return *epsilon;
  };

  RunReport report;
  report.algorithm = algorithm;
  report.epsilon = epsilon;
  const auto started = std::chrono::steady_clock::now();

  std::vector<int> selected;
  if (algorithm == "alg-a" || algorithm == "alg-b" || algorithm == "alg-c") {
    const PreprocessResult pre = preprocess(inst);
    Solution s;
    if (algorithm == "alg-a") {
      s = alg_a(pre.instance, need_eps());
    } else if (algorithm == "alg-b") {
      s = alg_b(pre.instance, need_eps());
    } else {
      s = alg_c(pre.instance, need_eps());
    }
    for (int id : s.selected) selected.push_back(pre.old_ids[id]);
  } else if (algorithm == "dp-1kp") {
    if (epsilon) throw ContractError("dp-1kp is exact; drop --epsilon");
    selected = dp_exact(as_one_d(inst), inst.capacity.magnitude_sq()).selected;
  } else if (algorithm == "fptas-1kp") {
    selected = fptas(as_one_d(inst), inst.capacity.magnitude_sq(), need_eps()).selected;
  } else if (algorithm == "monotone-fptas") {
    selected = monotone_fptas(as_one_d(inst), inst.capacity.magnitude_sq(), need_eps()).selected;
  } else {
    throw ContractError("unknown algorithm \"" + algorithm + "\"");
  }
  std::sort(selected.begin(), selected.end());

  const Solution full = make_solution(inst, selected);
  report.selected = full.selected;
  report.value = full.total_value;
  report.total_demand = full.total_demand;
  report.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();

  // Round-trip check: the selection must stay feasible on re-load.
  const Instance reloaded = parse_instance(serialize_instance(inst));
  if (!is_feasible(reloaded, report.selected)) {
    throw std::logic_error("solver output failed the round-trip feasibility check");
  }
  return report;
}

int cmd_solve(const std::string& algorithm, const std::string& epsilon_text,
              const std::string& input, const std::string& output, bool with_oracle) {
  const Instance inst = load_instance(input);
  std::optional<Rational> epsilon;
  if (!epsilon_text.empty()) epsilon = parse_epsilon(epsilon_text);
  RunReport report = run_algorithm(algorithm, inst, epsilon);
  if (with_oracle) {
    report.oracle = brute_force_opt(inst, oracle_limit()).total_value;
  }
  emit(serialize_report(report), output);
  std::cerr << algorithm << ": value " << report.value.str() << ", " << report.selected.size()
            << " items, " << report.micros << " us\n";
  return 0;
}

int cmd_oracle(const std::string& input, const std::string& output) {
  const Instance inst = load_instance(input);
  const auto started = std::chrono::steady_clock::now();
  const Solution s = brute_force_opt(inst, oracle_limit());
  RunReport report;
  report.algorithm = "oracle";
  report.selected = s.selected;
  report.value = s.total_value;
  report.total_demand = s.total_demand;
  report.oracle = s.total_value;
  report.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
  emit(serialize_report(report), output);
  std::cerr << "oracle: value " << report.value.str() << "\n";
  return 0;
}

int cmd_payments(const std::string& epsilon_text, const std::string& input,
                 const std::string& output) {
  const Instance inst = load_instance(input);
  if (inst.kind != InstanceKind::CKP || inst.symbolic_imaginary()) {
    throw ContractError("payments needs a plain ckp instance");
  }
  std::vector<AgentType> profile;
  for (const Item& item : inst.items) {
    profile.push_back({item.demand, item.value.to_integer()});
  }
  const Rational epsilon = parse_epsilon(epsilon_text);
  const MechanismOutcome outcome = run_mechanism(profile, inst.capacity, epsilon);

  RunReport report;
  report.algorithm = "mechanism";
  report.epsilon = epsilon;
  report.selected = outcome.selected;
  const Solution s = make_solution(inst, outcome.selected);
  report.value = s.total_value;
  report.total_demand = s.total_demand;
  report.payments = outcome.payments;
  emit(serialize_report(report), output);
  std::cerr << "mechanism: " << outcome.selected.size() << " selected\n";
  return 0;
}

int cmd_reduce(const std::vector<long>& weight_args, const std::string& output) {
  EquipartitionInput input;
  for (long w : weight_args) input.weights.emplace_back(w);
  const ReducedInstance reduced = reduce_equipartition(input);
  if (!output.empty()) save_instance(reduced.instance, output);

  std::string answer = "undecided";
  try {
    answer = decide_ckp_cardinality(reduced, oracle_limit()) ? "yes" : "no";
  } catch (const ResourceError&) {
    // Too large for the decision solver; the reduced file is still written.
  }
  std::ostringstream out;
  out << "{\n  \"answer\": \"" << answer << "\",\n  \"m\": " << reduced.cardinality_bound
      << ",\n  \"beta_sq\": \"" << reduced.beta_sq.str() << "\",\n  \"c_sq\": \""
      << reduced.c_sq.str() << "\"\n}\n";
  std::cout << out.str();
  return 0;
}

int cmd_gen(std::uint64_t seed, int n, const std::string& kind_text, const std::string& profile,
            const std::string& output) {
  InstanceKind kind;
  if (kind_text == "1kp") {
    kind = InstanceKind::OneKP;
  } else if (kind_text == "ckp") {
    kind = InstanceKind::CKP;
  } else if (kind_text == "gckp") {
    kind = InstanceKind::GCKP;
  } else {
    throw ContractError("unknown kind \"" + kind_text + "\"");
  }
  const Instance inst = generate_instance(seed, n, kind, parse_profile(profile));
  emit(serialize_instance(inst), output);
  return 0;
}

int cmd_bench(const std::string& dir, const std::vector<std::string>& algorithms,
              const std::vector<std::string>& epsilon_texts, const std::string& output) {
  std::vector<std::string> files;
  if (!std::filesystem::is_directory(dir)) {
    throw ParseError("bench: not a directory: " + dir);
  }
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<Rational> epsilons;
  for (const std::string& text : epsilon_texts) epsilons.push_back(parse_epsilon(text));

  struct Row {
    std::string instance;
    std::string algorithm;
    std::string epsilon;
    std::string value;
    std::string oracle;
    std::string ratio;
    long long micros;
  };
  std::vector<Row> rows;

  for (const std::string& file : files) {
    const Instance inst = load_instance(file);
    std::optional<Rational> oracle;
    if (inst.size() <= oracle_limit()) {
      oracle = brute_force_opt(inst, oracle_limit()).total_value;
    }
    for (const std::string& algorithm : algorithms) {
      const bool needs_eps = algorithm != "dp-1kp";
      const std::vector<std::optional<Rational>> eps_list =
          needs_eps ? [&] {
            std::vector<std::optional<Rational>> out;
            for (const Rational& e : epsilons) out.emplace_back(e);
            return out;
          }()
                    : std::vector<std::optional<Rational>>{std::nullopt};
      for (const auto& eps : eps_list) {
        const RunReport report = run_algorithm(algorithm, inst, eps);
        Row row;
        row.instance = std::filesystem::path(file).filename().string();
        row.algorithm = algorithm;
        row.epsilon = eps ? eps->str() : "";
        row.value = report.value.str();
        if (oracle) {
          row.oracle = oracle->str();
          row.ratio = oracle->is_zero() ? "1" : (report.value / *oracle).str();
        }
        row.micros = report.micros;
        rows.push_back(std::move(row));
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.instance, a.algorithm, a.epsilon) <
           std::tie(b.instance, b.algorithm, b.epsilon);
  });

  std::ostringstream csv;
  csv << "instance,algorithm,epsilon,value,oracle,ratio,micros\n";
  for (const Row& row : rows) {
    csv << row.instance << ',' << row.algorithm << ',' << row.epsilon << ',' << row.value << ','
        << row.oracle << ',' << row.ratio << ',' << row.micros << '\n';
  }
  emit(csv.str(), output);
  std::cerr << "bench: " << rows.size() << " rows over " << files.size() << " instances\n";
  return 0;
}

int cmd_verify(const std::string& input, const std::string& epsilon_text) {
  const Instance inst = load_instance(input);
  const Rational epsilon = epsilon_text.empty() ? Rational(1, 2) : parse_epsilon(epsilon_text);
  int failures = 0;
  const auto report = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
    if (!ok) ++failures;
  };

  const std::string once = serialize_instance(inst);
  report(serialize_instance(parse_instance(once)) == once, "serialize round-trip is stable");

  bool regions_ok = true;
  if (!inst.symbolic_imaginary()) {
    for (const Item& item : inst.items) {
      const bool feasible = is_feasible(inst, {item.id});
      regions_ok = regions_ok &&
                   (feasible == (classify_region(item.demand, inst.capacity) != Region::Infeasible));
    }
    report(regions_ok, "region labels match singleton feasibility");
  }

  bool integral_values = true;
  for (const Item& item : inst.items) integral_values = integral_values && item.value.is_integer();

  std::vector<std::string> algorithms;
  if (!inst.symbolic_imaginary()) {
    if (inst.kind == InstanceKind::CKP) {
      algorithms = {"alg-a"};
      if (integral_values) algorithms.push_back("alg-b");
    }
    if (inst.kind == InstanceKind::GCKP && inst.capacity.magnitude_exact()) {
      algorithms = {"alg-c"};
    }
    if (inst.kind == InstanceKind::OneKP) {
      algorithms = {"fptas-1kp"};
      if (integral_values) algorithms.push_back("monotone-fptas");
    }
  }

  std::optional<Rational> oracle;
  if (inst.size() <= oracle_limit()) {
    oracle = brute_force_opt(inst, oracle_limit()).total_value;
    report(true, "oracle value " + oracle->str());
  }

  for (const std::string& algorithm : algorithms) {
    try {
      const RunReport first = run_algorithm(algorithm, inst, epsilon);
      const RunReport second = run_algorithm(algorithm, inst, epsilon);
      report(serialize_report(first) == serialize_report(second),
             algorithm + " is deterministic across two runs");
      report(is_feasible(inst, first.selected), algorithm + " output is feasible");
      if (oracle) {
        const Rational bound = (Rational(1) - epsilon) / Rational(2) * *oracle;
        report(first.value >= bound,
               algorithm + " value " + first.value.str() + " >= (1-eps)/2 * " + oracle->str());
      }
    } catch (const ContractError& e) {
      report(false, algorithm + std::string(": ") + e.what());
    }
  }

  if (failures == 0) {
    std::cout << "all checks passed\n";
    return 0;
  }
  std::cout << failures << " check(s) failed\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-rational solvers and a truthful mechanism for the complex-demand knapsack"};
  app.require_subcommand(1);

  std::string algorithm, epsilon, input, output, kind = "ckp", profile = "mixed", dir;
  std::vector<std::string> algorithms, epsilons;
  std::vector<long> weights;
  std::uint64_t seed = 1;
  int n = 8;
  bool with_oracle = false;

  CLI::App* solve = app.add_subcommand("solve", "Run one solver on an instance file");
  solve->add_option("--algorithm", algorithm, "One of: alg-a, alg-b, alg-c, dp-1kp, fptas-1kp, monotone-fptas")
      ->required()
      ->check(CLI::IsMember(kAlgorithms));
  solve->add_option("--epsilon", epsilon, "Approximation parameter as an exact rational, e.g. 1/2");
  solve->add_option("--input", input, "Instance file")->required();
  solve->add_option("--output", output, "Report file (stdout when omitted)");
  solve->add_flag("--oracle", with_oracle, "Also compute the brute-force optimum");

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force optimum (size-guarded)");
  oracle->add_option("--input", input)->required();
  oracle->add_option("--output", output);

  CLI::App* payments = app.add_subcommand("payments", "Run the truthful mechanism");
  payments->add_option("--epsilon", epsilon)->required();
  payments->add_option("--input", input)->required();
  payments->add_option("--output", output);

  CLI::App* reduce = app.add_subcommand("reduce", "Equipartition -> C-KP decision reduction");
  reduce->add_option("--weights", weights, "Positive integer weights, even count")->required();
  reduce->add_option("--output", output, "Where to write the reduced instance file");

  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--seed", seed)->required();
  gen->add_option("--n", n)->required();
  gen->add_option("--kind", kind)->check(CLI::IsMember({"1kp", "ckp", "gckp"}));
  gen->add_option("--profile", profile)->check(CLI::IsMember({"d1-heavy", "d2-heavy", "mixed"}));
  gen->add_option("--output", output);

  CLI::App* bench = app.add_subcommand("bench", "Run algorithms over a corpus directory, emit CSV");
  bench->add_option("--dir", dir)->required();
  bench->add_option("--algorithms", algorithms, "Algorithms to run")
      ->required()
      ->check(CLI::IsMember(kAlgorithms));
  bench->add_option("--epsilon", epsilons, "Epsilons to run (repeatable)");
  bench->add_option("--output", output);

  CLI::App* verify = app.add_subcommand("verify", "Run the property checks on one instance");
  verify->add_option("--input", input)->required();
  verify->add_option("--epsilon", epsilon);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(algorithm, epsilon, input, output, with_oracle);
    if (oracle->parsed()) return cmd_oracle(input, output);
    if (payments->parsed()) return cmd_payments(epsilon, input, output);
    if (reduce->parsed()) return cmd_reduce(weights, output);
    if (gen->parsed()) return cmd_gen(seed, n, kind, profile, output);
    if (bench->parsed()) return cmd_bench(dir, algorithms, epsilons, output);
    if (verify->parsed()) return cmd_verify(input, epsilon);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ContractError& e) {
    std::cerr << "contract error: " << e.what() << "\n";
    return kExitContract;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

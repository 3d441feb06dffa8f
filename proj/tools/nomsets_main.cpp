#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "nomsets/automata.hpp"
#include "nomsets/fifo.hpp"
#include "nomsets/free.hpp"
#include "nomsets/json_io.hpp"
#include "nomsets/parse.hpp"
#include "nomsets/verify.hpp"

namespace {

using nlohmann::json;
using namespace nomsets;

struct RegisteredAutomaton {
  std::function<MooreAutomaton(std::size_t)> make;
  std::optional<Value> sink;  // excluded by the sink-free orbit count
};

const RegisteredAutomaton* find_automaton(const std::string& name) {
  static const std::map<std::string, RegisteredAutomaton> registry = {
      {"fifo", {fifo_automaton, Value::label(kBottom)}},
  };
  auto it = registry.find(name);
  return it == registry.end() ? nullptr : &it->second;
}

MooreAutomaton instantiate(const std::string& name, std::size_t n,
                           const std::string& mode) {
  const RegisteredAutomaton* reg = find_automaton(name);
  if (!reg) throw std::invalid_argument("unknown automaton '" + name + "'");
  MooreAutomaton a = reg->make(n);
  if (mode == "separated") a = restricted(a);
  return a;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_orbits(const std::string& expr) {
  SetDesc desc = parse_set_expr(expr);
  std::vector<OrbitShape> all = orbits(desc);
  DimensionInfo dim = dimension(desc);
  json report;
  report["set"] = desc.to_text();
  report["orbit_count"] = all.size();
  report["dimension"] = dim.dimension;
  report["orbits"] = json::array();
  for (const OrbitShape& o : all) report["orbits"].push_back(to_json(o));
  emit(report);
  return 0;
}

int cmd_run(const std::string& name, std::size_t n, const std::string& word,
            const std::string& mode) {
  MooreAutomaton a = instantiate(name, n, mode);
  Word w = parse_word(word, a.alphabet);
  json report;
  report["automaton"] = name;
  report["n"] = n;
  report["mode"] = mode;
  report["word"] = word;
  try {
    Value out = mode == "separated" ? run_separated(a, w) : run(a, w);
    report["output"] = to_json(out);
    report["output_text"] = to_text(out);
  } catch (const SeparationError& e) {
    report["error"] = e.what();
    emit(report);
    return 1;
  }
  emit(report);
  return 0;
}

json reach_report(const std::string& name, std::size_t n,
                  const std::string& mode) {
  const RegisteredAutomaton* reg = find_automaton(name);
  MooreAutomaton a = instantiate(name, n, mode);
  std::vector<OrbitShape> reached = reachable_orbits(a);
  json report;
  report["n"] = n;
  report["mode"] = mode;
  report["orbit_count"] = reached.size();
  report["orbits"] = json::array();
  bool sink_reached = false;
  for (const OrbitShape& o : reached) {
    report["orbits"].push_back(o.key());
    if (reg->sink && o.representative() == *reg->sink) sink_reached = true;
  }
  if (reg->sink)
    report["sink_free_orbit_count"] = reached.size() - (sink_reached ? 1 : 0);
  return report;
}

int cmd_reach(const std::string& name, std::size_t n,
              const std::string& mode) {
  json report = reach_report(name, n, mode);
  report["automaton"] = name;
  emit(report);
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed,
               std::size_t samples) {
  SuiteResult result = run_suite(suite, seed, samples);
  json report;
  report["suite"] = result.suite;
  report["seed"] = result.seed;
  report["samples"] = samples;
  report["checks"] = json::array();
  for (const CheckResult& c : result.checks) {
    json jc;
    jc["name"] = c.name;
    jc["samples"] = c.samples;
    jc["status"] = c.passed ? "pass" : "fail";
    if (!c.passed) jc["counterexample"] = c.counterexample;
    report["checks"].push_back(jc);
  }
  report["status"] = result.passed() ? "pass" : "fail";
  emit(report);
  return result.passed() ? 0 : 1;
}

int cmd_table(const std::string& name, std::size_t max_n,
              const std::string& format) {
  std::vector<json> rows;
  for (std::size_t n = 1; n <= max_n; ++n) {
    json nominal = reach_report(name, n, "nominal");
    json separated = reach_report(name, n, "separated");
    json row;
    row["n"] = n;
    row["nominal_orbits"] = nominal["orbit_count"];
    row["separated_orbits"] = separated["orbit_count"];
    if (separated.contains("sink_free_orbit_count"))
      row["separated_sink_free"] = separated["sink_free_orbit_count"];
    rows.push_back(std::move(row));
  }
  if (format == "csv") {
    std::cout << "n,nominal_orbits,separated_orbits,separated_sink_free\n";
    for (const json& row : rows) {
      std::cout << row["n"] << "," << row["nominal_orbits"] << ","
                << row["separated_orbits"] << ","
                << (row.contains("separated_sink_free")
                        ? row["separated_sink_free"].dump()
                        : "")
                << "\n";
    }
  } else {
    json report;
    report["automaton"] = name;
    report["rows"] = rows;
    emit(report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbit-finite nominal sets, free renaming sets, and "
               "separated automata"};
  app.require_subcommand(1);

  std::string expr;
  CLI::App* orbits_cmd =
      app.add_subcommand("orbits", "enumerate the orbits of a set expression");
  orbits_cmd->add_option("expr", expr, "set expression")->required();

  std::string name = "fifo";
  std::size_t n = 3;
  std::string word;
  std::string mode = "nominal";
  std::uint64_t seed = 1;
  std::size_t samples = 500;
  std::string suite = "all";
  std::string format = "json";

  CLI::App* run_cmd = app.add_subcommand("run", "run a word through an automaton");
  run_cmd->add_option("name", name, "automaton name")->required();
  run_cmd->add_option("--n", n, "automaton parameter");
  run_cmd->add_option("--word", word, "letters separated by ';'");
  run_cmd->add_option("--mode", mode, "nominal|separated")
      ->check(CLI::IsMember({"nominal", "separated"}));

  CLI::App* reach_cmd =
      app.add_subcommand("reach", "orbit-level reachability");
  reach_cmd->add_option("name", name, "automaton name")->required();
  reach_cmd->add_option("--n", n, "automaton parameter");
  reach_cmd->add_option("--mode", mode, "nominal|separated")
      ->check(CLI::IsMember({"nominal", "separated"}));

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run a property suite");
  verify_cmd->add_option("suite", suite, "suite name")->required();
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--samples", samples, "samples per check");

  CLI::App* table_cmd = app.add_subcommand(
      "table", "nominal vs separated reachable orbit counts for 1..n");
  table_cmd->add_option("name", name, "automaton name")->required();
  table_cmd->add_option("--n", n, "largest parameter");
  table_cmd->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (orbits_cmd->parsed()) return cmd_orbits(expr);
    if (run_cmd->parsed()) return cmd_run(name, n, word, mode);
    if (reach_cmd->parsed()) return cmd_reach(name, n, mode);
    if (verify_cmd->parsed()) return cmd_verify(suite, seed, samples);
    if (table_cmd->parsed()) return cmd_table(name, n, format);
  } catch (const std::exception& e) {
    nlohmann::json err;
    err["error"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 1;
  }
  return 0;
}

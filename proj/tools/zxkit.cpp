// Copyright 2026 The zxkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <json.hpp>
#include <set>
#include <sstream>

#include "zxkit/diagram_json.hpp"
#include "zxkit/errors.hpp"
#include "zxkit/evaluate.hpp"
#include "zxkit/phase_poly.hpp"
#include "zxkit/qbc.hpp"
#include "zxkit/rules.hpp"

namespace fs = std::filesystem;
using namespace zxkit;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

// A computed result that failed its own semantic check.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes through a temporary file so a failure never leaves partial output.
void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content << std::flush;
    return;
  }
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path);
    out << content;
    if (!out.flush()) {
      out.close();
      fs::remove(tmp);
      throw IoError("cannot write " + path);
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw IoError("cannot write " + path + ": " + ec.message());
  }
}

EvalOptions eval_options() {
  EvalOptions opts;
  if (const char* env = std::getenv("ZXKIT_WIRE_BUDGET")) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used != std::string(env).size() || v < 1) throw std::invalid_argument("bad");
      opts.wire_budget = v;
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("ZXKIT_WIRE_BUDGET must be a positive integer, got '") +
                                  env + "'");
    }
  }
  return opts;
}

std::vector<int> wire_range(int n) {
  std::vector<int> s;
  for (int i = 1; i <= n; ++i) s.push_back(i);
  return s;
}

// ---- validate-rules ---------------------------------------------------------

struct ValidateArgs {
  int samples = 20;
  std::uint64_t seed = 0;
  int max_arity = 4;
  double tolerance = kDefaultTolerance;
  std::vector<std::string> only;
  bool timings = false;
  bool catalog = false;
  std::string output;
};

int run_validate(const ValidateArgs& a) {
  if (a.catalog) {
    write_output(a.output, catalog_markdown());
    return kOk;
  }
  CorpusOptions opts;
  opts.samples = a.samples;
  opts.seed = a.seed;
  opts.max_arity = a.max_arity;
  opts.tolerance = a.tolerance;
  opts.eval = eval_options();
  for (const auto& name : a.only) {
    auto id = rule_from_name(name);
    if (!id) throw std::invalid_argument("unknown rule '" + name + "'");
    opts.only.push_back(*id);
  }
  const ValidationReport report = validate_corpus(opts);
  nlohmann::json j = report_to_json(report, a.timings);
  j["seed"] = a.seed;
  j["samples"] = a.samples;
  j["max_arity"] = a.max_arity;
  j["tolerance"] = a.tolerance;
  std::set<std::string> rules;
  for (const auto& r : report.records) rules.insert(std::string(rule_name(r.id)));
  j["rules"] = rules;
  write_output(a.output, j.dump(2) + "\n");
  std::cerr << "validate-rules: " << report.passed() << "/" << report.records.size()
            << " instances passed over " << rules.size() << " rules\n";
  for (const auto& r : report.records) {
    if (!r.passed()) {
      std::cerr << "  FAIL " << rule_name(r.id) << " " << params_to_json(r.params).dump()
                << (r.error.empty() ? "" : " (" + r.error + ")") << "\n";
    }
  }
  return report.all_passed() ? kOk : kNegative;
}

// ---- decompose --------------------------------------------------------------

struct DecomposeArgs {
  bool pi4 = false;
  bool theorem1 = false;
  int wires = 0;
  std::string beta = "1/4pi";
  std::string input;
  std::string output;
};

GadgetCircuit decompose_circuit(const GadgetCircuit& in, bool pi4) {
  GadgetCircuit out{in.n, {}};
  for (const auto& t : in.terms) {
    if (t.kind != TermKind::Gadget) {
      out.terms.push_back(t);
      continue;
    }
    if (pi4) {
      if (!(t.angle == PhaseAngle::exact(1, 4))) {
        throw std::invalid_argument("pi/4 decomposition needs gadgets at 1/4pi, got " +
                                    t.angle.to_string());
      }
      for (auto& part : decompose_pi4_gadget(t.support).terms) out.terms.push_back(part);
    } else {
      for (auto& part : decompose_parity_to_and(t.support, t.angle)) out.terms.push_back(part);
    }
  }
  return out;
}

int run_decompose(const DecomposeArgs& a) {
  GadgetCircuit source;
  if (!a.input.empty()) {
    source = parse_gadget_circuit(read_file(a.input));
  } else {
    if (a.wires < 1) throw std::invalid_argument("--wires or an input file is required");
    const PhaseAngle angle = a.pi4 ? PhaseAngle::exact(1, 4) : PhaseAngle::parse(a.beta);
    source = {a.wires, {gadget_term(wire_range(a.wires), angle)}};
  }
  GadgetCircuit result = decompose_circuit(source, a.pi4);
  if (!(circuit_monomials(result) == circuit_monomials(source))) {
    throw VerificationFailure("decomposition changes the phase polynomial; nothing written");
  }
  write_output(a.output, format_gadget_circuit(result));
  std::cerr << "decompose: " << source.terms.size() << " term(s) -> " << result.terms.size()
            << " term(s), phase polynomial verified\n";
  return kOk;
}

// ---- optimize ---------------------------------------------------------------

struct OptimizeArgs {
  std::string input;
  std::string output;
  std::string stats;
};

int run_optimize(const OptimizeArgs& a) {
  const GadgetCircuit in = parse_gadget_circuit(read_file(a.input));
  OptimizeResult r;
  try {
    r = optimize(in);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e)) throw;
    throw VerificationFailure(e.what());
  }
  write_output(a.output, format_gadget_circuit(r.circuit));
  std::cerr << "t-count: " << r.t_before << " -> " << r.t_after << "\n";
  if (!a.stats.empty()) {
    nlohmann::json s{{"t_before", r.t_before},
                     {"t_after", r.t_after},
                     {"terms_before", in.terms.size()},
                     {"terms_after", r.circuit.terms.size()},
                     {"monomials_preserved", true}};
    write_output(a.stats, s.dump(2) + "\n");
  }
  return kOk;
}

// ---- qbc-check --------------------------------------------------------------

struct QbcArgs {
  std::string first;
  std::string second;
  bool data_bits = false;
  std::string output;
};

int run_qbc_check(const QbcArgs& a) {
  QbcCircuit c1;
  QbcCircuit c2;
  try {
    c1 = parse_qbc(read_file(a.first));
  } catch (const ParseError& e) {
    throw ParseError(0, a.first + ": " + e.what());
  }
  try {
    c2 = parse_qbc(read_file(a.second));
  } catch (const ParseError& e) {
    throw ParseError(0, a.second + ": " + e.what());
  }
  const auto mode = a.data_bits ? CompareMode::DataBits : CompareMode::AllBits;
  const Equivalence e = circuits_equivalent(c1, c2, mode);
  nlohmann::json j{{"equivalent", e.equivalent},
                   {"mode", a.data_bits ? "data-bits" : "all-bits"}};
  if (e.witness) {
    const int n = c1.wires();
    j["witness"] = {{"input", basis_string(*e.witness, n)},
                    {"output_first", basis_string(e.output_a, a.data_bits ? c1.n_data : n)},
                    {"output_second",
                     basis_string(e.output_b, a.data_bits ? c2.n_data : c2.wires())}};
  }
  if (!a.output.empty()) write_output(a.output, j.dump(2) + "\n");
  if (e.equivalent) {
    std::cout << "equivalent\n";
    return kOk;
  }
  std::cout << "not equivalent: input " << j["witness"]["input"].get<std::string>() << " gives "
            << j["witness"]["output_first"].get<std::string>() << " vs "
            << j["witness"]["output_second"].get<std::string>() << "\n";
  return kNegative;
}

// ---- eval -------------------------------------------------------------------

struct EvalArgs {
  std::string input;
  std::string compare;
  double tolerance = kDefaultTolerance;
  std::string output;
};

nlohmann::json load_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

int run_eval(const EvalArgs& a) {
  const EvalOptions opts = eval_options();
  const Tensor t = evaluate(diagram_from_json(load_json(a.input)), opts);
  if (a.compare.empty()) {
    write_output(a.output, tensor_to_json(t).dump() + "\n");
    return kOk;
  }
  const Tensor u = evaluate(diagram_from_json(load_json(a.compare)), opts);
  if (t.shape() != u.shape()) {
    throw std::invalid_argument("diagrams have different boundary counts");
  }
  const ScalarMatch m = equal_up_to_scalar(t, u, a.tolerance);
  nlohmann::json j{{"equal", m.equal}, {"residual", m.residual}, {"tolerance", a.tolerance}};
  if (m.scalar) {
    j["scalar"] = {m.scalar->real(), m.scalar->imag()};
  } else {
    j["scalar"] = nullptr;
  }
  write_output(a.output, j.dump(2) + "\n");
  return m.equal ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zxkit: ZX-calculus rule checking, phase polynomials and Boolean circuits"};
  app.require_subcommand(1);

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate-rules", "Check every rule on random instances");
  validate->add_option("--samples", va.samples, "Instances per rule variant")
      ->check(CLI::Range(1, std::numeric_limits<int>::max()).description("at least 1"));
  validate->add_option("--seed", va.seed, "Random seed");
  validate->add_option("--max-arity", va.max_arity, "Largest arity drawn")
      ->check(CLI::NonNegativeNumber);
  validate->add_option("--only", va.only, "Restrict to these rule ids")->delimiter(',');
  validate->add_option("--tolerance", va.tolerance, "Relative tolerance")
      ->check(CLI::PositiveNumber);
  validate->add_flag("--timings", va.timings, "Include per-instance timings");
  validate->add_flag("--catalog", va.catalog, "Print the rule catalog as markdown");
  validate->add_option("-o,--output", va.output, "Report path (default stdout)");

  DecomposeArgs da;
  auto* decompose = app.add_subcommand("decompose", "Decompose phase gadgets");
  auto* pi4 = decompose->add_flag("--pi4", da.pi4, "pi/4 gadget into 1-, 2- and 3-wire gadgets");
  auto* thm = decompose->add_flag("--theorem1", da.theorem1, "Gadget into AND-phase terms");
  pi4->excludes(thm);
  decompose->add_option("--wires", da.wires, "Gadget on wires 1..N")->check(CLI::PositiveNumber);
  decompose->add_option("--beta", da.beta, "Gadget angle for --theorem1");
  decompose->add_option("-i,--input", da.input, "Gadget circuit file")->check(CLI::ExistingFile);
  decompose->add_option("-o,--output", da.output, "Output path (default stdout)");

  OptimizeArgs oa;
  auto* opt = app.add_subcommand("optimize", "Fuse and decompose gadgets to cut T-count");
  opt->add_option("input", oa.input, "Gadget circuit file")->required()->check(CLI::ExistingFile);
  opt->add_option("-o,--output", oa.output, "Output path (default stdout)");
  opt->add_option("--stats", oa.stats, "Write T-count statistics as JSON");

  QbcArgs qa;
  auto* qbc = app.add_subcommand("qbc-check", "Decide equivalence of two CNOT circuits");
  qbc->add_option("first", qa.first, "Circuit file")->required()->check(CLI::ExistingFile);
  qbc->add_option("second", qa.second, "Circuit file")->required()->check(CLI::ExistingFile);
  qbc->add_flag("--data-bits", qa.data_bits, "Compare data outputs only");
  qbc->add_option("-o,--output", qa.output, "Write the result as JSON");

  EvalArgs ea;
  auto* ev = app.add_subcommand("eval", "Evaluate a diagram to its tensor");
  ev->add_option("input", ea.input, "Diagram JSON file")->required()->check(CLI::ExistingFile);
  ev->add_option("--compare", ea.compare, "Compare with a second diagram up to scalar")
      ->check(CLI::ExistingFile);
  ev->add_option("--tolerance", ea.tolerance, "Relative tolerance")->check(CLI::PositiveNumber);
  ev->add_option("-o,--output", ea.output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return run_validate(va);
    if (*decompose) {
      if (!da.pi4 && !da.theorem1) throw std::invalid_argument("choose --pi4 or --theorem1");
      return run_decompose(da);
    }
    if (*opt) return run_optimize(oa);
    if (*qbc) return run_qbc_check(qa);
    if (*ev) return run_eval(ea);
  } catch (const VerificationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const std::exception& e) {
    // Parse, resource, I/O and argument errors.
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

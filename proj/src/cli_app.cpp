#include "gdold/cli_app.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gdold/clifford.hpp"
#include "gdold/dold.hpp"
#include "gdold/flag.hpp"
#include "gdold/gf2poly.hpp"
#include "gdold/report.hpp"
#include "gdold/verdicts.hpp"

namespace gdold {
namespace {

/// Parses a comma-separated list of positive integers such as "1,2,2".
[[nodiscard]] std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("parts must be a comma-separated list of positive integers");
    }
    if (pos != token.size() || value <= 0) {
      throw std::invalid_argument("parts must be a comma-separated list of positive integers");
    }
    parts.push_back(value);
  }
  if (parts.empty()) {
    throw std::invalid_argument("parts must be a comma-separated list of positive integers");
  }
  return parts;
}

/// Parses an inclusive integer range written as "A..B".
[[nodiscard]] std::pair<int, int> parse_range(const std::string& text) {
  const std::size_t sep = text.find("..");
  if (sep == std::string::npos) {
    throw std::invalid_argument("range must have the form A..B");
  }
  int lo = 0;
  int hi = 0;
  try {
    std::size_t pos = 0;
    lo = std::stoi(text.substr(0, sep), &pos);
    if (pos != sep) throw std::invalid_argument("range");
    const std::string tail = text.substr(sep + 2);
    hi = std::stoi(tail, &pos);
    if (pos != tail.size()) throw std::invalid_argument("range");
  } catch (const std::exception&) {
    throw std::invalid_argument("range must have the form A..B");
  }
  if (lo < 1 || hi < lo) {
    throw std::invalid_argument("range must satisfy 1 <= A <= B");
  }
  return {lo, hi};
}

[[nodiscard]] std::string join(const std::vector<int>& values, char sep) {
  std::string text;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) text.push_back(sep);
    text += std::to_string(values[i]);
  }
  return text;
}

/// Emits every partition of n with at least two parts, in descending
/// lexicographic order ((n-1,1), (n-2,2), (n-2,1,1), ...).
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> current;
  const std::function<void(int, int)> recurse = [&](int remaining, int max_part) {
    if (remaining == 0) {
      if (current.size() >= 2) emit(current);
      return;
    }
    for (int part = std::min(max_part, remaining); part >= 1; --part) {
      current.push_back(part);
      recurse(remaining - part, part);
      current.pop_back();
    }
  };
  recurse(n, n);
}

[[nodiscard]] std::string verdict_cell(const Verdict& verdict) {
  switch (verdict.state) {
    case VerdictState::Holds:
      return "holds";
    case VerdictState::Fails:
      return "fails";
    case VerdictState::Open:
      return "open";
  }
  return "open";
}

struct CliOptions {
  int m = 1;
  std::string parts;
  std::string indices;
  std::string base_indices;
  int degree = -1;
  bool json = false;
  int r = 2;
  bool dump = false;
  std::string m_range;
  int n_max = 4;
  std::string what = "all";
  std::string format = "csv";
};

void run_analyze(const CliOptions& opt, std::ostream& out) {
  const AnalysisReport report = analyze(opt.m, parse_parts(opt.parts), opt.degree);
  if (opt.json) {
    out << report_to_json(report).dump(2) << "\n";
  } else {
    out << report_to_text(report);
  }
}

void run_sw(const CliOptions& opt, std::ostream& out) {
  const DoldDescriptor dold{opt.m, FlagDescriptor{parse_parts(opt.parts)}};
  dold.validate();
  const int cap = opt.degree < 0 ? dold.dim() : opt.degree;
  const std::vector<SWClass> w = sw_total_P(dold, cap);
  if (opt.json) {
    nlohmann::json j;
    j["m"] = dold.m;
    j["parts"] = dold.flag.parts;
    nlohmann::json rendered = nlohmann::json::array();
    for (const SWClass& wk : w) rendered.push_back(wk.to_string());
    j["w"] = rendered;
    out << j.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < w.size(); ++k) {
      out << "w" << k << " = " << w[k].to_string() << "\n";
    }
  }
}

/// Returns the exit code (0 or 3, for the unsupported reduction case).
[[nodiscard]] int run_sw_number(const CliOptions& opt, std::ostream& out, std::ostream& err) {
  const std::vector<int> parts = parse_parts(opt.parts);
  const DoldDescriptor dold{opt.m, FlagDescriptor{parts}};
  dold.validate();
  if (dold.flag.n() > Monomial::kMaxVars) {
    throw std::invalid_argument("sw-number: total flag size n <= 8 required");
  }
  if (opt.base_indices.empty() == opt.indices.empty()) {
    throw std::invalid_argument("sw-number: exactly one of --I or --J is required");
  }
  std::vector<int> base;
  std::vector<int> indices;
  if (!opt.base_indices.empty()) {
    base = parse_parts(opt.base_indices);
    const int weight = std::accumulate(base.begin(), base.end(), 0);
    if (weight != dold.flag.complex_dim()) {
      throw std::invalid_argument("sw-number: entries of --I must sum to the complex dimension");
    }
    indices.assign(static_cast<std::size_t>(dold.m), 1);
    for (const int part : base) indices.push_back(2 * part);
  } else {
    indices = parse_parts(opt.indices);
  }
  const FlagManifold manifold(dold.flag);
  const SwNumberResult result = sw_number_P(dold, manifold, indices);
  if (opt.json) {
    nlohmann::json j;
    j["m"] = dold.m;
    j["parts"] = parts;
    if (!base.empty()) j["I"] = base;
    j["J"] = indices;
    j["supported"] = result.supported;
    j["detail"] = result.detail;
    if (result.supported) j["value"] = result.value;
    out << j.dump(2) << "\n";
  } else if (result.supported) {
    out << result.value << "\n";
  }
  if (!result.supported) {
    if (!opt.json) err << "unsupported: " << result.detail << "\n";
    return 3;
  }
  return 0;
}

void run_cobordism(const CliOptions& opt, std::ostream& out) {
  const std::vector<int> parts = parse_parts(opt.parts);
  const DoldDescriptor dold{opt.m, FlagDescriptor{parts}};
  dold.validate();
  const Verdict verdict = cobordism_verdict(dold.m, dold.flag);
  if (opt.json) {
    nlohmann::json j;
    j["m"] = dold.m;
    j["parts"] = parts;
    j["verdict"] = verdict_to_json(verdict);
    out << j.dump(2) << "\n";
  } else {
    out << "bounds: " << to_string(verdict.state) << "\n";
    out << "rule: " << verdict.rule_id << "\n";
    out << "citation: " << verdict.citation << "\n";
    for (const auto& [key, value] : verdict.witness) {
      out << "witness " << key << " = " << value << "\n";
    }
  }
}

void run_clifford(const CliOptions& opt, std::ostream& out) {
  const CliffordRep rep = clifford_representation(opt.r);
  const RelationReport relations = verify_relations(rep);
  const std::uint64_t dimension = algebra_dimension(rep);
  if (opt.json) {
    nlohmann::json j;
    j["r"] = rep.r;
    j["matrix_size"] = static_cast<int>(1) << rep.p;
    j["relations_ok"] = relations.ok;
    j["squares"] = relations.squares;
    j["algebra_dimension"] = dimension;
    if (opt.dump) {
      nlohmann::json gens = nlohmann::json::array();
      for (const SignedPermMatrix& g : rep.gens) {
        gens.push_back(g.dense());
      }
      j["generators"] = gens;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "r = " << rep.r << ", matrix size " << (1 << rep.p) << "\n";
    out << "relations: " << (relations.ok ? "ok" : "violated") << "\n";
    out << "squares:";
    for (int s : relations.squares) out << " " << (s > 0 ? "+1" : "-1");
    out << "\n";
    out << "algebra dimension: " << dimension << "\n";
    if (!relations.ok) {
      for (const std::string& failure : relations.failures) {
        out << "failure: " << failure << "\n";
      }
    }
    if (opt.dump) {
      for (std::size_t i = 0; i < rep.gens.size(); ++i) {
        out << "generator " << (i + 1) << ":\n";
        for (const std::vector<int>& row : rep.gens[i].dense()) {
          out << " ";
          for (int entry : row) out << " " << entry;
          out << "\n";
        }
      }
    }
  }
}

struct TableRow {
  int m = 0;
  std::vector<int> parts;
  int dim = 0;
  bool orientable = false;
  bool spin = false;
  std::uint64_t euler = 0;
  Verdict stable;
  Verdict parallel;
  Verdict cobordism;
  bool want_stable = false;
  bool want_parallel = false;
  bool want_cobordism = false;
};

void run_table(const CliOptions& opt, std::ostream& out) {
  const auto [m_lo, m_hi] = parse_range(opt.m_range);
  if (opt.n_max < 2 || opt.n_max > Monomial::kMaxVars) {
    throw std::invalid_argument("table: --n-max must be between 2 and 8");
  }
  const bool want_stable = opt.what == "all" || opt.what == "stable";
  const bool want_parallel = opt.what == "all" || opt.what == "parallel";
  const bool want_cobordism = opt.what == "all" || opt.what == "cobordism";
  if (!want_stable && !want_parallel && !want_cobordism) {
    throw std::invalid_argument("table: --what must be stable, parallel, cobordism, or all");
  }
  if (opt.format != "csv" && opt.format != "json") {
    throw std::invalid_argument("table: --format must be csv or json");
  }

  std::vector<TableRow> rows;
  for (int m = m_lo; m <= m_hi; ++m) {
    for (int n = 2; n <= opt.n_max; ++n) {
      for_each_partition(n, [&](const std::vector<int>& parts) {
        TableRow row;
        row.m = m;
        row.parts = parts;
        const FlagDescriptor flag{parts};
        const DoldDescriptor dold{m, flag};
        row.dim = dold.dim();
        row.orientable = is_orientable_P(dold);
        const FlagManifold manifold(flag);
        row.spin = is_spin_P(dold, manifold);
        row.euler = euler_char_P(dold);
        row.want_stable = want_stable;
        row.want_parallel = want_parallel;
        row.want_cobordism = want_cobordism;
        if (want_stable || want_parallel) {
          row.stable = stably_parallelizable_verdict(m, flag);
        }
        if (want_parallel) row.parallel = parallelizable_verdict(m, flag);
        if (want_cobordism) row.cobordism = cobordism_verdict(m, flag);
        rows.push_back(std::move(row));
      });
    }
  }

  if (opt.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const TableRow& row : rows) {
      nlohmann::json j;
      j["m"] = row.m;
      j["parts"] = row.parts;
      j["dim"] = row.dim;
      j["orientable"] = row.orientable;
      j["spin"] = row.spin;
      j["chi"] = row.euler;
      nlohmann::json rule_ids = nlohmann::json::array();
      if (row.want_stable) {
        j["stable_par"] = verdict_cell(row.stable);
        rule_ids.push_back(row.stable.rule_id);
      }
      if (row.want_parallel) {
        j["parallel"] = verdict_cell(row.parallel);
        rule_ids.push_back(row.parallel.rule_id);
      }
      if (row.want_cobordism) {
        j["cobordism"] = verdict_cell(row.cobordism);
        rule_ids.push_back(row.cobordism.rule_id);
      }
      j["rule_ids"] = rule_ids;
      arr.push_back(j);
    }
    out << arr.dump(2) << "\n";
  } else {
    out << "m,parts,dim,orientable,spin,chi,stable_par,parallel,cobordism,rule_ids\n";
    for (const TableRow& row : rows) {
      std::vector<std::string> rule_ids;
      if (row.want_stable) rule_ids.push_back(row.stable.rule_id);
      if (row.want_parallel) rule_ids.push_back(row.parallel.rule_id);
      if (row.want_cobordism) rule_ids.push_back(row.cobordism.rule_id);
      std::string joined;
      for (std::size_t i = 0; i < rule_ids.size(); ++i) {
        if (i > 0) joined.push_back(';');
        joined += rule_ids[i];
      }
      out << row.m << "," << join(row.parts, '+') << "," << row.dim << ","
          << (row.orientable ? 1 : 0) << "," << (row.spin ? 1 : 0) << "," << row.euler << ","
          << (row.want_stable ? verdict_cell(row.stable) : std::string("-")) << ","
          << (row.want_parallel ? verdict_cell(row.parallel) : std::string("-")) << ","
          << (row.want_cobordism ? verdict_cell(row.cobordism) : std::string("-")) << ","
          << joined << "\n";
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of generalized Dold manifolds P(m, X) over GF(2)"};
  app.require_subcommand(1);

  CliOptions opt;
  int exit_code = 0;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Full invariant report for one P(m, X)");
  analyze_cmd->add_option("--m", opt.m, "Sphere dimension m >= 1")->required();
  analyze_cmd->add_option("--parts", opt.parts, "Flag block sizes, comma separated")->required();
  analyze_cmd->add_option("--max-degree", opt.degree,
                          "Highest Stiefel-Whitney degree to render (default: dim P)");
  analyze_cmd->add_flag("--json", opt.json, "Emit JSON instead of text");
  analyze_cmd->callback([&] { run_analyze(opt, out); });

  CLI::App* sw_cmd = app.add_subcommand("sw", "Total Stiefel-Whitney class of P(m, X)");
  sw_cmd->add_option("--m", opt.m, "Sphere dimension m >= 1")->required();
  sw_cmd->add_option("--parts", opt.parts, "Flag block sizes, comma separated")->required();
  sw_cmd->add_option("--degree", opt.degree, "Highest degree to render (default: dim P)");
  sw_cmd->add_flag("--json", opt.json, "Emit JSON instead of text");
  sw_cmd->callback([&] { run_sw(opt, out); });

  CLI::App* swn_cmd =
      app.add_subcommand("sw-number", "Stiefel-Whitney number w_J[P] for a degree partition J");
  swn_cmd->add_option("--m", opt.m, "Sphere dimension m >= 1")->required();
  swn_cmd->add_option("--parts", opt.parts, "Flag block sizes, comma separated")->required();
  CLI::Option* i_opt = swn_cmd->add_option(
      "--I", opt.base_indices, "Fiber partition, comma separated; queries J = (1^m, 2 I)");
  swn_cmd->add_option("--J", opt.indices, "Degree multiset, comma separated, summing to dim P")
      ->excludes(i_opt);
  swn_cmd->add_flag("--json", opt.json, "Emit JSON instead of text");
  swn_cmd->callback([&] { exit_code = run_sw_number(opt, out, err); });

  CLI::App* cob_cmd = app.add_subcommand("cobordism", "Unoriented cobordism verdict for P(m, X)");
  cob_cmd->add_option("--m", opt.m, "Sphere dimension m >= 1")->required();
  cob_cmd->add_option("--parts", opt.parts, "Flag block sizes, comma separated")->required();
  cob_cmd->add_flag("--json", opt.json, "Emit JSON instead of text");
  cob_cmd->callback([&] { run_cobordism(opt, out); });

  CLI::App* cliff_cmd =
      app.add_subcommand("clifford", "Signed permutation generators of a Clifford action");
  cliff_cmd->add_option("--r", opt.r, "Even number of generators, 2 <= r <= 16")->required();
  cliff_cmd->add_flag("--dump", opt.dump, "Print the generator matrices");
  cliff_cmd->add_flag("--json", opt.json, "Emit JSON instead of text");
  cliff_cmd->callback([&] { run_clifford(opt, out); });

  CLI::App* table_cmd =
      app.add_subcommand("table", "Verdict table over a range of m and all flags up to n-max");
  table_cmd->add_option("--m-range", opt.m_range, "Inclusive range of m, written A..B")
      ->required();
  table_cmd->add_option("--n-max", opt.n_max, "Largest total flag size n (2..8)");
  table_cmd->add_option("--what", opt.what, "stable, parallel, cobordism, or all");
  table_cmd->add_option("--format", opt.format, "csv or json");
  table_cmd->callback([&] { run_table(opt, out); });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("gdold");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace gdold

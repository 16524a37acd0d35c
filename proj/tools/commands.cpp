#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sublists/combinatorics.hpp"
#include "sublists/errors.hpp"
#include "sublists/instances.hpp"
#include "sublists/laws.hpp"
#include "sublists/level.hpp"
#include "sublists/tree_doc.hpp"

namespace sublists::cli {

namespace {

using nlohmann::json;

std::string render_value(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::vector<Algorithm> algorithms_for(AlgoChoice choice) {
  switch (choice) {
    case AlgoChoice::TopDown:
      return {Algorithm::TopDown};
    case AlgoChoice::BottomUp:
      return {Algorithm::BottomUp};
    case AlgoChoice::Both:
      break;
  }
  return {Algorithm::TopDown, Algorithm::BottomUp};
}

}  // namespace

int cmd_run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const ProblemEntry* problem = find_problem(cfg.problem);
  if (problem == nullptr) {
    err << "error: unknown problem '" << cfg.problem << "'; known:";
    for (const auto& p : builtin_problems()) err << ' ' << p.name;
    err << '\n';
    return kExitUsage;
  }
  const std::size_t length = problem->input_length(cfg.input);
  if (length == 0) {
    err << "error: input must be non-empty\n";
    return kExitUsage;
  }
  if (length > kRunMaxLen) {
    err << "error: input length " << length << " exceeds " << kRunMaxLen << '\n';
    return kExitUsage;
  }
  const auto algos = algorithms_for(cfg.algo);
  if (length > kTopDownMaxLen &&
      std::find(algos.begin(), algos.end(), Algorithm::TopDown) != algos.end()) {
    err << "error: td is limited to inputs of length " << kTopDownMaxLen << "; use --algo bu\n";
    return kExitUsage;
  }

  std::vector<RunOutcome> outcomes;
  try {
    for (Algorithm a : algos) outcomes.push_back(problem->run(a, cfg.input));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const bool both = outcomes.size() == 2;
  const bool equal = !both || outcomes[0].value == outcomes[1].value;

  if (cfg.format == Format::Json) {
    json results = json::array();
    for (const auto& o : outcomes) {
      results.push_back({{"algorithm", std::string(to_string(o.stats.algorithm))},
                         {"value", o.value},
                         {"f_calls", o.stats.f_calls},
                         {"g_calls", o.stats.g_calls},
                         {"peak_level_tips", o.stats.peak_level_tips}});
    }
    json doc{{"command", "run"}, {"problem", problem->name}, {"input", cfg.input}, {"results", results}};
    if (both) doc["verdict"] = equal ? "EQUAL" : "DIFFER";
    out << doc.dump() << '\n';
  } else {
    out << "problem: " << problem->name << '\n' << "input: " << cfg.input << '\n';
    for (const auto& o : outcomes) {
      out << to_string(o.stats.algorithm) << ": " << render_value(o.value) << '\n'
          << "  f_calls=" << o.stats.f_calls << " g_calls=" << o.stats.g_calls
          << " peak_level_tips=" << o.stats.peak_level_tips << '\n';
    }
    if (both) out << "verdict: " << (equal ? "EQUAL" : "DIFFER") << '\n';
  }
  return equal ? kExitOk : kExitLawFailure;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  VerifyReport report;
  try {
    report = verify_laws(cfg.max_len);
  } catch (const OutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (cfg.format == Format::Json) {
    out << to_json(report).dump() << '\n';
  } else {
    out << "verify: alphabet prefixes up to length " << report.max_len << '\n';
    for (const auto& law : report.laws) {
      out << (law.passed() ? "PASS " : "FAIL ") << law.law << " cases=" << law.cases << '\n';
      if (law.counterexample) {
        const auto& c = *law.counterexample;
        out << "  counterexample: input=" << c.input;
        if (c.k) out << " k=" << *c.k;
        out << "\n  lhs: " << c.lhs << "\n  rhs: " << c.rhs << '\n';
      }
    }
    out << (report.ok() ? "all laws hold" : "LAW VIOLATED") << '\n';
  }
  return report.ok() ? kExitOk : kExitLawFailure;
}

int cmd_dump(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::size_t n = cfg.input.size();
  if (cfg.k > n) {
    err << "error: k = " << cfg.k << " is out of range for an input of length " << n << '\n';
    return kExitUsage;
  }
  const auto tree = ch(cfg.k, cfg.input);
  if (cfg.stage == Stage::Ch) {
    out << dump_tree_doc(tree) << '\n';
    return kExitOk;
  }
  if (cfg.k == 0 || cfg.k >= n) {
    err << "error: after-up needs 1 <= k < length input (got k = " << cfg.k << ", length " << n
        << ")\n";
    return kExitUsage;
  }
  out << dump_tree_doc(up(tree)) << '\n';
  return kExitOk;
}

int cmd_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string name = cfg.problem.empty() ? "modsum" : cfg.problem;
  const ProblemEntry* problem = find_problem(name);
  if (problem == nullptr) {
    err << "error: unknown problem '" << name << "'\n";
    return kExitUsage;
  }
  if (cfg.max_len > kTopDownMaxLen) {
    err << "error: bench max-len " << cfg.max_len << " exceeds " << kTopDownMaxLen << '\n';
    return kExitUsage;
  }
  using Clock = std::chrono::steady_clock;
  out << "n,td_g_calls,bu_g_calls,td_wall_ns,bu_wall_ns\n";
  // Row n evaluates an input of length n+1.
  for (std::size_t n = 0; n < cfg.max_len; ++n) {
    const std::string xs = alphabet_prefix(n + 1);
    const auto t0 = Clock::now();
    const RunOutcome td_run = problem->run(Algorithm::TopDown, xs);
    const auto t1 = Clock::now();
    const RunOutcome bu_run = problem->run(Algorithm::BottomUp, xs);
    const auto t2 = Clock::now();
    if (td_run.value != bu_run.value) {
      err << "error: td and bu disagree at n = " << n << '\n';
      return kExitLawFailure;
    }
    out << n << ',' << td_run.stats.g_calls << ',' << bu_run.stats.g_calls << ','
        << std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count() << ','
        << std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count() << '\n';
  }
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Immediate-sublist recurrences: top-down vs. bottom-up evaluation"};
  app.name("sublists");
  app.require_subcommand(1);
  CliConfig cfg;

  const std::map<std::string, AlgoChoice> algo_names{
      {"td", AlgoChoice::TopDown}, {"bu", AlgoChoice::BottomUp}, {"both", AlgoChoice::Both}};
  const std::map<std::string, Format> format_names{{"text", Format::Text}, {"json", Format::Json}};
  const std::map<std::string, Stage> stage_names{{"ch", Stage::Ch}, {"after-up", Stage::AfterUp}};

  auto* run = app.add_subcommand("run", "evaluate a registered problem on one input");
  run->add_option("--problem", cfg.problem, "problem name (trace, modsum, maxmin)")->required();
  run->add_option("--input", cfg.input, "input list: characters, or comma-separated integers")
      ->required();
  run->add_option("--algo", cfg.algo, "td, bu or both")
      ->transform(CLI::CheckedTransformer(algo_names, CLI::ignore_case));
  run->add_option("--format", cfg.format, "text or json")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));

  auto* verify = app.add_subcommand("verify", "check every law on alphabet prefixes");
  verify->add_option("--max-len", cfg.max_len, "longest input swept (default 9)");
  verify->add_option("--format", cfg.format, "text or json")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));

  auto* dump = app.add_subcommand("dump", "print ch k input (or up of it) as a JSON tree");
  dump->add_option("--k", cfg.k, "number of elements chosen")->required();
  dump->add_option("--input", cfg.input, "input characters")->required();
  dump->add_option("--stage", cfg.stage, "ch or after-up")
      ->transform(CLI::CheckedTransformer(stage_names, CLI::ignore_case));

  auto* bench = app.add_subcommand("bench", "CSV of combine-call counts and wall time per n");
  bench->add_option("--problem", cfg.problem, "problem name (default modsum)");
  bench->add_option("--max-len", cfg.max_len, "longest input evaluated (default 9)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (run->parsed()) return cmd_run(cfg, out, err);
  if (verify->parsed()) return cmd_verify(cfg, out, err);
  if (dump->parsed()) return cmd_dump(cfg, out, err);
  return cmd_bench(cfg, out, err);
}

}  // namespace sublists::cli

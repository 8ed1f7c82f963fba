#include "borda/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "borda/fpt.hpp"
#include "borda/generator.hpp"
#include "borda/io.hpp"
#include "borda/oracle.hpp"
#include "borda/reductions.hpp"

namespace borda {

namespace {

using Clock = std::chrono::steady_clock;

class Report {
 public:
  void put(const std::string& key, const std::string& value) { text_ << key << '\t' << value << '\n'; }
  void put(const std::string& key, std::int64_t value) { put(key, std::to_string(value)); }
  std::string str() const { return text_.str(); }

 private:
  std::ostringstream text_;
};

std::string set_text(const Election& e, const CandidateSet& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + e.labels[ids[i]];
  return out + "}";
}

void put_scores(Report& r, const std::string& prefix, const Election& e) {
  const auto table = score_table(e);
  for (CandidateId c : e.active) r.put(prefix + e.labels[c], table[c].to_string());
}

void put_shape(Report& r, const Election& e) {
  r.put("rule", rule_name(e.rule));
  r.put("m", static_cast<std::int64_t>(e.m()));
  r.put("t", e.t_cap ? std::to_string(*e.t_cap) : "complete");
  r.put("ballots", e.ballot_count());
}

void put_wallclock(Report& r, Clock::time_point start) {
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  r.put("stats.wallclock_ms", static_cast<std::int64_t>(ms));
}

bool looks_like_instance(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind("kind", 0) == 0) return true;
  return false;
}

struct Flags {
  std::string file;
  std::string solver = "auto";
  std::string model;
  std::string out;
  std::vector<std::string> picks;
  bool no_reduction = false;
  std::string thresholds = "corrected";
  std::string graph;
  std::size_t k = 1;
  std::string target;
  bool force = false;
  bool as_printed = false;
  GenParams gen;
  std::string gen_rule = "up";
  std::string gen_kind = "ccdv";
};

ControlInstance load_instance(const Flags& f) {
  ControlInstance inst = parse_instance(read_file(f.file));
  if (!f.model.empty()) inst.model = parse_model(f.model);
  return inst;
}

int cmd_score(const Flags& f, std::ostream& out) {
  const auto start = Clock::now();
  const std::string text = read_file(f.file);
  const Election e = looks_like_instance(text) ? projected(parse_instance(text).base) : parse_election(text);
  Report r;
  r.put("command", "score");
  put_shape(r, e);
  put_scores(r, "score.", e);
  r.put("winners.unique", set_text(e, winners(e, WinnerModel::Unique)));
  r.put("winners.cowinner", set_text(e, winners(e, WinnerModel::CoWinner)));
  put_wallclock(r, start);
  out << r.str();
  return 0;
}

int cmd_solve(const Flags& f, std::ostream& out) {
  const auto start = Clock::now();
  const ControlInstance inst = load_instance(f);
  FptOptions opts;
  opts.data_reduction = !f.no_reduction;
  opts.thresholds = f.thresholds == "published" ? ThresholdPolicy::Published : ThresholdPolicy::Corrected;

  SolveResult res;
  if (f.solver == "brute") {
    res = solve_control_bruteforce(inst);
  } else if (f.solver == "fpt") {
    res = solve_fpt(inst, opts);
  } else {
    res = fpt_available(inst) ? solve_fpt(inst, opts) : solve_control_bruteforce(inst);
  }

  Report r;
  r.put("command", "solve");
  r.put("kind", kind_name(inst.kind));
  put_shape(r, inst.base);
  r.put("model", model_name(inst.model));
  r.put("budget", static_cast<std::int64_t>(inst.budget));
  r.put("solver", res.solver);
  r.put("feasible", res.feasible() ? "true" : "false");
  r.put("solution", res.feasible() ? format_picks(inst, *res.solution) : "none");
  put_scores(r, "score_before.", projected(inst.base));
  if (res.feasible()) put_scores(r, "score_after.", apply(inst, *res.solution));
  r.put("stats.subsets_examined", static_cast<std::int64_t>(res.stats.subsets_examined));
  r.put("stats.combinations", static_cast<std::int64_t>(res.stats.combinations));
  r.put("stats.votes_after_reduction", static_cast<std::int64_t>(res.stats.votes_after_reduction));
  put_wallclock(r, start);
  out << r.str();
  return res.feasible() ? 0 : 1;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const auto start = Clock::now();
  const ControlInstance inst = load_instance(f);
  Report r;
  r.put("command", "verify");
  r.put("kind", kind_name(inst.kind));
  put_shape(r, inst.base);
  r.put("model", model_name(inst.model));
  r.put("budget", static_cast<std::int64_t>(inst.budget));

  std::optional<Solution> sol;
  Verdict verdict;
  try {
    sol = parse_picks(inst, f.picks);
    verdict = check(inst, *sol);
  } catch (const InvalidSolution& err) {
    verdict = {false, err.what()};
  }
  r.put("picks", sol ? format_picks(inst, *sol) : "{}");
  r.put("verdict", verdict.ok ? "true" : "false");
  if (!verdict.ok) r.put("reason", verdict.reason);
  put_scores(r, "score_before.", projected(inst.base));
  if (sol) {
    try {
      put_scores(r, "score_after.", apply(inst, *sol));
    } catch (const InvalidSolution&) {
    }
  }
  put_wallclock(r, start);
  out << r.str();
  return verdict.ok ? 0 : 1;
}

int cmd_reduce(const Flags& f, std::ostream& out) {
  const auto start = Clock::now();
  const Graph g = parse_graph(read_file(f.graph));
  ReduceOptions opts;
  opts.force = f.force;
  opts.as_printed = f.as_printed;
  const ReductionOutput red = reduce_by_name(f.target, g, f.k, opts);
  const std::string witness_path = f.out + ".witness";
  write_file(f.out, serialize(red.instance));
  write_file(witness_path, serialize_witness(red));

  Report r;
  r.put("command", "reduce");
  r.put("reduction", f.target);
  r.put("provenance", red.provenance);
  r.put("kind", kind_name(red.instance.kind));
  put_shape(r, red.instance.base);
  for (const auto& [key, value] : red.sizes) r.put("size." + key, value);
  r.put("instance", f.out);
  r.put("witness", witness_path);
  put_wallclock(r, start);
  out << r.str();
  return 0;
}

int cmd_gen(Flags f, std::ostream& out) {
  f.gen.rule = parse_rule(f.gen_rule);
  f.gen.kind = parse_kind(f.gen_kind);
  if (!f.model.empty()) f.gen.model = parse_model(f.model);
  const std::string text = serialize(generate_instance(f.gen));
  if (f.out.empty())
    out << text;
  else
    write_file(f.out, text);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Borda election control toolkit", "bordactl"};
  app.require_subcommand(1);
  Flags f;

  const auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", f.model, "Winner model")->check(CLI::IsMember({"unique", "cowinner"}));
  };

  auto* score = app.add_subcommand("score", "Print per-candidate totals and winners");
  score->add_option("file", f.file, "Election or instance file")->required();

  auto* solve = app.add_subcommand("solve", "Solve a control instance");
  solve->add_option("file", f.file, "Instance file")->required();
  solve->add_option("--solver", f.solver, "brute, fpt or auto")->check(CLI::IsMember({"brute", "fpt", "auto"}));
  solve->add_flag("--no-reduction", f.no_reduction, "Disable the FPT data reduction rules");
  solve->add_option("--thresholds", f.thresholds, "ccav reduction thresholds")
      ->check(CLI::IsMember({"corrected", "published"}));
  add_model(solve);

  auto* verify_cmd = app.add_subcommand("verify", "Check a pick list against an instance");
  verify_cmd->add_option("file", f.file, "Instance file")->required();
  verify_cmd->add_option("picks", f.picks, "Picks: v<k> or candidate labels");
  add_model(verify_cmd);

  auto* reduce = app.add_subcommand("reduce", "Build a control instance from a dominating set instance");
  reduce->add_option("graph", f.graph, "Graph file")->required();
  reduce->add_option("k", f.k, "Dominating set size bound")->required();
  reduce->add_option("target", f.target, "Reduction name")->required()->check(CLI::IsMember(reduction_names()));
  reduce->add_option("--out", f.out, "Instance output path (witness goes to <out>.witness)")->required();
  reduce->add_flag("--force", f.force, "Lift the ccdv size guard");
  reduce->add_flag("--as-printed", f.as_printed, "2ccac-up: unrepaired gadget sizes");

  auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
  gen->add_option("--seed", f.gen.seed, "Seed")->required();
  gen->add_option("--m", f.gen.m, "Registered candidates")->required();
  gen->add_option("--n", f.gen.n, "Registered votes")->required();
  gen->add_option("--t", f.gen.t, "Truncation bound (t = m: complete votes)")->required();
  gen->add_option("--rule", f.gen_rule, "borda, up, down or av")->required();
  gen->add_option("--kind", f.gen_kind, "ccav, ccdv, ccac or ccdc")->required();
  gen->add_option("--budget", f.gen.budget, "Budget")->required();
  gen->add_option("--pool", f.gen.pool, "Pool votes (ccav) or pool candidates (ccac)");
  gen->add_option("--out", f.out, "Output path (default stdout)");
  add_model(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*score) return cmd_score(f, out);
    if (*solve) return cmd_solve(f, out);
    if (*verify_cmd) return cmd_verify(f, out);
    if (*reduce) return cmd_reduce(f, out);
    if (*gen) return cmd_gen(f, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace borda

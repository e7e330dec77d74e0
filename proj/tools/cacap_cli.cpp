// Command-line front end: validate, solve, verify, gen, analyze, bench.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cacap/analysis.hpp"
#include "cacap/completion.hpp"
#include "cacap/cuts.hpp"
#include "cacap/error.hpp"
#include "cacap/exact.hpp"
#include "cacap/generators.hpp"
#include "cacap/io.hpp"
#include "cacap/matching.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace cacap;

namespace {

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kInvalid = 3,
  kInfeasible = 4,
  kTooLarge = 5,
  kBound = 6,
};

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return kParse;
    case ErrorCode::InfeasibleInstance:
      return kInfeasible;
    case ErrorCode::BudgetExceeded:
    case ErrorCode::SubcactusTooLarge:
      return kTooLarge;
    case ErrorCode::BoundViolation:
      return kBound;
    default:
      return kInvalid;
  }
}

// Failed verification; carries the message to print.
struct VerifyFailure {
  std::string message;
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
}

using Millis = std::chrono::duration<double, std::milli>;

struct SolveOptions {
  std::string algo = "combined";
  int budget = 0;  // 0: no brute force
  int leaf_cap = 8;
  bool timing = false;
};

SolutionFile solve(const Instance& inst, const SolveOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  SolutionFile out;
  out.algorithm = opt.algo;
  std::vector<std::pair<std::string, std::int64_t>> extra;
  Solution sol;

  if (opt.algo == "matching") {
    const auto run = run_matching_algorithm(inst);
    sol = run.solution();
    extra = {{"matching_size", run.matching.size()},
             {"matching_in", run.matching.in_count},
             {"matching_cross", run.matching.cross_count},
             {"added", static_cast<std::int64_t>(run.completion.added.size())},
             {"completion_arcs", run.completion.arc_count},
             {"leaves", run.completion.leaf_count},
             {"twice_allowance", run.completion.twice_allowance}};
  } else if (opt.algo == "subcactus") {
    sol = solve_subcacti(inst, opt.leaf_cap);
    extra = {{"leaf_cap", opt.leaf_cap}, {"k_wideness", k_wideness(inst)}};
  } else if (opt.algo == "combined") {
    const auto r = solve_combined(inst, opt.leaf_cap);
    sol = r.solution;
    extra = {{"matching_total", r.matching.solution().size()},
             {"subcactus_total", r.subcactus.size()},
             {"used_matching", r.used_matching ? 1 : 0},
             {"leaf_cap", opt.leaf_cap}};
  } else if (opt.algo == "exact") {
    const auto cert = brute_force_opt(inst, {opt.budget, false});
    sol = make_solution(inst, cert.optimum);
  } else {
    throw CLI::ValidationError("--algo", "unknown algorithm " + opt.algo);
  }

  out.links = sol.link_ids;
  out.size = sol.size();
  out.feasible = check_solution(inst, sol.link_ids).feasible;
  out.stats = {{"in", sol.in_count}, {"cross", sol.cross_count}};
  out.stats.insert(out.stats.end(), extra.begin(), extra.end());
  if (opt.budget > 0 && inst.link_count() <= opt.budget) {
    const auto cert = brute_force_opt(inst, {opt.budget, false});
    out.stats.push_back({"opt", cert.opt_value});
    out.stats.push_back({"twice_min_half_in", cert.twice_min_half_in});
    out.stats.push_back({"min_plus_cross", cert.min_plus_cross});
  }
  if (opt.timing) {
    const auto ms = Millis(std::chrono::steady_clock::now() - start).count();
    out.stats.push_back({"millis", static_cast<std::int64_t>(ms)});
  }
  return out;
}

std::string cut_text(const TwoCut& cut) {
  std::ostringstream os;
  os << "{";
  const auto members = cut.members();
  for (std::size_t i = 0; i < members.size(); ++i) os << (i ? "," : "") << members[i];
  os << "}";
  return os.str();
}

// Re-checks feasibility and every bound recorded in the stats. Returns the
// lines describing what was checked.
std::vector<std::string> verify(const Instance& inst, const SolutionFile& s) {
  std::vector<std::string> done;
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw VerifyFailure{what};
    done.push_back("ok: " + what);
  };
  auto stat = [&](const std::string& key) { return s.stat(key); };

  const auto check = check_solution(inst, s.links);
  if (!check.feasible) {
    throw VerifyFailure{"solution is infeasible; uncovered cut " + cut_text(*check.witness)};
  }
  require(s.feasible, "feasible flag matches");
  const int size = check.solution.size();
  require(s.size == size, "size " + std::to_string(s.size) + " matches the link list");
  if (auto v = stat("in")) require(*v == check.solution.in_count, "in-link count " + std::to_string(*v));
  if (auto v = stat("cross")) require(*v == check.solution.cross_count, "cross-link count " + std::to_string(*v));
  if (auto allowance = stat("twice_allowance")) {
    const auto added = stat("added").value_or(0);
    require(2 * added <= *allowance, "completion uses " + std::to_string(added) + " links, allowance " +
                                         std::to_string(*allowance) + "/2");
  }
  if (auto m = stat("matching_total")) require(size <= *m, "no larger than the matching solution");
  if (auto m = stat("subcactus_total")) require(size <= *m, "no larger than the subcactus solution");
  if (auto opt = stat("opt")) {
    require(size >= *opt, "size is at least OPT = " + std::to_string(*opt));
    if (s.algorithm == "exact") require(size == *opt, "size equals OPT");
    if (s.algorithm == "combined") require(3 * size <= 4 * *opt, "size within 4/3 of OPT");
  }
  if (auto b = stat("twice_min_half_in"); b && s.algorithm == "matching") {
    require(2 * size <= *b, "size within min |H| + |H_in|/2 = " + std::to_string(*b) + "/2");
  }
  if (auto b = stat("min_plus_cross"); b && s.algorithm == "subcactus") {
    require(size <= *b, "size within min |H| + |H_cross| = " + std::to_string(*b));
  }
  return done;
}

EndpointRule parse_rule(const std::string& name) {
  if (name == "leaf") return EndpointRule::LeafToLeaf;
  if (name == "leaf-plus") return EndpointRule::LeafToLeafPlus;
  return EndpointRule::Any;
}

struct BenchRow {
  std::string instance, algo, size, opt, ratio, feasible;
  double millis = 0;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leaf-to-leaf cactus augmentation solver"};
  app.require_subcommand(1);

  std::string instance_path, solution_path, out_path;

  auto* validate = app.add_subcommand("validate", "Check that an instance file is valid");
  validate->add_option("instance", instance_path)->required();

  SolveOptions solve_opts;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance and write a solution file");
  solve_cmd->add_option("instance", instance_path)->required();
  solve_cmd->add_option("--algo", solve_opts.algo, "matching, subcactus, combined or exact")
      ->check(CLI::IsMember({"matching", "subcactus", "combined", "exact"}));
  solve_cmd->add_option("--budget", solve_opts.budget, "largest link count for brute force");
  solve_cmd->add_option("--leaf-cap", solve_opts.leaf_cap, "largest subcactus leaf count");
  solve_cmd->add_flag("--timing", solve_opts.timing, "record wall time in the stats");
  solve_cmd->add_option("--out", out_path);

  auto* verify_cmd = app.add_subcommand("verify", "Re-check a solution file against its instance");
  verify_cmd->add_option("instance", instance_path)->required();
  verify_cmd->add_option("solution", solution_path)->required();

  std::string family = "random", rule = "leaf";
  std::uint64_t seed = 1;
  int towers = 6;
  RandomProfile profile;
  bool no_repair = false;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--family", family)->check(CLI::IsMember({"fig3", "random", "random-tap"}));
  gen->add_option("--seed", seed);
  gen->add_option("-m,--towers", towers, "tower count for fig3");
  gen->add_option("--min-vertices", profile.min_vertices);
  gen->add_option("--max-vertices", profile.max_vertices);
  gen->add_option("--max-cycle", profile.max_cycle_length);
  gen->add_option("--k-cap", profile.k_cap);
  gen->add_option("--links", profile.link_count);
  gen->add_option("--max-links", profile.max_links);
  gen->add_option("--rule", rule, "leaf, leaf-plus or any")->check(CLI::IsMember({"leaf", "leaf-plus", "any"}));
  gen->add_flag("--no-repair", no_repair, "do not add links to make the instance feasible");
  gen->add_option("--out", out_path);

  BCheckConfig bcfg;
  bool check_b = false, rho = false;
  auto* analyze = app.add_subcommand("analyze", "Numeric checks of the analysis constants");
  auto* b_opt = analyze->add_option("--check-b", bcfg.b, "check the b-condition for this b");
  analyze->add_option("--grid", bcfg.grid_step);
  analyze->add_option("--refine", bcfg.refinement_rounds);
  analyze->add_option("--sv-low", bcfg.sv_low);
  analyze->add_option("--sv-high", bcfg.sv_high);
  analyze->add_flag("--rho", rho, "solve for the ratio constant");
  double rho_b = 0.452;
  analyze->add_option("--rho-b", rho_b);

  std::string dir, algos = "matching,subcactus,combined";
  int bench_budget = 16, bench_leaf_cap = 8;
  auto* bench = app.add_subcommand("bench", "Run algorithms over a directory of instances (CSV)");
  bench->add_option("--dir", dir)->required();
  bench->add_option("--algos", algos, "comma-separated algorithm list");
  bench->add_option("--budget", bench_budget, "largest link count for the OPT column");
  bench->add_option("--leaf-cap", bench_leaf_cap, "largest subcactus leaf count");
  bench->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) {
      const auto file = parse_instance(read_text_file(instance_path));
      const auto& inst = file.instance;
      std::cout << "valid: n=" << inst.vertex_count() << " cycles=" << inst.cactus().cycle_count()
                << " links=" << inst.link_count() << " leaves=" << inst.cactus().leaves().size()
                << " leaf-to-leaf=" << is_leaf_to_leaf(inst) << " leaf-to-leaf+=" << is_leaf_to_leaf_plus(inst)
                << " k=" << k_wideness(inst) << " feasible=" << check_solution(inst, all_link_ids(inst)).feasible
                << "\n";
    } else if (*solve_cmd) {
      if (solve_opts.algo == "exact" && solve_opts.budget <= 0) {
        std::cerr << "solve --algo exact requires --budget\n";
        return kUsage;
      }
      const auto file = parse_instance(read_text_file(instance_path));
      emit(serialize_solution(solve(file.instance, solve_opts)), out_path);
    } else if (*verify_cmd) {
      const auto file = parse_instance(read_text_file(instance_path));
      const auto sol = parse_solution(read_text_file(solution_path));
      try {
        for (const auto& line : verify(file.instance, sol)) std::cout << line << "\n";
      } catch (const VerifyFailure& f) {
        std::cerr << "verify failed: " << f.message << "\n";
        return kInfeasible;
      }
    } else if (*gen) {
      if (family == "fig3") {
        emit(serialize_instance(gen_fig3(towers)), out_path);
      } else {
        profile.rule = parse_rule(rule);
        profile.ensure_feasible = !no_repair;
        if (family == "random") {
          emit(serialize_instance(gen_random(profile, seed)), out_path);
        } else {
          auto tap = gen_random_tap(profile, seed);
          emit(serialize_instance(InstanceFile{tap_to_cacap(tap), tap}), out_path);
        }
      }
    } else if (*analyze) {
      check_b = b_opt->count() > 0 || !rho;
      nlohmann::ordered_json report;
      if (check_b) {
        const auto r = verify_b(bcfg);
        report["b_condition"] = {{"b", bcfg.b},
                                 {"grid_step", bcfg.grid_step},
                                 {"refinement_rounds", bcfg.refinement_rounds},
                                 {"minimum", r.min_value},
                                 {"holds", r.min_value >= -1e-9},
                                 {"evaluations", r.evaluations},
                                 {"argmin",
                                  {{"lambda_v", r.argmin.lambda_v},
                                   {"lambda_w", r.argmin.lambda_w},
                                   {"eta", r.argmin.eta},
                                   {"s", r.argmin.s},
                                   {"x_sv", r.argmin.x_sv}}}};
      }
      if (rho) {
        const auto r = compute_rho(rho_b);
        report["rho"] = {{"b", r.b},
                         {"alpha_star", r.alpha_star},
                         {"rho", r.rho},
                         {"residual", r.residual},
                         {"branch_gap", r.branch_gap},
                         {"rounded_equation_root", r.rounded_root},
                         {"rounded_equation_rho", r.rounded_rho}};
      }
      std::cout << report.dump(2) << "\n";
    } else if (*bench) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      std::ostringstream csv;
      csv << "instance,algo,size,opt,ratio,feasible,millis\n";
      for (const auto& path : files) {
        const auto inst = parse_instance(read_text_file(path.string())).instance;
        std::string opt_text;
        int opt = 0;
        if (inst.link_count() <= bench_budget) {
          try {
            opt = brute_force_opt(inst, {bench_budget, false}).opt_value;
            opt_text = std::to_string(opt);
          } catch (const Error&) {
          }
        }
        for (const auto& algo : split_list(algos)) {
          SolveOptions o;
          o.algo = algo;
          o.budget = algo == "exact" ? bench_budget : 0;
          o.leaf_cap = bench_leaf_cap;
          BenchRow row{path.filename().string(), algo, "", opt_text, "", "", 0};
          const auto start = std::chrono::steady_clock::now();
          try {
            const auto s = solve(inst, o);
            row.size = std::to_string(s.size);
            row.feasible = s.feasible ? "true" : "false";
            if (opt > 0) {
              std::ostringstream r;
              r.precision(4);
              r << std::fixed << static_cast<double>(s.size) / opt;
              row.ratio = r.str();
            }
          } catch (const Error& e) {
            row.feasible = std::string(to_string(e.code()));
          }
          row.millis = Millis(std::chrono::steady_clock::now() - start).count();
          csv << row.instance << "," << row.algo << "," << row.size << "," << row.opt << "," << row.ratio << ","
              << row.feasible << "," << static_cast<std::int64_t>(row.millis) << "\n";
        }
      }
      emit(csv.str(), out_path);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  return kOk;
}

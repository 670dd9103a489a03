// densityforge — exact density computation on eventually periodic sets,
// constructive realization of intermediate densities, and a randomized
// axiom-verification harness.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "densityforge/counterexamples.hpp"
#include "densityforge/darboux.hpp"
#include "densityforge/density.hpp"
#include "densityforge/harness.hpp"
#include "densityforge/json_io.hpp"
#include "densityforge/setexpr.hpp"

namespace df = densityforge;

namespace {

struct CommonOpts {
  std::string format = "table";
  std::uint64_t lcm_cap = 0;  // 0 = keep default

  bool json() const { return format == "json"; }
  void apply() const {
    if (lcm_cap) df::limits().lcm_cap = lcm_cap;
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  cmd->add_option("--lcm-cap", opts.lcm_cap, "Override the modulus cap (default 1000000000)");
}

df::DensityFunctional functional_by_name(const std::string& name) {
  if (name == "canonical") return df::canonical_functional();
  if (name == "canonical_lower") return df::lower_conjugate(df::canonical_functional());
  if (name == "gap_sup") return df::gap_sup_functional();
  if (name == "dichotomy") return df::dichotomy_functional();
  if (name == "inf_reciprocal") return df::inf_reciprocal_functional();
  throw CLI::ValidationError("--functional",
                             "unknown functional '" + name +
                                 "' (choose one of: canonical, canonical_lower, gap_sup, "
                                 "dichotomy, inf_reciprocal)");
}

std::vector<std::uint64_t> parse_schedule(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoull(item));
  }
  return out;
}

int run_eval(const std::string& set_text, const CommonOpts& opts) {
  df::APSet a = df::normalize(df::parse_set_expr(set_text));
  df::Rational v = df::canonical_value(a);
  if (opts.json()) {
    df::Json j;
    j["set"] = df::apset_json(a);
    j["value"] = df::rat_to_fraction_string(v);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << df::rat_to_string(v) << "\n";
  }
  return 0;
}

void print_trace_table(const df::DarbouxTrace& t) {
  std::cout << (t.lower_mode ? "lower" : "upper") << " target "
            << df::rat_to_string(t.request.target) << ", depth " << t.request.depth << "\n";
  std::cout << std::left << std::setw(4) << "n" << std::setw(12) << "k" << std::setw(12) << "h"
            << std::setw(22) << "valA" << std::setw(22) << "valB" << "bound\n";
  for (std::size_t i = 0; i < t.stages.size(); ++i) {
    const df::Stage& s = t.stages[i];
    std::cout << std::left << std::setw(4) << s.index << std::setw(12) << s.gap_modulus
              << std::setw(12) << s.gap_residue << std::setw(22)
              << df::rat_to_string(s.inner_value) << std::setw(22)
              << df::rat_to_string(s.outer_value) << df::rat_to_string(t.certificates[i]) << "\n";
  }
  if (t.capped) std::cout << "stopped early: " << t.cap_note << "\n";
}

int run_construct(const std::string& x_text, const std::string& y_text,
                  const std::string& target_text, int depth, bool lower,
                  const CommonOpts& opts) {
  df::DarbouxRequest req;
  req.x = df::normalize(df::parse_set_expr(x_text));
  req.y = df::normalize(df::parse_set_expr(y_text));
  req.target = df::rat_parse(target_text);
  req.depth = depth;
  df::DarbouxTrace trace = lower ? df::dual_construct(req) : df::construct(req);
  if (opts.json())
    std::cout << df::trace_json(trace).dump(2) << "\n";
  else
    print_trace_table(trace);
  return 0;
}

int run_axioms(const std::string& functional, const df::GeneratorConfig& cfg,
               const CommonOpts& opts) {
  df::DensityFunctional f = functional_by_name(functional);
  df::AxiomReport report = df::check_axioms(f, cfg);
  df::WeakDarbouxReport weak = df::check_weak_darboux_consequence(f, cfg);
  if (opts.json()) {
    df::Json j;
    j["axioms"] = df::axiom_report_json(report);
    j["weak_darboux"] = df::weak_darboux_json(weak);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "functional: " << report.functional << " (" << report.trials << " sets)\n";
  for (const df::AxiomCheck& c : report.checks) {
    std::cout << std::left << std::setw(12) << c.axiom
              << (c.verdict == df::Verdict::Pass ? "pass" : "VIOLATED") << "  (tested "
              << c.tested << ")";
    if (c.verdict == df::Verdict::Violated) {
      std::cout << "  witness: " << c.witness_lhs;
      if (!c.witness_rhs.empty()) std::cout << " ; " << c.witness_rhs;
      if (c.witness_k) std::cout << " ; k=" << c.witness_k << " h=" << c.witness_h;
      std::cout << " ; " << c.detail;
    }
    std::cout << "\n";
  }
  std::cout << "weak Darboux consequence: "
            << (weak.refuted ? "refuted by " + weak.witness + " (" + weak.detail + ")"
                             : "no refutation in " + std::to_string(weak.tested) + " trials")
            << "\n";
  return 0;
}

int run_estimate(const std::string& set_text, const std::string& schedule_text,
                 std::uint64_t banach_window, std::uint64_t banach_scan, const CommonOpts& opts) {
  df::APSet a = df::normalize(df::parse_set_expr(set_text));
  std::vector<std::uint64_t> schedule = parse_schedule(schedule_text);
  df::DensityEstimate asym = df::estimate_upper_asymptotic(a, schedule);
  bool with_banach = banach_window > 0;
  df::DensityEstimate banach;
  if (with_banach) {
    auto member = [&a](std::uint64_t x) { return a.contains(x); };
    banach = df::estimate_banach(member, banach_window, banach_scan);
  }
  if (opts.json()) {
    df::Json j;
    j["asymptotic"] = df::estimate_json(asym);
    j["banach"] = with_banach ? df::estimate_json(banach) : df::Json(nullptr);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "upper asymptotic estimate: " << asym.value << "\n";
  for (const auto& [n, ratio] : asym.samples)
    std::cout << "  N=" << n << "  ratio=" << ratio << "\n";
  if (asym.bound) std::cout << "  error bound: " << df::rat_to_string(*asym.bound) << "\n";
  if (with_banach)
    std::cout << "banach window estimate: " << banach.value << " (window " << banach_window
              << ", scan " << banach_scan << ")\n";
  return 0;
}

int run_demo(int n_max, const CommonOpts& opts) {
  df::Example4Family fam(n_max);
  df::SymmetricDarbouxReport report =
      df::symmetric_darboux_demo(fam, df::default_example4_samples(fam));
  if (opts.json()) {
    std::cout << df::demo_report_json(report).dump(2) << "\n";
    return 0;
  }
  std::cout << "factorial-block family, n_max = " << fam.n_max() << "\nblocks:";
  for (const auto& [lo, hi] : fam.blocks()) std::cout << " [" << lo << "," << hi << "]";
  std::cout << "\n\n";
  for (const df::ThetaResult& r : report.entries) {
    std::cout << std::left << std::setw(22) << r.name << "iota=" << r.iota << "  d*=";
    if (r.dstar_exact)
      std::cout << df::rat_to_string(*r.dstar_exact) << " (exact)";
    else
      std::cout << r.dstar_estimate.value << " (estimate)";
    std::cout << "  theta*=";
    if (r.theta_exact)
      std::cout << df::rat_to_string(*r.theta_exact) << " (exact)";
    else
      std::cout << r.theta_estimate << " (estimate)";
    if (r.upper_bound) std::cout << "  bound<=" << df::rat_to_string(*r.upper_bound);
    std::cout << "\n    " << r.side_note << "\n";
  }
  std::cout << "\nany theta* equal to 1/2: " << (report.half_attained ? "yes" : "no") << "\n"
            << report.note << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact set densities on eventually periodic sets"};
  app.require_subcommand(1);

  CommonOpts opts;

  auto* eval_cmd = app.add_subcommand("eval", "Canonical density of a DSL set expression");
  std::string eval_set;
  eval_cmd->add_option("--set,set", eval_set, "Set expression")->required();
  add_common(eval_cmd, opts);

  auto* construct_cmd =
      app.add_subcommand("construct", "Build nested sets realizing an intermediate density");
  std::string cx, cy, ctarget;
  int cdepth = 10;
  bool clower = false;
  construct_cmd->add_option("--x", cx, "Inner set X")->required();
  construct_cmd->add_option("--y", cy, "Outer set Y")->required();
  construct_cmd->add_option("--target", ctarget, "Target density p/q")->required();
  construct_cmd->add_option("--depth", cdepth, "Number of stages")->capture_default_str();
  construct_cmd->add_flag("--lower", clower, "Target the conjugate (lower) density");
  add_common(construct_cmd, opts);

  auto* axioms_cmd = app.add_subcommand("axioms", "Randomized axiom verification");
  std::string functional = "canonical";
  df::GeneratorConfig cfg;
  axioms_cmd->add_option("--functional", functional, "Functional to check")
      ->capture_default_str();
  axioms_cmd->add_option("--trials", cfg.trials, "Generated sets")->capture_default_str();
  axioms_cmd->add_option("--seed", cfg.seed, "Generator seed")->capture_default_str();
  axioms_cmd->add_option("--max-modulus", cfg.max_modulus, "Max generated modulus")
      ->capture_default_str();
  axioms_cmd->add_option("--max-finite", cfg.max_finite, "Max finite perturbation size")
      ->capture_default_str();
  add_common(axioms_cmd, opts);

  auto* estimate_cmd = app.add_subcommand("estimate", "Finite-sample density estimates");
  std::string est_set, schedule = "1000,10000,100000";
  std::uint64_t banach_window = 0, banach_scan = 100000;
  estimate_cmd->add_option("--set", est_set, "Set expression")->required();
  estimate_cmd->add_option("--schedule", schedule, "Comma-separated prefix lengths")
      ->capture_default_str();
  estimate_cmd->add_option("--banach-window", banach_window,
                           "Window length for the sliding-window estimate (0 = off)");
  estimate_cmd->add_option("--banach-scan", banach_scan, "Scan bound for the window estimate")
      ->capture_default_str();
  add_common(estimate_cmd, opts);

  auto* demo_cmd = app.add_subcommand("demo", "Factorial-block family and theta* report");
  int n_max = 3;
  demo_cmd->add_option("--n-max", n_max, "Block cutoff (2..8)")->capture_default_str();
  add_common(demo_cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    opts.apply();
    if (app.got_subcommand(eval_cmd)) return run_eval(eval_set, opts);
    if (app.got_subcommand(construct_cmd))
      return run_construct(cx, cy, ctarget, cdepth, clower, opts);
    if (app.got_subcommand(axioms_cmd)) return run_axioms(functional, cfg, opts);
    if (app.got_subcommand(estimate_cmd))
      return run_estimate(est_set, schedule, banach_window, banach_scan, opts);
    if (app.got_subcommand(demo_cmd)) return run_demo(n_max, opts);
  } catch (const df::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::bad_alloc&) {
    std::cerr << "resource limit: allocation failed\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const df::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

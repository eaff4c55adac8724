// crnstab: structural stability analysis for stochastic mass-action
// reaction networks. Subcommands: analyze, tiers, drift, simulate, classes.
//
// Exit codes: 0 = analysis ran and some criterion holds (or the subcommand
// has no verdict semantics), 2 = analysis ran and no criterion holds,
// 1 = input error, 3 = budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "crn/drift.hpp"
#include "crn/graph.hpp"
#include "crn/network.hpp"
#include "crn/report.hpp"
#include "crn/sim.hpp"
#include "crn/theorems.hpp"
#include "crn/tiers.hpp"

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << data;
}

std::int64_t env_budget(const char* name, std::int64_t fallback) {
  const char* value = std::getenv(name);
  if (!value || !*value) return fallback;
  char* end = nullptr;
  long long parsed = std::strtoll(value, &end, 10);
  if (*end != '\0' || parsed <= 0) throw InputError(std::string(name) + " must be a positive integer");
  return parsed;
}

std::vector<std::int64_t> parse_int_list(const std::string& text, std::size_t expect,
                                         const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw InputError(std::string("malformed ") + what + ": " + text);
    }
  }
  if (out.size() == 1 && expect > 1) out.assign(expect, out.front());
  if (out.size() != expect)
    throw InputError(std::string(what) + " needs " + std::to_string(expect) +
                     " comma-separated values");
  return out;
}

crn::LyapunovSpec make_lyapunov(const std::string& kind, double delta) {
  if (kind == "entropy") return crn::LyapunovSpec::entropy();
  if (kind == "linear") return crn::LyapunovSpec::linear();
  if (kind == "power") return crn::LyapunovSpec::power(delta);
  if (kind == "sum") return crn::LyapunovSpec::entropy_plus_power(delta);
  throw InputError("unknown Lyapunov kind '" + kind + "' (entropy|linear|power|sum)");
}

std::string drift_csv(const crn::ReactionNetwork& net, const crn::DriftReport& report) {
  std::ostringstream out;
  out << "R,shell_max,argmax\n";
  for (const auto& s : report.shells) {
    char value[32];
    std::snprintf(value, sizeof(value), "%.17g", s.max_value);
    out << s.radius << "," << value << "," << crn::format_state(net, s.argmax) << "\n";
  }
  return out.str();
}

int run_analyze(const std::string& path, bool with_tiers, std::int64_t drift_rmax,
                const std::string& lyapunov_kind, double delta, bool with_sim,
                double sim_t, std::uint64_t seed, const std::string& json_path) {
  std::string text = read_file(path);
  crn::ReactionNetwork net = crn::parse_network(text);
  crn::VerdictSummary verdict = crn::best_verdict(net);
  crn::Json report = crn::analysis_report_json(net, verdict, path, text);

  std::ostringstream text_out;
  text_out << render_verdict_text(net, verdict);

  if (with_tiers) {
    auto family = crn::SequenceFamily::default_family(net.species_count());
    auto search = crn::search_counterexample(net, family);
    report["tier_search"] = crn::counterexample_search_json(net, search);
    text_out << "tier family search: "
             << (search.found ? "counterexample found: " + search.sequence.to_string(net)
                              : "no counterexample in the default family")
             << "\n";
  }
  if (drift_rmax > 0) {
    auto spec = make_lyapunov(lyapunov_kind, delta);
    auto drift = crn::drift_scan(net, spec, drift_rmax,
                                 env_budget("CRN_SHELL_BUDGET", 2'000'000));
    report["drift"] = crn::drift_report_json(net, drift);
    text_out << "drift scan (" << spec.to_string() << ", R <= " << drift_rmax << "): "
             << (drift.verdict == crn::DriftReport::Verdict::ConfirmedUpToRmax
                     ? "confirmed, exception bound " + std::to_string(drift.exception_bound)
                     : "violated at " + crn::format_state(net, drift.violation_state))
             << "\n";
  }
  if (with_sim) {
    crn::State x0(net.species_count(), 1);
    auto traj = crn::simulate(net, x0, sim_t, seed, crn::SimMethod::Direct);
    crn::Json sim;
    sim["x0"] = crn::format_state(net, x0);
    sim["t_end"] = sim_t;
    sim["seed"] = seed;
    sim["method"] = crn::sim_method_id(traj.method);
    sim["jumps"] = traj.jumps.size();
    sim["final_state"] =
        crn::format_state(net, traj.jumps.empty() ? x0 : traj.jumps.back().post_state);
    sim["absorbed"] = traj.absorbed;
    sim["truncated"] = traj.truncated;
    report["simulation"] = sim;
    text_out << "simulation: " << traj.jumps.size() << " jumps to t = " << sim_t
             << (traj.absorbed ? " (absorbed)" : "") << "\n";
  }

  if (json_path == "-") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text_out.str();
    if (!json_path.empty()) write_output(json_path, report.dump(2) + "\n");
  }
  return verdict.any_holds ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structural positive-recurrence analysis for stochastic mass-action "
               "reaction networks"};
  app.require_subcommand(1);

  std::string path, json_path, seq_spec, out_path, lyapunov_kind = "entropy";
  std::string x0_text, box_text, method_name = "direct";
  bool with_tiers = false, with_sim = false;
  std::int64_t drift_rmax = 0, rmax = 40;
  double delta = 0.5, t_end = 100.0, sim_t = 1000.0, burn_in = 0.0;
  std::uint64_t seed = 0;

  auto* analyze = app.add_subcommand("analyze", "run the structural certificate checkers");
  analyze->add_option("file", path, "reaction network file")->required();
  analyze->add_flag("--tiers", with_tiers, "search the default sequence family");
  analyze->add_option("--drift", drift_rmax, "add a drift scan up to this radius");
  analyze->add_option("--lyapunov", lyapunov_kind, "entropy|linear|power|sum");
  analyze->add_option("--delta", delta, "delta for power/sum Lyapunov");
  analyze->add_flag("--simulate", with_sim, "add a short simulation diagnostic");
  analyze->add_option("--sim-t", sim_t, "simulation horizon for --simulate");
  analyze->add_option("--seed", seed, "seed for randomized diagnostics");
  analyze->add_option("--json", json_path, "write the JSON report here ('-' = stdout)");

  auto* tiers = app.add_subcommand("tiers", "tier partitions along a monomial sequence");
  tiers->add_option("file", path, "reaction network file")->required();
  tiers->add_option("--seq", seq_spec, "per-species growth laws, e.g. \"A=n^2,B=0,C=n\"")
      ->required();
  tiers->add_option("--json", json_path, "write the JSON report here ('-' = stdout)");

  auto* drift = app.add_subcommand("drift", "exhaustive generator scan over lattice shells");
  drift->add_option("file", path, "reaction network file")->required();
  drift->add_option("--rmax", rmax, "largest shell radius")->required();
  drift->add_option("--lyapunov", lyapunov_kind, "entropy|linear|power|sum");
  drift->add_option("--delta", delta, "delta for power/sum Lyapunov");
  drift->add_option("--out", out_path, "CSV output path ('-' = stdout)");

  auto* simulate = app.add_subcommand("simulate", "exact stochastic simulation");
  simulate->add_option("file", path, "reaction network file")->required();
  simulate->add_option("--x0", x0_text, "initial counts, comma separated")->required();
  simulate->add_option("--t", t_end, "time horizon")->required();
  simulate->add_option("--seed", seed, "RNG seed");
  simulate->add_option("--method", method_name, "direct|nextreaction");
  simulate->add_option("--out", out_path, "trajectory CSV path ('-' = stdout)");

  auto* classes = app.add_subcommand("classes", "communicating classes in a truncation box");
  classes->add_option("file", path, "reaction network file")->required();
  classes->add_option("--box", box_text, "per-species upper bounds, comma separated")
      ->required();
  classes->add_option("--json", json_path, "write the JSON report here ('-' = stdout)");

  // unused in some subcommands
  (void)burn_in;

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed())
      return run_analyze(path, with_tiers, drift_rmax, lyapunov_kind, delta, with_sim, sim_t,
                         seed, json_path);

    if (tiers->parsed()) {
      std::string text = read_file(path);
      crn::ReactionNetwork net = crn::parse_network(text);
      auto seq = crn::parse_sequence_spec(net, seq_spec);
      auto report = crn::tier_partitions(net, seq);
      if (json_path == "-") {
        crn::Json j;
        j["schema_version"] = crn::kSchemaVersion;
        j["sequence"] = seq.to_string(net);
        j["tier_report"] = crn::tier_report_json(net, report);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "sequence: " << seq.to_string(net) << " (tail from n = "
                  << seq.tail_start << ")\n"
                  << crn::render_tier_text(net, report);
        if (!json_path.empty()) {
          crn::Json j;
          j["schema_version"] = crn::kSchemaVersion;
          j["sequence"] = seq.to_string(net);
          j["tier_report"] = crn::tier_report_json(net, report);
          write_output(json_path, j.dump(2) + "\n");
        }
      }
      return 0;
    }

    if (drift->parsed()) {
      std::string text = read_file(path);
      crn::ReactionNetwork net = crn::parse_network(text);
      auto spec = make_lyapunov(lyapunov_kind, delta);
      auto report =
          crn::drift_scan(net, spec, rmax, env_budget("CRN_SHELL_BUDGET", 2'000'000));
      std::string csv = drift_csv(net, report);
      if (out_path.empty()) out_path = "-";
      write_output(out_path, csv);
      if (out_path != "-")
        std::cout << (report.verdict == crn::DriftReport::Verdict::ConfirmedUpToRmax
                          ? "drift confirmed up to R = " + std::to_string(report.r_max) +
                                ", exception bound " + std::to_string(report.exception_bound)
                          : "drift violated at " +
                                crn::format_state(net, report.violation_state))
                  << "\n";
      return 0;
    }

    if (simulate->parsed()) {
      std::string text = read_file(path);
      crn::ReactionNetwork net = crn::parse_network(text);
      auto x0_values = parse_int_list(x0_text, net.species_count(), "--x0");
      crn::State x0(x0_values.begin(), x0_values.end());
      for (auto v : x0)
        if (v < 0) throw InputError("--x0 entries must be non-negative");
      crn::SimMethod method;
      if (method_name == "direct")
        method = crn::SimMethod::Direct;
      else if (method_name == "nextreaction")
        method = crn::SimMethod::NextReaction;
      else
        throw InputError("unknown method '" + method_name + "' (direct|nextreaction)");

      std::ostringstream csv;
      csv << "t,reaction";
      for (const auto& s : net.species()) csv << "," << s;
      csv << "\n";
      auto row = [&](double t, int reaction, const crn::State& x) {
        char tbuf[32];
        std::snprintf(tbuf, sizeof(tbuf), "%.17g", t);
        csv << tbuf << "," << reaction;
        for (auto v : x) csv << "," << v;
        csv << "\n";
      };
      row(0.0, -1, x0);
      crn::Stepper stepper(net, x0, seed, method);
      while (true) {
        int fired = stepper.step(t_end);
        if (fired < 0) break;
        row(stepper.time(), fired, stepper.state());
      }
      if (out_path.empty()) out_path = "-";
      write_output(out_path, csv.str());
      if (stepper.truncated()) {
        std::cerr << "warning: trajectory truncated (counts outgrew the numeric range)\n";
      }
      return 0;
    }

    if (classes->parsed()) {
      std::string text = read_file(path);
      crn::ReactionNetwork net = crn::parse_network(text);
      auto bounds = parse_int_list(box_text, net.species_count(), "--box");
      crn::Box box{std::vector<std::int64_t>(bounds.begin(), bounds.end())};
      auto decomposition =
          crn::communicating_classes(net, box, env_budget("CRN_BOX_BUDGET", 1'000'000));
      crn::Json j;
      j["schema_version"] = crn::kSchemaVersion;
      j["box"] = box_text;
      crn::Json arr = crn::Json::array();
      for (std::size_t c = 0; c < decomposition.classes.size(); ++c) {
        crn::Json e;
        e["size"] = decomposition.classes[c].size();
        e["closed_in_box"] = static_cast<bool>(decomposition.closed[c]);
        e["boundary_caveat"] = static_cast<bool>(decomposition.boundary_caveat[c]);
        crn::Json states = crn::Json::array();
        for (const auto& s : decomposition.classes[c])
          states.push_back(crn::format_state(net, s));
        e["states"] = states;
        arr.push_back(e);
      }
      j["classes"] = arr;
      if (json_path.empty()) json_path = "-";
      write_output(json_path, j.dump(2) + "\n");
      return 0;
    }
  } catch (const crn::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 3;
  } catch (const crn::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

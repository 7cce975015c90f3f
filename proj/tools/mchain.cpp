// mchain: command-line front end for the finite Markov chain toolkit.
// Subcommands load graph/chain JSON files, run an analysis or simulation,
// and emit CSV (default) or JSON. Runs are deterministic for a fixed seed.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "markov/absorption.hpp"
#include "markov/chain.hpp"
#include "markov/distance.hpp"
#include "markov/error.hpp"
#include "markov/graph.hpp"
#include "markov/io.hpp"
#include "markov/martingale.hpp"
#include "markov/models.hpp"
#include "markov/optimize.hpp"
#include "markov/random.hpp"
#include "markov/samplers.hpp"
#include "markov/spectral.hpp"
#include "markov/stationary.hpp"

namespace {

using markov::Error;

// Errors raised while reading input files exit with code 2; domain errors
// raised by the analysis itself exit with code 1.
struct InputError {
  Error error;
};

constexpr int kExitDomainError = 1;
constexpr int kExitInputError = 2;

std::string format_number(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

// Tabular output rendered as CSV or as a JSON array of row objects.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  void write_csv(std::ostream& out) const {
    write_joined(out, header_);
    for (const auto& row : rows_) write_joined(out, row);
  }

  void write_json(std::ostream& out) const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : rows_) {
      nlohmann::json obj;
      for (std::size_t c = 0; c < header_.size(); ++c) obj[header_[c]] = row[c];
      rows.push_back(std::move(obj));
    }
    out << rows.dump(2) << "\n";
  }

 private:
  static void write_joined(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out << ",";
      out << cells[c];
    }
    out << "\n";
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

struct GlobalOptions {
  std::uint64_t seed = 42;
  std::string out_path;  // empty = stdout
  std::string format = "csv";
  double tol = 1e-9;
};

void emit(const Table& table, const GlobalOptions& opts) {
  if (opts.out_path.empty()) {
    if (opts.format == "json")
      table.write_json(std::cout);
    else
      table.write_csv(std::cout);
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) throw Error("WriteFailed", "cannot open " + opts.out_path);
  if (opts.format == "json")
    table.write_json(out);
  else
    table.write_csv(out);
}

void emit_json(const nlohmann::json& j, const GlobalOptions& opts) {
  if (opts.out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) throw Error("WriteFailed", "cannot open " + opts.out_path);
  out << j.dump(2) << "\n";
}

nlohmann::json load_input(const std::string& path) {
  try {
    return markov::load_json_file(path);
  } catch (const Error& e) {
    throw InputError{e};
  }
}

markov::TransitionMatrix load_chain(const std::string& path) {
  const nlohmann::json j = load_input(path);
  try {
    return markov::chain_from_json(j);
  } catch (const Error& e) {
    throw InputError{Error(e.code(), path + ": " + e.message())};
  }
}

markov::Graph load_graph(const std::string& path) {
  const nlohmann::json j = load_input(path);
  try {
    return markov::graph_from_json(j);
  } catch (const Error& e) {
    throw InputError{Error(e.code(), path + ": " + e.message())};
  }
}

std::string state_name(const markov::TransitionMatrix& p, std::size_t i) {
  return p.labels.empty() ? std::to_string(i) : p.labels[i];
}

std::vector<std::size_t> parse_state_list(const std::string& text) {
  std::vector<std::size_t> states;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string token = text.substr(pos, next - pos);
    try {
      states.push_back(std::stoul(token));
    } catch (const std::exception&) {
      throw InputError{Error("ParseError", "bad state index '" + token + "'")};
    }
    pos = next + 1;
  }
  return states;
}

// ---------------------------------------------------------------------------
// subcommands

void cmd_gen_graph(const GlobalOptions& opts, const std::string& kind, std::size_t n,
                   std::size_t m, double p) {
  std::optional<markov::Graph> g;
  if (kind == "cycle") g = markov::cycle_graph(n);
  else if (kind == "path") g = markov::path_graph(n);
  else if (kind == "complete") g = markov::complete_graph(n);
  else if (kind == "complete-bipartite") g = markov::complete_bipartite_graph(n, m);
  else if (kind == "hypercube") g = markov::hypercube_graph(n);
  else if (kind == "star") g = markov::star_graph(n);
  else if (kind == "erdos-renyi") {
    markov::RandomSource rng(opts.seed);
    g = markov::erdos_renyi(n, p, rng);
  } else {
    throw InputError{Error("ParseError", "unknown graph kind '" + kind + "'")};
  }
  emit_json(markov::graph_to_json(*g), opts);
}

void cmd_analyze(const GlobalOptions& opts, const std::string& chain_path) {
  const markov::TransitionMatrix p = load_chain(chain_path);
  Table table({"property", "value"});
  table.add_row({"states", std::to_string(p.size())});
  const bool irreducible = markov::is_irreducible(p);
  table.add_row({"irreducible", irreducible ? "true" : "false"});
  if (irreducible) {
    const std::size_t d = markov::period(p);
    table.add_row({"period", std::to_string(d)});
    table.add_row({"aperiodic", d == 1 ? "true" : "false"});
  }
  emit(table, opts);
}

void cmd_stationary(const GlobalOptions& opts, const std::string& chain_path, bool any) {
  const markov::TransitionMatrix p = load_chain(chain_path);
  const markov::DistributionVector pi =
      any ? markov::solve_stationary_any(p) : markov::solve_stationary(p);
  Table table({"state", "prob"});
  for (std::size_t i = 0; i < pi.size(); ++i)
    table.add_row({state_name(p, i), format_number(pi[i])});
  emit(table, opts);
}

void cmd_hitting(const GlobalOptions& opts, const std::string& chain_path,
                 const std::string& boundary_text) {
  const markov::TransitionMatrix p = load_chain(chain_path);
  const std::vector<std::size_t> boundary = parse_state_list(boundary_text);
  const markov::AbsorptionAnalysis a = markov::analyze(p, boundary);
  std::vector<std::string> header{"state", "expected_time"};
  for (std::size_t b : a.boundary) header.push_back("absorb_" + state_name(p, b));
  Table table(std::move(header));
  for (std::size_t i = 0; i < a.interior.size(); ++i) {
    std::vector<std::string> row{state_name(p, a.interior[i]),
                                 format_number(a.hit_times[i])};
    for (std::size_t j = 0; j < a.boundary.size(); ++j)
      row.push_back(format_number(a.hit_probs(i, j)));
    table.add_row(std::move(row));
  }
  emit(table, opts);
}

void cmd_mixing(const GlobalOptions& opts, const std::string& chain_path, double eps,
                bool empirical, std::size_t cap) {
  const markov::TransitionMatrix p = load_chain(chain_path);
  const markov::DistributionVector pi = markov::solve_stationary(p);
  const markov::SpectralData data = markov::spectrum(p, pi);
  double pi_min = 1.0;
  for (std::size_t i = 0; i < pi.size(); ++i) pi_min = std::min(pi_min, pi[i]);

  Table table({"quantity", "value"});
  for (std::size_t j = 0; j < data.eigenvalues.size(); ++j)
    table.add_row({"eigenvalue_" + std::to_string(j), format_number(data.eigenvalues[j])});
  table.add_row({"lambda_star", format_number(data.lambda_star)});
  table.add_row({"spectral_gap", format_number(data.gap)});
  table.add_row({"t_rel", format_number(data.t_rel)});
  const markov::MixingBounds bounds = markov::mixing_bounds(data, pi_min, eps);
  table.add_row({"lower_bound", format_number(bounds.lower)});
  table.add_row({"upper_bound", format_number(bounds.upper)});
  if (empirical) {
    const auto t_mix = markov::empirical_mixing_time(p, pi, eps, cap);
    table.add_row({"empirical_t_mix", t_mix ? std::to_string(*t_mix) : "not_reached"});
  }
  emit(table, opts);
}

void cmd_tv_curve(const GlobalOptions& opts, const std::string& chain_path, std::size_t from,
                  std::size_t steps) {
  const markov::TransitionMatrix p = load_chain(chain_path);
  const markov::DistributionVector pi = markov::solve_stationary(p);
  const std::vector<double> curve = markov::convergence_curve(p, from, pi, steps);
  Table table({"n", "tv"});
  for (std::size_t n = 0; n < curve.size(); ++n)
    table.add_row({std::to_string(n), format_number(curve[n])});
  emit(table, opts);
}

void cmd_sample(const GlobalOptions& opts, const std::string& chain_path, std::size_t start,
                std::size_t steps) {
  const markov::TransitionMatrix p = load_chain(chain_path);
  markov::RandomSource rng(opts.seed);
  const markov::Trajectory t = markov::simulate(p, start, steps, rng);
  Table table({"step", "state"});
  for (std::size_t i = 0; i < t.states.size(); ++i)
    table.add_row({std::to_string(i), state_name(p, t.states[i])});
  emit(table, opts);
}

void cmd_mcmc(const GlobalOptions& opts, const std::string& target_path,
              const std::string& base_path, std::size_t steps, std::size_t burn_in,
              std::size_t thinning, bool pmf) {
  const nlohmann::json tj = load_input(target_path);
  if (!tj.contains("weights") || !tj["weights"].is_array())
    throw InputError{Error("ParseError", target_path + ": needs a \"weights\" array")};
  std::vector<double> weights;
  for (const auto& w : tj["weights"]) {
    if (!w.is_number())
      throw InputError{Error("ParseError", target_path + ": non-numeric weight")};
    weights.push_back(w.get<double>());
  }
  const markov::Graph g = load_graph(base_path);
  if (weights.size() != g.num_vertices())
    throw InputError{Error("ParseError", "one weight per vertex required")};
  for (double w : weights)
    if (w <= 0.0) throw Error("NonPositivePi", "weights must be strictly positive");

  markov::MetropolisSpec spec;
  spec.base_sample = [&g](std::size_t x, markov::RandomSource& rng) {
    const auto& nbrs = g.neighbors(x);
    return nbrs[rng.next_below(nbrs.size())];
  };
  spec.base_ratio = [&g](std::size_t x, std::size_t y) {
    return static_cast<double>(g.degree(x)) / static_cast<double>(g.degree(y));
  };
  spec.target_ratio = [&weights](std::size_t x, std::size_t y) {
    return weights[y] / weights[x];
  };

  markov::RandomSource rng(opts.seed);
  auto kernel = [&spec](std::size_t x, markov::RandomSource& r) {
    return markov::metropolis_step(spec, x, r);
  };
  const std::vector<std::size_t> samples =
      markov::run_chain(kernel, 0, steps, burn_in, thinning, rng);

  if (!pmf) {
    Table table({"index", "state"});
    for (std::size_t i = 0; i < samples.size(); ++i)
      table.add_row({std::to_string(i), std::to_string(samples[i])});
    emit(table, opts);
    return;
  }
  std::vector<double> counts(weights.size(), 0.0);
  for (std::size_t s : samples) counts[s] += 1.0;
  double weight_sum = 0.0;
  for (double w : weights) weight_sum += w;
  Table table({"state", "empirical", "target"});
  for (std::size_t i = 0; i < counts.size(); ++i)
    table.add_row({std::to_string(i),
                   format_number(counts[i] / static_cast<double>(samples.size())),
                   format_number(weights[i] / weight_sum)});
  emit(table, opts);
}

void cmd_gibbs(const GlobalOptions& opts, int n, std::size_t sweeps) {
  if (n < 2) throw Error("SizeTooSmall", "triangle region needs n >= 2");
  // uniform sampling over {(m,k): m,k >= 1, m+k <= n} by coordinate updates
  std::vector<markov::CoordinateSampler> conditionals{
      [n](const std::vector<int>& s, markov::RandomSource& rng) {
        return 1 + static_cast<int>(rng.next_below(n - s[1]));
      },
      [n](const std::vector<int>& s, markov::RandomSource& rng) {
        return 1 + static_cast<int>(rng.next_below(n - s[0]));
      }};
  markov::RandomSource rng(opts.seed);
  std::vector<int> state{1, 1};
  Table table({"sweep", "m", "k"});
  for (std::size_t i = 1; i <= sweeps; ++i) {
    state = markov::gibbs_sweep(conditionals, state, markov::Scan::random, rng);
    table.add_row({std::to_string(i), std::to_string(state[0]), std::to_string(state[1])});
  }
  emit(table, opts);
}

void cmd_anneal(const GlobalOptions& opts, const std::string& graph_path,
                const std::string& objective_path, std::size_t steps, double c) {
  const markov::Graph g = load_graph(graph_path);
  std::vector<double> values;
  try {
    values = markov::objective_values_from_json(load_input(objective_path));
  } catch (const Error& e) {
    throw InputError{Error(e.code(), objective_path + ": " + e.message())};
  }
  if (values.size() != g.num_vertices())
    throw InputError{Error("ParseError", "one objective value per vertex required")};
  const markov::ObjectiveOnGraph obj{g, values};
  const markov::AnnealSchedule schedule = markov::log_schedule(c);
  markov::RandomSource rng(opts.seed);
  const markov::AnnealResult r = markov::simulated_annealing(obj, schedule, steps, 0, rng);

  Table table({"t", "lambda", "value", "best_vertex", "best_value"});
  double best = values[r.trace[0]];
  std::size_t best_vertex = r.trace[0];
  for (std::size_t t = 0; t < r.trace.size(); ++t) {
    if (values[r.trace[t]] < best) {
      best = values[r.trace[t]];
      best_vertex = r.trace[t];
    }
    table.add_row({std::to_string(t), format_number(t == 0 ? 0.0 : schedule(t - 1)),
                   format_number(values[r.trace[t]]), std::to_string(best_vertex),
                   format_number(best)});
  }
  emit(table, opts);
}

void cmd_polya(const GlobalOptions& opts, std::size_t a, std::size_t b, std::size_t steps,
               std::size_t trials) {
  const markov::DistributionVector exact = markov::polya_pmf_exact(a, b, steps);
  markov::RandomSource rng(opts.seed);
  std::vector<double> counts(exact.size(), 0.0);
  for (std::size_t t = 0; t < trials; ++t) {
    markov::RandomSource trial = rng.spawn();
    markov::PolyaState s{a, b, 0};
    for (std::size_t n = 0; n < steps; ++n) s = markov::polya_step(s, trial);
    counts[s.black] += 1.0;
  }
  Table table({"black", "exact", "empirical"});
  for (std::size_t k = a; k <= a + steps; ++k)
    table.add_row({std::to_string(k), format_number(exact[k]),
                   format_number(counts[k] / static_cast<double>(trials))});
  emit(table, opts);
}

void cmd_martingale_check(const GlobalOptions& opts, const std::string& chain_path,
                          const std::string& table_path) {
  const markov::TransitionMatrix p = load_chain(chain_path);
  const nlohmann::json tj = load_input(table_path);
  if (!tj.contains("table") || !tj["table"].is_array() || tj["table"].size() < 2)
    throw InputError{
        Error("ParseError", table_path + ": needs a \"table\" of at least two rows")};
  std::vector<std::vector<double>> f_table;
  for (const auto& row : tj["table"]) {
    if (!row.is_array() || row.size() != p.size())
      throw InputError{Error("ParseError", "each table row needs one value per state")};
    f_table.push_back(row.get<std::vector<double>>());
  }
  const std::size_t steps = f_table.size() - 1;
  const markov::HarmonicCheck check = markov::check_space_time_harmonic(
      p, [&f_table](std::size_t n, std::size_t x) { return f_table[n][x]; }, steps, opts.tol);
  Table table({"property", "value"});
  table.add_row({"space_time_harmonic", check.holds ? "true" : "false"});
  table.add_row({"worst_violation", format_number(check.worst_violation)});
  table.add_row({"worst_step", std::to_string(check.worst_step)});
  table.add_row({"worst_state", std::to_string(check.worst_state)});
  emit(table, opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Markov chain analysis and Monte Carlo toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  if (const char* env_tol = std::getenv("MCHAIN_TOL")) opts.tol = std::atof(env_tol);
  app.add_option("--seed", opts.seed, "Random seed (default 42)");
  app.add_option("--out", opts.out_path, "Output file (default stdout)");
  app.add_option("--format", opts.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", opts.tol, "Tolerance for checks (default 1e-9)");

  std::string kind = "cycle";
  std::size_t gen_n = 6, gen_m = 1;
  double gen_p = 0.5;
  auto* gen = app.add_subcommand("gen-graph", "Generate a named graph as JSON");
  gen->add_option("--kind", kind,
                  "cycle|path|complete|complete-bipartite|hypercube|star|erdos-renyi");
  gen->add_option("--n", gen_n, "Size parameter");
  gen->add_option("--m", gen_m, "Second size parameter (complete-bipartite)");
  gen->add_option("--p", gen_p, "Edge probability (erdos-renyi)");

  std::string chain_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Irreducibility and period");
  analyze_cmd->add_option("--chain", chain_path, "Chain JSON file")->required();

  std::string stationary_chain;
  bool stationary_any = false;
  auto* stationary_cmd = app.add_subcommand("stationary", "Stationary distribution");
  stationary_cmd->add_option("--chain", stationary_chain, "Chain JSON file")->required();
  stationary_cmd->add_flag("--any", stationary_any,
                           "Allow reducible chains (one solution of many)");

  std::string hitting_chain, boundary_text;
  auto* hitting_cmd = app.add_subcommand("hitting", "Hitting times and absorption");
  hitting_cmd->add_option("--chain", hitting_chain, "Chain JSON file")->required();
  hitting_cmd->add_option("--boundary", boundary_text, "Comma-separated states")->required();

  std::string mixing_chain;
  double eps = 0.01;
  bool empirical = false;
  std::size_t cap = 100000;
  auto* mixing_cmd = app.add_subcommand("mixing", "Spectrum and mixing bounds");
  mixing_cmd->add_option("--chain", mixing_chain, "Chain JSON file")->required();
  mixing_cmd->add_option("--eps", eps, "Accuracy target");
  mixing_cmd->add_flag("--empirical", empirical, "Also compute the exact mixing time");
  mixing_cmd->add_option("--cap", cap, "Step cap for the empirical search");

  std::string curve_chain;
  std::size_t curve_from = 0, curve_steps = 64;
  auto* curve_cmd = app.add_subcommand("tv-curve", "Distance to stationarity per step");
  curve_cmd->add_option("--chain", curve_chain, "Chain JSON file")->required();
  curve_cmd->add_option("--from", curve_from, "Starting state");
  curve_cmd->add_option("--steps", curve_steps, "Number of steps");

  std::string sample_chain;
  std::size_t sample_start = 0, sample_steps = 100;
  auto* sample_cmd = app.add_subcommand("sample", "Simulate a trajectory");
  sample_cmd->add_option("--chain", sample_chain, "Chain JSON file")->required();
  sample_cmd->add_option("--start", sample_start, "Starting state");
  sample_cmd->add_option("--steps", sample_steps, "Number of steps");

  std::string target_path, base_path;
  std::size_t mcmc_steps = 10000, burn_in = 0, thinning = 1;
  bool pmf = false;
  auto* mcmc_cmd = app.add_subcommand("mcmc", "Metropolis walk for target weights");
  mcmc_cmd->add_option("--target", target_path, "Weights JSON file")->required();
  mcmc_cmd->add_option("--base", base_path, "Base graph JSON file")->required();
  mcmc_cmd->add_option("--steps", mcmc_steps, "Post-burn-in steps");
  mcmc_cmd->add_option("--burn-in", burn_in, "Discarded initial steps");
  mcmc_cmd->add_option("--thin", thinning, "Record every k-th state");
  mcmc_cmd->add_flag("--pmf", pmf, "Emit empirical vs target pmf instead of samples");

  int gibbs_n = 6;
  std::size_t gibbs_sweeps = 1000;
  auto* gibbs_cmd = app.add_subcommand("gibbs", "Gibbs sampler on a triangle region");
  gibbs_cmd->add_option("--n", gibbs_n, "Region parameter: m, k >= 1, m + k <= n");
  gibbs_cmd->add_option("--sweeps", gibbs_sweeps, "Number of sweeps");

  std::string anneal_graph, anneal_objective;
  std::size_t anneal_steps = 10000;
  double anneal_c = 0.02;
  auto* anneal_cmd = app.add_subcommand("anneal", "Simulated annealing on a graph objective");
  anneal_cmd->add_option("--graph", anneal_graph, "Graph JSON file")->required();
  anneal_cmd->add_option("--objective", anneal_objective, "Objective JSON file")->required();
  anneal_cmd->add_option("--steps", anneal_steps, "Number of steps");
  anneal_cmd->add_option("--c", anneal_c, "Schedule constant in c ln(1+t)");

  std::size_t polya_a = 1, polya_b = 1, polya_steps = 20, polya_trials = 10000;
  auto* polya_cmd = app.add_subcommand("polya", "Polya urn: exact vs simulated pmf");
  polya_cmd->add_option("--a", polya_a, "Initial black balls");
  polya_cmd->add_option("--b", polya_b, "Initial red balls");
  polya_cmd->add_option("--steps", polya_steps, "Number of draws");
  polya_cmd->add_option("--trials", polya_trials, "Simulation trials");

  std::string mart_chain, mart_table;
  auto* mart_cmd = app.add_subcommand("martingale-check", "One-step averaging certificate");
  mart_cmd->add_option("--chain", mart_chain, "Chain JSON file")->required();
  mart_cmd->add_option("--table", mart_table, "JSON table of f(step, state)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (gen->parsed()) cmd_gen_graph(opts, kind, gen_n, gen_m, gen_p);
    else if (analyze_cmd->parsed()) cmd_analyze(opts, chain_path);
    else if (stationary_cmd->parsed()) cmd_stationary(opts, stationary_chain, stationary_any);
    else if (hitting_cmd->parsed()) cmd_hitting(opts, hitting_chain, boundary_text);
    else if (mixing_cmd->parsed()) cmd_mixing(opts, mixing_chain, eps, empirical, cap);
    else if (curve_cmd->parsed()) cmd_tv_curve(opts, curve_chain, curve_from, curve_steps);
    else if (sample_cmd->parsed()) cmd_sample(opts, sample_chain, sample_start, sample_steps);
    else if (mcmc_cmd->parsed())
      cmd_mcmc(opts, target_path, base_path, mcmc_steps, burn_in, thinning, pmf);
    else if (gibbs_cmd->parsed()) cmd_gibbs(opts, gibbs_n, gibbs_sweeps);
    else if (anneal_cmd->parsed())
      cmd_anneal(opts, anneal_graph, anneal_objective, anneal_steps, anneal_c);
    else if (polya_cmd->parsed()) cmd_polya(opts, polya_a, polya_b, polya_steps, polya_trials);
    else if (mart_cmd->parsed()) cmd_martingale_check(opts, mart_chain, mart_table);
  } catch (const InputError& e) {
    std::cerr << e.error.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitDomainError;
  }
  return 0;
}

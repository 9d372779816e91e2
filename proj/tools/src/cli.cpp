#include "cascade_duel_cli/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "cascade_duel/error.hpp"
#include "cascade_duel/experiment.hpp"
#include "cascade_duel/game.hpp"
#include "cascade_duel/generators.hpp"
#include "cascade_duel/graph_io.hpp"
#include "cascade_duel/graph_stats.hpp"
#include "cascade_duel/meanfield.hpp"
#include "cascade_duel/reports.hpp"

namespace cascade_duel::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void write_table(const CsvTable& table, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    write_csv(table, out);
  } else {
    emit_csv(table, path);
  }
}

// Game rows: header-less CSV by default, or one JSON object per line.
class RowWriter {
 public:
  RowWriter(std::ostream& out, std::string format, bool header)
      : out_(out), format_(std::move(format)), header_(header) {}

  void row(const std::vector<std::string>& keys, const nlohmann::json& values) {
    if (format_ == "jsonl") {
      nlohmann::json obj = nlohmann::json::object();
      for (std::size_t i = 0; i < keys.size(); ++i) obj[keys[i]] = values[i];
      out_ << obj.dump() << '\n';
      return;
    }
    if (header_ && !header_written_) {
      out_ << join(keys) << '\n';
      header_written_ = true;
    }
    std::vector<std::string> cells;
    for (const auto& v : values) cells.push_back(cell(v));
    out_ << join(cells) << '\n';
  }

 private:
  static std::string join(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) line += ',';
      line += cells[i];
    }
    return line;
  }

  static std::string cell(const nlohmann::json& v) {
    if (v.is_null()) return {};
    if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
    if (v.is_number_float()) return format_real(v.get<double>());
    if (v.is_number()) return v.dump();
    return v.get<std::string>();
  }

  std::ostream& out_;
  std::string format_;
  bool header_;
  bool header_written_ = false;
};

struct SimulateArgs {
  std::string graph;
  std::string gen;
  std::size_t nodes = 0;
  double avg_degree = 0.0;
  std::size_t degree = 0;
  std::string method1 = "dc";
  std::string method2 = "dc";
  std::string theta = "uniform";
  bool strict = false;
  bool enforce_budget = false;
  double budget = 1.0;
  std::optional<double> budget1;
  std::optional<double> budget2;
  bool multi_seed = false;
  std::optional<std::int64_t> seed1;
  std::optional<std::int64_t> seed2;
  std::size_t reps = 20;
  std::uint64_t seed = 1;
  double margin = 0.05;
  std::string out;
  unsigned workers = 1;
  std::size_t rd_initial = 1;
  double rd_rho = 0.1;
  bool rd_max = false;
  double rd_target = 0.10;
  double ec_tol = 1e-9;
  std::size_t ec_max_iter = 10000;
  std::string config;
};

struct MeanfieldArgs {
  double beta1 = 1.0;
  double beta2 = 1.0;
  double a0 = 0.0005;
  double b0 = 0.0005;
  double dt = 0.01;
  double t_end = 200.0;
  double steady_tol = 1e-6;
  std::size_t stride = 1;
  bool to_end = false;
  double beta1_min = 0.0;
  double beta1_max = 20.0;
  double beta2_min = 0.0;
  double beta2_max = 20.0;
  std::size_t resolution = 101;
  double level = 0.5;
  unsigned workers = 0;
  std::string out;
  std::string grid_out;
  std::string config;
};

struct GameArgs {
  double frac1 = 0.0;
  double frac2 = 0.0;
  std::string basis = "informed";
  int firm = 1;
  double opponent = 0.5;
  double step = 0.01;
  double rho1 = 0.0;
  double rho2 = 0.0;
  double margin = 0.05;
  std::string format = "csv";
  bool header = false;
  std::string config;
};

struct GenArgs {
  std::size_t nodes = 0;
  double avg_degree = 0.0;
  std::size_t degree = 0;
  std::string graph;
  std::uint64_t seed = 1;
  std::string out;
  std::string config;
};

struct StatsArgs {
  std::string graph;
  unsigned workers = 0;
  std::string config;
};

SeedPolicy make_policy(const SimulateArgs& a, const std::string& method) {
  SeedPolicy p;
  p.method = parse_seed_method(method);
  p.enforce_budget = a.enforce_budget;
  p.eigen.tol = a.ec_tol;
  p.eigen.max_iter = a.ec_max_iter;
  p.rank_degree.initial_seeds = a.rd_initial;
  p.rank_degree.rho = a.rd_rho;
  p.rank_degree.max_mode = a.rd_max;
  p.rank_degree.target_fraction = a.rd_target;
  return p;
}

int do_simulate(const SimulateArgs& a, std::ostream& out) {
  ExperimentConfig cfg;
  cfg.graph.path = a.graph;
  if (!a.gen.empty()) cfg.graph.generator = parse_generator(a.gen);
  cfg.graph.nodes = a.nodes;
  cfg.graph.avg_degree = a.avg_degree;
  cfg.graph.degree = a.degree;
  cfg.policy1 = make_policy(a, a.method1);
  cfg.policy2 = make_policy(a, a.method2);
  cfg.threshold = ThresholdMode::parse(a.theta);
  cfg.strict_propagation = a.strict;
  cfg.budget1 = a.budget1.value_or(a.budget);
  cfg.budget2 = a.budget2.value_or(a.budget);
  cfg.multi_seed = a.multi_seed;
  cfg.fixed_seed1 = a.seed1;
  cfg.fixed_seed2 = a.seed2;
  cfg.replications = a.reps;
  cfg.rng_seed = a.seed;
  cfg.margin = a.margin;
  cfg.workers = a.workers;
  cfg.output_dir = a.out;
  cfg.validate();

  const Graph g = build_graph(cfg.graph, cfg.rng_seed);
  const RunResult r = run_experiment(g, cfg);
  out << "nodes=" << g.node_count() << '\n';
  out << "edges=" << g.edge_count() << '\n';
  out << "replications=" << r.replications.size() << '\n';
  for (int i = 0; i < 2; ++i) {
    out << "mean_mu_influenced" << i + 1 << '=' << format_real(r.final_influenced[i].mean) << '\n';
    out << "mean_mu_supporter" << i + 1 << '=' << format_real(r.final_supporter[i].mean) << '\n';
  }
  out << "verdict=" << game::to_string(r.verdict.verdict) << '\n';
  return 0;
}

meanfield::IntegrationOptions integration_options(const MeanfieldArgs& a) {
  meanfield::IntegrationOptions o;
  o.dt = a.dt;
  o.t_end = a.t_end;
  o.steady_tol = a.steady_tol;
  o.record_stride = a.stride;
  o.stop_at_steady = !a.to_end;
  return o;
}

int do_trajectory(const MeanfieldArgs& a, std::ostream& out) {
  const auto init = meanfield::CompartmentState::seeded(a.a0, a.b0);
  const auto traj = meanfield::integrate(init, {a.beta1, a.beta2}, integration_options(a));
  write_table(trajectory_table(traj), a.out, out);
  return 0;
}

meanfield::PhaseGrid run_sweep(const MeanfieldArgs& a) {
  const auto init = meanfield::CompartmentState::seeded(a.a0, a.b0);
  auto opts = integration_options(a);
  opts.record_stride = 0;
  return meanfield::sweep_grid(init, {a.beta1_min, a.beta1_max}, {a.beta2_min, a.beta2_max},
                               a.resolution, opts, a.workers);
}

int do_sweep(const MeanfieldArgs& a, std::ostream& out) {
  write_table(grid_table(run_sweep(a)), a.out, out);
  return 0;
}

int do_contour(const MeanfieldArgs& a, std::ostream& out) {
  const auto grid = run_sweep(a);
  if (!a.grid_out.empty()) emit_csv(grid_table(grid), a.grid_out);
  write_table(contour_table(meanfield::contour_equilibrium(grid, a.level)), a.out, out);
  return 0;
}

int do_positions(const GameArgs& a, std::ostream& out) {
  const auto m = game::positions(a.frac1, a.frac2, game::parse_basis(a.basis));
  RowWriter w(out, a.format, a.header);
  nlohmann::json ov_lo, ov_hi;
  if (m.overlap) {
    ov_lo = m.overlap->lo;
    ov_hi = m.overlap->hi;
  }
  w.row({"basis", "frac1", "frac2", "position1", "position2", "interval1_lo", "interval1_hi",
         "interval2_lo", "interval2_hi", "overlap_lo", "overlap_hi"},
        nlohmann::json::array({std::string(game::to_string(m.basis)), m.frac1, m.frac2,
                               m.position1, m.position2, m.interval1.lo, m.interval1.hi,
                               m.interval2.lo, m.interval2.hi, ov_lo, ov_hi}));
  return 0;
}

int do_best_response(const GameArgs& a, std::ostream& out) {
  if (a.firm != 1 && a.firm != 2) throw std::invalid_argument("--firm must be 1 or 2");
  if (!(a.opponent >= 0.0 && a.opponent <= 1.0)) {
    throw std::invalid_argument("--opponent must be in [0, 1]");
  }
  const auto br = game::best_response<double>(a.firm == 1 ? game::Firm::kOne : game::Firm::kTwo,
                                              a.opponent);
  RowWriter w(out, a.format, a.header);
  nlohmann::json lo, hi, lo_open, hi_open;
  if (br.response_set) {
    lo = br.response_set->lo;
    hi = br.response_set->hi;
    lo_open = br.response_set->lo_open;
    hi_open = br.response_set->hi_open;
  }
  w.row({"responder", "opponent", "defined", "lo", "hi", "lo_open", "hi_open"},
        nlohmann::json::array({a.firm, a.opponent, br.defined(), lo, hi, lo_open, hi_open}));
  return 0;
}

int do_nash(const GameArgs& a, std::ostream& out) {
  const auto [x, y] = game::nash(a.step, game::parse_basis(a.basis));
  RowWriter w(out, a.format, a.header);
  w.row({"position1", "position2"}, nlohmann::json::array({x, y}));
  return 0;
}

int do_verdict(const GameArgs& a, std::ostream& out) {
  const auto v = game::margin_verdict(a.rho1, a.rho2, a.margin);
  RowWriter w(out, a.format, a.header);
  w.row({"rho1", "rho2", "margin", "verdict"},
        nlohmann::json::array({v.rho1, v.rho2, v.margin, std::string(game::to_string(v.verdict))}));
  return 0;
}

void emit_graph(const Graph& g, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    write_edgelist(g, out);
  } else {
    save_edgelist(g, path);
  }
}

int do_stats(const StatsArgs& a, std::ostream& out) {
  const Graph g = load_edgelist(a.graph);
  const GraphStats s = compute_stats(g, a.workers);
  out << "nodes=" << s.nodes << '\n';
  out << "edges=" << s.edges << '\n';
  out << "avg_degree=" << format_real(s.avg_degree) << '\n';
  out << "clustering=" << format_real(s.avg_clustering) << '\n';
  out << "triangles=" << s.triangles << '\n';
  out << "diameter=" << s.diameter << '\n';
  out << "lcc_nodes=" << s.largest_component_nodes << '\n';
  out << "lcc_edges=" << s.largest_component_edges << '\n';
  return 0;
}

template <class T>
CLI::Option* real_option(CLI::App* app, const std::string& name, T& value,
                         const std::string& help) {
  return app->add_option(name, value, help)->capture_default_str();
}

}  // namespace

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::optional<std::string> path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (!path) return args;

  std::ifstream in(*path);
  if (!in) throw std::invalid_argument("cannot read config file " + *path);
  std::vector<std::string> injected;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    // Trailing comments need a blank before the marker.
    for (const char* marker : {" #", "\t#", " ;", "\t;"}) {
      if (const auto at = line.find(marker); at != std::string::npos) line.erase(at);
    }
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(*path + ":" + std::to_string(line_no) +
                                  ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    if (key.empty() || key == "config") {
      throw std::invalid_argument(*path + ":" + std::to_string(line_no) + ": bad key");
    }
    injected.push_back("--" + key + "=" + value);
  }

  std::size_t at = 1;
  while (at < args.size() && args[at].rfind("-", 0) != 0) ++at;
  std::vector<std::string> out(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(at));
  out.insert(out.end(), injected.begin(), injected.end());
  out.insert(out.end(), args.begin() + static_cast<std::ptrdiff_t>(at), args.end());
  return out;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-player competitive diffusion: cascades, mean-field dynamics and games",
               "cascade_duel"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo cascade duel between two seeders");
  simulate->add_option("--graph", sim.graph, "Edge-list file (base graph for --gen)");
  simulate->add_option("--gen", sim.gen, "Generate the graph: er|regular|tree")
      ->check(CLI::IsMember({"er", "regular", "tree"}));
  simulate->add_option("--nodes", sim.nodes, "Node count for --gen er|regular without --graph");
  simulate->add_option("--avg-degree", sim.avg_degree, "Average degree for --gen er");
  simulate->add_option("--degree", sim.degree, "Degree for --gen regular");
  simulate->add_option("--method1", sim.method1, "Seeding of player 1: dc|ec|rd")
      ->check(CLI::IsMember({"dc", "ec", "rd"}))
      ->capture_default_str();
  simulate->add_option("--method2", sim.method2, "Seeding of player 2: dc|ec|rd")
      ->check(CLI::IsMember({"dc", "ec", "rd"}))
      ->capture_default_str();
  simulate->add_option("--theta", sim.theta, "Thresholds: const:<v>|uniform")
      ->capture_default_str();
  simulate->add_flag("--strict", sim.strict, "Sub-threshold nodes do not forward influence");
  simulate->add_flag("--enforce-budget", sim.enforce_budget, "Seeds must fit the budget");
  real_option(simulate, "--budget", sim.budget, "Budget of both players");
  simulate->add_option("--budget1", sim.budget1, "Budget of player 1 (overrides --budget)");
  simulate->add_option("--budget2", sim.budget2, "Budget of player 2 (overrides --budget)");
  simulate->add_flag("--multi-seed", sim.multi_seed,
                     "Buy seeds greedily until the budget runs out (needs --enforce-budget)");
  simulate->add_option("--seed1", sim.seed1, "Fixed seed node of player 1 (file id)");
  simulate->add_option("--seed2", sim.seed2, "Fixed seed node of player 2 (file id)");
  simulate->add_option("--reps", sim.reps, "Replications")->capture_default_str();
  simulate->add_option("--seed", sim.seed, "RNG seed")->capture_default_str();
  real_option(simulate, "--margin", sim.margin, "Equilibrium margin on supporter fractions");
  simulate->add_option("--out", sim.out, "Output directory for CSVs")
      ->envname("CASCADE_DUEL_OUT");
  simulate->add_option("--workers", sim.workers, "Worker threads (0 = all cores)")
      ->capture_default_str();
  simulate->add_option("--rd-initial", sim.rd_initial, "Rank-Degree initial seeds")
      ->capture_default_str();
  real_option(simulate, "--rd-rho", sim.rd_rho, "Rank-Degree fraction of friends per step");
  simulate->add_flag("--rd-max", sim.rd_max, "Rank-Degree takes only the top friend");
  real_option(simulate, "--rd-target", sim.rd_target, "Rank-Degree target fraction of nodes");
  real_option(simulate, "--ec-tol", sim.ec_tol, "Eigenvector centrality tolerance");
  simulate->add_option("--ec-max-iter", sim.ec_max_iter, "Eigenvector centrality iterations")
      ->capture_default_str();
  simulate->add_option("--config", sim.config, "key = value file; flags win");

  MeanfieldArgs mf;
  auto* meanfield = app.add_subcommand("meanfield", "Six-compartment mean-field dynamics");
  meanfield->require_subcommand(1);
  auto add_common = [&](CLI::App* c) {
    real_option(c, "--a0", mf.a0, "Initial A fraction");
    real_option(c, "--b0", mf.b0, "Initial B fraction");
    real_option(c, "--dt", mf.dt, "RK4 step");
    real_option(c, "--t-end", mf.t_end, "Final time");
    real_option(c, "--steady-tol", mf.steady_tol, "Steady once max(A, B, AB) is below this");
    c->add_flag("--run-to-end", mf.to_end, "Do not stop at steady state");
    c->add_option("--out", mf.out, "CSV file (default stdout)");
    c->add_option("--config", mf.config, "key = value file; flags win");
  };
  auto add_ranges = [&](CLI::App* c) {
    real_option(c, "--beta1-min", mf.beta1_min, "Smallest beta1");
    real_option(c, "--beta1-max", mf.beta1_max, "Largest beta1");
    real_option(c, "--beta2-min", mf.beta2_min, "Smallest beta2");
    real_option(c, "--beta2-max", mf.beta2_max, "Largest beta2");
    c->add_option("--resolution", mf.resolution, "Lattice points per axis")
        ->capture_default_str();
    c->add_option("--workers", mf.workers, "Worker threads (0 = all cores)")
        ->capture_default_str();
  };
  auto* trajectory = meanfield->add_subcommand("trajectory", "Integrate one (beta1, beta2) pair");
  real_option(trajectory, "--beta1", mf.beta1, "Spreading rate of information 1");
  real_option(trajectory, "--beta2", mf.beta2, "Spreading rate of information 2");
  trajectory->add_option("--stride", mf.stride, "Record every k-th step")->capture_default_str();
  add_common(trajectory);
  auto* sweep = meanfield->add_subcommand("sweep", "Final states over a (beta1, beta2) lattice");
  add_common(sweep);
  add_ranges(sweep);
  auto* contour = meanfield->add_subcommand("contour", "Level set of a/(a+b) over the lattice");
  add_common(contour);
  add_ranges(contour);
  real_option(contour, "--level", mf.level, "Level of a/(a+b)");
  contour->add_option("--grid-out", mf.grid_out, "Also write the lattice CSV here");

  GameArgs ga;
  auto* game_cmd = app.add_subcommand("game", "Hotelling positions, best responses, Nash point");
  game_cmd->require_subcommand(1);
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", ga.format, "csv|jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();
    c->add_flag("--header", ga.header, "Print a CSV header line");
    c->add_option("--config", ga.config, "key = value file; flags win");
  };
  auto* positions = game_cmd->add_subcommand("positions", "Firm positions from reached fractions");
  positions->add_option("--frac1", ga.frac1, "Fraction of firm 1")->required();
  positions->add_option("--frac2", ga.frac2, "Fraction of firm 2")->required();
  positions->add_option("--basis", ga.basis, "informed|supporter")
      ->check(CLI::IsMember({"informed", "supporter"}))
      ->capture_default_str();
  add_format(positions);
  auto* best = game_cmd->add_subcommand("best-response", "Best-response set of one firm");
  best->add_option("--firm", ga.firm, "Responding firm (1 or 2)")->capture_default_str();
  best->add_option("--opponent", ga.opponent, "Opponent position")->required();
  add_format(best);
  auto* nash_cmd = game_cmd->add_subcommand("nash", "Mutual best responses on a lattice");
  real_option(nash_cmd, "--step", ga.step, "Lattice step");
  nash_cmd->add_option("--basis", ga.basis, "informed|supporter")
      ->check(CLI::IsMember({"informed", "supporter"}))
      ->capture_default_str();
  add_format(nash_cmd);
  auto* verdict = game_cmd->add_subcommand("verdict", "Margin verdict on supporter fractions");
  verdict->add_option("--rho1", ga.rho1, "Supporter fraction of firm 1")->required();
  verdict->add_option("--rho2", ga.rho2, "Supporter fraction of firm 2")->required();
  real_option(verdict, "--margin", ga.margin, "Equilibrium margin");
  add_format(verdict);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic graph as an edge list");
  gen_cmd->require_subcommand(1);
  auto add_gen_common = [&](CLI::App* c) {
    c->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
    c->add_option("--out", gen.out, "Edge-list file (default stdout)");
    c->add_option("--config", gen.config, "key = value file; flags win");
  };
  auto* gen_er_cmd = gen_cmd->add_subcommand("er", "Erdos-Renyi G(n, p) with p = k/(n-1)");
  gen_er_cmd->add_option("--nodes", gen.nodes, "Node count");
  gen_er_cmd->add_option("--avg-degree", gen.avg_degree, "Target average degree");
  gen_er_cmd->add_option("--graph", gen.graph, "Copy node count and average degree from a file");
  add_gen_common(gen_er_cmd);
  auto* gen_reg_cmd = gen_cmd->add_subcommand("regular", "Random regular graph");
  gen_reg_cmd->add_option("--nodes", gen.nodes, "Node count");
  gen_reg_cmd->add_option("--degree", gen.degree, "Degree of every node");
  gen_reg_cmd->add_option("--graph", gen.graph, "Copy node count and average degree from a file");
  add_gen_common(gen_reg_cmd);
  auto* gen_tree_cmd = gen_cmd->add_subcommand("tree", "BFS spanning tree from a random root");
  gen_tree_cmd->add_option("--graph", gen.graph, "Graph to span")->required();
  add_gen_common(gen_tree_cmd);

  StatsArgs st;
  auto* stats = app.add_subcommand("stats", "Nodes, edges, clustering, triangles, diameter");
  stats->add_option("--graph", st.graph, "Edge-list file")->required();
  stats->add_option("--workers", st.workers, "Worker threads (0 = all cores)")
      ->capture_default_str();
  stats->add_option("--config", st.config, "key = value file; flags win");

  std::vector<std::string> args;
  try {
    args = expand_config(raw_args);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  set_warning_sink([&err](std::string_view msg) { err << "warning: " << msg << '\n'; });
  int status = 1;
  try {
    if (simulate->parsed()) {
      status = do_simulate(sim, out);
    } else if (trajectory->parsed()) {
      status = do_trajectory(mf, out);
    } else if (sweep->parsed()) {
      status = do_sweep(mf, out);
    } else if (contour->parsed()) {
      status = do_contour(mf, out);
    } else if (positions->parsed()) {
      status = do_positions(ga, out);
    } else if (best->parsed()) {
      status = do_best_response(ga, out);
    } else if (nash_cmd->parsed()) {
      status = do_nash(ga, out);
    } else if (verdict->parsed()) {
      status = do_verdict(ga, out);
    } else if (gen_er_cmd->parsed()) {
      GraphSource src{gen.graph, GeneratorKind::kErdosRenyi, gen.nodes, gen.avg_degree, 0};
      if (gen.graph.empty() && (gen.nodes == 0 || gen.avg_degree <= 0.0)) {
        throw std::invalid_argument("gen er needs --nodes and --avg-degree, or --graph");
      }
      emit_graph(build_graph(src, gen.seed), gen.out, out);
      status = 0;
    } else if (gen_reg_cmd->parsed()) {
      GraphSource src{gen.graph, GeneratorKind::kRegular, gen.nodes, 0.0, gen.degree};
      if (gen.graph.empty() && gen.nodes == 0) {
        throw std::invalid_argument("gen regular needs --nodes and --degree, or --graph");
      }
      emit_graph(build_graph(src, gen.seed), gen.out, out);
      status = 0;
    } else if (gen_tree_cmd->parsed()) {
      GraphSource src{gen.graph, GeneratorKind::kTree, 0, 0.0, 0};
      emit_graph(build_graph(src, gen.seed), gen.out, out);
      status = 0;
    } else if (stats->parsed()) {
      status = do_stats(st, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    status = kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    status = 1;
  }
  set_warning_sink(nullptr);
  return status;
}

}  // namespace cascade_duel::cli

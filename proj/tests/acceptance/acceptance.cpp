// Acceptance checks. One line per criterion: PASS, FAIL or SKIP.
// Usage: cascade_duel_acceptance [--list] [name...]
// Exit status: 0 all ran criteria passed, 1 some failed, 77 everything skipped.

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cascade_duel/cascade.hpp"
#include "cascade_duel/centrality.hpp"
#include "cascade_duel/experiment.hpp"
#include "cascade_duel/game.hpp"
#include "cascade_duel/generators.hpp"
#include "cascade_duel/graph_io.hpp"
#include "cascade_duel/graph_stats.hpp"
#include "cascade_duel/meanfield.hpp"
#include "cascade_duel/rng.hpp"
#include "fixtures.hpp"

using namespace cascade_duel;
namespace mf = cascade_duel::meanfield;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

enum class Status { kPass, kFail, kSkip };

struct Result {
  Status status;
  std::string detail;
};

Result verdict(bool ok, const std::string& detail) {
  return {ok ? Status::kPass : Status::kFail, detail};
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

fs::path facebook_path() {
  if (const char* env = std::getenv("CASCADE_DUEL_FACEBOOK"); env && *env) return env;
  return testing::data_dir() / "facebook_combined.txt";
}

// ---------------------------------------------------------------------------

Result sample_influence_values() {
  const Graph g = testing::sample_graph();
  const NodeId s1 = testing::id(g, 2), s2 = testing::id(g, 5);
  // Hand-derived values; alpha of node 8 for information 2 is misprinted in
  // the worked example and left out.
  const std::map<std::int64_t, Rational> want1{{1, Rational(1)},     {3, Rational(4, 9)},
                                               {4, Rational(4, 9)},  {7, Rational(4, 30)},
                                               {10, Rational(4, 15)}, {8, Rational(4, 30)},
                                               {9, Rational(4, 30)}};
  const std::map<std::int64_t, Rational> want2{{6, Rational(1)},     {7, Rational(1, 5)},
                                               {3, Rational(1, 15)}, {9, Rational(1, 5)},
                                               {10, Rational(1, 10)}, {4, Rational(1, 18)}};

  const auto exact = propagate_influence_exact(g, s1, s2);
  const auto fp = propagate_influence(g, s1, s2);
  std::size_t exact_bad = 0;
  double worst = 0.0;
  auto check = [&](int info, const std::map<std::int64_t, Rational>& want) {
    for (const auto& [node, value] : want) {
      const NodeId v = testing::id(g, node);
      if (exact.track(info).alpha[v] != value) ++exact_bad;
      worst = std::max(worst, std::abs(fp.track(info).alpha[v] - value.convert_to<double>()));
    }
  };
  check(1, want1);
  check(2, want2);

  std::vector<double> times;
  for (int k = 0; k < 201; ++k) {
    const auto start = Clock::now();
    const auto f = propagate_influence(g, s1, s2);
    times.push_back(seconds_since(start));
    if (f.node_count() != g.node_count()) return {Status::kFail, "bad field size"};
  }
  std::nth_element(times.begin(), times.begin() + 100, times.end());
  const double median = times[100];

  std::ostringstream d;
  d << "13 values, exact mismatches=" << exact_bad << ", max fp error=" << worst
    << ", median runtime=" << median * 1e3 << " ms";
  return verdict(exact_bad == 0 && worst < 1e-12 && median < 1e-3, d.str());
}

Result supporter_split() {
  const Graph g = testing::sample_graph();
  const auto zero = assign_thresholds(g, ThresholdMode::constant(0.0), 0);

  const auto a = classify(propagate_influence(g, testing::id(g, 2), testing::id(g, 5)), zero, 1);
  const bool sets_ok = testing::originals(g, a.supporters1) == std::set<std::int64_t>{1, 2, 3, 4, 10} &&
                       testing::originals(g, a.supporters2) == std::set<std::int64_t>{5, 6, 7, 8, 9} &&
                       a.verdict == Verdict::kTie;

  const auto field = propagate_influence(g, testing::id(g, 3), testing::id(g, 5));
  const std::set<std::int64_t> need1{1, 2, 3, 4, 10}, need2{5, 6};
  std::map<std::int64_t, int> info1_count{{7, 0}, {8, 0}, {9, 0}};
  bool subsets_ok = true;
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    const auto out = classify(field, zero, derive_seed(2024, t));
    const auto s1 = testing::originals(g, out.supporters1);
    const auto s2 = testing::originals(g, out.supporters2);
    subsets_ok &= std::includes(s1.begin(), s1.end(), need1.begin(), need1.end());
    subsets_ok &= std::includes(s2.begin(), s2.end(), need2.begin(), need2.end());
    for (auto& [node, count] : info1_count) count += s1.count(node);
  }
  bool freq_ok = true;
  std::ostringstream d;
  d << "seeds (2,5) " << (sets_ok ? "TIE with expected sets" : "WRONG sets/verdict")
    << "; seeds (3,5) containment " << (subsets_ok ? "ok" : "violated") << "; info-1 frequency";
  for (const auto& [node, count] : info1_count) {
    const double f = static_cast<double>(count) / trials;
    freq_ok &= std::abs(f - 0.5) <= 0.05;
    d << " " << node << ":" << f;
  }
  return verdict(sets_ok && subsets_ok && freq_ok, d.str());
}

Result facebook_statistics() {
  const auto path = facebook_path();
  if (!fs::exists(path)) return {Status::kSkip, "edge list not found at " + path.string()};
  const auto start = Clock::now();
  const Graph g = load_edgelist(path);
  const auto s = compute_stats(g);
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << "nodes=" << s.nodes << " edges=" << s.edges << " clustering=" << s.avg_clustering
    << " diameter=" << s.diameter << " time=" << elapsed << " s";
  return verdict(s.nodes == 4039 && s.edges == 88234 && std::abs(s.avg_clustering - 0.6055) <= 0.001 &&
                     s.diameter == 8 && elapsed < 60.0,
                 d.str());
}

Result meanfield_conservation() {
  Rng rng(604);
  double worst = 0.0;
  std::size_t failures = 0;
  for (int k = 0; k < 100; ++k) {
    const double b1 = 20.0 * rng.uniform(), b2 = 20.0 * rng.uniform();
    const double a0 = 0.5 * rng.uniform(), c0 = 0.5 * rng.uniform();
    mf::IntegrationOptions o;
    o.t_end = 200.0;
    o.stop_at_steady = false;
    o.record_stride = 0;
    try {
      const auto tr = mf::integrate(mf::CompartmentState::seeded(a0, c0), {b1, b2}, o);
      worst = std::max(worst, tr.max_conservation_error);
    } catch (const std::exception&) {
      ++failures;
    }
  }
  std::ostringstream d;
  d << "100 draws, max |sum - 1| over all steps=" << worst << ", failed integrations=" << failures;
  return verdict(failures == 0 && worst < 1e-9, d.str());
}

Result meanfield_symmetry() {
  double worst = 0.0;
  for (double beta : {1.0, 5.0, 10.0, 20.0}) {
    mf::IntegrationOptions o;
    o.stop_at_steady = false;
    const auto tr = mf::integrate(mf::CompartmentState::seeded(0.0005, 0.0005), {beta, beta}, o);
    for (const auto& s : tr.states) worst = std::max(worst, std::abs(s.a - s.b));
  }
  std::ostringstream d;
  d << "beta in {1,5,10,20}, max_t |a - b|=" << worst;
  return verdict(worst < 1e-9, d.str());
}

Result meanfield_regimes() {
  const auto init = mf::CompartmentState::seeded(0.0005, 0.0005);
  const auto weak_first = mf::integrate(init, {1.0, 20.0}).final_state();
  const auto strong_first = mf::integrate(init, {20.0, 1.0}).final_state();
  const auto both_fast = mf::integrate(init, {20.0, 10.0}).final_state();
  std::ostringstream d;
  d << "(1,20) b/a=" << weak_first.b / weak_first.a << "; (20,1) a/b=" << strong_first.a / strong_first.b << "; (20,10) a=" << both_fast.a
    << " b=" << both_fast.b;
  return verdict(weak_first.b / weak_first.a > 10.0 && strong_first.a / strong_first.b > 10.0 && both_fast.a > both_fast.b, d.str());
}

Result equilibrium_contour() {
  const auto grid =
      mf::sweep_grid(mf::CompartmentState::seeded(0.0005, 0.0005), {0, 20}, {0, 20}, 101, {}, 0);
  const auto pts = mf::contour_equilibrium(grid);
  const double cell = 20.0 / 100.0;
  double worst = 0.0;
  for (const auto& p : pts) worst = std::max(worst, std::abs(p.beta1 - p.beta2));
  std::size_t failed = 0;
  for (const auto& c : grid.cells) failed += !c.error.empty();
  std::ostringstream d;
  d << "101x101, " << pts.size() << " contour points, max |beta1 - beta2|=" << worst
    << " (cell " << cell << "), failed cells=" << failed;
  return verdict(!pts.empty() && worst < cell && failed == 0, d.str());
}

Result game_positions_nash() {
  const auto p = game::positions(0.9, 0.8);
  const auto q = game::positions(0.4, 0.42);
  const auto grid = game::mutual_best_responses(0.01);
  const auto fine = game::mutual_best_responses(0.001);
  const std::vector<std::pair<double, double>> centre{{0.5, 0.5}};
  std::ostringstream d;
  d << "(0.9,0.8)->(" << p.position1 << "," << p.position2 << "); (0.4,0.42)->(" << q.position1
    << "," << q.position2 << "); fixed points at 0.01: " << grid.size() << ", at 0.001: "
    << fine.size();
  return verdict(p.position1 == 0.45 && p.position2 == 0.60 && q.position1 == 0.2 &&
                     q.position2 == 0.79 && grid == centre && fine == centre,
                 d.str());
}

Result facebook_diffusion() {
  const auto path = facebook_path();
  if (!fs::exists(path)) return {Status::kSkip, "edge list not found at " + path.string()};
  const Graph fb = load_edgelist(path);
  const Graph tree = spanning_tree(fb, 7);
  const Graph regular = gen_regular(fb.node_count(), regular_degree_for(fb.node_count(), fb.average_degree()), 7);

  auto run = [](const Graph& g, SeedMethod m, ThresholdMode theta) {
    ExperimentConfig cfg;
    cfg.policy1.method = cfg.policy2.method = m;
    cfg.threshold = theta;
    cfg.replications = 20;
    cfg.rng_seed = 5;
    cfg.workers = 0;
    return run_experiment(g, cfg);
  };
  auto total_supporters = [](const RunResult& r) {
    return r.final_supporter[0].mean + r.final_supporter[1].mean;
  };

  bool ok = true;
  std::ostringstream d;
  for (SeedMethod m : {SeedMethod::kDegree, SeedMethod::kEigenvector, SeedMethod::kRankDegree}) {
    const auto full = run(fb, m, ThresholdMode::constant(0.0));
    const double i1 = full.final_influenced[0].mean, i2 = full.final_influenced[1].mean;
    const auto base = run(fb, m, ThresholdMode::uniform());
    const auto on_tree = run(tree, m, ThresholdMode::uniform());
    const auto on_regular = run(regular, m, ThresholdMode::uniform());
    const double s_fb = total_supporters(base), s_tree = total_supporters(on_tree),
                 s_reg = total_supporters(on_regular);
    ok &= i1 >= 0.99 && i2 >= 0.99 && s_tree < s_fb && s_reg < s_fb;
    d << to_string(m) << ": influenced " << i1 << "/" << i2 << ", supporters fb=" << s_fb
      << " tree=" << s_tree << " regular=" << s_reg << "; ";
  }
  return verdict(ok, d.str());
}

Result eigenvector_oracle() {
  Rng rng(610);
  int agree = 0;
  std::ostringstream misses;
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 2 + rng.below(199);
    const std::size_t extra = rng.below(3 * n);
    const Graph g = testing::random_connected_graph(n, extra, derive_seed(610, k));
    const auto ec = eigenvector_centrality(g);

    const auto m = static_cast<Eigen::Index>(g.node_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
    for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    Eigen::VectorXd x = solver.eigenvectors().col(m - 1).cwiseAbs();
    x /= x.maxCoeff();
    NodeId top = 0;
    for (Eigen::Index v = 0; v < m; ++v) {
      if (x(v) >= 1.0 - 1e-9) {
        top = static_cast<NodeId>(v);
        break;
      }
    }
    if (ec.ranking.front() == top) {
      ++agree;
    } else {
      misses << " graph " << k << " (n=" << n << "): " << ec.ranking.front() << " vs " << top;
    }
  }
  std::ostringstream d;
  d << agree << "/50 graphs agree" << misses.str();
  return verdict(agree == 50, d.str());
}

Result rk4_order() {
  const auto init = mf::CompartmentState::seeded(0.05, 0.03);
  const mf::RateParams p{3.0, 2.0};
  auto solve = [&](double dt) {
    mf::IntegrationOptions o;
    o.dt = dt;
    o.t_end = 4.0;
    o.stop_at_steady = false;
    o.record_stride = 0;
    return mf::integrate(init, p, o).final_state();
  };
  auto diff = [](const mf::CompartmentState& x, const mf::CompartmentState& y) {
    return std::max({std::abs(x.S - y.S), std::abs(x.A - y.A), std::abs(x.B - y.B),
                     std::abs(x.AB - y.AB), std::abs(x.a - y.a), std::abs(x.b - y.b)});
  };
  const double dt = 0.1;
  const auto ref = solve(dt / 8);
  const double e1 = diff(solve(dt), ref), e2 = diff(solve(dt / 2), ref);
  const double order = std::log2(e1 / e2);
  std::ostringstream d;
  d << "errors " << e1 << " (dt=" << dt << "), " << e2 << " (dt=" << dt / 2
    << "), observed order=" << order;
  return verdict(order >= 3.5 && order <= 4.5, d.str());
}

const std::vector<std::pair<std::string, std::function<Result()>>> kCriteria{
    {"sample_influence_values", sample_influence_values},
    {"supporter_split", supporter_split},
    {"facebook_statistics", facebook_statistics},
    {"meanfield_conservation", meanfield_conservation},
    {"meanfield_symmetry", meanfield_symmetry},
    {"meanfield_regimes", meanfield_regimes},
    {"equilibrium_contour", equilibrium_contour},
    {"game_positions_nash", game_positions_nash},
    {"facebook_diffusion", facebook_diffusion},
    {"eigenvector_oracle", eigenvector_oracle},
    {"rk4_order", rk4_order},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> wanted(argv + 1, argv + argc);
  if (wanted.size() == 1 && wanted[0] == "--list") {
    for (const auto& [name, fn] : kCriteria) std::cout << name << '\n';
    return 0;
  }
  for (const auto& w : wanted) {
    if (std::none_of(kCriteria.begin(), kCriteria.end(), [&](const auto& c) { return c.first == w; })) {
      std::cerr << "unknown criterion: " << w << '\n';
      return 2;
    }
  }
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& [name, fn] : kCriteria) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
    Result r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r = {Status::kFail, std::string("exception: ") + e.what()};
    }
    const char* tag = r.status == Status::kPass ? "PASS" : r.status == Status::kFail ? "FAIL" : "SKIP";
    std::cout << tag << ' ' << name << ": " << r.detail << std::endl;
    (r.status == Status::kPass ? passed : r.status == Status::kFail ? failed : skipped)++;
  }
  std::cout << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  if (failed) return 1;
  if (passed == 0 && skipped > 0) return 77;
  return 0;
}

#include "cascade_duel/cascade.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cascade_duel/rng.hpp"

namespace cascade_duel {

ThresholdMode ThresholdMode::parse(std::string_view text) {
  if (text == "uniform") return uniform();
  constexpr std::string_view prefix = "const:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string value(text.substr(prefix.size()));
    std::size_t used = 0;
    double theta = 0.0;
    try {
      theta = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) {
      throw std::invalid_argument("bad threshold constant in '" + std::string(text) + "'");
    }
    return constant(theta);
  }
  throw std::invalid_argument("threshold mode must be 'const:<v>' or 'uniform', got '" +
                              std::string(text) + "'");
}

std::string ThresholdMode::to_string() const {
  if (kind == Kind::kUniform) return "uniform";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return "const:" + std::string(buf, end);
}

Thresholds assign_thresholds(const Graph& g, ThresholdMode mode, std::uint64_t rng_seed) {
  Thresholds t;
  if (mode.kind == ThresholdMode::Kind::kConstant) {
    if (!(mode.value >= 0.0 && mode.value <= 1.0)) {
      throw std::invalid_argument("threshold must lie in [0, 1], got " +
                                  std::to_string(mode.value));
    }
    t.theta_of.assign(g.node_count(), mode.value);
    return t;
  }
  Rng rng(rng_seed);
  t.theta_of.resize(g.node_count());
  for (double& theta : t.theta_of) theta = rng.uniform();
  return t;
}

namespace {

double as_double(double x) { return x; }
double as_double(const Rational& x) { return x.convert_to<double>(); }

void check_seeds(const Graph& g, std::span<const NodeId> seeds, const char* which) {
  if (seeds.empty()) throw std::invalid_argument(std::string("propagate_influence: no ") + which);
  for (NodeId s : seeds) {
    if (!g.contains(s)) {
      throw std::invalid_argument(std::string("propagate_influence: invalid ") + which + " " +
                                  std::to_string(s));
    }
  }
}

template <class Scalar>
InfluenceTrack<Scalar> spread(const Graph& g, std::span<const NodeId> seeds,
                              std::span<const NodeId> rivals, const PropagationOptions& options) {
  const std::size_t n = g.node_count();
  InfluenceTrack<Scalar> track;
  track.levels = bfs_levels(g, seeds, rivals);
  track.alpha.assign(n, Scalar(0));
  track.parent_component.assign(n, Scalar(0));
  for (NodeId s : track.levels.roots) {
    track.alpha[s] = Scalar(1);
    track.parent_component[s] = Scalar(1);
  }

  const auto& level_of = track.levels.level_of;
  auto passes_on = [&](NodeId v, const Scalar& value) {
    return !options.strict || as_double(value) >= options.thresholds->theta_of[v];
  };

  for (std::uint32_t d = 1; d < track.levels.depth(); ++d) {
    const auto& level = track.levels.levels[d];
    for (NodeId ch : level) {
      Scalar acc(0);
      for (NodeId p : g.neighbors(ch)) {
        if (level_of[p] == d - 1 && passes_on(p, track.alpha[p])) acc += track.alpha[p];
      }
      track.parent_component[ch] = acc / Scalar(g.degree(ch));
    }
    // Siblings contribute their parent-only part, so the order within a
    // level does not matter.
    for (NodeId ch : level) {
      Scalar acc(0);
      for (NodeId s : g.neighbors(ch)) {
        if (level_of[s] == d && passes_on(s, track.parent_component[s])) {
          acc += track.parent_component[s];
        }
      }
      track.alpha[ch] = track.parent_component[ch] + acc / Scalar(g.degree(ch));
    }
  }
  return track;
}

}  // namespace

template <class Scalar>
BasicInfluenceField<Scalar> propagate_influence(const Graph& g, std::span<const NodeId> seeds1,
                                                std::span<const NodeId> seeds2,
                                                const PropagationOptions& options) {
  check_seeds(g, seeds1, "seed for information 1");
  check_seeds(g, seeds2, "seed for information 2");
  for (NodeId s : seeds1) {
    if (std::find(seeds2.begin(), seeds2.end(), s) != seeds2.end()) {
      throw std::invalid_argument("propagate_influence: node " + std::to_string(s) +
                                  " seeds both informations");
    }
  }
  if (options.strict &&
      (!options.thresholds || options.thresholds->theta_of.size() != g.node_count())) {
    throw std::invalid_argument("propagate_influence: strict mode needs per-node thresholds");
  }
  BasicInfluenceField<Scalar> field;
  field.seeds1.assign(seeds1.begin(), seeds1.end());
  field.seeds2.assign(seeds2.begin(), seeds2.end());
  field.tracks[0] = spread<Scalar>(g, seeds1, seeds2, options);
  field.tracks[1] = spread<Scalar>(g, seeds2, seeds1, options);
  return field;
}

template InfluenceField propagate_influence<double>(const Graph&, std::span<const NodeId>,
                                                    std::span<const NodeId>,
                                                    const PropagationOptions&);
template ExactInfluenceField propagate_influence<Rational>(const Graph&, std::span<const NodeId>,
                                                           std::span<const NodeId>,
                                                           const PropagationOptions&);

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kFirm1Wins:
      return "FIRM1_WINS";
    case Verdict::kFirm2Wins:
      return "FIRM2_WINS";
    case Verdict::kTie:
      return "TIE";
  }
  return "?";
}

double CascadeOutcome::mu_supporter(int info) const {
  const auto& s = info == 1 ? supporters1 : supporters2;
  return support_of.empty() ? 0.0
                            : static_cast<double>(s.size()) /
                                  static_cast<double>(support_of.size());
}

double CascadeOutcome::mu_influenced(int info) const {
  const auto& s = info == 1 ? informed1 : informed2;
  return support_of.empty() ? 0.0
                            : static_cast<double>(s.size()) /
                                  static_cast<double>(support_of.size());
}

CascadeOutcome classify(const InfluenceField& field, const Thresholds& thresholds,
                        std::uint64_t tie_rng_seed, const ClassifyOptions& options) {
  const std::size_t n = field.node_count();
  if (thresholds.theta_of.size() != n) {
    throw std::invalid_argument("classify: threshold vector does not match the graph");
  }
  CascadeOutcome out;
  out.support_of.assign(n, Support::kNone);
  const auto& t1 = field.tracks[0];
  const auto& t2 = field.tracks[1];
  for (NodeId v = 0; v < n; ++v) {
    const double theta = thresholds.theta_of[v];
    const double a1 = t1.alpha[v];
    const double a2 = t2.alpha[v];
    const bool in1 = t1.levels.reached(v) && a1 > 0.0 && a1 >= theta;
    const bool in2 = t2.levels.reached(v) && a2 > 0.0 && a2 >= theta;
    if (in1) out.informed1.push_back(v);
    if (in2) out.informed2.push_back(v);
    if (in1 && in2) out.informed_both.push_back(v);
    if (!in1 && !in2) {
      out.uninformed.push_back(v);
      continue;
    }
    const double e1 = in1 ? a1 : 0.0;
    const double e2 = in2 ? a2 : 0.0;
    Support side;
    if (std::abs(e1 - e2) <= options.tie_tolerance * std::max(e1, e2)) {
      side = keyed_coin(tie_rng_seed, v) ? Support::kInfo1 : Support::kInfo2;
      out.coin_assigned.push_back(v);
    } else {
      side = e1 > e2 ? Support::kInfo1 : Support::kInfo2;
    }
    out.support_of[v] = side;
    (side == Support::kInfo1 ? out.supporters1 : out.supporters2).push_back(v);
  }
  if (out.supporters1.size() > out.supporters2.size()) {
    out.verdict = Verdict::kFirm1Wins;
  } else if (out.supporters2.size() > out.supporters1.size()) {
    out.verdict = Verdict::kFirm2Wins;
  } else {
    out.verdict = Verdict::kTie;
  }
  out.per_level = per_level_metrics(field, out);
  return out;
}

std::vector<LevelMetrics> per_level_metrics(const InfluenceField& field,
                                            const CascadeOutcome& outcome) {
  const std::size_t n = field.node_count();
  const std::size_t depth = std::max(field.tracks[0].levels.depth(), field.tracks[1].levels.depth());
  std::vector<LevelMetrics> rows(depth);
  if (n == 0) return rows;

  for (int info = 0; info < 2; ++info) {
    const auto& level_of = field.tracks[info].levels.level_of;
    const auto& informed = info == 0 ? outcome.informed1 : outcome.informed2;
    const auto& supporters = info == 0 ? outcome.supporters1 : outcome.supporters2;
    std::vector<std::size_t> informed_at(depth, 0), supporters_at(depth, 0);
    for (NodeId v : informed) ++informed_at[*level_of[v]];
    for (NodeId v : supporters) ++supporters_at[*level_of[v]];
    std::size_t ci = 0, cs = 0;
    for (std::size_t L = 0; L < depth; ++L) {
      ci += informed_at[L];
      cs += supporters_at[L];
      rows[L].level = static_cast<std::uint32_t>(L);
      rows[L].mu_influenced[info] = static_cast<double>(ci) / static_cast<double>(n);
      rows[L].mu_supporter[info] = static_cast<double>(cs) / static_cast<double>(n);
    }
  }
  return rows;
}

}  // namespace cascade_duel

#include "cascade_duel/centrality.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cascade_duel/error.hpp"

namespace cascade_duel {

std::string_view to_string(SeedMethod method) {
  switch (method) {
    case SeedMethod::kDegree:
      return "dc";
    case SeedMethod::kEigenvector:
      return "ec";
    case SeedMethod::kRankDegree:
      return "rd";
  }
  return "?";
}

SeedMethod parse_seed_method(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "dc") return SeedMethod::kDegree;
  if (lower == "ec") return SeedMethod::kEigenvector;
  if (lower == "rd") return SeedMethod::kRankDegree;
  throw std::invalid_argument("unknown seed method '" + std::string(text) + "' (dc|ec|rd)");
}

std::vector<NodeId> rank_by_score(const std::vector<double>& scores) {
  std::vector<NodeId> order(scores.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return scores[a] > scores[b]; });
  return order;
}

CentralityScores degree_centrality(const Graph& g) {
  if (g.node_count() < 2) throw std::invalid_argument("degree_centrality: need n >= 2");
  CentralityScores out;
  out.method = SeedMethod::kDegree;
  out.score_of.resize(g.node_count());
  const double denom = static_cast<double>(g.node_count() - 1);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out.score_of[v] = static_cast<double>(g.degree(v)) / denom;
  }
  out.ranking = rank_by_score(out.score_of);
  return out;
}

CentralityScores eigenvector_centrality(const Graph& g, EigenvectorOptions options) {
  if (g.empty()) throw EmptyGraphError("eigenvector_centrality: graph has no nodes");
  if (!(options.tol > 0.0)) throw std::invalid_argument("eigenvector_centrality: tol must be > 0");
  const std::size_t n = g.node_count();
  std::vector<double> x(n, 1.0);
  std::vector<double> y(n);
  bool converged = false;
  for (std::size_t iter = 0; iter < options.max_iter; ++iter) {
    double top = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      double acc = x[v];
      for (NodeId u : g.neighbors(v)) acc += x[u];
      y[v] = acc;
      top = std::max(top, acc);
    }
    double change = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      y[v] /= top;
      change = std::max(change, std::abs(y[v] - x[v]));
    }
    x.swap(y);
    if (change < options.tol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw ConvergenceError("eigenvector_centrality: no convergence within " +
                               std::to_string(options.max_iter) + " iterations",
                           x);
  }
  CentralityScores out;
  out.method = SeedMethod::kEigenvector;
  out.score_of = std::move(x);
  out.ranking = rank_by_score(out.score_of);
  return out;
}

double rayleigh_quotient(const Graph& g, const std::vector<double>& x) {
  double num = 0.0, den = 0.0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    double ax = 0.0;
    for (NodeId u : g.neighbors(v)) ax += x[u];
    num += x[v] * ax;
    den += x[v] * x[v];
  }
  return den > 0.0 ? num / den : 0.0;
}

double eigen_residual(const Graph& g, const std::vector<double>& x, double lambda) {
  double worst = 0.0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    double ax = 0.0;
    for (NodeId u : g.neighbors(v)) ax += x[u];
    worst = std::max(worst, std::abs(ax - lambda * x[v]));
  }
  return worst;
}

}  // namespace cascade_duel

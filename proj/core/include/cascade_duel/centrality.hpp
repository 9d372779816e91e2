#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "cascade_duel/graph.hpp"

namespace cascade_duel {

enum class SeedMethod { kDegree, kEigenvector, kRankDegree };

std::string_view to_string(SeedMethod method);
/// Accepts "dc", "ec", "rd" (case-insensitive).
SeedMethod parse_seed_method(std::string_view text);

struct CentralityScores {
  SeedMethod method = SeedMethod::kDegree;
  std::vector<double> score_of;
  /// Descending score, ties by ascending node id.
  std::vector<NodeId> ranking;
};

/// Sorts nodes by descending score, ties by ascending id.
std::vector<NodeId> rank_by_score(const std::vector<double>& scores);

/// d_i / (n - 1). Requires n >= 2.
CentralityScores degree_centrality(const Graph& g);

struct EigenvectorOptions {
  double tol = 1e-9;
  std::size_t max_iter = 10000;
};

/// Power iteration from the all-ones vector, normalizing by the maximum each
/// step. Iterates with A + I, which has the same dominant eigenvector as A
/// but does not oscillate on bipartite graphs. Throws ConvergenceError.
CentralityScores eigenvector_centrality(const Graph& g, EigenvectorOptions options = {});

/// Rayleigh quotient x'Ax / x'x.
double rayleigh_quotient(const Graph& g, const std::vector<double>& x);
/// max_i |(A x)_i - lambda x_i|.
double eigen_residual(const Graph& g, const std::vector<double>& x, double lambda);

}  // namespace cascade_duel

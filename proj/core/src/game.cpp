#include "cascade_duel/game.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cascade_duel/error.hpp"

namespace cascade_duel::game {

std::string_view to_string(Basis basis) {
  return basis == Basis::kInformed ? "informed" : "supporter";
}

Basis parse_basis(std::string_view text) {
  if (text == "informed") return Basis::kInformed;
  if (text == "supporter" || text == "supporters") return Basis::kSupporter;
  throw std::invalid_argument("basis must be 'informed' or 'supporter', got '" +
                              std::string(text) + "'");
}

PositionModel positions(double frac1, double frac2, Basis basis) {
  if (!(frac1 >= 0.0 && frac1 <= 1.0 && frac2 >= 0.0 && frac2 <= 1.0)) {
    throw std::invalid_argument("positions: fractions must lie in [0, 1]");
  }
  PositionModel m;
  m.basis = basis;
  m.frac1 = frac1;
  m.frac2 = frac2;
  m.interval1 = Interval<double>::closed(0.0, frac1);
  m.interval2 = Interval<double>::closed(1.0 - frac2, 1.0);
  m.position1 = (m.interval1.lo + m.interval1.hi) / 2.0;
  m.position2 = (m.interval2.hi + m.interval2.lo) / 2.0;
  // Compare the sum so that touching intervals are detected despite rounding in 1 - frac2.
  if (frac1 + frac2 >= 1.0) {
    m.overlap = Interval<double>::closed(std::min(m.interval2.lo, frac1), frac1);
  }
  return m;
}

namespace {

using Fraction = boost::rational<std::int64_t>;

std::int64_t lattice_parts(double step) {
  if (!(step > 0.0 && step <= 0.5)) throw std::invalid_argument("nash: step must lie in (0, 0.5]");
  const auto parts = std::llround(1.0 / step);
  if (std::abs(static_cast<double>(parts) * step - 1.0) > 1e-9 || parts % 2 != 0) {
    throw std::invalid_argument("nash: step must split [0, 1] into an even number of parts");
  }
  return parts;
}

}  // namespace

std::vector<std::pair<double, double>> mutual_best_responses(double step) {
  const std::int64_t parts = lattice_parts(step);
  std::vector<BestResponse<Fraction>> to_firm2;  // firm 1's response to x2 = k / parts
  std::vector<BestResponse<Fraction>> to_firm1;  // firm 2's response to x1 = k / parts
  to_firm2.reserve(parts + 1);
  to_firm1.reserve(parts + 1);
  for (std::int64_t k = 0; k <= parts; ++k) {
    const Fraction x(k, parts);
    to_firm2.push_back(best_response(Firm::kOne, x));
    to_firm1.push_back(best_response(Firm::kTwo, x));
  }
  std::vector<std::pair<double, double>> found;
  for (std::int64_t k1 = 0; k1 <= parts; ++k1) {
    const Fraction x1(k1, parts);
    const auto& br2 = to_firm1[k1];
    if (!br2.defined()) continue;
    for (std::int64_t k2 = 0; k2 <= parts; ++k2) {
      const Fraction x2(k2, parts);
      if (br2.contains(x2) && to_firm2[k2].contains(x1)) {
        found.emplace_back(boost::rational_cast<double>(x1), boost::rational_cast<double>(x2));
      }
    }
  }
  return found;
}

std::pair<double, double> nash(double step, Basis /*basis*/) {
  // Both bases share the same best-response correspondences.
  auto found = mutual_best_responses(step);
  if (found.size() != 1) {
    throw Error("nash: expected a unique fixed point, found " + std::to_string(found.size()));
  }
  return found.front();
}

std::string_view to_string(MarginOutcome outcome) {
  switch (outcome) {
    case MarginOutcome::kFirm1Wins:
      return "FIRM1_WINS";
    case MarginOutcome::kFirm2Wins:
      return "FIRM2_WINS";
    case MarginOutcome::kEquilibrium:
      return "EQUILIBRIUM";
  }
  return "?";
}

MarginVerdict margin_verdict(double rho1, double rho2, double margin) {
  if (!(margin > 0.0 && margin < 1.0)) {
    throw std::invalid_argument("margin_verdict: margin must lie in (0, 1)");
  }
  if (!(rho1 >= 0.0 && rho1 <= 1.0 && rho2 >= 0.0 && rho2 <= 1.0)) {
    throw std::invalid_argument("margin_verdict: supporter fractions must lie in [0, 1]");
  }
  MarginVerdict v{rho1, rho2, margin, MarginOutcome::kEquilibrium};
  if (std::abs(rho1 - rho2) >= margin) {
    v.verdict = rho1 > rho2 ? MarginOutcome::kFirm1Wins : MarginOutcome::kFirm2Wins;
  }
  return v;
}

}  // namespace cascade_duel::game

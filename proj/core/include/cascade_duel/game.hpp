#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace cascade_duel::game {

enum class Basis { kInformed, kSupporter };
enum class Firm { kOne = 1, kTwo = 2 };

std::string_view to_string(Basis basis);
Basis parse_basis(std::string_view text);

/// Sub-interval of [0, 1] with independently open or closed ends.
template <class T>
struct Interval {
  T lo{};
  T hi{};
  bool lo_open = false;
  bool hi_open = false;

  static Interval closed(T l, T h) { return {l, h, false, false}; }
  static Interval point(T x) { return {x, x, false, false}; }

  bool contains(const T& x) const {
    const bool above = lo_open ? x > lo : x >= lo;
    const bool below = hi_open ? x < hi : x <= hi;
    return above && below;
  }
  bool empty() const { return lo > hi || (lo == hi && (lo_open || hi_open)); }
  bool is_point() const { return lo == hi && !lo_open && !hi_open; }
};

struct PositionModel {
  Basis basis = Basis::kInformed;
  double frac1 = 0.0;
  double frac2 = 0.0;
  double position1 = 0.0;
  double position2 = 0.0;
  Interval<double> interval1;
  Interval<double> interval2;
  /// Population reached by both firms, [1 - frac2, frac1], when non-empty.
  std::optional<Interval<double>> overlap;
};

/// Firm 1 holds [0, frac1] and sits at its midpoint; firm 2 holds
/// [1 - frac2, 1]. Throws std::invalid_argument outside [0, 1].
PositionModel positions(double frac1, double frac2, Basis basis = Basis::kInformed);

template <class T>
struct BestResponse {
  Firm responder = Firm::kOne;
  T opponent_position{};
  /// nullopt where the response correspondence is not defined (firm 1
  /// facing a position below 0.5, firm 2 facing one above).
  std::optional<Interval<T>> response_set;

  bool defined() const { return response_set.has_value(); }
  bool contains(const T& x) const { return response_set && response_set->contains(x); }
};

/// Hotelling best responses on the unit interval:
///   firm 1: (1 - x2, 1/2] if x2 > 1/2, {1/2} if x2 = 1/2
///   firm 2: [1/2, 1 - x1) if x1 < 1/2, {1/2} if x1 = 1/2
template <class T>
BestResponse<T> best_response(Firm responder, const T& opponent) {
  const T half = T(1) / T(2);
  BestResponse<T> out{responder, opponent, std::nullopt};
  if (opponent == half) {
    out.response_set = Interval<T>::point(half);
  } else if (responder == Firm::kOne && opponent > half) {
    out.response_set = Interval<T>{T(1) - opponent, half, true, false};
  } else if (responder == Firm::kTwo && opponent < half) {
    out.response_set = Interval<T>{half, T(1) - opponent, false, true};
  }
  return out;
}

/// Mutual best responses on the lattice {k * step}, evaluated in exact
/// rational arithmetic. `step` must divide 1 into an even number of parts.
/// Throws Error if more than one fixed point turns up.
std::pair<double, double> nash(double step = 0.01, Basis basis = Basis::kInformed);

/// Every fixed point on the lattice, for inspection.
std::vector<std::pair<double, double>> mutual_best_responses(double step);

enum class MarginOutcome { kFirm1Wins, kFirm2Wins, kEquilibrium };
std::string_view to_string(MarginOutcome outcome);

struct MarginVerdict {
  double rho1 = 0.0;
  double rho2 = 0.0;
  double margin = 0.05;
  MarginOutcome verdict = MarginOutcome::kEquilibrium;
};

/// Equilibrium iff |rho1 - rho2| < margin, else the larger share wins.
/// Throws std::invalid_argument for margin outside (0, 1) or rho outside [0, 1].
MarginVerdict margin_verdict(double rho1, double rho2, double margin = 0.05);

}  // namespace cascade_duel::game

#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cascade_duel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& path, std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyGraphError : public Error {
 public:
  using Error::Error;
};

/// A generator was asked for a graph that cannot exist (e.g. odd n*degree).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Power iteration ran out of iterations; the last iterate is kept for inspection.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> last_iterate)
      : Error(what), last_iterate_(std::move(last_iterate)) {}
  const std::vector<double>& last_iterate() const noexcept { return last_iterate_; }

 private:
  std::vector<double> last_iterate_;
};

class NoAffordableSeedError : public Error {
 public:
  using Error::Error;
};

/// ODE integration left the admissible region (negative fractions or drift).
class NumericalError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Warnings that do not abort an operation (partial samples, component
/// restriction) go through this sink. Defaults to stderr.
using WarningSink = std::function<void(std::string_view)>;

void set_warning_sink(WarningSink sink);
void warn(std::string_view message);

}  // namespace cascade_duel

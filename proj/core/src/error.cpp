#include "cascade_duel/error.hpp"

#include <iostream>
#include <mutex>

namespace cascade_duel {

ParseError::ParseError(const std::string& path, std::size_t line, const std::string& what)
    : Error(path + ":" + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::mutex sink_mutex;
WarningSink sink;

}  // namespace

void set_warning_sink(WarningSink new_sink) {
  std::lock_guard lock(sink_mutex);
  sink = std::move(new_sink);
}

void warn(std::string_view message) {
  std::lock_guard lock(sink_mutex);
  if (sink) {
    sink(message);
  } else {
    std::cerr << "warning: " << message << '\n';
  }
}

}  // namespace cascade_duel

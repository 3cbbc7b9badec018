#include "tropmirror/diagnostics.hpp"

#include <iostream>
#include <mutex>

namespace tropmirror {
namespace {

std::mutex& sink_mutex() {
  static std::mutex m;
  return m;
}

DiagnosticSink& sink() {
  static DiagnosticSink s = [](const std::string& msg) { std::clog << "warning: " << msg << '\n'; };
  return s;
}

}  // namespace

void set_diagnostic_sink(DiagnosticSink new_sink) {
  std::lock_guard lock(sink_mutex());
  sink() = std::move(new_sink);
}

void warn(const std::string& message) {
  std::lock_guard lock(sink_mutex());
  if (sink()) sink()(message);
}

}  // namespace tropmirror

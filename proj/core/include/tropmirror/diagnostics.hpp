#pragma once

#include <functional>
#include <string>

namespace tropmirror {

// Non-fatal conditions (precondition warnings, audit flags) are routed
// through a single process-wide sink. The default sink writes to std::clog.
using DiagnosticSink = std::function<void(const std::string&)>;

void set_diagnostic_sink(DiagnosticSink sink);
void warn(const std::string& message);

}  // namespace tropmirror

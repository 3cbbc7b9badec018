#include "tropmirror_cli/config.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

#include "tropmirror/error.hpp"

namespace tropmirror::cli {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

double real_of(const std::string& text, const std::string& what) {
  double x = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, x);
  if (ec != std::errc() || ptr != end || !std::isfinite(x)) bad(what + " is not a finite real: \"" + text + "\"");
  return x;
}

}  // namespace

Command parse_command(const std::string& name) {
  if (name == "subdivide") return Command::Subdivide;
  if (name == "tropical") return Command::Tropical;
  if (name == "amoeba") return Command::Amoeba;
  if (name == "verify") return Command::Verify;
  if (name == "hilbert") return Command::Hilbert;
  bad("unknown command \"" + name + "\"");
}

std::string command_name(Command c) {
  switch (c) {
    case Command::Subdivide: return "subdivide";
    case Command::Tropical: return "tropical";
    case Command::Amoeba: return "amoeba";
    case Command::Verify: return "verify";
    case Command::Hilbert: return "hilbert";
  }
  return "?";
}

double parse_log_t(const std::string& text) {
  if (text.rfind("e^", 0) == 0) {
    const double l = real_of(text.substr(2), "--t exponent");
    if (!(l > 0)) bad("--t must exceed 1");
    return l;
  }
  const double t = real_of(text, "--t");
  if (!(t > 1)) bad("--t must exceed 1");
  return std::log(t);
}

std::array<double, 4> parse_window(const std::string& text) {
  std::vector<double> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) xs.push_back(real_of(item, "--window entry"));
  if (xs.size() != 4) bad("--window needs x0,x1,y0,y1");
  if (!(xs[0] < xs[1] && xs[2] < xs[3])) bad("--window needs x0 < x1 and y0 < y1");
  return {xs[0], xs[1], xs[2], xs[3]};
}

void validate(const JobConfig& c) {
  if (c.input.empty()) bad("--input is required");
  if (c.out.empty()) bad("--out is required");
  if (c.log_t && !(*c.log_t > 0)) bad("--t must exceed 1");
  if (!(c.s >= 0 && c.s <= 1)) bad("--s must lie in [0,1]");
  if (!(c.eps > 0 && std::isfinite(c.eps))) bad("--eps must be positive");
  if (c.J < 1) bad("--J must be at least 1");
  if (c.grid < 2) bad("--grid must be at least 2");
  if (c.args < 1) bad("argument grid must be positive");
  if (!(c.window[0] < c.window[1] && c.window[2] < c.window[3])) bad("--window needs x0 < x1 and y0 < y1");
}

}  // namespace tropmirror::cli

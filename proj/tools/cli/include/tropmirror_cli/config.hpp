#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace tropmirror::cli {

enum class Command { Subdivide, Tropical, Amoeba, Verify, Hilbert };

struct JobConfig {
  Command command = Command::Subdivide;
  std::string input;
  std::optional<double> log_t;  // from --t; default is the chosen scale
  double s = 0.0;
  double eps = 0.1;
  long J = 4;
  std::size_t grid = 200;  // moduli per fiber axis
  std::size_t args = 64;   // arguments per modulus
  std::array<double, 4> window{-3, 3, -3, 3};  // x0, x1, y0, y1
  std::uint64_t seed = 1;
  std::string out;
};

// Throws InvalidArgument on an unknown name.
Command parse_command(const std::string& name);
std::string command_name(Command c);

// log t from "--t" text: a real t > 1, or "e^X" meaning t = e^X.
// Throws InvalidArgument otherwise.
double parse_log_t(const std::string& text);

// x0,x1,y0,y1 with x0 < x1 and y0 < y1.
std::array<double, 4> parse_window(const std::string& text);

// Range checks on every numeric field; throws InvalidArgument.
void validate(const JobConfig& config);

}  // namespace tropmirror::cli

#pragma once

#include <string>

#include "tropmirror/lattice/fan.hpp"

namespace tropmirror::io {

struct FanInput {
  Fan fan;
  SupportFunction phi;
};

// {"rays": [[int,...],...], "max_cones": [[int,...],...], "phi": ["p/q",...]}.
// φ entries may also be JSON integers. Throws MalformedInput on syntax or
// schema errors and MalformedFan when the fan itself is invalid.
FanInput parse_fan_json(const std::string& text);
// Throws MalformedInput when the file cannot be read.
FanInput load_fan_json(const std::string& path);

std::string fan_to_json(const FanInput& input);

}  // namespace tropmirror::io

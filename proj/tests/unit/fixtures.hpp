#pragma once

#include <random>
#include <vector>

#include "tropmirror/lattice/fan.hpp"

namespace fixtures {

using tropmirror::Fan;
using tropmirror::LatticeVector;
using tropmirror::Rational;
using tropmirror::RationalVector;
using tropmirror::SupportFunction;

inline Fan p2_fan() { return Fan({{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}); }
inline Fan p1_fan() { return Fan({{1}, {-1}}, {{0}, {1}}); }
inline Fan p1xp1_fan() {
  return Fan({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}
inline Fan f1_fan() {
  return Fan({{1, 0}, {0, 1}, {-1, 1}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}
inline Fan p3_fan() {
  return Fan({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
             {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline SupportFunction ones(const Fan& f) { return {std::vector<Rational>(f.rays().size(), Rational(1))}; }

struct Variety {
  const char* name;
  Fan fan;
  SupportFunction phi;
};

inline std::vector<Variety> test_varieties() {
  return {{"P2", p2_fan(), ones(p2_fan())},
          {"P1", p1_fan(), ones(p1_fan())},
          {"P1xP1", p1xp1_fan(), ones(p1xp1_fan())},
          {"F1", f1_fan(), ones(f1_fan())}};
}

inline RationalVector random_rational(std::mt19937_64& rng, std::size_t n, int span, int den) {
  std::uniform_int_distribution<int> num(-span * den, span * den);
  RationalVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Rational(num(rng), den);
  return v;
}

}  // namespace fixtures

#pragma once

#include <cstddef>
#include <vector>

#include "tropmirror/amoeba/family.hpp"

namespace tropmirror::amoeba {

// Moduli grid over [lo_k, hi_k] for the fixed coordinate, arguments 2πm/args.
// Points are kept when Log z lies in the box.
struct SampleGrid {
  std::size_t radii = 200;
  std::size_t args = 64;
  std::vector<double> lo;
  std::vector<double> hi;
};

struct AmoebaPoint {
  std::vector<double> u;
  TorusPoint witness;
  double residual = 0;   // |f| relative to the largest monomial
  std::size_t axis = 0;  // coordinate held fixed on the fiber
};

struct SamplerStats {
  std::size_t fibers = 0;
  std::size_t degenerate_fibers = 0;
  std::size_t roots = 0;
  std::size_t lost_paths = 0;  // left the torus or failed to converge
  std::size_t emitted = 0;
};

struct AmoebaCloud {
  std::vector<AmoebaPoint> points;
  SamplerStats stats;
  std::vector<std::vector<double>> us() const;
};

struct NewtonOptions {
  std::size_t s_steps = 16;
  double tolerance = 1e-10;
  std::size_t max_iterations = 50;
  double escape = 1e3;  // |Re w| bound, in units of max(1, log t)
};

// Roots in w_other = log z_other of f_{t,s} with w_axis fixed. Empty when the
// fiber polynomial vanishes identically; `degenerate` reports that case.
std::vector<TorusPoint> fiber_roots(const PatchworkFamily& f, std::size_t axis, Complex w_axis,
                                    bool* degenerate = nullptr, std::size_t* lost = nullptr,
                                    const NewtonOptions& options = {});

// n = 2 only (InvalidArgument otherwise). Both coordinates take a turn as the
// fixed one so that steep and shallow branches are both resolved.
AmoebaCloud amoeba_sample_curve(const PatchworkFamily& f, const SampleGrid& grid, const NewtonOptions& options = {});

}  // namespace tropmirror::amoeba

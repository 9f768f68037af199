#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tanmax/kernels.hpp"
#include "tanmax/space.hpp"

namespace tanmax {

struct NamedFunction {
  std::string name;
  BoundaryFunction values;
};

/// Seeded stress family for the L^p experiments: cap indicators of a few
/// widths, random +-1 step functions on index blocks, and truncated power
/// spikes min(d(x, x0)^{-gamma/q}, M) with q = p (1 + margin) so the
/// spikes stay in L^p with shrinking margin.
struct FamilySpec {
  bool include_constant = true;
  std::vector<double> cap_radii = {1.0, 0.5, 0.125};
  int step_count = 2;
  int step_blocks = 16;
  int spike_count = 2;
  double spike_margin = 0.5;
  std::uint64_t seed = 1;
};

std::vector<NamedFunction> make_family(const HomogeneousSpace& space, const FamilySpec& spec,
                                       double p);

/// Indicator of B(center, radius).
BoundaryFunction cap_indicator(const HomogeneousSpace& space, int center, double radius);

}  // namespace tanmax

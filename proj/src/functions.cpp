#include "tanmax/functions.hpp"

#include <cmath>
#include <sstream>

#include "tanmax/rng.hpp"

namespace tanmax {

BoundaryFunction cap_indicator(const HomogeneousSpace& space, int center, double radius) {
  BoundaryFunction f(space.size(), 0.0);
  for (int i = 0; i < space.size(); ++i)
    if (space.distance(center, i) < radius) f[i] = 1.0;
  return f;
}

std::vector<NamedFunction> make_family(const HomogeneousSpace& space, const FamilySpec& spec,
                                       double p) {
  const int n = space.size();
  Rng rng(spec.seed);
  std::vector<NamedFunction> family;

  if (spec.include_constant) family.push_back({"const_1", BoundaryFunction(n, 1.0)});

  for (double r : spec.cap_radii) {
    int center = static_cast<int>(rng.below(n));
    std::ostringstream name;
    name << "cap_r" << r;
    family.push_back({name.str(), cap_indicator(space, center, r)});
  }

  for (int s = 0; s < spec.step_count; ++s) {
    BoundaryFunction f(n);
    int blocks = std::max(2, spec.step_blocks * (s + 1));
    std::vector<double> sign(blocks);
    for (int b = 0; b < blocks; ++b) sign[b] = (rng.next() & 1) ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) f[i] = sign[static_cast<std::size_t>(i) * blocks / n];
    std::ostringstream name;
    name << "step_b" << blocks;
    family.push_back({name.str(), std::move(f)});
  }

  // truncated power spikes, exponent gamma/q with q = p (1 + margin) > p
  for (int s = 0; s < spec.spike_count; ++s) {
    int center = static_cast<int>(rng.below(n));
    double q = p * (1.0 + spec.spike_margin);
    double expo = space.gamma / q;
    double cap = std::pow(space.max_nearest_neighbor, -expo);
    BoundaryFunction f(n);
    for (int i = 0; i < n; ++i) {
      double d = space.distance(center, i);
      f[i] = d == 0.0 ? cap : std::min(std::pow(d, -expo), cap);
    }
    std::ostringstream name;
    name << "spike_" << s;
    family.push_back({name.str(), std::move(f)});
  }

  return family;
}

}  // namespace tanmax

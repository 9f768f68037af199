#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>
#include <vector>

namespace tanmax {

/// Interior point (y, t): a boundary point index plus a scale t = 1 - |z|.
struct InteriorPoint {
  int base = 0;
  double scale = 1.0;
};

/// A function u(y, t) on the dyadic scale grid: values indexed by
/// (point, level) with t = 2^{-k}, k in [k_lo, k_hi]. Point-major storage
/// so the per-point level run is contiguous.
struct InteriorFunction {
  int n = 0;
  int k_lo = 0;
  int k_hi = -1;
  std::vector<double> values;

  InteriorFunction() = default;
  InteriorFunction(int n_points, int lo, int hi)
      : n(n_points), k_lo(lo), k_hi(hi),
        values(static_cast<std::size_t>(n_points) * (hi - lo + 1), 0.0) {}

  int levels() const { return k_hi - k_lo + 1; }

  double& at(int point, int level) {
    return values[static_cast<std::size_t>(point) * levels() + (level - k_lo)];
  }
  double at(int point, int level) const {
    return values[static_cast<std::size_t>(point) * levels() + (level - k_lo)];
  }
  const double* row(int point) const {
    return values.data() + static_cast<std::size_t>(point) * levels();
  }
};

/// Approach-region parameters. Membership at scale t uses the width
/// phi(t) = t * (log2(2/t))^delta; on the dyadic grid log2(2/t_k) = k+1.
/// When A is present the admissible scales shrink to A < (log2(2/t))^delta,
/// equivalently t < tau_A = 2^{1 - A^{1/delta}}.
struct ApproachSpec {
  double aperture = 1.0;
  double delta = 0.0;
  std::optional<double> A;

  double phi(double t) const {
    return t * std::pow(std::log2(2.0 / t), delta);
  }
  double phi_level(int k) const {
    return std::ldexp(std::pow(static_cast<double>(k + 1), delta), -k);
  }
  /// Scale bound from the A-restriction, in the base-2 convention.
  double tau_A() const {
    return A ? std::pow(2.0, 1.0 - std::pow(*A, 1.0 / delta)) : 2.0;
  }
  bool level_admissible(int k) const {
    return !A || *A < std::pow(static_cast<double>(k + 1), delta);
  }
};

}  // namespace tanmax

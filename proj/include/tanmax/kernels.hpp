#pragma once

#include <span>
#include <vector>

#include "tanmax/interior.hpp"
#include "tanmax/space.hpp"

namespace tanmax {

using BoundaryFunction = std::vector<double>;

/// Which Poisson kernel a power integral is built from. Each family
/// carries its own exponent offset: the power applied to the kernel is
/// l + offset.
enum class KernelFamily { Disk, RealBall, ComplexBall };

/// Poisson kernel of the unit disk, (1/2pi) (1-r^2) / |r - e^{i gap}|^2.
double poisson_disk_kernel(double r, double angle_gap);

/// Poisson kernel of the unit ball in R^n, (1 - |x|^2) / |x - theta|^n.
/// x is an interior point (|x| < 1), theta a boundary point (|theta| = 1).
double poisson_ball_kernel(std::span<const double> x, std::span<const double> theta);

/// Invariant Poisson kernel of the unit ball in C^n,
/// (1 - |z|^2)^n / |1 - <z,zeta>|^{2n}. Points are interleaved re/im pairs.
double invariant_poisson_kernel(std::span<const double> z, std::span<const double> zeta);

/// Exponent offset of a kernel family: 1/2 for the disk and complex ball,
/// (n-1)/n for the real ball.
double kernel_exponent_offset(KernelFamily family, const HomogeneousSpace& space);

/// Quadrature of [kernel]^{l + offset} * f over the space, the power
/// integral P_l f at the interior point z = (base, scale).
double power_integral(const HomogeneousSpace& space, const BoundaryFunction& f,
                      InteriorPoint z, double l, KernelFamily family);

/// P_l f / P_l 1; reproduces constants exactly.
double normalized_power_integral(const HomogeneousSpace& space, const BoundaryFunction& f,
                                 InteriorPoint z, double l, KernelFamily family);

/// The operator (log2(2/t))^{-1} * sum_y f(y) w(y) / (d(x,y) + t)^gamma.
/// Requires t above the resolution floor.
double p0(const HomogeneousSpace& space, const BoundaryFunction& f, int x, double t);

/// p0 evaluated at every point and every dyadic level in [0, k_hi].
/// OpenMP-parallel over boundary points; the circle path runs on
/// offset-indexed kernel tables, which also makes the field exactly
/// rotation-equivariant.
InteriorFunction p0_field(const HomogeneousSpace& space, const BoundaryFunction& f, int k_hi);

/// Normalized power integral P_l f / P_l 1 at every point and dyadic
/// level in [0, k_hi] (kernel levels, so k_hi may exceed max_level()).
InteriorFunction normalized_power_field(const HomogeneousSpace& space,
                                        const BoundaryFunction& f, double l,
                                        KernelFamily family, int k_hi);

}  // namespace tanmax

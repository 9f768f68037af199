#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace tanmax {

enum class SpaceKind { Circle, RealSphere, ComplexSphere };

std::string to_string(SpaceKind kind);

/// An open ball B(center, radius) = { y : d(center, y) < radius }.
struct Ball {
  int center = 0;
  double radius = 0.0;
};

/// Finite discretization of a compact space X with a quasimetric d and a
/// measure mu of homogeneity order gamma: mu(B(x,t)) ~ t^gamma.
///
/// Immutable after construction; all member queries are const and safe to
/// call from parallel workers.
class HomogeneousSpace {
public:
  SpaceKind kind = SpaceKind::Circle;
  int ambient_dim = 2;   ///< real coordinates per point
  int complex_dim = 0;   ///< ComplexSphere only: n with X = S^{2n-1}
  int param = 0;         ///< builder parameter (n_dim or n_complex), 0 for circle

  std::vector<double> coords;   ///< size() * ambient_dim, point-major
  std::vector<double> weights;  ///< strictly positive quadrature weights
  double total_mass = 0.0;

  double gamma = 1.0;
  double quasi_constant = 1.0;  ///< a_d in the quasi-triangle inequality
  double diameter = 0.0;        ///< max pairwise distance on the grid

  /// Largest nearest-neighbor distance of the point cloud.
  double max_nearest_neighbor = 0.0;
  /// Trust floor for ball statistics: h = 4 * max_nearest_neighbor.
  double resolution_floor = 0.0;

  int size() const { return static_cast<int>(weights.size()); }

  const double* point(int i) const { return coords.data() + static_cast<std::size_t>(i) * ambient_dim; }

  /// Quasimetric distance. Exactly symmetric: d(i,j) and d(j,i) evaluate
  /// to the same floating-point value.
  double distance(int i, int j) const;

  /// Dyadic scale of level k: t_k = 2^{-k}. Note log2(2/t_k) = k + 1.
  static double scale_of_level(int k) { return std::ldexp(1.0, -k); }

  /// Coarsest dyadic level with t_k <= 2^{-k_min} covering the diameter
  /// (-1 for diameter-2 model spaces, 0 when diam <= 1).
  int min_level() const;
  /// Finest dyadic level with 2^{-k} >= resolution_floor.
  int max_level() const;
  /// Finest dyadic level usable for kernel quadrature: 2^{-k} >= max
  /// nearest-neighbor spacing. Finer than max_level; ball statistics are
  /// not trustworthy below max_level, but mollified kernels still are.
  int max_kernel_level() const;

  /// Members of B(center, radius), in index order.
  std::vector<int> ball_points(int center, double radius) const;
  /// Sum of weights over B(center, radius).
  double ball_mass(int center, double radius) const;

  // Circle fast path: distances depend only on the index offset.
  bool has_offset_table() const { return kind == SpaceKind::Circle; }
  double offset_distance(int offset) const { return chord_by_offset_[offset]; }

  std::string descriptor_json() const;

private:
  friend HomogeneousSpace build_circle(int n);
  friend HomogeneousSpace build_real_sphere(int n_dim, int m);
  friend HomogeneousSpace build_complex_sphere(int n_complex, int m);

  void finish_build();  ///< diameter, nearest-neighbor stats, floor

  std::vector<double> chord_by_offset_;  ///< circle only
};

/// n equally spaced points on the unit circle, chordal metric, weights
/// 2*pi/n (total mass 2*pi), gamma = 1.
HomogeneousSpace build_circle(int n);

/// m points on S^{n_dim-1} from a deterministic equal-area construction,
/// Euclidean metric, uniform weights summing to 1, gamma = n_dim - 1.
HomogeneousSpace build_real_sphere(int n_dim, int m);

/// m points on S^{2n-1} in C^n from a deterministic low-discrepancy
/// sequence; quasimetric d(z,w) = |1 - <z,w>|, uniform weights summing
/// to 1, gamma = n_complex. quasi_constant is estimated at build time.
HomogeneousSpace build_complex_sphere(int n_complex, int m);

/// Max over sampled triples of d(x,y) / (d(x,z) + d(z,y)). Also asserts
/// the symmetry and identity axioms exactly on the sampled pairs and
/// throws (naming the witness pair) if either fails. Mixes uniform
/// triples with near-neighbor triples, which expose quasimetric behavior
/// much faster than uniform sampling alone.
double verify_quasimetric(const HomogeneousSpace& space, int samples,
                          std::uint64_t seed = 0x5eed);

/// Smallest C >= 1 with mu(B(x,t)) in [t^gamma / C, C t^gamma] over all
/// points and all dyadic t in [t_min, t_max]. Reports only, never fails.
double verify_homogeneity(const HomogeneousSpace& space, double t_min, double t_max);

/// Largest dyadic level k with d < 2^{-k}, i.e. the finest ball around a
/// center at distance d that still contains the point. Exact for the
/// strict membership convention d(x,y) < t.
inline int finest_level_containing(double d, int level_cap) {
  if (d <= 0.0) return level_cap;
  int e;
  std::frexp(d, &e);  // d in [2^{e-1}, 2^e)
  int k = -e;
  return k > level_cap ? level_cap : k;
}

}  // namespace tanmax

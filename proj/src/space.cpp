#include "tanmax/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "tanmax/rng.hpp"

namespace tanmax {

namespace {

constexpr double kPi = 3.14159265358979323846;

double euclidean(const double* a, const double* b, int dim) {
  double s = 0.0;
  for (int q = 0; q < dim; ++q) {
    double diff = a[q] - b[q];
    s += diff * diff;
  }
  return std::sqrt(s);
}

// |1 - <z,w>| with interleaved re/im coordinates.
double koranyi(const double* a, const double* b, int complex_dim) {
  double re = 0.0, im = 0.0;
  for (int q = 0; q < complex_dim; ++q) {
    double ar = a[2 * q], ai = a[2 * q + 1];
    double br = b[2 * q], bi = b[2 * q + 1];
    re += ar * br + ai * bi;
    im += ai * br - ar * bi;
  }
  double dre = 1.0 - re;
  return std::sqrt(dre * dre + im * im);
}

// Inverse normal CDF (Acklam's rational approximation), enough accuracy
// for sample-point placement.
double inverse_normal_cdf(double u) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425, phigh = 1 - plow;
  double q, r;
  if (u < plow) {
    q = std::sqrt(-2 * std::log(u));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  if (u > phigh) {
    q = std::sqrt(-2 * std::log(1 - u));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  q = u - 0.5;
  r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
}

// Additive-recurrence low-discrepancy sequence in [0,1)^dim based on the
// generalized golden ratio.
void kronecker_point(int index, int dim, double* out) {
  double phi = 2.0;
  for (int it = 0; it < 32; ++it) phi = std::pow(1.0 + phi, 1.0 / (dim + 1));
  double alpha = 1.0;
  for (int q = 0; q < dim; ++q) {
    alpha /= phi;
    out[q] = std::fmod(0.5 + alpha * (index + 1), 1.0);
  }
}

}  // namespace

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::Circle: return "circle";
    case SpaceKind::RealSphere: return "real_sphere";
    case SpaceKind::ComplexSphere: return "complex_sphere";
  }
  return "?";
}

double HomogeneousSpace::distance(int i, int j) const {
  if (i == j) return 0.0;  // identity axiom, exact
  switch (kind) {
    case SpaceKind::Circle: {
      int o = i - j;
      if (o < 0) o = -o;
      int n = size();
      if (o > n - o) o = n - o;
      return chord_by_offset_[o];
    }
    case SpaceKind::RealSphere:
      return euclidean(point(i), point(j), ambient_dim);
    case SpaceKind::ComplexSphere:
      return koranyi(point(i), point(j), complex_dim);
  }
  return 0.0;
}

int HomogeneousSpace::min_level() const {
  int k = 0;
  while (scale_of_level(k) < diameter) --k;
  return k;
}

int HomogeneousSpace::max_level() const {
  return static_cast<int>(std::floor(std::log2(1.0 / resolution_floor)));
}

int HomogeneousSpace::max_kernel_level() const {
  return static_cast<int>(std::floor(std::log2(1.0 / max_nearest_neighbor)));
}

std::vector<int> HomogeneousSpace::ball_points(int center, double radius) const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j)
    if (distance(center, j) < radius) out.push_back(j);
  return out;
}

double HomogeneousSpace::ball_mass(int center, double radius) const {
  double s = 0.0;
  for (int j = 0; j < size(); ++j)
    if (distance(center, j) < radius) s += weights[j];
  return s;
}

void HomogeneousSpace::finish_build() {
  const int n = size();
  total_mass = 0.0;
  for (double w : weights) total_mass += w;

  double diam = 0.0, max_nn = 0.0;
#pragma omp parallel
  {
    double local_diam = 0.0, local_nn = 0.0;
#pragma omp for nowait
    for (int i = 0; i < n; ++i) {
      double nn = std::numeric_limits<double>::infinity();
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        double d = distance(i, j);
        if (d > local_diam) local_diam = d;
        if (d < nn) nn = d;
      }
      if (nn > local_nn) local_nn = nn;
    }
#pragma omp critical
    {
      diam = std::max(diam, local_diam);
      max_nn = std::max(max_nn, local_nn);
    }
  }
  diameter = diam;
  max_nearest_neighbor = max_nn;
  resolution_floor = 4.0 * max_nn;
}

HomogeneousSpace build_circle(int n) {
  if (n < 4) throw std::invalid_argument("build_circle: n too small");
  HomogeneousSpace s;
  s.kind = SpaceKind::Circle;
  s.ambient_dim = 2;
  s.coords.resize(2 * static_cast<std::size_t>(n));
  s.weights.assign(n, 2.0 * kPi / n);
  s.gamma = 1.0;
  s.quasi_constant = 1.0;
  s.chord_by_offset_.resize(n / 2 + 1);
  for (int o = 0; o <= n / 2; ++o)
    s.chord_by_offset_[o] = 2.0 * std::sin(kPi * o / n);
  for (int i = 0; i < n; ++i) {
    double th = -kPi + 2.0 * kPi * i / n;
    s.coords[2 * i] = std::cos(th);
    s.coords[2 * i + 1] = std::sin(th);
  }
  s.finish_build();
  return s;
}

HomogeneousSpace build_real_sphere(int n_dim, int m) {
  if (n_dim < 2) throw std::invalid_argument("build_real_sphere: n_dim must be >= 2");
  if (m < 64) throw std::invalid_argument("build_real_sphere: m must be >= 64");
  HomogeneousSpace s;
  s.kind = SpaceKind::RealSphere;
  s.ambient_dim = n_dim;
  s.param = n_dim;
  s.gamma = n_dim - 1.0;
  s.quasi_constant = 1.0;
  s.weights.assign(m, 1.0 / m);
  s.coords.resize(static_cast<std::size_t>(m) * n_dim);

  if (n_dim == 2) {
    for (int i = 0; i < m; ++i) {
      double th = -kPi + 2.0 * kPi * i / m;
      s.coords[2 * i] = std::cos(th);
      s.coords[2 * i + 1] = std::sin(th);
    }
  } else if (n_dim == 3) {
    // Fibonacci spiral: near-equal-area, deterministic.
    const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < m; ++i) {
      double z = 1.0 - (2.0 * i + 1.0) / m;
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      double ph = golden_angle * i;
      s.coords[3 * i] = r * std::cos(ph);
      s.coords[3 * i + 1] = r * std::sin(ph);
      s.coords[3 * i + 2] = z;
    }
  } else {
    // Low-discrepancy Gaussians, normalized.
    std::vector<double> u(n_dim);
    for (int i = 0; i < m; ++i) {
      kronecker_point(i, n_dim, u.data());
      double norm2 = 0.0;
      for (int q = 0; q < n_dim; ++q) {
        double g = inverse_normal_cdf(std::min(std::max(u[q], 1e-12), 1.0 - 1e-12));
        s.coords[static_cast<std::size_t>(i) * n_dim + q] = g;
        norm2 += g * g;
      }
      double inv = 1.0 / std::sqrt(norm2);
      for (int q = 0; q < n_dim; ++q) s.coords[static_cast<std::size_t>(i) * n_dim + q] *= inv;
    }
  }
  s.finish_build();
  return s;
}

HomogeneousSpace build_complex_sphere(int n_complex, int m) {
  if (n_complex < 1) throw std::invalid_argument("build_complex_sphere: n_complex must be >= 1");
  if (m < 64) throw std::invalid_argument("build_complex_sphere: m must be >= 64");
  HomogeneousSpace s;
  s.kind = SpaceKind::ComplexSphere;
  s.complex_dim = n_complex;
  s.ambient_dim = 2 * n_complex;
  s.param = n_complex;
  s.gamma = n_complex;
  s.weights.assign(m, 1.0 / m);
  s.coords.resize(static_cast<std::size_t>(m) * s.ambient_dim);

  std::vector<double> u(s.ambient_dim);
  for (int i = 0; i < m; ++i) {
    kronecker_point(i, s.ambient_dim, u.data());
    double norm2 = 0.0;
    for (int q = 0; q < s.ambient_dim; ++q) {
      double g = inverse_normal_cdf(std::min(std::max(u[q], 1e-12), 1.0 - 1e-12));
      s.coords[static_cast<std::size_t>(i) * s.ambient_dim + q] = g;
      norm2 += g * g;
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (int q = 0; q < s.ambient_dim; ++q)
      s.coords[static_cast<std::size_t>(i) * s.ambient_dim + q] *= inv;
  }
  s.finish_build();
  s.quasi_constant = verify_quasimetric(s, 200000);
  return s;
}

double verify_quasimetric(const HomogeneousSpace& space, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("verify_quasimetric: samples must be >= 1");
  const int n = space.size();
  if (n == 0) throw std::invalid_argument("verify_quasimetric: empty space");

  Rng rng(seed);
  double worst = 0.0;

  auto check_pair = [&](int i, int j) {
    double dij = space.distance(i, j);
    double dji = space.distance(j, i);
    if (dij != dji) {
      std::ostringstream msg;
      msg << "quasimetric asymmetry at pair (" << i << ", " << j << ")";
      throw std::runtime_error(msg.str());
    }
    if (i != j && dij == 0.0) {
      std::ostringstream msg;
      msg << "zero distance between distinct points (" << i << ", " << j << ")";
      throw std::runtime_error(msg.str());
    }
    if (i == j && dij != 0.0) {
      std::ostringstream msg;
      msg << "nonzero self-distance at point " << i;
      throw std::runtime_error(msg.str());
    }
  };

  // Half uniform triples, half local ones: z near x and y near z. Local
  // triples are where quasimetric constants actually show up.
  for (int s = 0; s < samples; ++s) {
    int x, y, z;
    if (s % 2 == 0 || n < 16) {
      x = static_cast<int>(rng.below(n));
      y = static_cast<int>(rng.below(n));
      z = static_cast<int>(rng.below(n));
    } else {
      x = static_cast<int>(rng.below(n));
      z = -1;
      double zd = std::numeric_limits<double>::infinity();
      for (int probe = 0; probe < 24; ++probe) {
        int c = static_cast<int>(rng.below(n));
        double d = space.distance(x, c);
        if (c != x && d < zd) { zd = d; z = c; }
      }
      y = -1;
      double yd = std::numeric_limits<double>::infinity();
      for (int probe = 0; probe < 24; ++probe) {
        int c = static_cast<int>(rng.below(n));
        double d = space.distance(z, c);
        if (c != z && c != x && d < yd) { yd = d; y = c; }
      }
    }
    if (x == y || y == z || x == z) continue;
    check_pair(x, y);
    check_pair(x, z);
    double denom = space.distance(x, z) + space.distance(z, y);
    if (denom > 0.0) worst = std::max(worst, space.distance(x, y) / denom);
  }
  check_pair(0, 0);
  return worst;
}

double verify_homogeneity(const HomogeneousSpace& space, double t_min, double t_max) {
  const double h = space.resolution_floor;
  if (!(t_min < t_max)) throw std::invalid_argument("verify_homogeneity: empty range");
  if (t_min < h * (1.0 - 1e-12))
    throw std::invalid_argument("verify_homogeneity: t_min below resolution floor");
  if (t_max > space.diameter * (1.0 + 1e-12))
    throw std::invalid_argument("verify_homogeneity: t_max above diameter");

  const int n = space.size();
  const double gamma = space.gamma;
  double worst = 1.0;
#pragma omp parallel
  {
    double local = 1.0;
#pragma omp for nowait
    for (int i = 0; i < n; ++i) {
      for (int k = -2; k <= 60; ++k) {
        double t = HomogeneousSpace::scale_of_level(k);
        if (t > t_max || t < t_min) continue;
        double mass = space.ball_mass(i, t);
        double tg = std::pow(t, gamma);
        local = std::max(local, std::max(mass / tg, tg / mass));
      }
    }
#pragma omp critical
    worst = std::max(worst, local);
  }
  return worst;
}

std::string HomogeneousSpace::descriptor_json() const {
  std::ostringstream os;
  os.precision(17);
  os << "{\"kind\":\"" << to_string(kind) << "\"";
  os << ",\"size\":" << size();
  if (param != 0) os << ",\"parameter\":" << param;
  os << ",\"gamma\":" << gamma;
  os << ",\"quasi_constant\":" << quasi_constant;
  os << ",\"diameter\":" << diameter;
  os << ",\"resolution_floor\":" << resolution_floor;
  os << ",\"total_mass\":" << total_mass << "}";
  return os.str();
}

}  // namespace tanmax

#include "tanmax/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace tanmax {

namespace {

constexpr double kPi = 3.14159265358979323846;

// (d + t)^gamma with the model exponents special-cased; pow() dominates
// the field sweeps otherwise.
inline double shifted_power(double d, double t, double gamma) {
  double b = d + t;
  if (gamma == 1.0) return b;
  if (gamma == 2.0) return b * b;
  return std::pow(b, gamma);
}

// Kernel value between the interior point (base j, scale t) and the
// boundary point y, for the family owned by the space.
double kernel_value(const HomogeneousSpace& space, KernelFamily family, int j, double t,
                    int y) {
  const double r = 1.0 - t;
  switch (family) {
    case KernelFamily::Disk: {
      double gap;
      if (space.has_offset_table()) {
        int o = j - y;
        if (o < 0) o = -o;
        const int n = space.size();
        if (o > n - o) o = n - o;
        gap = 2.0 * kPi * o / n;
      } else {
        if (space.ambient_dim != 2)
          throw std::invalid_argument("disk kernel needs a 2-d ambient space");
        const double* a = space.point(j);
        const double* b = space.point(y);
        gap = std::atan2(a[0] * b[1] - a[1] * b[0], a[0] * b[0] + a[1] * b[1]);
      }
      return poisson_disk_kernel(r, gap);
    }
    case KernelFamily::RealBall: {
      const int dim = space.ambient_dim;
      const double* th = space.point(j);
      const double* yy = space.point(y);
      double s = 0.0;
      for (int q = 0; q < dim; ++q) {
        double diff = r * th[q] - yy[q];
        s += diff * diff;
      }
      return (1.0 - r * r) / std::pow(std::sqrt(s), dim);
    }
    case KernelFamily::ComplexBall: {
      const int nc = space.complex_dim;
      const double* z = space.point(j);
      const double* ze = space.point(y);
      double re = 0.0, im = 0.0;
      for (int q = 0; q < nc; ++q) {
        double ar = r * z[2 * q], ai = r * z[2 * q + 1];
        double br = ze[2 * q], bi = ze[2 * q + 1];
        re += ar * br + ai * bi;
        im += ai * br - ar * bi;
      }
      double dre = 1.0 - re;
      double mod2 = dre * dre + im * im;
      return std::pow(1.0 - r * r, nc) / std::pow(mod2, nc);
    }
  }
  return 0.0;
}

void require_kernel_scale(const HomogeneousSpace& space, double t) {
  if (!(t > 0.0) || t > 1.0)
    throw std::invalid_argument("interior scale must lie in (0, 1]");
  if (t < space.max_nearest_neighbor)
    throw std::invalid_argument("interior scale below the grid spacing");
}

}  // namespace

double poisson_disk_kernel(double r, double angle_gap) {
  if (r >= 1.0 || r < 0.0) throw std::invalid_argument("poisson_disk_kernel: need 0 <= r < 1");
  double den = 1.0 - 2.0 * r * std::cos(angle_gap) + r * r;
  return (1.0 / (2.0 * kPi)) * (1.0 - r * r) / den;
}

double poisson_ball_kernel(std::span<const double> x, std::span<const double> theta) {
  const int n = static_cast<int>(x.size());
  double r2 = 0.0, s = 0.0;
  for (int q = 0; q < n; ++q) {
    r2 += x[q] * x[q];
    double diff = x[q] - theta[q];
    s += diff * diff;
  }
  if (r2 >= 1.0) throw std::invalid_argument("poisson_ball_kernel: |x| must be < 1");
  return (1.0 - r2) / std::pow(std::sqrt(s), n);
}

double invariant_poisson_kernel(std::span<const double> z, std::span<const double> zeta) {
  const int nc = static_cast<int>(z.size()) / 2;
  double r2 = 0.0, re = 0.0, im = 0.0;
  for (int q = 0; q < nc; ++q) {
    double ar = z[2 * q], ai = z[2 * q + 1];
    double br = zeta[2 * q], bi = zeta[2 * q + 1];
    r2 += ar * ar + ai * ai;
    re += ar * br + ai * bi;
    im += ai * br - ar * bi;
  }
  if (r2 >= 1.0) throw std::invalid_argument("invariant_poisson_kernel: |z| must be < 1");
  double dre = 1.0 - re;
  double mod2 = dre * dre + im * im;
  return std::pow(1.0 - r2, nc) / std::pow(mod2, nc);
}

double kernel_exponent_offset(KernelFamily family, const HomogeneousSpace& space) {
  switch (family) {
    case KernelFamily::Disk: return 0.5;
    case KernelFamily::RealBall: return (space.ambient_dim - 1.0) / space.ambient_dim;
    case KernelFamily::ComplexBall: return 0.5;
  }
  return 0.5;
}

double power_integral(const HomogeneousSpace& space, const BoundaryFunction& f,
                      InteriorPoint z, double l, KernelFamily family) {
  if (l < 0.0) throw std::invalid_argument("power_integral: l must be >= 0");
  require_kernel_scale(space, z.scale);
  const double expo = l + kernel_exponent_offset(family, space);
  const int n = space.size();
  double s = 0.0;
  if (space.has_offset_table() && family == KernelFamily::Disk) {
    // Offset-ordered summation: shifting f by one grid step shifts the
    // result by one grid step bit-exactly.
    const double r = 1.0 - z.scale;
    for (int o = 0; o < n; ++o) {
      int y = z.base - o;
      if (y < 0) y += n;
      int oo = o > n - o ? n - o : o;
      double gap = 2.0 * kPi * oo / n;
      s += std::pow(poisson_disk_kernel(r, gap), expo) * f[y] * space.weights[y];
    }
  } else {
    for (int y = 0; y < n; ++y)
      s += std::pow(kernel_value(space, family, z.base, z.scale, y), expo) * f[y] *
           space.weights[y];
  }
  return s;
}

double normalized_power_integral(const HomogeneousSpace& space, const BoundaryFunction& f,
                                 InteriorPoint z, double l, KernelFamily family) {
  BoundaryFunction ones(space.size(), 1.0);
  double den = power_integral(space, ones, z, l, family);
  if (!(den > 0.0)) throw std::runtime_error("normalized_power_integral: vanishing P_l 1");
  return power_integral(space, f, z, l, family) / den;
}

double p0(const HomogeneousSpace& space, const BoundaryFunction& f, int x, double t) {
  if (!(t > 0.0) || t > 1.0) throw std::invalid_argument("p0: scale must lie in (0, 1]");
  if (t < space.resolution_floor)
    throw std::invalid_argument("p0: scale below the resolution floor");
  const int n = space.size();
  const double gamma = space.gamma;
  double s = 0.0;
  if (space.has_offset_table()) {
    for (int o = 0; o < n; ++o) {
      int y = x - o;
      if (y < 0) y += n;
      int oo = o > n - o ? n - o : o;
      s += f[y] * space.weights[y] / shifted_power(space.offset_distance(oo), t, gamma);
    }
  } else {
    for (int y = 0; y < n; ++y)
      s += f[y] * space.weights[y] / shifted_power(space.distance(x, y), t, gamma);
  }
  return s / std::log2(2.0 / t);
}

InteriorFunction p0_field(const HomogeneousSpace& space, const BoundaryFunction& f, int k_hi) {
  const int n = space.size();
  InteriorFunction u(n, 0, k_hi);
  const double gamma = space.gamma;

  if (space.has_offset_table()) {
    // kernel tables per level, indexed by offset
    std::vector<std::vector<double>> table(k_hi + 1, std::vector<double>(n));
    for (int k = 0; k <= k_hi; ++k) {
      double t = HomogeneousSpace::scale_of_level(k);
      for (int o = 0; o < n; ++o) {
        int oo = o > n - o ? n - o : o;
        table[k][o] = 1.0 / shifted_power(space.offset_distance(oo), t, gamma);
      }
    }
#pragma omp parallel for schedule(static)
    for (int x = 0; x < n; ++x) {
      for (int k = 0; k <= k_hi; ++k) {
        const double* kt = table[k].data();
        double s = 0.0;
        for (int o = 0; o < n; ++o) {
          int y = x - o;
          if (y < 0) y += n;
          s += f[y] * space.weights[y] * kt[o];
        }
        u.at(x, k) = s / (k + 1);
      }
    }
  } else {
#pragma omp parallel for schedule(static)
    for (int x = 0; x < n; ++x) {
      std::vector<double> acc(k_hi + 1, 0.0);
      for (int y = 0; y < n; ++y) {
        double d = space.distance(x, y);
        double fw = f[y] * space.weights[y];
        for (int k = 0; k <= k_hi; ++k)
          acc[k] += fw / shifted_power(d, HomogeneousSpace::scale_of_level(k), gamma);
      }
      for (int k = 0; k <= k_hi; ++k) u.at(x, k) = acc[k] / (k + 1);
    }
  }
  return u;
}

InteriorFunction normalized_power_field(const HomogeneousSpace& space,
                                        const BoundaryFunction& f, double l,
                                        KernelFamily family, int k_hi) {
  const int n = space.size();
  InteriorFunction u(n, 0, k_hi);
  const double expo = l + kernel_exponent_offset(family, space);

  if (space.has_offset_table() && family == KernelFamily::Disk) {
    std::vector<std::vector<double>> table(k_hi + 1, std::vector<double>(n));
    std::vector<double> denom(k_hi + 1, 0.0);
    const double w = space.weights[0];  // uniform on the circle
    for (int k = 0; k <= k_hi; ++k) {
      double r = 1.0 - HomogeneousSpace::scale_of_level(k);
      double den = 0.0;
      for (int o = 0; o < n; ++o) {
        int oo = o > n - o ? n - o : o;
        table[k][o] = std::pow(poisson_disk_kernel(r, 2.0 * kPi * oo / n), expo);
        den += table[k][o] * w;
      }
      denom[k] = den;
    }
#pragma omp parallel for schedule(static)
    for (int x = 0; x < n; ++x) {
      for (int k = 0; k <= k_hi; ++k) {
        const double* kt = table[k].data();
        double s = 0.0;
        for (int o = 0; o < n; ++o) {
          int y = x - o;
          if (y < 0) y += n;
          s += f[y] * space.weights[y] * kt[o];
        }
        u.at(x, k) = s / denom[k];
      }
    }
  } else {
#pragma omp parallel for schedule(static)
    for (int x = 0; x < n; ++x) {
      for (int k = 0; k <= k_hi; ++k) {
        double t = HomogeneousSpace::scale_of_level(k);
        double num = 0.0, den = 0.0;
        for (int y = 0; y < n; ++y) {
          double kv = std::pow(kernel_value(space, family, x, t, y), expo) * space.weights[y];
          num += kv * f[y];
          den += kv;
        }
        u.at(x, k) = num / den;
      }
    }
  }
  return u;
}

}  // namespace tanmax

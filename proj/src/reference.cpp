#include "tanmax/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace tanmax::reference {

namespace {

double naive_ball_mean(const HomogeneousSpace& space, const BoundaryFunction& f, int y,
                       double t) {
  double num = 0.0, den = 0.0;
  for (int z = 0; z < space.size(); ++z) {
    if (space.distance(y, z) < t) {
      num += std::fabs(f[z]) * space.weights[z];
      den += space.weights[z];
    }
  }
  return num / den;
}

}  // namespace

InteriorFunction ball_mean_field(const HomogeneousSpace& space, const BoundaryFunction& f) {
  InteriorFunction u(space.size(), space.min_level(), space.max_level());
  for (int y = 0; y < space.size(); ++y)
    for (int k = u.k_lo; k <= u.k_hi; ++k)
      u.at(y, k) = naive_ball_mean(space, f, y, HomogeneousSpace::scale_of_level(k));
  return u;
}

BoundaryFunction hl_maximal(const HomogeneousSpace& space, const BoundaryFunction& f) {
  const int n = space.size();
  BoundaryFunction out(n, 0.0);
  for (int x = 0; x < n; ++x) {
    double best = 0.0;
    for (int y = 0; y < n; ++y) {
      for (int k = space.min_level(); k <= space.max_level(); ++k) {
        double t = HomogeneousSpace::scale_of_level(k);
        if (space.distance(x, y) < t) best = std::max(best, naive_ball_mean(space, f, y, t));
      }
    }
    out[x] = best;
  }
  return out;
}

BoundaryFunction truncated_hl_maximal(const HomogeneousSpace& space, const BoundaryFunction& f,
                                      double eps) {
  const int n = space.size();
  const bool full = eps >= space.diameter * (1.0 - 1e-12);
  BoundaryFunction out(n, 0.0);
  for (int x = 0; x < n; ++x) {
    double best = 0.0;
    for (int y = 0; y < n; ++y) {
      for (int k = space.min_level(); k <= space.max_level(); ++k) {
        double t = HomogeneousSpace::scale_of_level(k);
        if (!full && t > eps) continue;
        if (space.distance(x, y) < t) best = std::max(best, naive_ball_mean(space, f, y, t));
      }
    }
    out[x] = best;
  }
  return out;
}

BoundaryFunction tangential_maximal(const HomogeneousSpace& space, const InteriorFunction& u,
                                    const ApproachSpec& spec) {
  const int n = space.size();
  BoundaryFunction out(n, 0.0);
  for (int x = 0; x < n; ++x) {
    double best = 0.0;
    for (int y = 0; y < n; ++y) {
      for (int k = u.k_lo; k <= u.k_hi; ++k) {
        double t = HomogeneousSpace::scale_of_level(k);
        double width = spec.aperture * t * std::pow(std::log2(2.0 / t), spec.delta);
        if (space.distance(x, y) < width) best = std::max(best, std::fabs(u.at(y, k)));
      }
    }
    out[x] = best;
  }
  return out;
}

BoundaryFunction parametric_maximal(const HomogeneousSpace& space, const InteriorFunction& u,
                                    const ApproachSpec& spec) {
  if (!spec.A || *spec.A < 1.0) throw std::invalid_argument("parametric_maximal: bad A");
  const int n = space.size();
  const double A = *spec.A;
  BoundaryFunction out(n, 0.0);
  for (int x = 0; x < n; ++x) {
    double best = 0.0;
    for (int y = 0; y < n; ++y) {
      for (int k = std::max(0, u.k_lo); k <= u.k_hi; ++k) {
        double t = HomogeneousSpace::scale_of_level(k);
        double logf = std::log2(2.0 / t);
        if (!(A < std::pow(logf, spec.delta))) continue;
        double s = A * t;
        if (s > 1.0) continue;
        int src = k - static_cast<int>(std::llround(std::log2(A)));
        if (src < u.k_lo || src > u.k_hi) continue;
        double width = t * std::pow(logf, spec.delta);
        if (space.distance(x, y) < width) best = std::max(best, u.at(y, src) / logf);
      }
    }
    out[x] = best;
  }
  return out;
}

BoundaryFunction modified_nontangential(const HomogeneousSpace& space, const InteriorFunction& u,
                                        double A, double delta) {
  const int n = space.size();
  const double a_d = space.quasi_constant;
  const double tau_limit = std::pow(2.0, 1.0 - std::pow(A, 1.0 / delta));
  BoundaryFunction out(n, 0.0);
  for (int x = 0; x < n; ++x) {
    double best = 0.0;
    for (int y = 0; y < n; ++y) {
      for (int k = std::max(0, u.k_lo); k <= u.k_hi; ++k) {
        double tau = HomogeneousSpace::scale_of_level(k);
        if (!(tau < tau_limit)) continue;
        int src = k - static_cast<int>(std::llround(std::log2(A)));
        if (src < u.k_lo || src > u.k_hi) continue;
        double width = A * tau / (4.0 * a_d * a_d);
        if (space.distance(x, y) < width) best = std::max(best, u.at(y, src));
      }
    }
    out[x] = best;
  }
  return out;
}

InteriorFunction p0_field(const HomogeneousSpace& space, const BoundaryFunction& f, int k_hi) {
  const int n = space.size();
  InteriorFunction u(n, 0, k_hi);
  for (int x = 0; x < n; ++x) {
    for (int k = 0; k <= k_hi; ++k) {
      double t = HomogeneousSpace::scale_of_level(k);
      double s = 0.0;
      for (int y = 0; y < n; ++y)
        s += f[y] * space.weights[y] / std::pow(space.distance(x, y) + t, space.gamma);
      u.at(x, k) = s / std::log2(2.0 / t);
    }
  }
  return u;
}

}  // namespace tanmax::reference

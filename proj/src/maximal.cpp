#include "tanmax/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tanmax {

namespace {

// Per-center bucket sweep: one distance pass fills per-level buckets,
// suffix sums turn them into sums over the nested balls B(y, 2^{-k}).
void bucketed_ball_sums(const HomogeneousSpace& space, const double* g, InteriorFunction& out) {
  const int n = space.size();
  const int k_lo = out.k_lo, k_hi = out.k_hi;
  const int levels = out.levels();

#pragma omp parallel
  {
    std::vector<double> bucket(levels);
#pragma omp for schedule(static)
    for (int y = 0; y < n; ++y) {
      std::fill(bucket.begin(), bucket.end(), 0.0);
      for (int z = 0; z < n; ++z) {
        int k = finest_level_containing(space.distance(y, z), k_hi);
        if (k < k_lo) continue;
        bucket[k - k_lo] += g[z];
      }
      double run = 0.0;
      for (int k = k_hi; k >= k_lo; --k) {
        run += bucket[k - k_lo];
        out.at(y, k) = run;
      }
    }
  }
}

// sup over balls B(y, t_k) containing x with k in [k_from, k_hi] of the
// per-ball values in `field`.
BoundaryFunction ball_sup(const HomogeneousSpace& space, const InteriorFunction& field,
                          int k_from) {
  const int n = space.size();
  const int k_lo = field.k_lo, k_hi = field.k_hi;
  k_from = std::max(k_from, k_lo);

  // prefix max over levels from k_from upward (coarse to fine)
  InteriorFunction pm(n, k_lo, k_hi);
  for (int y = 0; y < n; ++y) {
    double run = -1.0;
    for (int k = k_from; k <= k_hi; ++k) {
      run = std::max(run, field.at(y, k));
      pm.at(y, k) = run;
    }
  }

  BoundaryFunction out(n, 0.0);
#pragma omp parallel for schedule(static)
  for (int x = 0; x < n; ++x) {
    double best = 0.0;
    for (int y = 0; y < n; ++y) {
      int k = finest_level_containing(space.distance(x, y), k_hi);
      if (k < k_from) continue;
      best = std::max(best, pm.at(y, k));
    }
    out[x] = best;
  }
  return out;
}

int snapped_level_shift(double A) {
  return static_cast<int>(std::llround(std::log2(A)));
}

}  // namespace

double ball_mean(const HomogeneousSpace& space, const BoundaryFunction& f, int y, double t) {
  if (t < space.resolution_floor)
    throw std::invalid_argument("ball_mean: radius below the resolution floor");
  double num = 0.0, den = 0.0;
  const int n = space.size();
  for (int z = 0; z < n; ++z) {
    if (space.distance(y, z) < t) {
      num += std::fabs(f[z]) * space.weights[z];
      den += space.weights[z];
    }
  }
  return num / den;
}

InteriorFunction ball_mean_field(const HomogeneousSpace& space, const BoundaryFunction& f) {
  const int n = space.size();
  InteriorFunction num(n, space.min_level(), space.max_level());
  InteriorFunction den(n, space.min_level(), space.max_level());

  std::vector<double> g(n);
  for (int z = 0; z < n; ++z) g[z] = std::fabs(f[z]) * space.weights[z];
  bucketed_ball_sums(space, g.data(), num);
  bucketed_ball_sums(space, space.weights.data(), den);

  for (std::size_t i = 0; i < num.values.size(); ++i) num.values[i] /= den.values[i];
  return num;
}

InteriorFunction ball_mass_field(const HomogeneousSpace& space) {
  const int n = space.size();
  InteriorFunction mass(n, space.min_level(), space.max_level());
  bucketed_ball_sums(space, space.weights.data(), mass);
  return mass;
}

BoundaryFunction hl_maximal(const HomogeneousSpace& space, const BoundaryFunction& f) {
  InteriorFunction means = ball_mean_field(space, f);
  return ball_sup(space, means, means.k_lo);
}

BoundaryFunction truncated_hl_maximal(const HomogeneousSpace& space, const BoundaryFunction& f,
                                      double eps) {
  if (eps < space.resolution_floor)
    throw std::invalid_argument("truncated_hl_maximal: eps below the resolution floor");
  InteriorFunction means = ball_mean_field(space, f);
  // radii t_k <= eps, i.e. k >= ceil(-log2 eps), inclusive; when eps
  // reaches the diameter the covering level is admitted too, so that
  // eps = diam reproduces hl_maximal
  int k_from;
  if (eps >= space.diameter * (1.0 - 1e-12))
    k_from = space.min_level();
  else
    k_from = static_cast<int>(std::ceil(-std::log2(eps) - 1e-12));
  return ball_sup(space, means, k_from);
}

BoundaryFunction tangential_maximal(const HomogeneousSpace& space, const InteriorFunction& u,
                                    const ApproachSpec& spec) {
  if (spec.A) throw std::invalid_argument("tangential_maximal: use parametric_maximal with A");
  const int n = space.size();
  const int k_lo = u.k_lo, k_hi = u.k_hi;
  const int levels = u.levels();

  std::vector<double> width(levels);
  for (int k = k_lo; k <= k_hi; ++k) width[k - k_lo] = spec.aperture * spec.phi_level(k);

  BoundaryFunction out(n, 0.0);
#pragma omp parallel for schedule(static)
  for (int x = 0; x < n; ++x) {
    double best = 0.0;
    for (int y = 0; y < n; ++y) {
      double d = space.distance(x, y);
      const double* row = u.row(y);
      for (int q = 0; q < levels; ++q)
        if (d < width[q]) best = std::max(best, std::fabs(row[q]));
    }
    out[x] = best;
  }
  return out;
}

BoundaryFunction parametric_maximal(const HomogeneousSpace& space, const InteriorFunction& u,
                                    const ApproachSpec& spec) {
  if (!spec.A) throw std::invalid_argument("parametric_maximal: spec.A required");
  if (*spec.A < 1.0) throw std::invalid_argument("parametric_maximal: A must be >= 1");
  const int n = space.size();
  const int shift = snapped_level_shift(*spec.A);

  // admissible levels: A < (k+1)^delta, A*t <= 1, u(., A t) on the grid
  struct Adm { int src; double width; double damp; };
  std::vector<Adm> adm;
  for (int k = std::max(0, u.k_lo); k <= u.k_hi; ++k) {
    if (!spec.level_admissible(k)) continue;
    int src = k - shift;
    if (src < 0 || src < u.k_lo || src > u.k_hi) continue;  // A*t above scale 1
    adm.push_back({src, spec.phi_level(k), 1.0 / (k + 1)});
  }

  BoundaryFunction out(n, 0.0);
  if (adm.empty()) return out;

#pragma omp parallel for schedule(static)
  for (int x = 0; x < n; ++x) {
    double best = 0.0;
    for (int y = 0; y < n; ++y) {
      double d = space.distance(x, y);
      for (const Adm& a : adm)
        if (d < a.width) best = std::max(best, a.damp * u.at(y, a.src));
    }
    out[x] = best;
  }
  return out;
}

BoundaryFunction modified_nontangential(const HomogeneousSpace& space, const InteriorFunction& u,
                                        double A, double delta) {
  if (A < 1.0) throw std::invalid_argument("modified_nontangential: A must be >= 1");
  const int n = space.size();
  const int shift = snapped_level_shift(A);
  const double a_d = space.quasi_constant;
  const double aperture = 1.0 / (4.0 * a_d * a_d);

  struct Adm { int src; double width; };
  std::vector<Adm> adm;
  for (int k = std::max(0, u.k_lo); k <= u.k_hi; ++k) {
    // tau < tau_A  <=>  A < (k+1)^delta
    if (!(A < std::pow(static_cast<double>(k + 1), delta))) continue;
    int src = k - shift;  // level of A * tau
    if (src < u.k_lo || src > u.k_hi) continue;
    adm.push_back({src, aperture * HomogeneousSpace::scale_of_level(src)});
  }

  BoundaryFunction out(n, 0.0);
  if (adm.empty()) return out;

#pragma omp parallel for schedule(static)
  for (int x = 0; x < n; ++x) {
    double best = 0.0;
    for (int y = 0; y < n; ++y) {
      double d = space.distance(x, y);
      for (const Adm& a : adm)
        if (d < a.width) best = std::max(best, u.at(y, a.src));
    }
    out[x] = best;
  }
  return out;
}

int domination_nu_max(const HomogeneousSpace& space, double delta) {
  double bound = std::pow(std::log2(2.0 / space.resolution_floor), delta);
  int nu = 0;
  while (std::ldexp(1.0, nu) <= bound) ++nu;
  return nu;
}

DominationReport pointwise_domination(const HomogeneousSpace& space, const BoundaryFunction& f,
                                      double delta, int nu_max) {
  const int n = space.size();
  DominationReport rep;
  rep.nu_max = nu_max;

  InteriorFunction pf = p0_field(space, f, space.max_level());
  ApproachSpec tang{1.0, delta, std::nullopt};
  rep.lhs = tangential_maximal(space, pf, tang);

  rep.rhs = hl_maximal(space, f);
  InteriorFunction means = ball_mean_field(space, f);
  for (int nu = 0; nu <= nu_max; ++nu) {
    ApproachSpec par{1.0, delta, std::ldexp(1.0, nu)};
    BoundaryFunction term = parametric_maximal(space, means, par);
    for (int x = 0; x < n; ++x) rep.rhs[x] += term[x];
  }

  rep.ratio.assign(n, 0.0);
  for (int x = 0; x < n; ++x) {
    if (rep.rhs[x] > 0.0)
      rep.ratio[x] = rep.lhs[x] / rep.rhs[x];
    else if (rep.lhs[x] > 0.0)
      rep.ratio[x] = std::numeric_limits<double>::infinity();
    rep.max_ratio = std::max(rep.max_ratio, rep.ratio[x]);
  }
  return rep;
}

CoverResult vitali_select(const HomogeneousSpace& space, const std::vector<Ball>& balls,
                          const std::vector<int>& target) {
  const int n = space.size();

  // membership as sorted index sets; disjointness and coverage are exact
  std::vector<std::vector<int>> members(balls.size());
  std::vector<char> covered(n, 0);
  for (std::size_t b = 0; b < balls.size(); ++b) {
    members[b] = space.ball_points(balls[b].center, balls[b].radius);
    for (int p : members[b]) covered[p] = 1;
  }
  std::vector<int> uncovered;
  for (int p : target)
    if (!covered[p]) uncovered.push_back(p);
  if (!uncovered.empty()) {
    std::ostringstream msg;
    msg << "vitali_select: input family does not cover the target; uncovered points:";
    for (std::size_t i = 0; i < uncovered.size() && i < 16; ++i) msg << ' ' << uncovered[i];
    if (uncovered.size() > 16) msg << " ...";
    throw std::runtime_error(msg.str());
  }

  std::vector<std::size_t> order(balls.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return balls[a].radius > balls[b].radius;
  });

  CoverResult result;
  const double a_d = space.quasi_constant;
  result.dilation = a_d * (2.0 * a_d + 1.0);

  std::vector<char> taken(n, 0);
  for (std::size_t idx : order) {
    bool disjoint = true;
    for (int p : members[idx])
      if (taken[p]) { disjoint = false; break; }
    if (!disjoint) continue;
    for (int p : members[idx]) taken[p] = 1;
    result.selected.push_back(balls[idx]);
  }
  return result;
}

}  // namespace tanmax

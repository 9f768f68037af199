#pragma once

#include <vector>

#include "tanmax/interior.hpp"
#include "tanmax/kernels.hpp"
#include "tanmax/space.hpp"

namespace tanmax {

/// Greedy covering output: pairwise disjoint selected balls whose
/// dilation-times-radius enlargements cover the target set.
struct CoverResult {
  std::vector<Ball> selected;
  double dilation = 1.0;
};

/// Weighted average of |f| over B(y, t). Summation runs in index order
/// over the ball members.
double ball_mean(const HomogeneousSpace& space, const BoundaryFunction& f, int y, double t);

/// Ball means u(y, 2^{-k}) for every point and every dyadic level in
/// [min_level, max_level]. Production path: one distance sweep per point
/// with per-level buckets, OpenMP-parallel over centers.
InteriorFunction ball_mean_field(const HomogeneousSpace& space, const BoundaryFunction& f);

/// Ball masses mu(B(y, 2^{-k})) on the same grid.
InteriorFunction ball_mass_field(const HomogeneousSpace& space);

/// Hardy-Littlewood maximal function: sup of the mean of |f| over all
/// grid balls containing x, radii running over the dyadic grid up to the
/// diameter scale.
BoundaryFunction hl_maximal(const HomogeneousSpace& space, const BoundaryFunction& f);

/// Same sup restricted to radii t <= eps.
BoundaryFunction truncated_hl_maximal(const HomogeneousSpace& space,
                                      const BoundaryFunction& f, double eps);

/// Tangential maximal operator
///   L_delta u(x) = sup { |u(y, t_k)| : d(x,y) < a * phi(t_k) }
/// over the levels carried by u. delta = 0 gives the nontangential
/// maximal function N.
BoundaryFunction tangential_maximal(const HomogeneousSpace& space,
                                    const InteriorFunction& u, const ApproachSpec& spec);

/// Parametric family
///   L_{A,delta} u(x) = sup { (log2(2/t))^{-1} u(y, A t) :
///                            d(x,y) < phi(t), A < (log2(2/t))^delta, A t <= 1 }.
/// Returns identically 0 when the domain is empty. The scale A*t is
/// evaluated at the nearest dyadic level (exact when A is a power of 2).
BoundaryFunction parametric_maximal(const HomogeneousSpace& space,
                                    const InteriorFunction& u, const ApproachSpec& spec);

/// Modified nontangential maximal function
///   N_A u(x) = sup { u(y, A tau) : d(x,y) < A tau / (4 a_d^2), tau < tau_A }.
BoundaryFunction modified_nontangential(const HomogeneousSpace& space,
                                        const InteriorFunction& u, double A, double delta);

/// Pointwise comparison of L_delta(p0 f) against
///   Mf + sum_{nu=0}^{nu_max} L_{2^nu, delta}(ball means of f).
struct DominationReport {
  BoundaryFunction lhs;         ///< L_delta(p0 f)
  BoundaryFunction rhs;         ///< Mf + sum of parametric terms
  std::vector<double> ratio;    ///< lhs/rhs per point (0 where both vanish)
  double max_ratio = 0.0;
  int nu_max = 0;
};

DominationReport pointwise_domination(const HomogeneousSpace& space,
                                      const BoundaryFunction& f, double delta,
                                      int nu_max);

/// Smallest nu with 2^nu > (log2(2/h))^delta; parametric terms beyond it
/// have empty domains.
int domination_nu_max(const HomogeneousSpace& space, double delta);

/// Greedy ball selection in decreasing radius order (ties by input
/// index): keep a ball iff its member set is disjoint from all kept
/// balls. The kept balls dilated by rho_d = a_d (2 a_d + 1) cover the
/// target. Throws if the input family does not cover the target.
CoverResult vitali_select(const HomogeneousSpace& space, const std::vector<Ball>& balls,
                          const std::vector<int>& target);

}  // namespace tanmax

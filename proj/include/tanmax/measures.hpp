#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "tanmax/kernels.hpp"
#include "tanmax/space.hpp"

namespace tanmax {

/// Monotone subadditive set function on finite point sets.
struct OuterMeasure {
  enum class Kind { MeasureFromWeights, LogContent };
  Kind kind = Kind::MeasureFromWeights;
  std::function<double(const std::vector<int>&)> evaluate;
};

/// The underlying measure mu as an outer measure (sum of weights).
OuterMeasure measure_from_weights(const HomogeneousSpace& space);

/// Outer measure of Frostman type: nu(E) is an upper approximation of
///   inf over covers of E by grid balls of sum t_i^gamma (log2(2/t_i))^beta,
/// computed by a bounded-depth greedy cover search (a sorted sweep on the
/// circle). Every grid ball covers itself, so nu(B(x,t)) never exceeds
/// t^gamma (log2(2/t))^beta: the Frostman bound holds with c = 1.
class LogContent {
public:
  LogContent(const HomogeneousSpace& space, double beta);

  double beta() const { return beta_; }
  double level_cost(int k) const;  ///< t_k^gamma (k+1)^beta

  double operator()(const std::vector<int>& set) const;

  OuterMeasure as_outer_measure() const;

private:
  double greedy_cover_cost(const std::vector<int>& set) const;
  double circle_cover_cost(const std::vector<int>& set) const;
  double single_ball_cost(const std::vector<int>& set) const;

  const HomogeneousSpace* space_;
  double beta_ = 0.0;
  int k_max_ = 0;
  // circle: covered index half-width per level; general: cached members
  std::vector<int> halfwidth_;
  std::vector<std::vector<std::vector<int>>> members_;  // [level][center]
};

std::shared_ptr<LogContent> build_log_content(const HomogeneousSpace& space, double beta);

/// Weighted L^p norm (sum |f|^p w)^{1/p}.
double lp_norm(const HomogeneousSpace& space, const BoundaryFunction& f, double p);

/// Same restricted to a subset of points.
double lp_norm_on(const HomogeneousSpace& space, const BoundaryFunction& f, double p,
                  const std::vector<int>& subset);

/// nu { |f| > lambda }.
double distribution_function(const HomogeneousSpace& space, const BoundaryFunction& f,
                             double lambda, const OuterMeasure& nu);

/// ( p * integral_0^inf lambda^{p-1} nu{|f| > lambda} d lambda )^{1/p}
/// by midpoint quadrature on a geometric lambda grid spanning
/// [min positive |f| / 4, 4 max |f|].
double layer_cake_norm(const HomogeneousSpace& space, const BoundaryFunction& f, double p,
                       const OuterMeasure& nu, int grid_size = 256);

/// Smallest c in nu(B(x,t)) <= c t^gamma (log2(2/t))^beta over all grid
/// balls: returns the max of the measured ratios.
double frostman_verify(const HomogeneousSpace& space, const OuterMeasure& nu,
                       double gamma, double beta);

}  // namespace tanmax

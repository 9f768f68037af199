#include "tanmax/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tanmax {

OuterMeasure measure_from_weights(const HomogeneousSpace& space) {
  OuterMeasure nu;
  nu.kind = OuterMeasure::Kind::MeasureFromWeights;
  const std::vector<double>* w = &space.weights;
  nu.evaluate = [w](const std::vector<int>& set) {
    double s = 0.0;
    for (int p : set) s += (*w)[p];
    return s;
  };
  return nu;
}

LogContent::LogContent(const HomogeneousSpace& space, double beta)
    : space_(&space), beta_(beta), k_max_(space.max_level()) {
  if (beta < 0.0) throw std::invalid_argument("LogContent: beta must be >= 0");
  const int n = space.size();
  if (space.has_offset_table()) {
    // covered index half-width per level
    halfwidth_.resize(k_max_ + 1);
    for (int k = 0; k <= k_max_; ++k) {
      double t = HomogeneousSpace::scale_of_level(k);
      int o = 0;
      while (o + 1 <= n / 2 && space.offset_distance(o + 1) < t) ++o;
      halfwidth_[k] = o;
    }
  } else {
    members_.resize(k_max_ + 1);
    for (int k = 0; k <= k_max_; ++k) {
      members_[k].resize(n);
      for (int c = 0; c < n; ++c)
        members_[k][c] = space.ball_points(c, HomogeneousSpace::scale_of_level(k));
    }
  }
}

double LogContent::level_cost(int k) const {
  return std::pow(HomogeneousSpace::scale_of_level(k), space_->gamma) *
         std::pow(static_cast<double>(k + 1), beta_);
}

double LogContent::operator()(const std::vector<int>& set) const {
  if (set.empty()) return 0.0;
  std::vector<int> sorted(set);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (space_->has_offset_table()) return circle_cover_cost(sorted);
  double best = greedy_cover_cost(sorted);
  best = std::min(best, single_ball_cost(sorted));
  // per-point cover with the finest balls
  best = std::min(best, static_cast<double>(sorted.size()) * level_cost(k_max_));
  return best;
}

// Minimum over levels of the anchored circular sweep cover at that level.
// Each level cover is within one ball of optimal for equal-width arcs, so
// the minimum is a tight upper estimate of the restricted cover infimum.
double LogContent::circle_cover_cost(const std::vector<int>& set) const {
  const int n = space_->size();
  const int m = static_cast<int>(set.size());
  double best = std::numeric_limits<double>::infinity();
  // anchor the sweep just after the largest circular gap, so a wrapped
  // arc is still covered by a single window
  int anchor = 0;
  {
    long best_gap = set[0] + n - set[m - 1];
    for (int i = 1; i < m; ++i) {
      long gap = set[i] - set[i - 1];
      if (gap > best_gap) {
        best_gap = gap;
        anchor = i;
      }
    }
  }
  for (int k = 0; k <= k_max_; ++k) {
    const int width = 2 * halfwidth_[k] + 1;
    double cost;
    if (width >= n) {
      cost = level_cost(k);
    } else {
      // unrolled greedy: arcs anchored at the first uncovered target
      int count = 0;
      long reach = -1;
      const long base = set[anchor];
      for (int i = 0; i < m; ++i) {
        long pos = set[(anchor + i) % m];
        if (pos < base) pos += n;
        if (pos > reach) {
          ++count;
          reach = pos + width - 1;
        }
      }
      cost = count * level_cost(k);
    }
    best = std::min(best, cost);
  }
  return best;
}

double LogContent::greedy_cover_cost(const std::vector<int>& set) const {
  const int n = space_->size();
  std::vector<char> needed(n, 0);
  int remaining = 0;
  for (int p : set) {
    needed[p] = 1;
    ++remaining;
  }
  double total = 0.0;
  const int depth_bound = 128;
  for (int it = 0; it < depth_bound && remaining > 0; ++it) {
    double best_score = -1.0;
    int best_k = -1, best_c = -1;
    for (int k = 0; k <= k_max_; ++k) {
      double cost = level_cost(k);
      for (int c = 0; c < n; ++c) {
        int gain = 0;
        for (int p : members_[k][c])
          if (needed[p]) ++gain;
        if (gain == 0) continue;
        double score = gain / cost;
        if (score > best_score) {
          best_score = score;
          best_k = k;
          best_c = c;
        }
      }
    }
    if (best_k < 0) break;
    total += level_cost(best_k);
    for (int p : members_[best_k][best_c])
      if (needed[p]) { needed[p] = 0; --remaining; }
  }
  if (remaining > 0) {
    // depth bound hit: finish with per-point balls
    total += remaining * level_cost(k_max_);
  }
  return total;
}

double LogContent::single_ball_cost(const std::vector<int>& set) const {
  const int n = space_->size();
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= k_max_; ++k) {
    double cost = level_cost(k);
    if (cost >= best) continue;
    for (int c = 0; c < n; ++c) {
      const std::vector<int>& mem = members_[k][c];
      if (std::includes(mem.begin(), mem.end(), set.begin(), set.end())) {
        best = cost;
        break;
      }
    }
  }
  return best;
}

OuterMeasure LogContent::as_outer_measure() const {
  OuterMeasure nu;
  nu.kind = OuterMeasure::Kind::LogContent;
  const LogContent* self = this;
  nu.evaluate = [self](const std::vector<int>& set) { return (*self)(set); };
  return nu;
}

std::shared_ptr<LogContent> build_log_content(const HomogeneousSpace& space, double beta) {
  return std::make_shared<LogContent>(space, beta);
}

double lp_norm(const HomogeneousSpace& space, const BoundaryFunction& f, double p) {
  if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
  double s = 0.0;
  for (int i = 0; i < space.size(); ++i)
    s += std::pow(std::fabs(f[i]), p) * space.weights[i];
  return std::pow(s, 1.0 / p);
}

double lp_norm_on(const HomogeneousSpace& space, const BoundaryFunction& f, double p,
                  const std::vector<int>& subset) {
  if (p < 1.0) throw std::invalid_argument("lp_norm_on: p must be >= 1");
  double s = 0.0;
  for (int i : subset) s += std::pow(std::fabs(f[i]), p) * space.weights[i];
  return std::pow(s, 1.0 / p);
}

double distribution_function(const HomogeneousSpace& space, const BoundaryFunction& f,
                             double lambda, const OuterMeasure& nu) {
  std::vector<int> set;
  for (int i = 0; i < space.size(); ++i)
    if (std::fabs(f[i]) > lambda) set.push_back(i);
  if (set.empty()) return 0.0;
  return nu.evaluate(set);
}

double layer_cake_norm(const HomogeneousSpace& space, const BoundaryFunction& f, double p,
                       const OuterMeasure& nu, int grid_size) {
  if (p < 1.0) throw std::invalid_argument("layer_cake_norm: p must be >= 1");
  if (grid_size < 64) throw std::invalid_argument("layer_cake_norm: grid size must be >= 64");

  double fmax = 0.0;
  double fmin_pos = std::numeric_limits<double>::infinity();
  for (double v : f) {
    double a = std::fabs(v);
    fmax = std::max(fmax, a);
    if (a > 0.0) fmin_pos = std::min(fmin_pos, a);
  }
  if (fmax == 0.0) return 0.0;

  const double lo = fmin_pos / 4.0, hi = 4.0 * fmax;
  const double ratio = hi / lo;
  std::vector<double> grid(grid_size);
  for (int i = 0; i < grid_size; ++i)
    grid[i] = lo * std::pow(ratio, static_cast<double>(i) / (grid_size - 1));

  // head: nu{|f| > lambda} is constant on (0, lo]
  double integral = std::pow(lo, p) * distribution_function(space, f, lo, nu);
  for (int i = 0; i + 1 < grid_size; ++i) {
    double mid = std::sqrt(grid[i] * grid[i + 1]);
    double d = distribution_function(space, f, mid, nu);
    if (d > 0.0) integral += d * (std::pow(grid[i + 1], p) - std::pow(grid[i], p));
  }
  return std::pow(integral, 1.0 / p);
}

double frostman_verify(const HomogeneousSpace& space, const OuterMeasure& nu, double gamma,
                       double beta) {
  double worst = 0.0;
  for (int k = 0; k <= space.max_level(); ++k) {
    double t = HomogeneousSpace::scale_of_level(k);
    double bound = std::pow(t, gamma) * std::pow(static_cast<double>(k + 1), beta);
    for (int c = 0; c < space.size(); ++c) {
      std::vector<int> ball = space.ball_points(c, t);
      worst = std::max(worst, nu.evaluate(ball) / bound);
    }
  }
  return worst;
}

}  // namespace tanmax

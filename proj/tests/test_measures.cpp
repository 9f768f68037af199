#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "tanmax/functions.hpp"
#include "tanmax/measures.hpp"
#include "tanmax/rng.hpp"
#include "tanmax/space.hpp"

using namespace tanmax;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("lp norms of simple functions") {
  HomogeneousSpace c = build_circle(512);
  BoundaryFunction one(c.size(), 1.0);
  CHECK(lp_norm(c, one, 2.0) == doctest::Approx(std::sqrt(2 * kPi)).epsilon(1e-12));
  CHECK(lp_norm(c, one, 1.5) == doctest::Approx(std::pow(2 * kPi, 1 / 1.5)).epsilon(1e-12));

  HomogeneousSpace s = build_real_sphere(3, 256);
  BoundaryFunction sone(s.size(), 1.0);
  CHECK(lp_norm(s, sone, 3.0) == doctest::Approx(1.0).epsilon(1e-12));

  BoundaryFunction half(c.size(), 0.0);
  for (int i = 0; i < c.size() / 2; ++i) half[i] = 1.0;
  CHECK(lp_norm(c, half, 2.0) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-12));

  CHECK_THROWS_AS(lp_norm(c, one, 0.5), std::invalid_argument);
}

TEST_CASE("norm homogeneity, both implementations") {
  HomogeneousSpace c = build_circle(256);
  Rng rng(41);
  BoundaryFunction f(c.size());
  for (double& v : f) v = rng.uniform(-2.0, 5.0);
  BoundaryFunction cf(c.size());
  for (int i = 0; i < c.size(); ++i) cf[i] = -2.5 * f[i];

  OuterMeasure mu = measure_from_weights(c);
  CHECK(lp_norm(c, cf, 2.0) == doctest::Approx(2.5 * lp_norm(c, f, 2.0)).epsilon(1e-13));
  CHECK(layer_cake_norm(c, cf, 2.0, mu) ==
        doctest::Approx(2.5 * layer_cake_norm(c, f, 2.0, mu)).epsilon(1e-12));
}

TEST_CASE("distribution function") {
  HomogeneousSpace c = build_circle(128);
  OuterMeasure mu = measure_from_weights(c);
  BoundaryFunction one(c.size(), 1.0);
  CHECK(distribution_function(c, one, 2.0, mu) == 0.0);
  CHECK(distribution_function(c, one, 0.5, mu) == doctest::Approx(c.total_mass).epsilon(1e-12));

  // two-step function: hand-computed masses
  BoundaryFunction step(c.size(), 0.0);
  for (int i = 0; i < 32; ++i) step[i] = 3.0;
  for (int i = 32; i < 48; ++i) step[i] = 1.0;
  double w = c.weights[0];
  CHECK(distribution_function(c, step, 2.0, mu) == doctest::Approx(32 * w).epsilon(1e-12));
  CHECK(distribution_function(c, step, 0.5, mu) == doctest::Approx(48 * w).epsilon(1e-12));
}

TEST_CASE("layer cake norm agrees with the weighted norm under mu") {
  HomogeneousSpace c = build_circle(256);
  OuterMeasure mu = measure_from_weights(c);
  Rng rng(43);
  for (double p : {1.0, 2.0, 3.0}) {
    BoundaryFunction f(c.size());
    for (double& v : f) v = rng.uniform(-1.0, 3.0);
    double direct = lp_norm(c, f, p);
    double cake = layer_cake_norm(c, f, p, mu, 256);
    CHECK(std::fabs(cake - direct) / direct <= 0.01);
  }

  // same agreement on a sphere grid
  HomogeneousSpace sp = build_real_sphere(3, 256);
  OuterMeasure smu = measure_from_weights(sp);
  BoundaryFunction g(sp.size());
  for (int i = 0; i < sp.size(); ++i) g[i] = 0.5 + sp.point(i)[2] * sp.point(i)[2];
  CHECK(std::fabs(layer_cake_norm(sp, g, 2.0, smu) - lp_norm(sp, g, 2.0)) /
            lp_norm(sp, g, 2.0) <=
        0.01);

  BoundaryFunction zero(c.size(), 0.0);
  CHECK(layer_cake_norm(c, zero, 2.0, mu) == 0.0);
  BoundaryFunction cst(c.size(), 1.75);
  CHECK(std::fabs(layer_cake_norm(c, cst, 2.0, mu) - 1.75 * std::sqrt(c.total_mass)) /
            (1.75 * std::sqrt(c.total_mass)) <=
        0.01);
  CHECK_THROWS_AS(layer_cake_norm(c, cst, 2.0, mu, 32), std::invalid_argument);
}

TEST_CASE("log content: self-cover bound and simple sets") {
  HomogeneousSpace c = build_circle(256);
  double beta = 1.0;
  auto content = build_log_content(c, beta);
  OuterMeasure nu = content->as_outer_measure();

  // single point: at most the finest-ball cost
  int kmax = c.max_level();
  CHECK(nu.evaluate({17}) <= content->level_cost(kmax) * (1 + 1e-12));

  // a grid ball costs at most its own level cost
  for (int k = 0; k <= kmax; ++k) {
    std::vector<int> ball = c.ball_points(31, HomogeneousSpace::scale_of_level(k));
    CHECK(nu.evaluate(ball) <= content->level_cost(k) * (1 + 1e-12));
  }

  CHECK(nu.evaluate({}) == 0.0);
  CHECK_THROWS_AS(build_log_content(c, -0.5), std::invalid_argument);
}

TEST_CASE("log content is monotone and subadditive on random pairs") {
  for (const HomogeneousSpace& s : {build_circle(256), build_real_sphere(3, 128)}) {
    auto content = build_log_content(s, 1.0);
    OuterMeasure nu = content->as_outer_measure();
    Rng rng(47);
    for (int trial = 0; trial < 100; ++trial) {
      // E2: random union of a few balls; E1: random subset of E2
      std::vector<int> e2;
      std::vector<char> seen(s.size(), 0);
      int balls = 1 + static_cast<int>(rng.below(4));
      for (int b = 0; b < balls; ++b) {
        int cpt = static_cast<int>(rng.below(s.size()));
        double r = s.resolution_floor * std::pow(8.0, rng.uniform());
        for (int p : s.ball_points(cpt, r))
          if (!seen[p]) { seen[p] = 1; e2.push_back(p); }
      }
      if (e2.empty()) continue;
      std::vector<int> e1;
      for (int p : e2)
        if (rng.uniform() < 0.5) e1.push_back(p);

      double n1 = nu.evaluate(e1), n2 = nu.evaluate(e2);
      CHECK(n1 <= n2 * (1 + 1e-12));

      // subadditivity on a random split of e2
      std::vector<int> a, b;
      for (int p : e2) (rng.uniform() < 0.5 ? a : b).push_back(p);
      CHECK(n2 <= (nu.evaluate(a) + nu.evaluate(b)) * (1 + 1e-12));
    }
  }
}

TEST_CASE("layer cake of an indicator under the log content") {
  HomogeneousSpace c = build_circle(256);
  auto content = build_log_content(c, 1.0);
  OuterMeasure nu = content->as_outer_measure();
  BoundaryFunction f = cap_indicator(c, 100, 0.4);
  std::vector<int> support;
  for (int i = 0; i < c.size(); ++i)
    if (f[i] > 0) support.push_back(i);
  double expect = std::sqrt(nu.evaluate(support));
  double got = layer_cake_norm(c, f, 2.0, nu, 256);
  // single layer: exact up to the lambda-grid quantization (~0.5%)
  CHECK(std::fabs(got - expect) / expect <= 0.01);
}

TEST_CASE("frostman_verify") {
  HomogeneousSpace c = build_circle(256);

  auto content = build_log_content(c, 1.0);
  CHECK(frostman_verify(c, content->as_outer_measure(), c.gamma, 1.0) <= 1.0 + 1e-12);

  // nu = mu with beta = 0 reports the upper homogeneity constant
  OuterMeasure mu = measure_from_weights(c);
  double cmu = verify_homogeneity(c, c.resolution_floor, 1.0);
  double fv = frostman_verify(c, mu, c.gamma, 0.0);
  CHECK(fv <= cmu * (1 + 1e-12));
  CHECK(fv >= 1.0);

  // a point mass fails the Frostman condition: the constant reaches
  // 1/t^gamma at the finest grid ball around the atom
  OuterMeasure point;
  point.kind = OuterMeasure::Kind::MeasureFromWeights;
  point.evaluate = [](const std::vector<int>& set) {
    return std::find(set.begin(), set.end(), 42) != set.end() ? 1.0 : 0.0;
  };
  double blowup = 1.0 / HomogeneousSpace::scale_of_level(c.max_level());
  CHECK(frostman_verify(c, point, c.gamma, 0.0) >= blowup * (1 - 1e-12));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tanmax/rng.hpp"
#include "tanmax/space.hpp"

using namespace tanmax;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("circle with four points is the square") {
  HomogeneousSpace s = build_circle(4);
  CHECK(s.distance(0, 1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(s.distance(1, 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  for (double w : s.weights) CHECK(w == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK(s.diameter == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("circle basics") {
  HomogeneousSpace s = build_circle(1024);
  CHECK(s.gamma == 1.0);
  CHECK(s.quasi_constant == 1.0);
  CHECK(s.total_mass == doctest::Approx(2 * kPi).epsilon(1e-12));
  CHECK(s.min_level() == -1);
  CHECK_THROWS_AS(build_circle(3), std::invalid_argument);
}

TEST_CASE("distance is exactly symmetric") {
  for (const HomogeneousSpace& s :
       {build_circle(128), build_real_sphere(3, 128), build_complex_sphere(2, 128)}) {
    Rng rng(7);
    for (int it = 0; it < 2000; ++it) {
      int i = static_cast<int>(rng.below(s.size()));
      int j = static_cast<int>(rng.below(s.size()));
      CHECK(s.distance(i, j) == s.distance(j, i));  // bitwise
    }
  }
}

TEST_CASE("ball monotonicity in the radius") {
  HomogeneousSpace s = build_real_sphere(3, 256);
  Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    int c = static_cast<int>(rng.below(s.size()));
    double t1 = rng.uniform(0.1, 1.0);
    double t2 = t1 + rng.uniform(0.0, 1.0);
    auto b1 = s.ball_points(c, t1);
    auto b2 = s.ball_points(c, t2);
    for (int p : b1) CHECK(std::find(b2.begin(), b2.end(), p) != b2.end());
  }
}

TEST_CASE("real sphere builders") {
  HomogeneousSpace s2 = build_real_sphere(2, 256);
  CHECK(s2.gamma == 1.0);
  CHECK(s2.total_mass == doctest::Approx(1.0).epsilon(1e-12));

  HomogeneousSpace s3 = build_real_sphere(3, 2048);
  CHECK(s3.gamma == 2.0);
  CHECK(s3.total_mass == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(build_real_sphere(1, 256), std::invalid_argument);
  CHECK_THROWS_AS(build_real_sphere(3, 32), std::invalid_argument);
}

TEST_CASE("complex sphere quasimetric") {
  HomogeneousSpace s = build_complex_sphere(2, 512);
  CHECK(s.gamma == 2.0);
  // antipodal pair: d(z, -z) = |1 - <z,-z>| = 2
  // (interleave a crafted pair through the raw formula)
  int i = 0;
  double re = 0, im = 0;
  for (int q = 0; q < 2; ++q) {
    double ar = s.point(i)[2 * q], ai = s.point(i)[2 * q + 1];
    re += ar * -ar + ai * -ai;
    im += ai * -ar - ar * -ai;
  }
  CHECK(std::sqrt((1 - re) * (1 - re) + im * im) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s.distance(3, 3) == 0.0);
  // strictly quasimetric: the sampled estimate exceeds 1
  CHECK(s.quasi_constant > 1.0);
  CHECK(s.quasi_constant < 4.0);
}

TEST_CASE("verify_quasimetric on metric models") {
  CHECK(verify_quasimetric(build_circle(512), 20000) <= 1.0 + 1e-12);
  CHECK(verify_quasimetric(build_real_sphere(3, 512), 20000) <= 1.0 + 1e-12);
}

TEST_CASE("verify_quasimetric rejects a duplicated point") {
  HomogeneousSpace s = build_real_sphere(3, 128);
  // overwrite point 1 with point 0
  for (int q = 0; q < 3; ++q)
    const_cast<double&>(s.point(1)[q]) = s.point(0)[q];
  CHECK_THROWS_WITH_AS(verify_quasimetric(s, 50000),
                       doctest::Contains("zero distance"), std::runtime_error);
}

TEST_CASE("homogeneity constants of the model spaces") {
  HomogeneousSpace c = build_circle(1024);
  double cmu = verify_homogeneity(c, c.resolution_floor, 1.0);
  CHECK(cmu <= 4.0);  // arc mass / t stays within [1, 2.1]
  CHECK(cmu >= 2.0);

  HomogeneousSpace s = build_real_sphere(3, 2048);
  double smu = verify_homogeneity(s, s.resolution_floor, 1.0);
  CHECK(smu <= 8.0);  // cap mass ~ t^2/4

  HomogeneousSpace z = build_complex_sphere(2, 1024);
  double zmu = verify_homogeneity(z, z.resolution_floor, 1.0);
  CHECK(zmu <= 8.0);
}

TEST_CASE("homogeneity constant is stable under refinement m -> 4m") {
  HomogeneousSpace a = build_real_sphere(3, 1024);
  HomogeneousSpace b = build_real_sphere(3, 4096);
  double ca = verify_homogeneity(a, a.resolution_floor, 1.0);
  double cb = verify_homogeneity(b, b.resolution_floor, 1.0);
  CHECK(std::fabs(cb - ca) / ca <= 0.20);
}

TEST_CASE("verify_homogeneity rejects bad ranges") {
  HomogeneousSpace c = build_circle(256);
  CHECK_THROWS_AS(verify_homogeneity(c, 0.5, 0.25), std::invalid_argument);
  CHECK_THROWS_AS(verify_homogeneity(c, c.resolution_floor / 8, 1.0), std::invalid_argument);
}

TEST_CASE("whole-space ball mass") {
  HomogeneousSpace c = build_circle(64);
  CHECK(c.ball_mass(0, 3.0) == doctest::Approx(c.total_mass).epsilon(1e-12));
}

TEST_CASE("descriptor serialization mentions the key fields") {
  HomogeneousSpace c = build_circle(64);
  std::string d = c.descriptor_json();
  CHECK(d.find("\"kind\":\"circle\"") != std::string::npos);
  CHECK(d.find("gamma") != std::string::npos);
  CHECK(d.find("resolution_floor") != std::string::npos);
}

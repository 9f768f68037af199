#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "tanmax/kernels.hpp"
#include "tanmax/reference.hpp"
#include "tanmax/space.hpp"

using namespace tanmax;

namespace {

constexpr double kPi = 3.14159265358979323846;

// fine midpoint quadrature of kernel^{1/2} * f on the continuum circle,
// independent of the HomogeneousSpace path
template <class F>
double fine_sqrt_kernel_quadrature(double r, F f, int nodes = 1 << 17) {
  double s = 0.0, step = 2 * kPi / nodes;
  for (int i = 0; i < nodes; ++i) {
    double th = -kPi + (i + 0.5) * step;
    s += std::sqrt(poisson_disk_kernel(r, th)) * f(th) * step;
  }
  return s;
}

}  // namespace

TEST_CASE("disk kernel values") {
  CHECK(poisson_disk_kernel(0.0, 1.2345) == doctest::Approx(1 / (2 * kPi)).epsilon(1e-14));
  CHECK(poisson_disk_kernel(0.5, 0.0) == doctest::Approx(3 / (2 * kPi)).epsilon(1e-14));
  CHECK_THROWS_AS(poisson_disk_kernel(1.0, 0.1), std::invalid_argument);
}

TEST_CASE("disk kernel integrates to one") {
  HomogeneousSpace s = build_circle(4096);
  for (double r : {0.0, 0.5, 0.9}) {
    double sum = 0.0;
    for (int i = 0; i < s.size(); ++i) {
      double gap = 2 * kPi * i / s.size();
      sum += poisson_disk_kernel(r, gap) * s.weights[i];
    }
    CHECK(std::fabs(sum - 1.0) <= 1e-6);
  }
}

TEST_CASE("ball kernel") {
  std::vector<double> theta = {1.0, 0.0, 0.0};
  std::vector<double> origin = {0.0, 0.0, 0.0};
  CHECK(poisson_ball_kernel(origin, theta) == doctest::Approx(1.0).epsilon(1e-14));

  std::vector<double> half = {0.5, 0.0, 0.0};
  CHECK(poisson_ball_kernel(half, theta) == doctest::Approx(0.75 / std::pow(0.5, 3)).epsilon(1e-14));

  // n = 2 agrees with 2 pi times the disk kernel
  std::vector<double> x2 = {0.3, 0.2};
  std::vector<double> th2 = {std::cos(1.0), std::sin(1.0)};
  double r = std::hypot(x2[0], x2[1]);
  double gap = 1.0 - std::atan2(x2[1], x2[0]);
  CHECK(poisson_ball_kernel(x2, th2) ==
        doctest::Approx(2 * kPi * poisson_disk_kernel(r, gap)).epsilon(1e-12));

  std::vector<double> outside = {1.0, 0.2, 0.0};
  CHECK_THROWS_AS(poisson_ball_kernel(outside, theta), std::invalid_argument);
}

TEST_CASE("invariant kernel") {
  std::vector<double> zeta = {1.0, 0.0, 0.0, 0.0};  // (1, 0) in C^2
  std::vector<double> origin = {0.0, 0.0, 0.0, 0.0};
  CHECK(invariant_poisson_kernel(origin, zeta) == doctest::Approx(1.0).epsilon(1e-14));

  // z = r zeta: ((1+r)/(1-r))^n
  double r = 0.4;
  std::vector<double> z = {r, 0.0, 0.0, 0.0};
  CHECK(invariant_poisson_kernel(z, zeta) ==
        doctest::Approx(std::pow((1 + r) / (1 - r), 2)).epsilon(1e-12));

  // n = 1 reduces to 2 pi times the disk kernel
  std::vector<double> z1 = {0.3, 0.1};
  std::vector<double> zeta1 = {std::cos(0.7), std::sin(0.7)};
  double rr = std::hypot(z1[0], z1[1]);
  double gap = 0.7 - std::atan2(z1[1], z1[0]);
  CHECK(invariant_poisson_kernel(z1, zeta1) ==
        doctest::Approx(2 * kPi * poisson_disk_kernel(rr, gap)).epsilon(1e-12));
}

TEST_CASE("power integral of one: harmonic case and center value") {
  HomogeneousSpace s = build_circle(2048);
  BoundaryFunction one(s.size(), 1.0);
  // l = 1/2: plain Poisson integral of 1
  CHECK(std::fabs(power_integral(s, one, {0, 0.125}, 0.5, KernelFamily::Disk) - 1.0) <= 1e-4);
  // l = 0 at the center (t = 1): kernel is constant 1/(2 pi)
  CHECK(power_integral(s, one, {0, 1.0}, 0.0, KernelFamily::Disk) ==
        doctest::Approx(std::sqrt(2 * kPi)).epsilon(1e-12));
  CHECK_THROWS_AS(power_integral(s, one, {0, 0.5}, -0.5, KernelFamily::Disk),
                  std::invalid_argument);
}

TEST_CASE("P_0 1 tracks sqrt(t) log2(2/t)") {
  // n = 8192 keeps the finest probed scale t = 2^-10 above the grid spacing
  HomogeneousSpace s = build_circle(8192);
  BoundaryFunction one(s.size(), 1.0);
  double lo = 1e9, hi = 0.0;
  for (int k = 2; k <= 10; ++k) {
    double t = std::ldexp(1.0, -k);
    double v = power_integral(s, one, {0, t}, 0.0, KernelFamily::Disk);
    double ratio = v / (std::sqrt(t) * (k + 1));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    // fine-quadrature oracle for the same value
    double oracle = fine_sqrt_kernel_quadrature(1.0 - t, [](double) { return 1.0; });
    CHECK(v == doctest::Approx(oracle).epsilon(0.02));
  }
  CHECK(hi / lo <= 2.0);  // cf. the acceptance bound of 10
  CHECK(lo >= 0.5);
  CHECK(hi <= 2.0);
}

TEST_CASE("P_l 1 for l > 0 tracks t^{1/2 - l} with no log factor") {
  HomogeneousSpace s = build_circle(4096);
  BoundaryFunction one(s.size(), 1.0);
  for (double l : {0.25, 1.0}) {
    double lo = 1e9, hi = 0.0;
    for (int k = 2; k <= 8; ++k) {
      double t = std::ldexp(1.0, -k);
      double ratio =
          power_integral(s, one, {0, t}, l, KernelFamily::Disk) / std::pow(t, 0.5 - l);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    CHECK(hi / lo <= 4.0);
  }
}

TEST_CASE("normalized power integral reproduces constants and is linear") {
  HomogeneousSpace s = build_circle(512);
  BoundaryFunction five(s.size(), 5.0);
  CHECK(normalized_power_integral(s, five, {3, 0.25}, 0.0, KernelFamily::Disk) ==
        doctest::Approx(5.0).epsilon(1e-13));

  BoundaryFunction f(s.size()), g(s.size());
  for (int i = 0; i < s.size(); ++i) {
    f[i] = std::sin(2.0 * kPi * i / s.size());
    g[i] = (i % 7 == 0) ? 2.0 : -0.5;
  }
  InteriorPoint z{17, 0.125};
  double lhs_f = normalized_power_integral(s, f, z, 0.0, KernelFamily::Disk);
  double lhs_g = normalized_power_integral(s, g, z, 0.0, KernelFamily::Disk);
  BoundaryFunction comb(s.size());
  for (int i = 0; i < s.size(); ++i) comb[i] = 2.0 * f[i] + 3.0 * g[i];
  CHECK(normalized_power_integral(s, comb, z, 0.0, KernelFamily::Disk) ==
        doctest::Approx(2.0 * lhs_f + 3.0 * lhs_g).epsilon(1e-12));
}

TEST_CASE("normalized indicator approaches one radially, at a logarithmic rate") {
  // the deficit at t = 2^-9 is about 0.11 (fine-quadrature oracle), not
  // smaller; the rate toward 1 is 1/log2(2/t)
  HomogeneousSpace s = build_circle(4096);
  BoundaryFunction half(s.size(), 0.0);
  for (int i = 0; i < s.size(); ++i)
    if (s.point(i)[1] > 0.0) half[i] = 1.0;  // open upper arc
  int mid = s.size() / 4;                    // theta = -pi + pi/2 ... pick upper-mid
  // locate the boundary point at angle pi/2 (middle of the upper arc)
  int base = 3 * s.size() / 4;
  double t = std::ldexp(1.0, -9);
  double v = normalized_power_integral(s, half, {base, t}, 0.0, KernelFamily::Disk);
  double oracle_num =
      fine_sqrt_kernel_quadrature(1.0 - t, [&](double th) { return std::fabs(th) < kPi / 2; });
  double oracle_den = fine_sqrt_kernel_quadrature(1.0 - t, [](double) { return 1.0; });
  double oracle = oracle_num / oracle_den;
  CHECK(v == doctest::Approx(oracle).epsilon(0.02));
  CHECK(1.0 - v <= 0.15);
  CHECK(1.0 - v >= 0.05);  // the spec-sketch tolerance of 0.05 is not reachable here
  (void)mid;
}

TEST_CASE("p0 basics") {
  HomogeneousSpace s = build_circle(512);
  BoundaryFunction zero(s.size(), 0.0), one(s.size(), 1.0);
  CHECK(p0(s, zero, 0, 0.25) == 0.0);
  CHECK_THROWS_AS(p0(s, one, 0, s.resolution_floor / 8), std::invalid_argument);

  // monotone in f
  BoundaryFunction f(s.size()), g(s.size());
  for (int i = 0; i < s.size(); ++i) {
    f[i] = 0.25 + 0.5 * ((i * 37) % 11) / 11.0;
    g[i] = f[i] + 0.125;
  }
  CHECK(p0(s, f, 100, 0.125) < p0(s, g, 100, 0.125));

  // p0(1) stays in a fixed band over the dyadic levels
  for (int k = 0; k <= s.max_level(); ++k) {
    double v = p0(s, one, 0, std::ldexp(1.0, -k));
    CHECK(v >= 1.0);
    CHECK(v <= 4.0);
  }
}

TEST_CASE("p0 field matches the serial reference") {
  for (const HomogeneousSpace& s : {build_circle(192), build_real_sphere(3, 192)}) {
    BoundaryFunction f(s.size());
    for (int i = 0; i < s.size(); ++i) f[i] = (i % 5 == 0) ? 1.0 : 0.1;
    InteriorFunction a = p0_field(s, f, s.max_level());
    InteriorFunction b = reference::p0_field(s, f, s.max_level());
    REQUIRE(a.values.size() == b.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i)
      CHECK(a.values[i] == doctest::Approx(b.values[i]).epsilon(1e-12));
  }
}

TEST_CASE("rotation equivariance is exact on the circle") {
  HomogeneousSpace s = build_circle(256);
  BoundaryFunction f(s.size());
  for (int i = 0; i < s.size(); ++i) f[i] = std::exp(std::sin(2.0 * kPi * i / s.size()));
  BoundaryFunction shifted(s.size());
  for (int i = 0; i < s.size(); ++i) shifted[(i + 1) % s.size()] = f[i];

  InteriorFunction uf = p0_field(s, f, s.max_level());
  InteriorFunction us = p0_field(s, shifted, s.max_level());
  for (int i = 0; i < s.size(); ++i)
    for (int k = 0; k <= s.max_level(); ++k)
      CHECK(us.at((i + 1) % s.size(), k) == uf.at(i, k));  // bitwise

  double a = power_integral(s, f, {10, 0.125}, 0.0, KernelFamily::Disk);
  double b = power_integral(s, shifted, {11, 0.125}, 0.0, KernelFamily::Disk);
  CHECK(a == b);  // bitwise
}

TEST_CASE("p0 is comparable with the normalized power integral on the circle") {
  HomogeneousSpace s = build_circle(1024);
  BoundaryFunction one(s.size(), 1.0);
  BoundaryFunction cap(s.size(), 0.0);
  for (int i = 0; i < s.size(); ++i)
    if (s.distance(0, i) < 0.5) cap[i] = 1.0;

  for (const BoundaryFunction& f : {one, cap}) {
    double lo = 1e9, hi = 0.0;
    for (int k = 1; k <= s.max_level(); ++k) {
      double t = std::ldexp(1.0, -k);
      double a = p0(s, f, 0, t);
      double b = normalized_power_integral(s, f, {0, t}, 0.0, KernelFamily::Disk);
      if (b == 0.0) continue;
      double ratio = a / b;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    CHECK(hi / lo <= 4.0);
    CHECK(lo > 0.5);
    CHECK(hi < 8.0);
  }
}

TEST_CASE("power integrals on the sphere models") {
  HomogeneousSpace rs = build_real_sphere(3, 512);
  BoundaryFunction c3(rs.size(), 3.0);
  // real-ball exponent offset is (n-1)/n; constants reproduce exactly
  CHECK(kernel_exponent_offset(KernelFamily::RealBall, rs) == doctest::Approx(2.0 / 3.0));
  CHECK(normalized_power_integral(rs, c3, {5, 0.25}, 0.0, KernelFamily::RealBall) ==
        doctest::Approx(3.0).epsilon(1e-12));

  HomogeneousSpace cs = build_complex_sphere(2, 512);
  BoundaryFunction c2(cs.size(), -2.0);
  CHECK(normalized_power_integral(cs, c2, {9, 0.25}, 0.0, KernelFamily::ComplexBall) ==
        doctest::Approx(-2.0).epsilon(1e-12));

  // positivity of the raw power integrals of a positive function
  BoundaryFunction pos(rs.size(), 0.5);
  CHECK(power_integral(rs, pos, {0, 0.5}, 0.0, KernelFamily::RealBall) > 0.0);
  BoundaryFunction cpos(cs.size(), 0.5);
  CHECK(power_integral(cs, cpos, {0, 0.5}, 0.0, KernelFamily::ComplexBall) > 0.0);
}

TEST_CASE("kernels are strictly positive on valid inputs") {
  for (double r : {0.0, 0.3, 0.99}) {
    for (double gap : {0.0, 0.5, 3.14})
      CHECK(poisson_disk_kernel(r, gap) > 0.0);
  }
  std::vector<double> x = {0.2, -0.4, 0.1}, th = {0.0, 1.0, 0.0};
  CHECK(poisson_ball_kernel(x, th) > 0.0);
  std::vector<double> z = {0.2, 0.3, -0.1, 0.4}, ze = {0.0, 0.0, 1.0, 0.0};
  CHECK(invariant_poisson_kernel(z, ze) > 0.0);
}

TEST_CASE("normalized power field matches pointwise evaluation") {
  HomogeneousSpace s = build_circle(128);
  BoundaryFunction f(s.size());
  for (int i = 0; i < s.size(); ++i) f[i] = s.point(i)[0];
  InteriorFunction field = normalized_power_field(s, f, 0.0, KernelFamily::Disk, 4);
  for (int y : {0, 31, 64}) {
    for (int k = 0; k <= 4; ++k) {
      double t = std::ldexp(1.0, -k);
      CHECK(field.at(y, k) ==
            doctest::Approx(normalized_power_integral(s, f, {y, t}, 0.0, KernelFamily::Disk))
                .epsilon(1e-12));
    }
  }

  // generic (non-circle) path
  HomogeneousSpace rs = build_real_sphere(3, 512);
  BoundaryFunction g(rs.size());
  for (int i = 0; i < rs.size(); ++i) g[i] = rs.point(i)[2];
  InteriorFunction gfield = normalized_power_field(rs, g, 0.0, KernelFamily::RealBall, 2);
  for (int y : {0, 77}) {
    for (int k = 0; k <= 2; ++k) {
      double t = std::ldexp(1.0, -k);
      CHECK(gfield.at(y, k) ==
            doctest::Approx(normalized_power_integral(rs, g, {y, t}, 0.0, KernelFamily::RealBall))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("p0 on the sphere matches its own field") {
  HomogeneousSpace s = build_real_sphere(3, 512);
  BoundaryFunction f(s.size());
  for (int i = 0; i < s.size(); ++i) f[i] = 1.0 + 0.5 * s.point(i)[0];
  InteriorFunction field = p0_field(s, f, s.max_level());
  for (int x : {0, 100, 333}) {
    for (int k = 0; k <= s.max_level(); ++k)
      CHECK(p0(s, f, x, std::ldexp(1.0, -k)) ==
            doctest::Approx(field.at(x, k)).epsilon(1e-13));
  }
}

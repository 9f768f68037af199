// Timing comparison of the parallel kernels against the serial reference
// implementations. Run with optional arguments: bench_maximal [n ...]

#include <chrono>
#include <cstdio>
#include <vector>

#include "tanmax/functions.hpp"
#include "tanmax/kernels.hpp"
#include "tanmax/maximal.hpp"
#include "tanmax/reference.hpp"
#include "tanmax/space.hpp"

using namespace tanmax;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <class F>
double timed(F&& fn) {
  auto start = Clock::now();
  fn();
  return ms_since(start);
}

void run(int n) {
  HomogeneousSpace space = build_circle(n);
  FamilySpec fs;
  BoundaryFunction f = make_family(space, fs, 2.0)[1].values;  // a cap indicator

  std::printf("n = %d\n", n);
  std::printf("  %-24s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "speedup");

  InteriorFunction u;
  {
    double ser = timed([&] { (void)reference::ball_mean_field(space, f); });
    double par = timed([&] { u = ball_mean_field(space, f); });
    std::printf("  %-24s %10.1f %10.1f %7.2fx\n", "ball_mean_field", ser, par, ser / par);
  }
  {
    double ser = timed([&] { (void)reference::hl_maximal(space, f); });
    double par = timed([&] { (void)hl_maximal(space, f); });
    std::printf("  %-24s %10.1f %10.1f %7.2fx\n", "hl_maximal", ser, par, ser / par);
  }
  {
    ApproachSpec spec{1.0, 2.0, std::nullopt};
    double ser = timed([&] { (void)reference::tangential_maximal(space, u, spec); });
    double par = timed([&] { (void)tangential_maximal(space, u, spec); });
    std::printf("  %-24s %10.1f %10.1f %7.2fx\n", "tangential_maximal", ser, par, ser / par);
  }
  {
    ApproachSpec spec{1.0, 2.0, 4.0};
    double ser = timed([&] { (void)reference::parametric_maximal(space, u, spec); });
    double par = timed([&] { (void)parametric_maximal(space, u, spec); });
    std::printf("  %-24s %10.1f %10.1f %7.2fx\n", "parametric_maximal", ser, par, ser / par);
  }
  {
    int k_hi = space.max_level();
    double ser = timed([&] { (void)reference::p0_field(space, f, k_hi); });
    double par = timed([&] { (void)p0_field(space, f, k_hi); });
    std::printf("  %-24s %10.1f %10.1f %7.2fx\n", "p0_field", ser, par, ser / par);
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> sizes;
  for (int i = 1; i < argc; ++i) sizes.push_back(std::atoi(argv[i]));
  if (sizes.empty()) sizes = {512, 1024, 2048};
  for (int n : sizes) run(n);
  return 0;
}

// Batch CLI for the verification suites. Each subcommand loads an
// optional JSON config, applies command-line overrides, runs the suite,
// writes report.json + CSV tables + a column schema under --out, and
// exits 0 iff every verdict passed.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tanmax/experiments.hpp"
#include "tanmax/io.hpp"
#include "tanmax/kernels.hpp"
#include "tanmax/maximal.hpp"
#include "tanmax/measures.hpp"

namespace {

using namespace tanmax;

struct CliOptions {
  std::string config_path;
  std::string out_dir = "out";
  std::uint64_t seed = 0;
  int resolution = 0;
  bool refine = false;
};

void add_common(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--config", opt.config_path, "JSON config file");
  cmd->add_option("--out", opt.out_dir, "output directory");
  cmd->add_option("--seed", opt.seed, "seed override");
  cmd->add_option("--resolution", opt.resolution, "resolution override");
  cmd->add_flag("--refine", opt.refine, "also run at 2x resolution");
}

ExperimentConfig load_config(const CliOptions& opt, ExperimentConfig defaults) {
  ExperimentConfig cfg = defaults;
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) throw std::runtime_error("cannot open config: " + opt.config_path);
    nlohmann::json j;
    in >> j;
    from_json(j, cfg);
  }
  if (opt.seed != 0) {
    cfg.seed = opt.seed;
    cfg.family.seed = opt.seed;
  }
  if (opt.resolution != 0) cfg.space.resolution = opt.resolution;
  if (opt.refine) cfg.refine = true;
  return cfg;
}

bool emit(const ExperimentReport& rep, const std::string& out_dir) {
  std::string path = write_report(rep, out_dir);
  for (const Verdict& v : rep.verdicts)
    std::printf("[%s] %s: %.6g %s %.6g\n", v.pass ? "PASS" : "FAIL", v.name.c_str(), v.value,
                v.less_is_pass ? "<=" : ">=", v.threshold);
  std::printf("%s report: %s (%s)\n", rep.suite.c_str(), path.c_str(),
              rep.pass ? "pass" : "FAIL");
  return rep.pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tangential maximal operator experiments on discretized homogeneous spaces"};
  app.require_subcommand(1);

  CliOptions opt;
  bool ok = true;

  auto* verify = app.add_subcommand("verify-space", "quasimetric and homogeneity checks");
  add_common(verify, opt);
  verify->callback([&] {
    std::vector<ExperimentConfig> runs;
    if (!opt.config_path.empty()) {
      runs.push_back(load_config(opt, {}));
    } else {
      ExperimentConfig circle;
      circle.space = {SpaceKind::Circle, 1024, 0};
      ExperimentConfig rsphere;
      rsphere.space = {SpaceKind::RealSphere, 2048, 3};
      ExperimentConfig csphere;
      csphere.space = {SpaceKind::ComplexSphere, 2048, 2};
      for (ExperimentConfig c : {circle, rsphere, csphere}) {
        CliOptions o = opt;
        runs.push_back(load_config(o, c));
      }
    }
    for (ExperimentConfig& cfg : runs) {
      ExperimentReport rep = run_verify_space(cfg);
      std::string dir = opt.out_dir + "/verify-space-" + to_string(cfg.space.kind);
      ok = emit(rep, dir) && ok;
      HomogeneousSpace space = build_space(cfg.space);
      write_text_file(dir + "/descriptor.json", space.descriptor_json() + "\n");
      write_points_csv(space, dir + "/points.csv");
    }
  });

  auto* strong = app.add_subcommand("strong-type", "L^p boundedness of the maximal operator");
  add_common(strong, opt);
  strong->callback([&] {
    std::vector<double> ps = {1.5, 2.0, 3.0};
    for (double p : ps) {
      ExperimentConfig defaults;
      defaults.space = {SpaceKind::Circle, 512, 0};
      defaults.p = p;
      ExperimentConfig cfg = load_config(opt, defaults);
      if (!opt.config_path.empty() && p != ps.front()) break;  // config names its own p
      ExperimentReport rep = run_strong_type(cfg);
      std::ostringstream dir;
      dir << opt.out_dir << "/strong-type-p" << cfg.p;
      ok = emit(rep, dir.str()) && ok;
      if (p == ps.front()) {
        // maximal-field export for the first family member
        HomogeneousSpace space = build_space(cfg.space);
        std::vector<NamedFunction> fam = make_family(space, cfg.family, cfg.p);
        InteriorFunction u = p0_field(space, fam.front().values, space.max_level());
        ApproachSpec spec{1.0, cfg.delta_or_default(space.gamma), std::nullopt};
        write_field_csv(tangential_maximal(space, u, spec), dir.str() + "/maximal_field.csv");
      }
    }
  });

  auto* decay = app.add_subcommand("decay", "parametric maximal norm decay in A");
  add_common(decay, opt);
  decay->callback([&] {
    if (!opt.config_path.empty()) {
      ExperimentConfig cfg = load_config(opt, {});
      ok = emit(run_decay(cfg), opt.out_dir + "/decay") && ok;
      return;
    }
    ExperimentConfig circle;
    circle.space = {SpaceKind::Circle, 512, 0};
    circle.p = 2.0;
    ExperimentConfig cfg = load_config(opt, circle);
    ok = emit(run_decay(cfg), opt.out_dir + "/decay-circle") && ok;

    ExperimentConfig sphere;
    sphere.space = {SpaceKind::RealSphere, 4096, 3};
    sphere.p = 2.0;
    CliOptions o = opt;
    o.resolution = 0;  // sphere default resolution is its own
    ExperimentConfig scfg = load_config(o, sphere);
    ok = emit(run_decay(scfg), opt.out_dir + "/decay-real-sphere") && ok;
  });

  auto* weak = app.add_subcommand("weak-type", "distributional inequality at p >= 1");
  add_common(weak, opt);
  weak->callback([&] {
    ExperimentConfig defaults;
    defaults.space = {SpaceKind::Circle, 512, 0};
    defaults.p = 1.0;
    ExperimentConfig cfg = load_config(opt, defaults);
    ok = emit(run_weak_type(cfg), opt.out_dir + "/weak-type") && ok;
  });

  auto* conv = app.add_subcommand("convergence", "tail error over approach domains");
  add_common(conv, opt);
  conv->callback([&] {
    ExperimentConfig defaults;
    defaults.space = {SpaceKind::Circle, 4096, 0};
    defaults.p = 1.0;
    ExperimentConfig cfg = load_config(opt, defaults);
    ExperimentReport rep = run_convergence(cfg);
    std::string dir = opt.out_dir + "/convergence";
    ok = emit(rep, dir) && ok;
    // kernel-field export at a modest resolution
    HomogeneousSpace space = build_circle(std::min(cfg.space.resolution, 1024));
    BoundaryFunction f(space.size());
    for (int i = 0; i < space.size(); ++i)
      f[i] = space.point(i)[0];  // cos(theta)
    write_interior_csv(
        normalized_power_field(space, f, 0.0, KernelFamily::Disk, space.max_kernel_level()),
        dir + "/kernel_field.csv");
  });

  auto* weighted = app.add_subcommand("weighted", "outer-measure weighted estimates");
  add_common(weighted, opt);
  weighted->callback([&] {
    std::vector<double> deltas = {1.0, 2.0};
    for (double d : deltas) {
      ExperimentConfig defaults;
      defaults.space = {SpaceKind::Circle, 512, 0};
      defaults.p = 2.0;
      defaults.delta = d;
      defaults.lambda_grid = 128;
      ExperimentConfig cfg = load_config(opt, defaults);
      if (!opt.config_path.empty() && d != deltas.front()) break;
      ExperimentReport rep = run_weighted(cfg);
      std::ostringstream dir;
      dir << opt.out_dir << "/weighted-delta" << *cfg.delta;
      ok = emit(rep, dir.str()) && ok;
      if (d == deltas.front()) {
        // distribution table (lambda, nu{|f| > lambda}) for a cap
        HomogeneousSpace space = build_space(cfg.space);
        auto content = build_log_content(space, cfg.p - space.gamma * *cfg.delta);
        OuterMeasure nu = content->as_outer_measure();
        BoundaryFunction f = cap_indicator(space, 0, 0.5);
        std::string csv = "lambda,nu\n";
        for (int i = 0; i < 64; ++i) {
          double lam = 2.0 * (i + 0.5) / 64.0;
          csv += format_double(lam) + "," +
                 format_double(distribution_function(space, f, lam, nu)) + "\n";
        }
        write_text_file(dir.str() + "/distribution.csv", csv);
      }
    }
  });

  auto* local = app.add_subcommand("local", "local estimate on a compact inside an open set");
  add_common(local, opt);
  local->callback([&] {
    ExperimentConfig defaults;
    defaults.space = {SpaceKind::Circle, 1024, 0};
    defaults.p = 2.0;
    ExperimentConfig cfg = load_config(opt, defaults);
    ok = emit(run_local(cfg), opt.out_dir + "/local") && ok;
  });

  CLI11_PARSE(app, argc, argv);
  return ok ? 0 : 1;
}

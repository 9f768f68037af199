#include "tanmax/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "tanmax/io.hpp"
#include "tanmax/maximal.hpp"
#include "tanmax/measures.hpp"
#include "tanmax/rng.hpp"

namespace tanmax {

namespace {

constexpr double kPi = 3.14159265358979323846;

SpaceSpec refined(SpaceSpec s) {
  s.resolution *= 2;
  return s;
}

double relative_drift(double base, double refined_value) {
  if (base == 0.0) return refined_value == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::fabs(refined_value - base) / std::fabs(base);
}

Verdict make_verdict(const std::string& name, double value, double threshold,
                     bool less_is_pass = true) {
  Verdict v;
  v.name = name;
  v.value = value;
  v.threshold = threshold;
  v.less_is_pass = less_is_pass;
  v.pass = less_is_pass ? value <= threshold : value >= threshold;
  return v;
}

void finish(ExperimentReport& rep, const ExperimentConfig& config) {
  nlohmann::json j = config;
  rep.config = j;
  rep.config_hash = config_hash(j);
  rep.pass = true;
  for (const Verdict& v : rep.verdicts) rep.pass = rep.pass && v.pass;
}

// least-squares slope of log y against log x
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const int m = static_cast<int>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < m; ++i) {
    double lx = std::log2(x[i]), ly = std::log2(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

std::string kind_name(SpaceKind k) { return to_string(k); }

}  // namespace

HomogeneousSpace build_space(const SpaceSpec& spec) {
  switch (spec.kind) {
    case SpaceKind::Circle: return build_circle(spec.resolution);
    case SpaceKind::RealSphere: return build_real_sphere(spec.dim_param, spec.resolution);
    case SpaceKind::ComplexSphere: return build_complex_sphere(spec.dim_param, spec.resolution);
  }
  throw std::invalid_argument("build_space: unknown kind");
}

void to_json(nlohmann::json& j, const ExperimentConfig& c) {
  j = nlohmann::json{
      {"space", {{"kind", kind_name(c.space.kind)},
                 {"resolution", c.space.resolution},
                 {"dim_param", c.space.dim_param}}},
      {"p", c.p},
      {"A_list", c.A_list},
      {"family",
       {{"include_constant", c.family.include_constant},
        {"cap_radii", c.family.cap_radii},
        {"step_count", c.family.step_count},
        {"step_blocks", c.family.step_blocks},
        {"spike_count", c.family.spike_count},
        {"spike_margin", c.family.spike_margin},
        {"seed", c.family.seed}}},
      {"tolerances",
       {{"strong_drift", c.tol.strong_drift},
        {"weak_drift", c.tol.weak_drift},
        {"decay_slope_slack", c.tol.decay_slope_slack},
        {"domination_drift", c.tol.domination_drift},
        {"weighted_drift", c.tol.weighted_drift},
        {"local_drift", c.tol.local_drift},
        {"convergence_eps", c.tol.convergence_eps},
        {"convergence_mono_slack", c.tol.convergence_mono_slack}}},
      {"lambda_grid", c.lambda_grid},
      {"sample_points", c.sample_points},
      {"finest_kernel_level", c.finest_kernel_level},
      {"seed", c.seed},
      {"refine", c.refine},
      {"local_g_halfwidth", c.local_g_halfwidth},
      {"local_k_halfwidth", c.local_k_halfwidth},
      {"local_bump_radius", c.local_bump_radius},
      {"local_spike_cap", c.local_spike_cap}};
  if (c.delta) j["delta"] = *c.delta;
}

void from_json(const nlohmann::json& j, ExperimentConfig& c) {
  if (j.contains("space")) {
    const auto& s = j.at("space");
    if (s.contains("kind")) {
      std::string k = s.at("kind");
      if (k == "circle") c.space.kind = SpaceKind::Circle;
      else if (k == "real_sphere") c.space.kind = SpaceKind::RealSphere;
      else if (k == "complex_sphere") c.space.kind = SpaceKind::ComplexSphere;
      else throw std::invalid_argument("unknown space kind: " + k);
    }
    if (s.contains("resolution")) c.space.resolution = s.at("resolution");
    if (s.contains("dim_param")) c.space.dim_param = s.at("dim_param");
  }
  if (j.contains("p")) c.p = j.at("p");
  if (j.contains("delta")) c.delta = j.at("delta").get<double>();
  if (j.contains("A_list")) c.A_list = j.at("A_list").get<std::vector<double>>();
  if (j.contains("family")) {
    const auto& f = j.at("family");
    if (f.contains("include_constant")) c.family.include_constant = f.at("include_constant");
    if (f.contains("cap_radii")) c.family.cap_radii = f.at("cap_radii").get<std::vector<double>>();
    if (f.contains("step_count")) c.family.step_count = f.at("step_count");
    if (f.contains("step_blocks")) c.family.step_blocks = f.at("step_blocks");
    if (f.contains("spike_count")) c.family.spike_count = f.at("spike_count");
    if (f.contains("spike_margin")) c.family.spike_margin = f.at("spike_margin");
    if (f.contains("seed")) c.family.seed = f.at("seed");
  }
  if (j.contains("lambda_grid")) c.lambda_grid = j.at("lambda_grid");
  if (j.contains("sample_points")) c.sample_points = j.at("sample_points");
  if (j.contains("finest_kernel_level")) c.finest_kernel_level = j.at("finest_kernel_level");
  if (j.contains("seed")) c.seed = j.at("seed");
  if (j.contains("refine")) c.refine = j.at("refine");
  if (j.contains("local_g_halfwidth")) c.local_g_halfwidth = j.at("local_g_halfwidth");
  if (j.contains("local_k_halfwidth")) c.local_k_halfwidth = j.at("local_k_halfwidth");
  if (j.contains("local_bump_radius")) c.local_bump_radius = j.at("local_bump_radius");
  if (j.contains("local_spike_cap")) c.local_spike_cap = j.at("local_spike_cap");
}

std::string config_hash(const nlohmann::json& config) {
  std::string dump = config.dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : dump) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

// ---------------------------------------------------------------------------
// strong type

namespace {

struct StrongPass {
  double max_ratio = 0.0;
  std::vector<RunRecord> records;
};

StrongPass strong_type_pass(const ExperimentConfig& config, const SpaceSpec& sp) {
  HomogeneousSpace space = build_space(sp);
  double delta = config.delta_or_default(space.gamma);
  std::vector<NamedFunction> family = make_family(space, config.family, config.p);

  StrongPass out;
  for (const NamedFunction& nf : family) {
    InteriorFunction u = p0_field(space, nf.values, space.max_level());
    ApproachSpec spec{1.0, delta, std::nullopt};
    BoundaryFunction lmax = tangential_maximal(space, u, spec);
    double nf_norm = lp_norm(space, nf.values, config.p);
    double nl_norm = lp_norm(space, lmax, config.p);
    double ratio = nl_norm / nf_norm;
    out.max_ratio = std::max(out.max_ratio, ratio);

    RunRecord rec;
    rec.function = nf.name;
    rec.resolution = sp.resolution;
    rec.metrics["ratio"] = ratio;
    rec.metrics["f_norm"] = nf_norm;
    rec.metrics["maximal_norm"] = nl_norm;
    out.records.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

ExperimentReport run_strong_type(const ExperimentConfig& config) {
  if (!(config.p > 1.0)) throw std::invalid_argument("run_strong_type: p must be > 1");
  {
    HomogeneousSpace probe = build_space(config.space);
    if (config.delta && std::fabs(*config.delta - config.p / probe.gamma) > 1e-12)
      throw std::invalid_argument("run_strong_type: delta must equal p/gamma");
  }

  ExperimentReport rep;
  rep.suite = "strong-type";

  StrongPass base = strong_type_pass(config, config.space);
  rep.records = base.records;
  rep.summary["max_ratio"] = base.max_ratio;

  if (config.refine) {
    StrongPass fine = strong_type_pass(config, refined(config.space));
    rep.records.insert(rep.records.end(), fine.records.begin(), fine.records.end());
    rep.summary["max_ratio_refined"] = fine.max_ratio;
    double drift = relative_drift(base.max_ratio, fine.max_ratio);
    rep.summary["drift"] = drift;
    rep.verdicts.push_back(make_verdict("strong_ratio_drift", drift, config.tol.strong_drift));
  }
  finish(rep, config);
  return rep;
}

// ---------------------------------------------------------------------------
// decay (parametric family norms against A)

namespace {

struct DecayPass {
  std::vector<double> kept_A;
  std::vector<std::string> dropped;
  // per function: fitted slope
  std::vector<std::pair<std::string, double>> slopes;
  std::vector<RunRecord> records;
};

DecayPass decay_pass(const ExperimentConfig& config, const SpaceSpec& sp) {
  HomogeneousSpace space = build_space(sp);
  double delta = config.delta_or_default(space.gamma);
  std::vector<NamedFunction> family = make_family(space, config.family, config.p);

  DecayPass out;
  // domain emptiness does not depend on f: probe with the constant 1
  BoundaryFunction ones(space.size(), 1.0);
  InteriorFunction probe = ball_mean_field(space, ones);
  for (double A : config.A_list) {
    ApproachSpec spec{1.0, delta, A};
    BoundaryFunction val = parametric_maximal(space, probe, spec);
    bool empty = *std::max_element(val.begin(), val.end()) == 0.0;
    if (empty) {
      std::ostringstream w;
      w << "A=" << A << " dropped: empty approach domain at resolution " << sp.resolution;
      out.dropped.push_back(w.str());
    } else {
      out.kept_A.push_back(A);
    }
  }

  const double gamma = space.gamma;
  for (const NamedFunction& nf : family) {
    InteriorFunction u = ball_mean_field(space, nf.values);
    std::vector<double> norms;
    double envelope = 0.0;  // smallest c with ||L_A u||_p <= c A^{-gamma/p} ||f||_p
    double f_norm = lp_norm(space, nf.values, config.p);
    for (double A : out.kept_A) {
      ApproachSpec spec{1.0, delta, A};
      BoundaryFunction lmax = parametric_maximal(space, u, spec);
      norms.push_back(lp_norm(space, lmax, config.p));
      envelope = std::max(envelope,
                          norms.back() * std::pow(A, gamma / config.p) / f_norm);

      RunRecord rec;
      rec.function = nf.name;
      rec.resolution = sp.resolution;
      rec.metrics["A"] = A;
      rec.metrics["norm"] = norms.back();
      out.records.push_back(std::move(rec));
    }
    if (out.kept_A.size() >= 2) {
      double slope = loglog_slope(out.kept_A, norms);
      out.slopes.emplace_back(nf.name, slope);
      RunRecord rec;
      rec.function = nf.name;
      rec.resolution = sp.resolution;
      rec.metrics["slope"] = slope;
      rec.metrics["envelope_constant"] = envelope;
      out.records.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace

ExperimentReport run_decay(const ExperimentConfig& config) {
  if (config.A_list.size() < 4) throw std::invalid_argument("run_decay: need >= 4 values of A");
  for (std::size_t i = 2; i < config.A_list.size(); ++i) {
    double r0 = config.A_list[1] / config.A_list[0];
    double ri = config.A_list[i] / config.A_list[i - 1];
    if (std::fabs(ri - r0) > 1e-9 * r0)
      throw std::invalid_argument("run_decay: A list must be geometric");
  }

  ExperimentReport rep;
  rep.suite = "decay";

  HomogeneousSpace probe = build_space(config.space);
  const double gamma = probe.gamma;
  const double target = -gamma / config.p + config.tol.decay_slope_slack;

  DecayPass base = decay_pass(config, config.space);
  rep.records = base.records;
  rep.warnings = base.dropped;

  double worst_slope = -std::numeric_limits<double>::infinity();
  for (const auto& [name, slope] : base.slopes) worst_slope = std::max(worst_slope, slope);
  double worst_envelope = 0.0;
  for (const RunRecord& r : base.records)
    if (r.metrics.count("envelope_constant"))
      worst_envelope = std::max(worst_envelope, r.metrics.at("envelope_constant"));
  rep.summary["worst_slope"] = worst_slope;
  rep.summary["slope_target"] = target;
  rep.summary["worst_envelope_constant"] = worst_envelope;
  rep.summary["kept_A"] = static_cast<double>(base.kept_A.size());
  rep.verdicts.push_back(make_verdict("decay_slope", worst_slope, target));

  if (config.refine) {
    DecayPass fine = decay_pass(config, refined(config.space));
    rep.records.insert(rep.records.end(), fine.records.begin(), fine.records.end());
    for (const auto& w : fine.dropped) rep.warnings.push_back(w + " (refined)");
    double max_slope_shift = 0.0;
    for (const auto& [name, slope] : base.slopes) {
      for (const auto& [fname, fslope] : fine.slopes)
        if (fname == name) max_slope_shift = std::max(max_slope_shift, std::fabs(fslope - slope));
    }
    rep.summary["max_slope_shift"] = max_slope_shift;
    double fine_envelope = 0.0;
    for (const RunRecord& r : fine.records)
      if (r.metrics.count("envelope_constant"))
        fine_envelope = std::max(fine_envelope, r.metrics.at("envelope_constant"));
    rep.summary["worst_envelope_constant_refined"] = fine_envelope;
  }
  finish(rep, config);
  return rep;
}

// ---------------------------------------------------------------------------
// weak type

namespace {

struct WeakPass {
  double weak_const = 0.0;
  double strong_const = 0.0;
  std::vector<RunRecord> records;
};

WeakPass weak_type_pass(const ExperimentConfig& config, const SpaceSpec& sp) {
  HomogeneousSpace space = build_space(sp);
  double delta = config.delta_or_default(space.gamma);
  std::vector<NamedFunction> family = make_family(space, config.family, config.p);

  WeakPass out;
  OuterMeasure mu = measure_from_weights(space);
  for (const NamedFunction& nf : family) {
    InteriorFunction u = p0_field(space, nf.values, space.max_level());
    ApproachSpec spec{1.0, delta, std::nullopt};
    BoundaryFunction lmax = tangential_maximal(space, u, spec);
    double fn = lp_norm(space, nf.values, config.p);
    double fn_p = std::pow(fn, config.p);
    double top = *std::max_element(lmax.begin(), lmax.end());
    double weak = 0.0;
    if (top > 0.0) {
      for (int i = 0; i < config.lambda_grid; ++i) {
        double lam = top * std::pow(1e-3, 1.0 - static_cast<double>(i) / (config.lambda_grid - 1));
        lam = std::min(lam, top * (1.0 - 1e-9));
        double m = distribution_function(space, lmax, lam, mu);
        weak = std::max(weak, std::pow(lam, config.p) * m / fn_p);
      }
    }
    out.weak_const = std::max(out.weak_const, weak);
    out.strong_const = std::max(out.strong_const, lp_norm(space, lmax, config.p) / fn);

    RunRecord rec;
    rec.function = nf.name;
    rec.resolution = sp.resolution;
    rec.metrics["weak_constant"] = weak;
    out.records.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

ExperimentReport run_weak_type(const ExperimentConfig& config) {
  if (!(config.p >= 1.0)) throw std::invalid_argument("run_weak_type: p must be >= 1");

  ExperimentReport rep;
  rep.suite = "weak-type";

  WeakPass base = weak_type_pass(config, config.space);
  rep.records = base.records;
  rep.summary["weak_constant"] = base.weak_const;
  rep.summary["strong_constant"] = base.strong_const;

  if (config.p > 1.0) {
    double bound = std::pow(base.strong_const, config.p) * (1.0 + config.tol.chebyshev_slack);
    rep.verdicts.push_back(make_verdict("chebyshev_weak_le_strong_pow_p", base.weak_const, bound));
  }
  if (config.refine) {
    WeakPass fine = weak_type_pass(config, refined(config.space));
    rep.records.insert(rep.records.end(), fine.records.begin(), fine.records.end());
    rep.summary["weak_constant_refined"] = fine.weak_const;
    double drift = relative_drift(base.weak_const, fine.weak_const);
    rep.summary["drift"] = drift;
    rep.verdicts.push_back(make_verdict("weak_constant_drift", drift, config.tol.weak_drift));
  }
  finish(rep, config);
  return rep;
}

// ---------------------------------------------------------------------------
// convergence over approach domains

namespace {

std::vector<NamedFunction> continuous_family(const HomogeneousSpace& space) {
  const int n = space.size();
  std::vector<NamedFunction> fam;
  fam.push_back({"const_1", BoundaryFunction(n, 1.0)});
  BoundaryFunction f1(n), f2(n), f3(n);
  for (int i = 0; i < n; ++i) {
    double th = std::atan2(space.point(i)[1], space.point(i)[0]);
    f1[i] = std::cos(th);
    f2[i] = std::sin(2.0 * th) + 0.5 * std::cos(3.0 * th);
    // smoothed cap: cosine-squared taper supported on |th| < pi/2
    f3[i] = std::fabs(th) < kPi / 2 ? std::cos(th) * std::cos(th) : 0.0;
  }
  fam.push_back({"cos_theta", std::move(f1)});
  fam.push_back({"trig_poly", std::move(f2)});
  fam.push_back({"smoothed_cap", std::move(f3)});
  return fam;
}

// e(k0) per sample point: sup over levels k >= k0 and membership
// d(x,y) < phi_delta(t_k) of |field(y,k) - f(x)|, then max over samples.
std::vector<double> tail_errors(const HomogeneousSpace& space, const InteriorFunction& field,
                                const BoundaryFunction& f, const std::vector<int>& samples,
                                double delta) {
  const int k_hi = field.k_hi;
  std::vector<double> widths(k_hi + 1);
  ApproachSpec spec{1.0, delta, std::nullopt};
  for (int k = 0; k <= k_hi; ++k) widths[k] = spec.phi_level(k);

  std::vector<double> e(k_hi + 1, 0.0);
  for (int x : samples) {
    std::vector<double> per_level(k_hi + 1, 0.0);
    for (int y = 0; y < space.size(); ++y) {
      double d = space.distance(x, y);
      for (int k = 0; k <= k_hi; ++k)
        if (d < widths[k])
          per_level[k] = std::max(per_level[k], std::fabs(field.at(y, k) - f[x]));
    }
    // suffix max: e_x(k0) = sup over k >= k0
    double run = 0.0;
    for (int k = k_hi; k >= 0; --k) {
      run = std::max(run, per_level[k]);
      e[k] = std::max(e[k], run);
    }
  }
  return e;
}

}  // namespace

ExperimentReport run_convergence(const ExperimentConfig& config) {
  ExperimentReport rep;
  rep.suite = "convergence";

  HomogeneousSpace space = build_space(config.space);
  if (space.kind != SpaceKind::Circle)
    throw std::invalid_argument("run_convergence: circle model only");
  double delta = config.delta_or_default(space.gamma);

  const int k_hi = std::min(config.finest_kernel_level, space.max_kernel_level());
  rep.summary["finest_level"] = k_hi;

  Rng rng(config.seed);
  std::vector<int> samples;
  for (int s = 0; s < config.sample_points; ++s)
    samples.push_back(static_cast<int>(rng.below(space.size())));

  std::vector<NamedFunction> family = continuous_family(space);
  double worst_tail = 0.0, worst_increase = 0.0, worst_inclusion_violation = 0.0;
  for (const NamedFunction& nf : family) {
    InteriorFunction field =
        normalized_power_field(space, nf.values, 0.0, KernelFamily::Disk, k_hi);
    std::vector<double> e_tan = tail_errors(space, field, nf.values, samples, delta);
    std::vector<double> e_non = tail_errors(space, field, nf.values, samples, 0.0);

    for (int k = 0; k <= k_hi; ++k) {
      RunRecord rec;
      rec.function = nf.name;
      rec.resolution = config.space.resolution;
      rec.metrics["level"] = k;
      rec.metrics["tail_error"] = e_tan[k];
      rec.metrics["tail_error_nontangential"] = e_non[k];
      rep.records.push_back(std::move(rec));
      if (k > 0) worst_increase = std::max(worst_increase, e_tan[k] - e_tan[k - 1]);
      worst_inclusion_violation = std::max(worst_inclusion_violation, e_non[k] - e_tan[k]);
    }
    if (nf.name != "const_1") worst_tail = std::max(worst_tail, e_tan[k_hi]);
  }

  rep.summary["tail_error_at_finest"] = worst_tail;
  rep.verdicts.push_back(
      make_verdict("tail_error_nonincreasing", worst_increase, config.tol.convergence_mono_slack));
  rep.verdicts.push_back(
      make_verdict("tail_error_at_finest", worst_tail, config.tol.convergence_eps));
  rep.verdicts.push_back(
      make_verdict("nontangential_le_tangential", worst_inclusion_violation, 0.0));
  finish(rep, config);
  return rep;
}

// ---------------------------------------------------------------------------
// weighted estimates (outer measures of Frostman type)

namespace {

struct WeightedPass {
  double max_ratio = 0.0;
  double frostman_c = 0.0;
  std::vector<RunRecord> records;
};

WeightedPass weighted_pass(const ExperimentConfig& config, const SpaceSpec& sp, double beta) {
  HomogeneousSpace space = build_space(sp);
  double delta = config.delta_or_default(space.gamma);
  std::vector<NamedFunction> family = make_family(space, config.family, config.p);

  auto content = build_log_content(space, beta);
  OuterMeasure nu = content->as_outer_measure();

  WeightedPass out;
  out.frostman_c = frostman_verify(space, nu, space.gamma, beta);
  for (const NamedFunction& nf : family) {
    InteriorFunction u = p0_field(space, nf.values, space.max_level());
    ApproachSpec spec{1.0, delta, std::nullopt};
    BoundaryFunction lmax = tangential_maximal(space, u, spec);
    double weighted = layer_cake_norm(space, lmax, config.p, nu, config.lambda_grid);
    double ratio = weighted / lp_norm(space, nf.values, config.p);
    out.max_ratio = std::max(out.max_ratio, ratio);

    RunRecord rec;
    rec.function = nf.name;
    rec.resolution = sp.resolution;
    rec.metrics["weighted_ratio"] = ratio;
    out.records.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

ExperimentReport run_weighted(const ExperimentConfig& config) {
  if (!(config.p > 1.0)) throw std::invalid_argument("run_weighted: p must be > 1");

  ExperimentReport rep;
  rep.suite = "weighted";

  HomogeneousSpace probe = build_space(config.space);
  double delta = config.delta_or_default(probe.gamma);
  double beta = config.p - probe.gamma * delta;
  if (beta < -1e-12) throw std::invalid_argument("run_weighted: beta = p - gamma*delta < 0");
  beta = std::max(beta, 0.0);
  rep.summary["beta"] = beta;

  WeightedPass base = weighted_pass(config, config.space, beta);
  rep.records = base.records;
  rep.summary["max_ratio"] = base.max_ratio;
  rep.summary["frostman_constant"] = base.frostman_c;
  rep.verdicts.push_back(
      make_verdict("frostman_constant", base.frostman_c, 1.0 + 1e-12));

  if (config.refine) {
    WeightedPass fine = weighted_pass(config, refined(config.space), beta);
    rep.records.insert(rep.records.end(), fine.records.begin(), fine.records.end());
    rep.summary["max_ratio_refined"] = fine.max_ratio;
    rep.summary["frostman_constant_refined"] = fine.frostman_c;
    double drift = relative_drift(base.max_ratio, fine.max_ratio);
    rep.summary["drift"] = drift;
    rep.verdicts.push_back(make_verdict("weighted_ratio_drift", drift, config.tol.weighted_drift));
    rep.verdicts.push_back(
        make_verdict("frostman_constant_refined", fine.frostman_c, 1.0 + 1e-12));
  }
  finish(rep, config);
  return rep;
}

// ---------------------------------------------------------------------------
// local form

namespace {

struct LocalPass {
  double max_constant = 0.0;
  double max_truncated_constant = 0.0;
  std::vector<RunRecord> records;
};

// The stress functions are fixed across resolutions (fixed bump width,
// fixed spike truncation); grid-adaptive functions would change under
// refinement and the constant C would compare different inputs.
std::vector<NamedFunction> local_family(const HomogeneousSpace& space, double p,
                                        const std::vector<char>& in_g, double bump_radius,
                                        double spike_cap) {
  const int n = space.size();
  std::vector<NamedFunction> fam;

  int far = 0;
  {
    double best = -1.0;
    for (int i = 0; i < n; ++i)
      if (!in_g[i] && space.distance(0, i) > best) { best = space.distance(0, i); far = i; }
  }

  // L^1-normalized bump outside G
  BoundaryFunction bump(n, 0.0);
  double bump_mass = space.ball_mass(far, bump_radius);
  for (int i = 0; i < n; ++i)
    if (space.distance(far, i) < bump_radius) bump[i] = 1.0 / bump_mass;
  fam.push_back({"bump_outside", bump});

  // truncated power spike outside G: exponent 2 gamma / p puts the
  // untruncated profile outside L^p
  BoundaryFunction wild(n, 0.0);
  double expo = 2.0 * space.gamma / p;
  for (int i = 0; i < n; ++i) {
    if (in_g[i]) continue;
    double d = space.distance(far, i);
    wild[i] = d == 0.0 ? spike_cap : std::min(std::pow(d, -expo), spike_cap);
  }
  fam.push_back({"spike_outside", std::move(wild)});

  BoundaryFunction capf(n, 0.0);
  for (int i = 0; i < n; ++i)
    if (in_g[i]) capf[i] = 1.0;
  fam.push_back({"cap_inside", capf});

  BoundaryFunction mix(n, 0.0);
  for (int i = 0; i < n; ++i) mix[i] = capf[i] + bump[i];
  fam.push_back({"mix", std::move(mix)});
  return fam;
}

LocalPass local_pass(const ExperimentConfig& config, const SpaceSpec& sp) {
  HomogeneousSpace space = build_space(sp);
  if (space.kind != SpaceKind::Circle)
    throw std::invalid_argument("run_local: circle model only");
  double delta = config.delta_or_default(space.gamma);
  const int n = space.size();

  std::vector<char> in_g(n, 0), in_k(n, 0);
  std::vector<int> g_set, k_set;
  for (int i = 0; i < n; ++i) {
    double th = std::atan2(space.point(i)[1], space.point(i)[0]);
    if (std::fabs(th) < config.local_g_halfwidth) { in_g[i] = 1; g_set.push_back(i); }
    if (std::fabs(th) <= config.local_k_halfwidth) { in_k[i] = 1; k_set.push_back(i); }
  }
  for (int i = 0; i < n; ++i)
    if (in_k[i] && !in_g[i]) throw std::invalid_argument("run_local: K not inside G");

  double gap = std::numeric_limits<double>::infinity();
  for (int i : k_set)
    for (int j = 0; j < n; ++j)
      if (!in_g[j]) gap = std::min(gap, space.distance(i, j));
  if (!(gap > 0.0)) throw std::invalid_argument("run_local: K not compactly inside G");

  const double a_d = space.quasi_constant;
  double eps = gap / (4.0 * a_d * a_d);
  eps = std::max(eps, space.resolution_floor);

  LocalPass out;
  for (const NamedFunction& nf :
       local_family(space, config.p, in_g, config.local_bump_radius, config.local_spike_cap)) {
    InteriorFunction u = p0_field(space, nf.values, space.max_level());
    ApproachSpec spec{1.0, delta, std::nullopt};
    BoundaryFunction lmax = tangential_maximal(space, u, spec);
    double lhs = lp_norm_on(space, lmax, config.p, k_set);
    double l1 = lp_norm(space, nf.values, 1.0);
    double lp_g = lp_norm_on(space, nf.values, config.p, g_set);
    double c = lhs / (l1 + lp_g);
    out.max_constant = std::max(out.max_constant, c);

    BoundaryFunction trunc = truncated_hl_maximal(space, nf.values, eps);
    double c_trunc = lhs / (lp_norm_on(space, trunc, config.p, k_set) + l1);
    out.max_truncated_constant = std::max(out.max_truncated_constant, c_trunc);

    RunRecord rec;
    rec.function = nf.name;
    rec.resolution = sp.resolution;
    rec.metrics["local_constant"] = c;
    rec.metrics["truncated_constant"] = c_trunc;
    rec.metrics["gap"] = gap;
    rec.metrics["eps"] = eps;
    out.records.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

ExperimentReport run_local(const ExperimentConfig& config) {
  if (!(config.p > 1.0)) throw std::invalid_argument("run_local: p must be > 1");
  if (!(config.local_k_halfwidth < config.local_g_halfwidth))
    throw std::invalid_argument("run_local: K must be strictly inside G");

  ExperimentReport rep;
  rep.suite = "local";

  LocalPass base = local_pass(config, config.space);
  rep.records = base.records;
  rep.summary["local_constant"] = base.max_constant;
  rep.summary["truncated_constant"] = base.max_truncated_constant;

  if (config.refine) {
    LocalPass fine = local_pass(config, refined(config.space));
    rep.records.insert(rep.records.end(), fine.records.begin(), fine.records.end());
    rep.summary["local_constant_refined"] = fine.max_constant;
    double drift = relative_drift(base.max_constant, fine.max_constant);
    rep.summary["drift"] = drift;
    rep.verdicts.push_back(make_verdict("local_constant_drift", drift, config.tol.local_drift));
  }
  finish(rep, config);
  return rep;
}

// ---------------------------------------------------------------------------
// space verification

namespace {

struct SpacePass {
  double a_d = 0.0;
  double c_mu = 0.0;
};

SpacePass space_pass(const ExperimentConfig& config, const SpaceSpec& sp) {
  HomogeneousSpace space = build_space(sp);
  SpacePass out;
  out.a_d = verify_quasimetric(space, 100000, config.seed);
  out.c_mu = verify_homogeneity(space, space.resolution_floor, space.diameter);
  return out;
}

}  // namespace

ExperimentReport run_verify_space(const ExperimentConfig& config) {
  ExperimentReport rep;
  rep.suite = "verify-space";

  SpacePass base = space_pass(config, config.space);
  rep.summary["quasimetric_estimate"] = base.a_d;
  rep.summary["homogeneity_constant"] = base.c_mu;

  RunRecord rec;
  rec.function = kind_name(config.space.kind);
  rec.resolution = config.space.resolution;
  rec.metrics["quasimetric_estimate"] = base.a_d;
  rec.metrics["homogeneity_constant"] = base.c_mu;
  rep.records.push_back(rec);

  bool metric_model = config.space.kind != SpaceKind::ComplexSphere;
  if (metric_model)
    rep.verdicts.push_back(make_verdict("quasimetric_estimate", base.a_d, 1.0 + 1e-12));
  else
    rep.verdicts.push_back(make_verdict("quasimetric_finite", base.a_d, 4.0));
  rep.verdicts.push_back(make_verdict("homogeneity_constant", base.c_mu, 8.0));

  if (config.refine) {
    SpacePass fine = space_pass(config, refined(config.space));
    RunRecord frec;
    frec.function = kind_name(config.space.kind);
    frec.resolution = config.space.resolution * 2;
    frec.metrics["quasimetric_estimate"] = fine.a_d;
    frec.metrics["homogeneity_constant"] = fine.c_mu;
    rep.records.push_back(frec);
    double drift = relative_drift(base.c_mu, fine.c_mu);
    rep.summary["homogeneity_drift"] = drift;
    rep.verdicts.push_back(make_verdict("homogeneity_drift", drift, 0.25));
  }
  finish(rep, config);
  return rep;
}

// ---------------------------------------------------------------------------
// report output

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["config"] = config;
  j["config_hash"] = config_hash;
  j["summary"] = summary;
  j["warnings"] = warnings;
  j["pass"] = pass;
  j["records"] = nlohmann::json::array();
  for (const RunRecord& r : records)
    j["records"].push_back({{"function", r.function},
                            {"resolution", r.resolution},
                            {"metrics", r.metrics}});
  j["verdicts"] = nlohmann::json::array();
  for (const Verdict& v : verdicts)
    j["verdicts"].push_back({{"name", v.name},
                             {"value", v.value},
                             {"threshold", v.threshold},
                             {"less_is_pass", v.less_is_pass},
                             {"pass", v.pass}});
  return j;
}

std::string write_report(const ExperimentReport& report, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  std::string json_path = (fs::path(out_dir) / "report.json").string();
  write_text_file(json_path, report.to_json().dump(2) + "\n");

  std::string csv = "suite,config_hash,function,resolution,metric,value\n";
  for (const RunRecord& r : report.records)
    for (const auto& [key, value] : r.metrics)
      csv += report.suite + "," + report.config_hash + "," + r.function + "," +
             std::to_string(r.resolution) + "," + key + "," + format_double(value) + "\n";
  write_text_file((fs::path(out_dir) / (report.suite + ".csv")).string(), csv);

  nlohmann::json schema;
  schema["files"] = {
      {{"name", report.suite + ".csv"},
       {"columns",
        {{{"name", "suite"}, {"type", "string"}, {"description", "experiment suite name"}},
         {{"name", "config_hash"}, {"type", "string"},
          {"description", "hash of the full config, identical on every row of a run"}},
         {{"name", "function"}, {"type", "string"}, {"description", "test function name"}},
         {{"name", "resolution"}, {"type", "int"}, {"description", "grid resolution"}},
         {{"name", "metric"}, {"type", "string"}, {"description", "metric key"}},
         {{"name", "value"}, {"type", "double"}, {"description", "metric value"}}}}},
      {{"name", "report.json"},
       {"columns", nlohmann::json::array()},
       {"description", "full report: config, config_hash, records, verdicts, summary"}}};
  write_text_file((fs::path(out_dir) / "schema.json").string(), schema.dump(2) + "\n");
  return json_path;
}

}  // namespace tanmax

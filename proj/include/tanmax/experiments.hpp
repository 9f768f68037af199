#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tanmax/functions.hpp"
#include "tanmax/space.hpp"

namespace tanmax {

struct SpaceSpec {
  SpaceKind kind = SpaceKind::Circle;
  int resolution = 512;  ///< n for the circle, m for spheres
  int dim_param = 3;     ///< n_dim (real sphere) or n_complex (complex sphere)
};

HomogeneousSpace build_space(const SpaceSpec& spec);

/// Acceptance thresholds. These are artifact policy, fixed here and
/// recorded in every report; loosening any of them never flips a passing
/// verdict to failing.
struct Tolerances {
  double strong_drift = 0.10;    ///< max ratio drift under one refinement
  double weak_drift = 0.10;
  double decay_slope_slack = 0.15;
  double domination_drift = 0.25;
  double weighted_drift = 0.15;
  double local_drift = 0.25;
  double convergence_eps = 0.05;       ///< tail error bound at the finest scale
  double convergence_mono_slack = 1e-3;
  double chebyshev_slack = 1e-12;      ///< floating-rounding slack on exact inequalities
};

struct ExperimentConfig {
  SpaceSpec space;
  double p = 2.0;
  std::optional<double> delta;  ///< default p / gamma
  std::vector<double> A_list = {1, 2, 4, 8};
  FamilySpec family;
  Tolerances tol;
  int lambda_grid = 64;
  int sample_points = 24;      ///< boundary sample size for convergence
  int finest_kernel_level = 9; ///< smallest scale 2^{-k} probed by convergence
  std::uint64_t seed = 1;
  bool refine = false;         ///< also run at 2x resolution and compare
  // local suite geometry (angular halfwidths on the circle) and fixed
  // stress-function parameters
  double local_g_halfwidth = 0.7853981633974483;   // pi/4
  double local_k_halfwidth = 0.39269908169872414;  // pi/8
  double local_bump_radius = 0.15;
  double local_spike_cap = 32.0;

  double delta_or_default(double gamma) const { return delta ? *delta : p / gamma; }
};

void to_json(nlohmann::json& j, const ExperimentConfig& c);
void from_json(const nlohmann::json& j, ExperimentConfig& c);

struct Verdict {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool less_is_pass = true;
  bool pass = false;
};

struct RunRecord {
  std::string function;
  int resolution = 0;
  std::map<std::string, double> metrics;
};

struct ExperimentReport {
  std::string suite;
  nlohmann::json config;
  std::string config_hash;
  std::vector<RunRecord> records;
  std::vector<Verdict> verdicts;
  std::map<std::string, double> summary;
  std::vector<std::string> warnings;
  bool pass = false;

  nlohmann::json to_json() const;
};

/// max_f ||L_delta(p0 f)||_p / ||f||_p with delta = p/gamma, plus the
/// drift of that ratio under one resolution doubling when refine is set.
ExperimentReport run_strong_type(const ExperimentConfig& config);

/// log-log slope of ||L_{A,delta} u||_p against A; A values whose domains
/// are empty on the grid are dropped with a warning.
ExperimentReport run_decay(const ExperimentConfig& config);

/// sup_lambda lambda^p mu{L_delta(p0 f) > lambda} / ||f||_p^p and its
/// refinement drift; for p > 1 also the Chebyshev comparison against the
/// strong constant.
ExperimentReport run_weak_type(const ExperimentConfig& config);

/// Tail error e(t0) of the normalized power integral over approach
/// domains, for continuous test functions.
ExperimentReport run_convergence(const ExperimentConfig& config);

/// Weighted norm ratio ||L_delta(p0 f)||_{nu,p} / ||f||_{mu,p} with
/// nu the log content of exponent beta = p - gamma*delta, plus the
/// Frostman constant of nu.
ExperimentReport run_weighted(const ExperimentConfig& config);

/// Local estimate on a compact K inside an open G:
/// ||L_delta(p0 f)||_{L^p(K)} against ||f||_1 + ||f||_{L^p(G)}.
ExperimentReport run_local(const ExperimentConfig& config);

/// Space axioms: quasimetric estimate and homogeneity constant, with
/// refinement drift of C_mu.
ExperimentReport run_verify_space(const ExperimentConfig& config);

/// Writes report.json, a per-suite CSV table, and the column schema next
/// to it. Returns the report.json path.
std::string write_report(const ExperimentReport& report, const std::string& out_dir);

std::string config_hash(const nlohmann::json& config);

}  // namespace tanmax

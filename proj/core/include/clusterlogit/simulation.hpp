#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clusterlogit/data_model.hpp"
#include "clusterlogit/rng.hpp"
#include "clusterlogit/wild_bootstrap.hpp"

namespace clusterlogit {

// Clustered binary-outcome DGP. The design has a constant, k-2 cluster-level
// binary regressors, and a treatment dummy equal to one in G1 randomly
// chosen clusters; intra-cluster correlation is driven by phi. The intercept
// is either given explicitly or calibrated so that the unconditional mean of
// the outcome equals pi_target.
struct DgpConfig {
  int G = 24;
  int N = 12000;
  double gamma = 0;        // cluster-size unevenness
  int G1 = 8;              // treated clusters, 2 <= G1 <= G
  double phi = 0;          // intra-cluster correlation driver, in [0,1]
  int k = 7;               // total coefficients including constant and treatment
  double beta_slopes = 1;  // value of beta_j for 1 < j < k
  double beta_k = 0;       // treatment coefficient
  std::optional<double> pi_target = 0.5;
  std::optional<double> beta1;  // explicit intercept; overrides pi_target
  std::uint64_t seed = 1;

  void validate() const;
};

// Deterministic allocation of N observations to G clusters:
// N_g = floor(N exp(gamma g / G) / sum_j exp(gamma j / G)) for g < G, with
// the last cluster absorbing the remainder.
std::vector<int> cluster_sizes(int N, int G, double gamma);

struct RegressorDraw {
  Eigen::MatrixXd X;                 // N x k: constant, binaries, treatment
  std::vector<int> treated_clusters; // 0-based, size G1
};

RegressorDraw gen_regressors(const DgpConfig& cfg, const std::vector<int>& sizes,
                             const RngStream& stream_x, const RngStream& stream_treat);

// u_gi = v_g when e_gi <= phi, else v_gi (all U(0,1)); y_gi = 1 iff
// Lambda(index_gi) > u_gi. Draw order: v_g per cluster first, then one
// (e_gi, v_gi) pair per observation in row order.
Eigen::VectorXd gen_outcomes(const Eigen::VectorXd& linear_index, const std::vector<int>& sizes,
                             double phi, const RngStream& stream);

// Root-finds beta_1 so that the simulated unconditional mean of y matches
// pi_target within 0.002, using a large fixed-seed calibration sample.
double calibrate_intercept(const DgpConfig& cfg, double pi_target);

// Full coefficient vector (intercept resolved from pi_target if needed).
Eigen::VectorXd resolve_beta(const DgpConfig& cfg);

// One simulated dataset, a pure function of (cfg, replication).
Dataset simulate_dataset(const DgpConfig& cfg, const Eigen::VectorXd& beta,
                         std::uint64_t replication);

enum class Method {
  CV1_normal,
  CV1_t,
  CV3_t,
  CV3L_t,
  LPM_CV1_t,
  LPM_CV3_t,
  WCLR_C,
  WCLR_S,
  WCLU_C,
  WCLU_S,
  WCR_C,
  WCR_S,
  WCU_C,
  WCU_S,
  // Interval methods: a "rejection" is the interval excluding the true value,
  // so 1 - rate is coverage.
  WCLU_C_ci_stud,
  WCLU_C_ci_se,
  WCLU_S_ci_stud,
  WCLU_S_ci_se,
};

std::string method_name(Method m);
Method method_from_name(const std::string& name);

struct MethodResult {
  Method method = Method::CV1_t;
  long rejections = 0;
  long valid = 0;    // replications where the method produced a decision
  long skipped = 0;  // estimation failures

  double rate() const { return valid > 0 ? static_cast<double>(rejections) / valid : 0.0; }
  double mc_se() const;
};

struct ExperimentResult {
  std::vector<MethodResult> methods;
  long replications = 0;
  int bootstrap_reps = 0;
  double level = 0.05;
  std::uint64_t seed = 0;
};

struct ExperimentOptions {
  int B = 399;
  double level = 0.05;
  int threads = 0;
  // auto: Rademacher iff G >= 13, Webb six-point otherwise.
  std::optional<WeightKind> weights;
};

// R independent replications of: simulate, estimate, test beta_k = true
// value with every requested method. Failures are skipped and counted.
// Output is a pure function of (cfg, methods, R, opts).
ExperimentResult run_rejection_experiment(const DgpConfig& cfg, const std::vector<Method>& methods,
                                          long R, const ExperimentOptions& opts = {});

enum class PlaceboKind { binary, ar1 };

// Placebo-regression experiment on a real dataset: per replication, append a
// generated regressor with no true effect, test its coefficient, and tally
// rejections. binary: equal to one on a random G1-subset of clusters;
// ar1: an AR(1) series per cluster (rho = 1 is the random-walk case),
// standardized before use.
struct PlaceboSpec {
  PlaceboKind kind = PlaceboKind::binary;
  int G1 = 0;        // binary placebo; 0 means G/2
  double rho = 1.0;  // ar1 placebo
  std::uint64_t seed = 1;
};

ExperimentResult run_placebo(const Dataset& d, const PlaceboSpec& spec,
                             const std::vector<Method>& methods, long R,
                             const ExperimentOptions& opts = {});

}  // namespace clusterlogit

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <limits>
#include <vector>

#include "clusterlogit/crve.hpp"
#include "clusterlogit/estimator.hpp"
#include "clusterlogit/rng.hpp"

namespace clusterlogit {

enum class ScoreOrigin {
  logit_restricted,
  logit_unrestricted,
  lpm_restricted,
  lpm_unrestricted,
};

inline bool is_restricted(ScoreOrigin o) {
  return o == ScoreOrigin::logit_restricted || o == ScoreOrigin::lpm_restricted;
}

// Per-cluster (score, information) contributions: the only inputs the wild
// cluster bootstrap engine needs. Binary-response and LPM fits both reduce
// to this shape, so one code path serves WCLR/WCLU and WCR/WCU alike.
struct ScoreContributions {
  Eigen::MatrixXd s;                          // G x k, row g = s_g^T
  std::vector<Eigen::MatrixXd> info_blocks;   // G blocks of k x k
  Eigen::MatrixXd info_total;                 // sum of blocks
  ScoreOrigin origin = ScoreOrigin::logit_unrestricted;
  bool transformed = false;  // classic (-C) when false, score (-S) when true
  int n_obs = 0;
  int n_params = 0;

  int n_clusters() const { return static_cast<int>(s.rows()); }
};

ScoreContributions score_contributions(const FitResult& fit);
ScoreContributions score_contributions(const LpmFitResult& fit);

// Jackknife-transformed scores s_g - J_g b^(g), which undo the distortion
// the estimation step leaves in the empirical scores. For a restricted fit
// the adjustment spans only the free coordinates.
ScoreContributions transform_scores_unrestricted(const FitResult& fit,
                                                 SolveMode mode = SolveMode::exact);
ScoreContributions transform_scores_restricted(const FitResult& rfit,
                                               SolveMode mode = SolveMode::exact);
ScoreContributions transform_scores_unrestricted(const LpmFitResult& fit,
                                                 SolveMode mode = SolveMode::exact);
ScoreContributions transform_scores_restricted(const LpmFitResult& rfit,
                                               SolveMode mode = SolveMode::exact);

enum class WeightKind { rademacher, webb6 };

// Auxiliary weight distribution: mean 0, variance 1. Rademacher is the
// two-point +-1 distribution; webb6 the six-point +-sqrt(3/2), +-1,
// +-sqrt(1/2) distribution recommended once there are 12 or fewer clusters.
struct WeightDistribution {
  WeightKind kind = WeightKind::rademacher;
  std::vector<double> atoms;
  std::vector<double> probabilities;

  static WeightDistribution rademacher();
  static WeightDistribution webb6();
  // Rademacher iff G >= 13, Webb six-point otherwise.
  static WeightDistribution auto_for(int n_clusters);
};

Eigen::VectorXd draw_weights(int n_clusters, const WeightDistribution& dist,
                             std::mt19937_64& engine);

struct BootstrapResult {
  double t_obs = 0;
  Eigen::VectorXd t_star;       // valid replications only
  Eigen::VectorXd beta_star_a;  // a^T b*(v) per valid replication
  double p_sym = 1;
  double p_equal_tail = 1;
  double boot_se = std::numeric_limits<double>::quiet_NaN();  // unrestricted only
  int B = 0;             // valid replication count
  int degenerate = 0;    // replications with zero bootstrap variance
  bool enumeration = false;
  bool restricted_origin = false;
  WeightKind weights = WeightKind::rademacher;
};

struct BootstrapOptions {
  int threads = 0;
  // Full enumeration of the 2^G Rademacher sign assignments replaces random
  // sampling whenever 2^G <= B.
  bool allow_enumeration = true;
};

// Wild cluster bootstrap over score contributions. Per replication b:
//   s*_g = v_g s_g,   b* = J^-1 sum_g s*_g,   w*_g = s*_g - J_g b*,
//   V* = G(N-1)/((G-1)(N-k)) J^-1 (sum_g w*_g w*_g^T) J^-1,
//   t* = a^T b* / sqrt(a^T V* a).
// Replications with a^T V* a = 0 are counted as degenerate and excluded
// from the P-value denominators. `stream` identifies the weight substream;
// replication b always draws from substream(b), so results are independent
// of the worker count.
BootstrapResult run_bootstrap(const ScoreContributions& c, const Eigen::VectorXd& a,
                              double t_obs, int B, const WeightDistribution& dist,
                              const RngStream& stream, const BootstrapOptions& opts = {});

// Symmetric bootstrap P value (1/B) sum 1(|t*| > |t_obs|), strict inequality.
double p_symmetric(double t_obs, const Eigen::VectorXd& t_star);

// Equal-tail bootstrap P value 2/B min(#{t* > t_obs}, #{t* <= t_obs}), capped at 1.
double p_equal_tail(double t_obs, const Eigen::VectorXd& t_star);

// Standard deviation (divisor B-1) of the bootstrap coefficient draws.
// Meaningful only for a bootstrap DGP that does not impose the null;
// RestrictedOrigin otherwise.
double boot_se(const BootstrapResult& result);

}  // namespace clusterlogit

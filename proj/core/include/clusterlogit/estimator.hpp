#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "clusterlogit/data_model.hpp"
#include "clusterlogit/link_family.hpp"

namespace clusterlogit {

struct FitOptions {
  double tol = 1e-10;  // gradient infinity-norm convergence tolerance
  int max_iter = 100;
  // Generalized-inverse mode: rank-deficient information matrices are
  // handled by a Moore-Penrose solve instead of failing, columns that are
  // identically zero on the active sample have their coefficients pinned to
  // zero, and delete-one solves downstream do the same. Required for
  // cluster-level fixed effects.
  bool pseudo_inverse = false;
};

// Pseudo-ML fit together with the per-cluster score vectors s_g and
// information blocks J_g evaluated at the estimate. These contributions are
// the currency consumed by every variance estimator and bootstrap here.
struct FitResult {
  Eigen::VectorXd beta;
  std::vector<std::string> labels;
  double loglik = 0;
  bool converged = false;
  int iterations = 0;
  double gradient_inf_norm = 0;

  Eigen::MatrixXd cluster_scores;             // G x k, row g = s_g(beta)^T
  std::vector<Eigen::MatrixXd> cluster_info;  // G blocks of k x k, J_g(beta)
  Eigen::MatrixXd info_total;                 // J = sum_g J_g
  Eigen::MatrixXd hessian_total;              // H(beta); equals -J for logit
  std::vector<int> rank_deficient_columns;    // pinned columns (pseudo mode)

  LinkKind family = LinkKind::logit;
  std::optional<Restriction> restriction;  // set by fit_restricted
  int n_obs = 0;

  int n_params() const { return static_cast<int>(beta.size()); }
  int n_clusters() const { return static_cast<int>(cluster_scores.rows()); }
};

// OLS fit of the linear probability model, stored in the same per-cluster
// layout as FitResult: scores X_g^T u_g and information blocks X_g^T X_g, so
// the wild bootstrap engine can consume either interchangeably.
struct LpmFitResult {
  Eigen::VectorXd delta;
  std::vector<std::string> labels;
  Eigen::VectorXd residuals;

  Eigen::MatrixXd cluster_scores;
  std::vector<Eigen::MatrixXd> cluster_info;
  Eigen::MatrixXd info_total;  // X^T X

  std::optional<Restriction> restriction;
  int n_obs = 0;

  int n_params() const { return static_cast<int>(delta.size()); }
  int n_clusters() const { return static_cast<int>(cluster_scores.rows()); }
};

struct SeparationVerdict {
  bool separated = false;
  Eigen::VectorXd direction;  // certifying direction, unit norm, when found
};

// Newton maximization of the pseudo-loglikelihood with step-halving. Starts
// at beta = 0 except the intercept, which starts at log(ybar/(1-ybar)).
// Throws Error{Separation} with the certifying direction in the message when
// a perfect classifier is detected, Error{NonConvergence} at max_iter, and
// Error{RankDeficient} on collinear designs outside pseudo-inverse mode.
FitResult fit_mle(const Dataset& d, const LinkFamily& family, const FitOptions& opts = {});

// Fits the model subject to the single linear restriction beta_j = value by
// maximizing over the remaining k-1 coefficients with offset value * X_j.
// The returned scores and information blocks are the full k-dimensional
// contributions evaluated at the restricted estimate.
FitResult fit_restricted(const Dataset& d, const LinkFamily& family, const Restriction& restr,
                         const FitOptions& opts = {});

// Checks whether beta certifies complete separation: every observation's
// predicted probability of its observed outcome exceeds 1 - 1e-8.
SeparationVerdict detect_separation(const Dataset& d, const LinkFamily& family,
                                    const Eigen::VectorXd& beta);

LpmFitResult fit_lpm(const Dataset& d);
LpmFitResult fit_lpm_restricted(const Dataset& d, const Restriction& restr);

enum class SolveMode { exact, pseudo };

// Solves J x = v for symmetric PSD J. Exact mode throws SingularMatrix when
// J is rank deficient; pseudo mode returns the Moore-Penrose solution, whose
// components in the null space of J are zero.
Eigen::VectorXd solve_gram(const Eigen::MatrixXd& J, const Eigen::VectorXd& v, SolveMode mode);
Eigen::MatrixXd solve_gram(const Eigen::MatrixXd& J, const Eigen::MatrixXd& V, SolveMode mode);

namespace detail {
// Shared Newton core; omit_cluster >= 0 drops that cluster's rows (used by
// the jackknife refits), warm_start overrides the default starting point,
// and populate controls whether the per-cluster contributions are filled.
FitResult fit_mle_impl(const Dataset& d, const LinkFamily& family, const FitOptions& opts,
                       int omit_cluster, const std::optional<Restriction>& restr,
                       const Eigen::VectorXd* warm_start, bool populate);
}  // namespace detail

}  // namespace clusterlogit

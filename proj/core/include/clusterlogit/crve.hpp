#pragma once

#include <Eigen/Dense>
#include <vector>

#include "clusterlogit/estimator.hpp"

namespace clusterlogit {

enum class VarianceKind { CV1, CV1H, CV3, CV3J, CV3L, CV3LJ, CV2L, BOOT_SE };
enum class DofReference { t_g_minus_1, normal };
enum class Cv1Style { full, stata };  // stata omits the (N-1)/(N-k) factor
enum class JackknifeCenter { mle, mean };

struct VarianceMatrix {
  Eigen::MatrixXd V;  // k x k, symmetric PSD
  VarianceKind kind = VarianceKind::CV1;
  DofReference dof_reference = DofReference::t_g_minus_1;
  std::vector<int> dropped_clusters;  // delete-one subsamples that separated

  double se(int j) const { return std::sqrt(V(j, j)); }
};

enum class TestKind { wald, t };

struct TestResult {
  double statistic = 0;
  double dof = 0;  // degrees of freedom; infinity selects the normal
  double p_value = 1;
  TestKind kind = TestKind::t;
};

// Sandwich estimator G/(G-1) * (N-1)/(N-k) * J^-1 (sum_g s_g s_g^T) J^-1.
VarianceMatrix cv1(const FitResult& fit, Cv1Style style = Cv1Style::full);
VarianceMatrix cv1(const LpmFitResult& fit, Cv1Style style = Cv1Style::full);

// Same filling with the Hessian as bread. Identical to cv1 for logit, where
// the information matrix equals minus the Hessian; different for probit.
VarianceMatrix cv1h(const FitResult& fit);

struct JackknifeOptions {
  FitOptions fit;           // tol/max_iter/pseudo mode for the refits
  bool warm_start = true;   // start each refit at the full-sample estimate
  int threads = 0;          // 0 = hardware default
  double max_dropped_fraction = 0.10;
};

// Delete-one-cluster coefficient stack from G actual refits. Rows for
// clusters whose subsample contained a perfect classifier are NaN and their
// indices recorded; more than max_dropped_fraction dropped is an error.
struct JackknifeRefits {
  Eigen::MatrixXd beta;  // G x k
  std::vector<int> dropped;
};
JackknifeRefits jackknife_refits(const Dataset& d, const LinkFamily& family,
                                 const FitResult& fit, const JackknifeOptions& opts = {});

// Cluster-jackknife variance (G-1)/G * sum_g (beta^(g) - c)(beta^(g) - c)^T
// with c = beta_hat (mle center) or the mean of the delete-one estimates.
VarianceMatrix cv3(const Dataset& d, const LinkFamily& family, const FitResult& fit,
                   JackknifeCenter center = JackknifeCenter::mle,
                   const JackknifeOptions& opts = {});
VarianceMatrix cv3_from_refits(const JackknifeRefits& refits, const Eigen::VectorXd& beta_hat,
                               JackknifeCenter center);

// Exact delete-one jackknife for the linear probability model, computed by
// downdating the normal equations (no refits needed).
VarianceMatrix cv3_lpm(const LpmFitResult& fit, JackknifeCenter center = JackknifeCenter::mle);

// Linearized delete-one steps b^(g) = -(J - J_g)^-1 s_g, one row per
// cluster. Approximates beta^(g) - beta_hat without refitting. For a
// restricted fit the step is taken in the free coordinates, with the
// restricted coordinate's entry equal to zero.
Eigen::MatrixXd delete_one_linearized(const FitResult& fit, SolveMode mode = SolveMode::exact);
Eigen::MatrixXd delete_one_linearized(const LpmFitResult& fit, SolveMode mode = SolveMode::exact);

// Linearized cluster jackknife (G-1)/G * sum_g b^(g) b^(g)T. Nothing is
// subtracted: the full-sample linearized step is zero by the first-order
// conditions. center = mean gives the CV3LJ variant (not exposed in the CLI).
VarianceMatrix cv3l(const FitResult& fit, SolveMode mode = SolveMode::exact,
                    JackknifeCenter center = JackknifeCenter::mle);

// Bias-reduced linearization: rescales each score by
// (J^T J)^{1/2} (I - A_g)^{-1/2} (J^T J)^{-1/2} with
// A_g = (J^T J)^{-1/2} J_g^T J_g (J^T J)^{-1/2}, then sandwiches with
// (J^T J)^{-1} breads and no leading scalar factor.
VarianceMatrix cv2l(const FitResult& fit);

// Symmetric PSD matrix square root by eigendecomposition, with negative
// eigenvalues floored at zero. power = -0.5 gives the inverse root.
Eigen::MatrixXd symmetric_power(const Eigen::MatrixXd& M, double power);

// Wald statistic (R beta - r)^T (R V R^T)^-1 (R beta - r), chi^2(rows(R)).
TestResult wald(const Eigen::VectorXd& beta, const VarianceMatrix& V, const Restriction& restr);

// t statistic a^T(beta - beta0) / sqrt(a^T V a) for a single restriction,
// with a two-sided P value from t(G-1) or the normal.
TestResult t_stat(const Eigen::VectorXd& beta, const VarianceMatrix& V, const Restriction& restr,
                  int n_clusters, DofReference dof_reference = DofReference::t_g_minus_1);

}  // namespace clusterlogit

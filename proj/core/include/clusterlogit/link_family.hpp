#pragma once

#include <Eigen/Dense>

namespace clusterlogit {

enum class LinkKind { logit, probit };

// Symmetric binary-response family: cdf F with F(x) + F(-x) = 1, density
// f(x) = f(-x), and density derivative f'. The logit member uses closed
// forms throughout; the probit member switches to asymptotic expansions of
// the Mills ratio once |x| is large enough that direct evaluation of
// F(-|x|) underflows.
class LinkFamily {
 public:
  explicit LinkFamily(LinkKind kind) : kind_(kind) {}

  static const LinkFamily& logit();
  static const LinkFamily& probit();

  LinkKind kind() const { return kind_; }

  double cdf(double x) const;       // F(x), in (0,1)
  double density(double x) const;   // f(x)
  double density_deriv(double x) const;  // f'(x)
  double log_cdf(double x) const;   // log F(x), stable for very negative x

  // Diagonal weight of the information matrix: logit Lambda(x)Lambda(-x),
  // general family f^2(x) / (F(x) F(-x)). Strictly positive.
  double weight(double x) const;

  // d/dbeta of the observation loglikelihood at x = row.beta. The scalar
  // multiplying the row is (y - F) f / (F F(-x)); for logit it collapses to
  // y - Lambda(x).
  double score_scalar(double x, double y) const;
  Eigen::VectorXd score_contrib(double x, double y, const Eigen::VectorXd& row) const;

  // Scalar c(x, y) such that the observation Hessian is c * row row^T.
  // y = 0: (f'(-x) F(-x) - f^2(-x)) / F^2(-x)
  // y = 1: (f'(x) F(x) - f^2(x)) / F^2(x)
  double hessian_scalar(double x, double y) const;
  Eigen::MatrixXd hessian_contrib(double x, double y, const Eigen::VectorXd& row) const;

  // Quantile of F; used for the separation certificate threshold.
  double quantile(double p) const;

  // One-pass per-observation evaluation for the Newton loop: observation
  // loglikelihood, score scalar, and curvature = -(d^2 loglik / d eta^2),
  // which is nonnegative for both families.
  struct RowEval {
    double loglik;
    double score;
    double curvature;
  };
  RowEval eval_row(double x, double y) const;

 private:
  LinkKind kind_;
};

}  // namespace clusterlogit

#pragma once

#include <Eigen/Dense>
#include <string>

#include "clusterlogit/crve.hpp"

namespace clusterlogit {

struct Interval {
  double lower = 0;
  double upper = 0;
  double level = 0.95;
  std::string method;
};

// Student t quantile; dof = infinity gives the normal quantile.
double t_quantile(double p, double dof);

// Symmetric interval beta_j +- c_{1-alpha/2} se with the critical value from
// t(G-1) or the normal. dof is ignored for the normal reference.
Interval ci_symmetric(double beta_j, double se, double level, DofReference ref, double dof,
                      const std::string& method = "");

// Studentized bootstrap interval
//   [beta_j - c*_{1-alpha/2} se1, beta_j - c*_{alpha/2} se1]
// with c* the empirical quantiles of the bootstrap t statistics and se1 the
// same standard error used inside the bootstrap. Requires B >= 39.
Interval ci_studentized(double beta_j, double se1, const Eigen::VectorXd& t_star, double level,
                        const std::string& method = "");

// Order-statistic quantile: index (B+1) q when integral (1-based), linear
// interpolation between adjacent order statistics otherwise.
double empirical_quantile(const Eigen::VectorXd& sorted_values, double q);

}  // namespace clusterlogit

#include "clusterlogit/link_family.hpp"

#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <limits>

namespace clusterlogit {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310005024;
constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kAsymptoticCut = 30.0;  // switch to expansions beyond this

double logistic(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

// log Lambda(x) = -log(1 + exp(-x)) without overflow.
double log_logistic(double x) {
  if (x > 0) return -std::log1p(std::exp(-x));
  return x - std::log1p(std::exp(x));
}

double normal_pdf(double x) { return std::exp(-0.5 * x * x) / kSqrt2Pi; }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

// phi(x)/Phi(x) for x << 0 via the asymptotic series
// Phi(x) ~ phi(x)/(-x) (1 - 1/x^2 + 3/x^4 - 15/x^6 + 105/x^8).
double mills_series(double x) {
  const double ix2 = 1.0 / (x * x);
  const double series = 1.0 - ix2 * (1.0 - 3.0 * ix2 * (1.0 - 5.0 * ix2 * (1.0 - 7.0 * ix2)));
  return -x / series;
}

double inverse_mills(double x) {
  if (x < -kAsymptoticCut) return mills_series(x);
  return normal_pdf(x) / normal_cdf(x);
}

double log_normal_cdf(double x) {
  if (x < -kAsymptoticCut) {
    const double ix2 = 1.0 / (x * x);
    const double series = 1.0 - ix2 * (1.0 - 3.0 * ix2 * (1.0 - 5.0 * ix2 * (1.0 - 7.0 * ix2)));
    return -0.5 * x * x - std::log(-x * kSqrt2Pi) + std::log(series);
  }
  return std::log(std::max(normal_cdf(x), std::numeric_limits<double>::min()));
}

// Keep cdf values inside the open unit interval even in the far tails.
double clamp_unit(double p) {
  p = std::max(p, std::numeric_limits<double>::min());
  return std::min(p, std::nextafter(1.0, 0.0));
}

}  // namespace

const LinkFamily& LinkFamily::logit() {
  static const LinkFamily fam(LinkKind::logit);
  return fam;
}

const LinkFamily& LinkFamily::probit() {
  static const LinkFamily fam(LinkKind::probit);
  return fam;
}

double LinkFamily::cdf(double x) const {
  return clamp_unit(kind_ == LinkKind::logit ? logistic(x) : normal_cdf(x));
}

double LinkFamily::density(double x) const {
  if (kind_ == LinkKind::logit) return logistic(x) * logistic(-x);
  return normal_pdf(x);
}

double LinkFamily::density_deriv(double x) const {
  if (kind_ == LinkKind::logit) {
    double l = logistic(x);
    double lm = logistic(-x);
    return l * lm * (lm - l);
  }
  return -x * normal_pdf(x);
}

double LinkFamily::log_cdf(double x) const {
  if (kind_ == LinkKind::logit) return log_logistic(x);
  return log_normal_cdf(x);
}

double LinkFamily::weight(double x) const {
  if (kind_ == LinkKind::logit) return logistic(x) * logistic(-x);
  // f^2 / (F F(-x)) = m(x) m(-x) with m the inverse Mills ratio.
  return inverse_mills(x) * inverse_mills(-x);
}

double LinkFamily::score_scalar(double x, double y) const {
  if (kind_ == LinkKind::logit) return y - logistic(x);
  // (y - F) f / (F F(-x)) collapses to f/F(x) for y = 1, -f/F(-x) for y = 0.
  return y == 1.0 ? inverse_mills(x) : -inverse_mills(-x);
}

Eigen::VectorXd LinkFamily::score_contrib(double x, double y, const Eigen::VectorXd& row) const {
  return score_scalar(x, y) * row;
}

double LinkFamily::hessian_scalar(double x, double y) const {
  const double t = (y == 0.0) ? -x : x;
  if (t > -kAsymptoticCut) {
    const double F = cdf(t);
    const double fd = density(t);
    const double fp = density_deriv(t);
    return fp / F - (fd / F) * (fd / F);
  }
  // Deep tail: the ratios are evaluated in closed form.
  if (kind_ == LinkKind::logit) return -logistic(t) * logistic(-t);
  const double m = inverse_mills(t);
  return -m * (t + m);
}

Eigen::MatrixXd LinkFamily::hessian_contrib(double x, double y, const Eigen::VectorXd& row) const {
  return hessian_scalar(x, y) * (row * row.transpose());
}

double LinkFamily::quantile(double p) const {
  if (kind_ == LinkKind::logit) return std::log(p / (1.0 - p));
  boost::math::normal_distribution<double> norm;
  return boost::math::quantile(norm, p);
}

}  // namespace clusterlogit

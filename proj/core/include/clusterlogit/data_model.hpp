#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusterlogit/errors.hpp"

namespace clusterlogit {

// Binary-outcome regression sample with a cluster structure. Rows are stably
// sorted by cluster, and cluster labels are remapped to dense indices 0..G-1
// (reported as 1..G); the original labels are kept for output.
struct Dataset {
  Eigen::VectorXd y;                       // length N, each element 0 or 1
  Eigen::MatrixXd X;                       // N x k design matrix
  std::vector<std::string> column_names;   // k names
  std::vector<int> cluster_of_row;         // length N, values 0..G-1, sorted
  std::vector<int> cluster_start;          // length G+1, row offsets per cluster
  std::vector<std::string> cluster_names;  // length G, original labels
  std::vector<int> source_row;             // original table row per dataset row
  std::optional<int> intercept_col;        // column of all ones, if any

  int n_obs() const { return static_cast<int>(y.size()); }
  int n_params() const { return static_cast<int>(X.cols()); }
  int n_clusters() const { return static_cast<int>(cluster_names.size()); }
  int cluster_size(int g) const { return cluster_start[g + 1] - cluster_start[g]; }
  Eigen::VectorXi sizes() const;

  int column_index(const std::string& name) const;  // MissingColumn if absent
};

// Hypothesis about the coefficients. Either a single linear restriction
// beta_j = value (the common case, used everywhere) or a full R beta = r
// system for Wald tests.
struct Restriction {
  int index = -1;      // 0-based coefficient of interest
  double value = 0.0;  // hypothesized value

  std::optional<Eigen::MatrixXd> R;  // r x k, full row rank
  std::optional<Eigen::VectorXd> r;

  static Restriction single(int index, double value = 0.0) {
    Restriction out;
    out.index = index;
    out.value = value;
    return out;
  }
};

struct FixedEffectSpec {
  std::string column;               // categorical column name
  std::vector<std::string> levels;  // distinct levels, >= 2
};

// One named input column; numeric columns carry values, categorical ones
// carry raw strings (cluster and fixed-effect variables may be either).
struct InputColumn {
  std::string name;
  std::vector<std::string> raw;
  std::optional<std::vector<double>> numeric;  // set when all cells parse

  const std::vector<double>& require_numeric(const std::string& use) const;
};

struct InputTable {
  std::vector<InputColumn> columns;
  int n_rows() const { return columns.empty() ? 0 : static_cast<int>(columns[0].raw.size()); }
  const InputColumn& column(const std::string& name) const;
  bool has_column(const std::string& name) const;
};

// Builds a Dataset from named columns. The outcome must be exactly 0/1, the
// cluster column needs at least two distinct labels, and any NaN or empty
// cell in a used column is an error (silent row deletion would change G and
// N_g, which govern all the inference here).
Dataset build_dataset(const InputTable& table, const std::string& outcome,
                      const std::vector<std::string>& regressors,
                      const std::string& cluster, bool add_intercept = true);

// Appends one dummy column per level of the fixed effect and removes the
// constant column, which would otherwise be collinear with the dummies.
Dataset expand_fixed_effects(const Dataset& d, const InputTable& table,
                             const FixedEffectSpec& fe);

FixedEffectSpec make_fixed_effect_spec(const InputTable& table, const std::string& column);

// Summary statistics of a sample of values (used for the N_g profile and the
// delete-one coefficient profiles). Quartiles are Tukey hinges: medians of
// the lower and upper halves of the sorted sample.
struct Profile {
  double min = 0, q1 = 0, median = 0, mean = 0, q3 = 0, max = 0;
  double coefvar = 0;  // sd(x)/mean(x), sample standard deviation
};

Profile profile_values(const std::vector<double>& values);
Profile cluster_size_profile(const Dataset& d);

}  // namespace clusterlogit

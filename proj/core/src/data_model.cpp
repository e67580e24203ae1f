#include "clusterlogit/data_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace clusterlogit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonBinaryOutcome: return "NonBinaryOutcome";
    case ErrorCode::SingleCluster: return "SingleCluster";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::MissingValue: return "MissingValue";
    case ErrorCode::NoConstantColumn: return "NoConstantColumn";
    case ErrorCode::EmptyCluster: return "EmptyCluster";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::Separation: return "Separation";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::SingularInformation: return "SingularInformation";
    case ErrorCode::SingularHessian: return "SingularHessian";
    case ErrorCode::SingularSubsampleInformation: return "SingularSubsampleInformation";
    case ErrorCode::TooManyDropped: return "TooManyDropped";
    case ErrorCode::NonPDAdjustment: return "NonPDAdjustment";
    case ErrorCode::UnsupportedRestriction: return "UnsupportedRestriction";
    case ErrorCode::SingularRVR: return "SingularRVR";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::NonPositiveSE: return "NonPositiveSE";
    case ErrorCode::TooFewReplications: return "TooFewReplications";
    case ErrorCode::RestrictedOrigin: return "RestrictedOrigin";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Error";
}

Eigen::VectorXi Dataset::sizes() const {
  Eigen::VectorXi out(n_clusters());
  for (int g = 0; g < n_clusters(); ++g) out[g] = cluster_size(g);
  return out;
}

int Dataset::column_index(const std::string& name) const {
  for (size_t j = 0; j < column_names.size(); ++j)
    if (column_names[j] == name) return static_cast<int>(j);
  fail(ErrorCode::MissingColumn, "no column named '" + name + "'");
}

const std::vector<double>& InputColumn::require_numeric(const std::string& use) const {
  if (!numeric)
    fail(ErrorCode::MissingValue,
         "column '" + name + "' used as " + use + " has missing or non-numeric cells");
  return *numeric;
}

const InputColumn& InputTable::column(const std::string& name) const {
  for (const auto& col : columns)
    if (col.name == name) return col;
  fail(ErrorCode::MissingColumn, "no column named '" + name + "'");
}

bool InputTable::has_column(const std::string& name) const {
  for (const auto& col : columns)
    if (col.name == name) return true;
  return false;
}

Dataset build_dataset(const InputTable& table, const std::string& outcome,
                      const std::vector<std::string>& regressors, const std::string& cluster,
                      bool add_intercept) {
  const int n = table.n_rows();
  if (n == 0) fail(ErrorCode::BadInput, "input has no data rows");

  const auto& yv = table.column(outcome).require_numeric("the outcome");
  for (double v : yv)
    if (v != 0.0 && v != 1.0)
      fail(ErrorCode::NonBinaryOutcome, "outcome '" + outcome + "' contains a value other than 0/1");

  const auto& cluster_col = table.column(cluster);
  for (const auto& cell : cluster_col.raw)
    if (cell.empty()) fail(ErrorCode::MissingValue, "cluster column has empty cells");

  std::vector<const std::vector<double>*> reg_cols;
  for (const auto& name : regressors) {
    const auto& col = table.column(name).require_numeric("a regressor");
    for (double v : col)
      if (!std::isfinite(v)) fail(ErrorCode::MissingValue, "regressor '" + name + "' has NaN");
    reg_cols.push_back(&col);
  }

  // Dense cluster ids in first-appearance order of the labels.
  std::map<std::string, int> label_to_id;
  std::vector<std::string> names;
  std::vector<int> row_cluster(n);
  for (int i = 0; i < n; ++i) {
    auto [it, inserted] = label_to_id.try_emplace(cluster_col.raw[i], static_cast<int>(names.size()));
    if (inserted) names.push_back(cluster_col.raw[i]);
    row_cluster[i] = it->second;
  }
  const int G = static_cast<int>(names.size());
  if (G < 2) fail(ErrorCode::SingleCluster, "cluster column '" + cluster + "' has a single label");

  // Stable sort of row indices by cluster keeps within-cluster order intact.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return row_cluster[a] < row_cluster[b]; });

  Dataset d;
  const int k = static_cast<int>(regressors.size()) + (add_intercept ? 1 : 0);
  d.y.resize(n);
  d.X.resize(n, k);
  d.cluster_of_row.resize(n);
  d.cluster_names = names;
  d.source_row = order;
  if (add_intercept) {
    d.intercept_col = 0;
    d.column_names.push_back("_cons");
  }
  for (const auto& name : regressors) d.column_names.push_back(name);

  for (int i = 0; i < n; ++i) {
    const int src = order[i];
    d.y[i] = yv[src];
    d.cluster_of_row[i] = row_cluster[src];
    int j = 0;
    if (add_intercept) d.X(i, j++) = 1.0;
    for (const auto* col : reg_cols) d.X(i, j++) = (*col)[src];
  }

  d.cluster_start.assign(G + 1, 0);
  for (int i = 0; i < n; ++i) d.cluster_start[d.cluster_of_row[i] + 1]++;
  for (int g = 0; g < G; ++g) d.cluster_start[g + 1] += d.cluster_start[g];

  if (n <= k) fail(ErrorCode::BadInput, "need more observations than coefficients");
  return d;
}

FixedEffectSpec make_fixed_effect_spec(const InputTable& table, const std::string& column) {
  const auto& col = table.column(column);
  std::vector<std::string> levels;
  std::set<std::string> seen;
  for (const auto& cell : col.raw) {
    if (cell.empty()) fail(ErrorCode::MissingValue, "fixed-effect column has empty cells");
    if (seen.insert(cell).second) levels.push_back(cell);
  }
  if (levels.size() < 2)
    fail(ErrorCode::BadInput, "fixed-effect column '" + column + "' needs at least 2 levels");
  return FixedEffectSpec{column, levels};
}

Dataset expand_fixed_effects(const Dataset& d, const InputTable& table, const FixedEffectSpec& fe) {
  if (!d.intercept_col)
    fail(ErrorCode::NoConstantColumn, "fixed-effect expansion requires a constant column");
  const int n = d.n_obs();
  const int k = d.n_params();
  const int L = static_cast<int>(fe.levels.size());
  if (L < 2) fail(ErrorCode::BadInput, "fixed effect needs at least 2 levels");

  const auto& col = table.column(fe.column);
  if (static_cast<int>(col.raw.size()) != n)
    fail(ErrorCode::BadInput, "fixed-effect column length does not match the dataset");
  std::map<std::string, int> level_of;
  for (int l = 0; l < L; ++l) level_of[fe.levels[l]] = l;

  Dataset out = d;
  out.column_names.clear();
  out.X.resize(n, k - 1 + L);
  out.intercept_col.reset();

  // All original columns except the constant, then one dummy per level.
  int dst = 0;
  for (int j = 0; j < k; ++j) {
    if (j == *d.intercept_col) continue;
    out.X.col(dst) = d.X.col(j);
    out.column_names.push_back(d.column_names[j]);
    ++dst;
  }
  out.X.rightCols(L).setZero();
  for (int i = 0; i < n; ++i) {
    const std::string& cell = col.raw[d.source_row[i]];
    auto it = level_of.find(cell);
    if (it == level_of.end())
      fail(ErrorCode::BadInput, "fixed-effect level '" + cell + "' not in the spec");
    out.X(i, dst + it->second) = 1.0;
  }
  for (int l = 0; l < L; ++l) out.column_names.push_back(fe.column + "::" + fe.levels[l]);
  return out;
}

Profile profile_values(const std::vector<double>& values) {
  if (values.empty()) fail(ErrorCode::BadInput, "profile of empty sample");
  std::vector<double> x = values;
  std::sort(x.begin(), x.end());
  const int n = static_cast<int>(x.size());
  auto median_of = [](const std::vector<double>& v, int lo, int hi) {
    // median of v[lo..hi] inclusive
    int m = hi - lo + 1;
    return m % 2 == 1 ? v[lo + m / 2] : 0.5 * (v[lo + m / 2 - 1] + v[lo + m / 2]);
  };
  Profile p;
  p.min = x.front();
  p.max = x.back();
  p.median = median_of(x, 0, n - 1);
  // Tukey hinges: medians of the lower/upper halves, middle element shared
  // when n is odd.
  const int half = (n + 1) / 2;
  p.q1 = median_of(x, 0, half - 1);
  p.q3 = median_of(x, n - half, n - 1);
  double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
  p.mean = mean;
  if (n > 1) {
    double ss = 0;
    for (double v : x) ss += (v - mean) * (v - mean);
    double sd = std::sqrt(ss / (n - 1));
    p.coefvar = mean != 0 ? sd / mean : std::numeric_limits<double>::quiet_NaN();
  } else {
    p.coefvar = 0;
  }
  return p;
}

Profile cluster_size_profile(const Dataset& d) {
  std::vector<double> sizes;
  sizes.reserve(d.n_clusters());
  for (int g = 0; g < d.n_clusters(); ++g) sizes.push_back(d.cluster_size(g));
  return profile_values(sizes);
}

}  // namespace clusterlogit

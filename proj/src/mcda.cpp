#include "citytour/mcda.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "citytour/error.hpp"
#include "citytour/log.hpp"

namespace citytour {

namespace {

// Column means / sample standard deviations shared by the correlation and
// PCA paths. Throws constant_column with the offending column index when
// no name list is available.
struct Standardized {
  Eigen::MatrixXd z;
  Eigen::VectorXd mean;
  Eigen::VectorXd sd;
};

Standardized standardize_columns(const Eigen::Ref<const Eigen::MatrixXd>& X,
                                 const std::vector<std::string>* names) {
  const Eigen::Index n = X.rows();
  const Eigen::Index p = X.cols();
  Standardized s;
  s.mean = X.colwise().mean();
  s.sd.resize(p);
  s.z.resize(n, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    const Eigen::VectorXd centered = X.col(j).array() - s.mean(j);
    const double var = centered.squaredNorm() / static_cast<double>(n - 1);
    s.sd(j) = std::sqrt(var);
    if (!(s.sd(j) > 0.0)) {
      const std::string which =
          names ? (*names)[static_cast<std::size_t>(j)] : "#" + std::to_string(j);
      throw Error(errc::constant_column, "criterion " + which + " is constant");
    }
    s.z.col(j) = centered / s.sd(j);
  }
  return s;
}

Eigen::MatrixXd correlation_from_standardized(const Eigen::MatrixXd& z) {
  const Eigen::Index n = z.rows();
  Eigen::MatrixXd r = (z.transpose() * z) / static_cast<double>(n - 1);
  r = ((r + r.transpose()) / 2.0).eval();  // force exact symmetry
  r = r.cwiseMax(-1.0).cwiseMin(1.0);
  r.diagonal().setOnes();
  return r;
}

Eigen::MatrixXd correlation_impl(const Eigen::Ref<const Eigen::MatrixXd>& X,
                                 const std::vector<std::string>* names) {
  if (X.rows() < 3)
    throw Error(errc::too_few_rows,
                "correlation needs at least 3 rows, got " + std::to_string(X.rows()));
  return correlation_from_standardized(standardize_columns(X, names).z);
}

std::vector<Orientation> orientations_of(const IndicatorMatrix& X) {
  std::vector<Orientation> o;
  o.reserve(X.criteria.size());
  for (const auto& c : X.criteria) o.push_back(c.orientation);
  return o;
}

}  // namespace

Eigen::MatrixXd pearson_correlation(const Eigen::Ref<const Eigen::MatrixXd>& values) {
  return correlation_impl(values, nullptr);
}

CorrelationMatrix correlation_matrix(const IndicatorMatrix& X) {
  validate_indicator_matrix(X);
  std::vector<std::string> names;
  names.reserve(X.criteria.size());
  for (const auto& c : X.criteria) names.push_back(c.name);
  Eigen::MatrixXd r = correlation_impl(X.values, &names);
  return {std::move(names), std::move(r)};
}

double kmo_statistic(const Eigen::Ref<const Eigen::MatrixXd>& R) {
  const Eigen::Index p = R.rows();
  if (p != R.cols() || p < 2)
    throw Error(errc::invalid_parameter, "correlation matrix must be square, >= 2x2");

  double sum_r2 = 0.0;
  for (Eigen::Index i = 0; i < p; ++i)
    for (Eigen::Index j = 0; j < p; ++j)
      if (i != j) sum_r2 += R(i, j) * R(i, j);
  // No shared variance at all: 0/0 defined as 0 (maximally unsuitable).
  if (sum_r2 == 0.0) return 0.0;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(R);
  if (es.info() != Eigen::Success)
    throw Error(errc::eigen_failure, "eigendecomposition of R failed");
  const Eigen::VectorXd lambda = es.eigenvalues();
  const double abs_max = lambda.cwiseAbs().maxCoeff();
  const double abs_min = lambda.cwiseAbs().minCoeff();
  if (!(abs_max > 0.0) || abs_min / abs_max < 1e-12)
    throw Error(errc::singular_matrix,
                "correlation matrix is numerically singular (rcond < 1e-12)");

  // Q = R^-1 through the same eigendecomposition; anti-image partials from Q.
  const Eigen::MatrixXd q = es.eigenvectors() *
                            lambda.cwiseInverse().asDiagonal() *
                            es.eigenvectors().transpose();
  double sum_a2 = 0.0;
  for (Eigen::Index i = 0; i < p; ++i)
    for (Eigen::Index j = 0; j < p; ++j)
      if (i != j) sum_a2 += (q(i, j) * q(i, j)) / (q(i, i) * q(j, j));

  return sum_r2 / (sum_r2 + sum_a2);
}

double kmo_statistic(const CorrelationMatrix& R) { return kmo_statistic(R.r); }

PcaResult pca_reduce(const Eigen::Ref<const Eigen::MatrixXd>& values,
                     double variance_target) {
  if (!(variance_target > 0.0 && variance_target <= 1.0))
    throw Error(errc::invalid_parameter, "pca_variance_target must lie in (0, 1]");
  const Eigen::Index n = values.rows();
  const Eigen::Index p = values.cols();
  if (n < 2)
    throw Error(errc::too_few_rows,
                "PCA needs at least 2 rows, got " + std::to_string(n));
  if (p < 1) throw Error(errc::empty_matrix, "PCA input has no columns");
  if (n <= p)
    log::warn("PCA input has " + std::to_string(n) + " rows for " +
              std::to_string(p) + " columns; components may be unstable");

  const Standardized s = standardize_columns(values, nullptr);
  const Eigen::MatrixXd r = correlation_from_standardized(s.z);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r);
  if (es.info() != Eigen::Success)
    throw Error(errc::eigen_failure, "eigendecomposition of the correlation matrix failed");

  PcaResult out;
  out.eigenvalues.resize(p);
  out.loadings.resize(p, p);
  // Eigen returns ascending order; flip to descending and clamp the
  // numerical floor at zero.
  for (Eigen::Index k = 0; k < p; ++k) {
    out.eigenvalues(k) = std::max(es.eigenvalues()(p - 1 - k), 0.0);
    out.loadings.col(k) = es.eigenvectors().col(p - 1 - k);
  }
  // Sign convention: largest-magnitude entry of each loading is positive.
  for (Eigen::Index k = 0; k < p; ++k) {
    Eigen::Index imax = 0;
    for (Eigen::Index i = 1; i < p; ++i)
      if (std::abs(out.loadings(i, k)) > std::abs(out.loadings(imax, k))) imax = i;
    if (out.loadings(imax, k) < 0.0) out.loadings.col(k) = -out.loadings.col(k);
  }

  out.explained_ratio = out.eigenvalues / static_cast<double>(p);
  out.n_retained = p;
  double cumulative = 0.0;
  for (Eigen::Index k = 0; k < p; ++k) {
    cumulative += out.explained_ratio(k);
    if (cumulative >= variance_target) {
      out.n_retained = k + 1;
      break;
    }
  }
  out.scores = s.z * out.loadings.leftCols(out.n_retained);
  return out;
}

PcaResult pca_reduce(const IndicatorMatrix& X, const DecisionConfig& cfg) {
  validate_indicator_matrix(X);
  validate_decision_config(cfg);
  // Report constant columns by criterion name before the kernel sees them.
  for (Eigen::Index j = 0; j < X.cols(); ++j)
    if (X.values.col(j).minCoeff() == X.values.col(j).maxCoeff())
      throw Error(errc::constant_column,
                  "criterion " + X.criteria[static_cast<std::size_t>(j)].name +
                      " is constant");
  return pca_reduce(X.values, cfg.pca_variance_target);
}

Eigen::VectorXd pca_composite_score(const PcaResult& p) {
  if (p.n_retained < 1 || p.scores.cols() < p.n_retained)
    throw Error(errc::invalid_parameter, "PCA result has no retained components");
  const Eigen::VectorXd raw =
      p.scores.leftCols(p.n_retained) * p.explained_ratio.head(p.n_retained);
  const double lo = raw.minCoeff();
  const double hi = raw.maxCoeff();
  if (hi == lo) return Eigen::VectorXd::Constant(raw.size(), 0.5);
  return (raw.array() - lo) / (hi - lo);
}

Eigen::VectorXd entropy_weights(const Eigen::Ref<const Eigen::MatrixXd>& values,
                                const std::vector<Orientation>& orientations) {
  const Eigen::Index n = values.rows();
  const Eigen::Index p = values.cols();
  if (static_cast<Eigen::Index>(orientations.size()) != p)
    throw Error(errc::invalid_parameter, "orientation list does not match columns");
  if (n < 2)
    throw Error(errc::too_few_rows,
                "entropy weighting needs at least 2 rows, got " + std::to_string(n));

  // Orientation alignment (cost columns flipped to max - x), then min-max.
  Eigen::MatrixXd norm(n, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    Eigen::VectorXd col = values.col(j);
    if (orientations[static_cast<std::size_t>(j)] == Orientation::cost)
      col = (col.maxCoeff() - col.array()).matrix();
    const double lo = col.minCoeff();
    const double hi = col.maxCoeff();
    norm.col(j) = hi > lo ? ((col.array() - lo) / (hi - lo)).matrix().eval()
                          : Eigen::VectorXd::Zero(n).eval();
  }

  const double inv_log_n = 1.0 / std::log(static_cast<double>(n));
  Eigen::VectorXd divergence(p);
  for (Eigen::Index j = 0; j < p; ++j) {
    const double col_sum = norm.col(j).sum();
    double entropy = 0.0;
    if (col_sum == 0.0) {
      entropy = 1.0;  // uniform p over n rows
    } else {
      for (Eigen::Index i = 0; i < n; ++i) {
        const double pij = norm(i, j) / col_sum;
        if (pij > 0.0) entropy -= pij * std::log(pij);
      }
      entropy *= inv_log_n;
    }
    // Rounding can push entropy a hair above 1; keep weights non-negative.
    divergence(j) = std::max(1.0 - entropy, 0.0);
  }

  const double total = divergence.sum();
  if (total == 0.0)
    return Eigen::VectorXd::Constant(p, 1.0 / static_cast<double>(p));
  return divergence / total;
}

Eigen::VectorXd entropy_weights(const IndicatorMatrix& X) {
  validate_indicator_matrix(X);
  return entropy_weights(X.values, orientations_of(X));
}

Eigen::VectorXd topsis_closeness(const Eigen::Ref<const Eigen::MatrixXd>& values,
                                 const std::vector<Orientation>& orientations,
                                 const Eigen::Ref<const Eigen::VectorXd>& weights) {
  const Eigen::Index n = values.rows();
  const Eigen::Index p = values.cols();
  if (n == 0 || p == 0) throw Error(errc::empty_matrix, "TOPSIS input is empty");
  if (static_cast<Eigen::Index>(orientations.size()) != p)
    throw Error(errc::invalid_parameter, "orientation list does not match columns");
  if (weights.size() != p)
    throw Error(errc::weight_mismatch,
                "expected " + std::to_string(p) + " weights, got " +
                    std::to_string(weights.size()));
  if ((weights.array() < 0.0).any())
    throw Error(errc::weight_mismatch, "weights must be non-negative");
  if (std::abs(weights.sum() - 1.0) > 1e-9)
    throw Error(errc::weight_mismatch, "weights must sum to 1");

  Eigen::MatrixXd u(n, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    const double norm = values.col(j).norm();
    u.col(j) = norm > 0.0 ? (values.col(j) * (weights(j) / norm)).eval()
                          : Eigen::VectorXd::Zero(n).eval();
  }

  Eigen::VectorXd ideal(p), anti(p);
  for (Eigen::Index j = 0; j < p; ++j) {
    const double hi = u.col(j).maxCoeff();
    const double lo = u.col(j).minCoeff();
    const bool benefit = orientations[static_cast<std::size_t>(j)] == Orientation::benefit;
    ideal(j) = benefit ? hi : lo;
    anti(j) = benefit ? lo : hi;
  }

  Eigen::VectorXd closeness(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double d_pos = (u.row(i).transpose() - ideal).norm();
    const double d_neg = (u.row(i).transpose() - anti).norm();
    closeness(i) = (d_pos + d_neg) == 0.0 ? 0.5 : d_neg / (d_pos + d_neg);
  }
  return closeness;
}

std::vector<CityScore> topsis_rank(const IndicatorMatrix& X,
                                   const Eigen::Ref<const Eigen::VectorXd>& weights) {
  validate_indicator_matrix(X);
  const Eigen::VectorXd c = topsis_closeness(X.values, orientations_of(X), weights);
  std::vector<CityScore> scores(X.city_ids.size());
  for (std::size_t i = 0; i < X.city_ids.size(); ++i)
    scores[i] = {X.city_ids[i], c(static_cast<Eigen::Index>(i)),
                 ScoreMethod::entropy_topsis, 0};
  rank_city_scores(scores);
  return scores;
}

void rank_city_scores(std::vector<CityScore>& scores) {
  std::sort(scores.begin(), scores.end(), [](const CityScore& a, const CityScore& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.city_id < b.city_id;
  });
  for (std::size_t i = 0; i < scores.size(); ++i)
    scores[i].rank = static_cast<int>(i) + 1;
}

EvaluationResult evaluate_cities(const IndicatorMatrix& X, const DecisionConfig& cfg) {
  validate_indicator_matrix(X);
  validate_decision_config(cfg);

  EvaluationResult out;
  out.kmo = kmo_statistic(correlation_matrix(X));

  if (out.kmo > cfg.kmo_threshold) {
    out.method = ScoreMethod::pca;
    const PcaResult pca = pca_reduce(X, cfg);
    const Eigen::VectorXd composite = pca_composite_score(pca);
    out.scores.resize(X.city_ids.size());
    for (std::size_t i = 0; i < X.city_ids.size(); ++i)
      out.scores[i] = {X.city_ids[i], composite(static_cast<Eigen::Index>(i)),
                       ScoreMethod::pca, 0};
    rank_city_scores(out.scores);
  } else {
    out.method = ScoreMethod::entropy_topsis;
    out.scores = topsis_rank(X, entropy_weights(X));
  }
  log::debug("evaluate_cities: kmo=" + std::to_string(out.kmo) +
             " method=" + score_method_name(out.method));
  return out;
}

std::vector<CityScore> select_top_cities(const std::vector<CityScore>& scores,
                                         int top_n) {
  if (top_n < 1) throw Error(errc::invalid_parameter, "top_n must be >= 1");
  std::vector<CityScore> sorted = scores;
  std::sort(sorted.begin(), sorted.end(),
            [](const CityScore& a, const CityScore& b) { return a.rank < b.rank; });
  const std::size_t keep = std::min<std::size_t>(sorted.size(),
                                                 static_cast<std::size_t>(top_n));
  sorted.resize(keep);
  return sorted;
}

}  // namespace citytour

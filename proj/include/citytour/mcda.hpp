#ifndef CITYTOUR_MCDA_HPP
#define CITYTOUR_MCDA_HPP

#include <Eigen/Core>
#include <string>
#include <vector>

#include "citytour/types.hpp"

namespace citytour {

struct CorrelationMatrix {
  std::vector<std::string> names;
  Eigen::MatrixXd r;  // symmetric, unit diagonal, entries in [-1, 1]
};

// Pearson correlations of the columns of `values`.
// Requires >= 3 rows (too_few_rows) and non-constant columns
// (constant_column, reported by index in this overload).
Eigen::MatrixXd pearson_correlation(const Eigen::Ref<const Eigen::MatrixXd>& values);

CorrelationMatrix correlation_matrix(const IndicatorMatrix& X);

// Kaiser-Meyer-Olkin sampling adequacy in [0, 1]:
//   KMO = sum_{i!=j} r_ij^2 / (sum_{i!=j} r_ij^2 + sum_{i!=j} a_ij^2)
// where a_ij = -q_ij / sqrt(q_ii q_jj) and Q = R^-1.
// An R with all off-diagonal entries zero has no shared variance at all;
// the 0/0 ratio is defined as 0. Throws singular_matrix when the
// reciprocal condition number of R falls below 1e-12.
double kmo_statistic(const Eigen::Ref<const Eigen::MatrixXd>& R);
double kmo_statistic(const CorrelationMatrix& R);

struct PcaResult {
  // All p loading vectors as columns, descending eigenvalue order. Each is
  // unit norm with its largest-magnitude entry made positive.
  Eigen::MatrixXd loadings;
  Eigen::VectorXd eigenvalues;       // descending, clamped at 0
  Eigen::VectorXd explained_ratio;   // eigenvalue / trace, all p entries
  Eigen::Index n_retained = 0;       // prefix reaching the variance target
  Eigen::MatrixXd scores;            // standardized X * retained loadings
};

// Standardizes columns (zero mean, unit sample variance), eigendecomposes
// their correlation matrix and retains the smallest component prefix whose
// cumulative explained ratio reaches `variance_target` (at least one).
PcaResult pca_reduce(const Eigen::Ref<const Eigen::MatrixXd>& values,
                     double variance_target);
PcaResult pca_reduce(const IndicatorMatrix& X, const DecisionConfig& cfg);

// Explained-ratio-weighted sum of retained component scores, min-max
// rescaled to [0, 1]. A constant raw vector maps to all 0.5.
Eigen::VectorXd pca_composite_score(const PcaResult& p);

// Entropy weights over criteria. Cost columns are flipped (max - x), all
// columns min-max normalized, then
//   p_ij = x_ij / sum_i x_ij   (zero-sum column -> uniform p)
//   e_j  = -(1/ln n) sum_i p_ij ln p_ij
//   w_j  = (1 - e_j) / sum_k (1 - e_k)   (all-zero divergence -> uniform w)
Eigen::VectorXd entropy_weights(const Eigen::Ref<const Eigen::MatrixXd>& values,
                                const std::vector<Orientation>& orientations);
Eigen::VectorXd entropy_weights(const IndicatorMatrix& X);

// TOPSIS closeness per row: vector-normalize columns, weight them, take
// Euclidean distances to the ideal/anti-ideal points (column max/min for
// benefit criteria, min/max for cost) and return D- / (D+ + D-).
// Rows equal to both points score 0.5.
Eigen::VectorXd topsis_closeness(const Eigen::Ref<const Eigen::MatrixXd>& values,
                                 const std::vector<Orientation>& orientations,
                                 const Eigen::Ref<const Eigen::VectorXd>& weights);

std::vector<CityScore> topsis_rank(const IndicatorMatrix& X,
                                   const Eigen::Ref<const Eigen::VectorXd>& weights);

struct EvaluationResult {
  std::vector<CityScore> scores;  // descending score, ranks 1..n
  ScoreMethod method = ScoreMethod::entropy_topsis;
  double kmo = 0.0;
};

// KMO-gated pipeline: KMO > cfg.kmo_threshold routes to PCA composite
// scoring, otherwise to entropy-weighted TOPSIS.
EvaluationResult evaluate_cities(const IndicatorMatrix& X, const DecisionConfig& cfg);

// First min(top_n, n) entries by rank.
std::vector<CityScore> select_top_cities(const std::vector<CityScore>& scores,
                                         int top_n);

// Sorts descending by score with city_id ascending as tie-break and
// assigns 1-based ranks.
void rank_city_scores(std::vector<CityScore>& scores);

}  // namespace citytour

#endif  // CITYTOUR_MCDA_HPP

#ifndef CITYTOUR_TYPES_HPP
#define CITYTOUR_TYPES_HPP

#include <Eigen/Core>
#include <string>
#include <vector>

namespace citytour {

// Geographic coordinate in degrees. lat in [-90, 90], lon in (-180, 180].
struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;

  bool operator==(const GeoPoint&) const = default;
};

// Validates latitude and wraps longitude into (-180, 180].
// Throws Error(invalid_parameter) for non-finite input or |lat| > 90.
GeoPoint make_geo_point(double lat_deg, double lon_deg);

struct City {
  std::string id;
  std::string name;
  GeoPoint location;

  bool operator==(const City&) const = default;
};

struct Attraction {
  std::string id;
  std::string city_id;
  std::string name;
  double rating = 0.0;            // [0, 5]
  double ticket_price = 0.0;      // >= 0
  double visit_duration_h = 0.0;  // > 0
  double open_hour = 0.0;         // [0, 24)
  double close_hour = 24.0;       // (open_hour, 24]

  bool operator==(const Attraction&) const = default;
};

// Throws Error(invalid_parameter) naming the violated field.
void validate_attraction(const Attraction& a);

enum class Orientation { benefit, cost };

const char* orientation_name(Orientation o) noexcept;
Orientation parse_orientation(const std::string& s);  // throws invalid_parameter

struct Criterion {
  std::string name;
  Orientation orientation = Orientation::benefit;

  bool operator==(const Criterion&) const = default;
};

// Rows = cities, columns = criteria. All MCDA math consumes this.
struct IndicatorMatrix {
  std::vector<std::string> city_ids;
  std::vector<Criterion> criteria;
  Eigen::MatrixXd values;

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index cols() const { return values.cols(); }
};

// Rectangular, >= 2x2, all values finite. Throws empty_matrix when there is
// no data at all, invalid_parameter otherwise.
void validate_indicator_matrix(const IndicatorMatrix& X);

enum class ScoreMethod { pca, entropy_topsis };

const char* score_method_name(ScoreMethod m) noexcept;

struct CityScore {
  std::string city_id;
  double score = 0.0;  // [0, 1]
  ScoreMethod method = ScoreMethod::entropy_topsis;
  int rank = 0;  // 1-based, descending score, ties by city_id ascending

  bool operator==(const CityScore&) const = default;
};

struct DecisionConfig {
  double kmo_threshold = 0.6;
  double pca_variance_target = 0.85;
  int top_n = 50;
};

void validate_decision_config(const DecisionConfig& cfg);

}  // namespace citytour

#endif  // CITYTOUR_TYPES_HPP

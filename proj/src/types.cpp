#include "citytour/types.hpp"

#include <cmath>

#include "citytour/error.hpp"

namespace citytour {

GeoPoint make_geo_point(double lat_deg, double lon_deg) {
  if (!std::isfinite(lat_deg) || !std::isfinite(lon_deg))
    throw Error(errc::invalid_parameter, "coordinate is not finite");
  if (lat_deg < -90.0 || lat_deg > 90.0)
    throw Error(errc::invalid_parameter,
                "latitude " + std::to_string(lat_deg) + " outside [-90, 90]");
  // Wrap longitude into (-180, 180].
  double lon = std::fmod(lon_deg, 360.0);
  if (lon <= -180.0) lon += 360.0;
  if (lon > 180.0) lon -= 360.0;
  return {lat_deg, lon};
}

void validate_attraction(const Attraction& a) {
  auto bad = [&](const std::string& what) {
    throw Error(errc::invalid_parameter, "attraction " + a.id + ": " + what);
  };
  if (a.id.empty()) bad("empty id");
  if (a.city_id.empty()) bad("empty city_id");
  if (!(a.rating >= 0.0 && a.rating <= 5.0)) bad("rating outside [0, 5]");
  if (!(a.ticket_price >= 0.0)) bad("negative ticket_price");
  if (!(a.visit_duration_h > 0.0)) bad("visit_duration must be > 0");
  if (!(a.open_hour >= 0.0 && a.open_hour < 24.0)) bad("open_hour outside [0, 24)");
  if (!(a.close_hour > a.open_hour && a.close_hour <= 24.0))
    bad("close_hour must lie in (open_hour, 24]");
}

const char* orientation_name(Orientation o) noexcept {
  return o == Orientation::benefit ? "benefit" : "cost";
}

Orientation parse_orientation(const std::string& s) {
  if (s == "benefit") return Orientation::benefit;
  if (s == "cost") return Orientation::cost;
  throw Error(errc::invalid_parameter, "orientation must be benefit or cost, got '" + s + "'");
}

const char* score_method_name(ScoreMethod m) noexcept {
  return m == ScoreMethod::pca ? "pca" : "entropy_topsis";
}

void validate_indicator_matrix(const IndicatorMatrix& X) {
  if (X.values.size() == 0)
    throw Error(errc::empty_matrix, "indicator matrix has no data");
  if (X.values.rows() != static_cast<Eigen::Index>(X.city_ids.size()))
    throw Error(errc::invalid_parameter, "city_ids do not match matrix rows");
  if (X.values.cols() != static_cast<Eigen::Index>(X.criteria.size()))
    throw Error(errc::invalid_parameter, "criteria do not match matrix columns");
  if (X.values.rows() < 2 || X.values.cols() < 2)
    throw Error(errc::invalid_parameter,
                "indicator matrix must be at least 2x2 for MCDA");
  if (!X.values.allFinite())
    throw Error(errc::invalid_parameter, "indicator matrix has non-finite values");
}

void validate_decision_config(const DecisionConfig& cfg) {
  if (!(cfg.kmo_threshold > 0.0 && cfg.kmo_threshold < 1.0))
    throw Error(errc::invalid_parameter, "kmo_threshold must lie in (0, 1)");
  if (!(cfg.pca_variance_target > 0.0 && cfg.pca_variance_target <= 1.0))
    throw Error(errc::invalid_parameter, "pca_variance_target must lie in (0, 1]");
  if (cfg.top_n < 1)
    throw Error(errc::invalid_parameter, "top_n must be >= 1");
}

}  // namespace citytour

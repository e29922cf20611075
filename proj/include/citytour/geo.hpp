#ifndef CITYTOUR_GEO_HPP
#define CITYTOUR_GEO_HPP

#include <algorithm>
#include <cmath>
#include <numbers>

#include "citytour/error.hpp"
#include "citytour/types.hpp"

namespace citytour {

// Spherical Earth radius in km. Kept at the round constant used by the
// great-circle formula below, not a geodetic datum value.
inline constexpr double kEarthRadiusKm = 6371.0;

// Great-circle distance:
//   d = 2 R asin(sqrt(sin^2(dphi/2) + cos(phi1) cos(phi2) sin^2(dlam/2)))
// The radicand is clamped into [0, 1] so the function stays total near
// antipodal points where rounding can push it just outside.
inline double haversine_km(const GeoPoint& a, const GeoPoint& b) {
  constexpr double deg = std::numbers::pi / 180.0;
  const double phi1 = a.lat * deg;
  const double phi2 = b.lat * deg;
  const double dphi = (b.lat - a.lat) * deg;
  const double dlam = (b.lon - a.lon) * deg;

  const double sp = std::sin(dphi / 2.0);
  const double sl = std::sin(dlam / 2.0);
  double h = sp * sp + std::cos(phi1) * std::cos(phi2) * sl * sl;
  h = std::clamp(h, 0.0, 1.0);
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

struct TravelRates {
  double rail_speed_kmh = 300.0;
  double rail_cost_per_km = 0.5;
  double local_transfer_h = 1.0;  // added per city arrival
};

inline void validate_travel_rates(const TravelRates& r) {
  if (!(r.rail_speed_kmh > 0.0))
    throw Error(errc::invalid_parameter, "rail_speed must be > 0");
  if (!(r.rail_cost_per_km >= 0.0))
    throw Error(errc::invalid_parameter, "rail_cost_rate must be >= 0");
  if (!(r.local_transfer_h >= 0.0))
    throw Error(errc::invalid_parameter, "local_transfer_time must be >= 0");
}

struct RailLeg {
  double hours = 0.0;
  double cost = 0.0;
};

// hours = distance / speed + local transfer; cost = distance * rate.
inline RailLeg rail_leg(const GeoPoint& a, const GeoPoint& b,
                        const TravelRates& rates) {
  const double km = haversine_km(a, b);
  return {km / rates.rail_speed_kmh + rates.local_transfer_h,
          km * rates.rail_cost_per_km};
}

}  // namespace citytour

#endif  // CITYTOUR_GEO_HPP

#include "citytour/geo.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "citytour/error.hpp"
#include "citytour/random.hpp"

using citytour::GeoPoint;
using citytour::haversine_km;
using citytour::make_geo_point;
using citytour::rail_leg;
using citytour::TravelRates;

namespace {

// Frozen from a 50-digit evaluation of the displayed formula.
constexpr double kMeridianDegreeKm = 111.19492664455874;     // (0,0)-(1,0)
constexpr double kAntipodalKm = 20015.086796020572;          // pi * 6371
constexpr double kBeijingShanghaiKm = 1067.3101709271293;

const GeoPoint kBeijing{39.9042, 116.4074};
const GeoPoint kShanghai{31.2304, 121.4737};

GeoPoint random_point(std::mt19937_64& rng) {
  return {citytour::uniform_in(rng, -90.0, 90.0),
          citytour::uniform_in(rng, -180.0, 180.0)};
}

}  // namespace

TEST_CASE("haversine identity and oracle fixtures") {
  CHECK(haversine_km({0, 0}, {0, 0}) == 0.0);
  CHECK(haversine_km(kBeijing, kBeijing) == 0.0);

  CHECK(std::abs(haversine_km({0, 0}, {1, 0}) - kMeridianDegreeKm) < 1e-9);
  CHECK(std::abs(haversine_km({0, 0}, {0, 180}) - kAntipodalKm) < 1e-6);
  CHECK(std::abs(haversine_km(kBeijing, kShanghai) - kBeijingShanghaiKm) < 1e-6);
}

TEST_CASE("haversine symmetry, range, triangle inequality") {
  std::mt19937_64 rng(20240601);
  constexpr double kMaxKm = std::numbers::pi * citytour::kEarthRadiusKm;
  for (int i = 0; i < 2000; ++i) {
    const GeoPoint a = random_point(rng);
    const GeoPoint b = random_point(rng);
    const GeoPoint c = random_point(rng);
    const double ab = haversine_km(a, b);
    CHECK(ab == haversine_km(b, a));
    CHECK(ab >= 0.0);
    CHECK(ab <= kMaxKm + 1e-9);
    CHECK(ab <= haversine_km(a, c) + haversine_km(c, b) + 1e-6);
  }
}

TEST_CASE("geo point validation and longitude wrapping") {
  CHECK_THROWS_AS(make_geo_point(95.0, 0.0), citytour::Error);
  CHECK_THROWS_AS(make_geo_point(-90.5, 0.0), citytour::Error);
  CHECK_THROWS_AS(make_geo_point(std::nan(""), 0.0), citytour::Error);

  CHECK(make_geo_point(0.0, 270.0).lon == -90.0);
  CHECK(make_geo_point(0.0, -180.0).lon == 180.0);
  CHECK(make_geo_point(0.0, 540.0).lon == 180.0);
  CHECK(make_geo_point(45.0, 90.0).lon == 90.0);

  // Wrapped longitudes describe the same meridian gap.
  const double direct = haversine_km({0, 170}, {0, -170});
  const double unwrapped = haversine_km({0, 170}, {0, 190});
  CHECK(std::abs(direct - unwrapped) < 1e-9);
}

TEST_CASE("rail leg arithmetic and defaults") {
  const TravelRates rates{};  // 300 km/h, 0.5 / km, 1 h transfer
  SUBCASE("zero distance still pays the local transfer") {
    const auto leg = rail_leg({30, 100}, {30, 100}, rates);
    CHECK(leg.hours == 1.0);
    CHECK(leg.cost == 0.0);
  }
  SUBCASE("300 km at defaults") {
    // Meridian arc sized to exactly 300 km of great-circle distance.
    const double dlat = 300.0 / (std::numbers::pi * citytour::kEarthRadiusKm / 180.0);
    const auto leg = rail_leg({0, 0}, {dlat, 0}, rates);
    CHECK(std::abs(leg.hours - 2.0) < 1e-9);
    CHECK(std::abs(leg.cost - 150.0) < 1e-7);
  }
  SUBCASE("composes the haversine oracle") {
    const auto leg = rail_leg(kBeijing, kShanghai, rates);
    CHECK(std::abs(leg.hours - (kBeijingShanghaiKm / 300.0 + 1.0)) < 1e-8);
    CHECK(std::abs(leg.cost - kBeijingShanghaiKm * 0.5) < 1e-6);
  }
}

TEST_CASE("rail leg monotone in distance") {
  const TravelRates rates{};
  double last_hours = 0.0;
  double last_cost = 0.0;
  for (int deg = 0; deg <= 90; deg += 5) {
    const auto leg = rail_leg({0, 0}, {static_cast<double>(deg), 0}, rates);
    CHECK(leg.hours >= last_hours);
    CHECK(leg.cost >= last_cost);
    last_hours = leg.hours;
    last_cost = leg.cost;
  }
}

TEST_CASE("travel rate validation") {
  TravelRates r;
  r.rail_speed_kmh = 0.0;
  CHECK_THROWS_AS(citytour::validate_travel_rates(r), citytour::Error);
  r = {};
  r.rail_cost_per_km = -1.0;
  CHECK_THROWS_AS(citytour::validate_travel_rates(r), citytour::Error);
  r = {};
  r.local_transfer_h = -0.1;
  CHECK_THROWS_AS(citytour::validate_travel_rates(r), citytour::Error);
}

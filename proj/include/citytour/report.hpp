#ifndef CITYTOUR_REPORT_HPP
#define CITYTOUR_REPORT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "citytour/planner.hpp"
#include "citytour/types.hpp"

namespace citytour {

// scores.csv: city_id,score,method,rank,kmo
std::string scores_to_csv(const std::vector<CityScore>& scores, double kmo);
struct LoadedScores {
  std::vector<CityScore> scores;
  double kmo = 0.0;
};
LoadedScores load_scores(const std::filesystem::path& path);

// plan.json, fixed key set:
//   entry_city, legs[] {from, to, travel_hours, rest_hours,
//   attractions[] {id, name, rating, ticket_price, visit_hours}, leg_cost},
//   total_hours, total_cost, attraction_count, visited_cities[]
nlohmann::ordered_json plan_to_json(const ItineraryPlan& plan,
                                    const std::vector<Attraction>& attractions);

// FeatureCollection: a Point per visited city (name, arrival_elapsed_hours)
// plus a LineString through them when the route has at least two cities.
nlohmann::ordered_json plan_to_geojson(const ItineraryPlan& plan,
                                       const std::vector<City>& cities);

// Re-derives every plan invariant from the JSON legs array: totals equal
// the leg sums exactly, total_hours <= budget, no repeated city, each
// leg_cost decomposes into rail cost plus tickets, and every attraction
// belongs to the leg's city. Returns human-readable violations, empty when
// the plan checks out.
std::vector<std::string> verify_plan_json(const nlohmann::json& plan,
                                          const std::vector<City>& cities,
                                          const std::vector<Attraction>& attractions,
                                          const PlannerConfig& cfg);

}  // namespace citytour

#endif  // CITYTOUR_REPORT_HPP

#ifndef CITYTOUR_PLANNER_HPP
#define CITYTOUR_PLANNER_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "citytour/geo.hpp"
#include "citytour/types.hpp"

namespace citytour {

struct PlannerConfig {
  double total_budget_h = 144.0;  // wall-clock trip window
  double day_start = 8.0;         // visits allowed from this hour of day
  double day_end = 20.0;          // ... until this hour of day
  TravelRates rates{};
  int attractions_per_city = 1;
  int multi_start_k = 1;
};

void validate_planner_config(const PlannerConfig& cfg);

// Wall-clock trip time. The trip starts at day_start on day zero, so
// time-of-day is (day_start + elapsed) mod 24. Travel may run at night;
// visits may not.
struct TripClock {
  double elapsed = 0.0;  // hours since trip start

  double time_of_day(const PlannerConfig& cfg) const;
};

struct Leg {
  std::string from_city;
  std::string to_city;
  double travel_hours = 0.0;  // rail time + local transfer; 0 for the entry leg
  std::vector<std::string> attraction_ids;
  double visit_hours = 0.0;  // sum of visit durations
  double rest_hours = 0.0;   // waiting for day windows / opening hours
  double leg_cost = 0.0;     // rail cost + sum of ticket prices

  bool operator==(const Leg&) const = default;
};

struct ItineraryPlan {
  std::string entry_city;
  std::vector<Leg> legs;
  std::vector<std::string> visited_cities;  // entry first, distinct, in order
  std::vector<std::string> visited_attractions;
  double total_hours = 0.0;
  double total_cost = 0.0;
  int attraction_count = 0;

  bool operator==(const ItineraryPlan&) const = default;
};

// City hosting the highest-rated attraction among the candidates; ties go
// to the lower ticket price, then the smaller city id.
// Throws empty_candidate_set when no candidate has an attraction.
std::string select_entry_city(const std::vector<Attraction>& attractions,
                              const std::vector<std::string>& candidate_cities);

struct AttractionSelection {
  std::vector<std::string> attraction_ids;
  double visit_hours = 0.0;
  double ticket_cost = 0.0;
  double rest_hours = 0.0;   // waiting inserted before/between visits
  double end_elapsed = 0.0;  // clock after the last selected visit
};

// Walks the city's attractions in (rating desc, ticket asc, id asc) order
// and schedules up to cfg.attractions_per_city of them. A visit must fit
// entirely inside [open, close] intersected with the day window; when the
// current day cannot host it the visit rolls to the next morning and the
// gap counts as rest. Anything that cannot fit within the remaining budget
// is skipped. May select nothing.
AttractionSelection pick_attractions(const std::vector<Attraction>& city_attractions,
                                     const TripClock& clock,
                                     const PlannerConfig& cfg);

// Greedy route construction: start at select_entry_city, then repeatedly
// simulate a leg to every unvisited candidate and commit the feasible one
// with the lowest leg cost (ties: higher summed rating, then city id).
// A leg is feasible when it selects at least one attraction and the plan
// still ends within the budget.
ItineraryPlan plan_greedy(const std::vector<City>& cities,
                          const std::vector<Attraction>& attractions,
                          const std::vector<std::string>& candidate_cities,
                          const PlannerConfig& cfg);

// plan_greedy from each of the k entry cities hosting the k highest-rated
// attractions (distinct cities), keeping the best plan under the objective
// order: attraction count desc, total cost asc, summed rating desc,
// visited-city sequence lexicographic asc.
ItineraryPlan plan_multistart(const std::vector<City>& cities,
                              const std::vector<Attraction>& attractions,
                              const std::vector<std::string>& candidate_cities,
                              const PlannerConfig& cfg);

// Exhaustive oracle: simulates every ordered subset of candidates under
// the identical clock/leg model and returns the objective optimum.
// Guarded to <= 8 candidates (too_many_cities).
ItineraryPlan plan_exhaustive(const std::vector<City>& cities,
                              const std::vector<Attraction>& attractions,
                              const std::vector<std::string>& candidate_cities,
                              const PlannerConfig& cfg);

inline constexpr int kExhaustiveCityLimit = 8;

// Visits every non-empty ordered subset of {0..n_items-1} exactly once
// (each prefix of each permutation, depth-first). Exposed so tests can
// check the enumeration count against sum_{k=1..n} n!/(n-k)!.
void for_each_ordered_subset(int n_items,
                             const std::function<void(std::span<const int>)>& visit);

struct PlanObjective {
  int attraction_count = 0;
  double total_cost = 0.0;
  double rating_sum = 0.0;
  std::vector<std::string> visited_cities;
};

PlanObjective plan_objective(const ItineraryPlan& plan,
                             const std::vector<Attraction>& attractions);

// Strict "a beats b" under the planner's objective order.
bool objective_better(const PlanObjective& a, const PlanObjective& b);

}  // namespace citytour

#endif  // CITYTOUR_PLANNER_HPP

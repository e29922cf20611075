#include "citytour/planner.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "citytour/error.hpp"

namespace citytour {

void validate_planner_config(const PlannerConfig& cfg) {
  if (!(cfg.total_budget_h > 0.0))
    throw Error(errc::invalid_parameter, "total_budget must be > 0");
  if (!(cfg.day_start >= 0.0 && cfg.day_start < cfg.day_end && cfg.day_end <= 24.0))
    throw Error(errc::invalid_parameter,
                "day window must satisfy 0 <= day_start < day_end <= 24");
  validate_travel_rates(cfg.rates);
  if (cfg.attractions_per_city < 1)
    throw Error(errc::invalid_parameter, "attractions_per_city must be >= 1");
  if (cfg.multi_start_k < 1)
    throw Error(errc::invalid_parameter, "multi_start_k must be >= 1");
}

double TripClock::time_of_day(const PlannerConfig& cfg) const {
  return std::fmod(cfg.day_start + elapsed, 24.0);
}

namespace {

// rating desc, ticket asc, then ids for full determinism.
bool attraction_priority_less(const Attraction& a, const Attraction& b) {
  if (a.rating != b.rating) return a.rating > b.rating;
  if (a.ticket_price != b.ticket_price) return a.ticket_price < b.ticket_price;
  if (a.city_id != b.city_id) return a.city_id < b.city_id;
  return a.id < b.id;
}

struct Window {
  double start = 0.0;
  double end = 0.0;
};

// [open, close] intersected with the day window; empty optional when the
// visit can never fit on any day.
std::optional<Window> effective_window(const Attraction& a, const PlannerConfig& cfg) {
  const Window w{std::max(a.open_hour, cfg.day_start),
                 std::min(a.close_hour, cfg.day_end)};
  if (a.visit_duration_h > w.end - w.start) return std::nullopt;
  return w;
}

// Earliest elapsed time >= ready at which a visit of `dur` hours fits
// inside `w`: wait for opening, start immediately, or roll to the next
// morning's window start.
double earliest_visit_start(double ready, const Window& w, double dur,
                            const PlannerConfig& cfg) {
  const double tod = std::fmod(cfg.day_start + ready, 24.0);
  if (tod < w.start) return ready + (w.start - tod);
  if (tod + dur <= w.end) return ready;
  return ready + (24.0 - tod) + w.start;
}

// One leg's worth of attraction visits. `base_elapsed` is the committed
// plan clock before the leg, `travel_hours` the leg's travel; the budget
// check mirrors the plan-total accumulation bit for bit, so a committed
// plan can never exceed the budget.
AttractionSelection pick_impl(const std::vector<const Attraction*>& sorted,
                              double base_elapsed, double travel_hours,
                              const PlannerConfig& cfg) {
  AttractionSelection sel;
  double ready = base_elapsed + travel_hours;
  double rest_sum = 0.0;
  double visit_sum = 0.0;
  double ticket_sum = 0.0;
  for (const Attraction* a : sorted) {
    if (static_cast<int>(sel.attraction_ids.size()) >= cfg.attractions_per_city)
      break;
    const auto w = effective_window(*a, cfg);
    if (!w) continue;
    const double start = earliest_visit_start(ready, *w, a->visit_duration_h, cfg);
    const double wait = start - ready;
    const double end_if_taken =
        base_elapsed + (travel_hours + (rest_sum + wait) + (visit_sum + a->visit_duration_h));
    if (end_if_taken > cfg.total_budget_h) continue;
    sel.attraction_ids.push_back(a->id);
    rest_sum += wait;
    visit_sum += a->visit_duration_h;
    ticket_sum += a->ticket_price;
    ready = start + a->visit_duration_h;
  }
  sel.visit_hours = visit_sum;
  sel.rest_hours = rest_sum;
  sel.ticket_cost = ticket_sum;
  sel.end_elapsed = ready;
  return sel;
}

struct Context {
  const std::vector<City>* cities = nullptr;
  const std::vector<Attraction>* attractions = nullptr;
  std::unordered_map<std::string, const City*> city_by_id;
  std::unordered_map<std::string, std::vector<const Attraction*>> by_city;  // priority order
  std::unordered_map<std::string, const Attraction*> attraction_by_id;
};

Context build_context(const std::vector<City>& cities,
                      const std::vector<Attraction>& attractions) {
  Context ctx;
  ctx.cities = &cities;
  ctx.attractions = &attractions;
  for (const auto& c : cities) ctx.city_by_id[c.id] = &c;
  for (const auto& a : attractions) {
    ctx.by_city[a.city_id].push_back(&a);
    ctx.attraction_by_id[a.id] = &a;
  }
  for (auto& [_, list] : ctx.by_city)
    std::sort(list.begin(), list.end(), [](const Attraction* a, const Attraction* b) {
      return attraction_priority_less(*a, *b);
    });
  return ctx;
}

// Deduplicated candidate ids in ascending order; every id must resolve.
std::vector<std::string> normalize_candidates(const Context& ctx,
                                              const std::vector<std::string>& candidates) {
  if (candidates.empty())
    throw Error(errc::empty_candidate_set, "no candidate cities");
  std::vector<std::string> out(candidates);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (const auto& id : out)
    if (!ctx.city_by_id.contains(id))
      throw Error(errc::unknown_city, "candidate city '" + id + "' is not in the dataset");
  return out;
}

struct LegSim {
  Leg leg;
  double rating_sum = 0.0;
  bool feasible = false;
};

LegSim simulate_leg(const Context& ctx, const std::string& from,
                    const std::string& to, double base_elapsed,
                    const PlannerConfig& cfg) {
  LegSim sim;
  sim.leg.from_city = from;
  sim.leg.to_city = to;
  double rail_cost = 0.0;
  if (from != to) {
    const RailLeg rl = rail_leg(ctx.city_by_id.at(from)->location,
                                ctx.city_by_id.at(to)->location, cfg.rates);
    sim.leg.travel_hours = rl.hours;
    rail_cost = rl.cost;
    if (base_elapsed + sim.leg.travel_hours > cfg.total_budget_h) return sim;
  }
  const auto it = ctx.by_city.find(to);
  static const std::vector<const Attraction*> kNone;
  const auto& sorted = it == ctx.by_city.end() ? kNone : it->second;

  const AttractionSelection sel =
      pick_impl(sorted, base_elapsed, sim.leg.travel_hours, cfg);
  sim.leg.attraction_ids = sel.attraction_ids;
  sim.leg.visit_hours = sel.visit_hours;
  sim.leg.rest_hours = sel.rest_hours;
  sim.leg.leg_cost = rail_cost + sel.ticket_cost;
  for (const auto& id : sel.attraction_ids)
    sim.rating_sum += ctx.attraction_by_id.at(id)->rating;
  sim.feasible = !sim.leg.attraction_ids.empty();
  return sim;
}

// Running totals use exactly these accumulation expressions; tests
// re-derive them from the legs array and compare for equality.
void commit_leg(ItineraryPlan& plan, const LegSim& sim) {
  plan.legs.push_back(sim.leg);
  if (sim.leg.to_city != plan.visited_cities.back())
    plan.visited_cities.push_back(sim.leg.to_city);
  for (const auto& id : sim.leg.attraction_ids)
    plan.visited_attractions.push_back(id);
  plan.total_hours += sim.leg.travel_hours + sim.leg.rest_hours + sim.leg.visit_hours;
  plan.total_cost += sim.leg.leg_cost;
  plan.attraction_count += static_cast<int>(sim.leg.attraction_ids.size());
}

// Globally best attraction among candidate cities under the priority
// order; its city is the entry.
const Attraction* best_entry_attraction(const Context& ctx,
                                        const std::vector<std::string>& candidates) {
  const Attraction* best = nullptr;
  for (const auto& city : candidates) {
    const auto it = ctx.by_city.find(city);
    if (it == ctx.by_city.end() || it->second.empty()) continue;
    const Attraction* front = it->second.front();
    if (!best || attraction_priority_less(*front, *best)) best = front;
  }
  return best;
}

ItineraryPlan plan_greedy_from(const Context& ctx, const std::string& entry,
                               const std::vector<std::string>& candidates,
                               const PlannerConfig& cfg) {
  ItineraryPlan plan;
  plan.entry_city = entry;
  plan.visited_cities.push_back(entry);

  const LegSim entry_sim = simulate_leg(ctx, entry, entry, 0.0, cfg);
  if (entry_sim.feasible) commit_leg(plan, entry_sim);

  std::vector<std::string> unvisited;
  for (const auto& id : candidates)
    if (id != entry) unvisited.push_back(id);

  std::string current = entry;
  while (!unvisited.empty()) {
    std::optional<LegSim> best;
    for (const auto& city : unvisited) {
      LegSim sim = simulate_leg(ctx, current, city, plan.total_hours, cfg);
      if (!sim.feasible) continue;
      const bool better =
          !best || sim.leg.leg_cost < best->leg.leg_cost ||
          (sim.leg.leg_cost == best->leg.leg_cost &&
           (sim.rating_sum > best->rating_sum ||
            (sim.rating_sum == best->rating_sum && city < best->leg.to_city)));
      if (better) best = std::move(sim);
    }
    if (!best) break;
    commit_leg(plan, *best);
    current = best->leg.to_city;
    unvisited.erase(std::find(unvisited.begin(), unvisited.end(), current));
  }
  return plan;
}

// k distinct entry cities hosting the highest-priority attractions.
std::vector<std::string> multistart_entries(const Context& ctx,
                                            const std::vector<std::string>& candidates,
                                            int k) {
  std::vector<const Attraction*> pool;
  const std::unordered_set<std::string> candidate_set(candidates.begin(),
                                                      candidates.end());
  for (const auto& a : *ctx.attractions)
    if (candidate_set.contains(a.city_id)) pool.push_back(&a);
  std::sort(pool.begin(), pool.end(), [](const Attraction* a, const Attraction* b) {
    return attraction_priority_less(*a, *b);
  });
  std::vector<std::string> entries;
  std::unordered_set<std::string> seen;
  for (const Attraction* a : pool) {
    if (static_cast<int>(entries.size()) >= k) break;
    if (seen.insert(a->city_id).second) entries.push_back(a->city_id);
  }
  if (entries.empty())
    throw Error(errc::empty_candidate_set, "no candidate city has an attraction");
  return entries;
}

}  // namespace

std::string select_entry_city(const std::vector<Attraction>& attractions,
                              const std::vector<std::string>& candidate_cities) {
  if (candidate_cities.empty())
    throw Error(errc::empty_candidate_set, "no candidate cities");
  const std::unordered_set<std::string> candidate_set(candidate_cities.begin(),
                                                      candidate_cities.end());
  const Attraction* best = nullptr;
  for (const auto& a : attractions) {
    if (!candidate_set.contains(a.city_id)) continue;
    if (!best || attraction_priority_less(a, *best)) best = &a;
  }
  if (!best)
    throw Error(errc::empty_candidate_set, "no candidate city has an attraction");
  return best->city_id;
}

AttractionSelection pick_attractions(const std::vector<Attraction>& city_attractions,
                                     const TripClock& clock,
                                     const PlannerConfig& cfg) {
  validate_planner_config(cfg);
  std::vector<const Attraction*> sorted;
  sorted.reserve(city_attractions.size());
  for (const auto& a : city_attractions) sorted.push_back(&a);
  std::sort(sorted.begin(), sorted.end(), [](const Attraction* a, const Attraction* b) {
    return attraction_priority_less(*a, *b);
  });
  return pick_impl(sorted, clock.elapsed, 0.0, cfg);
}

ItineraryPlan plan_greedy(const std::vector<City>& cities,
                          const std::vector<Attraction>& attractions,
                          const std::vector<std::string>& candidate_cities,
                          const PlannerConfig& cfg) {
  validate_planner_config(cfg);
  const Context ctx = build_context(cities, attractions);
  const auto candidates = normalize_candidates(ctx, candidate_cities);
  const Attraction* best = best_entry_attraction(ctx, candidates);
  if (!best)
    throw Error(errc::empty_candidate_set, "no candidate city has an attraction");
  return plan_greedy_from(ctx, best->city_id, candidates, cfg);
}

ItineraryPlan plan_multistart(const std::vector<City>& cities,
                              const std::vector<Attraction>& attractions,
                              const std::vector<std::string>& candidate_cities,
                              const PlannerConfig& cfg) {
  validate_planner_config(cfg);
  const Context ctx = build_context(cities, attractions);
  const auto candidates = normalize_candidates(ctx, candidate_cities);
  const auto entries = multistart_entries(ctx, candidates, cfg.multi_start_k);

  std::optional<ItineraryPlan> best;
  std::optional<PlanObjective> best_obj;
  for (const auto& entry : entries) {
    ItineraryPlan plan = plan_greedy_from(ctx, entry, candidates, cfg);
    PlanObjective obj = plan_objective(plan, attractions);
    if (!best || objective_better(obj, *best_obj)) {
      best = std::move(plan);
      best_obj = std::move(obj);
    }
  }
  return *best;
}

void for_each_ordered_subset(int n_items,
                             const std::function<void(std::span<const int>)>& visit) {
  std::vector<int> prefix;
  std::vector<bool> used(static_cast<std::size_t>(std::max(n_items, 0)), false);
  const std::function<void()> rec = [&] {
    for (int i = 0; i < n_items; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      used[static_cast<std::size_t>(i)] = true;
      prefix.push_back(i);
      visit(prefix);
      rec();
      prefix.pop_back();
      used[static_cast<std::size_t>(i)] = false;
    }
  };
  rec();
}

ItineraryPlan plan_exhaustive(const std::vector<City>& cities,
                              const std::vector<Attraction>& attractions,
                              const std::vector<std::string>& candidate_cities,
                              const PlannerConfig& cfg) {
  validate_planner_config(cfg);
  const Context ctx = build_context(cities, attractions);
  const auto candidates = normalize_candidates(ctx, candidate_cities);
  if (static_cast<int>(candidates.size()) > kExhaustiveCityLimit)
    throw Error(errc::too_many_cities,
                "exhaustive search is limited to " +
                    std::to_string(kExhaustiveCityLimit) + " candidates, got " +
                    std::to_string(candidates.size()));

  std::optional<ItineraryPlan> best;
  std::optional<PlanObjective> best_obj;
  const auto consider = [&](const ItineraryPlan& plan) {
    PlanObjective obj = plan_objective(plan, attractions);
    if (!best || objective_better(obj, *best_obj)) {
      best = plan;
      best_obj = std::move(obj);
    }
  };

  std::vector<bool> used(candidates.size(), false);
  const std::function<void(const ItineraryPlan&, const std::string&)> extend =
      [&](const ItineraryPlan& plan, const std::string& current) {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          if (used[i]) continue;
          const LegSim sim =
              simulate_leg(ctx, current, candidates[i], plan.total_hours, cfg);
          if (!sim.feasible) continue;
          if (plan.total_hours + (sim.leg.travel_hours + sim.leg.rest_hours +
                                  sim.leg.visit_hours) > cfg.total_budget_h)
            continue;  // unreachable by construction of pick_impl; kept as a guard
          ItineraryPlan next = plan;
          commit_leg(next, sim);
          consider(next);
          used[i] = true;
          extend(next, candidates[i]);
          used[i] = false;
        }
      };

  for (std::size_t e = 0; e < candidates.size(); ++e) {
    ItineraryPlan plan;
    plan.entry_city = candidates[e];
    plan.visited_cities.push_back(candidates[e]);
    const LegSim entry_sim = simulate_leg(ctx, candidates[e], candidates[e], 0.0, cfg);
    if (entry_sim.feasible) commit_leg(plan, entry_sim);
    consider(plan);
    used[e] = true;
    extend(plan, candidates[e]);
    used[e] = false;
  }
  return *best;
}

PlanObjective plan_objective(const ItineraryPlan& plan,
                             const std::vector<Attraction>& attractions) {
  PlanObjective obj;
  obj.attraction_count = plan.attraction_count;
  obj.total_cost = plan.total_cost;
  obj.visited_cities = plan.visited_cities;
  std::unordered_map<std::string, double> rating;
  for (const auto& a : attractions) rating[a.id] = a.rating;
  for (const auto& id : plan.visited_attractions) {
    const auto it = rating.find(id);
    if (it != rating.end()) obj.rating_sum += it->second;
  }
  return obj;
}

bool objective_better(const PlanObjective& a, const PlanObjective& b) {
  if (a.attraction_count != b.attraction_count)
    return a.attraction_count > b.attraction_count;
  if (a.total_cost != b.total_cost) return a.total_cost < b.total_cost;
  if (a.rating_sum != b.rating_sum) return a.rating_sum > b.rating_sum;
  return a.visited_cities < b.visited_cities;
}

}  // namespace citytour

#include "citytour/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "citytour/error.hpp"
#include "citytour/format.hpp"
#include "citytour/geo.hpp"

namespace citytour {

namespace {

ScoreMethod parse_method(const std::string& s) {
  if (s == "pca") return ScoreMethod::pca;
  if (s == "entropy_topsis") return ScoreMethod::entropy_topsis;
  throw Error(errc::row_error, "unknown score method '" + s + "'");
}

}  // namespace

std::string scores_to_csv(const std::vector<CityScore>& scores, double kmo) {
  std::string out = "city_id,score,method,rank,kmo\n";
  for (const auto& s : scores)
    out += s.city_id + "," + format_double(s.score) + "," +
           score_method_name(s.method) + "," + std::to_string(s.rank) + "," +
           format_double(kmo) + "\n";
  return out;
}

LoadedScores load_scores(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::missing_file, "cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line))
    throw Error(errc::schema_error, path.string() + ": file is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "city_id,score,method,rank,kmo")
    throw Error(errc::schema_error, path.string() + ": unexpected scores header");

  LoadedScores out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    for (std::size_t pos; (pos = line.find(',', start)) != std::string::npos;
         start = pos + 1)
      f.push_back(line.substr(start, pos - start));
    f.push_back(line.substr(start));
    if (f.size() != 5)
      throw Error(errc::row_error, path.filename().string() + ":" +
                                       std::to_string(lineno) + ": expected 5 fields");
    try {
      CityScore s;
      s.city_id = f[0];
      s.score = std::stod(f[1]);
      s.method = parse_method(f[2]);
      s.rank = std::stoi(f[3]);
      out.scores.push_back(std::move(s));
      out.kmo = std::stod(f[4]);
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error(errc::row_error, path.filename().string() + ":" +
                                       std::to_string(lineno) + ": bad numeric field");
    }
  }
  return out;
}

nlohmann::ordered_json plan_to_json(const ItineraryPlan& plan,
                                    const std::vector<Attraction>& attractions) {
  std::unordered_map<std::string, const Attraction*> by_id;
  for (const auto& a : attractions) by_id[a.id] = &a;

  nlohmann::ordered_json j;
  j["entry_city"] = plan.entry_city;
  j["legs"] = nlohmann::ordered_json::array();
  for (const auto& leg : plan.legs) {
    nlohmann::ordered_json jl;
    jl["from"] = leg.from_city;
    jl["to"] = leg.to_city;
    jl["travel_hours"] = leg.travel_hours;
    jl["rest_hours"] = leg.rest_hours;
    jl["attractions"] = nlohmann::ordered_json::array();
    for (const auto& id : leg.attraction_ids) {
      const auto it = by_id.find(id);
      if (it == by_id.end())
        throw Error(errc::invalid_parameter,
                    "plan references unknown attraction '" + id + "'");
      const Attraction& a = *it->second;
      jl["attractions"].push_back({{"id", a.id},
                                   {"name", a.name},
                                   {"rating", a.rating},
                                   {"ticket_price", a.ticket_price},
                                   {"visit_hours", a.visit_duration_h}});
    }
    jl["leg_cost"] = leg.leg_cost;
    j["legs"].push_back(std::move(jl));
  }
  j["total_hours"] = plan.total_hours;
  j["total_cost"] = plan.total_cost;
  j["attraction_count"] = plan.attraction_count;
  j["visited_cities"] = plan.visited_cities;
  return j;
}

nlohmann::ordered_json plan_to_geojson(const ItineraryPlan& plan,
                                       const std::vector<City>& cities) {
  std::unordered_map<std::string, const City*> by_id;
  for (const auto& c : cities) by_id[c.id] = &c;
  const auto locate = [&](const std::string& id) -> const City& {
    const auto it = by_id.find(id);
    if (it == by_id.end())
      throw Error(errc::unknown_city, "plan references unknown city '" + id + "'");
    return *it->second;
  };

  // Arrival clock per city: elapsed when travel into the city completes.
  std::unordered_map<std::string, double> arrival;
  arrival[plan.entry_city] = 0.0;
  double total = 0.0;
  for (const auto& leg : plan.legs) {
    arrival[leg.to_city] = total + leg.travel_hours;
    total += leg.travel_hours + leg.rest_hours + leg.visit_hours;
  }

  nlohmann::ordered_json features = nlohmann::ordered_json::array();
  if (plan.visited_cities.size() >= 2) {
    nlohmann::ordered_json coords = nlohmann::ordered_json::array();
    for (const auto& id : plan.visited_cities) {
      const City& c = locate(id);
      coords.push_back({c.location.lon, c.location.lat});
    }
    features.push_back({{"type", "Feature"},
                        {"geometry", {{"type", "LineString"}, {"coordinates", coords}}},
                        {"properties", {{"kind", "route"}}}});
  }
  for (const auto& id : plan.visited_cities) {
    const City& c = locate(id);
    features.push_back(
        {{"type", "Feature"},
         {"geometry",
          {{"type", "Point"}, {"coordinates", {c.location.lon, c.location.lat}}}},
         {"properties",
          {{"name", c.name}, {"arrival_elapsed_hours", arrival.at(id)}}}});
  }
  return {{"type", "FeatureCollection"}, {"features", features}};
}

std::vector<std::string> verify_plan_json(const nlohmann::json& plan,
                                          const std::vector<City>& cities,
                                          const std::vector<Attraction>& attractions,
                                          const PlannerConfig& cfg) {
  std::vector<std::string> bad;
  const auto complain = [&](const std::string& msg) { bad.push_back(msg); };

  for (const char* key : {"entry_city", "legs", "total_hours", "total_cost",
                          "attraction_count", "visited_cities"})
    if (!plan.contains(key)) {
      complain(std::string("missing key '") + key + "'");
      return bad;
    }

  std::unordered_map<std::string, const City*> city_by_id;
  for (const auto& c : cities) city_by_id[c.id] = &c;
  std::unordered_map<std::string, const Attraction*> attraction_by_id;
  for (const auto& a : attractions) attraction_by_id[a.id] = &a;

  const std::string entry = plan["entry_city"];
  const auto visited = plan["visited_cities"].get<std::vector<std::string>>();
  if (visited.empty() || visited.front() != entry)
    complain("visited_cities must start with the entry city");
  std::unordered_set<std::string> seen_cities;
  for (const auto& id : visited) {
    if (!seen_cities.insert(id).second) complain("city " + id + " repeated");
    if (!city_by_id.contains(id)) complain("unknown city " + id);
  }

  double total_hours = 0.0;
  double total_cost = 0.0;
  int count = 0;
  std::string previous = entry;
  std::unordered_set<std::string> seen_attractions;
  for (const auto& leg : plan["legs"]) {
    const std::string from = leg["from"], to = leg["to"];
    if (from != previous)
      complain("leg " + from + "->" + to + " does not continue the route");
    previous = to;
    if (!seen_cities.contains(to)) complain("leg city " + to + " not in visited_cities");

    const double travel = leg["travel_hours"], rest = leg["rest_hours"];
    if (travel < 0 || rest < 0) complain("negative time in leg to " + to);

    double expected_travel = 0.0, rail_cost = 0.0;
    if (from != to) {
      const auto fc = city_by_id.find(from), tc = city_by_id.find(to);
      if (fc != city_by_id.end() && tc != city_by_id.end()) {
        const RailLeg rl =
            rail_leg(fc->second->location, tc->second->location, cfg.rates);
        expected_travel = rl.hours;
        rail_cost = rl.cost;
      }
    }
    if (travel != expected_travel)
      complain("leg to " + to + ": travel_hours " + format_double(travel) +
               " != recomputed " + format_double(expected_travel));

    double visit = 0.0, tickets = 0.0;
    for (const auto& ja : leg["attractions"]) {
      const std::string id = ja["id"];
      const auto it = attraction_by_id.find(id);
      if (it == attraction_by_id.end()) {
        complain("unknown attraction " + id);
        continue;
      }
      if (!seen_attractions.insert(id).second) complain("attraction " + id + " repeated");
      const Attraction& a = *it->second;
      if (a.city_id != to) complain("attraction " + id + " is not in city " + to);
      if (ja["visit_hours"].get<double>() != a.visit_duration_h)
        complain("attraction " + id + ": visit_hours does not match the dataset");
      visit += ja["visit_hours"].get<double>();
      tickets += ja["ticket_price"].get<double>();
    }
    const double leg_cost = leg["leg_cost"];
    if (leg_cost != rail_cost + tickets)
      complain("leg to " + to + ": leg_cost " + format_double(leg_cost) +
               " != rail " + format_double(rail_cost) + " + tickets " +
               format_double(tickets));

    total_hours += travel + rest + visit;
    total_cost += leg_cost;
    count += static_cast<int>(leg["attractions"].size());
  }

  if (plan["total_hours"].get<double>() != total_hours)
    complain("total_hours does not equal the sum over legs");
  if (plan["total_cost"].get<double>() != total_cost)
    complain("total_cost does not equal the sum over legs");
  if (plan["attraction_count"].get<int>() != count)
    complain("attraction_count does not equal the number of listed attractions");
  if (plan["total_hours"].get<double>() > cfg.total_budget_h)
    complain("total_hours exceeds the budget of " +
             format_double(cfg.total_budget_h) + " hours");

  return bad;
}

}  // namespace citytour

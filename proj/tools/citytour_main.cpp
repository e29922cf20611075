// citytour: scores cities from indicator CSVs (KMO-gated PCA / entropy
// TOPSIS) and plans a rail itinerary under a wall-clock budget.
//
// Subcommands: generate, evaluate, plan, distance. Every option can also be
// set through a flat key=value config file (--config); command-line flags
// win. The ITINERARY_LOG environment variable (quiet|info|debug) controls
// stderr chatter.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "citytour/dataset.hpp"
#include "citytour/error.hpp"
#include "citytour/format.hpp"
#include "citytour/geo.hpp"
#include "citytour/log.hpp"
#include "citytour/mcda.hpp"
#include "citytour/planner.hpp"
#include "citytour/report.hpp"

namespace {

using citytour::Error;
using citytour::errc;

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::map<std::string, std::string> load_flat_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::missing_file, "cannot open config " + path.string());
  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw Error(errc::invalid_parameter, path.string() + ":" +
                                               std::to_string(lineno) +
                                               ": expected key=value");
    kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return kv;
}

// Config keys mirror the long flag names; values land in the same bound
// variables the flags write to, so flags given on the command line win.
struct ConfigBinder {
  std::map<std::string, std::vector<std::function<void(const std::string&)>>> setters;

  void bind(const std::string& key, double* v) {
    setters[key].push_back([v, key](const std::string& s) { *v = std::stod(s); });
  }
  void bind(const std::string& key, int* v) {
    setters[key].push_back([v](const std::string& s) { *v = std::stoi(s); });
  }
  void bind(const std::string& key, std::uint64_t* v) {
    setters[key].push_back([v](const std::string& s) { *v = std::stoull(s); });
  }
  void bind(const std::string& key, std::string* v) {
    setters[key].push_back([v](const std::string& s) { *v = s; });
  }
  void bind(const std::string& key, bool* v) {
    setters[key].push_back([v](const std::string& s) {
      *v = (s == "true" || s == "1" || s == "yes");
    });
  }

  void apply(const std::map<std::string, std::string>& kv) const {
    for (const auto& [key, value] : kv) {
      const auto it = setters.find(key);
      if (it == setters.end())
        throw Error(errc::invalid_parameter, "unknown config key '" + key + "'");
      try {
        for (const auto& set : it->second) set(value);
      } catch (const Error&) {
        throw;
      } catch (const std::exception&) {
        throw Error(errc::invalid_parameter,
                    "bad value '" + value + "' for config key '" + key + "'");
      }
    }
  }
};

struct RunConfig {
  // generate
  std::uint64_t seed = 42;
  int n_cities = 352;
  int gen_attractions_per_city = 100;
  int n_criteria = 6;
  // shared inputs
  std::string cities_path = "data/cities.csv";
  std::string attractions_path = "data/attractions.csv";
  std::string indicators_path = "data/indicators.csv";
  std::string criteria_path = "data/criteria.csv";
  std::string scores_path;
  std::string out_dir = "out";
  // mcda
  citytour::DecisionConfig decision{};
  // planner
  citytour::PlannerConfig planner{};
  int candidate_top_n = 0;  // 0 = every scored city
  bool verify = false;
};

int cmd_generate(const RunConfig& rc) {
  const auto ds = citytour::generate_synthetic(rc.seed, rc.n_cities,
                                               rc.gen_attractions_per_city,
                                               rc.n_criteria);
  const std::filesystem::path dir = rc.out_dir;
  citytour::write_text_file(dir / "cities.csv", citytour::cities_to_csv(ds.cities));
  citytour::write_text_file(dir / "attractions.csv",
                            citytour::attractions_to_csv(ds.attractions));
  citytour::write_text_file(dir / "indicators.csv",
                            citytour::indicators_to_csv(ds.indicators));
  citytour::write_text_file(dir / "criteria.csv",
                            citytour::criteria_to_csv(ds.indicators.criteria));
  std::printf("wrote %s: %zu cities, %zu attractions, %d criteria\n",
              dir.string().c_str(), ds.cities.size(), ds.attractions.size(),
              rc.n_criteria);
  return 0;
}

int cmd_evaluate(const RunConfig& rc) {
  const citytour::IndicatorMatrix X =
      citytour::load_indicators(rc.indicators_path, rc.criteria_path);
  const auto result = citytour::evaluate_cities(X, rc.decision);
  const auto top = citytour::select_top_cities(result.scores, rc.decision.top_n);

  const std::filesystem::path out = std::filesystem::path(rc.out_dir) / "scores.csv";
  citytour::write_text_file(out, citytour::scores_to_csv(top, result.kmo));

  std::printf("method=%s kmo=%.3f\n", citytour::score_method_name(result.method),
              result.kmo);
  std::printf("wrote %s (%zu rows)\n", out.string().c_str(), top.size());
  return 0;
}

int cmd_plan(const RunConfig& rc) {
  const auto cities = citytour::load_cities(rc.cities_path);
  const auto attractions = citytour::load_attractions(rc.attractions_path, cities);

  std::vector<std::string> candidates;
  if (!rc.scores_path.empty()) {
    const auto loaded = citytour::load_scores(rc.scores_path);
    for (const auto& s : loaded.scores) {
      if (rc.candidate_top_n > 0 &&
          static_cast<int>(candidates.size()) >= rc.candidate_top_n)
        break;
      candidates.push_back(s.city_id);
    }
  } else {
    for (const auto& c : cities) candidates.push_back(c.id);
  }

  const auto plan = citytour::plan_multistart(cities, attractions, candidates,
                                              rc.planner);

  const std::filesystem::path dir = rc.out_dir;
  const auto plan_json = citytour::plan_to_json(plan, attractions);
  citytour::write_text_file(dir / "plan.json", plan_json.dump(2) + "\n");
  citytour::write_text_file(dir / "route.geojson",
                            citytour::plan_to_geojson(plan, cities).dump(2) + "\n");

  std::string route;
  for (const auto& id : plan.visited_cities)
    route += (route.empty() ? "" : " -> ") + id;
  std::string visited;
  for (const auto& id : plan.visited_attractions)
    visited += (visited.empty() ? "" : " ") + id;
  std::printf("route: %s\n", route.c_str());
  std::printf("attractions: %s\n", visited.c_str());
  std::printf("total_hours: %.2f\n", plan.total_hours);
  std::printf("total_cost: %.2f\n", plan.total_cost);
  std::printf("attraction_count: %d\n", plan.attraction_count);
  std::printf("wrote %s and %s\n", (dir / "plan.json").string().c_str(),
              (dir / "route.geojson").string().c_str());

  if (rc.verify) {
    const auto violations =
        citytour::verify_plan_json(plan_json, cities, attractions, rc.planner);
    if (!violations.empty()) {
      for (const auto& v : violations) std::cerr << "verify: " << v << "\n";
      return 1;
    }
    std::printf("verify: ok (%zu legs checked)\n", plan.legs.size());
  }
  return 0;
}

int cmd_distance(const std::vector<double>& coords) {
  const auto a = citytour::make_geo_point(coords[0], coords[1]);
  const auto b = citytour::make_geo_point(coords[2], coords[3]);
  std::printf("%.6f km\n", citytour::haversine_km(a, b));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* lv = std::getenv("ITINERARY_LOG"))
    citytour::log::set_level_from_string(lv);

  RunConfig rc;
  ConfigBinder binder;

  CLI::App app{"City scoring and rail itinerary planning"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "flat key=value config file");

  auto* gen = app.add_subcommand("generate", "write a seeded synthetic dataset");
  gen->add_option("--seed", rc.seed, "RNG seed");
  binder.bind("seed", &rc.seed);
  gen->add_option("--n-cities", rc.n_cities, "number of cities");
  binder.bind("n-cities", &rc.n_cities);
  gen->add_option("--attractions-per-city", rc.gen_attractions_per_city,
                  "attractions generated per city");
  binder.bind("attractions-per-city", &rc.gen_attractions_per_city);
  gen->add_option("--n-criteria", rc.n_criteria, "number of indicator criteria");
  binder.bind("n-criteria", &rc.n_criteria);
  std::string gen_out = "data";
  gen->add_option("--out", gen_out, "output directory");
  binder.bind("out", &gen_out);

  auto* eval = app.add_subcommand("evaluate", "score cities from indicator CSVs");
  eval->add_option("--indicators", rc.indicators_path, "indicators.csv path");
  binder.bind("indicators", &rc.indicators_path);
  eval->add_option("--criteria", rc.criteria_path, "criteria.csv path");
  binder.bind("criteria", &rc.criteria_path);
  eval->add_option("--top-n", rc.decision.top_n, "cities to keep");
  binder.bind("top-n", &rc.decision.top_n);
  eval->add_option("--kmo-threshold", rc.decision.kmo_threshold,
                   "KMO gate for the PCA path");
  binder.bind("kmo-threshold", &rc.decision.kmo_threshold);
  eval->add_option("--pca-variance-target", rc.decision.pca_variance_target,
                   "cumulative explained-variance target");
  binder.bind("pca-variance-target", &rc.decision.pca_variance_target);
  eval->add_option("--out", rc.out_dir, "output directory");
  binder.bind("out", &rc.out_dir);

  auto* plan = app.add_subcommand("plan", "build an itinerary from scored cities");
  plan->add_option("--cities", rc.cities_path, "cities.csv path");
  binder.bind("cities", &rc.cities_path);
  plan->add_option("--attractions", rc.attractions_path, "attractions.csv path");
  binder.bind("attractions", &rc.attractions_path);
  plan->add_option("--scores", rc.scores_path,
                   "scores.csv from evaluate; all cities when omitted");
  binder.bind("scores", &rc.scores_path);
  plan->add_option("--top-n", rc.candidate_top_n,
                   "limit candidates to the best N scored cities");
  plan->add_option("--budget-hours", rc.planner.total_budget_h, "total trip budget");
  binder.bind("budget-hours", &rc.planner.total_budget_h);
  plan->add_option("--day-start", rc.planner.day_start, "visits start hour");
  binder.bind("day-start", &rc.planner.day_start);
  plan->add_option("--day-end", rc.planner.day_end, "visits end hour");
  binder.bind("day-end", &rc.planner.day_end);
  plan->add_option("--rail-speed", rc.planner.rates.rail_speed_kmh, "km/h");
  binder.bind("rail-speed", &rc.planner.rates.rail_speed_kmh);
  plan->add_option("--rail-cost-rate", rc.planner.rates.rail_cost_per_km,
                   "currency per km");
  binder.bind("rail-cost-rate", &rc.planner.rates.rail_cost_per_km);
  plan->add_option("--local-transfer", rc.planner.rates.local_transfer_h,
                   "hours added per city arrival");
  binder.bind("local-transfer", &rc.planner.rates.local_transfer_h);
  plan->add_option("--attractions-per-city", rc.planner.attractions_per_city,
                   "visits allowed per city");
  binder.bind("attractions-per-city", &rc.planner.attractions_per_city);
  plan->add_option("--multi-start", rc.planner.multi_start_k,
                   "greedy restarts from the top-k entry cities");
  binder.bind("multi-start", &rc.planner.multi_start_k);
  plan->add_option("--out", rc.out_dir, "output directory");
  plan->add_flag("--verify", rc.verify, "re-derive plan.json invariants after writing");
  binder.bind("verify", &rc.verify);

  auto* dist = app.add_subcommand("distance", "great-circle km between two points");
  std::vector<double> coords;
  dist->add_option("coords", coords, "lat1 lon1 lat2 lon2")->expected(4);

  // Let --config appear after the subcommand token too.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    // Config first so later command-line flags overwrite its values.
    for (int i = 1; i < argc; ++i) {
      const std::string arg = argv[i];
      if (arg == "--config" && i + 1 < argc) config_path = argv[i + 1];
      else if (arg.rfind("--config=", 0) == 0) config_path = arg.substr(9);
    }
    if (!config_path.empty()) binder.apply(load_flat_config(config_path));

    app.parse(argc, argv);

    if (gen->parsed()) {
      rc.out_dir = gen_out;
      return cmd_generate(rc);
    }
    if (eval->parsed()) return cmd_evaluate(rc);
    if (plan->parsed()) return cmd_plan(rc);
    if (dist->parsed()) return cmd_distance(coords);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#ifndef CITYTOUR_DATASET_HPP
#define CITYTOUR_DATASET_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "citytour/types.hpp"

namespace citytour {

// cities.csv: id,name,lat,lon
std::vector<City> load_cities(const std::filesystem::path& path);

// attractions.csv: id,city_id,name,rating,ticket_price,visit_duration_h,
// open_hour,close_hour  (optional trailing address,description columns are
// accepted and ignored). Every city_id must resolve into `cities`.
std::vector<Attraction> load_attractions(const std::filesystem::path& path,
                                         const std::vector<City>& cities);

// indicators.csv: city_id,<criterion...>; criteria.csv: name,orientation.
// Column names must match the criteria file in order.
IndicatorMatrix load_indicators(const std::filesystem::path& indicators_path,
                                const std::filesystem::path& criteria_path);

std::string cities_to_csv(const std::vector<City>& cities);
std::string attractions_to_csv(const std::vector<Attraction>& attractions);
std::string indicators_to_csv(const IndicatorMatrix& X);
std::string criteria_to_csv(const std::vector<Criterion>& criteria);

void write_text_file(const std::filesystem::path& path, const std::string& content);

struct SyntheticDataset {
  std::vector<City> cities;
  std::vector<Attraction> attractions;
  IndicatorMatrix indicators;
};

// Deterministic schema-compatible dataset: mt19937_64(seed) driven through
// the fixed mapping in random.hpp, so equal seeds give byte-identical CSV
// output on every platform. Coordinates are drawn inside [18, 54] lat x
// [73, 135] lon; every indicator column is regenerated until non-constant.
// Requires n_cities >= 1, attractions_per_city >= 1, n_criteria >= 2.
SyntheticDataset generate_synthetic(std::uint64_t seed, int n_cities,
                                    int attractions_per_city, int n_criteria);

}  // namespace citytour

#endif  // CITYTOUR_DATASET_HPP

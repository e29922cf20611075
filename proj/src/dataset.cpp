#include "citytour/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "citytour/error.hpp"
#include "citytour/format.hpp"
#include "citytour/random.hpp"

namespace citytour {

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(errc::missing_file, "cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  if (lines.empty())
    throw Error(errc::schema_error, path.string() + ": file is empty");
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

[[noreturn]] void row_fail(const std::filesystem::path& path, std::size_t lineno,
                           const std::string& what) {
  throw Error(errc::row_error,
              path.filename().string() + ":" + std::to_string(lineno) + ": " + what);
}

double parse_number(const std::string& field, const std::filesystem::path& path,
                    std::size_t lineno, const char* what) {
  if (field.empty()) row_fail(path, lineno, std::string("missing ") + what);
  double value = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size() ||
      !std::isfinite(value))
    row_fail(path, lineno, std::string("bad ") + what + " '" + field + "'");
  return value;
}

void expect_header(const std::string& got, const std::string& want,
                   const std::filesystem::path& path) {
  if (got != want)
    throw Error(errc::schema_error, path.filename().string() + ": expected header '" +
                                        want + "', got '" + got + "'");
}

constexpr const char* kCitiesHeader = "id,name,lat,lon";
constexpr const char* kAttractionsHeader =
    "id,city_id,name,rating,ticket_price,visit_duration_h,open_hour,close_hour";
constexpr const char* kCriteriaHeader = "name,orientation";

double snap6(double x) { return std::round(x * 1e6) / 1e6; }

std::string padded(int value, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%0*d", width, value);
  return buf;
}

}  // namespace

std::vector<City> load_cities(const std::filesystem::path& path) {
  const auto lines = read_lines(path);
  expect_header(lines[0], kCitiesHeader, path);

  std::vector<City> cities;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto f = split_fields(lines[i]);
    if (f.size() != 4) row_fail(path, i + 1, "expected 4 fields");
    if (f[0].empty()) row_fail(path, i + 1, "empty id");
    if (!seen.insert(f[0]).second) row_fail(path, i + 1, "duplicate city id " + f[0]);
    if (f[1].empty()) row_fail(path, i + 1, "empty name");
    const double lat = parse_number(f[2], path, i + 1, "lat");
    const double lon = parse_number(f[3], path, i + 1, "lon");
    try {
      cities.push_back({f[0], f[1], make_geo_point(lat, lon)});
    } catch (const Error& e) {
      row_fail(path, i + 1, e.what());
    }
  }
  return cities;
}

std::vector<Attraction> load_attractions(const std::filesystem::path& path,
                                         const std::vector<City>& cities) {
  const auto lines = read_lines(path);
  // Upstream attraction exports often carry address/description columns;
  // they are accepted (and ignored) after the canonical eight.
  const auto header = split_fields(lines[0]);
  const auto canonical = split_fields(kAttractionsHeader);
  bool ok = header.size() >= canonical.size() && header.size() <= canonical.size() + 2;
  if (ok)
    for (std::size_t j = 0; j < header.size(); ++j) {
      const std::string want = j < canonical.size()
                                   ? canonical[j]
                                   : (j == canonical.size() ? "address" : "description");
      if (header[j] != want) ok = false;
    }
  if (!ok) expect_header(lines[0], kAttractionsHeader, path);

  std::unordered_set<std::string> city_ids;
  for (const auto& c : cities) city_ids.insert(c.id);

  std::vector<Attraction> out;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto f = split_fields(lines[i]);
    if (f.size() != header.size())
      row_fail(path, i + 1, "expected " + std::to_string(header.size()) + " fields");
    if (f[0].empty()) row_fail(path, i + 1, "empty id");
    if (!seen.insert(f[0]).second)
      row_fail(path, i + 1, "duplicate attraction id " + f[0]);
    if (!city_ids.contains(f[1]))
      throw Error(errc::unknown_city,
                  path.filename().string() + ":" + std::to_string(i + 1) +
                      ": unknown city '" + f[1] + "'");
    Attraction a;
    a.id = f[0];
    a.city_id = f[1];
    a.name = f[2];
    a.rating = parse_number(f[3], path, i + 1, "rating");
    a.ticket_price = parse_number(f[4], path, i + 1, "ticket_price");
    a.visit_duration_h = parse_number(f[5], path, i + 1, "visit_duration_h");
    a.open_hour = parse_number(f[6], path, i + 1, "open_hour");
    a.close_hour = parse_number(f[7], path, i + 1, "close_hour");
    try {
      validate_attraction(a);
    } catch (const Error& e) {
      row_fail(path, i + 1, e.what());
    }
    out.push_back(std::move(a));
  }
  return out;
}

IndicatorMatrix load_indicators(const std::filesystem::path& indicators_path,
                                const std::filesystem::path& criteria_path) {
  const auto crit_lines = read_lines(criteria_path);
  expect_header(crit_lines[0], kCriteriaHeader, criteria_path);
  std::vector<Criterion> criteria;
  std::unordered_set<std::string> crit_names;
  for (std::size_t i = 1; i < crit_lines.size(); ++i) {
    if (crit_lines[i].empty()) continue;
    const auto f = split_fields(crit_lines[i]);
    if (f.size() != 2) row_fail(criteria_path, i + 1, "expected 2 fields");
    if (f[0].empty()) row_fail(criteria_path, i + 1, "empty criterion name");
    if (!crit_names.insert(f[0]).second)
      row_fail(criteria_path, i + 1, "duplicate criterion " + f[0]);
    try {
      criteria.push_back({f[0], parse_orientation(f[1])});
    } catch (const Error& e) {
      row_fail(criteria_path, i + 1, e.what());
    }
  }

  const auto lines = read_lines(indicators_path);
  std::string want_header = "city_id";
  for (const auto& c : criteria) want_header += "," + c.name;
  expect_header(lines[0], want_header, indicators_path);

  const std::size_t k = criteria.size();
  std::vector<std::string> city_ids;
  std::vector<double> cells;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto f = split_fields(lines[i]);
    if (f.size() != k + 1)
      row_fail(indicators_path, i + 1,
               "expected " + std::to_string(k + 1) + " fields");
    if (f[0].empty()) row_fail(indicators_path, i + 1, "empty city_id");
    if (!seen.insert(f[0]).second)
      row_fail(indicators_path, i + 1, "duplicate city_id " + f[0]);
    city_ids.push_back(f[0]);
    for (std::size_t j = 0; j < k; ++j)
      cells.push_back(parse_number(f[j + 1], indicators_path, i + 1,
                                   criteria[j].name.c_str()));
  }

  IndicatorMatrix X;
  X.city_ids = std::move(city_ids);
  X.criteria = std::move(criteria);
  X.values.resize(static_cast<Eigen::Index>(X.city_ids.size()),
                  static_cast<Eigen::Index>(k));
  for (Eigen::Index i = 0; i < X.values.rows(); ++i)
    for (Eigen::Index j = 0; j < X.values.cols(); ++j)
      X.values(i, j) = cells[static_cast<std::size_t>(i) * k +
                             static_cast<std::size_t>(j)];
  return X;
}

std::string cities_to_csv(const std::vector<City>& cities) {
  std::string out = std::string(kCitiesHeader) + "\n";
  for (const auto& c : cities)
    out += c.id + "," + c.name + "," + format_double(c.location.lat) + "," +
           format_double(c.location.lon) + "\n";
  return out;
}

std::string attractions_to_csv(const std::vector<Attraction>& attractions) {
  std::string out = std::string(kAttractionsHeader) + "\n";
  for (const auto& a : attractions)
    out += a.id + "," + a.city_id + "," + a.name + "," + format_double(a.rating) +
           "," + format_double(a.ticket_price) + "," +
           format_double(a.visit_duration_h) + "," + format_double(a.open_hour) +
           "," + format_double(a.close_hour) + "\n";
  return out;
}

std::string indicators_to_csv(const IndicatorMatrix& X) {
  std::string out = "city_id";
  for (const auto& c : X.criteria) out += "," + c.name;
  out += "\n";
  for (Eigen::Index i = 0; i < X.values.rows(); ++i) {
    out += X.city_ids[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < X.values.cols(); ++j)
      out += "," + format_double(X.values(i, j));
    out += "\n";
  }
  return out;
}

std::string criteria_to_csv(const std::vector<Criterion>& criteria) {
  std::string out = std::string(kCriteriaHeader) + "\n";
  for (const auto& c : criteria)
    out += c.name + "," + orientation_name(c.orientation) + "\n";
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec)
      throw Error(errc::io_error, "cannot create directory " +
                                      path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(errc::io_error, "cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw Error(errc::io_error, "failed writing " + path.string());
}

SyntheticDataset generate_synthetic(std::uint64_t seed, int n_cities,
                                    int attractions_per_city, int n_criteria) {
  if (n_cities < 1)
    throw Error(errc::invalid_parameter, "n_cities must be >= 1");
  if (attractions_per_city < 1)
    throw Error(errc::invalid_parameter, "attractions_per_city must be >= 1");
  if (n_criteria < 2)
    throw Error(errc::invalid_parameter, "n_criteria must be >= 2");

  std::mt19937_64 rng(seed);
  SyntheticDataset ds;

  ds.cities.reserve(static_cast<std::size_t>(n_cities));
  for (int i = 1; i <= n_cities; ++i) {
    City c;
    c.id = "c" + padded(i, 4);
    c.name = "City" + padded(i, 4);
    c.location.lat = snap6(uniform_in(rng, 18.0, 54.0));
    c.location.lon = snap6(uniform_in(rng, 73.0, 135.0));
    ds.cities.push_back(std::move(c));
  }

  ds.attractions.reserve(static_cast<std::size_t>(n_cities) *
                         static_cast<std::size_t>(attractions_per_city));
  for (int i = 1; i <= n_cities; ++i) {
    for (int k = 1; k <= attractions_per_city; ++k) {
      Attraction a;
      a.id = "a" + padded(i, 4) + "_" + padded(k, 3);
      a.city_id = "c" + padded(i, 4);
      a.name = "Attraction" + padded(i, 4) + "_" + padded(k, 3);
      a.rating = std::round(uniform_in(rng, 2.0, 5.0) * 10.0) / 10.0;
      a.ticket_price = std::floor(uniform01(rng) * 301.0);
      a.visit_duration_h = 0.5 * (1.0 + std::floor(uniform01(rng) * 10.0));
      if (uniform01(rng) < 0.2) {
        a.open_hour = 0.0;
        a.close_hour = 24.0;
      } else {
        a.open_hour = 6.0 + std::floor(uniform01(rng) * 5.0);
        a.close_hour = std::min(24.0, a.open_hour + 6.0 + 2.0 * std::floor(uniform01(rng) * 4.0));
      }
      ds.attractions.push_back(std::move(a));
    }
  }

  static const char* kThemedNames[] = {"city_size",     "ecology", "culture_history",
                                       "accessibility", "climate", "cuisine"};
  ds.indicators.city_ids.reserve(ds.cities.size());
  for (const auto& c : ds.cities) ds.indicators.city_ids.push_back(c.id);

  // One latent appeal factor per city so criterion columns correlate, which
  // gives the KMO gate something to measure.
  std::vector<double> factor(static_cast<std::size_t>(n_cities));
  for (auto& f : factor) f = uniform01(rng);

  ds.indicators.values.resize(n_cities, n_criteria);
  for (int j = 0; j < n_criteria; ++j) {
    Criterion crit;
    crit.name = j < 6 ? kThemedNames[j] : "extra_" + padded(j + 1, 2);
    crit.orientation = (j % 3 == 2) ? Orientation::cost : Orientation::benefit;
    ds.indicators.criteria.push_back(std::move(crit));

    while (true) {
      const double loading = uniform_in(rng, 0.5, 1.0);
      for (int i = 0; i < n_cities; ++i)
        ds.indicators.values(i, j) = snap6(
            loading * factor[static_cast<std::size_t>(i)] +
            (1.0 - loading) * uniform01(rng));
      if (n_cities == 1 || ds.indicators.values.col(j).minCoeff() <
                               ds.indicators.values.col(j).maxCoeff())
        break;  // regenerate the rare constant column
    }
  }

  return ds;
}

}  // namespace citytour

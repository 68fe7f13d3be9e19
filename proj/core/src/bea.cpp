#include "shockcast/bea.hpp"

#include <httplib.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "shockcast/errors.hpp"

namespace shockcast {

using nlohmann::ordered_json;

namespace {

std::string today_utc() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[16];
  std::strftime(buf, sizeof buf, "%Y-%m-%d", &tm);
  return buf;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string cache_prefix(const BeaConfig& c) {
  return c.table_name + "_" + c.geo_fips + "_" + c.first.to_compact_string() + "-" +
         c.last.to_compact_string() + "_";
}

std::optional<std::filesystem::path> find_cached(const BeaConfig& c) {
  if (c.cache_dir.empty()) return std::nullopt;
  std::error_code ec;
  if (c.retrieval_date) {
    auto path = c.cache_dir / bea_cache_name(c, *c.retrieval_date);
    if (std::filesystem::is_regular_file(path, ec)) return path;
    return std::nullopt;
  }
  const std::string prefix = cache_prefix(c);
  std::optional<std::filesystem::path> newest;
  for (const auto& entry : std::filesystem::directory_iterator(c.cache_dir, ec)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind(prefix, 0) != 0 || entry.path().extension() != ".json") continue;
    if (!newest || name > newest->filename().string()) newest = entry.path();
  }
  return newest;
}

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

Endpoint split_endpoint(const std::string& url) {
  const auto scheme = url.find("://");
  if (scheme == std::string::npos) throw SchemaError("endpoint must include a scheme: " + url);
  const auto slash = url.find('/', scheme + 3);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

std::string fetch_line(const BeaConfig& c, const Endpoint& ep, int line_code) {
  httplib::Client client(ep.origin);
  client.set_connection_timeout(c.timeout_seconds, 0);
  client.set_read_timeout(c.timeout_seconds, 0);
  client.set_follow_location(true);

  std::string years;
  for (int y = c.first.year(); y <= c.last.year(); ++y) {
    if (!years.empty()) years += ',';
    years += std::to_string(y);
  }
  httplib::Params params{{"UserID", c.api_key},
                         {"method", "GetData"},
                         {"datasetname", "Regional"},
                         {"TableName", c.table_name},
                         {"LineCode", std::to_string(line_code)},
                         {"GeoFips", c.geo_fips},
                         {"Year", years},
                         {"ResultFormat", "json"}};
  auto res = client.Get(ep.path, params, httplib::Headers{});
  if (!res) {
    throw RetrievalError("request for line " + std::to_string(line_code) +
                         " failed: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw RetrievalError("request for line " + std::to_string(line_code) + " returned HTTP " +
                         std::to_string(res->status));
  }
  return res->body;
}

PanelDataset panel_from_bodies(const BeaConfig& c, const std::map<std::string, std::string>& bodies,
                               const std::string& vintage) {
  std::vector<NamedSeries> sectors;
  for (const auto& [sector, line] : c.line_codes) {
    const auto& body = bodies.at(sector);
    QuarterlySeries levels = [&] {
      try {
        return parse_bea_response(body, c.first, c.last);
      } catch (const MappingError& e) {
        throw MappingError(sector + " (line " + std::to_string(line) + "): " + e.what());
      }
    }();
    sectors.push_back({sector, log_transform(levels)});
  }
  return PanelDataset(std::move(sectors), Provenance::BeaApi, vintage);
}

}  // namespace

std::string bea_cache_name(const BeaConfig& config, std::string_view date) {
  return cache_prefix(config) + std::string(date) + ".json";
}

BeaConfig load_bea_config(const std::filesystem::path& path) {
  BeaConfig c;
  try {
    const auto doc = ordered_json::parse(read_file(path));
    c.endpoint = doc.value("endpoint", c.endpoint);
    c.table_name = doc.value("table_name", c.table_name);
    c.geo_fips = doc.value("geo_fips", c.geo_fips);
    c.api_key = doc.value("api_key", std::string{});
    c.timeout_seconds = doc.value("timeout_seconds", c.timeout_seconds);
    c.network_enabled = doc.value("network", c.network_enabled);
    if (doc.contains("retrieval_date")) c.retrieval_date = doc.at("retrieval_date").get<std::string>();
    if (doc.contains("window")) {
      c.first = Quarter::parse(doc.at("window").at("first").get<std::string>());
      c.last = Quarter::parse(doc.at("window").at("last").get<std::string>());
    }
    if (doc.contains("cache_dir")) c.cache_dir = doc.at("cache_dir").get<std::string>();
    for (const auto& [sector, code] : doc.at("line_codes").items()) {
      c.line_codes.emplace_back(sector, code.get<int>());
    }
  } catch (const ordered_json::exception& e) {
    throw SchemaError("malformed BEA configuration " + path.string() + ": " + e.what());
  } catch (const DomainError& e) {
    throw SchemaError("malformed BEA configuration " + path.string() + ": " + e.what());
  }
  if (c.api_key.empty()) {
    if (const char* key = std::getenv(kBeaKeyEnv)) c.api_key = key;
  }
  if (c.cache_dir.empty()) {
    if (const char* dir = std::getenv(kCacheDirEnv)) c.cache_dir = dir;
  }
  if (c.line_codes.empty()) throw SchemaError("BEA configuration maps no sectors");
  if (c.last < c.first) throw SchemaError("BEA window ends before it starts");
  return c;
}

QuarterlySeries parse_bea_response(std::string_view body, Quarter first, Quarter last) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(body);
  } catch (const ordered_json::exception& e) {
    throw MappingError(std::string("response is not JSON: ") + e.what());
  }
  const auto api = doc.find("BEAAPI");
  if (api == doc.end() || !api->is_object()) throw MappingError("response lacks a BEAAPI object");

  auto remote_error = [](const ordered_json& err) {
    std::string msg = "BEA API error";
    if (err.is_object()) {
      if (err.contains("APIErrorCode")) msg += " " + err.at("APIErrorCode").dump();
      if (err.contains("APIErrorDescription") && err.at("APIErrorDescription").is_string()) {
        msg += ": " + err.at("APIErrorDescription").get<std::string>();
      }
    }
    return RetrievalError(msg);
  };
  if (api->contains("Error")) throw remote_error(api->at("Error"));
  const auto results = api->find("Results");
  if (results == api->end() || !results->is_object()) throw MappingError("response lacks Results");
  if (results->contains("Error")) throw remote_error(results->at("Error"));
  const auto data = results->find("Data");
  if (data == results->end() || !data->is_array()) throw MappingError("response lacks a Data array");

  std::map<std::int64_t, double> by_quarter;
  for (const auto& row : *data) {
    if (!row.is_object() || !row.contains("TimePeriod") || !row.contains("DataValue")) {
      throw MappingError("data row lacks TimePeriod or DataValue");
    }
    const auto period = row.at("TimePeriod").get<std::string>();
    Quarter q = [&] {
      try {
        return Quarter::parse(period);
      } catch (const DomainError&) {
        throw MappingError("unexpected TimePeriod '" + period + "'");
      }
    }();
    if (q < first || q > last) continue;
    std::string raw = row.at("DataValue").is_string() ? row.at("DataValue").get<std::string>()
                                                      : row.at("DataValue").dump();
    raw.erase(std::remove(raw.begin(), raw.end(), ','), raw.end());
    char* end = nullptr;
    const double value = std::strtod(raw.c_str(), &end);
    if (raw.empty() || end != raw.c_str() + raw.size()) {
      throw MappingError("non-numeric DataValue '" + raw + "' for " + q.to_string());
    }
    by_quarter[q.index()] = value;
  }
  std::vector<double> values;
  for (Quarter q = first; q <= last; q = q.next()) {
    auto it = by_quarter.find(q.index());
    if (it == by_quarter.end()) throw MappingError("response has no value for " + q.to_string());
    values.push_back(it->second);
  }
  return QuarterlySeries(first, std::move(values));
}

PanelDataset fetch_bea(const BeaConfig& c) {
  if (c.line_codes.empty()) throw SchemaError("BEA configuration maps no sectors");

  if (auto cached = find_cached(c)) {
    const auto doc = [&] {
      try {
        return ordered_json::parse(read_file(*cached));
      } catch (const ordered_json::exception& e) {
        throw MappingError("corrupt cache file " + cached->string() + ": " + e.what());
      }
    }();
    std::map<std::string, std::string> bodies;
    bool complete = doc.contains("responses");
    if (complete) {
      for (const auto& [sector, line] : c.line_codes) {
        const auto& responses = doc.at("responses");
        if (!responses.contains(sector) || responses.at(sector).value("line_code", -1) != line) {
          complete = false;
          break;
        }
        bodies[sector] = responses.at(sector).at("body").get<std::string>();
      }
    }
    if (complete) return panel_from_bodies(c, bodies, doc.value("retrieved", std::string{"cached"}));
  }

  if (!c.network_enabled) {
    throw RetrievalError("no cached BEA retrieval for " + cache_prefix(c) + "* and network access is disabled");
  }
  if (c.api_key.empty()) {
    throw AuthConfigError(std::string("BEA API key missing: set ") + kBeaKeyEnv + " or api_key in the configuration");
  }

  const Endpoint ep = split_endpoint(c.endpoint);
  std::map<std::string, std::string> bodies;
  for (const auto& [sector, line] : c.line_codes) bodies[sector] = fetch_line(c, ep, line);

  const std::string date = c.retrieval_date.value_or(today_utc());
  // Map before caching so a malformed response never lands on disk.
  PanelDataset panel = panel_from_bodies(c, bodies, date);

  if (!c.cache_dir.empty()) {
    ordered_json doc{{"table", c.table_name},
                     {"geo_fips", c.geo_fips},
                     {"first", c.first.to_string()},
                     {"last", c.last.to_string()},
                     {"retrieved", date}};
    for (const auto& [sector, line] : c.line_codes) {
      doc["responses"][sector] = {{"line_code", line}, {"body", bodies.at(sector)}};
    }
    std::error_code ec;
    std::filesystem::create_directories(c.cache_dir, ec);
    const auto final_path = c.cache_dir / bea_cache_name(c, date);
    auto tmp = final_path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
      std::ofstream out(tmp, std::ios::binary);
      if (!out) throw IoError("cannot write cache file " + tmp.string());
      out << doc.dump(1);
      if (!out) throw IoError("failed writing cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, final_path, ec);
    if (ec) {
      std::filesystem::remove(tmp, ec);
      throw IoError("cannot publish cache file " + final_path.string());
    }
  }
  return panel;
}

}  // namespace shockcast

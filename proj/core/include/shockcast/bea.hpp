#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shockcast/panel.hpp"

namespace shockcast {

inline constexpr const char* kBeaKeyEnv = "BEA_API_KEY";
inline constexpr const char* kCacheDirEnv = "SHOCKCAST_CACHE_DIR";

struct BeaConfig {
  std::string endpoint = "https://apps.bea.gov/api/data";
  std::string api_key;
  std::string table_name = "SQINC5N";
  std::string geo_fips = "00000";
  // Sector code -> table line code, in panel order.
  std::vector<std::pair<std::string, int>> line_codes;
  Quarter first{2010, 1};
  Quarter last{2023, 2};
  std::filesystem::path cache_dir;
  bool network_enabled = true;
  // "YYYY-MM-DD". When unset, reads use the newest cached retrieval and writes
  // are stamped with today's UTC date.
  std::optional<std::string> retrieval_date;
  int timeout_seconds = 30;
};

// Reads a JSON configuration file. The API key and cache directory fall back to
// the BEA_API_KEY and SHOCKCAST_CACHE_DIR environment variables.
// Throws IoError or SchemaError.
BeaConfig load_bea_config(const std::filesystem::path& path);

// Quarterly income by industry for the configured window, log-transformed.
// A cache hit never touches the network. Failed retrievals leave the cache
// untouched.
//
// Errors: AuthConfigError (no key), RetrievalError (transport, remote error or
// cache miss with network disabled), MappingError (unexpected response shape).
PanelDataset fetch_bea(const BeaConfig& config);

// Parses one GetData response into level values over [first, last]; values are
// reported in thousands of dollars. Throws MappingError or RetrievalError.
QuarterlySeries parse_bea_response(std::string_view body, Quarter first, Quarter last);

// Cache file name for a retrieval on `date`.
std::string bea_cache_name(const BeaConfig& config, std::string_view date);

}  // namespace shockcast

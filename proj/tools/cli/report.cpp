#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "shockcast/errors.hpp"

namespace shockcast::cli {

using nlohmann::ordered_json;

namespace {

void write_value(std::string& out, const ordered_json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (v.type()) {
    case ordered_json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner + ordered_json(key).dump() + ": ";
        write_value(out, item, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case ordered_json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ",\n";
        out += inner;
        write_value(out, v[i], indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case ordered_json::value_t::number_float:
      out += format_fixed(v.get<double>());
      return;
    default:
      out += v.dump();
  }
}

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json quarter_or_null(const std::optional<Quarter>& q) {
  return q ? ordered_json(q->to_string()) : ordered_json(nullptr);
}

std::optional<double> read_optional(const ordered_json& obj, const char* key) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return obj.at(key).get<double>();
}

std::vector<double> read_vector(const ordered_json& obj, const char* key) {
  std::vector<double> out;
  for (const auto& x : obj.at(key)) out.push_back(x.get<double>());
  return out;
}

ordered_json as_floats(const std::vector<double>& v) {
  ordered_json arr = ordered_json::array();
  for (double x : v) arr.push_back(x);
  return arr;
}

}  // namespace

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s(buf);
  if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string to_json(const RunReport& r) {
  ordered_json doc;
  doc["tool"] = {{"name", "shockcast"}, {"version", r.tool_version}};
  doc["config"] = {{"source", r.config.source},
                   {"data", r.config.data},
                   {"train_end", r.config.train_end.to_string()},
                   {"horizon", r.config.horizon},
                   {"criterion", std::string(to_string(r.config.criterion))},
                   {"seed", r.config.seed},
                   {"trough_position", r.config.trough_position},
                   {"variance_divisor", r.config.divisor == VarianceDivisor::Sample ? "sample" : "population"}};
  doc["sectors"] = ordered_json::array();
  for (const auto& s : r.sectors) {
    ordered_json model{{"source", s.model.source},
                       {"order", s.model.order},
                       {"description", s.model.description},
                       {"criterion", optional_number(s.model.criterion_value)},
                       {"loglik", optional_number(s.model.loglik)},
                       {"aic", optional_number(s.model.aic)},
                       {"aicc", optional_number(s.model.aicc)},
                       {"bic", optional_number(s.model.bic)}};
    if (s.model.params) {
      const auto& p = *s.model.params;
      model["coefficients"] = {{"ar", as_floats(p.ar)},   {"ma", as_floats(p.ma)},
                               {"sar", as_floats(p.sar)}, {"sma", as_floats(p.sma)},
                               {"drift", p.drift_mu},     {"sigma2", p.sigma2}};
    } else {
      model["coefficients"] = nullptr;
    }
    ordered_json impacts = ordered_json::array();
    for (const auto& rec : s.impacts) {
      impacts.push_back({{"quarter", rec.quarter.to_string()},
                         {"forecast", rec.forecast},
                         {"actual", rec.actual},
                         {"impact", rec.impact}});
    }
    doc["sectors"].push_back({{"sector", s.sector},
                              {"model", std::move(model)},
                              {"impacts", std::move(impacts)},
                              {"turning_point",
                               {{"quarter", quarter_or_null(s.turning.quarter)},
                                {"impact", s.turning.impact_at_turn},
                                {"category", std::string(to_string(s.turning.category))}}}});
  }
  doc["aggregate"] = ordered_json::array();
  for (const auto& a : r.aggregate) {
    doc["aggregate"].push_back({{"quarter", a.quarter.to_string()}, {"impact", a.impact}});
  }
  ordered_json variance = ordered_json::array();
  for (const auto& e : r.variance.entries) {
    variance.push_back({{"sector", e.sector}, {"variance", e.variance}, {"contribution", e.contribution}});
  }
  doc["variance"] = {{"divisor", r.variance.divisor == VarianceDivisor::Sample ? "sample" : "population"},
                     {"sectors", std::move(variance)}};

  std::string out;
  write_value(out, doc, 0);
  out += "\n";
  return out;
}

RunReport report_from_json(std::string_view text) {
  try {
    const auto doc = ordered_json::parse(text);
    RunReport r;
    r.tool_version = doc.at("tool").at("version").get<std::string>();
    const auto& cfg = doc.at("config");
    r.config.source = cfg.at("source").get<std::string>();
    r.config.data = cfg.at("data").get<std::string>();
    r.config.train_end = Quarter::parse(cfg.at("train_end").get<std::string>());
    r.config.horizon = cfg.at("horizon").get<int>();
    r.config.criterion = parse_criterion(cfg.at("criterion").get<std::string>());
    r.config.seed = cfg.at("seed").get<std::uint64_t>();
    r.config.trough_position = cfg.at("trough_position").get<int>();
    r.config.divisor = cfg.at("variance_divisor").get<std::string>() == "population" ? VarianceDivisor::Population
                                                                                     : VarianceDivisor::Sample;
    for (const auto& s : doc.at("sectors")) {
      SectorReport sr;
      sr.sector = s.at("sector").get<std::string>();
      const auto& m = s.at("model");
      sr.model.source = m.at("source").get<std::string>();
      sr.model.order = m.at("order").get<std::string>();
      sr.model.description = m.at("description").get<std::string>();
      sr.model.criterion_value = read_optional(m, "criterion");
      sr.model.loglik = read_optional(m, "loglik");
      sr.model.aic = read_optional(m, "aic");
      sr.model.aicc = read_optional(m, "aicc");
      sr.model.bic = read_optional(m, "bic");
      if (m.contains("coefficients") && !m.at("coefficients").is_null()) {
        const auto& c = m.at("coefficients");
        sr.model.params = ArimaParams{read_vector(c, "ar"), read_vector(c, "ma"), read_vector(c, "sar"),
                                      read_vector(c, "sma"), c.at("drift").get<double>(),
                                      c.at("sigma2").get<double>()};
      }
      for (const auto& rec : s.at("impacts")) {
        sr.impacts.push_back({Quarter::parse(rec.at("quarter").get<std::string>()), rec.at("forecast").get<double>(),
                              rec.at("actual").get<double>(), rec.at("impact").get<double>()});
      }
      const auto& tp = s.at("turning_point");
      sr.turning.sector = sr.sector;
      if (!tp.at("quarter").is_null()) sr.turning.quarter = Quarter::parse(tp.at("quarter").get<std::string>());
      sr.turning.impact_at_turn = tp.at("impact").get<double>();
      sr.turning.category = parse_resilience(tp.at("category").get<std::string>());
      r.sectors.push_back(std::move(sr));
    }
    for (const auto& a : doc.at("aggregate")) {
      r.aggregate.push_back({Quarter::parse(a.at("quarter").get<std::string>()), a.at("impact").get<double>()});
    }
    const auto& v = doc.at("variance");
    r.variance.divisor = v.at("divisor").get<std::string>() == "population" ? VarianceDivisor::Population
                                                                           : VarianceDivisor::Sample;
    for (const auto& e : v.at("sectors")) {
      r.variance.entries.push_back(
          {e.at("sector").get<std::string>(), e.at("variance").get<double>(), e.at("contribution").get<double>()});
    }
    return r;
  } catch (const ordered_json::exception& e) {
    throw SchemaError(std::string("malformed report: ") + e.what());
  } catch (const DomainError& e) {
    throw SchemaError(std::string("malformed report: ") + e.what());
  }
}

std::vector<std::filesystem::path> write_csv_tables(const RunReport& report, const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> written;
  auto open = [&](const char* name) {
    auto path = dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    written.push_back(path);
    return out;
  };
  {
    auto out = open("impacts.csv");
    out << "sector,quarter,forecast,actual,impact\n";
    for (const auto& s : report.sectors) {
      for (const auto& r : s.impacts) {
        out << s.sector << ',' << r.quarter.to_string() << ',' << format_fixed(r.forecast) << ','
            << format_fixed(r.actual) << ',' << format_fixed(r.impact) << '\n';
      }
    }
  }
  {
    auto out = open("aggregate.csv");
    out << "quarter,impact\n";
    for (const auto& a : report.aggregate) out << a.quarter.to_string() << ',' << format_fixed(a.impact) << '\n';
  }
  {
    auto out = open("turning_points.csv");
    out << "sector,quarter,impact,category\n";
    for (const auto& s : report.sectors) {
      out << s.sector << ',' << (s.turning.quarter ? s.turning.quarter->to_string() : "none") << ','
          << format_fixed(s.turning.impact_at_turn) << ',' << to_string(s.turning.category) << '\n';
    }
  }
  {
    auto out = open("variance.csv");
    out << "sector,variance,contribution\n";
    for (const auto& e : report.variance.entries) {
      out << e.sector << ',' << format_fixed(e.variance) << ',' << format_fixed(e.contribution) << '\n';
    }
  }
  return written;
}

}  // namespace shockcast::cli

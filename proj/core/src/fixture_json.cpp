#include <json.hpp>

#include "shockcast/errors.hpp"
#include "shockcast/fixture.hpp"

namespace shockcast {

using nlohmann::ordered_json;

std::string fixture_to_json(const GoldenFixture& f) {
  ordered_json doc;
  doc["window_start"] = f.window_start.to_string();
  for (const auto& s : f.sectors) {
    ordered_json sector{{"code", s.code},
                        {"name", s.name},
                        {"reported_model", s.reported_model},
                        {"reported_description", s.reported_description},
                        {"reported_bic", s.reported_bic}};
    sector["rows"] = ordered_json::array();
    for (const auto& r : s.rows) sector["rows"].push_back({r.forecast, r.actual, r.impact});
    doc["sectors"].push_back(std::move(sector));
  }
  for (const auto& a : f.aggregate) doc["aggregate"].push_back({{"quarter", a.quarter.to_string()}, {"impact", a.impact}});
  for (const auto& t : f.turning_points) {
    doc["turning_points"].push_back({{"sector", t.sector},
                                     {"quarter", t.quarter.to_string()},
                                     {"impact", t.impact},
                                     {"category", std::string(to_string(t.category))}});
  }
  for (const auto& v : f.variance) {
    doc["variance"].push_back({{"sector", v.sector}, {"variance", v.variance}, {"contribution", v.contribution}});
  }
  for (const auto& s : f.summaries) {
    doc["summaries"].push_back({{"sector", s.sector}, {"min", s.min}, {"mean", s.mean}, {"max", s.max}});
  }
  return doc.dump(2) + "\n";
}

GoldenFixture fixture_from_json(std::string_view text) {
  try {
    const auto doc = ordered_json::parse(text);
    GoldenFixture f;
    f.window_start = Quarter::parse(doc.at("window_start").get<std::string>());
    for (const auto& s : doc.at("sectors")) {
      FixtureSector sector{s.at("code").get<std::string>(),
                           s.value("name", std::string{}),
                           s.value("reported_model", std::string{}),
                           s.value("reported_description", std::string{}),
                           s.value("reported_bic", 0.0),
                           {}};
      for (const auto& r : s.at("rows")) {
        if (r.size() != 3) throw SchemaError("fixture row must have 3 numbers");
        sector.rows.push_back({r[0].get<double>(), r[1].get<double>(), r[2].get<double>()});
      }
      f.sectors.push_back(std::move(sector));
    }
    for (const auto& a : doc.value("aggregate", ordered_json::array())) {
      f.aggregate.push_back({Quarter::parse(a.at("quarter").get<std::string>()), a.at("impact").get<double>()});
    }
    for (const auto& t : doc.value("turning_points", ordered_json::array())) {
      f.turning_points.push_back({t.at("sector").get<std::string>(),
                                  Quarter::parse(t.at("quarter").get<std::string>()),
                                  t.at("impact").get<double>(),
                                  parse_resilience(t.at("category").get<std::string>())});
    }
    for (const auto& v : doc.value("variance", ordered_json::array())) {
      f.variance.push_back({v.at("sector").get<std::string>(), v.at("variance").get<double>(),
                            v.at("contribution").get<double>()});
    }
    for (const auto& s : doc.value("summaries", ordered_json::array())) {
      f.summaries.push_back({s.at("sector").get<std::string>(), s.at("min").get<double>(),
                             s.at("mean").get<double>(), s.at("max").get<double>()});
    }
    return f;
  } catch (const ordered_json::exception& e) {
    throw SchemaError(std::string("malformed fixture document: ") + e.what());
  } catch (const DomainError& e) {
    throw SchemaError(std::string("malformed fixture document: ") + e.what());
  }
}

}  // namespace shockcast

#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <system_error>

#include "plot.hpp"
#include "report.hpp"
#include "shockcast/bea.hpp"
#include "shockcast/csv.hpp"
#include "shockcast/errors.hpp"
#include "shockcast/fixture.hpp"
#include "shockcast/search.hpp"
#include "validate.hpp"

#ifndef SHOCKCAST_VERSION
#define SHOCKCAST_VERSION "0.0.0"
#endif

namespace shockcast::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

// Failure while acquiring input data; always reported with the I/O exit code.
class InputError : public Error {
 public:
  using Error::Error;
};

struct CommonOptions {
  std::string data;
  std::string bea_config;
  std::string scale = "log";
  std::string train_end = "2019Q4";
  std::string criterion = "bic";
  std::uint64_t seed = 0;
  std::vector<std::string> sectors;
  bool sectors_given = false;
};

struct ImpactOptions {
  bool from_fixture = false;
  int horizon = 14;
  int trough_position = 2;
  std::string out = "shockcast-out";
  bool plots = true;
};

struct PlotOptions {
  std::string report;
  std::string out;
};

struct ValidateOptions {
  bool strict = false;
  std::string fixture;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
}

Quarter parse_quarter_flag(const std::string& text, const char* flag) {
  try {
    return Quarter::parse(text);
  } catch (const Error& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

Criterion parse_criterion_flag(const std::string& text) {
  try {
    return parse_criterion(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--criterion: ") + e.what());
  }
}

// Canonical sectors first in report order, then any others in input order.
std::vector<std::string> ordered_codes(std::vector<std::string> codes) {
  std::vector<std::string> out;
  for (auto canonical : kDefaultSectors) {
    auto it = std::find(codes.begin(), codes.end(), canonical);
    if (it != codes.end()) {
      out.emplace_back(*it);
      codes.erase(it);
    }
  }
  out.insert(out.end(), codes.begin(), codes.end());
  return out;
}

std::vector<std::string> select_sectors(const CommonOptions& opts, const std::vector<std::string>& available) {
  if (!opts.sectors_given) return ordered_codes(available);
  if (opts.sectors.empty()) throw UsageError("--sectors: empty sector list");
  std::vector<std::string> chosen;
  for (const auto& code : opts.sectors) {
    if (std::find(available.begin(), available.end(), code) == available.end()) {
      throw UsageError("--sectors: unknown sector " + code);
    }
    if (std::find(chosen.begin(), chosen.end(), code) == chosen.end()) chosen.push_back(code);
  }
  return ordered_codes(chosen);
}

PanelDataset load_panel(const CommonOptions& opts) {
  if (opts.data.empty() == opts.bea_config.empty()) {
    throw UsageError("exactly one of --data or --bea-config is required");
  }
  try {
    if (!opts.data.empty()) {
      CsvOptions csv;
      if (opts.scale == "level") csv.scale = Scale::Level;
      else if (opts.scale != "log") throw UsageError("--scale must be log or level");
      return load_csv(opts.data, csv);
    }
    return fetch_bea(load_bea_config(opts.bea_config));
  } catch (const UsageError&) {
    throw;
  } catch (const IoError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

std::vector<std::string> panel_codes(const PanelDataset& panel) {
  std::vector<std::string> codes;
  for (const auto& s : panel.sectors()) codes.push_back(s.sector);
  return codes;
}

SearchConfig search_config(const CommonOptions& opts) {
  SearchConfig cfg;
  cfg.criterion = parse_criterion_flag(opts.criterion);
  cfg.fit_options.seed = opts.seed;
  return cfg;
}

QuarterlySeries training_window(const QuarterlySeries& s, Quarter train_end, const std::string& code) {
  if (train_end < s.start() || train_end > s.end()) {
    throw WindowError(code + ": training end " + train_end.to_string() + " outside data " + s.start().to_string() +
                      " - " + s.end().to_string());
  }
  return s.slice(s.start(), train_end);
}

struct SectorFit {
  std::string code;
  std::optional<SearchResult> result;
  std::optional<QuarterlySeries> training;
  std::string error;
};

// Per-sector searches run concurrently; results come back in `codes` order.
std::vector<SectorFit> fit_sectors(const PanelDataset& panel, const std::vector<std::string>& codes,
                                   Quarter train_end, const SearchConfig& cfg) {
  std::vector<std::future<SectorFit>> jobs;
  for (const auto& code : codes) {
    jobs.push_back(std::async(std::launch::async, [&panel, code, train_end, cfg] {
      SectorFit fit{code, std::nullopt, std::nullopt, {}};
      try {
        fit.training = training_window(panel.series(code), train_end, code);
        fit.result = stepwise_search(*fit.training, cfg);
      } catch (const std::exception& e) {
        fit.error = e.what();
      }
      return fit;
    }));
  }
  std::vector<SectorFit> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

ModelSummary summarize_model(const FittedArima& m, Criterion c) {
  ModelSummary s;
  s.source = "fitted";
  s.order = m.order.to_string();
  s.description = m.order.description();
  s.criterion_value = m.criterion(c);
  s.loglik = m.loglik;
  s.aic = m.aic;
  s.aicc = m.aicc;
  s.bic = m.bic;
  s.params = m.params;
  return s;
}

RunReport assemble_report(RunConfigEcho config, std::vector<std::string> codes, std::vector<ModelSummary> models,
                          const std::vector<NamedSeries>& forecasts, const std::vector<NamedSeries>& actuals) {
  const ImpactPanel panel = compute_impacts(forecasts, actuals);
  TurningPointOptions tp;
  tp.trough_position = config.trough_position;
  const ResilienceReport analysis = analyze(panel, tp, config.divisor);

  RunReport report;
  report.tool_version = SHOCKCAST_VERSION;
  report.config = std::move(config);
  for (std::size_t i = 0; i < codes.size(); ++i) {
    report.sectors.push_back(
        {codes[i], std::move(models[i]), panel.sector(codes[i]).records, analysis.turning_points[i]});
  }
  report.aggregate = analysis.aggregate;
  report.variance = analysis.variance;
  return report;
}

void print_impact_summary(const RunReport& r, std::ostream& out) {
  char line[256];
  out << "Aggregate impact\n";
  for (const auto& a : r.aggregate) {
    std::snprintf(line, sizeof line, "  %-8s %14s\n", a.quarter.to_string().c_str(), format_fixed(a.impact).c_str());
    out << line;
  }
  out << "Turning points\n";
  for (const auto& s : r.sectors) {
    std::snprintf(line, sizeof line, "  %-6s %-8s %14s  %s\n", s.sector.c_str(),
                  s.turning.quarter ? s.turning.quarter->to_string().c_str() : "none",
                  format_fixed(s.turning.impact_at_turn).c_str(), std::string(to_string(s.turning.category)).c_str());
    out << line;
  }
  out << "Variance decomposition\n";
  for (const auto& e : r.variance.entries) {
    std::snprintf(line, sizeof line, "  %-6s %12s %10s%%\n", e.sector.c_str(), format_fixed(e.variance).c_str(),
                  format_fixed(e.contribution, 4).c_str());
    out << line;
  }
}

int cmd_fit(const CommonOptions& opts, const std::string& out_dir, std::ostream& out, std::ostream& err) {
  const Quarter train_end = parse_quarter_flag(opts.train_end, "--train-end");
  const SearchConfig cfg = search_config(opts);
  if (opts.sectors_given && opts.sectors.empty()) throw UsageError("--sectors: empty sector list");
  const PanelDataset panel = load_panel(opts);
  const auto codes = select_sectors(opts, panel_codes(panel));
  if (codes.empty()) throw UsageError("no sectors to fit");
  const auto fits = fit_sectors(panel, codes, train_end, cfg);

  std::ostringstream table;
  char line[512];
  const std::string crit(to_string(cfg.criterion));
  std::snprintf(line, sizeof line, "%-6s  %-40s  %-36s  %s\n", "Sector", "Model", "Description", crit.c_str());
  table << line;
  int failures = 0;
  for (const auto& f : fits) {
    if (f.result) {
      const auto& m = f.result->model;
      std::snprintf(line, sizeof line, "%-6s  %-40s  %-36s  %s\n", f.code.c_str(), m.order.to_string().c_str(),
                    m.order.description().c_str(), format_fixed(m.criterion(cfg.criterion)).c_str());
    } else {
      ++failures;
      std::snprintf(line, sizeof line, "%-6s  %-40s  %s\n", f.code.c_str(), "FAILED", f.error.c_str());
      err << f.code << ": " << f.error << "\n";
    }
    table << line;
  }
  out << table.str();

  if (!out_dir.empty()) {
    ensure_dir(out_dir);
    std::ostringstream csv;
    csv << "sector,order,description,criterion,value,loglik,aic,aicc,bic\n";
    for (const auto& f : fits) {
      if (!f.result) continue;
      const auto& m = f.result->model;
      csv << f.code << ",\"" << m.order.to_string() << "\"," << m.order.description() << ',' << crit << ','
          << format_fixed(m.criterion(cfg.criterion)) << ',' << format_fixed(m.loglik) << ',' << format_fixed(m.aic)
          << ',' << format_fixed(m.aicc) << ',' << format_fixed(m.bic) << '\n';
    }
    write_text(std::filesystem::path(out_dir) / "models.csv", csv.str());
  }
  return failures > 0 ? kExitFailure : kExitOk;
}

void write_outputs(const RunReport& report, const ImpactOptions& io, std::ostream& out) {
  const std::filesystem::path dir(io.out);
  ensure_dir(dir);
  write_text(dir / "report.json", to_json(report));
  write_csv_tables(report, dir);
  if (io.plots) write_plots(report, dir / "plots");
  print_impact_summary(report, out);
  out << "wrote " << (dir / "report.json").string() << "\n";
}

int cmd_impact_fixture(const CommonOptions& opts, const ImpactOptions& io, std::ostream& out) {
  const GoldenFixture& fx = load_fixture();
  const Quarter train_end = parse_quarter_flag(opts.train_end, "--train-end");
  const Criterion criterion = parse_criterion_flag(opts.criterion);
  if (train_end + 1 != fx.window_start) {
    throw WindowError("fixture forecasts start at " + fx.window_start.to_string() + "; --train-end must be " +
                      (fx.window_start - 1).to_string());
  }
  std::vector<std::string> available;
  for (const auto& s : fx.sectors) available.push_back(s.code);
  const auto codes = select_sectors(opts, available);

  const Quarter last = fx.window_start + static_cast<std::int64_t>(io.horizon - 1);
  std::vector<NamedSeries> forecasts;
  std::vector<NamedSeries> actuals;
  std::vector<ModelSummary> models;
  for (const auto& code : codes) {
    const auto& sector = fx.sector(code);
    const auto f = fx.forecast_series(code);
    if (last > f.end()) {
      throw WindowError("horizon " + std::to_string(io.horizon) + " exceeds the " + std::to_string(f.size()) +
                        "-quarter fixture window");
    }
    forecasts.push_back({code, f.slice(fx.window_start, last)});
    actuals.push_back({code, fx.actual_series(code).slice(fx.window_start, last)});
    ModelSummary m;
    m.source = "fixture";
    m.order = sector.reported_model;
    m.description = sector.reported_description;
    m.bic = sector.reported_bic;
    if (criterion == Criterion::BIC) m.criterion_value = sector.reported_bic;
    models.push_back(std::move(m));
  }

  RunConfigEcho echo;
  echo.source = "fixture";
  echo.data = "fixture";
  echo.train_end = train_end;
  echo.horizon = io.horizon;
  echo.criterion = criterion;
  echo.seed = opts.seed;
  echo.trough_position = io.trough_position;
  const RunReport report = assemble_report(echo, codes, std::move(models), forecasts, actuals);
  write_outputs(report, io, out);
  return kExitOk;
}

int cmd_impact_data(const CommonOptions& opts, const ImpactOptions& io, std::ostream& out, std::ostream& err) {
  const Quarter train_end = parse_quarter_flag(opts.train_end, "--train-end");
  const SearchConfig cfg = search_config(opts);
  if (opts.sectors_given && opts.sectors.empty()) throw UsageError("--sectors: empty sector list");
  const PanelDataset panel = load_panel(opts);
  const auto codes = select_sectors(opts, panel_codes(panel));
  if (codes.empty()) throw UsageError("no sectors to analyze");

  const Quarter first = train_end + 1;
  const Quarter last = train_end + static_cast<std::int64_t>(io.horizon);
  if (last > panel.end()) {
    throw WindowError("actuals end at " + panel.end().to_string() + " but the horizon needs " + first.to_string() +
                      " - " + last.to_string());
  }

  const auto fits = fit_sectors(panel, codes, train_end, cfg);
  std::vector<std::string> kept;
  std::vector<ModelSummary> models;
  std::vector<NamedSeries> forecasts;
  std::vector<NamedSeries> actuals;
  int failures = 0;
  for (const auto& f : fits) {
    if (!f.result) {
      ++failures;
      err << f.code << ": " << f.error << "\n";
      continue;
    }
    try {
      forecasts.push_back({f.code, forecast(f.result->model, *f.training, io.horizon)});
    } catch (const Error& e) {
      ++failures;
      err << f.code << ": " << e.what() << "\n";
      continue;
    }
    actuals.push_back({f.code, panel.series(f.code).slice(first, last)});
    models.push_back(summarize_model(f.result->model, cfg.criterion));
    kept.push_back(f.code);
  }
  if (kept.empty()) {
    err << "no sector could be fitted\n";
    return kExitFailure;
  }

  RunConfigEcho echo;
  echo.source = opts.data.empty() ? "bea" : "csv";
  echo.data = opts.data.empty() ? opts.bea_config : opts.data;
  echo.train_end = train_end;
  echo.horizon = io.horizon;
  echo.criterion = cfg.criterion;
  echo.seed = opts.seed;
  echo.trough_position = io.trough_position;
  const RunReport report = assemble_report(echo, kept, std::move(models), forecasts, actuals);
  write_outputs(report, io, out);
  return failures > 0 ? kExitFailure : kExitOk;
}

int cmd_plot(const PlotOptions& po, std::ostream& out) {
  const RunReport report = report_from_json(read_file(po.report));
  const auto files = write_plots(report, po.out);
  out << "wrote " << files.size() << " plots to " << po.out << "\n";
  return kExitOk;
}

int cmd_validate(const ValidateOptions& vo, std::ostream& out) {
  const GoldenFixture fx = vo.fixture.empty() ? load_fixture() : fixture_from_json(read_file(vo.fixture));
  const auto report = validate_fixture(fx);
  report.print(out, vo.strict);
  return report.exit_code(vo.strict);
}

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--data", opts.data, "Wide panel CSV (quarter column plus one column per sector)");
  cmd->add_option("--bea-config", opts.bea_config, "BEA retrieval configuration (JSON)");
  cmd->add_option("--scale", opts.scale, "Scale of --data values: log or level")->capture_default_str();
  cmd->add_option("--train-end", opts.train_end, "Last training quarter")->capture_default_str();
  cmd->add_option("--criterion", opts.criterion, "Selection criterion: aic, aicc or bic")->capture_default_str();
  cmd->add_option("--seed", opts.seed, "Seed for optimizer restarts")->capture_default_str();
  cmd->add_option("--sectors", opts.sectors, "Comma-separated sector codes")->delimiter(',')->expected(0, -1);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counterfactual ARIMA impact analysis for quarterly sector income", "shockcast"};
  app.set_version_flag("--version", std::string(SHOCKCAST_VERSION));
  app.require_subcommand(1);

  CommonOptions fit_opts;
  std::string fit_out;
  auto* fit = app.add_subcommand("fit", "Select and fit an ARIMA model per sector");
  add_common(fit, fit_opts);
  fit->add_option("--out", fit_out, "Directory for models.csv");

  CommonOptions impact_opts;
  ImpactOptions io;
  auto* impact = app.add_subcommand("impact", "Forecast counterfactuals and measure shock impacts");
  add_common(impact, impact_opts);
  impact->add_flag("--from-fixture", io.from_fixture, "Use the embedded reference forecasts and actuals");
  impact->add_option("--horizon", io.horizon, "Quarters after the training end")->capture_default_str();
  impact->add_option("--trough-position", io.trough_position, "Position of the trough quarter in the window")
      ->capture_default_str();
  impact->add_option("--out", io.out, "Output directory")->capture_default_str();
  bool no_plots = false;
  impact->add_flag("--no-plots", no_plots, "Skip SVG output");

  PlotOptions po;
  auto* plot = app.add_subcommand("plot", "Render SVG charts from a report");
  plot->add_option("--report", po.report, "report.json written by impact")->required();
  plot->add_option("--out", po.out, "Output directory")->required();

  ValidateOptions vo;
  auto* validate = app.add_subcommand("validate", "Check the reference fixture against its published tables");
  validate->add_flag("--strict", vo.strict, "Treat warnings as failures");
  validate->add_option("--fixture", vo.fixture, "Fixture JSON to check instead of the embedded one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (fit->parsed()) {
      fit_opts.sectors_given = fit->count("--sectors") > 0;
      return cmd_fit(fit_opts, fit_out, out, err);
    }
    if (impact->parsed()) {
      impact_opts.sectors_given = impact->count("--sectors") > 0;
      io.plots = !no_plots;
      if (io.horizon < 1) throw UsageError("--horizon must be positive");
      if (io.trough_position < 1 || io.trough_position > io.horizon) {
        throw UsageError("--trough-position must lie within the horizon");
      }
      if (io.from_fixture) {
        if (!impact_opts.data.empty() || !impact_opts.bea_config.empty()) {
          throw UsageError("--from-fixture cannot be combined with --data or --bea-config");
        }
        return cmd_impact_fixture(impact_opts, io, out);
      }
      return cmd_impact_data(impact_opts, io, out, err);
    }
    if (plot->parsed()) return cmd_plot(po, out);
    if (validate->parsed()) return cmd_validate(vo, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitIo;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const RetrievalError& e) {
    err << "retrieval error: " << e.what() << "\n";
    return kExitIo;
  } catch (const SchemaError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace shockcast::cli

#pragma once

// Command-line front end. Exit codes: 0 success, 1 validation or
// verification failure, 2 I/O failure.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ellipsograph/ellipsograph.hpp"

namespace ellipsograph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitIo = 2;

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path);
  return ss.str();
}

inline void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("error while writing " + path);
}

inline std::string num(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

inline std::string fixed(double v, int decimals) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(decimals) << v;
  return s.str();
}

/// Options shared by every command that works from a run configuration.
struct ConfigOptions {
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> overrides;
  std::vector<std::string> sets;

  void attach(CLI::App& cmd) {
    cmd.add_option("-c,--config", config_path, "Configuration file (sectioned key = value)");
    cmd.add_option("--set", sets, "Override any setting, e.g. --set trammel.pen_offset_mm=140");
    const std::pair<const char*, const char*> flags[] = {
        {"--pivot-separation-mm", "trammel.pivot_separation_mm"},
        {"--pivot-separation-studs", "trammel.pivot_separation_studs"},
        {"--pen-offset-mm", "trammel.pen_offset_mm"},
        {"--pen-offset-studs", "trammel.pen_offset_studs"},
        {"--shuttle-length-mm", "trammel.shuttle_length_mm"},
        {"--shuttle-width-mm", "trammel.shuttle_width_mm"},
        {"--channel-half-length-mm", "trammel.channel_half_length_mm"},
        {"--margin-mm", "page.margin_mm"},
        {"--max-chord-mm", "output.max_chord_mm"},
        {"--tol", "solver.tol"},
        {"--max-iter", "solver.max_iter"},
    };
    for (const auto& [flag, key] : flags) {
      cmd.add_option_function<std::string>(
          flag, [this, key = std::string(key)](const std::string& v) { overrides.emplace_back(key, v); },
          "Overrides " + std::string(key));
    }
  }

  RunConfig load() const {
    RawConfig raw;
    if (!config_path.empty()) raw = RawConfig::parse(read_file(config_path), config_path);
    auto all = overrides;
    for (const std::string& s : sets) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) throw ValidationError("--set expects key=value, got \"" + s + "\"");
      all.emplace_back(s.substr(0, eq), s.substr(eq + 1));
    }
    raw.apply_overrides(all);
    return raw.resolve();
  }
};

inline int cmd_design(double a, double b, const std::string& variant, ShuttleFootprint shuttle,
                      std::ostream& out) {
  PenPlacement placement;
  if (variant == "outside" || variant == "pen_outside") placement = PenPlacement::Outside;
  else if (variant == "between" || variant == "pen_between") placement = PenPlacement::Between;
  else throw ValidationError("--variant must be outside or between");

  const TrammelConfig cfg = design_for_ellipse(a, b, placement, shuttle);
  const SemiAxes ax = semi_axes(cfg);
  const double channel = required_channel_half_length(cfg);
  out << "# trammel drawing a " << num(2 * ax.along_x) << " x " << num(2 * ax.along_y)
      << " mm ellipse (" << to_string(placement) << ")\n"
      << "[trammel]\n"
      << "pivot_separation_mm = " << num(cfg.pivot_separation()) << "  # "
      << num(mm_to_studs(cfg.pivot_separation())) << " studs\n"
      << "pen_offset_mm = " << num(cfg.pen_offset()) << "  # " << num(mm_to_studs(cfg.pen_offset()))
      << " studs\n"
      << "shuttle_length_mm = " << num(shuttle.length) << "\n"
      << "shuttle_width_mm = " << num(shuttle.width) << "\n"
      << "channel_half_length_mm = " << num(channel) << "  # minimum for a full turn\n";
  return kExitOk;
}

inline int cmd_analyze(const RunConfig& rc, bool json, std::ostream& out) {
  const TrammelConfig cfg = rc.trammel();
  const ClearanceReport rep = forbidden_arcs(cfg, rc.tolerances.angle_tol);
  const SemiAxes ax = semi_axes(cfg);

  if (json) {
    nlohmann::ordered_json j;
    j["pivot_separation_mm"] = cfg.pivot_separation();
    j["pen_offset_mm"] = cfg.pen_offset();
    j["semi_axes_mm"] = {ax.along_x, ax.along_y};
    j["shuttle_mm"] = {cfg.shuttle().length, cfg.shuttle().width};
    if (std::isfinite(cfg.channel_half_length())) {
      j["channel_half_length_mm"] = cfg.channel_half_length();
    } else {
      j["channel_half_length_mm"] = nullptr;
    }
    j["required_channel_half_length_mm"] = required_channel_half_length(cfg);
    j["drawable_fraction"] = rep.drawable_fraction;
    j["forbidden_measure_rad"] = rep.forbidden.measure();
    j["forbidden_arcs"] = nlohmann::ordered_json::array();
    for (const ForbiddenArc& a : rep.arcs) {
      j["forbidden_arcs"].push_back({{"lo_rad", a.lo},
                                     {"hi_rad", a.hi},
                                     {"width_rad", a.width()},
                                     {"cause", std::string(to_string(a.cause))}});
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  out << "trammel: pivot separation " << num(cfg.pivot_separation()) << " mm, pen offset "
      << num(cfg.pen_offset()) << " mm, ellipse " << num(2 * ax.along_x) << " x "
      << num(2 * ax.along_y) << " mm\n"
      << "shuttles: " << num(cfg.shuttle().length) << " x " << num(cfg.shuttle().width)
      << " mm, channel half-length "
      << (std::isfinite(cfg.channel_half_length()) ? num(cfg.channel_half_length()) + " mm"
                                                   : std::string("unbounded"))
      << " (full turn needs " << num(required_channel_half_length(cfg)) << " mm)\n"
      << "drawable: " << fixed(100.0 * rep.drawable_fraction, 2) << "%\n"
      << "forbidden arcs: " << rep.arcs.size() << "\n";
  for (const ForbiddenArc& a : rep.arcs) {
    out << "  [" << fixed(a.lo, 6) << ", " << fixed(a.hi, 6) << "] rad  width " << fixed(a.width(), 6)
        << " rad (" << fixed(a.width() * 180.0 / kPi, 3) << " deg)  " << to_string(a.cause) << "\n";
  }
  return kExitOk;
}

inline int cmd_trace(const RunConfig& rc, OutputFormat format, std::ostream& out) {
  const TrammelConfig cfg = rc.trammel();
  const AngleSet domain = drawable_trace_domain(cfg, rc.tolerances.angle_tol);
  const Trace trace = sample_trace(cfg, domain, rc.max_chord_mm);
  if (format == OutputFormat::Csv) {
    write_output(to_csv(trace), rc.output_path, out);
  } else {
    const PageSpec page = orient_for(traced_ellipse(cfg), rc.page());
    write_output(to_svg(trace, page), rc.output_path, out);
  }
  return kExitOk;
}

inline std::string bom_table(const Bom& bom) {
  std::ostringstream out;
  out << std::left << std::setw(8) << "part_id" << std::setw(20) << "name" << std::right
      << std::setw(10) << "unit" << std::setw(6) << "qty" << std::setw(11) << "total" << "\n";
  for (const PartLine& l : bom.lines()) {
    out << std::left << std::setw(8) << l.part_id << std::setw(20) << l.name << std::right
        << std::setw(10) << (format_euros(l.unit_price) + " EUR") << std::setw(6) << l.quantity
        << std::setw(11) << (format_euros(l.line_total()) + " EUR") << "\n";
  }
  const BomTotals t = totals(bom);
  out << "total: " << t.part_count << " parts, " << format_euros(t.cost) << " EUR\n";
  return out.str();
}

inline int cmd_bom(const std::string& catalog_path, bool as_csv, std::ostream& out) {
  const Bom bom = catalog_path.empty() ? default_catalog() : load_catalog(read_file(catalog_path));
  if (as_csv) {
    out << save_catalog(bom);
    return kExitOk;
  }
  out << bom_table(bom);
  out << "note: a G2 ballpoint refill (under 1 EUR) is also needed and is not included\n";
  return kExitOk;
}

inline int cmd_verify(const RunConfig& rc, std::ostream& out) {
  const auto checks = run_checks(rc);
  std::size_t failed = 0;
  for (const CheckResult& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    failed += c.passed ? 0 : 1;
  }
  if (failed == 0) {
    out << "verify: all " << checks.size() << " checks passed\n";
    return kExitOk;
  }
  out << "verify: " << failed << " of " << checks.size() << " checks failed\n";
  return kExitInvalid;
}

}  // namespace detail

/// Entry point; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulate, verify and export drawings of an Archimedes trammel (ellipsograph)",
               "ellipsograph"};
  app.require_subcommand(1);

  double a = 0;
  double b = 0;
  std::string variant = "outside";
  ShuttleFootprint design_shuttle{};
  auto* design = app.add_subcommand("design", "Mechanism dimensions for a target ellipse");
  design->add_option("--a", a, "Semi-axis along x (mm)")->required();
  design->add_option("--b", b, "Semi-axis along y (mm)")->required();
  design->add_option("--variant", variant, "outside (pen beyond pivot) or between (pen between pivots)");
  design->add_option("--shuttle-length-mm", design_shuttle.length);
  design->add_option("--shuttle-width-mm", design_shuttle.width);

  detail::ConfigOptions analyze_opts;
  bool json = false;
  auto* analyze = app.add_subcommand("analyze", "Shuttle clearance: forbidden arcs and drawable fraction");
  analyze_opts.attach(*analyze);
  analyze->add_flag("--json", json, "Machine-readable report");

  detail::ConfigOptions trace_opts;
  std::string format;
  std::string trace_out;
  auto* trace = app.add_subcommand("trace", "Sample the drawable pen path as SVG or CSV");
  trace_opts.attach(*trace);
  trace->add_option("--format", format, "svg or csv (default: output.format)")
      ->check(CLI::IsMember({"svg", "csv"}));
  trace->add_option("-o,--output", trace_out, "Output file (default: stdout)");

  detail::ConfigOptions svg_opts;
  std::string svg_out;
  auto* svg = app.add_subcommand("svg", "Write the drawing as SVG");
  svg_opts.attach(*svg);
  svg->add_option("-o,--output", svg_out, "Output file (default: stdout)");

  detail::ConfigOptions csv_opts;
  std::string csv_out;
  auto* csv = app.add_subcommand("csv", "Write the sampled pen path as CSV");
  csv_opts.attach(*csv);
  csv->add_option("-o,--output", csv_out, "Output file (default: stdout)");

  std::string catalog;
  bool bom_csv = false;
  auto* bom = app.add_subcommand("bom", "Parts list and price");
  bom->add_option("--catalog", catalog, "Catalog CSV (default: built-in shopping list)");
  bom->add_flag("--csv", bom_csv, "Print the catalog in its CSV format instead of a table");

  detail::ConfigOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Cross-check closed form, constraint solver and trace");
  verify_opts.attach(*verify);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (design->parsed()) return detail::cmd_design(a, b, variant, design_shuttle, out);
    if (analyze->parsed()) return detail::cmd_analyze(analyze_opts.load(), json, out);
    if (trace->parsed()) {
      RunConfig rc = trace_opts.load();
      if (!trace_out.empty()) rc.output_path = trace_out;
      OutputFormat f = rc.format;
      if (format == "svg") f = OutputFormat::Svg;
      if (format == "csv") f = OutputFormat::Csv;
      return detail::cmd_trace(rc, f, out);
    }
    if (svg->parsed()) {
      RunConfig rc = svg_opts.load();
      if (!svg_out.empty()) rc.output_path = svg_out;
      return detail::cmd_trace(rc, OutputFormat::Svg, out);
    }
    if (csv->parsed()) {
      RunConfig rc = csv_opts.load();
      if (!csv_out.empty()) rc.output_path = csv_out;
      return detail::cmd_trace(rc, OutputFormat::Csv, out);
    }
    if (bom->parsed()) return detail::cmd_bom(catalog, bom_csv, out);
    if (verify->parsed()) return detail::cmd_verify(verify_opts.load(), out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace ellipsograph::cli

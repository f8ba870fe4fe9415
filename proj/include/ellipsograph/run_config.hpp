#pragma once

// Run configuration for the command-line tool.
//
// Grammar (one item per line, UTF-8, LF or CRLF):
//
//   # comment                 whole-line or trailing comment
//   [section]                 one of trammel, page, output, solver, verify
//   key = value               key known to the current section
//
// Length fields that accept studs come in pairs (`pivot_separation_studs` /
// `pivot_separation_mm`); exactly one of a pair may be given. Studs are
// converted to mm (x8) when the configuration is resolved. Overrides set on
// the command line replace the file's value and its unit sibling.

#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ellipsograph/export.hpp"
#include "ellipsograph/geometry.hpp"
#include "ellipsograph/solver.hpp"
#include "ellipsograph/trammel.hpp"

namespace ellipsograph {

enum class OutputFormat { Svg, Csv };

struct RunConfig {
  // Shipped default: a plausible reconstruction of the LEGO build, not a
  // measured one. Draws a 280 x 200 mm ellipse.
  double pivot_separation_mm = studs_to_mm(5);
  double pen_offset_mm = 140.0;
  ShuttleFootprint shuttle{};
  double channel_half_length_mm = 72.0;

  double page_width_mm = 210.0;
  double page_height_mm = 297.0;
  double margin_mm = 0.0;

  OutputFormat format = OutputFormat::Svg;
  std::string output_path;  // empty: stdout
  double max_chord_mm = 0.5;

  SolverConfig solver{};
  Tolerances tolerances{};

  TrammelConfig trammel() const {
    return TrammelConfig(pivot_separation_mm, pen_offset_mm, shuttle, channel_half_length_mm);
  }
  PageSpec page() const { return PageSpec(page_width_mm, page_height_mm, margin_mm); }
};

/// Key/value pairs as read from a file plus command-line overrides, keyed
/// "section.key".
class RawConfig {
 public:
  struct Entry {
    std::string value;
    std::string origin;  // "file:line" or "command line"
  };

  static RawConfig parse(std::string_view text, const std::string& source = "config") {
    RawConfig raw;
    std::string section;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view line = text.substr(pos, eol - pos);
      pos = eol + 1;
      ++line_no;
      const std::string where = source + ":" + std::to_string(line_no);

      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;

      if (line.front() == '[') {
        if (line.back() != ']') throw ValidationError(where + ": unterminated section header");
        section = std::string(trim(line.substr(1, line.size() - 2)));
        if (!known_sections().count(section)) {
          throw ValidationError(where + ": unknown section [" + section + "]");
        }
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw ValidationError(where + ": expected key = value");
      if (section.empty()) throw ValidationError(where + ": key outside of any section");
      const std::string key = section + "." + std::string(trim(line.substr(0, eq)));
      const std::string value(trim(line.substr(eq + 1)));
      if (!known_keys().count(key)) throw ValidationError(where + ": unknown key " + key);
      if (value.empty()) throw ValidationError(where + ": empty value for " + key);
      if (raw.entries_.count(key)) throw ValidationError(where + ": duplicate key " + key);
      if (const auto sib = sibling(key); !sib.empty() && raw.entries_.count(sib)) {
        throw ValidationError(where + ": " + key + " conflicts with " + sib +
                              " (give the length in studs or mm, not both)");
      }
      raw.entries_[key] = {value, where};
    }
    return raw;
  }

  /// Applies command-line overrides. Setting both units of one length in a
  /// single batch is an error.
  void apply_overrides(const std::vector<std::pair<std::string, std::string>>& overrides) {
    std::set<std::string> touched;
    for (const auto& [key, value] : overrides) {
      if (!known_keys().count(key)) throw ValidationError("unknown setting " + key);
      const auto sib = sibling(key);
      if (!sib.empty() && touched.count(sib)) {
        throw ValidationError(key + " conflicts with " + sib + " (give studs or mm, not both)");
      }
      touched.insert(key);
      if (!sib.empty()) entries_.erase(sib);
      entries_[key] = {value, "command line"};
    }
  }

  const std::map<std::string, Entry>& entries() const noexcept { return entries_; }

  RunConfig resolve() const {
    RunConfig c;
    length("trammel.pivot_separation", c.pivot_separation_mm);
    length("trammel.pen_offset", c.pen_offset_mm);
    number("trammel.shuttle_length_mm", c.shuttle.length);
    number("trammel.shuttle_width_mm", c.shuttle.width);
    if (const Entry* e = find("trammel.channel_half_length_mm"); e && e->value == "unbounded") {
      c.channel_half_length_mm = kUnboundedChannel;
    } else {
      number("trammel.channel_half_length_mm", c.channel_half_length_mm);
    }

    if (const Entry* e = find("page.preset")) {
      if (find("page.width_mm") || find("page.height_mm")) {
        throw ValidationError(e->origin + ": page.preset conflicts with explicit page size");
      }
      if (e->value != "A4" && e->value != "a4") {
        throw ValidationError(e->origin + ": unknown page preset \"" + e->value + "\"");
      }
    }
    number("page.width_mm", c.page_width_mm);
    number("page.height_mm", c.page_height_mm);
    number("page.margin_mm", c.margin_mm);

    if (const Entry* e = find("output.format")) {
      if (e->value == "svg") c.format = OutputFormat::Svg;
      else if (e->value == "csv") c.format = OutputFormat::Csv;
      else throw ValidationError(e->origin + ": output.format must be svg or csv");
    }
    if (const Entry* e = find("output.path")) c.output_path = e->value;
    number("output.max_chord_mm", c.max_chord_mm);

    number("solver.tol", c.solver.tol);
    if (const Entry* e = find("solver.max_iter")) {
      double v = 0;
      parse_number(*e, "solver.max_iter", v);
      if (v != std::floor(v) || v < 1 || v > 1e6) {
        throw ValidationError(e->origin + ": solver.max_iter must be a positive integer");
      }
      c.solver.max_iter = static_cast<int>(v);
    }
    number("verify.residual_tol", c.tolerances.residual_tol);
    number("verify.length_tol", c.tolerances.solver_tol);
    number("verify.angle_tol", c.tolerances.angle_tol);

    // Downstream invariants, checked once here.
    (void)c.trammel();
    (void)c.page();
    c.solver.validate();
    c.tolerances.validate();
    detail::require(c.max_chord_mm > 0.0, "output.max_chord_mm must be positive");
    return c;
  }

 private:
  static std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }

  static const std::set<std::string>& known_sections() {
    static const std::set<std::string> s{"trammel", "page", "output", "solver", "verify"};
    return s;
  }

  static const std::set<std::string>& known_keys() {
    static const std::set<std::string> k{
        "trammel.pivot_separation_studs", "trammel.pivot_separation_mm",
        "trammel.pen_offset_studs",       "trammel.pen_offset_mm",
        "trammel.shuttle_length_mm",      "trammel.shuttle_width_mm",
        "trammel.channel_half_length_mm", "page.preset",
        "page.width_mm",                  "page.height_mm",
        "page.margin_mm",                 "output.format",
        "output.path",                    "output.max_chord_mm",
        "solver.tol",                     "solver.max_iter",
        "verify.residual_tol",            "verify.length_tol",
        "verify.angle_tol"};
    return k;
  }

  static std::string sibling(const std::string& key) {
    auto swap_suffix = [&](std::string_view from, std::string_view to) -> std::string {
      if (key.size() > from.size() && key.compare(key.size() - from.size(), from.size(), from) == 0) {
        std::string s = key.substr(0, key.size() - from.size()) + std::string(to);
        return known_keys().count(s) ? s : std::string{};
      }
      return {};
    };
    if (auto s = swap_suffix("_studs", "_mm"); !s.empty()) return s;
    return swap_suffix("_mm", "_studs");
  }

  const Entry* find(const std::string& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  static void parse_number(const Entry& e, const std::string& key, double& out) {
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    double v = 0;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
      throw ValidationError(e.origin + ": " + key + " is not a finite number: \"" + e.value + "\"");
    }
    out = v;
  }

  void number(const std::string& key, double& out) const {
    if (const Entry* e = find(key)) parse_number(*e, key, out);
  }

  void length(const std::string& stem, double& out_mm) const {
    if (const Entry* e = find(stem + "_mm")) parse_number(*e, stem + "_mm", out_mm);
    if (const Entry* e = find(stem + "_studs")) {
      double studs = 0;
      parse_number(*e, stem + "_studs", studs);
      out_mm = studs_to_mm(studs);
    }
  }

  std::map<std::string, Entry> entries_;
};

}  // namespace ellipsograph

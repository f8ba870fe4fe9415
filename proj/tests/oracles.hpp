#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the code path it is used to check.

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "ellipsograph/clearance.hpp"
#include "ellipsograph/trammel.hpp"

namespace oracle {

using ellipsograph::Rect;
using ellipsograph::TrammelConfig;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

inline bool rects_meet(const Rect& a, const Rect& b) {
  return a.min_x <= b.max_x && b.min_x <= a.max_x && a.min_y <= b.max_y && b.min_y <= a.max_y;
}

/// Collision by intersecting the two shuttle rectangles directly.
inline bool collides_by_rects(const TrammelConfig& cfg, double theta) {
  const auto [c, d] = ellipsograph::shuttle_rects(cfg, theta);
  return rects_meet(c, d);
}

/// Overrun by testing each rectangle against its channel's extent.
inline bool overruns_by_rects(const TrammelConfig& cfg, double theta) {
  const auto [c, d] = ellipsograph::shuttle_rects(cfg, theta);
  const double h = cfg.channel_half_length();
  return c.min_x < -h || c.max_x > h || d.min_y < -h || d.max_y > h;
}

/// Per-sample verdicts on a uniform grid of n angles 2 pi k / n.
template <class Pred>
std::vector<char> dense_samples(Pred blocked, int n) {
  std::vector<char> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[k] = blocked(kTwoPi * k / n);
  return v;
}

inline double blocked_fraction(const std::vector<char>& v) {
  std::size_t count = 0;
  for (char c : v) count += c ? 1 : 0;
  return static_cast<double>(count) / v.size();
}

/// Midpoints between consecutive samples whose verdicts differ.
inline std::vector<double> transitions(const std::vector<char>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<double> out;
  for (int k = 0; k < n; ++k) {
    if (v[k] != v[(k + 1) % n]) out.push_back(kTwoPi * (k + 0.5) / n);
  }
  return out;
}

/// Splits `text` into non-empty lines.
inline std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

struct CsvRow {
  int arc;
  double theta;
  double x;
  double y;
};

inline std::vector<CsvRow> parse_trace_csv(const std::string& text) {
  std::vector<CsvRow> rows;
  const auto ls = lines(text);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    CsvRow r{};
    char c1, c2, c3;
    std::istringstream in(ls[i]);
    in >> r.arc >> c1 >> r.theta >> c2 >> r.x >> c3 >> r.y;
    if (!in || c1 != ',' || c2 != ',' || c3 != ',') throw std::runtime_error("bad csv row: " + ls[i]);
    rows.push_back(r);
  }
  return rows;
}

/// All (x, y) pairs from every points="..." attribute of an SVG document.
inline std::vector<std::vector<std::pair<double, double>>> parse_svg_polylines(const std::string& svg) {
  std::vector<std::vector<std::pair<double, double>>> out;
  std::size_t pos = 0;
  const std::string key = "points=\"";
  while ((pos = svg.find(key, pos)) != std::string::npos) {
    pos += key.size();
    const std::size_t end = svg.find('"', pos);
    std::istringstream in(svg.substr(pos, end - pos));
    std::vector<std::pair<double, double>> pts;
    double x, y;
    char comma;
    while (in >> x >> comma >> y) pts.emplace_back(x, y);
    out.push_back(std::move(pts));
    pos = end;
  }
  return out;
}

}  // namespace oracle

#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "ellipsograph/error.hpp"

namespace ellipsograph {

/// Money in whole euro cents.
struct Cents {
  std::int64_t value = 0;

  friend constexpr Cents operator+(Cents a, Cents b) noexcept { return {a.value + b.value}; }
  friend constexpr Cents operator*(Cents a, std::int64_t n) noexcept { return {a.value * n}; }
  friend constexpr auto operator<=>(Cents, Cents) noexcept = default;
};

/// "0.97" for 97 cents.
inline std::string format_euros(Cents c) {
  const bool neg = c.value < 0;
  const std::int64_t v = neg ? -c.value : c.value;
  std::string cents = std::to_string(v % 100);
  if (cents.size() < 2) cents.insert(0, "0");
  return (neg ? "-" : "") + std::to_string(v / 100) + "." + cents;
}

struct PartLine {
  std::string part_id;  // LEGO design number
  std::string name;
  Cents unit_price;
  std::int64_t quantity = 1;

  Cents line_total() const noexcept { return unit_price * quantity; }
};

struct BomTotals {
  std::int64_t part_count = 0;
  Cents cost;
};

/// Ordered parts list with unique part ids.
class Bom {
 public:
  Bom() = default;

  void add(PartLine line) {
    if (line.unit_price.value < 0 || line.quantity < 1) {
      throw CatalogError(CatalogErrorKind::NegativeValue, lines_.size() + 1,
                         "part " + line.part_id + " needs price >= 0 and quantity >= 1");
    }
    if (!ids_.insert(line.part_id).second) {
      throw CatalogError(CatalogErrorKind::DuplicatePart, lines_.size() + 1, line.part_id);
    }
    lines_.push_back(std::move(line));
  }

  const std::vector<PartLine>& lines() const noexcept { return lines_; }
  std::size_t size() const noexcept { return lines_.size(); }

  const PartLine* find(std::string_view part_id) const noexcept {
    for (const auto& l : lines_) {
      if (l.part_id == part_id) return &l;
    }
    return nullptr;
  }

 private:
  std::vector<PartLine> lines_;
  std::unordered_set<std::string> ids_;
};

inline BomTotals totals(const Bom& bom) noexcept {
  BomTotals t;
  for (const auto& l : bom.lines()) {
    t.part_count += l.quantity;
    t.cost = t.cost + l.line_total();
  }
  return t;
}

/// The ellipsograph shopping list, cheapest colour variants, prices in cents.
/// Part 3008 is listed at 1 cent: its line total (3 cents) and the 97 cent
/// grand total both require it.
inline Bom default_catalog() {
  Bom b;
  b.add({"3005", "Brick 1x1", Cents{1}, 2});
  b.add({"3004", "Brick 1x2", Cents{1}, 2});
  b.add({"3009", "Brick 1x6", Cents{1}, 5});
  b.add({"3001", "Brick 2x4", Cents{1}, 4});
  b.add({"3008", "Brick 1x8", Cents{1}, 3});
  b.add({"2431", "Flat tile 1x4", Cents{1}, 2});
  b.add({"32278", "Technic beam 15M", Cents{9}, 1});
  b.add({"2780", "Technic pin", Cents{1}, 4});
  b.add({"6098", "Base plate 16x16", Cents{66}, 1});
  return b;
}

inline constexpr std::string_view kCatalogHeader = "part_id,name,unit_price_cents,quantity";

namespace detail {

inline std::vector<std::string_view> split_commas(std::string_view row) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = row.find(',', start);
    out.push_back(row.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace detail

/// Parses the catalog CSV. CR before LF is tolerated; blank lines are not.
inline Bom load_catalog(std::string_view text) {
  Bom bom;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool header_seen = false;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view row = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);

    if (!header_seen) {
      if (row != kCatalogHeader) {
        throw CatalogError(CatalogErrorKind::MalformedRow, line_no,
                           "expected header \"" + std::string(kCatalogHeader) + "\"");
      }
      header_seen = true;
      continue;
    }
    const auto fields = detail::split_commas(row);
    if (fields.size() != 4) {
      throw CatalogError(CatalogErrorKind::MalformedRow, line_no,
                         "expected 4 fields, got " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) {
      throw CatalogError(CatalogErrorKind::MalformedRow, line_no, "empty part_id");
    }
    PartLine line{std::string(fields[0]), std::string(fields[1]), {}, 0};
    if (!detail::parse_int(fields[2], line.unit_price.value)) {
      throw CatalogError(CatalogErrorKind::MalformedRow, line_no,
                         "unit_price_cents is not an integer: \"" + std::string(fields[2]) + "\"");
    }
    if (!detail::parse_int(fields[3], line.quantity)) {
      throw CatalogError(CatalogErrorKind::MalformedRow, line_no,
                         "quantity is not an integer: \"" + std::string(fields[3]) + "\"");
    }
    if (line.unit_price.value < 0) {
      throw CatalogError(CatalogErrorKind::NegativeValue, line_no, "negative unit price");
    }
    if (line.quantity < 1) {
      throw CatalogError(CatalogErrorKind::NegativeValue, line_no, "quantity must be >= 1");
    }
    if (bom.find(line.part_id) != nullptr) {
      throw CatalogError(CatalogErrorKind::DuplicatePart, line_no, line.part_id);
    }
    bom.add(std::move(line));
  }
  if (!header_seen) throw CatalogError(CatalogErrorKind::MalformedRow, 1, "empty catalog");
  return bom;
}

/// Canonical serialization: header, one row per line, LF endings.
inline std::string save_catalog(const Bom& bom) {
  std::string out = std::string(kCatalogHeader) + "\n";
  std::size_t line_no = 1;
  for (const auto& l : bom.lines()) {
    ++line_no;
    for (const std::string* field : {&l.part_id, &l.name}) {
      if (field->find_first_of(",\r\n") != std::string::npos) {
        throw CatalogError(CatalogErrorKind::MalformedRow, line_no,
                           "field contains a comma or line break: \"" + *field + "\"");
      }
    }
    out += l.part_id + "," + l.name + "," + std::to_string(l.unit_price.value) + "," +
           std::to_string(l.quantity) + "\n";
  }
  return out;
}

}  // namespace ellipsograph

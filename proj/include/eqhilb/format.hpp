#pragma once

// Text and JSON renderings. JSON integers that can grow without bound are
// written as decimal strings.

#include <optional>
#include <string>
#include <string_view>

#include "eqhilb/orbit.hpp"
#include "eqhilb/poly.hpp"

namespace eqhilb {

/// `1 - 4*t + 6*t^2`
std::string format_poly(const IntPoly1& p);
/// Grouped by ascending s-degree: `(1 - t) + s*(t^3)`.
std::string format_poly(const IntPoly2& p);
/// `NUMERATOR / DENOMINATOR`, e.g. `1 / (1 - s)`.
std::string format_series(const FactoredRational2& h);
/// One line per n: `n=3: 1 3 6 ...`.
std::string format_table(const SeriesTable& table);

struct SeriesDocument {
  OrbitMonomial orbit;
  FactoredRational2 series;
  std::optional<SeriesTable> expansion;
};

std::string series_to_json(const SeriesDocument& doc, int indent = 2);

/// Inverse of series_to_json. Throws Error(parse_error) on malformed input.
SeriesDocument series_from_json(std::string_view text);

} // namespace eqhilb

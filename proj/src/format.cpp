#include "eqhilb/format.hpp"

#include <sstream>

#include <json.hpp>

#include "eqhilb/error.hpp"

namespace eqhilb {

using nlohmann::json;

namespace {

std::string t_power(std::uint32_t e) {
  if (e == 0) return "";
  if (e == 1) return "t";
  return "t^" + std::to_string(e);
}

std::string one_minus_t(std::int64_t e) {
  if (e == 1) return "(1 - t)";
  if (e < 0) return "(1 - t)^(" + std::to_string(e) + ")";
  return "(1 - t)^" + std::to_string(e);
}

bool is_single_term(const IntPoly1& p) { return p.coeffs().size() == 1; }

} // namespace

std::string format_poly(const IntPoly1& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.coeffs()) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += t_power(e);
    }
  }
  return out;
}

std::string format_poly(const IntPoly2& p) {
  if (p.is_zero()) return "0";
  const auto parts = p.s_coefficients();
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const IntPoly1& part = parts[k];
    if (part.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string body = format_poly(part);
    if (k == 0) {
      out += is_single_term(part) || parts.size() == 1 ? body : "(" + body + ")";
      continue;
    }
    std::string s_part = k == 1 ? "s" : "s^" + std::to_string(k);
    if (part == IntPoly1(1))
      out += s_part;
    else
      out += s_part + "*(" + body + ")";
  }
  return out;
}

std::string format_series(const FactoredRational2& h) {
  std::string num = format_poly(h.numerator());
  const bool compound = h.numerator().coeffs().size() > 1;

  std::vector<std::string> den;
  if (h.pow_one_minus_t() != 0) den.push_back(one_minus_t(h.pow_one_minus_t()));
  for (const auto& factor : h.factors()) {
    std::string base = factor.c_exp == 0 ? "1" : one_minus_t(factor.c_exp);
    std::string s_term =
        factor.f == IntPoly1(1) ? "s" : "s*(" + format_poly(factor.f) + ")";
    den.push_back("(" + base + " - " + s_term + ")");
  }
  std::string out = compound ? "(" + num + ")" : num;
  out += " / ";
  if (den.empty()) return out + "1";
  for (std::size_t k = 0; k < den.size(); ++k) {
    if (k) out += " * ";
    out += den[k];
  }
  return out;
}

std::string format_table(const SeriesTable& table) {
  std::ostringstream os;
  for (std::int64_t n = 0; n <= table.nmax(); ++n) {
    os << "n=" << n << ":";
    for (std::int64_t j = 0; j <= table.degmax(); ++j) os << ' ' << table.at(n, j).get_str();
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- JSON

std::string series_to_json(const SeriesDocument& doc, int indent) {
  json orbit;
  orbit["c"] = doc.orbit.c();
  orbit["mu"] = doc.orbit.mu();
  orbit["b"] = doc.orbit.b();
  orbit["matrix"] = doc.orbit.matrix();

  json numerator = json::array();
  for (const auto& [key, c] : doc.series.numerator().coeffs())
    numerator.push_back({{"s", key.first}, {"t", key.second}, {"coeff", c.get_str()}});

  json factors = json::array();
  for (const auto& factor : doc.series.factors()) {
    json coeffs = json::array();
    for (const auto& c : factor.f.dense(static_cast<std::size_t>(factor.f.degree() + 1)))
      coeffs.push_back(c.get_str());
    factors.push_back({{"c_exp", factor.c_exp}, {"f_coeffs", coeffs}});
  }

  json out;
  out["orbit"] = orbit;
  out["series"] = {{"numerator", numerator},
                   {"pow_one_minus_t", doc.series.pow_one_minus_t()},
                   {"factors", factors}};
  if (doc.expansion) {
    const auto& table = *doc.expansion;
    json rows = json::array();
    for (std::int64_t n = 0; n <= table.nmax(); ++n) {
      json row = json::array();
      for (std::int64_t j = 0; j <= table.degmax(); ++j) row.push_back(table.at(n, j).get_str());
      rows.push_back(row);
    }
    out["expand"] = {{"nmax", table.nmax()}, {"degmax", table.degmax()}, {"rows", rows}};
  }
  return out.dump(indent);
}

namespace {

Integer parse_integer(const json& value) {
  Integer out;
  if (!value.is_string() || out.set_str(value.get<std::string>(), 10) != 0)
    throw Error(ErrorCode::parse_error, "expected a decimal integer string");
  return out;
}

SeriesDocument read_document(const json& doc) {
  std::vector<std::vector<std::int64_t>> matrix =
      doc.at("orbit").at("matrix").get<std::vector<std::vector<std::int64_t>>>();
  OrbitMonomial orbit(matrix);

  const json& series = doc.at("series");
  IntPoly2 numerator;
  for (const auto& term : series.at("numerator"))
    numerator.add_term(term.at("s").get<std::uint32_t>(),
                       term.at("t").get<std::uint32_t>(), parse_integer(term.at("coeff")));
  std::vector<DenominatorFactor> factors;
  for (const auto& factor : series.at("factors")) {
    std::vector<Integer> coeffs;
    for (const auto& c : factor.at("f_coeffs")) coeffs.push_back(parse_integer(c));
    factors.push_back(DenominatorFactor{factor.at("c_exp").get<std::uint32_t>(),
                                        IntPoly1::from_dense(coeffs)});
  }
  FactoredRational2 rational(std::move(numerator),
                             series.at("pow_one_minus_t").get<std::int64_t>(),
                             std::move(factors));

  std::optional<SeriesTable> expansion;
  if (doc.contains("expand")) {
    const json& e = doc.at("expand");
    SeriesTable table(e.at("nmax").get<std::int64_t>(), e.at("degmax").get<std::int64_t>());
    const json& rows = e.at("rows");
    if (rows.size() != static_cast<std::size_t>(table.nmax() + 1))
      throw Error(ErrorCode::parse_error, "expand.rows has the wrong length");
    for (std::int64_t n = 0; n <= table.nmax(); ++n) {
      const json& row = rows.at(static_cast<std::size_t>(n));
      if (row.size() != static_cast<std::size_t>(table.degmax() + 1))
        throw Error(ErrorCode::parse_error, "expand row has the wrong length");
      for (std::int64_t j = 0; j <= table.degmax(); ++j)
        table.at(n, j) = parse_integer(row.at(static_cast<std::size_t>(j)));
    }
    expansion = std::move(table);
  }
  return SeriesDocument{std::move(orbit), std::move(rational), std::move(expansion)};
}

} // namespace

SeriesDocument series_from_json(std::string_view text) {
  try {
    return read_document(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed series JSON: ") + e.what());
  }
}

} // namespace eqhilb

#include "eqhilb/eqhilb.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "eqhilb/closed_form.hpp"
#include "eqhilb/degree.hpp"
#include "eqhilb/error.hpp"
#include "eqhilb/format.hpp"
#include "eqhilb/oracle.hpp"
#include "eqhilb/verify.hpp"

struct eqh_orbit {
  eqhilb::OrbitMonomial value;
};

struct eqh_series {
  eqhilb::OrbitMonomial orbit;
  eqhilb::FactoredRational2 value;
};

struct eqh_table {
  eqhilb::SeriesTable value;
};

struct eqh_degrees {
  struct Row {
    long long n;
    long long dim;
    eqhilb::Integer degree;
    std::optional<eqhilb::Integer> closed;
  };
  std::vector<Row> rows;
};

struct eqh_report {
  eqhilb::VerificationReport value;
};

struct eqh_oracle {
  eqhilb::MonomialIdealFinite ideal;
  eqhilb::IntPoly1 numerator;
  eqhilb::DimDegree dim_degree;
  std::vector<eqhilb::Integer> hilbert;
  int taylor_agrees = -1;
};

namespace {

thread_local std::string last_error;
thread_local long long last_position = -1;

eqh_status to_status(eqhilb::ErrorCode code) {
  using eqhilb::ErrorCode;
  switch (code) {
  case ErrorCode::parse_error: return EQH_ERR_PARSE;
  case ErrorCode::empty_monomial: return EQH_ERR_EMPTY_MONOMIAL;
  case ErrorCode::negative_exponent: return EQH_ERR_NEGATIVE_EXPONENT;
  case ErrorCode::invalid_truncation: return EQH_ERR_INVALID_TRUNCATION;
  case ErrorCode::not_divisible: return EQH_ERR_NOT_DIVISIBLE;
  case ErrorCode::zero_numerator: return EQH_ERR_ZERO_NUMERATOR;
  case ErrorCode::too_many_generators: return EQH_ERR_TOO_MANY_GENERATORS;
  case ErrorCode::no_parent: return EQH_ERR_NO_PARENT;
  case ErrorCode::unsupported_r: return EQH_ERR_UNSUPPORTED_R;
  case ErrorCode::unsupported_exponent: return EQH_ERR_UNSUPPORTED_EXPONENT;
  case ErrorCode::repeated_column_degrees: return EQH_ERR_REPEATED_COLUMN_DEGREES;
  case ErrorCode::invalid_argument: return EQH_ERR_INVALID_ARGUMENT;
  case ErrorCode::internal: return EQH_ERR_INTERNAL;
  }
  return EQH_ERR_INTERNAL;
}

eqh_status fail(eqh_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
eqh_status guarded(F&& body) {
  last_error.clear();
  last_position = -1;
  try {
    body();
    return EQH_OK;
  } catch (const eqhilb::ParseError& e) {
    last_position = static_cast<long long>(e.position());
    return fail(EQH_ERR_PARSE, e.what());
  } catch (const eqhilb::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(EQH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(EQH_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw eqhilb::Error(eqhilb::ErrorCode::invalid_argument, std::string(what) + " is NULL");
}

} // namespace

extern "C" {

const char* eqh_status_name(eqh_status status) {
  switch (status) {
  case EQH_OK: return "Ok";
  case EQH_ERR_PARSE: return "ParseError";
  case EQH_ERR_EMPTY_MONOMIAL: return "EmptyMonomial";
  case EQH_ERR_NEGATIVE_EXPONENT: return "NegativeExponent";
  case EQH_ERR_INVALID_TRUNCATION: return "InvalidTruncation";
  case EQH_ERR_NOT_DIVISIBLE: return "NotDivisible";
  case EQH_ERR_ZERO_NUMERATOR: return "ZeroNumerator";
  case EQH_ERR_TOO_MANY_GENERATORS: return "TooManyGenerators";
  case EQH_ERR_NO_PARENT: return "NoParent";
  case EQH_ERR_UNSUPPORTED_R: return "UnsupportedR";
  case EQH_ERR_UNSUPPORTED_EXPONENT: return "UnsupportedExponent";
  case EQH_ERR_REPEATED_COLUMN_DEGREES: return "RepeatedColumnDegrees";
  case EQH_ERR_INVALID_ARGUMENT: return "InvalidArgument";
  case EQH_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* eqh_last_error(void) { return last_error.c_str(); }
long long eqh_last_error_position(void) { return last_position; }
void eqh_string_free(char* s) { std::free(s); }

// ---- orbits

eqh_status eqh_orbit_parse(const char* text, eqh_orbit** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new eqh_orbit{eqhilb::parse_orbit(text)};
  });
}

eqh_status eqh_orbit_from_matrix(const long long* entries, size_t rows, size_t cols,
                                 eqh_orbit** out) {
  return guarded([&] {
    require(out, "out");
    if (rows * cols > 0) require(entries, "entries");
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) m[i][j] = entries[i * cols + j];
    *out = new eqh_orbit{eqhilb::OrbitMonomial(m)};
  });
}

void eqh_orbit_free(eqh_orbit* orbit) { delete orbit; }
unsigned eqh_orbit_rows(const eqh_orbit* orbit) { return orbit->value.c(); }
unsigned eqh_orbit_width(const eqh_orbit* orbit) { return orbit->value.width(); }
unsigned eqh_orbit_columns(const eqh_orbit* orbit) { return orbit->value.r(); }
unsigned eqh_orbit_mu(const eqh_orbit* orbit, size_t k) { return orbit->value.mu().at(k); }
unsigned eqh_orbit_b(const eqh_orbit* orbit, size_t k) { return orbit->value.b().at(k); }

eqh_status eqh_orbit_monomial_text(const eqh_orbit* orbit, char** out) {
  return guarded([&] {
    require(orbit, "orbit");
    *out = copy_string(eqhilb::to_monomial_string(orbit->value));
  });
}

eqh_status eqh_orbit_parent(const eqh_orbit* orbit, eqh_orbit** out) {
  return guarded([&] {
    require(orbit, "orbit");
    *out = new eqh_orbit{eqhilb::parent_orbit(orbit->value)};
  });
}

// ---- series

eqh_status eqh_series_compute(const eqh_orbit* orbit, eqh_series** out) {
  return guarded([&] {
    require(orbit, "orbit");
    require(out, "out");
    *out = new eqh_series{orbit->value, eqhilb::equivariant_series(orbit->value)};
  });
}

void eqh_series_free(eqh_series* series) { delete series; }

long long eqh_series_pow_one_minus_t(const eqh_series* series) {
  return series->value.pow_one_minus_t();
}

size_t eqh_series_factor_count(const eqh_series* series) {
  return series->value.factors().size();
}

eqh_status eqh_series_text(const eqh_series* series, char** out) {
  return guarded([&] {
    require(series, "series");
    *out = copy_string(eqhilb::format_series(series->value));
  });
}

eqh_status eqh_series_numerator_text(const eqh_series* series, char** out) {
  return guarded([&] {
    require(series, "series");
    *out = copy_string(eqhilb::format_poly(series->value.numerator()));
  });
}

eqh_status eqh_series_json(const eqh_series* series, const eqh_table* expansion,
                           char** out) {
  return guarded([&] {
    require(series, "series");
    eqhilb::SeriesDocument doc{series->orbit, series->value, std::nullopt};
    if (expansion) doc.expansion = expansion->value;
    *out = copy_string(eqhilb::series_to_json(doc));
  });
}

eqh_status eqh_series_from_json(const char* json, eqh_series** series,
                                eqh_table** expansion) {
  return guarded([&] {
    require(json, "json");
    require(series, "series");
    auto doc = eqhilb::series_from_json(json);
    if (expansion)
      *expansion = doc.expansion ? new eqh_table{std::move(*doc.expansion)} : nullptr;
    *series = new eqh_series{std::move(doc.orbit), std::move(doc.series)};
  });
}

int eqh_series_equal(const eqh_series* a, const eqh_series* b) {
  return a->orbit == b->orbit && a->value == b->value;
}

eqh_status eqh_series_small_r_matches(const eqh_orbit* orbit, int* matches) {
  return guarded([&] {
    require(orbit, "orbit");
    require(matches, "matches");
    *matches = eqhilb::small_r_numerator(orbit->value) == eqhilb::numerator_g(orbit->value);
  });
}

eqh_status eqh_series_expand(const eqh_series* series, long long nmax, long long degmax,
                             eqh_table** out) {
  return guarded([&] {
    require(series, "series");
    require(out, "out");
    *out = new eqh_table{eqhilb::expand(series->value, nmax, degmax)};
  });
}

void eqh_table_free(eqh_table* table) { delete table; }
long long eqh_table_nmax(const eqh_table* table) { return table->value.nmax(); }
long long eqh_table_degmax(const eqh_table* table) { return table->value.degmax(); }

eqh_status eqh_table_entry(const eqh_table* table, long long n, long long j, char** out) {
  return guarded([&] {
    require(table, "table");
    if (n < 0 || j < 0 || n > table->value.nmax() || j > table->value.degmax())
      throw eqhilb::Error(eqhilb::ErrorCode::invalid_argument, "table index out of range");
    *out = copy_string(table->value.at(n, j).get_str());
  });
}

eqh_status eqh_table_text(const eqh_table* table, char** out) {
  return guarded([&] {
    require(table, "table");
    *out = copy_string(eqhilb::format_table(table->value));
  });
}

// ---- degrees

eqh_status eqh_degrees_compute(const eqh_orbit* orbit, long long nmax, int with_closed,
                               eqh_degrees** out) {
  return guarded([&] {
    require(orbit, "orbit");
    require(out, "out");
    const auto& orb = orbit->value;
    const auto seq = eqhilb::degree_sequence(orb, nmax);
    auto result = std::make_unique<eqh_degrees>();
    const long long first = static_cast<long long>(orb.width()) - 1;
    for (long long n = first; n <= nmax; ++n) {
      eqh_degrees::Row row{n, eqhilb::dimension_finite(orb, n),
                           seq[static_cast<size_t>(n - first)], std::nullopt};
      if (with_closed) {
        try {
          row.closed = eqhilb::degree_closed(orb, n);
        } catch (const eqhilb::Error& e) {
          if (e.code() != eqhilb::ErrorCode::repeated_column_degrees) throw;
        }
      }
      result->rows.push_back(std::move(row));
    }
    *out = result.release();
  });
}

void eqh_degrees_free(eqh_degrees* degrees) { delete degrees; }
size_t eqh_degrees_count(const eqh_degrees* degrees) { return degrees->rows.size(); }
long long eqh_degrees_n(const eqh_degrees* degrees, size_t row) { return degrees->rows.at(row).n; }
long long eqh_degrees_dim(const eqh_degrees* degrees, size_t row) { return degrees->rows.at(row).dim; }

eqh_status eqh_degrees_degree(const eqh_degrees* degrees, size_t row, char** out) {
  return guarded([&] {
    require(degrees, "degrees");
    *out = copy_string(degrees->rows.at(row).degree.get_str());
  });
}

eqh_status eqh_degrees_closed(const eqh_degrees* degrees, size_t row, char** out) {
  return guarded([&] {
    require(degrees, "degrees");
    const auto& closed = degrees->rows.at(row).closed;
    if (!closed)
      throw eqhilb::Error(eqhilb::ErrorCode::repeated_column_degrees,
                          "no partial-fraction value for repeated column degrees");
    *out = copy_string(closed->get_str());
  });
}

eqh_status eqh_orbit_asymptotics(const eqh_orbit* orbit, long long* dim, long long* deg) {
  return guarded([&] {
    require(orbit, "orbit");
    const auto a = eqhilb::asymptotics(orbit->value);
    if (dim) *dim = a.dim;
    if (deg) *deg = a.deg;
  });
}

// ---- verification

eqh_status eqh_verify(const eqh_orbit* orbit, long long nmax, long long degmax,
                      size_t taylor_guard, eqh_report** out) {
  return guarded([&] {
    require(orbit, "orbit");
    require(out, "out");
    eqhilb::VerifyOptions options{nmax, degmax, taylor_guard};
    *out = new eqh_report{eqhilb::verify_orbit(orbit->value, options)};
  });
}

void eqh_report_free(eqh_report* report) { delete report; }
size_t eqh_report_count(const eqh_report* report) { return report->value.checks.size(); }

const char* eqh_report_name(const eqh_report* report, size_t k) {
  return report->value.checks.at(k).name.c_str();
}

int eqh_report_status(const eqh_report* report, size_t k) {
  switch (report->value.checks.at(k).status) {
  case eqhilb::CheckStatus::passed: return 1;
  case eqhilb::CheckStatus::failed: return 0;
  case eqhilb::CheckStatus::skipped: return -1;
  }
  return 0;
}

const char* eqh_report_detail(const eqh_report* report, size_t k) {
  return report->value.checks.at(k).detail.c_str();
}

int eqh_report_passed(const eqh_report* report) { return report->value.passed(); }

// ---- oracle

eqh_status eqh_oracle_compute(const eqh_orbit* orbit, long long n, long long degmax,
                              int pivot_only, size_t taylor_guard, eqh_oracle** out) {
  return guarded([&] {
    require(orbit, "orbit");
    require(out, "out");
    if (n < 0)
      throw eqhilb::Error(eqhilb::ErrorCode::invalid_truncation, "n must be non-negative");
    auto result = std::make_unique<eqh_oracle>();
    result->ideal = eqhilb::truncate(orbit->value, static_cast<std::uint32_t>(n));
    if (!pivot_only && result->ideal.generators.size() > taylor_guard)
      throw eqhilb::Error(eqhilb::ErrorCode::too_many_generators,
                          std::to_string(result->ideal.generators.size()) +
                              " generators exceed the inclusion-exclusion guard of " +
                              std::to_string(taylor_guard) +
                              "; rerun with --pivot-only or raise --taylor-guard");
    result->numerator = eqhilb::hilbert_numerator_pivot(result->ideal);
    result->dim_degree = eqhilb::dim_and_degree(result->numerator, result->ideal.nvars());
    result->hilbert = eqhilb::hilbert_function(result->ideal, degmax);
    if (!pivot_only)
      result->taylor_agrees =
          eqhilb::hilbert_numerator_taylor(result->ideal, taylor_guard) == result->numerator;
    *out = result.release();
  });
}

void eqh_oracle_free(eqh_oracle* oracle) { delete oracle; }

size_t eqh_oracle_generator_count(const eqh_oracle* oracle) {
  return oracle->ideal.generators.size();
}

eqh_status eqh_oracle_generator_text(const eqh_oracle* oracle, size_t k, char** out) {
  return guarded([&] {
    require(oracle, "oracle");
    *out = copy_string(oracle->ideal.generator_string(k));
  });
}

eqh_status eqh_oracle_numerator_text(const eqh_oracle* oracle, char** out) {
  return guarded([&] {
    require(oracle, "oracle");
    *out = copy_string(eqhilb::format_poly(oracle->numerator));
  });
}

long long eqh_oracle_nvars(const eqh_oracle* oracle) { return oracle->ideal.nvars(); }
long long eqh_oracle_dim(const eqh_oracle* oracle) { return oracle->dim_degree.dim; }

eqh_status eqh_oracle_degree(const eqh_oracle* oracle, char** out) {
  return guarded([&] {
    require(oracle, "oracle");
    *out = copy_string(oracle->dim_degree.deg.get_str());
  });
}

size_t eqh_oracle_hilbert_count(const eqh_oracle* oracle) { return oracle->hilbert.size(); }

eqh_status eqh_oracle_hilbert_value(const eqh_oracle* oracle, size_t j, char** out) {
  return guarded([&] {
    require(oracle, "oracle");
    *out = copy_string(oracle->hilbert.at(j).get_str());
  });
}

int eqh_oracle_taylor_agrees(const eqh_oracle* oracle) { return oracle->taylor_agrees; }

} // extern "C"

// Command-line front-end over the C API.
//
//   eqhilb series --monomial "x[1,3]^2 x[1,5]^4" [--json] [--expand N D]
//   eqhilb degree --matrix "[[0,0,2,0,4]]" --nmax 8 [--closed]
//   eqhilb verify --monomial "x[1,3]^2 x[1,5]^4" --nmax 8 --degmax 10
//   eqhilb oracle --monomial "x[1,3]^2 x[1,5]^4" --nmax 6 --degmax 10
//
// Exit codes: 0 success, 1 domain or parse error, 2 verification failure.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqhilb/eqhilb.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_verify_failed = 2;

struct OrbitDeleter {
  void operator()(eqh_orbit* p) const { eqh_orbit_free(p); }
};
struct SeriesDeleter {
  void operator()(eqh_series* p) const { eqh_series_free(p); }
};
struct TableDeleter {
  void operator()(eqh_table* p) const { eqh_table_free(p); }
};
struct DegreesDeleter {
  void operator()(eqh_degrees* p) const { eqh_degrees_free(p); }
};
struct ReportDeleter {
  void operator()(eqh_report* p) const { eqh_report_free(p); }
};
struct OracleDeleter {
  void operator()(eqh_oracle* p) const { eqh_oracle_free(p); }
};

using OrbitPtr = std::unique_ptr<eqh_orbit, OrbitDeleter>;

/// Thrown after an error has been reported; carries the exit code.
struct Exit {
  int code;
};

void check(eqh_status status, const char* context) {
  if (status == EQH_OK) return;
  std::cerr << "error: " << context << ": " << eqh_status_name(status) << ": "
            << eqh_last_error() << '\n';
  throw Exit{exit_error};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  eqh_string_free(s);
  return out;
}

struct OrbitSpec {
  std::string monomial;
  std::string matrix;

  void attach(CLI::App* cmd) {
    auto* mono = cmd->add_option("--monomial", monomial,
                                 "orbit generator, e.g. \"x[1,3]^2 x[1,5]^4\"");
    auto* mat = cmd->add_option("--matrix", matrix, "exponent matrix, e.g. \"[[0,0,2,0,4]]\"");
    mono->excludes(mat);
    mat->excludes(mono);
  }

  OrbitPtr load() const {
    if (monomial.empty() == matrix.empty()) {
      std::cerr << "error: exactly one of --monomial or --matrix is required\n";
      throw Exit{exit_error};
    }
    eqh_orbit* orbit = nullptr;
    const std::string& text = monomial.empty() ? matrix : monomial;
    const eqh_status status = eqh_orbit_parse(text.c_str(), &orbit);
    if (status == EQH_ERR_PARSE && eqh_last_error_position() >= 0) {
      std::cerr << "error: " << eqh_last_error() << '\n'
                << "  " << text << '\n'
                << "  " << std::string(static_cast<std::size_t>(eqh_last_error_position()), ' ')
                << "^\n";
      throw Exit{exit_error};
    }
    check(status, "orbit");
    return OrbitPtr(orbit);
  }
};

int run_series(const OrbitSpec& spec, bool json, const std::vector<long long>& expand_args) {
  OrbitPtr orbit = spec.load();
  eqh_series* raw = nullptr;
  check(eqh_series_compute(orbit.get(), &raw), "series");
  std::unique_ptr<eqh_series, SeriesDeleter> series(raw);

  std::unique_ptr<eqh_table, TableDeleter> table;
  if (!expand_args.empty()) {
    eqh_table* t = nullptr;
    check(eqh_series_expand(series.get(), expand_args[0], expand_args[1], &t), "expand");
    table.reset(t);
  }

  char* text = nullptr;
  if (json) {
    check(eqh_series_json(series.get(), table.get(), &text), "json");
    std::cout << take(text) << '\n';
    return exit_ok;
  }
  check(eqh_series_text(series.get(), &text), "series");
  std::cout << take(text) << '\n';
  if (table) {
    check(eqh_table_text(table.get(), &text), "expand");
    std::cout << take(text);
  }
  return exit_ok;
}

int run_degree(const OrbitSpec& spec, long long nmax, bool closed) {
  OrbitPtr orbit = spec.load();
  const long long first = static_cast<long long>(eqh_orbit_width(orbit.get())) - 1;
  if (nmax < first) {
    std::cerr << "error: --nmax must be at least mu_r - 1 = " << first << '\n';
    return exit_error;
  }
  eqh_degrees* raw = nullptr;
  check(eqh_degrees_compute(orbit.get(), nmax, closed, &raw), "degree");
  std::unique_ptr<eqh_degrees, DegreesDeleter> degrees(raw);

  std::cout << "n\tdeg\tdim" << (closed ? "\tclosed" : "") << '\n';
  int code = exit_ok;
  for (std::size_t k = 0; k < eqh_degrees_count(degrees.get()); ++k) {
    char* deg = nullptr;
    check(eqh_degrees_degree(degrees.get(), k, &deg), "degree");
    const std::string degree = take(deg);
    std::cout << eqh_degrees_n(degrees.get(), k) << '\t' << degree << '\t'
              << eqh_degrees_dim(degrees.get(), k);
    if (closed) {
      char* value = nullptr;
      const eqh_status status = eqh_degrees_closed(degrees.get(), k, &value);
      if (status == EQH_ERR_REPEATED_COLUMN_DEGREES) {
        std::cout << "\tn/a";
      } else {
        check(status, "closed degree");
        const std::string closed_value = take(value);
        std::cout << '\t' << closed_value;
        if (closed_value != degree) {
          std::cout << "\tINTERNAL ERROR: closed form disagrees";
          code = exit_verify_failed;
        }
      }
    }
    std::cout << '\n';
  }
  return code;
}

int run_verify(const OrbitSpec& spec, long long nmax, long long degmax, std::size_t guard) {
  OrbitPtr orbit = spec.load();
  eqh_report* raw = nullptr;
  check(eqh_verify(orbit.get(), nmax, degmax, guard, &raw), "verify");
  std::unique_ptr<eqh_report, ReportDeleter> report(raw);

  const char* first_failure = nullptr;
  for (std::size_t k = 0; k < eqh_report_count(report.get()); ++k) {
    const int status = eqh_report_status(report.get(), k);
    const char* label = status > 0 ? "PASS" : status == 0 ? "FAIL" : "SKIP";
    std::cout << '[' << label << "] " << std::left << std::setw(20)
              << eqh_report_name(report.get(), k) << ' ' << eqh_report_detail(report.get(), k)
              << '\n';
    if (status == 0 && !first_failure) first_failure = eqh_report_name(report.get(), k);
  }
  if (first_failure) {
    std::cout << "verification FAILED: " << first_failure << '\n';
    return exit_verify_failed;
  }
  std::cout << "all checks passed\n";
  return exit_ok;
}

int run_oracle(const OrbitSpec& spec, long long n, long long degmax, bool pivot_only,
               std::size_t guard) {
  OrbitPtr orbit = spec.load();
  eqh_oracle* raw = nullptr;
  check(eqh_oracle_compute(orbit.get(), n, degmax, pivot_only, guard, &raw), "oracle");
  std::unique_ptr<eqh_oracle, OracleDeleter> oracle(raw);

  const std::size_t count = eqh_oracle_generator_count(oracle.get());
  std::cout << "generators (" << count << "):\n";
  if (count == 0) std::cout << "  (zero ideal)\n";
  for (std::size_t k = 0; k < count; ++k) {
    char* g = nullptr;
    check(eqh_oracle_generator_text(oracle.get(), k, &g), "generator");
    std::cout << "  " << take(g) << '\n';
  }
  char* text = nullptr;
  check(eqh_oracle_numerator_text(oracle.get(), &text), "numerator");
  std::cout << "numerator: " << take(text) << "  over (1 - t)^" << eqh_oracle_nvars(oracle.get())
            << '\n';
  check(eqh_oracle_degree(oracle.get(), &text), "degree");
  std::cout << "dim: " << eqh_oracle_dim(oracle.get()) << '\n' << "deg: " << take(text) << '\n';
  std::cout << "hilbert function:";
  for (std::size_t j = 0; j < eqh_oracle_hilbert_count(oracle.get()); ++j) {
    check(eqh_oracle_hilbert_value(oracle.get(), j, &text), "hilbert function");
    std::cout << ' ' << take(text);
  }
  std::cout << '\n';
  const int agrees = eqh_oracle_taylor_agrees(oracle.get());
  if (agrees >= 0) std::cout << "inclusion-exclusion: " << (agrees ? "agrees" : "DISAGREES") << '\n';
  return agrees == 0 ? exit_verify_failed : exit_ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Hilbert series of monomial Inc-orbits"};
  app.require_subcommand(1);

  OrbitSpec series_spec, degree_spec, verify_spec, oracle_spec;
  bool json = false;
  std::vector<long long> expand_args;
  long long degree_nmax = -1;
  bool closed = false;
  long long verify_nmax = 8;
  long long verify_degmax = 10;
  long long oracle_n = -1;
  long long oracle_degmax = 10;
  bool pivot_only = false;
  std::size_t guard = 25;

  auto* series = app.add_subcommand("series", "closed-form equivariant Hilbert series");
  series_spec.attach(series);
  series->add_flag("--json", json, "emit JSON");
  series->add_option("--expand", expand_args, "append the expansion up to s^N t^D")
      ->expected(2)
      ->type_name("N D");

  auto* degree = app.add_subcommand("degree", "deg I_n and dim K[X_n]/I_n per n");
  degree_spec.attach(degree);
  degree->add_option("--nmax", degree_nmax, "largest n")->required();
  degree->add_flag("--closed", closed, "also evaluate the partial-fraction formula");

  auto* verify = app.add_subcommand("verify", "cross-check the closed form against the oracle");
  verify_spec.attach(verify);
  verify->add_option("--nmax", verify_nmax, "largest truncation")->capture_default_str();
  verify->add_option("--degmax", verify_degmax, "largest degree")->capture_default_str();
  verify->add_option("--taylor-guard", guard, "inclusion-exclusion generator limit")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "brute-force Hilbert data of I_n");
  oracle_spec.attach(oracle);
  oracle->add_option("-n,--nmax", oracle_n, "truncation level n")->required();
  oracle->add_option("--degmax", oracle_degmax, "largest degree")->capture_default_str();
  oracle->add_flag("--pivot-only", pivot_only, "skip inclusion-exclusion");
  oracle->add_option("--taylor-guard", guard, "inclusion-exclusion generator limit")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_error;
  }

  try {
    if (series->parsed()) return run_series(series_spec, json, expand_args);
    if (degree->parsed()) return run_degree(degree_spec, degree_nmax, closed);
    if (verify->parsed()) return run_verify(verify_spec, verify_nmax, verify_degmax, guard);
    if (oracle->parsed())
      return run_oracle(oracle_spec, oracle_n, oracle_degmax, pivot_only, guard);
  } catch (const Exit& e) {
    return e.code;
  }
  return exit_error;
}

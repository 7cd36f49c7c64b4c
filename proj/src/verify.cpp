#include "eqhilb/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "eqhilb/closed_form.hpp"
#include "eqhilb/degree.hpp"
#include "eqhilb/error.hpp"

namespace eqhilb {

bool VerificationReport::passed() const { return first_failure() == nullptr; }

const CheckResult* VerificationReport::first_failure() const {
  for (const auto& check : checks)
    if (check.status == CheckStatus::failed) return &check;
  return nullptr;
}

namespace {

// Oracle data for the truncations of one orbit, computed once per report.
struct TruncationData {
  std::vector<MonomialIdealFinite> ideals;
  std::vector<IntPoly1> numerators;
};

TruncationData oracle_truncations(const OrbitMonomial& orb, std::int64_t nmax) {
  TruncationData data;
  for (std::int64_t n = 0; n <= nmax; ++n) {
    data.ideals.push_back(truncate(orb, static_cast<std::uint32_t>(n)));
    data.numerators.push_back(hilbert_numerator_pivot(data.ideals.back()));
  }
  return data;
}

CheckResult run_check(std::string name,
                      const std::function<CheckStatus(std::ostringstream&)>& body) {
  CheckResult result{std::move(name), CheckStatus::failed, {}};
  std::ostringstream detail;
  try {
    result.status = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
    result.status = CheckStatus::failed;
  }
  result.detail = detail.str();
  return result;
}

std::vector<Integer> hilbert_values(const IntPoly1& num, std::uint32_t nvars,
                                    std::int64_t degmax) {
  auto values = num.dense(static_cast<std::size_t>(degmax + 1));
  for (std::uint32_t k = 0; k < nvars; ++k)
    for (std::size_t j = 1; j < values.size(); ++j) values[j] += values[j - 1];
  return values;
}

} // namespace

VerificationReport verify_orbit(const OrbitMonomial& orb, const VerifyOptions& options) {
  if (options.nmax < 0 || options.degmax < 0)
    throw Error(ErrorCode::invalid_truncation, "verification bounds must be non-negative");
  const std::int64_t nmax = options.nmax;
  const std::int64_t degmax = options.degmax;
  const std::int64_t mu_r = orb.width();
  const std::int64_t first_degree_n = mu_r - 1;

  VerificationReport report;
  auto& checks = report.checks;

  checks.push_back(run_check("gtilde-divisibility", [&](std::ostringstream& os) {
    const IntPoly2 gt = gtilde(orb);
    if (!gt.substitute_s(IntPoly1::one_minus_t_pow(orb.c())).is_zero()) {
      os << "gtilde does not vanish at s = (1 - t)^" << orb.c();
      return CheckStatus::failed;
    }
    const IntPoly2 g = numerator_g(orb);
    if (!(g * unit_factor(orb.c()) == gt)) {
      os << "g * ((1 - t)^c - s) differs from gtilde";
      return CheckStatus::failed;
    }
    return CheckStatus::passed;
  }));

  checks.push_back(run_check("reducedness", [&](std::ostringstream& os) {
    const auto rep = verify_reduced(orb);
    for (std::size_t j = 0; j < rep.factor_coprime.size(); ++j)
      if (!rep.factor_coprime[j]) {
        os << "denominator factor " << j << " divides g";
        return CheckStatus::failed;
      }
    os << rep.factor_coprime.size() << " factors coprime to g";
    return rep.passed() ? CheckStatus::passed : CheckStatus::failed;
  }));

  checks.push_back(run_check("small-r-numerator", [&](std::ostringstream& os) {
    if (orb.r() > 3 || one_minus_t_exponent(orb) < 0) {
      os << "not applicable (r = " << orb.r() << ", e = " << one_minus_t_exponent(orb) << ")";
      return CheckStatus::skipped;
    }
    if (!(small_r_numerator(orb) == numerator_g(orb))) {
      os << "closed r = " << orb.r() << " numerator differs from g";
      return CheckStatus::failed;
    }
    return CheckStatus::passed;
  }));

  const TruncationData truncs = oracle_truncations(orb, nmax);

  checks.push_back(run_check("expand-vs-oracle", [&](std::ostringstream& os) {
    const SeriesTable table = expand(equivariant_series(orb), nmax, degmax);
    for (std::int64_t n = 0; n <= nmax; ++n) {
      const auto& ideal = truncs.ideals[static_cast<std::size_t>(n)];
      const auto oracle =
          hilbert_values(truncs.numerators[static_cast<std::size_t>(n)], ideal.nvars(), degmax);
      for (std::int64_t j = 0; j <= degmax; ++j) {
        const Integer& closed = table.at(n, j);
        if (closed != oracle[static_cast<std::size_t>(j)]) {
          os << "mismatch at n=" << n << ", j=" << j << ": closed form " << closed.get_str()
             << ", oracle " << oracle[static_cast<std::size_t>(j)].get_str();
          return CheckStatus::failed;
        }
        if (closed < 0) {
          os << "negative entry at n=" << n << ", j=" << j;
          return CheckStatus::failed;
        }
      }
    }
    os << (nmax + 1) * (degmax + 1) << " entries agree";
    return CheckStatus::passed;
  }));

  checks.push_back(run_check("degree-sequence", [&](std::ostringstream& os) {
    if (nmax < first_degree_n) {
      os << "nmax below mu_r - 1";
      return CheckStatus::skipped;
    }
    const auto seq = degree_sequence(orb, nmax);
    for (std::int64_t n = first_degree_n; n <= nmax; ++n) {
      const auto& ideal = truncs.ideals[static_cast<std::size_t>(n)];
      const auto oracle = dim_and_degree(truncs.numerators[static_cast<std::size_t>(n)], ideal.nvars());
      const Integer& closed = seq[static_cast<std::size_t>(n - first_degree_n)];
      if (closed != oracle.deg) {
        os << "deg I_" << n << ": sequence " << closed.get_str() << ", oracle "
           << oracle.deg.get_str();
        return CheckStatus::failed;
      }
    }
    return CheckStatus::passed;
  }));

  checks.push_back(run_check("dimension", [&](std::ostringstream& os) {
    for (std::int64_t n = 0; n <= nmax; ++n) {
      const auto& ideal = truncs.ideals[static_cast<std::size_t>(n)];
      const auto oracle = dim_and_degree(truncs.numerators[static_cast<std::size_t>(n)], ideal.nvars());
      if (oracle.dim != dimension_finite(orb, n)) {
        os << "dim A_" << n << ": formula " << dimension_finite(orb, n) << ", oracle "
           << oracle.dim;
        return CheckStatus::failed;
      }
    }
    return CheckStatus::passed;
  }));

  checks.push_back(run_check("recursion-identity", [&](std::ostringstream& os) {
    const std::uint32_t b_r = orb.b().back();
    const IntPoly1 t_b = IntPoly1::monomial(1, b_r);
    const IntPoly1 one_minus_t_b = IntPoly1(1) - t_b;
    std::size_t checked = 0;
    if (orb.r() == 1) {
      // I_n = I_{n-1} + (m) from n = mu_1 on, and I_n = I_{n-1} = 0 before.
      for (std::int64_t n = 1; n <= nmax; ++n) {
        const auto& cur = truncs.numerators[static_cast<std::size_t>(n)];
        const auto& prev = truncs.numerators[static_cast<std::size_t>(n - 1)];
        const IntPoly1 expected = n < mu_r ? prev : one_minus_t_b * prev;
        if (!(cur == expected)) {
          os << "numerator identity fails at n=" << n;
          return CheckStatus::failed;
        }
        ++checked;
      }
    } else {
      const OrbitMonomial parent = parent_orbit(orb);
      const std::int64_t delta = orb.delta_r();
      for (std::int64_t n = delta; n <= nmax; ++n) {
        const auto& cur = truncs.numerators[static_cast<std::size_t>(n)];
        const auto& prev = truncs.numerators[static_cast<std::size_t>(n - 1)];
        const IntPoly1 parent_num =
            hilbert_numerator_pivot(truncate(parent, static_cast<std::uint32_t>(n - delta)));
        if (!(cur == one_minus_t_b * prev + t_b * parent_num)) {
          os << "numerator identity fails at n=" << n;
          return CheckStatus::failed;
        }
        ++checked;
      }
    }
    os << checked << " levels checked";
    return CheckStatus::passed;
  }));

  checks.push_back(run_check("taylor-vs-pivot", [&](std::ostringstream& os) {
    std::vector<MonomialIdealFinite> ideals = truncs.ideals;
    if (orb.r() >= 2) {
      const OrbitMonomial parent = parent_orbit(orb);
      for (std::int64_t n = 0; n <= nmax; ++n)
        ideals.push_back(truncate(parent, static_cast<std::uint32_t>(n)));
    }
    std::size_t compared = 0;
    std::size_t skipped = 0;
    for (const auto& ideal : ideals) {
      if (ideal.generators.size() > options.taylor_guard) {
        ++skipped;
        continue;
      }
      if (!(hilbert_numerator_taylor(ideal, options.taylor_guard) ==
            hilbert_numerator_pivot(ideal))) {
        os << "oracles disagree on an ideal with " << ideal.generators.size()
           << " generators in " << ideal.nvars() << " variables";
        return CheckStatus::failed;
      }
      ++compared;
    }
    os << compared << " ideals compared, " << skipped << " above the guard";
    return CheckStatus::passed;
  }));

  checks.push_back(run_check("degree-closed-form", [&](std::ostringstream& os) {
    auto b = orb.b();
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) {
      os << "column degrees repeat";
      return CheckStatus::skipped;
    }
    if (nmax < first_degree_n) {
      os << "nmax below mu_r - 1";
      return CheckStatus::skipped;
    }
    const auto seq = degree_sequence(orb, nmax);
    for (std::int64_t n = first_degree_n; n <= nmax; ++n)
      if (degree_closed(orb, n) != seq[static_cast<std::size_t>(n - first_degree_n)]) {
        os << "partial-fraction degree differs at n=" << n;
        return CheckStatus::failed;
      }
    return CheckStatus::passed;
  }));

  checks.push_back(run_check("degree-recursion", [&](std::ostringstream& os) {
    if (nmax < mu_r) {
      os << "nmax below mu_r";
      return CheckStatus::skipped;
    }
    const auto seq = degree_sequence(orb, nmax);
    auto deg_i = [&](std::int64_t n) { return seq[static_cast<std::size_t>(n - first_degree_n)]; };
    const std::uint32_t b_r = orb.b().back();
    if (orb.r() == 1) {
      for (std::int64_t n = mu_r; n <= nmax; ++n)
        if (deg_i(n) != b_r * deg_i(n - 1)) {
          os << "deg I_" << n << " != b_r deg I_" << n - 1;
          return CheckStatus::failed;
        }
      return CheckStatus::passed;
    }
    const OrbitMonomial parent = parent_orbit(orb);
    const std::int64_t parent_first = static_cast<std::int64_t>(parent.width()) - 1;
    const auto parent_seq = degree_sequence(parent, nmax);
    for (std::int64_t n = mu_r; n <= nmax; ++n) {
      const std::int64_t m = n - orb.delta_r();
      const Integer& deg_j = parent_seq[static_cast<std::size_t>(m - parent_first)];
      if (deg_i(n) != b_r * deg_i(n - 1) + deg_j) {
        os << "deg I_" << n << " != b_r deg I_" << n - 1 << " + deg J_" << m;
        return CheckStatus::failed;
      }
    }
    return CheckStatus::passed;
  }));

  checks.push_back(run_check("denominator-factors", [&](std::ostringstream& os) {
    const auto h = equivariant_series(orb);
    auto b = orb.b();
    std::sort(b.begin(), b.end());
    for (std::size_t j = 0; j < h.factors().size(); ++j) {
      const auto& f = h.factors()[j].f;
      for (const auto& [e, c] : f.coeffs())
        if (c < 0) {
          os << "factor " << j << " has a negative coefficient";
          return CheckStatus::failed;
        }
      if (f.eval_at_one() != b[j]) {
        os << "factor " << j << " has f(1) != b_j";
        return CheckStatus::failed;
      }
    }
    return CheckStatus::passed;
  }));

  checks.push_back(run_check("degree-growth", [&](std::ostringstream& os) {
    if (nmax < first_degree_n + 1) {
      os << "fewer than two degrees in range";
      return CheckStatus::skipped;
    }
    // Ratios deg I_{n+1} / deg I_n stay >= max b_j and never increase, so
    // they (and the n-th roots) approach max b_j.
    const auto seq = degree_sequence(orb, nmax);
    const Integer top = asymptotics(orb).deg;
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
      if (seq[k + 1] < top * seq[k]) {
        os << "ratio below max b_j at n=" << first_degree_n + static_cast<std::int64_t>(k) + 1;
        return CheckStatus::failed;
      }
      if (k >= 1 && seq[k + 1] * seq[k - 1] > seq[k] * seq[k]) {
        os << "ratio increases at n=" << first_degree_n + static_cast<std::int64_t>(k) + 1;
        return CheckStatus::failed;
      }
    }
    return CheckStatus::passed;
  }));

  return report;
}

} // namespace eqhilb

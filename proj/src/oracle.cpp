#include "eqhilb/oracle.hpp"

#include <algorithm>
#include <map>

#include "eqhilb/error.hpp"

namespace eqhilb {

namespace {

// Depth-first walk over subsets; `sign` is (-1)^|S| of the subset extended
// by generator k.
void taylor_walk(const std::vector<Monomial>& gens, std::size_t next,
                 const Monomial& current, std::int64_t sign,
                 std::vector<std::int64_t>& counts) {
  Monomial joined(current.size());
  for (std::size_t k = next; k < gens.size(); ++k) {
    std::uint64_t deg = 0;
    for (std::size_t v = 0; v < current.size(); ++v) {
      joined[v] = std::max(current[v], gens[k][v]);
      deg += joined[v];
    }
    counts[deg] += sign;
    taylor_walk(gens, k + 1, joined, -sign, counts);
  }
}

} // namespace

IntPoly1 hilbert_numerator_taylor(const MonomialIdealFinite& ideal,
                                  std::size_t guard) {
  if (ideal.generators.size() > guard)
    throw Error(ErrorCode::too_many_generators,
                std::to_string(ideal.generators.size()) +
                    " generators exceed the inclusion-exclusion guard of " +
                    std::to_string(guard));
  Monomial all(ideal.nvars());
  for (const Monomial& g : ideal.generators) all = lcm(all, g);
  // indexed by degree; no lcm exceeds the lcm of everything
  std::vector<std::int64_t> counts(total_degree(all) + 1, 0);
  counts[0] = 1;  // empty subset
  taylor_walk(ideal.generators, 0, Monomial(ideal.nvars()), -1, counts);
  IntPoly1 out;
  for (std::size_t deg = 0; deg < counts.size(); ++deg)
    if (counts[deg] != 0)
      out.add_term(static_cast<std::uint32_t>(deg), Integer(static_cast<long>(counts[deg])));
  return out;
}

// ---------------------------------------------------------------- pivot

namespace {

class PivotSplitter {
public:
  IntPoly1 numerator(std::vector<Monomial> gens) {
    if (gens.empty()) return IntPoly1(1);
    for (const auto& g : gens)
      if (total_degree(g) == 0) return IntPoly1();  // unit ideal

    std::sort(gens.begin(), gens.end());
    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;

    IntPoly1 result = compute(gens);
    memo_.emplace(std::move(gens), result);
    return result;
  }

private:
  IntPoly1 compute(const std::vector<Monomial>& gens) {
    const std::size_t nvars = gens.front().size();

    std::vector<std::size_t> occurrences(nvars, 0);
    for (const auto& g : gens)
      for (std::size_t v = 0; v < nvars; ++v)
        if (g[v]) ++occurrences[v];

    const auto best = std::max_element(occurrences.begin(), occurrences.end());
    if (*best <= 1) {
      // Pairwise coprime generators form a regular sequence.
      IntPoly1 out(1);
      for (const auto& g : gens)
        out *= IntPoly1(1) - IntPoly1::monomial(1, static_cast<std::uint32_t>(total_degree(g)));
      return out;
    }
    // max_element returns the first maximum: lowest variable index wins ties.
    const auto var = static_cast<std::size_t>(best - occurrences.begin());

    // Lowest exponent among generators that are not pure powers of var. A
    // pure power x_var^k in a minimal set forces k above this exponent, so
    // the pivot never lies in the ideal.
    std::uint32_t exp = 0;
    for (const auto& g : gens) {
      if (!g[var]) continue;
      if (total_degree(g) == g[var]) continue;
      if (exp == 0 || g[var] < exp) exp = g[var];
    }
    if (exp == 0)
      throw Error(ErrorCode::internal, "pivot selection found no candidate");

    Monomial pivot(nvars, 0);
    pivot[var] = exp;

    std::vector<Monomial> sum;  // I + (p)
    sum.reserve(gens.size() + 1);
    sum.push_back(pivot);
    for (const auto& g : gens)
      if (g[var] < exp) sum.push_back(g);

    std::vector<Monomial> quotient;  // I : p
    quotient.reserve(gens.size());
    for (auto g : gens) {
      g[var] = g[var] > exp ? g[var] - exp : 0;
      quotient.push_back(std::move(g));
    }

    IntPoly1 out = numerator(minimalize(sum));
    out += IntPoly1::monomial(1, exp) * numerator(minimalize(quotient));
    return out;
  }

  std::map<std::vector<Monomial>, IntPoly1> memo_;
};

} // namespace

IntPoly1 hilbert_numerator_pivot(const MonomialIdealFinite& ideal) {
  PivotSplitter splitter;
  return splitter.numerator(minimalize(ideal.generators));
}

HilbertSeriesFinite hilbert_series(const MonomialIdealFinite& ideal) {
  HilbertSeriesFinite out;
  out.num = hilbert_numerator_pivot(ideal);
  out.nvars = ideal.nvars();
  if (!out.num.is_zero()) out.reduced = reduce_univariate(out.num, out.nvars);
  return out;
}

std::vector<Integer> hilbert_function(const MonomialIdealFinite& ideal,
                                      std::int64_t degmax) {
  if (degmax < 0)
    throw Error(ErrorCode::invalid_truncation, "degmax must be non-negative");
  auto values = hilbert_numerator_pivot(ideal).dense(
      static_cast<std::size_t>(degmax + 1));
  for (std::uint32_t k = 0; k < ideal.nvars(); ++k)
    for (std::size_t j = 1; j < values.size(); ++j) values[j] += values[j - 1];
  return values;
}

DimDegree dim_and_degree(const IntPoly1& numerator, std::uint32_t nvars) {
  const auto reduced = reduce_univariate(numerator, nvars);
  return DimDegree{reduced.dim, reduced.deg};
}

DimDegree dim_and_degree(const MonomialIdealFinite& ideal) {
  return dim_and_degree(hilbert_numerator_pivot(ideal), ideal.nvars());
}

} // namespace eqhilb

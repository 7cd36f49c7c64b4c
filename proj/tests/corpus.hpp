#pragma once

// Deterministic fuzz corpus shared by the unit tests and the acceptance run.

#include <cstdint>
#include <algorithm>
#include <random>
#include <vector>

#include "eqhilb/orbit.hpp"

namespace eqhilb::testing {

// c <= 3, r <= 3, mu_r <= 6, b_j <= 4
inline OrbitMonomial random_orbit(std::mt19937& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int c = pick(1, 3);
  const int width = pick(1, 6);
  const int r = pick(1, std::min(3, width));
  // last column is always occupied
  std::vector<int> cols(width - 1);
  for (int j = 0; j < width - 1; ++j) cols[j] = j;
  std::shuffle(cols.begin(), cols.end(), rng);
  cols.resize(r - 1);
  cols.push_back(width - 1);

  std::vector<std::vector<std::int64_t>> m(c, std::vector<std::int64_t>(width, 0));
  for (int col : cols) {
    const int b = pick(1, 4);
    for (int k = 0; k < b; ++k) ++m[pick(0, c - 1)][col];
  }
  return OrbitMonomial(m);
}

inline std::vector<OrbitMonomial> fuzz_corpus(std::size_t count = 120, unsigned seed = 20240611) {
  std::mt19937 rng(seed);
  std::vector<OrbitMonomial> out;
  out.push_back(new_orbit({{0, 0, 2, 0, 4}}));
  out.push_back(new_orbit({{1}}));
  out.push_back(new_orbit({{1}, {1}}));
  out.push_back(new_orbit({{2}}));
  out.push_back(new_orbit({{0, 3}}));
  while (out.size() < count) out.push_back(random_orbit(rng));
  return out;
}

} // namespace eqhilb::testing

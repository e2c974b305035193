// Brute-force oracles, independent of the library implementation paths
// they check: binomials via the Pascal recurrence (additions only) and
// monomial combinatorics on raw exponent vectors.
#ifndef GOTZMANN_TEST_ORACLES_HPP
#define GOTZMANN_TEST_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

// Pascal triangle; valid while rows fit in 64 bits (a <= 60 or so).
inline std::uint64_t pascal_binom(unsigned a, unsigned b) {
  static std::vector<std::vector<std::uint64_t>> rows{{1}};
  while (rows.size() <= a) {
    const auto& prev = rows.back();
    std::vector<std::uint64_t> row(prev.size() + 1, 1);
    for (std::size_t k = 1; k < prev.size(); ++k) {
      row[k] = prev[k - 1] + prev[k];
    }
    rows.push_back(std::move(row));
  }
  return b < rows[a].size() ? rows[a][b] : 0;
}

using Vec = std::vector<int>;

// All exponent vectors of the given degree, by direct recursion.
inline void gen_rec(int n_vars, int degree, Vec& acc, std::vector<Vec>& out) {
  if (static_cast<int>(acc.size()) == n_vars - 1) {
    acc.push_back(degree);
    out.push_back(acc);
    acc.pop_back();
    return;
  }
  for (int e = 0; e <= degree; ++e) {
    acc.push_back(e);
    gen_rec(n_vars, degree - e, acc, out);
    acc.pop_back();
  }
}

inline std::vector<Vec> monomials(int n_vars, int degree) {
  std::vector<Vec> out;
  Vec acc;
  gen_rec(n_vars, degree, acc, out);
  // Same-degree lex order on monomials is plain tuple order descending.
  std::sort(out.begin(), out.end(), std::greater<Vec>());
  return out;
}

inline std::vector<Vec> lexsegment(int n_vars, int degree, std::size_t a) {
  std::vector<Vec> all = monomials(n_vars, degree);
  all.resize(a);
  return all;
}

inline std::size_t shadow_size(const std::vector<Vec>& v) {
  std::set<Vec> out;
  for (const auto& m : v) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      Vec w = m;
      ++w[i];
      out.insert(std::move(w));
    }
  }
  return out.size();
}

}  // namespace oracle

#endif

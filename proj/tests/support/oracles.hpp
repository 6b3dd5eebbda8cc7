#pragma once

// Independent reference computations. Nothing here calls into the library's
// Weyl group, Freudenthal or branching code.

#include <algorithm>
#include <complex>
#include <numeric>
#include <vector>

#include "selberg/root_system.hpp"

namespace selberg::testing {

/// Signed permutations of k letters; `even_flips` restricts to type D.
/// Each element is (perm, signs, det).
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> signs;
  int det;
};

inline std::vector<SignedPerm> signed_permutations(int k, bool even_flips) {
  std::vector<SignedPerm> out;
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    for (int mask = 0; mask < (1 << k); ++mask) {
      const int flips = __builtin_popcount(static_cast<unsigned>(mask));
      if (even_flips && flips % 2 != 0) continue;
      std::vector<int> signs(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) signs[static_cast<std::size_t>(i)] = ((mask >> i) & 1) ? -1 : 1;
      // Each sign flip is a reflection in B; in D flips come in pairs and
      // their product is a rotation, so only the permutation sign counts.
      const int det = ((inversions % 2 == 0) ? 1 : -1) * (even_flips ? 1 : ((flips % 2 == 0) ? 1 : -1));
      out.push_back({perm, signs, det});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// rho in ordinary (not doubled) coordinates.
inline std::vector<double> rho_oracle(Series series, int k) {
  std::vector<double> rho(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) rho[static_cast<std::size_t>(i)] = (k - 1 - i) + (series == Series::B ? 0.5 : 0.0);
  return rho;
}

/// sum_w det(w) exp(i <w(x), theta>).
inline std::complex<double> alternating_sum(const std::vector<SignedPerm>& group, const std::vector<double>& x,
                                            const std::vector<double>& theta) {
  std::complex<double> acc = 0;
  for (const auto& w : group) {
    double phase = 0;
    for (std::size_t i = 0; i < x.size(); ++i) phase += w.signs[i] * x[static_cast<std::size_t>(w.perm[i])] * theta[i];
    acc += static_cast<double>(w.det) * std::polar(1.0, phase);
  }
  return acc;
}

/// Weyl character formula at generic angles. hw is given doubled.
inline std::complex<double> weyl_character_oracle(Series series, const std::vector<int>& hw_doubled,
                                                  const std::vector<double>& theta) {
  const int k = static_cast<int>(hw_doubled.size());
  const auto group = signed_permutations(k, series == Series::D);
  const auto rho = rho_oracle(series, k);
  std::vector<double> shifted(rho);
  for (int i = 0; i < k; ++i) shifted[static_cast<std::size_t>(i)] += 0.5 * hw_doubled[static_cast<std::size_t>(i)];
  return alternating_sum(group, shifted, theta) / alternating_sum(group, rho, theta);
}

}  // namespace selberg::testing

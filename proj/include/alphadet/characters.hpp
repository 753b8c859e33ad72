#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "alphadet/partitions.hpp"
#include "alphadet/permutations.hpp"

namespace alphadet {

namespace detail {

// Murnaghan-Nakayama rule on beta-numbers: with beta_i = lambda_i + (L-1-i),
// removing a border strip of length k means replacing some beta_i by
// beta_i - k (>= 0, not already present); the strip height is the number of
// beta values jumped over.
inline mpz_class mn_character(const std::vector<int>& lambda,
                              const std::vector<int>& rho, size_t rho_pos,
                              std::map<std::pair<std::vector<int>, size_t>,
                                       mpz_class>& memo) {
  if (lambda.empty()) return 1;
  const auto key = std::make_pair(lambda, rho_pos);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int k = rho[rho_pos];
  const int L = static_cast<int>(lambda.size());
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);

  mpz_class total = 0;
  for (int i = 0; i < L; ++i) {
    const int nb = beta[i] - k;
    if (nb < 0) continue;
    if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int height = 0;
    for (int j = 0; j < L; ++j)
      if (beta[j] < beta[i] && beta[j] > nb) ++height;

    std::vector<int> nbeta(beta);
    nbeta[i] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    std::vector<int> mu(L);
    for (int j = 0; j < L; ++j) mu[j] = nbeta[j] - (L - 1 - j);
    while (!mu.empty() && mu.back() == 0) mu.pop_back();

    const mpz_class sub = mn_character(mu, rho, rho_pos + 1, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

}  // namespace detail

// Irreducible character chi^lambda on the conjugacy class of the given cycle
// type. Memoized across calls; the memo is per thread.
inline mpz_class character(const Partition& lambda, const CycleType& type) {
  if (lambda.weight() != type.weight()) throw std::invalid_argument("size mismatch");
  // The inner memo key (shape, position in rho) is only valid for a fixed
  // rho, so cache per cycle type. Per-thread, as the concurrency model asks.
  static thread_local std::map<std::vector<int>,
                               std::map<std::pair<std::vector<int>, size_t>, mpz_class>>
      memo_by_rho;
  auto& memo = memo_by_rho[type.parts()];
  return detail::mn_character(lambda.parts(), type.parts(), 0, memo);
}

inline mpz_class character(const Partition& lambda, const Permutation& g) {
  return character(lambda, g.cycle_type());
}

}  // namespace alphadet

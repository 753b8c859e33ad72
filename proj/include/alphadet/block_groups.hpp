#pragma once

#include <map>
#include <vector>

#include "alphadet/characters.hpp"
#include "alphadet/errors.hpp"
#include "alphadet/permutations.hpp"

namespace alphadet {

// Row group K and column group H of the standard tableau of shape (l^n)
// whose (i,j) entry is (i-1)l + j, inside S_{nl}:
//   K permutes within each of the n consecutive blocks of length l,
//   H permutes positions congruent mod l (theta: H -> (S_n)^l).
class BlockSubgroups {
 public:
  BlockSubgroups(int n, int l) : n_(n), l_(l) {
    if (n < 1 || l < 1) throw std::invalid_argument("n, l must be positive");
    double k_size = 1, h_size = 1;
    for (int i = 0; i < n; ++i) k_size *= factorial(l).get_d();
    for (int i = 0; i < l; ++i) h_size *= factorial(n).get_d();
    const double limit = static_cast<double>(guard_limit(10000000LL));
    if (k_size > limit || h_size > limit)
      throw guard_error("size guard exceeded: |K| or |H| too large");

    // K: one S_l per block of positions {b*l, ..., b*l + l - 1}
    const auto sl = symmetric_group(l);
    for_each_tuple(static_cast<size_t>(n), sl.size(), [&](const std::vector<size_t>& idx) {
      std::vector<int> img(n_ * l_);
      for (int b = 0; b < n_; ++b)
        for (int j = 0; j < l_; ++j) img[b * l_ + j] = b * l_ + sl[idx[b]](j);
      k_.push_back(Permutation(std::move(img)));
    });

    // H = theta^{-1}((S_n)^l)
    const auto sn = symmetric_group(n);
    for_each_tuple(static_cast<size_t>(l), sn.size(), [&](const std::vector<size_t>& idx) {
      std::vector<const Permutation*> sigmas(l_);
      for (int i = 0; i < l_; ++i) sigmas[i] = &sn[idx[i]];
      h_.push_back(theta_inverse_ptr(sigmas));
    });
  }

  int n() const { return n_; }
  int l() const { return l_; }
  int degree() const { return n_ * l_; }
  const std::vector<Permutation>& K() const { return k_; }
  const std::vector<Permutation>& H() const { return h_; }

  // theta(h) = (sigma_1, ..., sigma_l) with h((x-1)l + i) = (sigma_i(x)-1)l + i
  // (1-indexed in the formula; everything stored 0-indexed).
  std::vector<Permutation> theta(const Permutation& h) const {
    std::vector<Permutation> sigmas;
    sigmas.reserve(l_);
    for (int i = 0; i < l_; ++i) {
      std::vector<int> img(n_);
      for (int x = 0; x < n_; ++x) {
        const int y = h(x * l_ + i);
        if (y % l_ != i) throw std::invalid_argument("not an element of H");
        img[x] = y / l_;
      }
      sigmas.push_back(Permutation(std::move(img)));
    }
    return sigmas;
  }

  Permutation theta_inverse(const std::vector<Permutation>& sigmas) const {
    if (static_cast<int>(sigmas.size()) != l_)
      throw std::invalid_argument("theta_inverse needs l permutations");
    std::vector<const Permutation*> ptrs;
    for (const auto& s : sigmas) ptrs.push_back(&s);
    return theta_inverse_ptr(ptrs);
  }

 private:
  template <typename F>
  static void for_each_tuple(size_t slots, size_t radix, F&& f) {
    std::vector<size_t> idx(slots, 0);
    while (true) {
      f(idx);
      size_t pos = slots;
      while (pos > 0 && ++idx[pos - 1] == radix) idx[--pos] = 0;
      if (pos == 0) break;
    }
  }

  Permutation theta_inverse_ptr(const std::vector<const Permutation*>& sigmas) const {
    std::vector<int> img(n_ * l_);
    for (int i = 0; i < l_; ++i)
      for (int x = 0; x < n_; ++x) img[x * l_ + i] = (*sigmas[i])(x) * l_ + i;
    return Permutation(std::move(img));
  }

  int n_;
  int l_;
  std::vector<Permutation> k_;
  std::vector<Permutation> h_;
};

// Zonal spherical function omega^lambda(g) = (1/|K|) sum_{k in K} chi^lambda(kg).
inline Rational zonal_spherical(const Partition& lambda, const Permutation& g,
                                const BlockSubgroups& sub) {
  if (lambda.weight() != sub.degree()) throw std::invalid_argument("size mismatch");
  // Group the products kg by cycle type before hitting the character cache.
  std::map<std::vector<int>, long long> type_counts;
  for (const auto& k : sub.K()) ++type_counts[(k * g).cycle_type().parts()];
  mpz_class sum = 0;
  for (const auto& [type, count] : type_counts)
    sum += character(lambda, CycleType(std::vector<int>(type))) *
           mpz_class(static_cast<long>(count));
  return Rational(sum, mpz_class(static_cast<long>(sub.K().size())));
}

// Checks the Frobenius specialization
//   alpha^{nu(sigma)} = sum_{lambda |- n} (f^lambda / n!) f_lambda(alpha)
//                       chi^lambda(sigma)
// as an exact polynomial identity on every conjugacy class of S_n.
inline bool frobenius_specialization_check(int n) {
  if (n > 8) throw guard_error("size guard exceeded: n > 8");
  const Rational inv_fact = Rational(1) / Rational(factorial(n));
  for (const auto& rho : partitions_of(n)) {
    AlphaPoly rhs;
    for (const auto& lambda : partitions_of(n)) {
      Rational c = Rational(standard_tableau_count(lambda)) * inv_fact *
                   Rational(character(lambda, rho));
      rhs += content_poly(lambda) * c;
    }
    if (rhs != AlphaPoly::monomial(nu(rho), Rational(1))) return false;
  }
  return true;
}

}  // namespace alphadet

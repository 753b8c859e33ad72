#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "alphadet/partitions.hpp"

namespace alphadet {

// Permutation of {0, ..., m-1} in one-line notation. The external (CLI/JSON)
// form is 1-indexed; internally everything is 0-indexed.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw std::invalid_argument("not a bijection");
      seen[v] = true;
    }
  }
  static Permutation identity(int m) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
  }
  static Permutation from_one_indexed(const std::vector<int>& images) {
    std::vector<int> img(images.size());
    for (size_t i = 0; i < images.size(); ++i) img[i] = images[i] - 1;
    return Permutation(std::move(img));
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  // (a*b)(x) = a(b(x))
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    std::vector<int> img(a.img_.size());
    for (size_t x = 0; x < img.size(); ++x) img[x] = a.img_[b.img_[x]];
    return Permutation(std::move(img));
  }
  Permutation inverse() const {
    std::vector<int> img(img_.size());
    for (size_t x = 0; x < img_.size(); ++x) img[img_[x]] = static_cast<int>(x);
    return Permutation(std::move(img));
  }
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.img_ < b.img_;
  }

  // Cycle lengths, fixed points included, as a partition of m.
  Partition cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> lengths;
    for (size_t x = 0; x < img_.size(); ++x) {
      if (seen[x]) continue;
      int len = 0;
      for (int y = static_cast<int>(x); !seen[y]; y = img_[y]) {
        seen[y] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
  }

 private:
  std::vector<int> img_;
};

using CycleType = Partition;

// nu(sigma): ground-set size minus the number of cycles.
inline int nu(const Permutation& sigma) {
  return sigma.size() - sigma.cycle_type().length();
}

inline int nu(const CycleType& type) { return type.weight() - type.length(); }

// All m! permutations of S_m in lexicographic one-line order.
inline std::vector<Permutation> symmetric_group(int m) {
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Size of the conjugacy class with the given cycle type: m! / z_type.
inline mpz_class conjugacy_class_size(const CycleType& type) {
  mpz_class z = 1;
  int run = 0;
  for (int i = 0; i < type.length(); ++i) {
    z *= type.part(i);
    run = (i > 0 && type.part(i) == type.part(i - 1)) ? run + 1 : 1;
    z *= run;
  }
  mpz_class q;
  mpz_class num = factorial(type.weight());
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), z.get_mpz_t());
  return q;
}

// A permutation with the given cycle type, cycles laid out consecutively.
inline Permutation representative(const CycleType& type) {
  std::vector<int> img(type.weight());
  int base = 0;
  for (int i = 0; i < type.length(); ++i) {
    int len = type.part(i);
    for (int j = 0; j < len; ++j) img[base + j] = base + (j + 1) % len;
    base += len;
  }
  return Permutation(std::move(img));
}

}  // namespace alphadet

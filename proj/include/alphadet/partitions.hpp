#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "alphadet/polynomial.hpp"
#include "alphadet/rational.hpp"

namespace alphadet {

// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
        throw std::invalid_argument("not a partition");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int part(int i) const {  // 0-indexed, 0 beyond the length
    return i < length() ? parts_[i] : 0;
  }
  bool empty() const { return parts_.empty(); }

  // Row lengths of the transposed diagram.
  Partition conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> t(parts_[0], 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++t[j];
    return Partition(std::move(t));
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) {
    return !(a == b);
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> parts_;
};

// All partitions of m with at most max_len parts (max_len < 0: unrestricted),
// in lexicographically descending order: (m), (m-1,1), ...
inline std::vector<Partition> partitions_of(int m, int max_len = -1) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_len >= 0 && static_cast<int>(cur.size()) == max_len) return;
    for (int next = std::min(cap, remaining); next >= 1; --next) {
      cur.push_back(next);
      self(self, remaining - next, next);
      cur.pop_back();
    }
  };
  rec(rec, m, m);
  return out;
}

inline std::vector<int> hook_lengths(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::vector<int> hooks;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.part(i); ++j)
      hooks.push_back(lambda.part(i) - j + conj.part(j) - i - 1);
  return hooks;
}

// Number of standard Young tableaux (hook length formula).
inline mpz_class standard_tableau_count(const Partition& lambda) {
  mpz_class denom = 1;
  for (int h : hook_lengths(lambda)) denom *= h;
  mpz_class q;
  mpz_class num = factorial(lambda.weight());
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
  return q;
}

// Kostka number: semistandard tableaux of shape lambda and content mu,
// counted as chains of horizontal strips (one strip per letter).
inline long long kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw std::invalid_argument("weight mismatch");
  const int letters = mu.length();
  long long count = 0;
  std::vector<int> shape(lambda.length(), 0);  // current row lengths
  auto rec = [&](auto&& self, int letter) -> void {
    if (letter == letters) {
      for (int i = 0; i < lambda.length(); ++i)
        if (shape[i] != lambda.part(i)) return;
      ++count;
      return;
    }
    // distribute mu[letter] cells as a horizontal strip on `shape`
    const int need = mu.part(letter);
    std::vector<int> add(lambda.length() + 1, 0);
    auto place = [&](auto&& go, int row, int remaining) -> void {
      if (remaining == 0) {
        for (int i = 0; i < lambda.length(); ++i) shape[i] += add[i];
        self(self, letter + 1);
        for (int i = 0; i < lambda.length(); ++i) shape[i] -= add[i];
        return;
      }
      if (row < 0) return;
      // strip condition: new cells in row must not sit under row-1 news,
      // i.e. shape[row]+k <= shape[row-1] (old), and stay within lambda
      int lo = shape[row];
      int hi = std::min(lambda.part(row), row == 0 ? lambda.part(0) : shape[row - 1]);
      int maxk = std::max(0, hi - lo);
      for (int k = std::min(maxk, remaining); k >= 0; --k) {
        add[row] = k;
        go(go, row - 1, remaining - k);
        add[row] = 0;
      }
    };
    place(place, lambda.length() - 1, need);
  };
  rec(rec, 0);
  return count;
}

// Modified content polynomial: product over cells (i,j) of (1 + (j-i) a),
// rows/columns 1-indexed.
inline AlphaPoly content_poly(const Partition& lambda) {
  AlphaPoly f(1);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i - 1); ++j)
      f *= AlphaPoly(std::vector<Rational>{1, Rational(j - i)});
  return f;
}

// Dimension of the irreducible gl_n module with highest weight lambda
// (Weyl dimension formula); zero when the length exceeds n.
inline Rational weyl_dim(const Partition& lambda, int n) {
  if (lambda.length() > n) return Rational(0);
  Rational d(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      d *= Rational(lambda.part(i - 1) - lambda.part(j - 1) + j - i, j - i);
  return d;
}

}  // namespace alphadet

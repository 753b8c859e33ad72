#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "alphadet/errors.hpp"
#include "alphadet/partitions.hpp"

namespace alphadet {

// Element of M_{n,l}: an n x n matrix of nonnegative integers with every
// column summing to l. Indexes the basis e^M of (Sym^l C^n)^{(x)n} and the
// monomials X^M.
struct ColMatrix {
  int n = 0;
  int l = 0;
  std::vector<int> e;  // row-major n*n

  ColMatrix() = default;
  ColMatrix(int n_, int l_, std::vector<int> entries)
      : n(n_), l(l_), e(std::move(entries)) {
    if (static_cast<int>(e.size()) != n * n)
      throw std::invalid_argument("exponent matrix size mismatch");
    for (int j = 0; j < n; ++j) {
      int sum = 0;
      for (int i = 0; i < n; ++i) {
        if (e[i * n + j] < 0) throw std::invalid_argument("not in M_{n,l}");
        sum += e[i * n + j];
      }
      if (sum != l) throw std::invalid_argument("not in M_{n,l}");
    }
  }

  static ColMatrix diagonal(int n, int l) {
    std::vector<int> e(n * n, 0);
    for (int i = 0; i < n; ++i) e[i * n + i] = l;
    return ColMatrix(n, l, std::move(e));
  }

  int at(int i, int j) const { return e[i * n + j]; }

  // Weight of e^M: the row-sum vector (not necessarily decreasing).
  std::vector<int> row_sums() const {
    std::vector<int> r(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[i] += e[i * n + j];
    return r;
  }

  // M + R^{pq}_k (adds one at (p,k), removes one at (q,k)); indices 1-based.
  // Caller must ensure entry (q,k) is positive.
  ColMatrix shifted(int p, int q, int k) const {
    ColMatrix r = *this;
    r.e[(p - 1) * n + (k - 1)] += 1;
    r.e[(q - 1) * n + (k - 1)] -= 1;
    return r;
  }

  friend bool operator<(const ColMatrix& a, const ColMatrix& b) { return a.e < b.e; }
  friend bool operator==(const ColMatrix& a, const ColMatrix& b) { return a.e == b.e; }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < n; ++i) {
      s += i ? ";" : "";
      for (int j = 0; j < n; ++j) s += (j ? "," : "") + std::to_string(at(i, j));
    }
    return s + "]";
  }
};

// All of M_{n,l} in lexicographic order of the flattened row-major entries.
inline std::vector<ColMatrix> enumerate_basis(int n, int l) {
  double size = 1;
  for (int j = 0; j < n; ++j)
    size *= binomial(n + l - 1, l).get_d();
  if (size > static_cast<double>(guard_limit(1000000LL)))
    throw guard_error("size guard exceeded: |M_{n,l}| too large");

  // compositions of l into n parts, lexicographically ascending
  std::vector<std::vector<int>> cols;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      cur[pos] = remaining;
      cols.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, l);

  std::vector<ColMatrix> out;
  std::vector<size_t> idx(n, 0);
  while (true) {
    std::vector<int> e(n * n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) e[i * n + j] = cols[idx[j]][i];
    out.push_back(ColMatrix(n, l, std::move(e)));
    int pos = n - 1;
    while (pos >= 0 && ++idx[pos] == cols.size()) idx[pos--] = 0;
    if (pos < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace alphadet

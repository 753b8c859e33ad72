#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "alphadet/characters.hpp"
#include "alphadet/col_matrix.hpp"
#include "alphadet/errors.hpp"
#include "alphadet/permutations.hpp"
#include "alphadet/polynomial.hpp"

namespace alphadet {

// Exponent matrix of a monomial in the n^2 variables x_ij, row-major.
struct ExpMat {
  int n = 0;
  std::vector<int> e;  // n*n entries

  static ExpMat zero(int n) { return ExpMat{n, std::vector<int>(n * n, 0)}; }
  int& at(int i, int j) { return e[i * n + j]; }
  int at(int i, int j) const { return e[i * n + j]; }
  int total_degree() const { return std::accumulate(e.begin(), e.end(), 0); }

  // graded lexicographic on the flattened key
  friend bool operator<(const ExpMat& a, const ExpMat& b) {
    const int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
  friend bool operator==(const ExpMat& a, const ExpMat& b) { return a.e == b.e; }
};

// Sparse polynomial in x_11, ..., x_nn with Q[alpha] coefficients: an element
// of the algebra A(Mat_n). No zero coefficients are stored.
class MatPoly {
 public:
  MatPoly() = default;
  explicit MatPoly(int n) : n_(n) {}

  static MatPoly monomial(ExpMat m, AlphaPoly c) {
    MatPoly p(m.n);
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
  }
  static MatPoly variable(int n, int i, int j) {
    ExpMat m = ExpMat::zero(n);
    m.at(i, j) = 1;
    return monomial(std::move(m), AlphaPoly(1));
  }

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<ExpMat, AlphaPoly>& terms() const { return terms_; }

  AlphaPoly coeff(const ExpMat& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? AlphaPoly() : it->second;
  }

  void add_term(const ExpMat& m, const AlphaPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MatPoly& operator+=(const MatPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MatPoly& operator-=(const MatPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MatPoly operator+(MatPoly a, const MatPoly& b) { return a += b; }
  friend MatPoly operator-(MatPoly a, const MatPoly& b) { return a -= b; }
  friend MatPoly operator-(const MatPoly& a) {
    MatPoly r(a.n_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend MatPoly operator*(const MatPoly& a, const MatPoly& b) {
    MatPoly r(a.n_ ? a.n_ : b.n_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        ExpMat m = ma;
        for (size_t k = 0; k < m.e.size(); ++k) m.e[k] += mb.e[k];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }
  MatPoly& operator*=(const MatPoly& o) { return *this = *this * o; }
  MatPoly& operator*=(const AlphaPoly& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, t] : terms_) t *= c;
    return *this;
  }
  friend MatPoly operator*(MatPoly a, const AlphaPoly& c) { return a *= c; }
  friend MatPoly operator*(const AlphaPoly& c, MatPoly a) { return a *= c; }

  friend bool operator==(const MatPoly& a, const MatPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MatPoly& a, const MatPoly& b) { return !(a == b); }

  // Specialize alpha to a rational; coefficients become constants.
  MatPoly evaluate_alpha(const Rational& alpha0) const {
    MatPoly r(n_);
    for (const auto& [m, c] : terms_) r.add_term(m, AlphaPoly(c.evaluate(alpha0)));
    return r;
  }

 private:
  int n_ = 0;
  std::map<ExpMat, AlphaPoly> terms_;
};

// E_pq f = sum_k x_pk df/dx_qk (the gl_n action on A(Mat_n)).
inline MatPoly gl_action(int p, int q, const MatPoly& f) {
  const int n = f.n();
  if (p < 1 || p > n || q < 1 || q > n) throw std::invalid_argument("bad index");
  MatPoly out(n);
  for (const auto& [m, c] : f.terms()) {
    for (int k = 1; k <= n; ++k) {
      const int e = m.at(q - 1, k - 1);
      if (e == 0) continue;
      ExpMat shifted = m;
      shifted.at(q - 1, k - 1) -= 1;
      shifted.at(p - 1, k - 1) += 1;
      out.add_term(shifted, c * Rational(e));
    }
  }
  return out;
}

// alpha-determinant of the matrix whose i-th row is row k_i of X:
// sum over sigma of alpha^{nu(sigma)} x_{k_sigma(1) 1} ... x_{k_sigma(n) n}.
// rows entries are 1-indexed.
inline MatPoly alpha_det_rows(const std::vector<int>& rows) {
  const int n = static_cast<int>(rows.size());
  for (int k : rows)
    if (k < 1 || k > n) throw std::invalid_argument("bad index");
  MatPoly out(n);
  for (const auto& sigma : symmetric_group(n)) {
    ExpMat m = ExpMat::zero(n);
    for (int j = 0; j < n; ++j) m.at(rows[sigma(j)] - 1, j) += 1;
    out.add_term(m, AlphaPoly::monomial(nu(sigma), Rational(1)));
  }
  return out;
}

// det^(alpha)(X): the identity row selection.
inline MatPoly alpha_det(int n) {
  std::vector<int> rows(n);
  std::iota(rows.begin(), rows.end(), 1);
  return alpha_det_rows(rows);
}

// Class function on S_m with polynomial values, keyed by cycle type.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(int m, std::map<std::vector<int>, AlphaPoly> values)
      : m_(m), values_(std::move(values)) {}

  // phi(sigma) = alpha^{nu(sigma)}
  static ClassFunction alpha_nu(int m) {
    std::map<std::vector<int>, AlphaPoly> v;
    for (const auto& rho : partitions_of(m))
      v[rho.parts()] = AlphaPoly::monomial(nu(rho), Rational(1));
    return ClassFunction(m, std::move(v));
  }
  static ClassFunction trivial(int m) { return constant(m, Rational(1)); }
  static ClassFunction sign(int m) {
    std::map<std::vector<int>, AlphaPoly> v;
    for (const auto& rho : partitions_of(m))
      v[rho.parts()] = AlphaPoly(Rational(nu(rho) % 2 == 0 ? 1 : -1));
    return ClassFunction(m, std::move(v));
  }
  static ClassFunction delta_identity(int m) {
    std::map<std::vector<int>, AlphaPoly> v;
    for (const auto& rho : partitions_of(m))
      v[rho.parts()] = AlphaPoly(rho.length() == m ? 1 : 0);
    return ClassFunction(m, std::move(v));
  }
  static ClassFunction irreducible_character(const Partition& lambda) {
    std::map<std::vector<int>, AlphaPoly> v;
    for (const auto& rho : partitions_of(lambda.weight()))
      v[rho.parts()] = AlphaPoly(Rational(character(lambda, rho)));
    return ClassFunction(lambda.weight(), std::move(v));
  }
  static ClassFunction constant(int m, const Rational& c) {
    std::map<std::vector<int>, AlphaPoly> v;
    for (const auto& rho : partitions_of(m)) v[rho.parts()] = AlphaPoly(c);
    return ClassFunction(m, std::move(v));
  }

  int m() const { return m_; }
  const AlphaPoly& operator()(const Permutation& sigma) const {
    return values_.at(sigma.cycle_type().parts());
  }

 private:
  int m_ = 0;
  std::map<std::vector<int>, AlphaPoly> values_;
};

// phi-immanant: sum over sigma of phi(sigma) x_{1 sigma(1)} ... x_{n sigma(n)}.
inline MatPoly phi_immanant(const ClassFunction& phi) {
  const int n = phi.m();
  MatPoly out(n);
  for (const auto& sigma : symmetric_group(n)) {
    ExpMat m = ExpMat::zero(n);
    for (int i = 0; i < n; ++i) m.at(i, sigma(i)) += 1;
    out.add_term(m, phi(sigma));
  }
  return out;
}

namespace detail {

// Distinct orderings of the multiset {1^{m_1}, ..., n^{m_n}} (1-indexed
// values), one per distribution of a column of M into l standard basis
// columns.
inline std::vector<std::vector<int>> column_sequences(const std::vector<int>& counts,
                                                      int l) {
  std::vector<int> seq;
  for (size_t v = 0; v < counts.size(); ++v)
    seq.insert(seq.end(), counts[v], static_cast<int>(v) + 1);
  if (static_cast<int>(seq.size()) != l)
    throw std::invalid_argument("not in M_{n,l}");
  std::vector<std::vector<int>> out;
  do {
    out.push_back(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

inline double tuple_count(const std::vector<std::vector<std::vector<int>>>& per_col) {
  double t = 1;
  for (const auto& v : per_col) t *= static_cast<double>(v.size());
  return t;
}

}  // namespace detail

// The symmetrized product
//   D(M; phi_1..phi_l) = (M!/(lI_n)!) sum over ordered (M_1,...,M_l) |= M of
//                        prod_i D^(phi_i)(M_i),
// where D^(phi)(k_1..k_n) = sum_sigma phi(sigma) x_{k_sigma(1) 1}... and the
// partition tuples are enumerated one column distribution at a time. The
// all-alpha^nu case is D^(alpha)(M).
inline MatPoly D_of_phi(const ColMatrix& M, const std::vector<ClassFunction>& phis) {
  const int n = M.n;
  const int l = M.l;
  if (static_cast<int>(phis.size()) != l)
    throw std::invalid_argument("need l class functions");

  // one distribution list per column
  std::vector<std::vector<std::vector<int>>> per_col(n);
  for (int j = 0; j < n; ++j) {
    std::vector<int> counts(n);
    for (int i = 0; i < n; ++i) counts[i] = M.at(i, j);
    per_col[j] = detail::column_sequences(counts, l);
  }
  if (detail::tuple_count(per_col) > static_cast<double>(guard_limit(1000000LL)))
    throw guard_error("size guard exceeded: too many partitions in D(M)");

  // memoized alpha-free factors: row choice (k_1..k_n) -> D^(phi_i)(rows)
  std::vector<std::map<std::vector<int>, MatPoly>> factor_memo(l);
  auto factor = [&](int i, const std::vector<int>& rows) -> const MatPoly& {
    auto it = factor_memo[i].find(rows);
    if (it != factor_memo[i].end()) return it->second;
    MatPoly d(n);
    for (const auto& sigma : symmetric_group(n)) {
      ExpMat m = ExpMat::zero(n);
      for (int j = 0; j < n; ++j) m.at(rows[sigma(j)] - 1, j) += 1;
      d.add_term(m, phis[i](sigma));
    }
    return factor_memo[i].emplace(rows, std::move(d)).first->second;
  };

  // prefactor M!/(lI_n)!
  Rational prefactor(1);
  for (int v : M.e) prefactor *= Rational(factorial(v));
  for (int j = 0; j < n; ++j) prefactor /= Rational(factorial(l));

  MatPoly total(n);
  std::vector<size_t> idx(n, 0);
  std::vector<int> rows(n);
  while (true) {
    MatPoly prod = MatPoly::monomial(ExpMat::zero(n), AlphaPoly(1));
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < n; ++j) rows[j] = per_col[j][idx[j]][i];
      prod *= factor(i, rows);
    }
    total += prod;

    int pos = n - 1;
    while (pos >= 0 && ++idx[pos] == per_col[pos].size()) idx[pos--] = 0;
    if (pos < 0) break;
  }
  total *= AlphaPoly(prefactor);
  return total;
}

// D^(alpha)(M): the symmetrized product with every factor weighted by
// alpha^nu. Satisfies D^(alpha)(l I_n) = det^(alpha)(X)^l.
inline MatPoly D_of(const ColMatrix& M) {
  static thread_local std::map<int, ClassFunction> anu_cache;
  auto it = anu_cache.find(M.n);
  if (it == anu_cache.end())
    it = anu_cache.emplace(M.n, ClassFunction::alpha_nu(M.n)).first;
  return D_of_phi(M, std::vector<ClassFunction>(M.l, it->second));
}

}  // namespace alphadet

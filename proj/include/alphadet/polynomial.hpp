#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "alphadet/rational.hpp"

namespace alphadet {

template <typename T>
inline bool scalar_is_zero(const T& x) {
  return x.is_zero();
}

// Dense univariate polynomial over an exact commutative ring. Coefficients
// are stored ascending by degree with trailing zeros stripped; the zero
// polynomial has an empty coefficient list and degree -1.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int c) : Polynomial(Scalar(c)) {}  // implicit: Scalar(0)/Scalar(1)
  Polynomial(Scalar c) {
    if (!scalar_is_zero(c)) coeff_.push_back(std::move(c));
  }
  explicit Polynomial(std::vector<Scalar> coeffs) : coeff_(std::move(coeffs)) {
    normalize();
  }

  static Polynomial variable() {
    return Polynomial(std::vector<Scalar>{Scalar(0), Scalar(1)});
  }
  static Polynomial monomial(int degree, Scalar c) {
    if (scalar_is_zero(c)) return Polynomial();
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  bool is_zero() const { return coeff_.empty(); }
  bool is_constant() const { return coeff_.size() <= 1; }

  Scalar coeff(int k) const {
    if (k < 0 || k > degree()) return Scalar(0);
    return coeff_[k];
  }
  const Scalar& leading() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeff_.back();
  }
  const std::vector<Scalar>& coeffs() const { return coeff_; }

  Polynomial& operator+=(const Polynomial& o) {
    if (coeff_.size() < o.coeff_.size()) coeff_.resize(o.coeff_.size(), Scalar(0));
    for (size_t k = 0; k < o.coeff_.size(); ++k) coeff_[k] += o.coeff_[k];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (coeff_.size() < o.coeff_.size()) coeff_.resize(o.coeff_.size(), Scalar(0));
    for (size_t k = 0; k < o.coeff_.size(); ++k) coeff_[k] -= o.coeff_[k];
    normalize();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Scalar& c) {
    for (auto& a : coeff_) a *= c;
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& c : r.coeff_) c = -c;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Scalar> prod(a.coeff_.size() + b.coeff_.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.coeff_.size(); ++i) {
      if (scalar_is_zero(a.coeff_[i])) continue;
      for (size_t j = 0; j < b.coeff_.size(); ++j)
        prod[i + j] += a.coeff_[i] * b.coeff_[j];
    }
    return Polynomial(std::move(prod));
  }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeff_ == b.coeff_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }
  // Lexicographic by (degree, coefficients); used as an ordered-map key.
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    if (a.coeff_.size() != b.coeff_.size())
      return a.coeff_.size() < b.coeff_.size();
    for (size_t k = a.coeff_.size(); k-- > 0;) {
      if (a.coeff_[k] != b.coeff_[k]) return a.coeff_[k] < b.coeff_[k];
    }
    return false;
  }

  Polynomial derivative() const {
    if (coeff_.size() <= 1) return Polynomial();
    std::vector<Scalar> d(coeff_.size() - 1);
    for (size_t k = 1; k < coeff_.size(); ++k) d[k - 1] = coeff_[k] * Scalar(static_cast<int>(k));
    return Polynomial(std::move(d));
  }

  // Horner evaluation; Value must support v*x + c with c of type Scalar.
  template <typename Value>
  Value evaluate(const Value& x) const {
    Value acc(0);
    for (size_t k = coeff_.size(); k-- > 0;) acc = acc * x + Value(coeff_[k]);
    return acc;
  }

  // p(c*x): rescales the argument in place of general composition.
  Polynomial scale_argument(const Scalar& c) const {
    std::vector<Scalar> out = coeff_;
    Scalar f(1);
    for (size_t k = 1; k < out.size(); ++k) {
      f *= c;
      out[k] *= f;
    }
    return Polynomial(std::move(out));
  }

 private:
  void normalize() {
    while (!coeff_.empty() && scalar_is_zero(coeff_.back())) coeff_.pop_back();
  }

  std::vector<Scalar> coeff_;
};

using AlphaPoly = Polynomial<Rational>;       // Q[alpha]
using BivarPoly = Polynomial<AlphaPoly>;      // Q[alpha][t]

template <typename Scalar>
inline bool scalar_is_zero(const Polynomial<Scalar>& p) {
  return p.is_zero();
}

template <typename Scalar>
inline Polynomial<Scalar> pow(const Polynomial<Scalar>& base, unsigned e) {
  Polynomial<Scalar> r(1);
  Polynomial<Scalar> b = base;
  while (e != 0) {
    if (e & 1u) r *= b;
    b = b * b;
    e >>= 1u;
  }
  return r;
}

// ---- Field-coefficient algorithms (used with Scalar = Rational) ----

// Division with remainder; divisor must be nonzero.
template <typename Scalar>
inline std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(
    const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  std::vector<Scalar> rem(a.coeffs());
  const int db = b.degree();
  int dr = a.degree();
  if (dr < db) return {Polynomial<Scalar>(), a};
  std::vector<Scalar> quot(dr - db + 1, Scalar(0));
  while (dr >= db) {
    Scalar q = rem[dr] / b.leading();
    quot[dr - db] = q;
    for (int k = 0; k <= db; ++k) rem[dr - db + k] -= q * b.coeff(k);
    rem.resize(dr);  // leading term cancelled exactly
    while (!rem.empty() && scalar_is_zero(rem.back())) rem.pop_back();
    dr = static_cast<int>(rem.size()) - 1;
  }
  return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

// Exact quotient; throws if the remainder is nonzero.
template <typename Scalar>
inline Polynomial<Scalar> exact_divide(const Polynomial<Scalar>& a,
                                       const Polynomial<Scalar>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("not divisible");
  return q;
}

template <typename Scalar>
inline Polynomial<Scalar> monic(const Polynomial<Scalar>& p) {
  if (p.is_zero()) return p;
  Polynomial<Scalar> r = p;
  r *= Scalar(1) / p.leading();
  return r;
}

// Monic gcd in Q[x] by the Euclidean algorithm; gcd(0, 0) is undefined.
template <typename Scalar>
inline Polynomial<Scalar> poly_gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd undefined");
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Squarefree part p / gcd(p, p') of a nonzero polynomial, made monic.
template <typename Scalar>
inline Polynomial<Scalar> squarefree_part(const Polynomial<Scalar>& p) {
  if (p.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
  if (p.degree() == 0) return Polynomial<Scalar>(Scalar(1));
  return monic(exact_divide(p, poly_gcd(p, p.derivative())));
}

// ---- Formatting ----

inline std::string to_string(const Rational& r) { return r.str(); }

template <typename Scalar>
inline std::string to_string(const Polynomial<Scalar>& p,
                             const std::string& var = "a") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    Scalar c = p.coeff(k);
    if (scalar_is_zero(c)) continue;
    std::string cs = to_string(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) os << "-", cs = cs.substr(1);
      first = false;
    } else {
      os << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    }
    if (k == 0) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

template <typename Scalar>
inline std::ostream& operator<<(std::ostream& os, const Polynomial<Scalar>& p) {
  return os << to_string(p);
}

}  // namespace alphadet

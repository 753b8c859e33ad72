#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace alphadet {

// Exact rational scalar. Canonical form (gcd(|num|, den) = 1, den > 0) is
// maintained by every operation; zero is 0/1. Backed by GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}  // implicit: generic code needs Scalar(0), Scalar(1)
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long long n) : v_(int_to_mpz(n)) {}
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("division by zero");
    v_.canonicalize();
  }
  Rational(long long num, long long den)
      : Rational(int_to_mpz(num), int_to_mpz(den)) {}

  // Parses "p/q" or "p" (q = 1).
  static Rational parse(const std::string& s) {
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(mpz_class(s));
      return Rational(mpz_class(s.substr(0, slash)),
                      mpz_class(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("cannot parse rational: \"" + s + "\"");
    }
  }

  const mpz_class numerator() const { return v_.get_num(); }
  const mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  double to_double() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.v_ >= b.v_;
  }

  friend Rational abs(const Rational& a) {
    Rational r;
    r.v_ = abs(a.v_);
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  static mpz_class int_to_mpz(long long n) {
    // mpz_class lacks a long long constructor.
    if (n >= INT32_MIN && n <= INT32_MAX) return mpz_class(static_cast<int>(n));
    return mpz_class(std::to_string(n));
  }

  mpq_class v_;
};

inline Rational pow(const Rational& base, unsigned e) {
  Rational r(1);
  Rational b = base;
  while (e != 0) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

inline mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline mpz_class binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace alphadet

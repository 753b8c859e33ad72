#pragma once

#include <Eigen/Core>

#include "alphadet/polynomial.hpp"
#include "alphadet/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<alphadet::Rational> : GenericNumTraits<alphadet::Rational> {
  typedef alphadet::Rational Real;
  typedef alphadet::Rational NonInteger;
  typedef alphadet::Rational Nested;
  typedef alphadet::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
  static inline Real epsilon() { return alphadet::Rational(0); }
  static inline Real dummy_precision() { return alphadet::Rational(0); }
  static inline int digits10() { return 0; }
};

template <typename S>
struct NumTraits<alphadet::Polynomial<S>>
    : GenericNumTraits<alphadet::Polynomial<S>> {
  typedef alphadet::Polynomial<S> Real;
  typedef alphadet::Polynomial<S> NonInteger;
  typedef alphadet::Polynomial<S> Nested;
  typedef alphadet::Polynomial<S> Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 200,
    MulCost = 400
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace alphadet {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Rectangular matrix over Q[alpha]; the type carrying transition matrices.
using PolyMatrix = Eigen::Matrix<AlphaPoly, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace alphadet

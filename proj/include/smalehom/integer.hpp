// Arbitrary-precision integer scalar and dense matrix types.
//
// Every computation in this library is exact: the scalar is GMP's mpz_class
// plugged into Eigen's dense matrix machinery. No floating point, no modular
// shortcuts.
#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace smalehom {

using Integer = mpz_class;
using Index = Eigen::Index;
using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Shape mismatch or out-of-range index data.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

// Malformed or out-of-contract input (bad JSON, |det| too small, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// A map that was required to commute with the structure endomorphisms
// does not. Carries the offending degree when known.
class CommutationError : public Error {
 public:
  explicit CommutationError(const std::string& what, Index degree = -1)
      : Error(what), degree(degree) {}
  Index degree;
};

// Two consecutive boundary maps do not compose to zero.
class BoundarySquareError : public Error {
 public:
  explicit BoundarySquareError(const std::string& what, Index degree = -1)
      : Error(what), degree(degree) {}
  Index degree;
};

inline bool is_zero(const IntMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

inline IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows())
    throw DimensionError("hcat: row count mismatch");
  IntMatrix out(a.rows(), a.cols() + b.cols());
  out.leftCols(a.cols()) = a;
  out.rightCols(b.cols()) = b;
  return out;
}

inline IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out = IntMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

// Kronecker product with row-major pair indexing: entry ((i1,i2),(j1,j2))
// at (i1*b.rows()+i2, j1*b.cols()+j2).
inline IntMatrix kronecker_product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

}  // namespace smalehom

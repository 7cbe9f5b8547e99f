#pragma once

#include <Eigen/Dense>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "algact/errors.hpp"
#include "algact/scalar.hpp"

namespace algact {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ZMat = Mat<BigInt>;
using QMat = Mat<BigRat>;
using ZVec = Vec<BigInt>;
using QVec = Vec<BigRat>;

ZMat zmat(std::initializer_list<std::initializer_list<long>> rows);
QMat qmat(std::initializer_list<std::initializer_list<long>> rows);
ZVec zvec(std::initializer_list<long> entries);

inline QMat to_rational(const ZMat& m) { return m.cast<BigRat>(); }
inline QVec to_rational(const ZVec& v) { return v.cast<BigRat>(); }

/// The integer matrix equal to m, or nullopt when some entry has a denominator.
std::optional<ZMat> to_integer(const QMat& m);
std::optional<ZVec> to_integer(const QVec& v);

template <typename Scalar>
Mat<Scalar> identity(Eigen::Index n) {
  return Mat<Scalar>::Identity(n, n);
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw DomainError(std::string(what) + ": matrix must be square and non-empty");
}

/// Fraction-free (Bareiss) determinant. Exact over any integral domain whose
/// division is exact on the Bareiss quotients, in particular BigInt and BigRat.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m_in) {
  using Scalar = typename Derived::Scalar;
  require_square(m_in, "determinant");
  Mat<Scalar> m = m_in;
  const Eigen::Index n = m.rows();
  Scalar sign(1), prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == Scalar(0)) ++p;
      if (p == n) return Scalar(0);
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Non-negative integer power by repeated squaring.
template <typename Scalar>
Mat<Scalar> power(const Mat<Scalar>& m, unsigned long k) {
  require_square(m, "power");
  Mat<Scalar> result = identity<Scalar>(m.rows());
  Mat<Scalar> base = m;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

/// Exact inverse over Q by Gauss-Jordan elimination.
QMat inverse(const QMat& m);

/// Integer power for any exponent; negative exponents go through the rational
/// inverse.
QMat power(const QMat& m, long k);

/// The adjugate of an integer matrix, adj(M) * M = det(M) * I.
ZMat adjugate(const ZMat& m);

/// Reduced row echelon form over Q and the pivot columns it found.
struct RowEchelon {
  QMat form;
  std::vector<Eigen::Index> pivots;
};
RowEchelon rref(const QMat& m);

Eigen::Index rank(const QMat& m);
inline Eigen::Index rank(const ZMat& m) { return rank(to_rational(m)); }

/// Columns form a basis of the right kernel {x : m x = 0}.
QMat nullspace(const QMat& m);

/// Row-major flatten of a matrix, handy for rank computations over spans of
/// matrices.
template <typename Scalar>
Vec<Scalar> flatten(const Mat<Scalar>& m) {
  Vec<Scalar> v(m.rows() * m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

template <typename Derived>
std::string to_string(const Eigen::MatrixBase<Derived>& m) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += m(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace algact

#include "algact/matrix.hpp"

namespace algact {

XGcd xgcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {BigInt(-old_r), BigInt(-old_s), BigInt(-old_t)};
  return {old_r, old_s, old_t};
}

namespace {

template <typename Scalar>
Mat<Scalar> from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  Mat<Scalar> m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c)
      throw DomainError("matrix literal: ragged rows");
    Eigen::Index j = 0;
    for (long x : row) m(i, j++) = Scalar(x);
    ++i;
  }
  return m;
}

}  // namespace

ZMat zmat(std::initializer_list<std::initializer_list<long>> rows) { return from_rows<BigInt>(rows); }
QMat qmat(std::initializer_list<std::initializer_list<long>> rows) { return from_rows<BigRat>(rows); }

ZVec zvec(std::initializer_list<long> entries) {
  ZVec v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long x : entries) v(i++) = x;
  return v;
}

std::optional<ZMat> to_integer(const QMat& m) {
  ZMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) return std::nullopt;
      out(i, j) = numer(m(i, j));
    }
  return out;
}

std::optional<ZVec> to_integer(const QVec& v) {
  ZVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!is_integral(v(i))) return std::nullopt;
    out(i) = numer(v(i));
  }
  return out;
}

RowEchelon rref(const QMat& m) {
  RowEchelon out{m, {}};
  QMat& a = out.form;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    const BigRat inv = BigRat(1) / a(row, col);
    a.row(row) *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const BigRat f = a(i, col);
      a.row(i) -= f * a.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

Eigen::Index rank(const QMat& m) { return static_cast<Eigen::Index>(rref(m).pivots.size()); }

QMat nullspace(const QMat& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);
  QMat basis = QMat::Zero(m.cols(), static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index f = free_cols[k];
    const auto kk = static_cast<Eigen::Index>(k);
    basis(f, kk) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], kk) = -e.form(static_cast<Eigen::Index>(r), f);
  }
  return basis;
}

QMat inverse(const QMat& m) {
  require_square(m, "inverse");
  const Eigen::Index n = m.rows();
  QMat aug(n, 2 * n);
  aug << m, identity<BigRat>(n);
  const RowEchelon e = rref(aug);
  if (static_cast<Eigen::Index>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1)
    throw DomainError("inverse: matrix is singular");
  return e.form.rightCols(n);
}

QMat power(const QMat& m, long k) {
  if (k >= 0) return power<BigRat>(m, static_cast<unsigned long>(k));
  return power<BigRat>(inverse(m), static_cast<unsigned long>(-k));
}

ZMat adjugate(const ZMat& m) {
  require_square(m, "adjugate");
  const Eigen::Index n = m.rows();
  if (n == 1) return ZMat::Identity(1, 1);
  ZMat adj(n, n);
  ZMat minor(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      BigInt cof = determinant(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : BigInt(-cof);
    }
  return adj;
}

}  // namespace algact

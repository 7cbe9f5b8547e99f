#include "algact/normal_form.hpp"

namespace algact {

namespace {

// Replace rows (r, i) of each matrix by the unimodular combination
// [x y; -b/g a/g] so that entry (r, col) becomes g and entry (i, col) zero.
void combine_rows(ZMat& a, ZMat& u, Eigen::Index r, Eigen::Index i, Eigen::Index col) {
  const BigInt p = a(r, col), q = a(i, col);
  if (p != 0 && q % p == 0) {
    const BigInt k = q / p;
    a.row(i) -= k * a.row(r);
    u.row(i) -= k * u.row(r);
    return;
  }
  const XGcd e = xgcd(p, q);
  const BigInt s = q / e.g, t = p / e.g;
  for (ZMat* m : {&a, &u}) {
    const ZMat rr = m->row(r);
    const ZMat ri = m->row(i);
    m->row(r) = e.x * rr + e.y * ri;
    m->row(i) = t * ri - s * rr;
  }
}

void combine_cols(ZMat& a, ZMat& v, Eigen::Index c, Eigen::Index j, Eigen::Index row) {
  const BigInt p = a(row, c), q = a(row, j);
  if (p != 0 && q % p == 0) {
    const BigInt k = q / p;
    a.col(j) -= k * a.col(c);
    v.col(j) -= k * v.col(c);
    return;
  }
  const XGcd e = xgcd(p, q);
  const BigInt s = q / e.g, t = p / e.g;
  for (ZMat* m : {&a, &v}) {
    const ZMat cc = m->col(c);
    const ZMat cj = m->col(j);
    m->col(c) = e.x * cc + e.y * cj;
    m->col(j) = t * cj - s * cc;
  }
}

}  // namespace

HermiteForm hnf(const ZMat& m) {
  HermiteForm out{m, identity<BigInt>(m.rows())};
  ZMat& h = out.H;
  ZMat& u = out.U;
  Eigen::Index r = 0;
  for (Eigen::Index j = 0; j < h.cols() && r < h.rows(); ++j) {
    for (Eigen::Index i = r + 1; i < h.rows(); ++i)
      if (h(i, j) != 0) combine_rows(h, u, r, i, j);
    if (h(r, j) == 0) continue;
    if (h(r, j) < 0) {
      h.row(r) *= BigInt(-1);
      u.row(r) *= BigInt(-1);
    }
    for (Eigen::Index k = 0; k < r; ++k) {
      const BigInt q = floor_div(h(k, j), h(r, j));
      if (q == 0) continue;
      h.row(k) -= q * h.row(r);
      u.row(k) -= q * u.row(r);
    }
    ++r;
  }
  return out;
}

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> d;
  for (Eigen::Index i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

SmithForm snf(const ZMat& m) {
  SmithForm out{m, identity<BigInt>(m.rows()), identity<BigInt>(m.cols())};
  ZMat& s = out.S;
  const Eigen::Index rows = s.rows(), cols = s.cols();
  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (s(i, j) != 0 && (pi < 0 || abs(s(i, j)) < abs(s(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != t) {
      s.row(t).swap(s.row(pi));
      out.U.row(t).swap(out.U.row(pi));
    }
    if (pj != t) {
      s.col(t).swap(s.col(pj));
      out.V.col(t).swap(out.V.col(pj));
    }
    for (;;) {
      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i)
        if (s(i, t) != 0) combine_rows(s, out.U, t, i, t);
      for (Eigen::Index j = t + 1; j < cols; ++j)
        if (s(t, j) != 0) combine_cols(s, out.V, t, j, t);
      for (Eigen::Index i = t + 1; i < rows; ++i)
        if (s(i, t) != 0) clean = false;
      if (!clean) continue;
      // Enforce d_t | every remaining entry by folding an offending row in.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (s(i, j) % s(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      s.row(t) += s.row(bad);
      out.U.row(t) += out.U.row(bad);
    }
    if (s(t, t) < 0) {
      s.row(t) *= BigInt(-1);
      out.U.row(t) *= BigInt(-1);
    }
  }
  return out;
}

}  // namespace algact

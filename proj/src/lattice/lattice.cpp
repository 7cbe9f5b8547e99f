#include "algact/lattice.hpp"

#include "algact/normal_form.hpp"

namespace algact {

namespace {

void require_same_rank(const Lattice& a, const Lattice& b) {
  if (a.rank() != b.rank()) throw DomainError("lattices have different ambient ranks");
}

void require_nonsingular(const ZMat& m, const Lattice& l) {
  require_square(m, "lattice map");
  if (m.rows() != l.rank()) throw DomainError("matrix size does not match the lattice rank");
  if (determinant(m) == 0) throw DomainError("matrix is singular");
}

}  // namespace

Lattice Lattice::from_rows(const ZMat& m) {
  const Eigen::Index n = m.cols();
  if (n == 0) throw DomainError("lattice of rank 0");
  const ZMat h = hnf(m).H;
  if (h.rows() < n) throw DomainError("generating set is rank-deficient");
  for (Eigen::Index i = 0; i < n; ++i)
    if (h(i, i) == 0) throw DomainError("generating set is rank-deficient");
  return Lattice(h.topRows(n));
}

Lattice Lattice::from_generators(Eigen::Index n, const std::vector<ZVec>& vectors) {
  ZMat m(static_cast<Eigen::Index>(vectors.size()), n);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != n) throw DomainError("generator has the wrong length");
    m.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  }
  return from_rows(m);
}

Lattice Lattice::full(Eigen::Index n) { return Lattice(identity<BigInt>(n)); }

Lattice Lattice::scaled(Eigen::Index n, const BigInt& k) {
  if (k == 0) throw DomainError("scaled: factor must be nonzero");
  return Lattice(abs(k) * identity<BigInt>(n));
}

BigInt Lattice::index() const {
  BigInt d = 1;
  for (Eigen::Index i = 0; i < rank(); ++i) d *= basis_(i, i);
  return d;
}

bool Lattice::contains(const ZVec& x) const {
  if (x.size() != rank()) throw DomainError("vector has the wrong length");
  ZVec r = x;
  for (Eigen::Index j = 0; j < rank(); ++j) {
    if (r(j) % basis_(j, j) != 0) return false;
    const BigInt c = r(j) / basis_(j, j);
    if (c != 0) r -= c * basis_.row(j).transpose();
  }
  return true;
}

bool Lattice::contains(const Lattice& other) const {
  require_same_rank(*this, other);
  for (Eigen::Index i = 0; i < other.rank(); ++i)
    if (!contains(ZVec(other.basis_.row(i).transpose()))) return false;
  return true;
}

bool operator<(const Lattice& a, const Lattice& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  for (Eigen::Index i = 0; i < a.rank(); ++i)
    for (Eigen::Index j = 0; j < a.rank(); ++j)
      if (a.basis_(i, j) != b.basis_(i, j)) return a.basis_(i, j) < b.basis_(i, j);
  return false;
}

Lattice intersect(const Lattice& a, const Lattice& b) {
  require_same_rank(a, b);
  const Eigen::Index n = a.rank();
  // Rows (u, v) of [[A, A], [B, 0]] combine to (uA + vB, uA); once the left
  // half is cleared, uA = -vB runs over the intersection.
  ZMat m = ZMat::Zero(2 * n, 2 * n);
  m.topLeftCorner(n, n) = a.basis();
  m.topRightCorner(n, n) = a.basis();
  m.bottomLeftCorner(n, n) = b.basis();
  const ZMat h = hnf(m).H;
  return Lattice::from_rows(h.bottomRightCorner(n, n));
}

Lattice sum(const Lattice& a, const Lattice& b) {
  require_same_rank(a, b);
  ZMat m(2 * a.rank(), a.rank());
  m << a.basis(), b.basis();
  return Lattice::from_rows(m);
}

Lattice image(const ZMat& m, const Lattice& l) {
  require_nonsingular(m, l);
  return Lattice::from_rows(l.basis() * m.transpose());
}

Lattice preimage(const ZMat& m, const Lattice& l) {
  require_nonsingular(m, l);
  // adj(M) M = D I, so M x in L exactly when D x lies in adj(M) L.
  const BigInt d = abs(determinant(m));
  const Lattice target = intersect(image(adjugate(m), l), Lattice::scaled(l.rank(), d));
  ZMat b = target.basis();
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) b(i, j) /= d;
  return Lattice::from_rows(b);
}

std::string to_string(const Lattice& l) { return to_string(l.basis()); }

QuotientLevel::QuotientLevel(Lattice l) : lattice_(std::move(l)) {
  const SmithForm s = snf(lattice_.basis());
  factors_ = s.diagonal();
  v_ = s.V;
  v_inv_ = *to_integer(inverse(to_rational(s.V)));
}

ZVec QuotientLevel::coords(const ZVec& x) const {
  if (x.size() != lattice_.rank()) throw DomainError("vector has the wrong length");
  ZVec c = (x.transpose() * v_).transpose();
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = mod_floor(c(i), factors_[static_cast<std::size_t>(i)]);
  return c;
}

ZVec QuotientLevel::from_coords(const ZVec& c) const { return reduce((c.transpose() * v_inv_).transpose()); }

ZVec QuotientLevel::reduce(const ZVec& x) const {
  if (x.size() != lattice_.rank()) throw DomainError("vector has the wrong length");
  const ZMat& b = lattice_.basis();
  ZVec r = x;
  for (Eigen::Index j = 0; j < r.size(); ++j) {
    const BigInt q = floor_div(r(j), b(j, j));
    if (q != 0) r -= q * b.row(j).transpose();
  }
  return r;
}

std::vector<ZVec> QuotientLevel::representatives(std::uint64_t cap) const {
  if (order() > BigInt(cap)) throw DomainError("quotient has " + order().str() + " elements, above the cap");
  const ZMat& b = lattice_.basis();
  const Eigen::Index n = b.rows();
  std::vector<ZVec> out;
  ZVec x = ZVec::Zero(n);
  for (;;) {
    out.push_back(x);
    Eigen::Index j = n - 1;
    while (j >= 0 && x(j) + 1 == b(j, j)) x(j--) = 0;
    if (j < 0) break;
    x(j) += 1;
  }
  return out;
}

}  // namespace algact

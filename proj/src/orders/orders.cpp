#include "algact/orders.hpp"

#include "algact/polyring.hpp"

namespace algact {

StructureRing::StructureRing(Eigen::Index n, std::vector<BigInt> constants, ZVec one)
    : n_(n), c_(std::move(constants)), one_(std::move(one)) {
  if (n < 1) throw DomainError("structure ring: rank must be positive");
  if (c_.size() != static_cast<std::size_t>(n * n * n))
    throw DomainError("structure ring: expected " + std::to_string(n * n * n) + " constants, got " +
                      std::to_string(c_.size()));
  if (one_.size() != n) throw DomainError("structure ring: unit has the wrong length");
}

ZVec StructureRing::basis(Eigen::Index i) const {
  ZVec e = ZVec::Zero(n_);
  e(i) = 1;
  return e;
}

ZVec StructureRing::mul(const ZVec& a, const ZVec& b) const {
  if (a.size() != n_ || b.size() != n_) throw DomainError("structure ring: element has the wrong length");
  ZVec out = ZVec::Zero(n_);
  for (Eigen::Index i = 0; i < n_; ++i) {
    if (a(i) == 0) continue;
    for (Eigen::Index j = 0; j < n_; ++j) {
      if (b(j) == 0) continue;
      const BigInt ab = a(i) * b(j);
      for (Eigen::Index k = 0; k < n_; ++k) out(k) += ab * constant(i, j, k);
    }
  }
  return out;
}

RingValidation validate(const StructureRing& r) {
  RingValidation v;
  const Eigen::Index n = r.rank();
  v.associative = true;
  for (Eigen::Index i = 0; i < n && v.associative; ++i)
    for (Eigen::Index j = 0; j < n && v.associative; ++j)
      for (Eigen::Index k = 0; k < n && v.associative; ++k) {
        const ZVec ei = r.basis(i), ej = r.basis(j), ek = r.basis(k);
        if (r.mul(r.mul(ei, ej), ek) != r.mul(ei, r.mul(ej, ek))) {
          v.associative = false;
          v.failure = "associativity fails on basis triple (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                      std::to_string(k) + ")";
        }
      }
  v.unit = true;
  for (Eigen::Index i = 0; i < n && v.unit; ++i) {
    const ZVec ei = r.basis(i);
    if (r.mul(r.one(), ei) != ei || r.mul(ei, r.one()) != ei) {
      v.unit = false;
      if (v.failure.empty()) v.failure = "unit law fails on basis vector " + std::to_string(i);
    }
  }
  v.commutative = true;
  for (Eigen::Index i = 0; i < n && v.commutative; ++i)
    for (Eigen::Index j = i + 1; j < n && v.commutative; ++j)
      v.commutative = r.mul(r.basis(i), r.basis(j)) == r.mul(r.basis(j), r.basis(i));
  return v;
}

ZMat act_matrix(const StructureRing& r, const ZVec& a) {
  ZMat m(r.rank(), r.rank());
  for (Eigen::Index j = 0; j < r.rank(); ++j) m.col(j) = r.mul(a, r.basis(j));
  return m;
}

BigInt norm(const StructureRing& r, const ZVec& a) { return abs(determinant(act_matrix(r, a))); }

bool is_regular(const StructureRing& r, const ZVec& a) { return norm(r, a) != 0; }

long regular_shift(const StructureRing& r, const ZVec& a) {
  for (long k = 1;; ++k)
    if (is_regular(r, ZVec(a + BigInt(k) * r.one()))) return k;
}

AlgebraicAction action_from_ring(const StructureRing& r, const std::vector<ZVec>& gens,
                                 const std::vector<std::string>& names) {
  const RingValidation v = validate(r);
  if (!v.valid()) throw DomainError("action_from_ring: " + v.failure);
  if (!names.empty() && names.size() != gens.size()) throw DomainError("action_from_ring: one name per generator");
  std::vector<Generator> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!is_regular(r, gens[i])) throw DomainError("action_from_ring: generator " + std::to_string(i) + " is not regular");
    out.push_back({names.empty() ? "a" + std::to_string(i + 1) : names[i], act_matrix(r, gens[i])});
  }
  bool commute = true;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      commute = commute && r.mul(gens[i], gens[j]) == r.mul(gens[j], gens[i]);
  return AlgebraicAction(r.rank(), std::move(out), commute ? MonoidKind::FreeAbelian : MonoidKind::Free);
}

StructureRing ring_from_poly(const ZPoly& f) {
  if (!f.is_monic() || f.degree() < 1) throw DomainError("ring_from_poly: need a monic non-constant polynomial");
  const int d = f.degree();
  const ZMat c = companion(f);
  // Columns of C^m are the coordinates of z^m times the basis.
  std::vector<ZMat> powers{identity<BigInt>(d)};
  for (int m = 1; m < d; ++m) powers.push_back(powers.back() * c);
  std::vector<BigInt> k(static_cast<std::size_t>(d * d * d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int l = 0; l < d; ++l) k[static_cast<std::size_t>((i * d + j) * d + l)] = powers[static_cast<std::size_t>(i)](l, j);
  ZVec one = ZVec::Zero(d);
  one(0) = 1;
  return StructureRing(d, std::move(k), std::move(one));
}

StructureRing ring_from_quotient(const QuotientAlgebra& qa) {
  const auto n = static_cast<Eigen::Index>(qa.dim());
  if (n == 0) throw DomainError("ring_from_quotient: zero ring");
  const auto& st = qa.staircase();
  std::vector<BigInt> k(static_cast<std::size_t>(n * n * n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const QVec v = qa.coords(MPoly::monomial(st[static_cast<std::size_t>(i)]) *
                               MPoly::monomial(st[static_cast<std::size_t>(j)]));
      const auto z = to_integer(v);
      if (!z) throw DomainError("ring_from_quotient: non-integral structure constants");
      for (Eigen::Index l = 0; l < n; ++l) k[static_cast<std::size_t>((i * n + j) * n + l)] = (*z)(l);
    }
  ZVec one = ZVec::Zero(n);
  one(0) = 1;
  return StructureRing(n, std::move(k), std::move(one));
}

namespace {

StructureRing from_table(Eigen::Index n, const std::vector<std::vector<std::vector<long>>>& table, ZVec one) {
  std::vector<BigInt> c;
  for (const auto& row : table)
    for (const auto& cell : row)
      for (long x : cell) c.emplace_back(x);
  return StructureRing(n, std::move(c), std::move(one));
}

StructureRing matrix_ring_2() {
  // E_ab E_cd = [b == c] E_ad, basis index 2a + b.
  std::vector<BigInt> c(64, 0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int d = 0; d < 2; ++d) c[static_cast<std::size_t>(((2 * a + b) * 4 + (2 * b + d)) * 4 + (2 * a + d))] = 1;
  return StructureRing(4, std::move(c), zvec({1, 0, 0, 1}));
}

}  // namespace

StructureRing ring_preset(const std::string& name) {
  if (name == "Z") return from_table(1, {{{1}}}, zvec({1}));
  if (name == "Z[i]") return from_table(2, {{{1, 0}, {0, 1}}, {{0, 1}, {-1, 0}}}, zvec({1, 0}));
  if (name == "Z[sqrt2]") return from_table(2, {{{1, 0}, {0, 1}}, {{0, 1}, {2, 0}}}, zvec({1, 0}));
  if (name == "Z[C2]") return from_table(2, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}}, zvec({1, 0}));
  if (name == "M2(Z)") return matrix_ring_2();
  throw DomainError("unknown ring preset '" + name + "'");
}

std::vector<std::string> ring_preset_names() { return {"Z", "Z[i]", "Z[sqrt2]", "M2(Z)", "Z[C2]"}; }

}  // namespace algact

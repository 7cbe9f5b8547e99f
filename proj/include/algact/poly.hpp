#pragma once

#include <string>
#include <utility>
#include <vector>

#include "algact/errors.hpp"
#include "algact/matrix.hpp"
#include "algact/scalar.hpp"

namespace algact {

/// Dense univariate polynomial, coefficients stored low degree first.
/// The zero polynomial has no coefficients and degree -1.
template <typename Scalar>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<long> coeffs) {
    for (long x : coeffs) c_.emplace_back(x);
    trim();
  }

  static Poly constant(const Scalar& a) { return Poly(std::vector<Scalar>{a}); }
  static Poly monomial(const Scalar& a, int degree) {
    std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1, Scalar(0));
    c.back() = a;
    return Poly(std::move(c));
  }
  /// z - a
  static Poly linear_root(const Scalar& a) { return Poly(std::vector<Scalar>{Scalar(-a), Scalar(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == Scalar(1); }
  const Scalar& lead() const { return c_.back(); }
  Scalar coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Scalar(0);
  }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<Scalar> c = a.c_;
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Scalar& s, const Poly& a) {
    std::vector<Scalar> c = a.c_;
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Scalar> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Scalar(static_cast<long>(i));
    return Poly(std::move(c));
  }

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

using ZPoly = Poly<BigInt>;
using QPoly = Poly<BigRat>;

/// Division with remainder a = q*b + r, deg r < deg b. Every quotient
/// coefficient must be exactly divisible by lead(b) in Scalar; over BigInt
/// that holds whenever b is monic, otherwise DomainError is thrown.
template <typename Scalar>
std::pair<Poly<Scalar>, Poly<Scalar>> divrem(const Poly<Scalar>& a, const Poly<Scalar>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Scalar> r = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Poly<Scalar>(), a};
  std::vector<Scalar> q(static_cast<std::size_t>(da - db + 1), Scalar(0));
  for (int i = da; i >= db; --i) {
    const Scalar& top = r[static_cast<std::size_t>(i)];
    if (top == Scalar(0)) continue;
    Scalar f = top / b.lead();
    if (f * b.lead() != top) throw DomainError("polynomial division is not exact over this ring");
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(j);
  }
  return {Poly<Scalar>(std::move(q)), Poly<Scalar>(std::move(r))};
}

template <typename Scalar>
bool divides(const Poly<Scalar>& d, const Poly<Scalar>& a) {
  return divrem(a, d).second.is_zero();
}

/// Monic associate (field coefficients). Zero stays zero.
inline QPoly monic(const QPoly& p) {
  if (p.is_zero()) return p;
  return (BigRat(1) / p.lead()) * p;
}

/// Monic gcd over Q.
QPoly gcd(QPoly a, QPoly b);

inline QPoly to_rational(const ZPoly& p) {
  std::vector<BigRat> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return QPoly(std::move(c));
}

/// The integer polynomial equal to p; DomainError when a coefficient is not
/// integral.
ZPoly to_integer(const QPoly& p);

/// Smallest positive integer k with k*p integral, and k*p itself.
std::pair<BigInt, ZPoly> clear_denominators(const QPoly& p);

/// Horner evaluation of p at a square matrix.
template <typename Scalar>
Mat<Scalar> evaluate(const Poly<Scalar>& p, const Mat<Scalar>& m) {
  require_square(m, "evaluate");
  Mat<Scalar> acc = Mat<Scalar>::Zero(m.rows(), m.cols());
  const Mat<Scalar> id = identity<Scalar>(m.rows());
  for (int i = p.degree(); i >= 0; --i) acc = acc * m + p.coeff(i) * id;
  return acc;
}

/// Companion matrix of a monic polynomial, in the column convention: it is
/// the matrix of multiplication by z on the basis 1, z, ..., z^{d-1}.
template <typename Scalar>
Mat<Scalar> companion(const Poly<Scalar>& f) {
  if (!f.is_monic() || f.degree() < 1) throw DomainError("companion: need a monic polynomial of degree >= 1");
  const int d = f.degree();
  Mat<Scalar> c = Mat<Scalar>::Zero(d, d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = Scalar(1);
  for (int i = 0; i < d; ++i) c(i, d - 1) = -f.coeff(i);
  return c;
}

/// The k-th cyclotomic polynomial, by dividing z^k - 1 by Phi_d for every
/// proper divisor d of k.
ZPoly cyclotomic(int k);

/// Euler's totient.
long totient(long k);

template <typename Scalar>
std::string Poly<Scalar>::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    Scalar a = coeff(i);
    if (a == Scalar(0)) continue;
    const bool neg = a < Scalar(0);
    if (neg) a = -a;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const bool unit = (a == Scalar(1));
    if (!unit || i == 0) out += a.str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace algact

#pragma once

#include <cstdint>
#include <vector>

#include "algact/poly.hpp"

namespace algact {

/// Polynomial over F_p, p < 2^32, coefficients low degree first in [0, p).
class ModPoly {
 public:
  ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  static ModPoly reduce(const ZPoly& f, std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : 0;
  }

  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  ModPoly operator-(const ModPoly& b) const;
  ModPoly operator*(const ModPoly& b) const;
  ModPoly derivative() const;
  ModPoly monic() const;

  friend std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b);
  friend ModPoly gcd(ModPoly a, ModPoly b);
  /// base^e mod m.
  friend ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& m);

 private:
  void trim();
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

/// Factorization pattern of f mod p. `ramified` is set when f mod p is not
/// squarefree; `degrees` is then empty.
struct SplitSignature {
  bool ramified = false;
  std::vector<int> degrees;  // ascending multiset

  friend bool operator==(const SplitSignature&, const SplitSignature&) = default;
};

/// Distinct-degree factorization signature of a monic f at a prime p.
/// Throws DomainError for composite p or when p divides the leading
/// coefficient.
SplitSignature ddf_signature(const ZPoly& f, std::uint64_t p);

std::string to_string(const SplitSignature& s);

}  // namespace algact

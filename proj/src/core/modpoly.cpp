#include "algact/modpoly.hpp"

#include <algorithm>

#include "algact/number_theory.hpp"

namespace algact {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

}  // namespace

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2 || p >= (1ULL << 32)) throw DomainError("ModPoly: modulus out of range");
  for (auto& x : c_) x %= p_;
  trim();
}

ModPoly ModPoly::reduce(const ZPoly& f, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  const BigInt bp(p);
  for (const auto& a : f.coeffs()) c.push_back(mod_floor(a, bp).convert_to<std::uint64_t>());
  return ModPoly(p, std::move(c));
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::operator-(const ModPoly& b) const {
  std::vector<std::uint64_t> c(std::max(c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (coeff(static_cast<int>(i)) + p_ - b.coeff(static_cast<int>(i))) % p_;
  return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::operator*(const ModPoly& b) const {
  if (is_zero() || b.is_zero()) return ModPoly(p_, {});
  std::vector<std::uint64_t> c(c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = (c[i + j] + c_[i] * b.c_[j]) % p_;
  return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::derivative() const {
  std::vector<std::uint64_t> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * (i % p_) % p_);
  return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::monic() const {
  if (is_zero()) return *this;
  const std::uint64_t inv = inv_mod(c_.back(), p_);
  std::vector<std::uint64_t> c = c_;
  for (auto& x : c) x = x * inv % p_;
  return ModPoly(p_, std::move(c));
}

std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b) {
  if (b.is_zero()) throw DomainError("ModPoly division by zero");
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> r = a.c_;
  const int db = b.degree(), da = a.degree();
  if (da < db) return {ModPoly(p, {}), a};
  std::vector<std::uint64_t> q(static_cast<std::size_t>(da - db + 1), 0);
  const std::uint64_t inv = inv_mod(b.c_.back(), p);
  for (int i = da; i >= db; --i) {
    const std::uint64_t top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    const std::uint64_t f = top * inv % p;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - db + j)];
      slot = (slot + p - f * b.coeff(j) % p) % p;
    }
  }
  return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& m) {
  ModPoly result(base.p_, {1});
  ModPoly b = divrem(base, m).second;
  result = divrem(result, m).second;
  while (e) {
    if (e & 1) result = divrem(result * b, m).second;
    b = divrem(b * b, m).second;
    e >>= 1;
  }
  return result;
}

SplitSignature ddf_signature(const ZPoly& f, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("ddf_signature: modulus " + std::to_string(p) + " is not prime");
  if (f.degree() < 1) throw DomainError("ddf_signature: polynomial must be non-constant");
  ModPoly g = ModPoly::reduce(f, p);
  if (g.degree() != f.degree()) throw DomainError("ddf_signature: p divides the leading coefficient");
  g = g.monic();

  SplitSignature sig;
  if (gcd(g, g.derivative()).degree() > 0) {
    sig.ramified = true;
    return sig;
  }
  const ModPoly x(p, {0, 1});
  ModPoly h = x;
  ModPoly rest = g;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = powmod(h, p, rest);
    const ModPoly common = gcd(rest, h - x);
    const int count = common.degree() / d;
    for (int k = 0; k < count; ++k) sig.degrees.push_back(d);
    if (common.degree() > 0) {
      rest = divrem(rest, common).first;
      h = divrem(h, rest).second;
    }
  }
  if (rest.degree() > 0) sig.degrees.push_back(rest.degree());
  std::sort(sig.degrees.begin(), sig.degrees.end());
  return sig;
}

std::string to_string(const SplitSignature& s) {
  if (s.ramified) return "ramified";
  std::string out = "{";
  for (std::size_t i = 0; i < s.degrees.size(); ++i) out += (i ? "," : "") + std::to_string(s.degrees[i]);
  return out + "}";
}

}  // namespace algact

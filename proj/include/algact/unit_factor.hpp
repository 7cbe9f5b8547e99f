#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algact/poly.hpp"

namespace algact {

/// Orders k of the roots of unity that are roots of f: every k <= 2 n^2 with
/// totient(k) <= n = deg f and gcd(f, Phi_k) != 1, ascending. Complete because
/// a primitive k-th root of unity has degree totient(k) >= sqrt(k/2).
std::vector<int> root_of_unity_orders(const QPoly& f);

/// Multiplicity of Phi_k in f for every cyclotomic divisor, ascending in k.
struct CyclotomicPart {
  int order;
  int multiplicity;
};
std::vector<CyclotomicPart> cyclotomic_part(const ZPoly& f);

enum class Decision { Yes, No, Undetermined };
std::string to_string(Decision d);

/// Search for a monic integer divisor g of f with g(0) = +-1 (a "unimodular"
/// factor). Such a factor exists exactly when the multiplication-by-z action
/// on Z[z]/(f) fixes a nonzero subgroup of every image z^k Z[z]/(f).
///
/// Decided in order: |f(0)| = 1; a cyclotomic divisor; a p-adic slope bound
/// (for p | f(0) only n - v_p roots are p-adic units, v_p being the index of
/// the first coefficient not divisible by p); and finally an exhaustive,
/// root-bounded search over candidate factors of the remaining degrees. The
/// search is capped; hitting the cap yields Undetermined.
struct UnitFactorSearch {
  Decision found = Decision::Undetermined;
  std::optional<ZPoly> witness;
  int max_degree = 0;  // upper bound on the degree of any unimodular factor
  std::string method;
};
UnitFactorSearch find_unit_factor(const ZPoly& f, std::uint64_t candidate_cap = 2'000'000);

}  // namespace algact

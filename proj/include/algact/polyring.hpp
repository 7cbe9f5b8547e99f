#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algact/matrix.hpp"
#include "algact/poly.hpp"
#include "algact/unit_factor.hpp"

namespace algact {

using Exponent = std::vector<int>;

enum class MonomialOrder { DegRevLex, Lex };
std::string to_string(MonomialOrder o);
/// "degrevlex" or "lex"; DomainError otherwise.
MonomialOrder parse_order(const std::string& name);

/// Strict "a < b" in the given order, with u_1 > u_2 > ... > u_d.
bool monomial_less(const Exponent& a, const Exponent& b, MonomialOrder order);
bool divides(const Exponent& a, const Exponent& b);

/// Polynomial in d variables over Q. No zero coefficients are stored.
class MPoly {
 public:
  using Terms = std::map<Exponent, BigRat>;

  explicit MPoly(std::size_t nvars = 0) : n_(nvars) {}
  static MPoly constant(std::size_t nvars, const BigRat& c);
  static MPoly variable(std::size_t nvars, std::size_t i);
  static MPoly monomial(const Exponent& e, const BigRat& c = 1);

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  BigRat coeff(const Exponent& e) const;
  int total_degree() const;

  /// Leading exponent and coefficient; DomainError for the zero polynomial.
  std::pair<Exponent, BigRat> lead(MonomialOrder order) const;
  MPoly monic(MonomialOrder order) const;

  void add_term(const Exponent& e, const BigRat& c);

  friend bool operator==(const MPoly&, const MPoly&) = default;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const BigRat& s, const MPoly& a);
  MPoly pow(unsigned k) const;
  /// Multiply by the monomial c * x^e.
  MPoly shifted(const Exponent& e, const BigRat& c) const;

  std::string to_string(const std::vector<std::string>& vars) const;

 private:
  std::size_t n_;
  Terms t_;
};

/// Integer or rational literals, variables, + - * ^, parentheses, and division
/// by a nonzero constant. ParseError carries the offset of the offending
/// character; unknown variables are errors too.
MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

/// Full reduction of f by g (every term, not only the leading one).
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& g, MonomialOrder order);

/// Reduced Groebner basis, monic and sorted by decreasing leading monomial.
/// Normal pair selection with the coprime and chain criteria.
std::vector<MPoly> buchberger(const std::vector<MPoly>& gens, MonomialOrder order = MonomialOrder::DegRevLex);

/// Every variable has a pure power among the leading monomials.
bool is_zero_dimensional(const std::vector<MPoly>& gb, MonomialOrder order);

/// Q[u]/I for a zero-dimensional I with its staircase basis.
class QuotientAlgebra {
 public:
  QuotientAlgebra(std::vector<MPoly> gb, MonomialOrder order);

  std::size_t nvars() const { return n_; }
  std::size_t dim() const { return staircase_.size(); }
  MonomialOrder order() const { return order_; }
  const std::vector<MPoly>& groebner_basis() const { return gb_; }
  /// Standard monomials by increasing degree; within a degree u_1 first.
  const std::vector<Exponent>& staircase() const { return staircase_; }
  /// Multiplication by u_i; column j holds the coordinates of u_i b_j.
  const QMat& T(std::size_t i) const { return t_.at(i); }

  MPoly reduce(const MPoly& f) const { return normal_form(f, gb_, order_); }
  QVec coords(const MPoly& f) const;
  /// Multiplication by f, by substituting the T_i into f.
  QMat mult_matrix(const MPoly& f) const;

 private:
  std::size_t n_;
  MonomialOrder order_;
  std::vector<MPoly> gb_;
  std::vector<Exponent> staircase_;
  std::map<Exponent, std::size_t> position_;
  std::vector<QMat> t_;
};

/// DomainError when the ideal is not zero-dimensional.
QuotientAlgebra quotient_algebra(const std::vector<MPoly>& gens, MonomialOrder order = MonomialOrder::DegRevLex);

struct CharNorm {
  QPoly chi;
  BigRat norm;
};
CharNorm char_poly_and_norm(const QuotientAlgebra& qa, const MPoly& f);

struct CommAlgReport {
  std::vector<std::string> vars;
  std::size_t dim = 0;  // 0 when not zero-dimensional
  std::vector<Exponent> staircase;

  Decision a = Decision::Undetermined;
  bool zero_dimensional = false;
  std::vector<std::size_t> vars_in_ideal;

  Decision b = Decision::Undetermined;
  std::vector<BigRat> det_T;

  Decision c = Decision::Undetermined;
  int c_bound = 0;
  std::optional<Exponent> c_witness;
  std::optional<BigRat> c_det;  // det(I - T_witness)

  Decision d = Decision::Undetermined;
  std::vector<BigRat> norms;
  std::vector<std::optional<BigInt>> d_primes;  // exclusive prime per variable
  std::string d_note;

  std::vector<QPoly> chi;  // chi_{u_k}
  std::string gap_note;
};
/// Conditions (a)-(d) for N^d acting on Z[u]/I by the variables. (c) searches
/// monomials of total degree <= 2 dim; (d) uses trial division and is
/// Undetermined on an unfactored or non-integral norm.
CommAlgReport commalg_conditions(const std::vector<MPoly>& gens, const std::vector<std::string>& vars,
                                 MonomialOrder order = MonomialOrder::DegRevLex);

struct PrincipalReport {
  Decision exact = Decision::Undetermined;
  std::optional<ZPoly> unimodular_factor;
  std::string method;
  std::vector<CyclotomicPart> cyclotomic_factors;
  bool non_automorphic = false;  // |f(0)| > 1
  bool mixing = false;           // f(1) != 0
  bool standing = false;         // monic, non-constant, both of the above
  std::string gap_note;
};
/// Multiplication by u on Z[u]/(f). DomainError when f is not monic,
/// constant, or f(0) = 0.
PrincipalReport principal_exactness(const ZPoly& f);

}  // namespace algact

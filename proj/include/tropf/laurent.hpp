#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "tropf/matrix.hpp"

namespace tropf {

/// Exponent vector of a Laurent monomial x_1^{e_1} ... x_m^{e_m}.
using ExpVec = IntVec;

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Terms live in an ordered map keyed by exponent vector (lexicographic), so
/// iteration order and equality are canonical. Zero coefficients are never
/// stored.
class LaurentPoly {
 public:
  using TermMap = std::map<ExpVec, mpz_class>;

  explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const mpz_class& c);
  static LaurentPoly monomial(const ExpVec& exponents, const mpz_class& c = 1);
  /// The variable x_{index+1}; `index` is 0-based.
  static LaurentPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  mpz_class coefficient(const ExpVec& e) const;
  void add_term(const ExpVec& e, const mpz_class& c);

  bool all_coefficients_positive() const;

  /// Componentwise minimum / maximum exponents over the support (zero poly: empty).
  ExpVec min_exponents() const;
  ExpVec max_exponents() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  /// Multiplies every exponent vector by the monomial x^shift.
  LaurentPoly shifted(const ExpVec& shift) const;
  LaurentPoly scaled(const mpz_class& c) const;
  LaurentPoly pow(unsigned exponent) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b);

/// Returns q with q * den == num, or throws NonExactDivision.
///
/// Leading-term elimination under lex order. Any quotient term has to lie in
/// the box [min(num) - min(den), max(num) - max(den)], which bounds the loop.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

/// F(images[0], ..., images[n-1]) where every image is a single-term Laurent
/// polynomial. F may carry negative exponents.
LaurentPoly substitute_monomials(const LaurentPoly& f, std::span<const LaurentPoly> images);

/// u(images) for arbitrary Laurent-polynomial images. Negative powers are
/// handled by clearing a monomial denominator and dividing exactly at the end,
/// so the result must itself be a Laurent polynomial.
LaurentPoly substitute(const LaurentPoly& u, std::span<const LaurentPoly> images);

}  // namespace tropf

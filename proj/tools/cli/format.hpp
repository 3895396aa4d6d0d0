#pragma once

#include <string>
#include <vector>

#include "tropf/laurent.hpp"
#include "tropf/matrix.hpp"
#include "tropf/seeds.hpp"

namespace tropf::cli {

/// Variable names for printing; falls back to x1..xm.
class Names {
 public:
  Names(std::size_t m, std::vector<std::string> names = {});

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  /// Index of a variable token (custom name or xN); -1 if unknown.
  long lookup(const std::string& token) const;

 private:
  std::vector<std::string> names_;
};

/// Sum of monomials, leading (lex-largest) exponent first, e.g.
/// "x1^-1 * x2 + x1^-1 * x3" or "2 - 3 * x1 * x2^2". The zero polynomial is "0".
std::string format_poly(const LaurentPoly& p, const Names& names);

/// F-polynomials in formal variables y1..yn, constant term first.
std::string format_fpoly(const LaurentPoly& f);

/// One row per line, entries right-aligned.
std::string format_matrix(const IntMatrix& a, const std::string& indent = "  ");

/// Parses sums/differences/products/quotients/integer powers of variables and
/// integers. Division must be exact. Throws ParseError.
LaurentPoly parse_poly(const std::string& text, const Names& names);

/// "(1,0,-2)" or "1 0 -2".
IntVec parse_vector(const std::string& text);

/// Either "word:(v1,...,vm)" for the cluster monomial x_w^v or a raw
/// Laurent polynomial in the root variables.
LaurentPoly parse_expression(const std::string& text, const ClusterPattern& pattern, const Names& names);

}  // namespace tropf::cli

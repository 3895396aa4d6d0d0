#include "tropf/laurent.hpp"

#include <algorithm>
#include <string>

#include "tropf/errors.hpp"

namespace tropf {

namespace {

void require_same_nvars(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars())
    throw DimensionError("Laurent polynomials in " + std::to_string(a.nvars()) + " and " +
                         std::to_string(b.nvars()) + " variables");
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t nvars, const mpz_class& c) {
  LaurentPoly p(nvars);
  p.add_term(ExpVec(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const ExpVec& exponents, const mpz_class& c) {
  LaurentPoly p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DimensionError("variable index out of range");
  ExpVec e(nvars, 0);
  e[index] = 1;
  return monomial(e);
}

mpz_class LaurentPoly::coefficient(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(const ExpVec& e, const mpz_class& c) {
  if (e.size() != nvars_) throw DimensionError("exponent vector length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentPoly::all_coefficients_positive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

ExpVec LaurentPoly::min_exponents() const {
  if (terms_.empty()) return {};
  ExpVec lo = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) lo[i] = std::min(lo[i], e[i]);
  return lo;
}

ExpVec LaurentPoly::max_exponents() const {
  if (terms_.empty()) return {};
  ExpVec hi = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) hi[i] = std::max(hi[i], e[i]);
  return hi;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_nvars(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_nvars(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = multiply(*this, other);
  return *this;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& shift) const {
  if (shift.size() != nvars_) throw DimensionError("shift length mismatch");
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), add(e, shift), c);
  return r;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const {
  if (c == 0) return LaurentPoly(nvars_);
  LaurentPoly r = *this;
  for (auto& [e, coeff] : r.terms_) coeff *= c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result = constant(nvars_, 1);
  LaurentPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = multiply(result, base);
    exponent >>= 1u;
    if (exponent > 0) base = multiply(base, base);
  }
  return result;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return multiply(a, b); }

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_nvars(a, b);
  LaurentPoly r(a.nvars());
  if (a.is_zero() || b.is_zero()) return r;
  ExpVec e(a.nvars());
  mpz_class prod;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked::add(ea[i], eb[i]);
      prod = ca * cb;
      r.add_term(e, prod);
    }
  return r;
}

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
  require_same_nvars(num, den);
  if (den.is_zero()) throw NonExactDivision("division by the zero polynomial");
  const std::size_t m = num.nvars();
  LaurentPoly q(m);
  if (num.is_zero()) return q;

  const ExpVec lo = sub(num.min_exponents(), den.min_exponents());
  const ExpVec hi = sub(num.max_exponents(), den.max_exponents());
  for (std::size_t i = 0; i < m; ++i)
    if (lo[i] > hi[i]) throw NonExactDivision("support of divisor does not fit the dividend");

  const auto& [den_lead, den_coeff] = *den.terms().rbegin();
  LaurentPoly rem = num;
  mpz_class qc;
  while (!rem.is_zero()) {
    const auto& [rem_lead, rem_coeff] = *rem.terms().rbegin();
    ExpVec qe = sub(rem_lead, den_lead);
    for (std::size_t i = 0; i < m; ++i)
      if (qe[i] < lo[i] || qe[i] > hi[i])
        throw NonExactDivision("quotient term leaves the Newton box; no Laurent quotient exists");
    if (!mpz_divisible_p(rem_coeff.get_mpz_t(), den_coeff.get_mpz_t()))
      throw NonExactDivision("leading coefficient is not divisible");
    mpz_divexact(qc.get_mpz_t(), rem_coeff.get_mpz_t(), den_coeff.get_mpz_t());
    for (const auto& [de, dc] : den.terms()) rem.add_term(add(qe, de), -qc * dc);
    q.add_term(qe, qc);
  }
  return q;
}

LaurentPoly substitute_monomials(const LaurentPoly& f, std::span<const LaurentPoly> images) {
  if (images.size() != f.nvars())
    throw DimensionError("need one image per formal variable");
  if (images.empty()) throw DimensionError("cannot infer target ring from zero images");
  const std::size_t m = images.front().nvars();
  std::vector<ExpVec> exps;
  std::vector<mpz_class> coeffs;
  for (const auto& img : images) {
    if (img.nvars() != m) throw DimensionError("images live in different rings");
    if (!img.is_monomial()) throw NotAMonomial("substitution image has " + std::to_string(img.size()) + " terms");
    exps.push_back(img.terms().begin()->first);
    coeffs.push_back(img.terms().begin()->second);
  }
  LaurentPoly r(m);
  for (const auto& [v, c] : f.terms()) {
    ExpVec e(m, 0);
    mpz_class coeff = c;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] == 0) continue;
      for (std::size_t i = 0; i < m; ++i) e[i] = checked::add(e[i], checked::mul(v[k], exps[k][i]));
      if (coeffs[k] != 1) {
        if (v[k] < 0) {
          if (abs(coeffs[k]) != 1) throw NotAMonomial("negative power of a non-unit monomial");
          if (v[k] % 2 != 0) coeff *= coeffs[k];
        } else {
          mpz_class p;
          mpz_pow_ui(p.get_mpz_t(), coeffs[k].get_mpz_t(), static_cast<unsigned long>(v[k]));
          coeff *= p;
        }
      }
    }
    r.add_term(e, coeff);
  }
  return r;
}

LaurentPoly substitute(const LaurentPoly& u, std::span<const LaurentPoly> images) {
  if (images.size() != u.nvars()) throw DimensionError("need one image per variable");
  if (images.empty()) throw DimensionError("cannot infer target ring from zero images");
  const std::size_t target = images.front().nvars();
  for (const auto& img : images)
    if (img.nvars() != target) throw DimensionError("images live in different rings");
  if (u.is_zero()) return LaurentPoly(target);

  // u = x^{-d} N with N a polynomial.
  ExpVec d(u.nvars(), 0);
  const ExpVec lo = u.min_exponents();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = lo[i] < 0 ? -lo[i] : 0;

  // powers[i][p] = images[i]^p, grown on demand.
  std::vector<std::vector<LaurentPoly>> powers(images.size());
  auto power = [&](std::size_t i, std::int64_t p) -> const LaurentPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(LaurentPoly::constant(target, 1));
    while (static_cast<std::int64_t>(cache.size()) <= p) cache.push_back(multiply(cache.back(), images[i]));
    return cache[static_cast<std::size_t>(p)];
  };

  LaurentPoly numerator(target);
  for (const auto& [e, c] : u.terms()) {
    LaurentPoly term = LaurentPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      const std::int64_t p = checked::add(e[i], d[i]);
      if (p > 0) term = multiply(term, power(i, p));
    }
    numerator += term;
  }

  LaurentPoly denominator = LaurentPoly::constant(target, 1);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > 0) denominator = multiply(denominator, power(i, d[i]));
  if (denominator.is_monomial() && denominator.terms().begin()->second == 1)
    return numerator.shifted(sub(ExpVec(target, 0), denominator.terms().begin()->first));
  return exact_divide(numerator, denominator);
}

}  // namespace tropf

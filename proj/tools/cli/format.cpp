#include "cli/format.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tropf/errors.hpp"

namespace tropf::cli {

Names::Names(std::size_t m, std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty())
    for (std::size_t i = 0; i < m; ++i) names_.push_back("x" + std::to_string(i + 1));
}

long Names::lookup(const std::string& token) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == token) return static_cast<long>(i);
  if (token.size() > 1 && token[0] == 'x' &&
      token.find_first_not_of("0123456789", 1) == std::string::npos && token[1] != '0') {
    const auto idx = std::stoul(token.substr(1));
    if (idx >= 1 && idx <= names_.size()) return static_cast<long>(idx - 1);
  }
  return -1;
}

namespace {

std::string format_terms(const LaurentPoly& p, const std::vector<std::string>& names, bool leading_first) {
  if (p.is_zero()) return "0";
  std::vector<const LaurentPoly::TermMap::value_type*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  if (leading_first) std::reverse(order.begin(), order.end());
  std::string out;
  bool first = true;
  for (const auto* term : order) {
    const auto& [e, c] = *term;
    const bool negative = c < 0;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += " * ";
      factors += names[i];
      if (e[i] != 1) factors += "^" + std::to_string(e[i]);
    }
    const mpz_class mag = abs(c);
    if (factors.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += factors;
    else
      out += mag.get_str() + " * " + factors;
  }
  return out;
}

struct Parser {
  const std::string& text;
  const Names& names;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos + 1) + " in '" + text + "'");
  }

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool accept(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected an integer");
    const mpz_class v(text.substr(start, pos - start));
    if (!v.fits_slong_p()) fail("integer too large");
    return v.get_si();
  }

  LaurentPoly expr() {
    LaurentPoly acc(names.size());
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    LaurentPoly t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = power();
    for (;;) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        const LaurentPoly d = power();
        if (d.is_zero()) fail("division by zero");
        try {
          acc = exact_divide(acc, d);
        } catch (const NonExactDivision&) {
          fail("quotient is not a Laurent polynomial");
        }
      } else {
        return acc;
      }
    }
  }

  LaurentPoly power() {
    LaurentPoly base = primary();
    if (!accept('^')) return base;
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    const std::int64_t e = integer();
    if (!negative) return base.pow(static_cast<unsigned>(e));
    if (!base.is_monomial() || abs(base.terms().begin()->second) != 1)
      fail("negative power of something other than a unit monomial");
    const auto& [exp, c] = *base.terms().begin();
    LaurentPoly inv = LaurentPoly::monomial(sub(IntVec(exp.size(), 0), exp), c);
    return inv.pow(static_cast<unsigned>(e));
  }

  LaurentPoly primary() {
    skip();
    if (pos >= text.size()) fail("unexpected end of expression");
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      LaurentPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      return LaurentPoly::constant(names.size(), mpz_class(text.substr(start, pos - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' || text[pos] == '\''))
        ++pos;
      const std::string tok = text.substr(start, pos - start);
      const long idx = names.lookup(tok);
      if (idx < 0) {
        pos = start;
        fail("unknown variable '" + tok + "'");
      }
      return LaurentPoly::variable(names.size(), static_cast<std::size_t>(idx));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

std::string format_poly(const LaurentPoly& p, const Names& names) {
  std::vector<std::string> n;
  for (std::size_t i = 0; i < names.size(); ++i) n.push_back(names[i]);
  return format_terms(p, n, true);
}

std::string format_fpoly(const LaurentPoly& f) {
  std::vector<std::string> n;
  for (std::size_t i = 0; i < f.nvars(); ++i) n.push_back("y" + std::to_string(i + 1));
  return format_terms(f, n, false);
}

std::string format_matrix(const IntMatrix& a, const std::string& indent) {
  std::size_t width = 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) width = std::max(width, std::to_string(a(i, j)).size());
  std::ostringstream os;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << indent << '[';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::string cell = std::to_string(a(i, j));
      os << (j ? " " : "") << std::string(width - cell.size(), ' ') << cell;
    }
    os << "]\n";
  }
  return os.str();
}

LaurentPoly parse_poly(const std::string& text, const Names& names) {
  Parser p{text, names};
  LaurentPoly out = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

IntVec parse_vector(const std::string& text) {
  std::string cleaned;
  bool pending_comma = false;
  for (char c : text) {
    if (c == ',') {
      if (pending_comma || cleaned.find_first_not_of(" \t([") == std::string::npos)
        throw ParseError("empty entry in vector '" + text + "'");
      pending_comma = true;
      cleaned += ' ';
    } else {
      if (!std::isspace(static_cast<unsigned char>(c)) && c != ')' && c != ']') pending_comma = false;
      cleaned += (c == '(' || c == ')' || c == '[' || c == ']') ? ' ' : c;
    }
  }
  if (pending_comma) throw ParseError("trailing comma in vector '" + text + "'");
  std::istringstream is(cleaned);
  IntVec out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + tok + "' in vector '" + text + "'");
    }
    if (used != tok.size()) throw ParseError("bad integer '" + tok + "' in vector '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty vector '" + text + "'");
  return out;
}

LaurentPoly parse_expression(const std::string& text, const ClusterPattern& pattern, const Names& names) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return parse_poly(text, names);

  const MutationWord w = MutationWord::parse(text.substr(0, colon));
  w.validate(pattern.n());
  const IntVec v = parse_vector(text.substr(colon + 1));
  if (v.size() != pattern.m())
    throw ParseError("cluster monomial needs " + std::to_string(pattern.m()) + " exponents, got " +
                     std::to_string(v.size()));
  for (std::size_t i = 0; i < pattern.n(); ++i)
    if (v[i] < 0)
      throw NotAClusterMonomial("unfrozen exponent " + std::to_string(i + 1) + " is negative in '" + text + "'");
  const auto& cluster = pattern.seed_at(w).cluster;
  LaurentPoly out = LaurentPoly::constant(pattern.m(), 1);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    if (v[j] > 0) {
      out = out * cluster[j].pow(static_cast<unsigned>(v[j]));
    } else {
      // frozen variables are monomials in every chart
      const auto& [e, c] = *cluster[j].terms().begin();
      out = out * LaurentPoly::monomial(sub(IntVec(e.size(), 0), e), c).pow(static_cast<unsigned>(-v[j]));
    }
  }
  return out;
}

}  // namespace tropf::cli

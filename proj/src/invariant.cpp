#include "tropf/invariant.hpp"

#include "tropf/errors.hpp"

namespace tropf {

std::int64_t trop_eval(const LaurentPoly& f, const IntVec& h) {
  if (h.size() != f.nvars())
    throw DimensionError("tropical argument has length " + std::to_string(h.size()) + ", expected " +
                         std::to_string(f.nvars()));
  if (f.coefficient(IntVec(f.nvars(), 0)) != 1) throw MissingConstantTerm("F-polynomial lacks constant term 1");
  std::int64_t best = 0;
  for (const auto& [v, c] : f.terms()) best = std::max(best, dot(v, h));
  return best;
}

std::int64_t PairingParts::total() const { return checked::add(first, second); }

namespace {

// (S | 0) g: the unfrozen part of g scaled by the symmetrizer.
IntVec scaled_principal(const IntVec& s, const IntVec& g) {
  IntVec out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = checked::mul(s[i], g[i]);
  return out;
}

}  // namespace

PairingParts pairing_parts(const LaurentPoly& u, const LaurentPoly& v, const MutationWord& at,
                           const ClusterPattern& pattern) {
  const IntMatrix& lambda = pattern.lambda_at(at);
  const auto cu = certify_at(u, at, pattern);
  const auto cv = certify_at(v, at, pattern);
  return PairingParts{dot(cu.g, lambda * cv.g), trop_eval(cu.fpoly, scaled_principal(pattern.s(), cv.g))};
}

std::int64_t pairing(const LaurentPoly& u, const LaurentPoly& v, const MutationWord& at,
                     const ClusterPattern& pattern) {
  return pairing_parts(u, v, at, pattern).total();
}

PairingParts f_invariant_parts(const LaurentPoly& u, const LaurentPoly& v, const ClusterPattern& pattern,
                               const MutationWord& at) {
  const auto cu = certify_at(u, at, pattern);
  const auto cv = certify_at(v, at, pattern);
  const IntVec& s = pattern.s();
  PairingParts parts{trop_eval(cu.fpoly, scaled_principal(s, cv.g)), trop_eval(cv.fpoly, scaled_principal(s, cu.g))};
  if (pattern.has_lambda()) {
    const auto sum = checked::add(pairing(u, v, at, pattern), pairing(v, u, at, pattern));
    if (sum != parts.total())
      throw InvariantBreach("symmetrized pairing " + std::to_string(sum) + " differs from F-invariant " +
                            std::to_string(parts.total()) + " at " + at.to_string());
  }
  return parts;
}

std::int64_t f_invariant(const LaurentPoly& u, const LaurentPoly& v, const ClusterPattern& pattern,
                         const MutationWord& at) {
  return f_invariant_parts(u, v, pattern, at).total();
}

PairingReport check_seed_independence(const LaurentPoly& u, const LaurentPoly& v, const ClusterPattern& pattern,
                                      std::size_t depth, AuditQuantity quantity) {
  PairingReport report;
  report.quantity = quantity;
  report.depth = depth;
  for (const auto& w : words_within(pattern.n(), depth)) {
    const PairingParts parts = quantity == AuditQuantity::Pairing ? pairing_parts(u, v, w, pattern)
                                                                  : f_invariant_parts(u, v, pattern, w);
    const auto value = parts.total();
    if (w.empty()) report.value = value;
    report.per_vertex.emplace(w, value);
    report.components.emplace(w, parts);
    if (value != report.value && report.constant) {
      report.constant = false;
      report.witness = w;
    }
  }
  return report;
}

std::int64_t f_compatibility_degree(const MutationWord& word, std::size_t index, const LaurentPoly& u,
                                    const ClusterPattern& pattern) {
  if (index < 1 || index > pattern.m())
    throw DimensionError("cluster index " + std::to_string(index) + " out of range [1," + std::to_string(pattern.m()) +
                         "]");
  word.validate(pattern.n());
  if (index > pattern.n()) return 0;
  const auto& x = pattern.seed_at(word).cluster[index - 1];
  const auto value = f_invariant(x, u, pattern, word);
  const auto cert = certify_at(u, word, pattern);
  const auto expected = checked::mul(pattern.s()[index - 1], cert.fvec[index - 1]);
  if (value != expected)
    throw InvariantBreach("F-invariant " + std::to_string(value) + " differs from s_i f_i = " +
                          std::to_string(expected) + " at " + word.to_string());
  return value;
}

ProductVerdict is_product_cluster_monomial(const LaurentPoly& u, const LaurentPoly& v, const ClusterPattern& pattern,
                                           std::size_t search_depth) {
  for (const auto* x : {&u, &v}) {
    const auto found = detect_cluster_monomial(*x, pattern, search_depth);
    if (!found.found)
      throw NotAClusterMonomial("factor is not a cluster monomial within depth " + std::to_string(search_depth));
  }
  ProductVerdict verdict;
  verdict.invariant = f_invariant(u, v, pattern);
  verdict.is_cluster_monomial = verdict.invariant == 0;
  if (!verdict.is_cluster_monomial) {
    verdict.explanation = "F-invariant is " + std::to_string(verdict.invariant) + ", so the product is not a cluster monomial";
    return verdict;
  }
  const auto product = detect_cluster_monomial(u * v, pattern, search_depth);
  if (product.found) {
    verdict.witness = product.word;
    verdict.explanation = "F-invariant is 0; product is the cluster monomial " + to_string(product.exponents) +
                          " at " + product.word.to_string();
  } else {
    verdict.explanation = "F-invariant is 0; no common cluster found within depth " + std::to_string(search_depth);
  }
  return verdict;
}

LaurentPoly poisson_bracket(const LaurentPoly& f, const LaurentPoly& g, const ClusterPattern& pattern) {
  const IntMatrix& lambda = pattern.lambda_at(MutationWord{});
  if (f.nvars() != pattern.m() || g.nvars() != pattern.m()) throw DimensionError("expression is not in the root ring");
  LaurentPoly out(pattern.m());
  for (const auto& [b, cb] : g.terms()) {
    const IntVec lb = lambda * b;
    for (const auto& [a, ca] : f.terms()) {
      const auto c = dot(a, lb);
      if (c != 0) out.add_term(add(a, b), ca * cb * mpz_class(static_cast<long>(c)));
    }
  }
  return out;
}

LogCanonicalVerdict is_log_canonical(const LaurentPoly& f, const LaurentPoly& g, const ClusterPattern& pattern) {
  if (f.is_zero() || g.is_zero()) throw DimensionError("log-canonicity needs nonzero arguments");
  const LaurentPoly bracket = poisson_bracket(f, g, pattern);
  if (bracket.is_zero()) return LogCanonicalVerdict{true, 0};
  const LaurentPoly product = f * g;
  const auto& [pe, pc] = *bracket.terms().rbegin();
  const auto& [qe, qc] = *product.terms().rbegin();
  if (pe != qe) return LogCanonicalVerdict{};
  mpq_class c(pc, qc);
  c.canonicalize();
  if (bracket.scaled(c.get_den()) != product.scaled(c.get_num())) return LogCanonicalVerdict{};
  return LogCanonicalVerdict{true, c};
}

}  // namespace tropf

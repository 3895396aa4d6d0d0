#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "tropf/laurent.hpp"
#include "tropf/pointed.hpp"
#include "tropf/seeds.hpp"

namespace tropf {

/// F[h] = max of vᵀh over the support of F. Throws MissingConstantTerm unless F(0) = 1.
std::int64_t trop_eval(const LaurentPoly& f, const IntVec& h);

/// The two summands of a pairing-type value at one chart.
struct PairingParts {
  std::int64_t first = 0;
  std::int64_t second = 0;
  std::int64_t total() const;
};

/// ⟨u, v⟩_t = g_tᵀ Λ_t g'_t + F_t[(S|0) g'_t]; parts are (bilinear, tropical).
PairingParts pairing_parts(const LaurentPoly& u, const LaurentPoly& v, const MutationWord& at,
                           const ClusterPattern& pattern);
std::int64_t pairing(const LaurentPoly& u, const LaurentPoly& v, const MutationWord& at,
                     const ClusterPattern& pattern);

/// (u ‖ v)_F = F_u[S g_v°] + F_v[S g_u°]; parts are those two terms.
///
/// Only S is needed. When the pattern carries Λ the value is cross-checked
/// against ⟨u,v⟩ + ⟨v,u⟩ and a disagreement throws InvariantBreach.
PairingParts f_invariant_parts(const LaurentPoly& u, const LaurentPoly& v, const ClusterPattern& pattern,
                               const MutationWord& at = {});
std::int64_t f_invariant(const LaurentPoly& u, const LaurentPoly& v, const ClusterPattern& pattern,
                         const MutationWord& at = {});

enum class AuditQuantity { Pairing, FInvariant };

struct PairingReport {
  AuditQuantity quantity = AuditQuantity::Pairing;
  std::size_t depth = 0;
  /// Value at the root chart.
  std::int64_t value = 0;
  std::map<MutationWord, std::int64_t> per_vertex;
  std::map<MutationWord, PairingParts> components;
  bool constant = true;
  /// First vertex whose value differs from the root value.
  std::optional<MutationWord> witness;
};

PairingReport check_seed_independence(const LaurentPoly& u, const LaurentPoly& v, const ClusterPattern& pattern,
                                      std::size_t depth, AuditQuantity quantity = AuditQuantity::Pairing);

/// (x_{index;word} ‖ u)_F, cross-checked against s_i f_i of u at `word`.
/// `index` is 1-based; frozen indices give 0.
std::int64_t f_compatibility_degree(const MutationWord& word, std::size_t index, const LaurentPoly& u,
                                    const ClusterPattern& pattern);

struct ProductVerdict {
  bool is_cluster_monomial = false;
  std::int64_t invariant = 0;
  /// A chart where u·v is a cluster monomial, when the bounded search finds one.
  std::optional<MutationWord> witness;
  std::string explanation;
};

/// u·v is a cluster monomial iff (u ‖ v)_F = 0. Both inputs must be detected as
/// cluster monomials within `search_depth`; otherwise NotAClusterMonomial.
ProductVerdict is_product_cluster_monomial(const LaurentPoly& u, const LaurentPoly& v, const ClusterPattern& pattern,
                                           std::size_t search_depth);

/// {x^a, x^b} = (aᵀ Λ b) x^{a+b}, extended bilinearly. Uses Λ at the root.
LaurentPoly poisson_bracket(const LaurentPoly& f, const LaurentPoly& g, const ClusterPattern& pattern);

struct LogCanonicalVerdict {
  bool log_canonical = false;
  mpq_class c = 0;
};

LogCanonicalVerdict is_log_canonical(const LaurentPoly& f, const LaurentPoly& g, const ClusterPattern& pattern);

}  // namespace tropf

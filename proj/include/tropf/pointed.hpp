#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "tropf/laurent.hpp"
#include "tropf/matrix.hpp"
#include "tropf/seeds.hpp"

namespace tropf {

/// Solver for B̃ v = d on a full-rank m x n matrix.
///
/// Picks n independent rows once and keeps the inverse of that block, so each
/// query is a matrix-vector product plus an integrality and consistency check.
class DominanceOrder {
 public:
  /// Throws NotFullRank.
  explicit DominanceOrder(const IntMatrix& bt);

  /// The unique rational solution when it is integral; nullopt otherwise.
  std::optional<IntVec> solve(const IntVec& d) const;

  /// g1 ⪯ g2, i.e. g1 = g2 + B̃ v with v ∈ ℕⁿ. Returns v when it holds.
  std::optional<IntVec> leq(const IntVec& g1, const IntVec& g2) const;

  const IntMatrix& matrix() const noexcept { return bt_; }

 private:
  IntMatrix bt_;
  std::vector<std::size_t> rows_;
  std::vector<std::vector<mpq_class>> inverse_;
};

struct DominanceVerdict {
  bool holds = false;
  IntVec v;
};

DominanceVerdict dominance_leq(const IntVec& g1, const IntVec& g2, const MutationMatrix& bt);

struct PointedCertificate {
  MutationWord chart;
  IntVec g;
  /// F in n formal variables y_1..y_n.
  LaurentPoly fpoly;
  IntVec fvec;
  bool pointed = false;
  bool bipointed = false;
  bool positive = false;
};

/// Certifies u (written in the chart's own cluster) as pointed. Throws NotPointed, NotFullRank.
PointedCertificate certify_pointed(const LaurentPoly& u, const DominanceOrder& order, const MutationWord& chart);
PointedCertificate certify_pointed(const LaurentPoly& u, const MutationMatrix& bt, const MutationWord& chart);
PointedCertificate certify_pointed(const LaurentPoly& u, const Seed& chart);

/// x^g F(ŷ) in the chart whose matrix is bt.
LaurentPoly reconstruct(const PointedCertificate& cert, const IntMatrix& bt);

/// u (root coordinates) re-expanded in chart w and certified there.
PointedCertificate certify_at(const LaurentPoly& u, const MutationWord& w, const ClusterPattern& pattern);

/// Extended G-matrix: column j is deg^w(x_{j;t}).
IntMatrix g_matrix(const ClusterPattern& pattern, const MutationWord& t, const MutationWord& w);

/// Bottom n x n block of [B_w; I_n] mutated along the path from w to t.
IntMatrix c_matrix(const ClusterPattern& pattern, const MutationWord& t, const MutationWord& w);

/// Verdict "good to depth D": every chart within the depth is pointed and
/// positive, and the degrees obey the Y-tropical rule along every edge.
struct GoodCertificate {
  std::size_t depth = 0;
  std::map<MutationWord, PointedCertificate> charts;
  bool tropical_consistent = false;
};

/// Throws NotPointedAt, NegativeCoefficientAt, TropicalMismatchAt.
GoodCertificate certify_good(const LaurentPoly& u, const ClusterPattern& pattern, std::size_t depth);

struct MonomialVerdict {
  bool found = false;
  std::size_t depth = 0;
  MutationWord word;
  IntVec exponents;
};

/// Searches charts in shortlex order for one where u = x_w^g with F = 1 and
/// nonnegative unfrozen exponents.
MonomialVerdict detect_cluster_monomial(const LaurentPoly& u, const ClusterPattern& pattern, std::size_t depth);

}  // namespace tropf

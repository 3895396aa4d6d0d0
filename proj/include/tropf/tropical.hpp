#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "tropf/matrix.hpp"
#include "tropf/seeds.hpp"

namespace tropf {

/// A tropical point of the Y-pattern, stored at one vertex and transported on demand.
struct TropicalPointY {
  MutationWord anchor;
  IntVec coord;
};

/// A tropical point of the cluster pattern (the X side).
struct TropicalPointX {
  MutationWord anchor;
  IntVec coord;
};

// Single edges. `bt` is B̃ at the source vertex and k is 1-based.
//
// The *_step versions use the E-matrix form with the sign picked by the
// current coordinates (minus on ties); the *_direct versions evaluate the
// piecewise-linear rules entry by entry. They must agree.
IntVec y_step(const IntMatrix& bt, const IntVec& g, int k);
IntVec y_step_direct(const IntMatrix& bt, const IntVec& g, int k);
IntVec x_step(const IntMatrix& bt, const IntVec& a, int k);
IntVec x_step_direct(const IntMatrix& bt, const IntVec& a, int k);

/// Coordinates of p at the vertex `target` (a word from the root).
IntVec transport_y(const TropicalPointY& p, const MutationWord& target, const ClusterPattern& pattern);
IntVec transport_x(const TropicalPointX& p, const MutationWord& target, const ClusterPattern& pattern);

/// Coordinates at every vertex within `depth` of the root.
std::map<MutationWord, IntVec> y_family(const TropicalPointY& p, std::size_t depth, const ClusterPattern& pattern);

/// a_t = Λ_t g_t at the anchor. Needs a compatible Λ.
TropicalPointX y_to_x(const TropicalPointY& p, const ClusterPattern& pattern);

/// An m x m skew-symmetrizable matrix whose first n columns are the root B̃,
/// with positive diagonal S̃ making S̃ (B̃^sq)ᵀ skew-symmetric.
struct SquareExtension {
  IntMatrix sq;
  IntVec stilde;

  /// Validates against the root matrix; throws InvalidExtension.
  SquareExtension(const MutationMatrix& root, IntMatrix sq, IntVec stilde);

  /// [[B, -I], [I, 0]] for a principal-coefficient root. S̃ = (L/s, L/s) with
  /// L = lcm(s), which is I when B is skew-symmetric.
  static SquareExtension principal_default(const MutationMatrix& root);
};

/// g_t = S̃ (B̃^sq_t)ᵀ a_t, where B̃^sq_t is the extension mutated to the anchor.
TropicalPointY x_to_y(const TropicalPointX& p, const SquareExtension& ext, const ClusterPattern& pattern);

struct CompatibilityVerdict {
  bool compatible = true;
  std::size_t depth = 0;
  /// First vertex in shortlex order where g_k g'_k < 0, and that 1-based k.
  std::optional<MutationWord> witness;
  int witness_index = 0;
};

CompatibilityVerdict are_compatible(const TropicalPointY& p, const TropicalPointY& q, std::size_t depth,
                                    const ClusterPattern& pattern);

/// Pointwise sum at p's anchor; throws NotCompatible unless compatible to `depth`.
TropicalPointY uplus(const TropicalPointY& p, const TropicalPointY& q, std::size_t depth,
                     const ClusterPattern& pattern);

}  // namespace tropf

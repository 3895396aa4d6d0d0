#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "tropf/laurent.hpp"
#include "tropf/matrix.hpp"

namespace tropf {

/// A path from the root of the n-regular tree, given by edge labels in [1, n].
///
/// Words are kept reduced: appending the last letter again cancels it, so a
/// word names a tree vertex. Ordering is shortlex (length first), which is the
/// breadth-first order used by every tree walk in the library.
class MutationWord {
 public:
  MutationWord() = default;
  /// Reduces the letters (adjacent equal letters cancel).
  explicit MutationWord(std::vector<int> letters);

  static MutationWord parse(const std::string& text);

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int back() const { return letters_.back(); }

  /// The neighbouring vertex across edge k.
  MutationWord then(int k) const;
  MutationWord parent() const;
  MutationWord reversed() const;
  /// Validates every letter against the rank n.
  void validate(std::size_t n) const;

  /// Letters of the tree path from `from` to `to`.
  static std::vector<int> path(const MutationWord& from, const MutationWord& to);

  /// Space-separated letters; the empty word prints as "ε".
  std::string to_string() const;

  friend bool operator==(const MutationWord&, const MutationWord&) = default;
  friend bool operator<(const MutationWord& a, const MutationWord& b) {
    if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
    return a.letters_ < b.letters_;
  }

 private:
  std::vector<int> letters_;
};

/// All vertices at distance <= depth from the root, in shortlex order.
std::vector<MutationWord> words_within(std::size_t n, std::size_t depth);

/// Minimal positive diagonal S with SB skew-symmetric; throws NotSkewSymmetrizable.
IntVec find_skew_symmetrizer(const IntMatrix& b);

/// m x n integer matrix whose top n x n block is skew-symmetrizable.
class MutationMatrix {
 public:
  explicit MutationMatrix(IntMatrix mat);

  const IntMatrix& matrix() const noexcept { return mat_; }
  std::size_t m() const noexcept { return mat_.rows(); }
  std::size_t n() const noexcept { return mat_.cols(); }
  IntMatrix principal() const { return mat_.block(0, 0, n(), n()); }
  const IntVec& skew_symmetrizer() const noexcept { return s_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

  friend bool operator==(const MutationMatrix& a, const MutationMatrix& b) { return a.mat_ == b.mat_; }

 private:
  IntMatrix mat_;
  IntVec s_;
};

enum class Sign { Plus, Minus };

/// Matrix mutation on any integer matrix with at least k rows and k columns.
IntMatrix mutate_entries(const IntMatrix& mat, int k);
MutationMatrix mutate_matrix(const MutationMatrix& bt, int k);

/// I_m with column k replaced by (e_i): e_k = -1, e_i = [-sign * b_ik]_+.
IntMatrix e_matrix(const IntMatrix& bt, int k, Sign sign);
/// I_n with row k replaced by (f_i): f_k = -1, f_i = [sign * b_ki]_+.
IntMatrix f_matrix(const IntMatrix& bt, int k, Sign sign);

struct CompatiblePair {
  MutationMatrix btilde;
  IntMatrix lambda;
  IntVec s;
};

/// Verifies that lambda is skew-symmetric and B̃ᵀΛ = (S | 0) with S > 0.
CompatiblePair check_compatible_pair(const MutationMatrix& bt, const IntMatrix& lambda);

/// Compatible Λ for the principal-coefficient matrix [B; I_n], built from a
/// skew-symmetric Λ0 and a skew-symmetrizer S of B.
CompatiblePair build_lambda(const IntMatrix& b, const IntMatrix& lambda0, const IntVec& s);

/// Λ' = EᵀΛE together with μ_k(B̃). The result does not depend on `sign`.
CompatiblePair mutate_pair(const CompatiblePair& pair, int k, Sign sign = Sign::Minus);

struct Seed {
  MutationMatrix btilde;
  /// x_{j;t} written as Laurent polynomials in the root cluster.
  std::vector<LaurentPoly> cluster;
  MutationWord word;
};

Seed initial_seed(const MutationMatrix& bt);
Seed mutate_seed(const Seed& seed, int k);

/// Subtraction-free rational function num / den.
struct SubtractionFree {
  LaurentPoly num;
  LaurentPoly den;

  bool equals(const SubtractionFree& other) const { return num * other.den == other.num * den; }
};

struct YHat {
  /// Exponent vector of ŷ_k in the seed's own chart (column k of B̃).
  std::vector<ExpVec> own_chart;
  /// The same monomials as rational functions of the root cluster; negative
  /// powers of non-monomial cluster variables go to the denominator.
  std::vector<SubtractionFree> initial;
};

YHat yhat_variables(const Seed& seed);

struct YSeed {
  IntMatrix bhat;
  std::vector<SubtractionFree> y;
};

YSeed initial_yseed(const IntMatrix& bhat);
YSeed mutate_yseed(const YSeed& yseed, int k);

struct RootConfig {
  MutationMatrix btilde;
  std::optional<CompatiblePair> pair;
  std::vector<std::string> names;

  explicit RootConfig(MutationMatrix bt, std::vector<std::string> names = {});
  explicit RootConfig(CompatiblePair pair, std::vector<std::string> names = {});

  std::size_t m() const noexcept { return btilde.m(); }
  std::size_t n() const noexcept { return btilde.n(); }
  const IntVec& s() const;
};

/// Data attached to one tree vertex.
struct Vertex {
  Seed seed;
  std::optional<IntMatrix> lambda;
};

/// A root configuration plus a memo of every vertex visited so far.
///
/// The memo is keyed by reduced word. Lookups take a shared lock and inserts
/// an exclusive one, so a pattern may be queried from several threads.
class ClusterPattern {
 public:
  explicit ClusterPattern(RootConfig root);

  const RootConfig& root() const noexcept { return root_; }
  std::size_t m() const noexcept { return root_.m(); }
  std::size_t n() const noexcept { return root_.n(); }
  bool has_lambda() const noexcept { return root_.pair.has_value(); }
  const IntVec& s() const { return root_.s(); }

  std::shared_ptr<const Vertex> vertex(const MutationWord& w) const;
  const Seed& seed_at(const MutationWord& w) const { return vertex(w)->seed; }
  const IntMatrix& matrix_at(const MutationWord& w) const { return vertex(w)->seed.btilde.matrix(); }
  CompatiblePair pair_at(const MutationWord& w) const;
  const IntMatrix& lambda_at(const MutationWord& w) const;

  /// The root cluster x_{j;t0} written in the cluster of w.
  const std::vector<LaurentPoly>& root_in_chart(const MutationWord& w) const;

  /// Re-expands a root-chart Laurent polynomial in the cluster of w.
  LaurentPoly express_in_chart(const LaurentPoly& u, const MutationWord& w) const;

 private:
  RootConfig root_;
  mutable std::shared_mutex mutex_;
  mutable std::map<MutationWord, std::shared_ptr<const Vertex>> vertices_;
  mutable std::map<MutationWord, std::shared_ptr<const std::vector<LaurentPoly>>> inverse_;
};

}  // namespace tropf

#include "tropf/tropical.hpp"

#include <numeric>

#include "tropf/errors.hpp"

namespace tropf {

namespace {

void check_step(const IntMatrix& bt, const IntVec& v, int k) {
  if (v.size() != bt.rows())
    throw DimensionError("tropical coordinate has length " + std::to_string(v.size()) + ", expected " +
                         std::to_string(bt.rows()));
  if (k < 1 || static_cast<std::size_t>(k) > bt.cols())
    throw DirectionError("direction " + std::to_string(k) + " out of range [1," + std::to_string(bt.cols()) + "]");
}

std::int64_t column_pairing(const IntMatrix& bt, const IntVec& a, std::size_t kk) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < bt.rows(); ++j) s = checked::add(s, checked::mul(bt(j, kk), a[j]));
  return s;
}

template <typename Step>
IntVec walk(IntVec coord, const MutationWord& from, const MutationWord& to, const ClusterPattern& pattern,
            Step step) {
  MutationWord here = from;
  for (int k : MutationWord::path(from, to)) {
    coord = step(pattern.matrix_at(here), coord, k);
    here = here.then(k);
  }
  return coord;
}

}  // namespace

IntVec y_step(const IntMatrix& bt, const IntVec& g, int k) {
  check_step(bt, g, k);
  const Sign eps = g[static_cast<std::size_t>(k - 1)] >= 0 ? Sign::Minus : Sign::Plus;
  return e_matrix(bt, k, eps) * g;
}

IntVec y_step_direct(const IntMatrix& bt, const IntVec& g, int k) {
  check_step(bt, g, k);
  const std::size_t kk = static_cast<std::size_t>(k - 1);
  const std::int64_t gk = g[kk];
  IntVec out = g;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i == kk) {
      out[i] = checked::neg(gk);
      continue;
    }
    const std::int64_t bhat = checked::neg(bt(i, kk));  // b̂_ki = -b_ik
    out[i] = checked::add(g[i], checked::add(checked::mul(positive_part(bhat), gk),
                                             checked::mul(checked::neg(bhat), positive_part(gk))));
  }
  return out;
}

IntVec x_step(const IntMatrix& bt, const IntVec& a, int k) {
  check_step(bt, a, k);
  const Sign eps = column_pairing(bt, a, static_cast<std::size_t>(k - 1)) >= 0 ? Sign::Minus : Sign::Plus;
  return e_matrix(bt, k, eps).transpose() * a;
}

IntVec x_step_direct(const IntMatrix& bt, const IntVec& a, int k) {
  check_step(bt, a, k);
  const std::size_t kk = static_cast<std::size_t>(k - 1);
  std::int64_t up = 0, down = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    up = checked::add(up, checked::mul(positive_part(bt(j, kk)), a[j]));
    down = checked::add(down, checked::mul(positive_part(checked::neg(bt(j, kk))), a[j]));
  }
  IntVec out = a;
  out[kk] = checked::add(checked::neg(a[kk]), std::max(up, down));
  return out;
}

IntVec transport_y(const TropicalPointY& p, const MutationWord& target, const ClusterPattern& pattern) {
  if (p.coord.size() != pattern.m()) throw DimensionError("tropical point has the wrong length");
  target.validate(pattern.n());
  return walk(p.coord, p.anchor, target, pattern, y_step);
}

IntVec transport_x(const TropicalPointX& p, const MutationWord& target, const ClusterPattern& pattern) {
  if (p.coord.size() != pattern.m()) throw DimensionError("tropical point has the wrong length");
  target.validate(pattern.n());
  return walk(p.coord, p.anchor, target, pattern, x_step);
}

std::map<MutationWord, IntVec> y_family(const TropicalPointY& p, std::size_t depth, const ClusterPattern& pattern) {
  std::map<MutationWord, IntVec> out;
  out.emplace(MutationWord{}, transport_y(p, MutationWord{}, pattern));
  for (const auto& w : words_within(pattern.n(), depth)) {
    if (w.empty()) continue;
    const auto parent = w.parent();
    out.emplace(w, y_step(pattern.matrix_at(parent), out.at(parent), w.back()));
  }
  return out;
}

TropicalPointX y_to_x(const TropicalPointY& p, const ClusterPattern& pattern) {
  if (p.coord.size() != pattern.m()) throw DimensionError("tropical point has the wrong length");
  return TropicalPointX{p.anchor, pattern.lambda_at(p.anchor) * p.coord};
}

SquareExtension::SquareExtension(const MutationMatrix& root, IntMatrix sq_, IntVec stilde_)
    : sq(std::move(sq_)), stilde(std::move(stilde_)) {
  const std::size_t m = root.m(), n = root.n();
  if (sq.rows() != m || sq.cols() != m)
    throw InvalidExtension("extension must be " + std::to_string(m) + " x " + std::to_string(m));
  if (sq.block(0, 0, m, n) != root.matrix()) throw InvalidExtension("extension does not extend B̃ in its first n columns");
  if (stilde.size() != m) throw InvalidExtension("S̃ must have length " + std::to_string(m));
  for (auto s : stilde)
    if (s <= 0) throw InvalidExtension("S̃ entries must be positive");
  if (!(IntMatrix::diagonal(stilde) * sq.transpose()).is_skew_symmetric())
    throw InvalidExtension("S̃ (B̃^sq)ᵀ is not skew-symmetric");
}

SquareExtension SquareExtension::principal_default(const MutationMatrix& root) {
  const std::size_t n = root.n();
  if (root.m() != 2 * n || root.matrix().block(n, 0, n, n) != IntMatrix::identity(n))
    throw InvalidExtension("default extension needs a principal-coefficient root; supply one explicitly");
  const IntMatrix b = root.principal();
  const IntMatrix id = IntMatrix::identity(n);
  const IntMatrix sq = vstack(hstack(b, -id), hstack(id, IntMatrix(n, n)));
  const IntVec& s = root.skew_symmetrizer();
  std::int64_t l = 1;
  for (auto si : s) l = std::lcm(l, si);
  IntVec st(2 * n);
  for (std::size_t i = 0; i < n; ++i) st[i] = st[n + i] = l / s[i];
  return SquareExtension(root, sq, st);
}

TropicalPointY x_to_y(const TropicalPointX& p, const SquareExtension& ext, const ClusterPattern& pattern) {
  if (p.coord.size() != pattern.m()) throw DimensionError("tropical point has the wrong length");
  if (ext.sq.block(0, 0, pattern.m(), pattern.n()) != pattern.root().btilde.matrix())
    throw InvalidExtension("extension does not extend this pattern's root matrix");
  p.anchor.validate(pattern.n());
  IntMatrix sq = ext.sq;
  for (int k : p.anchor.letters()) sq = mutate_entries(sq, k);
  if (sq.block(0, 0, pattern.m(), pattern.n()) != pattern.matrix_at(p.anchor))
    throw InvariantBreach("mutated extension disagrees with B̃ at " + p.anchor.to_string());
  return TropicalPointY{p.anchor, IntMatrix::diagonal(ext.stilde) * sq.transpose() * p.coord};
}

CompatibilityVerdict are_compatible(const TropicalPointY& p, const TropicalPointY& q, std::size_t depth,
                                    const ClusterPattern& pattern) {
  CompatibilityVerdict verdict;
  verdict.depth = depth;
  const auto fp = y_family(p, depth, pattern);
  const auto fq = y_family(q, depth, pattern);
  // Iterate in shortlex order so the witness is the shallowest one.
  for (const auto& [w, g] : fp) {
    const IntVec& h = fq.at(w);
    for (std::size_t k = 0; k < pattern.n(); ++k)
      if (checked::mul(g[k], h[k]) < 0) {
        verdict.compatible = false;
        verdict.witness = w;
        verdict.witness_index = static_cast<int>(k + 1);
        return verdict;
      }
  }
  return verdict;
}

TropicalPointY uplus(const TropicalPointY& p, const TropicalPointY& q, std::size_t depth,
                     const ClusterPattern& pattern) {
  const auto verdict = are_compatible(p, q, depth, pattern);
  if (!verdict.compatible)
    throw NotCompatible("points are not compatible: g_k g'_k < 0 at vertex " + verdict.witness->to_string() +
                        ", k = " + std::to_string(verdict.witness_index));
  TropicalPointY sum{p.anchor, add(p.coord, transport_y(q, p.anchor, pattern))};
  const auto fp = y_family(p, depth, pattern);
  const auto fq = y_family(q, depth, pattern);
  for (const auto& [w, g] : y_family(sum, depth, pattern))
    if (g != add(fp.at(w), fq.at(w)))
      throw InvariantBreach("sum of compatible points fails to transport at " + w.to_string());
  return sum;
}

}  // namespace tropf

#include "tropf/pointed.hpp"

#include <algorithm>

#include "tropf/errors.hpp"
#include "tropf/tropical.hpp"

namespace tropf {

// ---------------------------------------------------------------- dominance

DominanceOrder::DominanceOrder(const IntMatrix& bt) : bt_(bt) {
  const std::size_t n = bt.cols();
  std::vector<IntVec> picked;
  for (std::size_t i = 0; i < bt.rows() && picked.size() < n; ++i) {
    picked.push_back(bt.row(i));
    if (rank(IntMatrix::from_rows(picked)) == picked.size())
      rows_.push_back(i);
    else
      picked.pop_back();
  }
  if (rows_.size() != n)
    throw NotFullRank("B̃ has rank " + std::to_string(rows_.size()) + " < n = " + std::to_string(n));

  // Gauss-Jordan on [R | I].
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = bt(rows_[i], j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;  // R is invertible, so a pivot exists
    std::swap(a[p], a[c]);
    const mpq_class inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const mpq_class f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  inverse_.assign(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inverse_[i][j] = a[i][n + j];
}

std::optional<IntVec> DominanceOrder::solve(const IntVec& d) const {
  if (d.size() != bt_.rows()) throw DimensionError("dominance vector has the wrong length");
  const std::size_t n = bt_.cols();
  IntVec v(n);
  mpq_class acc;
  for (std::size_t i = 0; i < n; ++i) {
    acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += inverse_[i][j] * d[rows_[j]];
    if (acc.get_den() != 1) return std::nullopt;
    v[i] = checked::narrow(acc.get_num());
  }
  if (bt_ * v != d) return std::nullopt;
  return v;
}

std::optional<IntVec> DominanceOrder::leq(const IntVec& g1, const IntVec& g2) const {
  auto v = solve(sub(g1, g2));
  if (!v || std::any_of(v->begin(), v->end(), [](auto x) { return x < 0; })) return std::nullopt;
  return v;
}

DominanceVerdict dominance_leq(const IntVec& g1, const IntVec& g2, const MutationMatrix& bt) {
  auto v = DominanceOrder(bt.matrix()).leq(g1, g2);
  return v ? DominanceVerdict{true, *v} : DominanceVerdict{};
}

// ---------------------------------------------------------------- pointedness

namespace {

// Support elements not strictly dominated by another; only used to explain failures.
std::vector<ExpVec> maximal_elements(const LaurentPoly& u, const DominanceOrder& order) {
  std::vector<ExpVec> out;
  for (const auto& [h, c] : u.terms()) {
    bool dominated = false;
    for (const auto& [h2, c2] : u.terms())
      if (h2 != h && order.leq(h, h2)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(h);
  }
  return out;
}

}  // namespace

PointedCertificate certify_pointed(const LaurentPoly& u, const DominanceOrder& order, const MutationWord& chart) {
  const IntMatrix& bt = order.matrix();
  if (u.nvars() != bt.rows()) throw DimensionError("expression does not live in this chart");
  if (u.is_zero()) throw NotPointed("the zero polynomial is not pointed");

  // One pass keeps a candidate that nothing seen so far dominates; a second
  // pass checks that it dominates everything.
  const ExpVec* best = &u.terms().begin()->first;
  for (const auto& [h, c] : u.terms())
    if (order.leq(*best, h)) best = &h;

  PointedCertificate cert;
  cert.chart = chart;
  cert.g = *best;
  cert.fpoly = LaurentPoly(bt.cols());
  for (const auto& [h, c] : u.terms()) {
    auto v = order.leq(h, cert.g);
    if (!v) {
      std::string list;
      const auto maxima = maximal_elements(u, order);
      for (std::size_t i = 0; i < maxima.size() && i < 4; ++i) list += (i ? ", " : "") + to_string(maxima[i]);
      if (maxima.size() > 4) list += ", ...";
      throw NotPointed("no unique maximal exponent in chart " + chart.to_string() + "; maximal: " + list);
    }
    cert.fpoly.add_term(*v, c);
  }
  if (u.coefficient(cert.g) != 1)
    throw NotPointed("maximal exponent " + to_string(cert.g) + " has coefficient " + u.coefficient(cert.g).get_str() +
                     " in chart " + chart.to_string());

  cert.fvec = cert.fpoly.max_exponents();
  cert.pointed = true;
  cert.bipointed = cert.fpoly.coefficient(cert.fvec) == 1;
  cert.positive = u.all_coefficients_positive();
  return cert;
}

PointedCertificate certify_pointed(const LaurentPoly& u, const MutationMatrix& bt, const MutationWord& chart) {
  return certify_pointed(u, DominanceOrder(bt.matrix()), chart);
}

PointedCertificate certify_pointed(const LaurentPoly& u, const Seed& chart) {
  return certify_pointed(u, chart.btilde, chart.word);
}

LaurentPoly reconstruct(const PointedCertificate& cert, const IntMatrix& bt) {
  std::vector<LaurentPoly> yhat;
  for (std::size_t k = 0; k < bt.cols(); ++k) yhat.push_back(LaurentPoly::monomial(bt.col(k)));
  return substitute_monomials(cert.fpoly, yhat).shifted(cert.g);
}

PointedCertificate certify_at(const LaurentPoly& u, const MutationWord& w, const ClusterPattern& pattern) {
  return certify_pointed(pattern.express_in_chart(u, w), pattern.seed_at(w).btilde, w);
}

// ---------------------------------------------------------------- G and C

IntMatrix g_matrix(const ClusterPattern& pattern, const MutationWord& t, const MutationWord& w) {
  const auto& cluster = pattern.seed_at(t).cluster;
  const DominanceOrder order(pattern.matrix_at(w));
  IntMatrix g(pattern.m(), pattern.m());
  for (std::size_t j = 0; j < pattern.m(); ++j) {
    const auto cert = certify_pointed(pattern.express_in_chart(cluster[j], w), order, w);
    for (std::size_t i = 0; i < pattern.m(); ++i) g(i, j) = cert.g[i];
  }
  return g;
}

IntMatrix c_matrix(const ClusterPattern& pattern, const MutationWord& t, const MutationWord& w) {
  t.validate(pattern.n());
  w.validate(pattern.n());
  const std::size_t n = pattern.n();
  IntMatrix ext = vstack(pattern.seed_at(w).btilde.principal(), IntMatrix::identity(n));
  for (int k : MutationWord::path(w, t)) ext = mutate_entries(ext, k);
  return ext.block(n, 0, n, n);
}

// ---------------------------------------------------------------- goodness

GoodCertificate certify_good(const LaurentPoly& u, const ClusterPattern& pattern, std::size_t depth) {
  GoodCertificate good;
  good.depth = depth;
  const std::size_t n = pattern.n();
  for (const auto& w : words_within(n, depth)) {
    PointedCertificate cert;
    try {
      cert = certify_at(u, w, pattern);
    } catch (const NotPointed& e) {
      throw NotPointedAt("vertex " + w.to_string() + ": " + e.what());
    }
    if (!cert.positive) throw NegativeCoefficientAt("vertex " + w.to_string() + " has a negative coefficient");

    if (!w.empty()) {
      const auto& prev = good.charts.at(w.parent());
      const IntVec expected = y_step(pattern.matrix_at(w.parent()), prev.g, w.back());
      if (expected != cert.g)
        throw TropicalMismatchAt("vertex " + w.to_string() + ": degree " + to_string(cert.g) +
                                 " but the tropical rule predicts " + to_string(expected));
    }

    // Along each edge k the pure y_k-part of F is pinned down by g_k: the
    // power y_k^{[-g_k]_+} has coefficient 1 and nothing higher appears.
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t top = positive_part(-cert.g[k]);
      std::int64_t highest = 0;
      mpz_class top_coeff = 0;
      for (const auto& [v, c] : cert.fpoly.terms()) {
        bool pure = true;
        for (std::size_t j = 0; j < n; ++j)
          if (j != k && v[j] != 0) pure = false;
        if (!pure) continue;
        highest = std::max(highest, v[k]);
        if (v[k] == top) top_coeff = c;
      }
      if (highest != top || top_coeff != 1)
        throw TropicalMismatchAt("vertex " + w.to_string() + ": pure y_" + std::to_string(k + 1) +
                                 " part of F reaches degree " + std::to_string(highest) + ", expected " +
                                 std::to_string(top) + " with coefficient 1");
    }
    good.charts.emplace(w, std::move(cert));
  }
  good.tropical_consistent = true;
  return good;
}

MonomialVerdict detect_cluster_monomial(const LaurentPoly& u, const ClusterPattern& pattern, std::size_t depth) {
  MonomialVerdict verdict;
  verdict.depth = depth;
  const std::size_t n = pattern.n();
  for (const auto& w : words_within(n, depth)) {
    const auto cert = certify_at(u, w, pattern);
    if (std::any_of(cert.fvec.begin(), cert.fvec.end(), [](auto f) { return f != 0; })) continue;
    if (std::any_of(cert.g.begin(), cert.g.begin() + static_cast<std::ptrdiff_t>(n), [](auto x) { return x < 0; }))
      continue;
    verdict.found = true;
    verdict.word = w;
    verdict.exponents = cert.g;
    return verdict;
  }
  return verdict;
}

}  // namespace tropf

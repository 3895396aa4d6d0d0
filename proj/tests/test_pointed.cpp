#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tropf/errors.hpp"
#include "tropf/pointed.hpp"
#include "tropf/tropical.hpp"

using namespace tropf;
using fixture::x;

namespace {

const MutationWord root{};
const MutationWord t1({1});

LaurentPoly x1p() { return LaurentPoly::monomial({-1, 1, 0, 0}) + LaurentPoly::monomial({-1, 0, 1, 0}); }

}  // namespace

TEST_CASE("dominance order examples") {
  const MutationMatrix bt = fixture::a2_principal().btilde;
  const auto refl = dominance_leq({1, 2, 3, 4}, {1, 2, 3, 4}, bt);
  CHECK(refl.holds);
  CHECK(refl.v == IntVec{0, 0});
  const auto ex = dominance_leq({-1, 0, 1, 0}, {-1, 1, 0, 0}, bt);
  CHECK(ex.holds);
  CHECK(ex.v == IntVec{1, 0});
  CHECK_FALSE(dominance_leq({1, 0, 0, 0}, {0, 1, 0, 0}, bt).holds);
  CHECK_FALSE(dominance_leq({0, 1, 0, 0}, {1, 0, 0, 0}, bt).holds);
  CHECK_THROWS_AS(DominanceOrder(IntMatrix{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}), NotFullRank);
}

TEST_CASE("dominance agrees with a box search") {
  std::mt19937 rng(61);
  const MutationMatrix bt = fixture::a3_principal().btilde;
  const DominanceOrder order(bt.matrix());
  std::uniform_int_distribution<int> d(-2, 2), vd(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    IntVec g2(6), g1(6);
    for (auto& c : g2) c = d(rng);
    if (trial % 2 == 0) {
      // half the samples are comparable by construction
      IntVec v{vd(rng), vd(rng) - 1, vd(rng)};
      g1 = add(g2, bt.matrix() * v);
    } else {
      for (auto& c : g1) c = d(rng);
    }
    const auto box = oracle::dominance_box(bt.matrix(), sub(g1, g2), 6);
    const auto got = order.leq(g1, g2);
    CHECK(box.has_value() == got.has_value());
    if (box && got) CHECK(*box == *got);
  }
}

TEST_CASE("certify_pointed examples") {
  const ClusterPattern pattern(fixture::a2_principal());
  const auto& seed = pattern.seed_at(root);

  const auto c1 = certify_pointed(x(4, 1), seed);
  CHECK(c1.g == IntVec{1, 0, 0, 0});
  CHECK(c1.fpoly == LaurentPoly::constant(2, 1));
  CHECK(c1.fvec == IntVec{0, 0});

  const auto c = certify_pointed(x1p(), seed);
  CHECK(c.g == IntVec{-1, 1, 0, 0});
  CHECK(c.fpoly == LaurentPoly::constant(2, 1) + LaurentPoly::variable(2, 0));
  CHECK(c.fvec == IntVec{1, 0});
  CHECK(c.pointed);
  CHECK(c.bipointed);
  CHECK(c.positive);
  CHECK(reconstruct(c, seed.btilde.matrix()) == x1p());

  CHECK_THROWS_AS(certify_pointed(x(4, 1) + x(4, 2), seed), NotPointed);
  CHECK_THROWS_AS(certify_pointed(x(4, 1).scaled(2), seed), NotPointed);
  CHECK_THROWS_AS(certify_pointed(LaurentPoly(4), seed), NotPointed);

  // pointed but not positive
  const auto neg = certify_pointed(LaurentPoly::monomial({-1, 1, 0, 0}) - LaurentPoly::monomial({-1, 0, 1, 0}), seed);
  CHECK_FALSE(neg.positive);
}

TEST_CASE("G- and C-matrices in A2-principal") {
  const ClusterPattern pattern(fixture::a2_principal());
  CHECK(g_matrix(pattern, root, root) == IntMatrix::identity(4));
  CHECK(g_matrix(pattern, t1, t1) == IntMatrix::identity(4));
  CHECK(g_matrix(pattern, t1, root) == IntMatrix{{-1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(c_matrix(pattern, root, root) == IntMatrix::identity(2));
  const auto c = c_matrix(pattern, t1, root);
  CHECK(c == IntMatrix{{-1, 1}, {0, 1}});
  // ŷ_{1;t1} has degree B̃_{t0} C e1 in the root chart
  const IntVec lhs = pattern.matrix_at(root) * c.col(0);
  CHECK(lhs == IntVec{0, 1, -1, 0});
  CHECK(lhs == yhat_variables(pattern.seed_at(t1)).own_chart[0]);
  for (const auto& w : words_within(2, 4)) {
    CHECK(abs(determinant(g_matrix(pattern, w, root))) == 1);
    CHECK(abs(determinant(c_matrix(pattern, w, root))) == 1);
  }
}

TEST_CASE("G-matrices relative to a non-root chart") {
  const ClusterPattern pattern(fixture::a3_principal());
  const MutationWord w({2, 1}), t({3, 2});
  const auto g = g_matrix(pattern, t, w);
  CHECK(abs(determinant(g)) == 1);
  // block shape [[G, 0], [*, I]]
  CHECK(g.block(0, 3, 3, 3).is_zero());
  CHECK(g.block(3, 3, 3, 3) == IntMatrix::identity(3));
  // deg^w(ŷ_t^v) = B̃_w C v for the c-matrix between the same vertices
  const auto c = c_matrix(pattern, t, w);
  const auto yhat = yhat_variables(pattern.seed_at(t));
  for (std::size_t k = 0; k < 3; ++k) CHECK(g * yhat.own_chart[k] == pattern.matrix_at(w) * c.col(k));
}

TEST_CASE("certify_good") {
  const ClusterPattern pattern(fixture::a2_principal());
  const auto frozen = certify_good(x(4, 3), pattern, 4);
  for (const auto& [w, c] : frozen.charts) CHECK(c.fpoly == LaurentPoly::constant(2, 1));

  const auto good = certify_good(x1p(), pattern, 3);
  CHECK(good.tropical_consistent);
  const TropicalPointY p{root, {-1, 1, 0, 0}};
  for (const auto& [w, c] : good.charts) CHECK(c.g == transport_y(p, w, pattern));

  try {
    certify_good(x(4, 1) + x(4, 2), pattern, 2);
    FAIL("expected NotPointedAt");
  } catch (const NotPointedAt& e) {
    CHECK(std::string(e.what()).rfind("vertex ε", 0) == 0);
  }
  const auto neg = LaurentPoly::monomial({-1, 1, 0, 0}) - LaurentPoly::monomial({-1, 0, 1, 0});
  CHECK_THROWS_AS(certify_good(neg, pattern, 2), NegativeCoefficientAt);
  // x1 (1 + 2 ŷ_1) is pointed and positive at the root, but g_1 = 1 leaves no room for a pure y_1 term
  const auto lopsided = x(4, 1) * (LaurentPoly::constant(4, 1) + LaurentPoly::monomial({0, -1, 1, 0}).scaled(2));
  CHECK_THROWS_AS(certify_good(lopsided, pattern, 2), TropicalMismatchAt);
}

TEST_CASE("detect_cluster_monomial") {
  const ClusterPattern pattern(fixture::a2_principal());
  const auto a = detect_cluster_monomial(x(4, 1) * x(4, 2), pattern, 3);
  CHECK(a.found);
  CHECK(a.word == root);
  CHECK(a.exponents == IntVec{1, 1, 0, 0});
  const auto b = detect_cluster_monomial(x1p(), pattern, 3);
  CHECK(b.found);
  CHECK(b.word == t1);
  CHECK(b.exponents == IntVec{1, 0, 0, 0});
  const auto c = detect_cluster_monomial(x1p() * x(4, 2), pattern, 3);
  CHECK(c.word == t1);
  CHECK(c.exponents == IntVec{1, 1, 0, 0});
  // x1 * x'_1 = x2 + x3 is not a cluster monomial anywhere
  CHECK_FALSE(detect_cluster_monomial(x(4, 1) * x1p(), pattern, 5).found);
}

TEST_CASE("degrees of monomials follow the G-matrix") {
  std::mt19937 rng(67);
  const ClusterPattern pattern(fixture::a3_principal());
  const auto words = words_within(3, 3);
  std::uniform_int_distribution<int> ed(0, 2), fd(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto& t = words[rng() % words.size()];
    const auto& w = words[rng() % words.size()];
    IntVec h(6);
    LaurentPoly u = LaurentPoly::constant(6, 1);
    const auto& cluster = pattern.seed_at(t).cluster;
    for (std::size_t j = 0; j < 6; ++j) {
      h[j] = j < 3 ? ed(rng) : fd(rng);
      if (h[j] > 0) u = u * cluster[j].pow(static_cast<unsigned>(h[j]));
      if (h[j] < 0) u = u * LaurentPoly::monomial(sub(IntVec(6, 0), cluster[j].terms().begin()->first)).pow(static_cast<unsigned>(-h[j]));
    }
    const auto cert = certify_at(u, w, pattern);
    CHECK(cert.g == g_matrix(pattern, t, w) * h);
    CHECK(reconstruct(cert, pattern.matrix_at(w)) == pattern.express_in_chart(u, w));
  }
}

TEST_CASE("degree is additive on products") {
  const ClusterPattern pattern(fixture::b2_principal());
  const auto& c1 = pattern.seed_at(MutationWord({1, 2})).cluster;
  const auto& c2 = pattern.seed_at(MutationWord({2, 1, 2})).cluster;
  for (const auto& w : words_within(2, 3)) {
    const auto a = certify_at(c1[0], w, pattern), b = certify_at(c2[1], w, pattern);
    CHECK(certify_at(c1[0] * c2[1], w, pattern).g == add(a.g, b.g));
  }
}

TEST_CASE("cluster variables are bipointed and positive in every nearby chart") {
  for (const auto& cfg : {fixture::a2_principal(), fixture::b2_principal()}) {
    const ClusterPattern pattern(cfg);
    for (const auto& t : words_within(pattern.n(), 3))
      for (std::size_t j = 0; j < pattern.n(); ++j)
        for (const auto& w : words_within(pattern.n(), 3)) {
          const auto c = certify_at(pattern.seed_at(t).cluster[j], w, pattern);
          CHECK(c.positive);
          CHECK(c.bipointed);
          CHECK(c.fpoly.coefficient(IntVec(pattern.n(), 0)) == 1);
          // zero f-component forces a nonnegative degree component
          for (std::size_t k = 0; k < pattern.n(); ++k)
            if (c.fvec[k] == 0) CHECK(c.g[k] >= 0);
          // a single nonzero f-component means one mutation turns it into a cluster variable
          std::size_t nonzero = 0, at = 0;
          for (std::size_t k = 0; k < pattern.n(); ++k)
            if (c.fvec[k] != 0) ++nonzero, at = k;
          if (nonzero == 1) {
            const auto next = w.then(static_cast<int>(at + 1));
            const auto there = certify_at(pattern.seed_at(t).cluster[j], next, pattern);
            CHECK(there.fvec == IntVec(pattern.n(), 0));
            const auto one_plus = LaurentPoly::constant(pattern.n(), 1) + LaurentPoly::variable(pattern.n(), at);
            CHECK(c.fpoly == one_plus.pow(static_cast<unsigned>(-c.g[at])));
          }
        }
  }
}

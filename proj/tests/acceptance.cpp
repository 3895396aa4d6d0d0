// Acceptance suite: one PASS/FAIL line per criterion. Every check is exact;
// the only tolerances are the wall-clock budgets listed next to each line.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tropf/errors.hpp"
#include "tropf/invariant.hpp"
#include "tropf/pointed.hpp"
#include "tropf/tropical.hpp"

using namespace tropf;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  // first failure wins; later ones are counted
  std::size_t failures = 0;
  void fail(const std::string& why) {
    if (failures++ == 0) detail = why;
    pass = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> body;
};

const MutationWord root{};

std::vector<LaurentPoly> unfrozen_variables(const ClusterPattern& pattern, std::size_t depth) {
  std::vector<LaurentPoly> out;
  for (const auto& w : words_within(pattern.n(), depth))
    for (std::size_t j = 0; j < pattern.n(); ++j) {
      const auto& v = pattern.seed_at(w).cluster[j];
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  return out;
}

bool all_positive(const LaurentPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second > 0; });
}

IntVec unit(std::size_t m, std::size_t j) {
  IntVec e(m, 0);
  e[j] = 1;
  return e;
}

// (B̃ᵀΛ) must equal (S | 0).
bool satisfies_compatibility(const IntMatrix& bt, const IntMatrix& lambda, const IntVec& s) {
  const IntMatrix prod = bt.transpose() * lambda;
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j)
      if (prod(i, j) != (i == j ? s[i] : 0)) return false;
  return true;
}

Outcome mutation_algebra() {
  Outcome o;
  std::mt19937 rng(20240601);
  std::size_t matrices = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const std::size_t m = n + rng() % (7 - n);
    const IntMatrix raw = oracle::random_btilde(rng, m, n);
    const MutationMatrix bt(raw);
    ++matrices;
    const IntMatrix im = IntMatrix::identity(m), in = IntMatrix::identity(n);
    for (int k = 1; k <= static_cast<int>(n); ++k) {
      const auto once = mutate_matrix(bt, k);
      const std::string where = "trial " + std::to_string(trial) + " k=" + std::to_string(k);
      o.expect(mutate_matrix(once, k) == bt, where + ": mu_k^2 != id");
      o.expect(once.matrix() == oracle::from_dense(oracle::mutate(oracle::dense(raw), k)), where + ": differs from sign-form oracle");
      o.expect(rank(once.matrix()) == rank(raw), where + ": rank changed");
      o.expect(find_skew_symmetrizer(once.principal()) == bt.skew_symmetrizer(), where + ": symmetrizer changed");
      for (Sign sign : {Sign::Plus, Sign::Minus}) {
        const IntMatrix e = e_matrix(raw, k, sign), f = f_matrix(raw, k, sign);
        o.expect(e * e == im, where + ": E^2 != I");
        o.expect(f * f == in, where + ": F^2 != I");
        o.expect(e * raw * f == once.matrix(), where + ": E B F != mu_k(B)");
      }
    }
  }
  o.expect(matrices >= 100, "fewer than 100 matrices");
  if (o.pass) o.detail = std::to_string(matrices) + " matrices, every direction, both signs";
  return o;
}

Outcome compatible_pairs() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& cfg : {fixture::a2_principal(), fixture::b2_principal()}) {
    const CompatiblePair start = *cfg.pair;
    for (const auto& w : words_within(cfg.n(), 5)) {
      CompatiblePair plus = start, minus = start;
      for (int k : w.letters()) {
        plus = mutate_pair(plus, k, Sign::Plus);
        minus = mutate_pair(minus, k, Sign::Minus);
      }
      ++checked;
      o.expect(plus.lambda == minus.lambda && plus.btilde == minus.btilde, w.to_string() + ": signs disagree");
      o.expect(plus.s == start.s, w.to_string() + ": S changed");
      o.expect(satisfies_compatibility(plus.btilde.matrix(), plus.lambda, start.s), w.to_string() + ": BᵀΛ != (S|0)");
      o.expect(plus.lambda.transpose() == -plus.lambda, w.to_string() + ": Λ not skew");
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " vertices in A2 and B2";
  return o;
}

Outcome a2_enumeration() {
  Outcome o;
  const ClusterPattern pattern(fixture::a2_free());
  const auto found = unfrozen_variables(pattern, 7);
  const auto expected = oracle::pentagon();
  o.expect(found.size() == 5, "found " + std::to_string(found.size()) + " variables");
  for (const auto& v : expected)
    o.expect(std::find(found.begin(), found.end(), v) != found.end(), "an oracle variable is missing");
  if (o.pass) o.detail = "5 variables, equal to the typed-in set";
  return o;
}

Outcome positivity() {
  Outcome o;
  std::size_t count = 0;
  const std::vector<std::pair<RootConfig, std::size_t>> cases{
      {fixture::a2_principal(), 6}, {fixture::a3_principal(), 6}, {fixture::markov_principal(), 4}};
  for (const auto& [cfg, depth] : cases) {
    const ClusterPattern pattern(cfg);
    for (const auto& w : words_within(pattern.n(), depth))
      for (std::size_t j = 0; j < pattern.n(); ++j) {
        ++count;
        o.expect(all_positive(pattern.seed_at(w).cluster[j]), w.to_string() + ": nonpositive coefficient");
      }
  }
  if (o.pass) o.detail = std::to_string(count) + " cluster variables expanded";
  return o;
}

Outcome determinants() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& cfg : {fixture::a2_principal(), fixture::a3_principal()}) {
    const ClusterPattern pattern(cfg);
    for (const auto& t : words_within(pattern.n(), 6)) {
      ++count;
      o.expect(abs(determinant(g_matrix(pattern, t, root))) == 1, t.to_string() + ": det G != ±1");
      o.expect(abs(determinant(c_matrix(pattern, t, root))) == 1, t.to_string() + ": det C != ±1");
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " vertices";
  return o;
}

Outcome degree_consistency() {
  Outcome o;
  std::mt19937 rng(5150);
  std::size_t monomials = 0, transports = 0;
  for (const auto& cfg : {fixture::a2_principal(), fixture::a3_principal()}) {
    const ClusterPattern pattern(cfg);
    const std::size_t n = pattern.n(), m = pattern.m();
    const auto words = words_within(n, 5);
    std::uniform_int_distribution<int> ed(0, 2), fd(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
      const auto& t = words[rng() % words.size()];
      const auto& w = words[rng() % words.size()];
      IntVec h(m);
      LaurentPoly u = LaurentPoly::constant(m, 1);
      const auto& cluster = pattern.seed_at(t).cluster;
      for (std::size_t j = 0; j < m; ++j) {
        h[j] = j < n ? ed(rng) : fd(rng);
        if (h[j] > 0) u = u * cluster[j].pow(static_cast<unsigned>(h[j]));
        // frozen variables never mutate, so their inverses are root monomials
        if (h[j] < 0) u = u * LaurentPoly::monomial(sub(IntVec(m, 0), unit(m, j))).pow(static_cast<unsigned>(-h[j]));
      }
      ++monomials;
      o.expect(certify_at(u, w, pattern).g == g_matrix(pattern, t, w) * h,
               "monomial at " + t.to_string() + " in chart " + w.to_string());
    }
    for (const auto& t : words)
      for (std::size_t j = 0; j < m; ++j) {
        const auto& x = pattern.seed_at(t).cluster[j];
        for (int s = 0; s < 4; ++s) {
          const auto& w = words[rng() % words.size()];
          ++transports;
          o.expect(certify_at(x, w, pattern).g == transport_y(TropicalPointY{t, unit(m, j)}, w, pattern),
                   "x_" + std::to_string(j + 1) + ";" + t.to_string() + " in chart " + w.to_string());
        }
      }
  }
  o.expect(monomials >= 50, "fewer than 50 monomials");
  if (o.pass)
    o.detail = std::to_string(monomials) + " monomials, " + std::to_string(transports) + " unit-vector transports";
  return o;
}

std::vector<LaurentPoly> a2_seven(const ClusterPattern& pattern) {
  auto v = unfrozen_variables(pattern, 5);
  v.push_back(fixture::x(4, 3));
  v.push_back(fixture::x(4, 4));
  return v;
}

Outcome pairing_audit() {
  Outcome o;
  const ClusterPattern pattern(fixture::a2_principal());
  const auto elements = a2_seven(pattern);
  o.expect(elements.size() == 7, "expected 7 elements");
  std::size_t pairs = 0;
  for (const auto& u : elements)
    for (const auto& v : elements) {
      ++pairs;
      const auto report = check_seed_independence(u, v, pattern, 5);
      o.expect(report.constant && report.per_vertex.size() == 11,
               "pairing changes at " + (report.witness ? report.witness->to_string() : std::string("?")));
    }
  if (o.pass) o.detail = std::to_string(pairs) + " ordered pairs constant over 11 vertices";
  return o;
}

Outcome f_invariant_values() {
  Outcome o;
  const ClusterPattern a2(fixture::a2_principal());
  const MutationWord t1({1});
  const auto x1 = fixture::x(4, 1), x2 = fixture::x(4, 2);
  const auto x1p = a2.seed_at(t1).cluster[0];
  o.expect(f_invariant(x1, x1p, a2) == 1, "(x1||x1') != 1");
  o.expect(f_invariant(x1, x2, a2) == 0, "(x1||x2) != 0");

  const ClusterPattern b2(fixture::b2_principal());
  const auto mu1 = b2.seed_at(t1).cluster[0];
  o.expect(f_invariant(fixture::x(4, 1), mu1, b2) == 2, "B2 value != 2");
  o.expect(b2.s()[0] * certify_at(mu1, root, b2).fvec[0] == 2, "B2 s_1 f_1 != 2");

  std::mt19937 rng(99);
  std::size_t monomials = 0;
  for (const auto& cfg : {fixture::a2_principal(), fixture::b2_principal(), fixture::a3_principal()}) {
    const ClusterPattern pattern(cfg);
    const auto words = words_within(pattern.n(), 4);
    for (int trial = 0; trial < 15; ++trial) {
      const auto& t = words[rng() % words.size()];
      LaurentPoly u = LaurentPoly::constant(pattern.m(), 1);
      for (std::size_t j = 0; j < pattern.n(); ++j) u = u * pattern.seed_at(t).cluster[j].pow(rng() % 3);
      ++monomials;
      o.expect(f_invariant(u, u, pattern) == 0, "(u||u) != 0 for a monomial at " + t.to_string());
    }
  }
  if (o.pass) o.detail = "fixed values exact; (u||u) = 0 for " + std::to_string(monomials) + " cluster monomials";
  return o;
}

struct PentagonData {
  ClusterPattern pattern{fixture::a2_free()};
  std::vector<LaurentPoly> variables = oracle::pentagon();
  std::set<std::pair<std::size_t, std::size_t>> adjacent;
  std::vector<std::pair<std::size_t, std::size_t>> f_compatible;
};

PentagonData& pentagon() {
  static PentagonData data;
  if (data.adjacent.empty()) {
    std::mt19937 rng(7);
    data.adjacent = oracle::common_cluster_pairs({{0, 1}, {-1, 0}}, data.variables, 2, 6, rng);
  }
  return data;
}

Outcome product_criterion() {
  Outcome o;
  auto& d = pentagon();
  d.f_compatible.clear();
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a + 1; b < 5; ++b) {
      ++pairs;
      const auto verdict = is_product_cluster_monomial(d.variables[a], d.variables[b], d.pattern, 5);
      const bool oracle_says = d.adjacent.count({a, b}) > 0;
      o.expect(verdict.is_cluster_monomial == oracle_says,
               "pair (" + std::to_string(a) + "," + std::to_string(b) + ") disagrees with the oracle");
      if (verdict.is_cluster_monomial) d.f_compatible.emplace_back(a, b);
    }
  o.expect(d.f_compatible.size() == 5, "expected the 5 pentagon edges");
  if (o.pass) o.detail = std::to_string(pairs) + " pairs agree; " + std::to_string(d.f_compatible.size()) + " compatible";
  return o;
}

Outcome sign_coherence() {
  Outcome o;
  auto& d = pentagon();
  if (d.f_compatible.empty()) {
    o.fail("no F-compatible pairs from criterion 9");
    return o;
  }
  for (const auto& [a, b] : d.f_compatible) {
    const auto& u = d.variables[a];
    const auto& v = d.variables[b];
    const TropicalPointY p{root, certify_at(u, root, d.pattern).g};
    const TropicalPointY q{root, certify_at(v, root, d.pattern).g};
    o.expect(are_compatible(p, q, 5, d.pattern).compatible, "tropical points not compatible");
    try {
      certify_good(u * v, d.pattern, 4);
    } catch (const Error& e) {
      o.fail(std::string("product not good: ") + e.what());
    }
  }
  if (o.pass) o.detail = std::to_string(d.f_compatible.size()) + " pairs compatible to depth 5, products good to depth 4";
  return o;
}

Outcome poisson_suite() {
  Outcome o;
  const ClusterPattern pattern(fixture::a2_principal());
  for (const auto& w : words_within(2, 4)) {
    const auto& c = pattern.seed_at(w).cluster;
    const auto& lambda = pattern.lambda_at(w);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        o.expect(poisson_bracket(c[i], c[j], pattern) == (c[i] * c[j]).scaled(lambda(i, j)),
                 "bracket not log-canonical at " + w.to_string());
  }
  const auto x1p = pattern.seed_at(MutationWord({1})).cluster[0];
  o.expect(!is_log_canonical(fixture::x(4, 1), x1p, pattern).log_canonical, "(x1, x1') reported log-canonical");
  const auto yes = is_log_canonical(fixture::x(4, 2), x1p, pattern);
  o.expect(yes.log_canonical && yes.c == 0, "(x2, x1') not log-canonical with c = 0");

  std::size_t yes_pairs = 0;
  const auto elements = a2_seven(pattern);
  for (const auto& u : elements)
    for (const auto& w : words_within(2, 4))
      for (std::size_t k = 0; k < 2; ++k) {
        const auto& x = pattern.seed_at(w).cluster[k];
        if (!is_log_canonical(u, x, pattern).log_canonical) continue;
        ++yes_pairs;
        o.expect(f_invariant(u, x, pattern) == 0, "log-canonical pair with nonzero F-invariant");
        o.expect(certify_at(u, w, pattern).fvec[k] == 0, "log-canonical pair with f_k != 0 at " + w.to_string());
      }
  o.expect(yes_pairs > 0, "no log-canonical pairs found");
  if (o.pass) o.detail = std::to_string(yes_pairs) + " log-canonical pairs checked";
  return o;
}

Outcome markov_identity() {
  Outcome o;
  const IntMatrix b = fixture::markov_principal().btilde.principal();
  for (int k = 1; k <= 3; ++k) o.expect(mutate_entries(b, k) == -b, "mu_" + std::to_string(k) + "(B) != -B");
  if (o.pass) o.detail = "k = 1, 2, 3";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "mutation algebra", 5.0, mutation_algebra},
      {2, "compatible pairs", 5.0, compatible_pairs},
      {3, "A2 enumeration", 1.0, a2_enumeration},
      {4, "Laurent positivity", 60.0, positivity},
      {5, "G/C determinants", 60.0, determinants},
      {6, "degree consistency", 60.0, degree_consistency},
      {7, "pairing independence", 60.0, pairing_audit},
      {8, "F-invariant values", 60.0, f_invariant_values},
      {9, "product criterion", 60.0, product_criterion},
      {10, "sign coherence", 60.0, sign_coherence},
      {11, "Poisson suite", 60.0, poisson_suite},
      {12, "Markov identity", 60.0, markov_identity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds)
      out.fail("took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget_seconds) + " s");
    if (!out.pass) ++failed;
    std::printf("%s  %2d %-22s %7.3f s (budget %.0f s)  %s\n", out.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                seconds, c.budget_seconds, out.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

#include "tropf/seeds.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <sstream>

#include "tropf/errors.hpp"

namespace tropf {

// ---------------------------------------------------------------- words

MutationWord::MutationWord(std::vector<int> letters) {
  for (int k : letters) {
    if (k < 1) throw DirectionError("direction " + std::to_string(k) + " is not positive");
    if (!letters_.empty() && letters_.back() == k)
      letters_.pop_back();
    else
      letters_.push_back(k);
  }
}

MutationWord MutationWord::parse(const std::string& text) {
  std::string cleaned;
  for (char c : text) cleaned += (c == ',' || c == '.') ? ' ' : c;
  std::istringstream is(cleaned);
  std::vector<int> letters;
  std::string tok;
  while (is >> tok) {
    if (tok == "ε" || tok == "()") continue;
    std::size_t pos = 0;
    int k = 0;
    try {
      k = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad mutation word token '" + tok + "'");
    }
    if (pos != tok.size() || k < 1) throw ParseError("bad mutation word token '" + tok + "'");
    letters.push_back(k);
  }
  return MutationWord(std::move(letters));
}

MutationWord MutationWord::then(int k) const {
  if (k < 1) throw DirectionError("direction " + std::to_string(k) + " is not positive");
  MutationWord w = *this;
  if (!w.letters_.empty() && w.letters_.back() == k)
    w.letters_.pop_back();
  else
    w.letters_.push_back(k);
  return w;
}

MutationWord MutationWord::parent() const {
  MutationWord w = *this;
  if (!w.letters_.empty()) w.letters_.pop_back();
  return w;
}

MutationWord MutationWord::reversed() const {
  MutationWord w = *this;
  std::reverse(w.letters_.begin(), w.letters_.end());
  return w;
}

void MutationWord::validate(std::size_t n) const {
  for (int k : letters_)
    if (k < 1 || static_cast<std::size_t>(k) > n)
      throw DirectionError("direction " + std::to_string(k) + " out of range [1," + std::to_string(n) + "]");
}

std::vector<int> MutationWord::path(const MutationWord& from, const MutationWord& to) {
  const auto& a = from.letters_;
  const auto& b = to.letters_;
  std::size_t common = 0;
  while (common < a.size() && common < b.size() && a[common] == b[common]) ++common;
  std::vector<int> out(a.rbegin(), a.rend() - static_cast<std::ptrdiff_t>(common));
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(common), b.end());
  return out;
}

std::string MutationWord::to_string() const {
  if (letters_.empty()) return "ε";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) s += (i ? " " : "") + std::to_string(letters_[i]);
  return s;
}

std::vector<MutationWord> words_within(std::size_t n, std::size_t depth) {
  std::vector<MutationWord> out{MutationWord{}};
  std::size_t frontier = 0;
  for (std::size_t d = 0; d < depth; ++d) {
    const std::size_t end = out.size();
    for (std::size_t i = frontier; i < end; ++i)
      for (int k = 1; k <= static_cast<int>(n); ++k) {
        if (!out[i].empty() && out[i].back() == k) continue;
        out.push_back(out[i].then(k));
      }
    frontier = end;
  }
  return out;
}

// ---------------------------------------------------------------- matrices

IntVec find_skew_symmetrizer(const IntMatrix& b) {
  if (!b.is_square()) throw NotSkewSymmetrizable("matrix is not square");
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i)
    if (b(i, i) != 0) throw NotSkewSymmetrizable("nonzero diagonal entry at (" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ")");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool zi = b(i, j) == 0, zj = b(j, i) == 0;
      if (zi != zj || (!zi && (b(i, j) > 0) == (b(j, i) > 0)))
        throw NotSkewSymmetrizable("entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                   ") and (" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                                   ") admit no positive symmetrizer");
    }

  // s_j / s_i = -b_ij / b_ji along edges; propagate rationals per component.
  std::vector<std::optional<mpq_class>> ratio(n);
  IntVec s(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (ratio[start]) continue;
    std::vector<std::size_t> component{start};
    ratio[start] = mpq_class(1);
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || b(i, j) == 0) continue;
        mpq_class want = *ratio[i] * mpq_class(-b(i, j), 1) / mpq_class(b(j, i), 1);
        want.canonicalize();
        if (!ratio[j]) {
          ratio[j] = want;
          component.push_back(j);
          queue.push_back(j);
        } else if (*ratio[j] != want) {
          throw NotSkewSymmetrizable("inconsistent symmetrizer ratios around index " + std::to_string(j + 1));
        }
      }
    }
    mpz_class lcm_den = 1;
    for (auto i : component) lcm_den = lcm(lcm_den, mpz_class(ratio[i]->get_den()));
    std::vector<mpz_class> scaled;
    mpz_class g = 0;
    for (auto i : component) {
      mpq_class q = *ratio[i] * mpq_class(lcm_den);
      q.canonicalize();
      scaled.push_back(q.get_num());
      g = gcd(g, scaled.back());
    }
    for (std::size_t c = 0; c < component.size(); ++c) s[component[c]] = checked::narrow(mpz_class(scaled[c] / g));
  }
  return s;
}

MutationMatrix::MutationMatrix(IntMatrix mat) : mat_(std::move(mat)) {
  if (mat_.cols() == 0 || mat_.rows() < mat_.cols())
    throw DimensionError("mutation matrix must be m x n with m >= n > 0, got " + std::to_string(mat_.rows()) +
                         " x " + std::to_string(mat_.cols()));
  s_ = find_skew_symmetrizer(principal());
}

namespace {

void check_direction(int k, std::size_t n) {
  if (k < 1 || static_cast<std::size_t>(k) > n)
    throw DirectionError("direction " + std::to_string(k) + " out of range [1," + std::to_string(n) + "]");
}

std::int64_t sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }

}  // namespace

IntMatrix mutate_entries(const IntMatrix& mat, int k) {
  check_direction(k, std::min(mat.rows(), mat.cols()));
  const std::size_t kk = static_cast<std::size_t>(k - 1);
  IntMatrix out(mat.rows(), mat.cols());
  for (std::size_t i = 0; i < mat.rows(); ++i)
    for (std::size_t j = 0; j < mat.cols(); ++j) {
      if (i == kk || j == kk) {
        out(i, j) = checked::neg(mat(i, j));
      } else {
        const auto bik = mat(i, kk), bkj = mat(kk, j);
        out(i, j) = checked::add(mat(i, j), checked::sub(checked::mul(positive_part(bik), positive_part(bkj)),
                                                          checked::mul(positive_part(-bik), positive_part(-bkj))));
      }
    }
  return out;
}

MutationMatrix mutate_matrix(const MutationMatrix& bt, int k) {
  check_direction(k, bt.n());
  return MutationMatrix(mutate_entries(bt.matrix(), k));
}

IntMatrix e_matrix(const IntMatrix& bt, int k, Sign sign) {
  check_direction(k, bt.cols());
  const std::size_t kk = static_cast<std::size_t>(k - 1);
  IntMatrix e = IntMatrix::identity(bt.rows());
  for (std::size_t i = 0; i < bt.rows(); ++i)
    e(i, kk) = i == kk ? -1 : positive_part(checked::mul(-sign_value(sign), bt(i, kk)));
  return e;
}

IntMatrix f_matrix(const IntMatrix& bt, int k, Sign sign) {
  check_direction(k, bt.cols());
  const std::size_t kk = static_cast<std::size_t>(k - 1);
  IntMatrix f = IntMatrix::identity(bt.cols());
  for (std::size_t j = 0; j < bt.cols(); ++j)
    f(kk, j) = j == kk ? -1 : positive_part(checked::mul(sign_value(sign), bt(kk, j)));
  return f;
}

// ---------------------------------------------------------------- compatible pairs

CompatiblePair check_compatible_pair(const MutationMatrix& bt, const IntMatrix& lambda) {
  const std::size_t m = bt.m(), n = bt.n();
  if (lambda.rows() != m || lambda.cols() != m)
    throw DimensionError("lambda must be " + std::to_string(m) + " x " + std::to_string(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      if (lambda(i, j) != -lambda(j, i))
        throw NotCompatible("lambda is not skew-symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  const IntMatrix prod = bt.matrix().transpose() * lambda;
  IntVec s(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      const auto v = prod(j, i);
      const std::string at = "(" + std::to_string(j + 1) + "," + std::to_string(i + 1) + ")";
      if (i == j) {
        if (v <= 0) throw NotCompatible("B̃ᵀΛ has non-positive diagonal entry " + std::to_string(v) + " at " + at);
        s[j] = v;
      } else if (v != 0) {
        throw NotCompatible("B̃ᵀΛ has nonzero off-diagonal entry " + std::to_string(v) + " at " + at);
      }
    }
  return CompatiblePair{bt, lambda, s};
}

CompatiblePair build_lambda(const IntMatrix& b, const IntMatrix& lambda0, const IntVec& s) {
  const std::size_t n = b.rows();
  if (!b.is_square() || lambda0.rows() != n || lambda0.cols() != n || s.size() != n)
    throw DimensionError("build_lambda expects n x n inputs and a length-n symmetrizer");
  if (!lambda0.is_skew_symmetric()) throw NotCompatible("lambda0 is not skew-symmetric");
  for (auto si : s)
    if (si <= 0) throw NotSkewSymmetrizable("symmetrizer entries must be positive");
  const IntMatrix sm = IntMatrix::diagonal(s);
  if (!(sm * b).is_skew_symmetric()) throw NotSkewSymmetrizable("S B is not skew-symmetric for the given S");

  const IntMatrix bt_l0 = b.transpose() * lambda0;
  const IntMatrix top = hstack(lambda0, -sm - lambda0 * b);
  const IntMatrix bottom = hstack(sm - bt_l0, -(sm * b) + bt_l0 * b);
  MutationMatrix btilde(vstack(b, IntMatrix::identity(n)));
  CompatiblePair pair = check_compatible_pair(btilde, vstack(top, bottom));
  if (pair.s != s) throw InvariantBreach("constructed pair has the wrong type");
  return pair;
}

CompatiblePair mutate_pair(const CompatiblePair& pair, int k, Sign sign) {
  const IntMatrix e = e_matrix(pair.btilde.matrix(), k, sign);
  return CompatiblePair{mutate_matrix(pair.btilde, k), e.transpose() * pair.lambda * e, pair.s};
}

// ---------------------------------------------------------------- seeds

Seed initial_seed(const MutationMatrix& bt) {
  Seed seed{bt, {}, MutationWord{}};
  for (std::size_t j = 0; j < bt.m(); ++j) seed.cluster.push_back(LaurentPoly::variable(bt.m(), j));
  return seed;
}

Seed mutate_seed(const Seed& seed, int k) {
  check_direction(k, seed.btilde.n());
  const std::size_t kk = static_cast<std::size_t>(k - 1);
  const std::size_t m = seed.btilde.m();
  LaurentPoly plus = LaurentPoly::constant(seed.cluster[0].nvars(), 1);
  LaurentPoly minus = plus;
  for (std::size_t j = 0; j < m; ++j) {
    const auto b = seed.btilde(j, kk);
    if (b > 0) plus = multiply(plus, seed.cluster[j].pow(static_cast<unsigned>(b)));
    if (b < 0) minus = multiply(minus, seed.cluster[j].pow(static_cast<unsigned>(-b)));
  }
  Seed out{mutate_matrix(seed.btilde, k), seed.cluster, seed.word.then(k)};
  out.cluster[kk] = exact_divide(plus + minus, seed.cluster[kk]);
  return out;
}

YHat yhat_variables(const Seed& seed) {
  YHat out;
  const std::size_t m = seed.btilde.m();
  for (std::size_t k = 0; k < seed.btilde.n(); ++k) {
    const ExpVec col = seed.btilde.matrix().col(k);
    LaurentPoly num = LaurentPoly::constant(m, 1), den = num;
    for (std::size_t j = 0; j < m; ++j) {
      if (col[j] > 0) num = num * seed.cluster[j].pow(static_cast<unsigned>(col[j]));
      if (col[j] < 0) den = den * seed.cluster[j].pow(static_cast<unsigned>(-col[j]));
    }
    out.own_chart.push_back(col);
    out.initial.push_back(SubtractionFree{std::move(num), std::move(den)});
  }
  return out;
}

namespace {

SubtractionFree normalized(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw InvariantBreach("Y-seed denominator vanished");
  ExpVec lo = num.min_exponents();
  const ExpVec dlo = den.min_exponents();
  for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = -std::min(lo[i], dlo[i]);
  return SubtractionFree{num.shifted(lo), den.shifted(lo)};
}

}  // namespace

YSeed initial_yseed(const IntMatrix& bhat) {
  if (bhat.cols() < bhat.rows() || bhat.rows() == 0) throw DimensionError("B̂ must be n x m with m >= n > 0");
  find_skew_symmetrizer(bhat.block(0, 0, bhat.rows(), bhat.rows()));
  YSeed ys{bhat, {}};
  const std::size_t m = bhat.cols();
  for (std::size_t j = 0; j < m; ++j)
    ys.y.push_back(SubtractionFree{LaurentPoly::variable(m, j), LaurentPoly::constant(m, 1)});
  return ys;
}

YSeed mutate_yseed(const YSeed& yseed, int k) {
  check_direction(k, yseed.bhat.rows());
  const std::size_t kk = static_cast<std::size_t>(k - 1);
  const auto& yk = yseed.y[kk];
  const LaurentPoly one_plus = yk.den + yk.num;  // (1 + y_k) * den_k
  YSeed out{mutate_entries(yseed.bhat, k), yseed.y};
  for (std::size_t i = 0; i < yseed.y.size(); ++i) {
    if (i == kk) {
      out.y[i] = normalized(yk.den, yk.num);
      continue;
    }
    const auto b = yseed.bhat(kk, i);
    const auto& yi = yseed.y[i];
    if (b > 0) {
      // y_i y_k^b (1 + y_k)^{-b} = num_i num_k^b / (den_i (den_k + num_k)^b)
      const auto p = static_cast<unsigned>(b);
      out.y[i] = normalized(yi.num * yk.num.pow(p), yi.den * one_plus.pow(p));
    } else if (b < 0) {
      // y_i (1 + y_k)^{|b|} = num_i (den_k + num_k)^|b| / (den_i den_k^|b|)
      const auto p = static_cast<unsigned>(-b);
      out.y[i] = normalized(yi.num * one_plus.pow(p), yi.den * yk.den.pow(p));
    }
  }
  return out;
}

// ---------------------------------------------------------------- root + pattern

RootConfig::RootConfig(MutationMatrix bt, std::vector<std::string> names_)
    : btilde(std::move(bt)), names(std::move(names_)) {
  if (!names.empty() && names.size() != btilde.m()) throw DimensionError("need one name per cluster variable");
}

RootConfig::RootConfig(CompatiblePair p, std::vector<std::string> names_)
    : btilde(p.btilde), pair(std::move(p)), names(std::move(names_)) {
  if (!names.empty() && names.size() != btilde.m()) throw DimensionError("need one name per cluster variable");
}

const IntVec& RootConfig::s() const { return pair ? pair->s : btilde.skew_symmetrizer(); }

ClusterPattern::ClusterPattern(RootConfig root) : root_(std::move(root)) {
  auto v = std::make_shared<Vertex>(Vertex{initial_seed(root_.btilde), std::nullopt});
  if (root_.pair) v->lambda = root_.pair->lambda;
  vertices_.emplace(MutationWord{}, std::move(v));
}

std::shared_ptr<const Vertex> ClusterPattern::vertex(const MutationWord& w) const {
  w.validate(n());
  {
    std::shared_lock lock(mutex_);
    if (auto it = vertices_.find(w); it != vertices_.end()) return it->second;
  }
  auto parent = vertex(w.parent());
  const int k = w.back();
  auto v = std::make_shared<Vertex>(Vertex{mutate_seed(parent->seed, k), std::nullopt});
  if (parent->lambda) {
    CompatiblePair p{parent->seed.btilde, *parent->lambda, s()};
    const auto plus = mutate_pair(p, k, Sign::Plus);
    const auto minus = mutate_pair(p, k, Sign::Minus);
    if (plus.lambda != minus.lambda)
      throw InvariantBreach("compatible-pair mutation depends on the sign at " + w.to_string());
    v->lambda = minus.lambda;
  }
  std::unique_lock lock(mutex_);
  return vertices_.try_emplace(w, std::move(v)).first->second;
}

CompatiblePair ClusterPattern::pair_at(const MutationWord& w) const {
  auto v = vertex(w);
  if (!v->lambda) throw MissingQuantization("root configuration carries no compatible Λ");
  return CompatiblePair{v->seed.btilde, *v->lambda, s()};
}

const IntMatrix& ClusterPattern::lambda_at(const MutationWord& w) const {
  const auto& v = *vertex(w);
  if (!v.lambda) throw MissingQuantization("root configuration carries no compatible Λ");
  return *v.lambda;
}

const std::vector<LaurentPoly>& ClusterPattern::root_in_chart(const MutationWord& w) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = inverse_.find(w); it != inverse_.end()) return *it->second;
  }
  // Treat w as a root and walk back to t0; the resulting cluster is x_{t0} in x_w.
  Seed s = initial_seed(seed_at(w).btilde);
  for (int k : MutationWord::path(w, MutationWord{})) s = mutate_seed(s, k);
  auto cluster = std::make_shared<const std::vector<LaurentPoly>>(std::move(s.cluster));
  std::unique_lock lock(mutex_);
  return *inverse_.try_emplace(w, std::move(cluster)).first->second;
}

LaurentPoly ClusterPattern::express_in_chart(const LaurentPoly& u, const MutationWord& w) const {
  if (u.nvars() != m()) throw DimensionError("expression is not in the root ring");
  if (w.empty()) return u;
  return substitute(u, root_in_chart(w));
}

}  // namespace tropf

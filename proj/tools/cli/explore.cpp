#include "cli/explore.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cli/format.hpp"

namespace tropf::cli {

std::string seed_digest(const Seed& seed, Dedup dedup) {
  const std::size_t m = seed.btilde.m(), n = seed.btilde.n();
  const Names names(m);
  std::vector<std::string> vars;
  for (const auto& x : seed.cluster) vars.push_back(format_poly(x, names));

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  if (dedup == Dedup::Unlabeled)
    std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n),
              [&](auto a, auto b) { return vars[a] < vars[b]; });

  std::string digest;
  for (auto i : order) digest += vars[i] + ";";
  digest += "|";
  for (auto i : order) {
    for (std::size_t j = 0; j < n; ++j) digest += std::to_string(seed.btilde(i, order[j])) + ",";
    digest += ";";
  }
  return digest;
}

ExplorationIndex explore(const ClusterPattern& pattern, std::size_t depth, Dedup dedup) {
  ExplorationIndex index;
  index.depth = depth;
  index.dedup = dedup;
  const Names names(pattern.m());
  std::set<std::string> seen_vars;
  std::map<std::string, MutationWord> first_with;
  index.variables_by_depth.assign(depth + 1, 0);

  for (const auto& w : words_within(pattern.n(), depth)) {
    const Seed& seed = pattern.seed_at(w);
    for (std::size_t j = 0; j < pattern.n(); ++j) {
      std::string v = format_poly(seed.cluster[j], names);
      if (seen_vars.insert(v).second) index.variables.push_back(std::move(v));
    }
    std::string digest = seed_digest(seed, dedup);
    if (auto [it, inserted] = first_with.try_emplace(digest, w); !inserted) index.repeats.emplace_back(w, it->second);
    index.digests.emplace(w, std::move(digest));
    index.variables_by_depth[w.length()] = seen_vars.size();
  }
  // rank 1 has no reduced words past depth 1
  for (std::size_t d = 1; d <= depth; ++d)
    index.variables_by_depth[d] = std::max(index.variables_by_depth[d], index.variables_by_depth[d - 1]);
  return index;
}

}  // namespace tropf::cli

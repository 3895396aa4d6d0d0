#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tropf/seeds.hpp"

namespace tropf::cli {

enum class Dedup { Labeled, Unlabeled };

/// Bounded walk of the exchange tree.
struct ExplorationIndex {
  std::size_t depth = 0;
  Dedup dedup = Dedup::Labeled;
  /// Every reduced word within the depth, with its seed digest.
  std::map<MutationWord, std::string> digests;
  /// Canonical strings of the unfrozen cluster variables seen so far.
  std::vector<std::string> variables;
  /// Cumulative distinct-variable count after each depth 0..D.
  std::vector<std::size_t> variables_by_depth;
  /// (word, earlier word with the same digest).
  std::vector<std::pair<MutationWord, MutationWord>> repeats;
};

/// Labeled digest: cluster tuple and B̃ in order. Unlabeled digest: unfrozen
/// variables sorted, with B̃ permuted to match.
std::string seed_digest(const Seed& seed, Dedup dedup);

ExplorationIndex explore(const ClusterPattern& pattern, std::size_t depth, Dedup dedup);

}  // namespace tropf::cli

#pragma once

#include <vector>

#include "plslab/rational.hpp"
#include "plslab/table.hpp"

namespace plslab {

/// Open facilities (MUFL) or chosen means (DKM) as sorted, distinct indices,
/// together with their exact cost. Built through the owning instance so the
/// cost is always the recomputed one.
struct SolutionSet {
  std::vector<Index> members;
  Cost cost;

  bool contains(Index i) const;
  Index size() const noexcept { return members.size(); }

  friend bool operator==(const SolutionSet& a, const SolutionSet& b) { return a.members == b.members; }
  friend auto operator<=>(const SolutionSet& a, const SolutionSet& b) { return a.members <=> b.members; }
};

/// Sorts and checks `members` against [0, universe); throws on duplicates or
/// out-of-range indices.
std::vector<Index> normalized_members(std::vector<Index> members, Index universe);

}  // namespace plslab

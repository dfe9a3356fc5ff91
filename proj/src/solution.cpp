#include "plslab/solution.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace plslab {

bool SolutionSet::contains(Index i) const { return std::binary_search(members.begin(), members.end(), i); }

std::vector<Index> normalized_members(std::vector<Index> members, Index universe) {
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw std::invalid_argument("solution lists an index twice");
  if (!members.empty() && members.back() >= universe)
    throw std::invalid_argument("solution index " + std::to_string(members.back()) + " out of range (size " +
                                std::to_string(universe) + ")");
  return members;
}

}  // namespace plslab

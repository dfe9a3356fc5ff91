#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plslab/dkm.hpp"
#include "plslab/mufl.hpp"
#include "plslab/sat.hpp"

namespace plslab {

/// Role of a site in a reduced instance: a literal x_n / ~x_n or a clause b_m.
struct SiteLabel {
  enum class Role { positive_literal, negative_literal, clause };
  Role role = Role::positive_literal;
  Index index = 1;  // n for literals, m for clauses (1-based)

  /// "x3", "-x3" or "b2".
  std::string str() const;
  static SiteLabel parse(std::string_view text);

  friend bool operator==(const SiteLabel&, const SiteLabel&) = default;
};

/// Site order used by both reductions: x_1, ~x_1, ..., x_N, ~x_N, b_1, ..., b_M.
std::vector<SiteLabel> reduction_sites(const SatInstance& instance);

/// Index of a literal's site (and facility) in reduced instances.
inline Index literal_site(const Literal& x) { return 2 * (x.variable - 1) + (x.negated ? 1 : 0); }

/// The separation constant c; any rational strictly inside (1, 2).
inline Rational default_separation() { return Rational(3, 2); }
/// Throws std::invalid_argument unless 1 < c < 2.
void check_separation(const Rational& c);

/// Throws std::invalid_argument unless the instance has at least two clauses.
void check_reducible(const SatInstance& instance);

/// epsilon = 1 / (4N + 2M) of the K-means construction.
Rational dkm_epsilon(const SatInstance& instance);

/// Unweighted metric facility location instance: every site is a client,
/// literal sites are facilities with opening cost 2.
MuflInstance build_mufl(const SatInstance& instance, const Rational& c = default_separation());

/// Discrete K-means instance with K = N over the same sites.
DkmInstance build_dkm(const SatInstance& instance, const Rational& c = default_separation());

/// T_O: x_n is true iff the site of x_n is in O. Clause sites are ignored.
Assignment map_solution(std::span<const Index> members, Index num_variables);
inline Assignment map_solution_mufl(const SolutionSet& o, Index num_variables) {
  return map_solution(o.members, num_variables);
}
/// As map_solution, but rejects |O| != N (the DKM cardinality bound).
Assignment map_solution_dkm(const SolutionSet& o, Index num_variables);

/// Exactly one literal site per variable and nothing else.
bool is_reasonable(std::span<const Index> members, Index num_variables);
inline bool is_reasonable(const SolutionSet& o, Index num_variables) { return is_reasonable(o.members, num_variables); }

/// The reasonable set whose image under map_solution is `t`.
std::vector<Index> reasonable_members(const Assignment& t);

/// Closed-form phi_FL of a reasonable solution:
/// 3N + M + (1/W) sum_B w + ((c - 1)/W) sum_{B_f(T_O)} w.
/// Throws std::invalid_argument when O is not reasonable.
Rational predicted_cost_reasonable(const SatInstance& instance, const Rational& c, const SolutionSet& o);

/// Closed-form phi_KM of a reasonable solution:
/// N + M(1 + 3 eps/2) + (eps/2W) sum_B w + (eps/2W)(c - 1) sum_{B_f(T_O)} w.
Rational predicted_cost_reasonable_dkm(const SatInstance& instance, const Rational& c, const SolutionSet& o);

}  // namespace plslab

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "plslab/dkm.hpp"
#include "plslab/mufl.hpp"
#include "plslab/sat.hpp"

namespace plslab {

inline constexpr std::uint64_t kDefaultSizeCap = std::uint64_t{1} << 20;

/// Number of feasible solutions: 2^N, 2^|F| - 1 and C(|C|, K). Saturates at
/// UINT64_MAX.
std::uint64_t feasible_count(const SatInstance& instance);
std::uint64_t feasible_count(const MuflInstance& instance);
std::uint64_t feasible_count(const DkmInstance& instance);

/// Every solution without a strictly improving neighbor, found by scanning
/// all feasible solutions. Throws CapExceeded when the feasible count is
/// above `size_cap`. Results are in increasing bitmask order.
std::vector<Assignment> enumerate_local_optima(const SatInstance& instance, std::uint64_t size_cap = kDefaultSizeCap);
std::vector<SolutionSet> enumerate_local_optima(const MuflInstance& instance,
                                                std::uint64_t size_cap = kDefaultSizeCap);
std::vector<SolutionSet> enumerate_local_optima(const DkmInstance& instance,
                                                std::uint64_t size_cap = kDefaultSizeCap);

enum class ReductionTarget { mufl, dkm };
const char* to_string(ReductionTarget target);
ReductionTarget parse_target(std::string_view text);

namespace claims {
inline constexpr const char* kLocalOptimaReasonable = "local_optima_reasonable";
inline constexpr const char* kLocalOptimumCorrespondence = "local_optimum_correspondence";
inline constexpr const char* kClosedFormCost = "closed_form_cost";
inline constexpr const char* kOrderReversal = "order_reversal";
}  // namespace claims

struct ClaimViolation {
  std::string claim;
  std::string witness;
  std::string detail;
};

struct OracleReport {
  std::string instance_summary;
  ReductionTarget target = ReductionTarget::mufl;
  std::uint64_t solutions_scanned = 0;
  std::uint64_t local_optima = 0;
  std::uint64_t reasonable_local_optima = 0;
  std::uint64_t reasonable_solutions = 0;
  std::uint64_t reasonable_pairs = 0;
  std::vector<ClaimViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks, on the reduced instance of `sat`:
///  (a) every local optimum is reasonable,
///  (b) the assignment of every local optimum is a SAT/Flip local optimum,
///  (c) the closed-form cost equals the direct cost of every reasonable set,
///  (d) SAT weight order is the reverse of cost order over reasonable pairs.
OracleReport verify_reduction(const SatInstance& sat, const Rational& c, ReductionTarget target,
                              std::uint64_t size_cap = kDefaultSizeCap);
/// Same checks against a caller-supplied reduced instance (for instance one
/// loaded from disk, possibly altered).
OracleReport verify_reduction(const SatInstance& sat, const Rational& c, const MuflInstance& reduced,
                              std::uint64_t size_cap = kDefaultSizeCap);
OracleReport verify_reduction(const SatInstance& sat, const Rational& c, const DkmInstance& reduced,
                              std::uint64_t size_cap = kDefaultSizeCap);

/// Human-readable multi-line summary.
std::string summary(const OracleReport& report);

/// Uniform integer in [0, bound) by rejection; stable across standard
/// libraries, unlike std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

struct RandomSatSpec {
  Index min_variables = 2;
  Index max_variables = 5;
  Index min_clauses = 2;
  Index max_clauses = 8;
  std::uint64_t max_weight = 9;
};

/// Clauses over uniformly drawn distinct variable pairs with uniform
/// polarities and weights in [1, max_weight].
SatInstance random_sat_instance(std::mt19937_64& rng, const RandomSatSpec& spec = {});

}  // namespace plslab

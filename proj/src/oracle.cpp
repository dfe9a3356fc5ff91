#include "plslab/oracle.hpp"

#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "plslab/errors.hpp"
#include "plslab/reduction.hpp"

namespace plslab {

namespace {

using Mask = std::uint64_t;
constexpr Index kMaxBits = 63;

std::vector<Index> members_of(Mask m) {
  std::vector<Index> out;
  while (m != 0) {
    out.push_back(static_cast<Index>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

void check_cap(std::uint64_t count, std::uint64_t cap, const char* what) {
  if (count > cap)
    throw CapExceeded(std::string(what) + " has " + std::to_string(count) + " feasible solutions, cap is " +
                      std::to_string(cap));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t pow2_minus(Index bits, std::uint64_t minus) {
  if (bits >= 64) return std::numeric_limits<std::uint64_t>::max();
  return (std::uint64_t{1} << bits) - minus;
}

/// Next mask with the same popcount (Gosper).
Mask next_combination(Mask v) {
  const Mask t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

Assignment assignment_of(Mask m, Index n) {
  std::vector<bool> v(n);
  for (Index i = 0; i < n; ++i) v[i] = ((m >> i) & 1U) != 0;
  return Assignment(std::move(v));
}

}  // namespace

std::uint64_t feasible_count(const SatInstance& instance) { return pow2_minus(instance.num_variables(), 0); }
std::uint64_t feasible_count(const MuflInstance& instance) { return pow2_minus(instance.num_facilities(), 1); }
std::uint64_t feasible_count(const DkmInstance& instance) { return binomial(instance.num_points(), instance.k()); }

std::vector<Assignment> enumerate_local_optima(const SatInstance& instance, std::uint64_t size_cap) {
  check_cap(feasible_count(instance), size_cap, "SAT instance");
  const Index n = instance.num_variables();
  if (n > kMaxBits) throw CapExceeded("SAT enumeration supports at most 63 variables");
  const Mask total = Mask{1} << n;
  std::vector<Integer> weight(total);
  for (Mask m = 0; m < total; ++m) weight[m] = sat_cost(instance, assignment_of(m, n));
  std::vector<Assignment> out;
  for (Mask m = 0; m < total; ++m) {
    bool optimal = true;
    for (Index i = 0; i < n && optimal; ++i) optimal = !(weight[m ^ (Mask{1} << i)] > weight[m]);
    if (optimal) out.push_back(assignment_of(m, n));
  }
  return out;
}

std::vector<SolutionSet> enumerate_local_optima(const MuflInstance& instance, std::uint64_t size_cap) {
  check_cap(feasible_count(instance), size_cap, "facility location instance");
  const Index nf = instance.num_facilities();
  if (nf > kMaxBits) throw CapExceeded("facility location enumeration supports at most 63 facilities");
  const Mask total = Mask{1} << nf;
  std::vector<Cost> cost(total);
  cost[0] = Cost::infinity();
  for (Mask m = 1; m < total; ++m) cost[m] = phi_fl(instance, members_of(m));

  std::vector<SolutionSet> out;
  const Mask all = total - 1;
  for (Mask m = 1; m < total; ++m) {
    const Cost& here = cost[m];
    bool optimal = true;
    // single open or close (never to the empty set)
    for (Index i = 0; i < nf && optimal; ++i) {
      const Mask nb = m ^ (Mask{1} << i);
      if (nb != 0 && cost[nb] < here) optimal = false;
    }
    // exchange one open for one closed
    for (Mask in = m; in != 0 && optimal; in &= in - 1) {
      const Mask o = in & -in;
      for (Mask out_bits = all & ~m; out_bits != 0 && optimal; out_bits &= out_bits - 1) {
        const Mask c = out_bits & -out_bits;
        if (cost[(m ^ o) | c] < here) optimal = false;
      }
    }
    if (optimal) out.push_back(SolutionSet{members_of(m), here});
  }
  return out;
}

std::vector<SolutionSet> enumerate_local_optima(const DkmInstance& instance, std::uint64_t size_cap) {
  check_cap(feasible_count(instance), size_cap, "K-means instance");
  const Index n = instance.num_points();
  const Index k = instance.k();
  if (n > kMaxBits) throw CapExceeded("K-means enumeration supports at most 63 points");
  const Mask all = (Mask{1} << n) - 1;
  const Mask first = (Mask{1} << k) - 1;

  std::unordered_map<Mask, Rational> cost;
  cost.reserve(feasible_count(instance));
  const std::uint64_t count = feasible_count(instance);
  Mask m = first;
  for (std::uint64_t i = 0; i < count; ++i) {
    cost.emplace(m, phi_km(instance, members_of(m)));
    if (i + 1 < count) m = next_combination(m);
  }

  std::vector<std::pair<Mask, Rational>> optima;
  for (const auto& [m, here] : cost) {
    bool optimal = true;
    for (Mask in = m; in != 0 && optimal; in &= in - 1) {
      const Mask o = in & -in;
      for (Mask out_bits = all & ~m; out_bits != 0 && optimal; out_bits &= out_bits - 1) {
        const Mask c = out_bits & -out_bits;
        if (cost.at((m ^ o) | c) < here) optimal = false;
      }
    }
    if (optimal) optima.emplace_back(m, here);
  }
  std::sort(optima.begin(), optima.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SolutionSet> out;
  out.reserve(optima.size());
  for (auto& [m, c] : optima) out.push_back(SolutionSet{members_of(m), Cost(std::move(c))});
  return out;
}

const char* to_string(ReductionTarget target) { return target == ReductionTarget::mufl ? "mufl" : "dkm"; }

ReductionTarget parse_target(std::string_view text) {
  if (text == "mufl") return ReductionTarget::mufl;
  if (text == "dkm") return ReductionTarget::dkm;
  throw std::invalid_argument("target must be 'mufl' or 'dkm', got '" + std::string(text) + "'");
}

namespace {

bool sat_locally_optimal(const SatInstance& sat, const Assignment& t) {
  const Integer here = sat_cost(sat, t);
  for (Index n = 1; n <= t.size(); ++n)
    if (sat_cost(sat, t.flipped(n)) > here) return false;
  return true;
}

std::string describe(const std::vector<std::string>& labels, std::span<const Index> sites) {
  std::string out = "{";
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (i) out += ",";
    out += labels.at(sites[i]);
  }
  return out + "}";
}

std::string instance_summary(const SatInstance& sat) {
  return "N=" + std::to_string(sat.num_variables()) + " M=" + std::to_string(sat.num_clauses()) +
         " w_max=" + sat.max_weight().str() + " W=" + sat.normalizer().str();
}

void check_shape(const SatInstance& sat, Index sites) {
  if (sites != 2 * sat.num_variables() + sat.num_clauses())
    throw std::invalid_argument("reduced instance has " + std::to_string(sites) + " sites, expected 2N+M = " +
                                std::to_string(2 * sat.num_variables() + sat.num_clauses()));
}

/// Claims shared by both targets. `site_of_solution` maps a solution's
/// members to site indices; `cost_of` returns the direct objective of a
/// reasonable member list and `predict` its closed form.
template <typename Opt, typename SiteFn, typename CostFn, typename PredictFn>
void check_claims(OracleReport& report, const SatInstance& sat, const std::vector<std::string>& labels,
                  const std::vector<Opt>& optima, SiteFn site_of_solution, CostFn cost_of, PredictFn predict) {
  const Index n = sat.num_variables();
  report.local_optima = optima.size();
  for (const auto& o : optima) {
    const std::vector<Index> sites = site_of_solution(o);
    if (is_reasonable(sites, n)) {
      ++report.reasonable_local_optima;
    } else {
      report.violations.push_back({claims::kLocalOptimaReasonable, describe(labels, sites), "local optimum is not reasonable"});
    }
    const Assignment t = map_solution(sites, n);
    if (!sat_locally_optimal(sat, t))
      report.violations.push_back({claims::kLocalOptimumCorrespondence, describe(labels, sites),
                                   "T_O = " + t.to_bits() + " has an improving flip"});
  }

  struct Reasonable {
    std::vector<Index> sites;
    Integer weight;
    Rational cost;
  };
  std::vector<Reasonable> reasonable;
  const Mask total = Mask{1} << n;
  for (Mask m = 0; m < total; ++m) {
    const Assignment t = assignment_of(m, n);
    std::vector<Index> sites = reasonable_members(t);
    std::sort(sites.begin(), sites.end());
    Rational direct = cost_of(sites);
    Rational closed = predict(sites);
    if (direct != closed)
      report.violations.push_back({claims::kClosedFormCost, describe(labels, sites),
                                   "direct " + to_string(direct) + " != closed form " + to_string(closed)});
    reasonable.push_back({std::move(sites), sat_cost(sat, t), std::move(direct)});
  }
  report.reasonable_solutions = reasonable.size();
  for (const auto& a : reasonable) {
    for (const auto& b : reasonable) {
      ++report.reasonable_pairs;
      if ((a.weight < b.weight) != (a.cost > b.cost))
        report.violations.push_back({claims::kOrderReversal, describe(labels, a.sites) + " vs " + describe(labels, b.sites),
                                     "w " + a.weight.str() + " vs " + b.weight.str() + ", cost " + to_string(a.cost) +
                                         " vs " + to_string(b.cost)});
    }
  }
}

}  // namespace

OracleReport verify_reduction(const SatInstance& sat, const Rational& c, const MuflInstance& reduced,
                              std::uint64_t size_cap) {
  check_shape(sat, reduced.num_sites());
  if (reduced.num_facilities() != 2 * sat.num_variables())
    throw std::invalid_argument("reduced facility location instance must have 2N facilities");
  for (Index f = 0; f < reduced.num_facilities(); ++f)
    if (reduced.facilities()[f] != f)
      throw std::invalid_argument("reduced facility location instance must list literal sites as facilities in order");
  if (sat.num_variables() > kMaxBits) throw CapExceeded("too many variables to enumerate");
  OracleReport report;
  report.target = ReductionTarget::mufl;
  report.instance_summary = instance_summary(sat) + " c=" + to_string(c);
  report.solutions_scanned = feasible_count(reduced);
  const auto optima = enumerate_local_optima(reduced, size_cap);
  const auto& labels = reduced.sites();
  check_claims(
      report, sat, labels, optima,
      [&](const SolutionSet& o) {
        std::vector<Index> sites;
        for (const Index f : o.members) sites.push_back(reduced.facilities()[f]);
        return sites;
      },
      [&](const std::vector<Index>& sites) {
        // literal sites are facilities in the same order
        const Cost cost = reduced.solution(sites).cost;
        return cost.value();
      },
      [&](const std::vector<Index>& sites) {
        return predicted_cost_reasonable(sat, c, SolutionSet{sites, Cost{}});
      });
  return report;
}

OracleReport verify_reduction(const SatInstance& sat, const Rational& c, const DkmInstance& reduced,
                              std::uint64_t size_cap) {
  check_shape(sat, reduced.num_points());
  if (reduced.k() != sat.num_variables()) throw std::invalid_argument("reduced K-means instance must have K = N");
  OracleReport report;
  report.target = ReductionTarget::dkm;
  report.instance_summary = instance_summary(sat) + " c=" + to_string(c) + " eps=" + to_string(dkm_epsilon(sat));
  report.solutions_scanned = feasible_count(reduced);
  const auto optima = enumerate_local_optima(reduced, size_cap);
  check_claims(
      report, sat, reduced.points(), optima, [](const SolutionSet& o) { return o.members; },
      [&](const std::vector<Index>& sites) { return phi_km(reduced, sites); },
      [&](const std::vector<Index>& sites) {
        return predicted_cost_reasonable_dkm(sat, c, SolutionSet{sites, Cost{}});
      });
  return report;
}

OracleReport verify_reduction(const SatInstance& sat, const Rational& c, ReductionTarget target,
                              std::uint64_t size_cap) {
  if (target == ReductionTarget::mufl) return verify_reduction(sat, c, build_mufl(sat, c), size_cap);
  return verify_reduction(sat, c, build_dkm(sat, c), size_cap);
}

std::string summary(const OracleReport& report) {
  std::ostringstream out;
  out << "target: " << to_string(report.target) << " (" << report.instance_summary << ")\n"
      << "solutions scanned: " << report.solutions_scanned << "\n"
      << "local optima: " << report.local_optima << " (reasonable: " << report.reasonable_local_optima << ")\n"
      << "reasonable solutions: " << report.reasonable_solutions << ", pairs compared: " << report.reasonable_pairs
      << "\n"
      << "violations: " << report.violations.size() << "\n";
  for (const auto& v : report.violations) out << "  " << v.claim << " " << v.witness << ": " << v.detail << "\n";
  return out.str();
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

SatInstance random_sat_instance(std::mt19937_64& rng, const RandomSatSpec& spec) {
  if (spec.min_variables < 2 || spec.max_variables < spec.min_variables)
    throw std::invalid_argument("random instances need at least 2 variables");
  if (spec.max_clauses < spec.min_clauses || spec.max_weight < 1)
    throw std::invalid_argument("bad random instance ranges");
  const Index n = spec.min_variables + uniform_below(rng, spec.max_variables - spec.min_variables + 1);
  const Index m = spec.min_clauses + uniform_below(rng, spec.max_clauses - spec.min_clauses + 1);
  std::vector<Clause> clauses;
  clauses.reserve(m);
  for (Index j = 0; j < m; ++j) {
    const Index a = 1 + uniform_below(rng, n);
    Index b = 1 + uniform_below(rng, n - 1);
    if (b >= a) ++b;
    Clause cl;
    cl.literals[0] = Literal{a, uniform_below(rng, 2) == 1};
    cl.literals[1] = Literal{b, uniform_below(rng, 2) == 1};
    cl.weight = Integer(1 + uniform_below(rng, spec.max_weight));
    clauses.push_back(std::move(cl));
  }
  return SatInstance(n, std::move(clauses));
}

}  // namespace plslab

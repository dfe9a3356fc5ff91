#include "plslab/reduction.hpp"

#include <stdexcept>

#include "plslab/errors.hpp"

namespace plslab {

std::string SiteLabel::str() const {
  switch (role) {
    case Role::positive_literal:
      return "x" + std::to_string(index);
    case Role::negative_literal:
      return "-x" + std::to_string(index);
    case Role::clause:
      break;
  }
  return "b" + std::to_string(index);
}

SiteLabel SiteLabel::parse(std::string_view text) {
  SiteLabel out;
  std::string_view rest = text;
  if (rest.starts_with("-x")) {
    out.role = Role::negative_literal;
    rest.remove_prefix(2);
  } else if (rest.starts_with("x")) {
    out.role = Role::positive_literal;
    rest.remove_prefix(1);
  } else if (rest.starts_with("b")) {
    out.role = Role::clause;
    rest.remove_prefix(1);
  } else {
    throw ParseError("bad site label '" + std::string(text) + "'");
  }
  const Integer n = parse_integer(rest);
  if (n < 1 || rest.starts_with('+') || rest.starts_with('-'))
    throw ParseError("bad site label '" + std::string(text) + "'");
  out.index = n.convert_to<Index>();
  return out;
}

std::vector<SiteLabel> reduction_sites(const SatInstance& instance) {
  std::vector<SiteLabel> out;
  for (Index n = 1; n <= instance.num_variables(); ++n) {
    out.push_back({SiteLabel::Role::positive_literal, n});
    out.push_back({SiteLabel::Role::negative_literal, n});
  }
  for (Index m = 1; m <= instance.num_clauses(); ++m) out.push_back({SiteLabel::Role::clause, m});
  return out;
}

void check_separation(const Rational& c) {
  if (!(c > 1 && c < 2)) throw std::invalid_argument("c = " + to_string(c) + " must satisfy 1 < c < 2");
}

void check_reducible(const SatInstance& instance) {
  if (instance.num_clauses() < 2)
    throw std::invalid_argument("reduction needs at least 2 clauses, instance has " +
                                std::to_string(instance.num_clauses()));
}

Rational dkm_epsilon(const SatInstance& instance) {
  return Rational(1, 4 * static_cast<long long>(instance.num_variables()) +
                         2 * static_cast<long long>(instance.num_clauses()));
}

namespace {

Literal literal_of(Index site) { return Literal{site / 2 + 1, site % 2 == 1}; }

/// Fills a symmetric table over reduction_sites() from the five distance
/// cases. `in_clause(w)` and `negation_in_clause(w)` give the literal-clause
/// distances; everything else not covered is `far`.
template <typename InClause, typename NegationInClause>
RationalMatrix reduced_table(const SatInstance& instance, const Rational& far, InClause in_clause,
                             NegationInClause negation_in_clause) {
  const Index literals = 2 * instance.num_variables();
  const auto n = static_cast<Eigen::Index>(literals + instance.num_clauses());
  RationalMatrix d(n, n);
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index q = 0; q <= p; ++q) {
      Rational v;
      const auto pi = static_cast<Index>(p);
      const auto qi = static_cast<Index>(q);
      if (p == q) {
        v = 0;
      } else if (pi < literals && qi < literals) {
        v = (pi / 2 == qi / 2) ? Rational(1) : far;
      } else if (pi >= literals && qi >= literals) {
        v = far;
      } else {
        const Index lit_site = std::min(pi, qi);
        const Clause& b = instance.clauses()[std::max(pi, qi) - literals];
        const Literal x = literal_of(lit_site);
        const Rational w(b.weight);
        if (b.contains(x))
          v = in_clause(w);
        else if (b.contains(~x))
          v = negation_in_clause(w);
        else
          v = far;
      }
      d(p, q) = v;
      d(q, p) = v;
    }
  }
  return d;
}

std::vector<std::string> label_strings(const SatInstance& instance) {
  std::vector<std::string> out;
  for (const auto& s : reduction_sites(instance)) out.push_back(s.str());
  return out;
}

Integer falsified_weight(const SatInstance& instance, const Assignment& t) {
  Integer total{0};
  for (const Clause& b : partition_clauses(instance, t).falsified) total += b.weight;
  return total;
}

}  // namespace

MuflInstance build_mufl(const SatInstance& instance, const Rational& c) {
  check_reducible(instance);
  check_separation(c);
  const Rational W(instance.normalizer());
  RationalMatrix d = reduced_table(
      instance, Rational(2), [&](const Rational& w) -> Rational { return 1 + w / W; },
      [&](const Rational& w) -> Rational { return 1 + c * w / W; });

  const Index literals = 2 * instance.num_variables();
  std::vector<Index> clients(literals + instance.num_clauses());
  for (Index i = 0; i < clients.size(); ++i) clients[i] = i;
  std::vector<Index> facilities(literals);
  for (Index i = 0; i < literals; ++i) facilities[i] = i;
  std::vector<Rational> opening(literals, Rational(2));
  return MuflInstance(label_strings(instance), std::move(clients), std::move(facilities), std::move(opening),
                      std::move(d));
}

DkmInstance build_dkm(const SatInstance& instance, const Rational& c) {
  check_reducible(instance);
  check_separation(c);
  const Rational W(instance.normalizer());
  const Rational eps = dkm_epsilon(instance);
  const Rational three_halves(3, 2);
  RationalMatrix d = reduced_table(
      instance, 1 + 2 * eps, [&](const Rational& w) -> Rational { return 1 + eps * (three_halves + w / (2 * W)); },
      [&](const Rational& w) -> Rational { return 1 + eps * (three_halves + c * w / (2 * W)); });
  return DkmInstance(label_strings(instance), instance.num_variables(), std::move(d));
}

Assignment map_solution(std::span<const Index> members, Index num_variables) {
  Assignment t = Assignment::all(num_variables, false);
  for (const Index site : members)
    if (site < 2 * num_variables && site % 2 == 0) t.set(site / 2 + 1, true);
  return t;
}

Assignment map_solution_dkm(const SolutionSet& o, Index num_variables) {
  if (o.size() != num_variables)
    throw std::invalid_argument("|O| = " + std::to_string(o.size()) + " but K = N = " + std::to_string(num_variables));
  return map_solution(o.members, num_variables);
}

bool is_reasonable(std::span<const Index> members, Index num_variables) {
  if (members.size() != num_variables) return false;
  std::vector<bool> seen(num_variables, false);
  for (const Index site : members) {
    if (site >= 2 * num_variables) return false;
    if (seen[site / 2]) return false;
    seen[site / 2] = true;
  }
  return true;
}

std::vector<Index> reasonable_members(const Assignment& t) {
  std::vector<Index> out;
  out.reserve(t.size());
  for (Index n = 1; n <= t.size(); ++n) out.push_back(literal_site(Literal{n, !t.value(n)}));
  return out;
}

Rational predicted_cost_reasonable(const SatInstance& instance, const Rational& c, const SolutionSet& o) {
  check_separation(c);
  if (!is_reasonable(o, instance.num_variables())) throw std::invalid_argument("solution is not reasonable");
  const Rational W(instance.normalizer());
  const Assignment t = map_solution_mufl(o, instance.num_variables());
  return Rational(3 * static_cast<long long>(instance.num_variables()) +
                  static_cast<long long>(instance.num_clauses())) +
         Rational(instance.total_weight()) / W + (c - 1) / W * Rational(falsified_weight(instance, t));
}

Rational predicted_cost_reasonable_dkm(const SatInstance& instance, const Rational& c, const SolutionSet& o) {
  check_separation(c);
  if (!is_reasonable(o, instance.num_variables())) throw std::invalid_argument("solution is not reasonable");
  const Rational W(instance.normalizer());
  const Rational eps = dkm_epsilon(instance);
  const Assignment t = map_solution(o.members, instance.num_variables());
  const Rational scale = eps / (2 * W);
  return Rational(static_cast<long long>(instance.num_variables())) +
         Rational(static_cast<long long>(instance.num_clauses())) * (1 + eps * Rational(3, 2)) +
         scale * Rational(instance.total_weight()) + scale * (c - 1) * Rational(falsified_weight(instance, t));
}

}  // namespace plslab

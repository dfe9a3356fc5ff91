#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "plslab/problems.hpp"

namespace plslab {

enum class PivotRule { best_improvement, first_improvement };
enum class Termination { local_optimum, step_budget };

struct SearchConfig {
  PivotRule pivot = PivotRule::best_improvement;
  std::optional<std::size_t> max_steps;
  std::uint64_t seed = 0;
};

template <typename P>
concept LocalSearchProblem = requires(const P& p, const typename P::Solution& s, const typename P::Move& m,
                                      const typename P::Objective& v) {
  p.check_feasible(s);
  { p.objective(s) } -> std::convertible_to<typename P::Objective>;
  { p.moves(s) } -> std::convertible_to<std::vector<typename P::Move>>;
  { p.apply(s, m) } -> std::convertible_to<typename P::Solution>;
  { p.describe(m) } -> std::convertible_to<std::string>;
  { P::improves(v, v) } -> std::convertible_to<bool>;
};

template <LocalSearchProblem P>
struct Trajectory {
  struct Step {
    typename P::Solution solution;
    typename P::Objective cost;
    std::string move;
  };

  typename P::Solution start;
  typename P::Objective start_cost;
  std::vector<Step> steps;
  Termination terminated = Termination::local_optimum;

  const typename P::Solution& final_solution() const { return steps.empty() ? start : steps.back().solution; }
  const typename P::Objective& final_cost() const { return steps.empty() ? start_cost : steps.back().cost; }
};

namespace detail {

template <LocalSearchProblem P>
struct Candidate {
  typename P::Solution solution;
  typename P::Objective cost;
  typename P::Move move;
};

/// The neighbor chosen by the pivot rule, or nothing when no neighbor is
/// strictly better. Best improvement keeps the earliest move among ties.
template <LocalSearchProblem P>
std::optional<Candidate<P>> select_move(const P& problem, const typename P::Solution& current,
                                        const typename P::Objective& current_cost, PivotRule pivot) {
  std::optional<Candidate<P>> best;
  for (const auto& move : problem.moves(current)) {
    auto next = problem.apply(current, move);
    auto cost = problem.objective(next);
    if (!P::improves(cost, current_cost)) continue;
    if (!best || P::improves(cost, best->cost)) {
      best = Candidate<P>{std::move(next), std::move(cost), move};
      if (pivot == PivotRule::first_improvement) break;
    }
  }
  return best;
}

}  // namespace detail

/// Strict-improvement local search from `start`. Throws InfeasibleSolution
/// for an infeasible start.
template <LocalSearchProblem P>
Trajectory<P> local_search(const P& problem, typename P::Solution start, const SearchConfig& cfg = {}) {
  problem.check_feasible(start);
  Trajectory<P> out;
  out.start_cost = problem.objective(start);
  out.start = std::move(start);
  while (true) {
    const auto& current = out.final_solution();
    const auto& current_cost = out.final_cost();
    auto next = detail::select_move(problem, current, current_cost, cfg.pivot);
    if (!next) {
      out.terminated = Termination::local_optimum;
      return out;
    }
    if (cfg.max_steps && out.steps.size() >= *cfg.max_steps) {
      out.terminated = Termination::step_budget;
      return out;
    }
    out.steps.push_back({std::move(next->solution), std::move(next->cost), problem.describe(next->move)});
  }
}

/// True iff no neighbor strictly improves the objective.
template <LocalSearchProblem P>
bool is_local_optimum(const P& problem, const typename P::Solution& solution) {
  problem.check_feasible(solution);
  return !detail::select_move(problem, solution, problem.objective(solution), PivotRule::first_improvement);
}

/// One line per state: `step<TAB>cost<TAB>move`, starting with step 0 for the
/// start solution.
template <LocalSearchProblem P>
void write_trajectory_log(std::ostream& out, const Trajectory<P>& t) {
  out << 0 << '\t' << objective_string(t.start_cost) << '\t' << "start" << '\n';
  for (std::size_t i = 0; i < t.steps.size(); ++i)
    out << i + 1 << '\t' << objective_string(t.steps[i].cost) << '\t' << t.steps[i].move << '\n';
}

inline const char* to_string(Termination t) {
  return t == Termination::local_optimum ? "local_optimum" : "step_budget";
}
inline const char* to_string(PivotRule p) { return p == PivotRule::best_improvement ? "best" : "first"; }

}  // namespace plslab

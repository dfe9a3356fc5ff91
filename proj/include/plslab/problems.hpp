#pragma once

#include <string>
#include <vector>

#include "plslab/dkm.hpp"
#include "plslab/mufl.hpp"
#include "plslab/sat.hpp"

namespace plslab {

/// SAT/Flip, maximizing w(B, T). A move is the 1-based variable to flip.
class SatFlipProblem {
 public:
  using Solution = Assignment;
  using Objective = Integer;
  using Move = Index;

  explicit SatFlipProblem(const SatInstance& instance) : instance_(&instance) {}

  const SatInstance& instance() const noexcept { return *instance_; }
  void check_feasible(const Solution& t) const;
  Objective objective(const Solution& t) const { return sat_cost(*instance_, t); }
  std::vector<Move> moves(const Solution& t) const;
  Solution apply(const Solution& t, Move variable) const { return t.flipped(variable); }
  std::string describe(Move variable) const;
  static bool improves(const Objective& candidate, const Objective& incumbent) { return candidate > incumbent; }

 private:
  const SatInstance* instance_;
};

struct MuflMove {
  enum class Kind { close, open, swap };
  Kind kind;
  Index out = 0;  // facility closed (close, swap)
  Index in = 0;   // facility opened (open, swap)
};

/// MUFL/Swap, minimizing phi_FL. Moves are ordered closes, opens, swaps.
class MuflSwapProblem {
 public:
  using Solution = SolutionSet;
  using Objective = Cost;
  using Move = MuflMove;

  explicit MuflSwapProblem(const MuflInstance& instance) : instance_(&instance) {}

  const MuflInstance& instance() const noexcept { return *instance_; }
  void check_feasible(const Solution& o) const;
  Objective objective(const Solution& o) const { return o.cost; }
  std::vector<Move> moves(const Solution& o) const;
  Solution apply(const Solution& o, const Move& move) const;
  std::string describe(const Move& move) const;
  static bool improves(const Objective& candidate, const Objective& incumbent) { return candidate < incumbent; }

 private:
  const MuflInstance* instance_;
};

struct DkmMove {
  Index out = 0;
  Index in = 0;
};

/// DKM/Swap, minimizing phi_KM.
class DkmSwapProblem {
 public:
  using Solution = SolutionSet;
  using Objective = Rational;
  using Move = DkmMove;

  explicit DkmSwapProblem(const DkmInstance& instance) : instance_(&instance) {}

  const DkmInstance& instance() const noexcept { return *instance_; }
  void check_feasible(const Solution& o) const;
  Objective objective(const Solution& o) const { return o.cost.value(); }
  std::vector<Move> moves(const Solution& o) const;
  Solution apply(const Solution& o, const Move& move) const;
  std::string describe(const Move& move) const;
  static bool improves(const Objective& candidate, const Objective& incumbent) { return candidate < incumbent; }

 private:
  const DkmInstance* instance_;
};

inline std::string objective_string(const Integer& v) { return v.str(); }
inline std::string objective_string(const Rational& v) { return to_string(v); }
inline std::string objective_string(const Cost& v) { return to_string(v); }

}  // namespace plslab

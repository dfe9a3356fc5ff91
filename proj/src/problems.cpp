#include "plslab/problems.hpp"

#include <algorithm>

#include "plslab/errors.hpp"

namespace plslab {

void SatFlipProblem::check_feasible(const Solution& t) const {
  if (t.size() != instance_->num_variables())
    throw InfeasibleSolution("assignment length " + std::to_string(t.size()) + " != N = " +
                             std::to_string(instance_->num_variables()));
}

std::vector<SatFlipProblem::Move> SatFlipProblem::moves(const Solution& t) const {
  std::vector<Move> out(t.size());
  for (Index n = 0; n < t.size(); ++n) out[n] = n + 1;
  return out;
}

std::string SatFlipProblem::describe(Move variable) const { return "flip " + std::to_string(variable); }

void MuflSwapProblem::check_feasible(const Solution& o) const {
  if (o.members.empty()) throw InfeasibleSolution("facility location needs at least one open facility");
  if (o.members.back() >= instance_->num_facilities()) throw InfeasibleSolution("facility index out of range");
}

std::vector<MuflSwapProblem::Move> MuflSwapProblem::moves(const Solution& o) const {
  std::vector<Index> closed;
  for (Index f = 0; f < instance_->num_facilities(); ++f)
    if (!o.contains(f)) closed.push_back(f);
  std::vector<Move> out;
  if (o.size() > 1)
    for (const Index f : o.members) out.push_back({MuflMove::Kind::close, f, 0});
  for (const Index f : closed) out.push_back({MuflMove::Kind::open, 0, f});
  for (const Index f : o.members)
    for (const Index g : closed) out.push_back({MuflMove::Kind::swap, f, g});
  return out;
}

MuflSwapProblem::Solution MuflSwapProblem::apply(const Solution& o, const Move& move) const {
  std::vector<Index> m = o.members;
  switch (move.kind) {
    case MuflMove::Kind::close:
      m.erase(std::find(m.begin(), m.end(), move.out));
      break;
    case MuflMove::Kind::open:
      m.push_back(move.in);
      break;
    case MuflMove::Kind::swap:
      *std::find(m.begin(), m.end(), move.out) = move.in;
      break;
  }
  return instance_->solution(std::move(m));
}

std::string MuflSwapProblem::describe(const Move& move) const {
  const auto label = [&](Index f) { return instance_->sites()[instance_->facilities()[f]]; };
  switch (move.kind) {
    case MuflMove::Kind::close:
      return "close " + label(move.out);
    case MuflMove::Kind::open:
      return "open " + label(move.in);
    case MuflMove::Kind::swap:
      break;
  }
  return "swap " + label(move.out) + " " + label(move.in);
}

void DkmSwapProblem::check_feasible(const Solution& o) const {
  if (o.size() != instance_->k())
    throw InfeasibleSolution("|O| = " + std::to_string(o.size()) + " but K = " + std::to_string(instance_->k()));
  if (!o.members.empty() && o.members.back() >= instance_->num_points())
    throw InfeasibleSolution("point index out of range");
}

std::vector<DkmSwapProblem::Move> DkmSwapProblem::moves(const Solution& o) const {
  std::vector<Move> out;
  for (const Index p : o.members)
    for (Index q = 0; q < instance_->num_points(); ++q)
      if (!o.contains(q)) out.push_back({p, q});
  return out;
}

DkmSwapProblem::Solution DkmSwapProblem::apply(const Solution& o, const Move& move) const {
  std::vector<Index> m = o.members;
  *std::find(m.begin(), m.end(), move.out) = move.in;
  return instance_->solution(std::move(m));
}

std::string DkmSwapProblem::describe(const Move& move) const {
  return "swap " + instance_->points()[move.out] + " " + instance_->points()[move.in];
}

}  // namespace plslab

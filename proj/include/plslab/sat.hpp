#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plslab/rational.hpp"
#include "plslab/table.hpp"

namespace plslab {

class Assignment;

/// x_n or its negation; variables are numbered from 1.
struct Literal {
  Index variable = 1;
  bool negated = false;

  Literal operator~() const { return {variable, !negated}; }
  bool satisfied_by(const Assignment& t) const;

  /// DIMACS form: +n or -n.
  long long dimacs() const { return negated ? -static_cast<long long>(variable) : static_cast<long long>(variable); }

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Clause {
  std::array<Literal, 2> literals;
  Integer weight{1};

  bool contains(const Literal& x) const { return literals[0] == x || literals[1] == x; }
  bool satisfied_by(const Assignment& t) const {
    return literals[0].satisfied_by(t) || literals[1].satisfied_by(t);
  }

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Truth value per variable 1..N.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}
  static Assignment all(Index num_variables, bool value) { return Assignment(std::vector<bool>(num_variables, value)); }

  Index size() const noexcept { return values_.size(); }
  bool value(Index variable) const { return values_.at(variable - 1); }
  void set(Index variable, bool v) { values_.at(variable - 1) = v; }
  Assignment flipped(Index variable) const {
    Assignment out = *this;
    out.set(variable, !value(variable));
    return out;
  }

  /// '1'/'0' per variable, variable 1 first.
  std::string to_bits() const;
  static Assignment from_bits(std::string_view bits);

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment& a, const Assignment& b) { return a.values_ <=> b.values_; }

 private:
  std::vector<bool> values_;
};

inline bool Literal::satisfied_by(const Assignment& t) const { return t.value(variable) != negated; }

/// Weighted Max 2-SAT instance. Clauses keep file order and may repeat.
class SatInstance {
 public:
  SatInstance() = default;
  /// Throws std::invalid_argument on out-of-range variables, a clause over a
  /// single variable, or a weight below one.
  SatInstance(Index num_variables, std::vector<Clause> clauses);

  Index num_variables() const noexcept { return num_variables_; }
  Index num_clauses() const noexcept { return clauses_.size(); }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }

  /// w_max; zero for an empty clause list.
  const Integer& max_weight() const noexcept { return max_weight_; }
  const Integer& min_weight() const noexcept { return min_weight_; }
  const Integer& total_weight() const noexcept { return total_weight_; }
  /// W = M * w_max.
  Integer normalizer() const { return Integer(num_clauses()) * max_weight_; }

 private:
  Index num_variables_ = 0;
  std::vector<Clause> clauses_;
  Integer max_weight_{0};
  Integer min_weight_{0};
  Integer total_weight_{0};
};

/// Reads the WCNF dialect: `c` comments, `p wcnf N M`, then M lines `w l1 l2 0`.
SatInstance parse_wcnf(std::string_view text);
std::string serialize_wcnf(const SatInstance& instance);

/// w(B, T): total weight of satisfied clauses.
Integer sat_cost(const SatInstance& instance, const Assignment& t);

struct ClausePartition {
  std::vector<Clause> satisfied;
  std::vector<Clause> falsified;
};
/// (B_t(T), B_f(T)) in instance order.
ClausePartition partition_clauses(const SatInstance& instance, const Assignment& t);

/// B(x): clauses containing literal x (polarity-sensitive).
std::vector<Clause> clauses_with_literal(const SatInstance& instance, const Literal& x);

/// All assignments at Hamming distance one, ordered by flipped variable.
std::vector<Assignment> flip_neighbors(const Assignment& t);

}  // namespace plslab

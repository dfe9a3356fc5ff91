#include "plslab/sat.hpp"

#include <sstream>
#include <stdexcept>

#include "plslab/errors.hpp"

namespace plslab {

std::string Assignment::to_bits() const {
  std::string out;
  out.reserve(values_.size());
  for (const bool v : values_) out.push_back(v ? '1' : '0');
  return out;
}

Assignment Assignment::from_bits(std::string_view bits) {
  std::vector<bool> values;
  values.reserve(bits.size());
  for (const char ch : bits) {
    if (ch != '0' && ch != '1') throw ParseError("assignment must be a 0/1 string: '" + std::string(bits) + "'");
    values.push_back(ch == '1');
  }
  return Assignment(std::move(values));
}

SatInstance::SatInstance(Index num_variables, std::vector<Clause> clauses)
    : num_variables_(num_variables), clauses_(std::move(clauses)) {
  for (Index m = 0; m < clauses_.size(); ++m) {
    const Clause& b = clauses_[m];
    const std::string where = "clause " + std::to_string(m + 1) + ": ";
    for (const Literal& x : b.literals)
      if (x.variable < 1 || x.variable > num_variables_)
        throw std::invalid_argument(where + "variable " + std::to_string(x.variable) + " out of range");
    if (b.literals[0].variable == b.literals[1].variable)
      throw std::invalid_argument(where + "both literals over variable " + std::to_string(b.literals[0].variable));
    if (b.weight < 1) throw std::invalid_argument(where + "weight must be positive");
    if (m == 0 || b.weight > max_weight_) max_weight_ = b.weight;
    if (m == 0 || b.weight < min_weight_) min_weight_ = b.weight;
    total_weight_ += b.weight;
  }
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

Index parse_count(const std::string& tok, std::size_t line, const char* what) {
  const Integer v = [&] {
    try {
      return parse_integer(tok);
    } catch (const ParseError&) {
      throw ParseError(std::string("bad ") + what + " '" + tok + "'", line);
    }
  }();
  if (v < 0 || v > Integer(std::numeric_limits<std::int32_t>::max()))
    throw ParseError(std::string(what) + " out of range", line);
  return v.convert_to<Index>();
}

}  // namespace

SatInstance parse_wcnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  Index num_vars = 0;
  Index num_clauses = 0;
  std::vector<Clause> clauses;

  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = tokens_of(line);
    if (toks.empty() || toks.front() == "c" || toks.front().front() == 'c') continue;
    if (!have_header) {
      if (toks.size() != 4 || toks[0] != "p" || toks[1] != "wcnf")
        throw ParseError("expected header 'p wcnf <N> <M>'", line_no);
      num_vars = parse_count(toks[2], line_no, "variable count");
      num_clauses = parse_count(toks[3], line_no, "clause count");
      have_header = true;
      continue;
    }
    if (toks.front() == "p") throw ParseError("duplicate header", line_no);
    if (clauses.size() == num_clauses) throw ParseError("more clauses than declared in header", line_no);
    if (toks.back() != "0") throw ParseError("clause line must end with 0", line_no);
    if (toks.size() != 4) throw ParseError("clause must have exactly 2 literals", line_no);

    Clause b;
    try {
      b.weight = parse_integer(toks[0]);
    } catch (const ParseError&) {
      throw ParseError("bad weight '" + toks[0] + "'", line_no);
    }
    if (b.weight < 1) throw ParseError("weight must be >= 1", line_no);
    for (int k = 0; k < 2; ++k) {
      Integer lit;
      try {
        lit = parse_integer(toks[1 + k]);
      } catch (const ParseError&) {
        throw ParseError("bad literal '" + toks[1 + k] + "'", line_no);
      }
      if (lit == 0 || abs(lit) > Integer(num_vars))
        throw ParseError("literal " + toks[1 + k] + " out of range 1.." + std::to_string(num_vars), line_no);
      b.literals[k] = Literal{abs(lit).convert_to<Index>(), lit < 0};
    }
    if (b.literals[0].variable == b.literals[1].variable)
      throw ParseError("clause over a single variable", line_no);
    clauses.push_back(std::move(b));
  }
  if (!have_header) throw ParseError("missing header 'p wcnf <N> <M>'");
  if (clauses.size() != num_clauses)
    throw ParseError("header declares " + std::to_string(num_clauses) + " clauses, found " +
                     std::to_string(clauses.size()));
  return SatInstance(num_vars, std::move(clauses));
}

std::string serialize_wcnf(const SatInstance& instance) {
  std::ostringstream out;
  out << "p wcnf " << instance.num_variables() << ' ' << instance.num_clauses() << '\n';
  for (const Clause& b : instance.clauses())
    out << b.weight.str() << ' ' << b.literals[0].dimacs() << ' ' << b.literals[1].dimacs() << " 0\n";
  return out.str();
}

namespace {

void check_length(const SatInstance& instance, const Assignment& t) {
  if (t.size() != instance.num_variables())
    throw std::invalid_argument("assignment has " + std::to_string(t.size()) + " values, instance has " +
                                std::to_string(instance.num_variables()) + " variables");
}

}  // namespace

Integer sat_cost(const SatInstance& instance, const Assignment& t) {
  check_length(instance, t);
  Integer total{0};
  for (const Clause& b : instance.clauses())
    if (b.satisfied_by(t)) total += b.weight;
  return total;
}

ClausePartition partition_clauses(const SatInstance& instance, const Assignment& t) {
  check_length(instance, t);
  ClausePartition out;
  for (const Clause& b : instance.clauses()) (b.satisfied_by(t) ? out.satisfied : out.falsified).push_back(b);
  return out;
}

std::vector<Clause> clauses_with_literal(const SatInstance& instance, const Literal& x) {
  std::vector<Clause> out;
  for (const Clause& b : instance.clauses())
    if (b.contains(x)) out.push_back(b);
  return out;
}

std::vector<Assignment> flip_neighbors(const Assignment& t) {
  std::vector<Assignment> out;
  out.reserve(t.size());
  for (Index n = 1; n <= t.size(); ++n) out.push_back(t.flipped(n));
  return out;
}

}  // namespace plslab

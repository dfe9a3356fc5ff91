#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "plslab/rational.hpp"

namespace plslab {

using Index = std::size_t;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalMatrix = Matrix<Rational>;

/// Entries of `values` and `extras` rewritten over their least common
/// denominator, so sums of table entries become integer sums.
template <typename Int>
struct ScaledEntries {
  Matrix<Int> table;
  std::vector<Int> extras;
};

/// Common-denominator view of an exact rational table. The numerators are
/// held as int64 when every sum of at most `max_terms` entries provably fits,
/// otherwise as arbitrary-precision integers.
class ScaledTable {
 public:
  ScaledTable() = default;
  ScaledTable(const RationalMatrix& values, std::span<const Rational> extras, std::size_t max_terms);

  const Integer& denominator() const noexcept { return denominator_; }
  bool is_small() const noexcept { return std::holds_alternative<ScaledEntries<std::int64_t>>(entries_); }

  /// Calls `fn(const ScaledEntries<Int>&)` with the active representation.
  template <typename Fn>
  decltype(auto) visit(Fn&& fn) const {
    return std::visit(std::forward<Fn>(fn), entries_);
  }

  Rational unscale(const Integer& numerator) const { return Rational(numerator, denominator_); }

 private:
  Integer denominator_{1};
  std::variant<ScaledEntries<std::int64_t>, ScaledEntries<Integer>> entries_;
};

/// Sum over all rows of the minimum of `table(row, col)` over `cols`.
/// `cols` must be nonempty.
template <typename Int>
Int sum_of_row_minima(const Matrix<Int>& table, std::span<const Index> cols) {
  Int total{0};
  for (Eigen::Index r = 0; r < table.rows(); ++r) {
    const Int* best = &table(r, static_cast<Eigen::Index>(cols.front()));
    for (const Index c : cols.subspan(1)) {
      const Int& v = table(r, static_cast<Eigen::Index>(c));
      if (v < *best) best = &v;
    }
    total += *best;
  }
  return total;
}

inline Integer to_integer(const Integer& v) { return v; }
inline Integer to_integer(std::int64_t v) { return Integer(v); }

/// Converts an exact table to binary64 (for the embedding module only).
Eigen::MatrixXd to_double(const RationalMatrix& values);

}  // namespace plslab

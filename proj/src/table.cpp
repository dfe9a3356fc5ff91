#include "plslab/table.hpp"

#include <boost/multiprecision/integer.hpp>

namespace plslab {

namespace {

template <typename Int>
ScaledEntries<Int> scale(const RationalMatrix& values, std::span<const Rational> extras, const Integer& lcm) {
  const auto to_int = [&](const Rational& v) {
    const Integer n = boost::multiprecision::numerator(v) * (lcm / boost::multiprecision::denominator(v));
    if constexpr (std::is_same_v<Int, Integer>) {
      return n;
    } else {
      return n.template convert_to<Int>();
    }
  };
  ScaledEntries<Int> out;
  out.table.resize(values.rows(), values.cols());
  for (Eigen::Index i = 0; i < values.rows(); ++i)
    for (Eigen::Index j = 0; j < values.cols(); ++j) out.table(i, j) = to_int(values(i, j));
  out.extras.reserve(extras.size());
  for (const auto& e : extras) out.extras.push_back(to_int(e));
  return out;
}

}  // namespace

ScaledTable::ScaledTable(const RationalMatrix& values, std::span<const Rational> extras, std::size_t max_terms) {
  Integer lcm{1};
  const auto absorb = [&](const Rational& v) {
    lcm = boost::multiprecision::lcm(lcm, Integer(boost::multiprecision::denominator(v)));
  };
  for (Eigen::Index i = 0; i < values.rows(); ++i)
    for (Eigen::Index j = 0; j < values.cols(); ++j) absorb(values(i, j));
  for (const auto& e : extras) absorb(e);
  denominator_ = lcm;

  Integer max_abs{0};
  const auto track = [&](const Rational& v) {
    Integer n = abs(boost::multiprecision::numerator(v)) * (lcm / boost::multiprecision::denominator(v));
    if (n > max_abs) max_abs = n;
  };
  for (Eigen::Index i = 0; i < values.rows(); ++i)
    for (Eigen::Index j = 0; j < values.cols(); ++j) track(values(i, j));
  for (const auto& e : extras) track(e);

  const Integer limit = Integer(1) << 62;
  if (max_abs * Integer(std::max<std::size_t>(max_terms, 1)) < limit)
    entries_ = scale<std::int64_t>(values, extras, lcm);
  else
    entries_ = scale<Integer>(values, extras, lcm);
}

Eigen::MatrixXd to_double(const RationalMatrix& values) {
  Eigen::MatrixXd out(values.rows(), values.cols());
  for (Eigen::Index i = 0; i < values.rows(); ++i)
    for (Eigen::Index j = 0; j < values.cols(); ++j) out(i, j) = values(i, j).convert_to<double>();
  return out;
}

}  // namespace plslab

#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace plslab {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// Parses "p/q" or "p" (optional leading '-') into a reduced rational.
Rational parse_rational(std::string_view text);

/// Reduced "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

Integer parse_integer(std::string_view text);

/// A rational extended by +infinity, used for objective values that can be
/// undefined (facility location with nothing open).
class Cost {
 public:
  Cost() = default;
  Cost(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  static Cost infinity() {
    Cost c;
    c.infinite_ = true;
    return c;
  }

  bool is_infinite() const noexcept { return infinite_; }
  /// Finite value; zero when infinite.
  const Rational& value() const noexcept { return value_; }

  friend bool operator==(const Cost& a, const Cost& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
  bool infinite_ = false;
};

/// "inf" for the infinite cost, otherwise the reduced fraction.
std::string to_string(const Cost& cost);

}  // namespace plslab

#include "plslab/rational.hpp"

#include <algorithm>
#include <cctype>

#include "plslab/errors.hpp"

namespace plslab {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) throw ParseError("not an integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const auto num_text = text.substr(0, slash);
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text))
    throw ParseError("not a rational: '" + std::string(text) + "'");
  Integer num = parse_integer(num_text);
  Integer den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const Cost& cost) {
  return cost.is_infinite() ? std::string("inf") : to_string(cost.value());
}

}  // namespace plslab

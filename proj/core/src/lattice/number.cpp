#include "tropmirror/lattice/number.hpp"

#include <cctype>

#include "tropmirror/error.hpp"

namespace tropmirror {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::MalformedInput, "not a rational: \"" + std::string(text) + "\"");
  const Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::MalformedInput, "zero denominator: \"" + std::string(text) + "\"");
  const Rational r(Integer{std::string(num)}, d);
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& value) {
  const Integer den = denominator_of(value);
  if (den == 1) return numerator_of(value).str();
  return numerator_of(value).str() + "/" + den.str();
}

Integer floor(const Rational& value) {
  Integer q = numerator_of(value) / denominator_of(value);  // truncates toward zero
  if (value < 0 && Rational(q) != value) q -= 1;
  return q;
}

Integer ceil(const Rational& value) {
  Integer q = numerator_of(value) / denominator_of(value);
  if (value > 0 && Rational(q) != value) q += 1;
  return q;
}

Integer abs(const Integer& value) { return value < 0 ? Integer(-value) : value; }

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace tropmirror

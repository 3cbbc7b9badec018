#include "tropmirror/lattice/vector.hpp"

#include <boost/integer/common_factor_rt.hpp>
#include <sstream>

#include "tropmirror/error.hpp"

namespace tropmirror {

RationalVector to_rational(const LatticeVector& v) {
  std::vector<Rational> c;
  c.reserve(v.dim());
  for (const auto& x : v) c.emplace_back(x);
  return RationalVector(std::move(c));
}

bool is_integral(const RationalVector& v) {
  for (const auto& x : v)
    if (denominator_of(x) != 1) return false;
  return true;
}

LatticeVector to_lattice(const RationalVector& v) {
  if (!is_integral(v)) throw Error(ErrorCode::InvalidArgument, "vector " + to_string(v) + " is not integral");
  std::vector<Integer> c;
  c.reserve(v.dim());
  for (const auto& x : v) c.push_back(numerator_of(x));
  return LatticeVector(std::move(c));
}

Integer content(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs(x));
  return g;
}

bool is_primitive(const LatticeVector& v) { return content(v) == 1; }

Integer l1_norm(const LatticeVector& v) {
  Integer s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

LatticeVector primitive_multiple(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator_of(x));
  std::vector<Integer> c;
  c.reserve(v.dim());
  for (const auto& x : v) c.push_back(numerator_of(x) * (l / denominator_of(x)));
  LatticeVector out(std::move(c));
  const Integer g = content(out);
  if (g > 1)
    for (std::size_t i = 0; i < out.dim(); ++i) out[i] /= g;
  return out;
}

std::vector<double> to_doubles(const RationalVector& v) {
  std::vector<double> out;
  out.reserve(v.dim());
  for (const auto& x : v) out.push_back(to_double(x));
  return out;
}

std::vector<double> to_doubles(const LatticeVector& v) {
  std::vector<double> out;
  out.reserve(v.dim());
  for (const auto& x : v) out.push_back(x.convert_to<double>());
  return out;
}

std::string to_string(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

std::string to_string(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += format_rational(v[i]);
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << to_string(v); }
std::ostream& operator<<(std::ostream& os, const RationalVector& v) { return os << to_string(v); }

}  // namespace tropmirror

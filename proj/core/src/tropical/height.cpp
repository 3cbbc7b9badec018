#include "tropmirror/tropical/height.hpp"

#include <set>

#include "tropmirror/error.hpp"

namespace tropmirror::tropical {

std::size_t HeightFunction::index_of(const LatticeVector& alpha) const {
  for (std::size_t i = 0; i < support.size(); ++i)
    if (support[i] == alpha) return i;
  return support.size();
}

void validate(const HeightFunction& h) {
  if (h.support.size() < 2) throw Error(ErrorCode::MalformedInput, "support needs at least 2 points");
  if (h.support.size() != h.heights.size())
    throw Error(ErrorCode::MalformedInput, "support and heights differ in length");
  const std::size_t n = h.support.front().dim();
  if (n == 0) throw Error(ErrorCode::MalformedInput, "support of dimension 0");
  std::set<LatticeVector> seen;
  for (const auto& a : h.support) {
    if (a.dim() != n) throw Error(ErrorCode::MalformedInput, "support of mixed dimension");
    if (!seen.insert(a).second) throw Error(ErrorCode::MalformedInput, "repeated exponent " + to_string(a));
  }
}

HeightFunction height_from_bundle(const Fan& fan, const SupportFunction& phi) {
  if (phi.values.size() != fan.rays().size())
    throw Error(ErrorCode::MalformedInput, "support function length does not match the rays");
  HeightFunction h;
  h.support.push_back(LatticeVector(fan.dim()));
  h.heights.push_back(0);
  for (std::size_t i = 0; i < fan.rays().size(); ++i) {
    h.support.push_back(fan.rays()[i]);
    h.heights.push_back(phi.values[i]);
  }
  return h;
}

LegendreValue legendre_value(const HeightFunction& h, const RationalVector& u) {
  LegendreValue out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Rational v = dot(h.support[i], u) - h.heights[i];
    if (out.argmax.empty() || v > out.value) {
      out.value = v;
      out.argmax = {i};
    } else if (v == out.value) {
      out.argmax.push_back(i);
    }
  }
  return out;
}

std::vector<double> legendre_terms(const HeightFunction& h, const std::vector<double>& u, double scale) {
  std::vector<double> out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    double s = -to_double(h.heights[i]) * scale;
    for (std::size_t k = 0; k < u.size(); ++k) s += h.support[i][k].convert_to<double>() * u[k];
    out[i] = s;
  }
  return out;
}

}  // namespace tropmirror::tropical

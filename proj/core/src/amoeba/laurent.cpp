#include "tropmirror/amoeba/laurent.hpp"

#include <set>

#include "tropmirror/diagnostics.hpp"
#include "tropmirror/error.hpp"

namespace tropmirror::amoeba {
namespace {

Complex monomial(const LatticeVector& a, const std::vector<Complex>& z) {
  Complex m = 1;
  for (std::size_t j = 0; j < a.dim(); ++j) m *= std::pow(z[j], a[j].convert_to<int>());
  return m;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(std::vector<Term> terms) : terms_(std::move(terms)) {
  std::set<LatticeVector> seen;
  for (const auto& t : terms_) {
    if (t.exponent.dim() != terms_.front().exponent.dim())
      throw Error(ErrorCode::MalformedInput, "exponents of mixed dimension");
    if (!seen.insert(t.exponent).second)
      throw Error(ErrorCode::MalformedInput, "repeated exponent " + to_string(t.exponent));
  }
}

Complex LaurentPolynomial::operator()(const std::vector<Complex>& z) const {
  Complex s = 0;
  for (const auto& t : terms_) s += t.coefficient * monomial(t.exponent, z);
  return s;
}

std::vector<Complex> LaurentPolynomial::gradient(const std::vector<Complex>& z) const {
  std::vector<Complex> g(dim(), 0.0);
  for (const auto& t : terms_) {
    const Complex m = t.coefficient * monomial(t.exponent, z);
    for (std::size_t j = 0; j < dim(); ++j) g[j] += t.exponent[j].convert_to<double>() * m / z[j];
  }
  return g;
}

Polytope LaurentPolynomial::newton_polytope() const {
  std::vector<LatticeVector> pts;
  for (const auto& t : terms_) pts.push_back(t.exponent);
  return Polytope::hull(pts);
}

LaurentPolynomial mirror_potential(const Fan& fan) {
  if (!is_smooth(fan)) warn("mirror potential built from a fan that is not smooth");
  std::vector<Term> terms;
  terms.push_back({LatticeVector(fan.dim()), -1.0});
  for (const auto& r : fan.rays()) terms.push_back({r, 1.0});
  return LaurentPolynomial(std::move(terms));
}

}  // namespace tropmirror::amoeba

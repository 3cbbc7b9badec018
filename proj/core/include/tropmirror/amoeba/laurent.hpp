#pragma once

#include <complex>
#include <vector>

#include "tropmirror/lattice/fan.hpp"

namespace tropmirror::amoeba {

using Complex = std::complex<double>;

struct Term {
  LatticeVector exponent;
  Complex coefficient;
};

class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  // Throws MalformedInput on repeated exponents or mixed dimensions.
  explicit LaurentPolynomial(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t dim() const { return terms_.empty() ? 0 : terms_.front().exponent.dim(); }

  Complex operator()(const std::vector<Complex>& z) const;
  // ∂f/∂z_j for every j.
  std::vector<Complex> gradient(const std::vector<Complex>& z) const;
  Polytope newton_polytope() const;

 private:
  std::vector<Term> terms_;
};

// W = −1 + Σ z^{v_i}. Warns when the fan is not smooth.
LaurentPolynomial mirror_potential(const Fan& fan);

}  // namespace tropmirror::amoeba

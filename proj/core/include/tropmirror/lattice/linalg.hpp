#pragma once

#include <optional>
#include <vector>

#include "tropmirror/lattice/vector.hpp"

namespace tropmirror::linalg {

// Dense row-major matrix over the rationals.
using Matrix = std::vector<std::vector<Rational>>;

Matrix from_rows(const std::vector<RationalVector>& rows);
Matrix from_rows(const std::vector<LatticeVector>& rows);

Rational determinant(Matrix m);
std::size_t rank(Matrix m);

// Unique solution of a square system, or nullopt when singular.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b);

// Any solution of a (possibly rectangular) consistent system, or nullopt when
// inconsistent. Free variables are set to zero.
std::optional<std::vector<Rational>> solve_consistent(Matrix a, std::vector<Rational> b);

// Basis of {x : a x = 0}, in reduced echelon form (one vector per free
// column, free coordinate equal to 1).
std::vector<RationalVector> nullspace(Matrix a, std::size_t columns);

}  // namespace tropmirror::linalg

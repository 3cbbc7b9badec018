#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "tropmirror/lattice/number.hpp"

namespace tropmirror {

// Fixed-length coordinate tuple over an exact scalar. LatticeVector and
// RationalVector are the two instantiations used across the library.
template <class Scalar>
class Vec {
 public:
  using value_type = Scalar;

  Vec() = default;
  explicit Vec(std::size_t n) : coords_(n, Scalar(0)) {}
  explicit Vec(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  Vec(std::initializer_list<long long> coords) {
    coords_.reserve(coords.size());
    for (long long c : coords) coords_.emplace_back(c);
  }

  std::size_t dim() const noexcept { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& c) { return c == 0; });
  }

  Vec& operator+=(const Vec& o) {
    for (std::size_t i = 0; i < dim(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Vec& operator*=(const Scalar& k) {
    for (auto& c : coords_) c *= k;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator-(Vec a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  friend Vec operator*(const Scalar& k, Vec a) { return a *= k; }
  friend Vec operator*(Vec a, const Scalar& k) { return a *= k; }

  friend bool operator==(const Vec& a, const Vec& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
  // Lexicographic.
  friend bool operator<(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                        b.coords_.end());
  }

 private:
  std::vector<Scalar> coords_;
};

using LatticeVector = Vec<Integer>;
using RationalVector = Vec<Rational>;

template <class A, class B>
Rational dot(const Vec<A>& a, const Vec<B>& b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += Rational(a[i]) * Rational(b[i]);
  return sum;
}

inline Integer dot(const LatticeVector& a, const LatticeVector& b) {
  Integer sum = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a[i] * b[i];
  return sum;
}

RationalVector to_rational(const LatticeVector& v);
bool is_integral(const RationalVector& v);
LatticeVector to_lattice(const RationalVector& v);  // requires is_integral

bool is_primitive(const LatticeVector& v);
Integer content(const LatticeVector& v);  // gcd of coordinates, 0 for the zero vector
Integer l1_norm(const LatticeVector& v);

// Smallest positive integer multiple that is a primitive lattice vector.
LatticeVector primitive_multiple(const RationalVector& v);

std::vector<double> to_doubles(const RationalVector& v);
std::vector<double> to_doubles(const LatticeVector& v);

std::string to_string(const LatticeVector& v);
std::string to_string(const RationalVector& v);

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const RationalVector& v);

}  // namespace tropmirror

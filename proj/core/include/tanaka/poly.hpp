#pragma once

#include <array>
#include <map>
#include <string>

#include "tanaka/linalg.hpp"

namespace tanaka::poly {

// Variables z1, z2, z3, conj(z1), conj(z2), conj(z3), treated as independent.
constexpr std::size_t kVars = 6;
using Exponent = std::array<unsigned, kVars>;
using Point = std::array<Gaussian, 3>;

class PolyScalar {
 public:
  PolyScalar() = default;
  PolyScalar(const Gaussian& c);  // NOLINT: constants convert implicitly
  PolyScalar(int c) : PolyScalar(Gaussian(c)) {}

  static PolyScalar var(std::size_t i);
  static PolyScalar z(std::size_t j) { return var(j); }
  static PolyScalar zbar(std::size_t j) { return var(3 + j); }
  // Real part (z + conj z) / 2.
  static PolyScalar x(std::size_t j);
  static PolyScalar y(std::size_t j);

  const std::map<Exponent, Gaussian>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Swap z and conj(z), conjugate the coefficients.
  PolyScalar conj() const;
  bool is_real() const { return conj() == *this; }
  PolyScalar derivative(std::size_t var) const;
  Gaussian eval(const Point& z) const;
  std::string str() const;

  PolyScalar& operator+=(const PolyScalar& o);
  PolyScalar& operator-=(const PolyScalar& o);
  friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { return a += b; }
  friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { return a -= b; }
  friend PolyScalar operator-(const PolyScalar& a) { return PolyScalar() - a; }
  friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b);
  friend bool operator==(const PolyScalar& a, const PolyScalar& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exponent& e, const Gaussian& c);
  std::map<Exponent, Gaussian> terms_;
};

// Components along d/dz1, d/dz2, d/dz3, d/dconj(z1), d/dconj(z2), d/dconj(z3).
class PolyVectorField {
 public:
  PolyVectorField() = default;
  explicit PolyVectorField(std::array<PolyScalar, kVars> comps) : c_(std::move(comps)) {}

  static PolyVectorField holomorphic(const std::array<PolyScalar, 3>& comps);

  const PolyScalar& operator[](std::size_t i) const { return c_[i]; }
  PolyScalar apply(const PolyScalar& f) const;
  PolyVectorField conj() const;
  // Ambient complex structure: i on the (1,0) part, -i on the (0,1) part.
  PolyVectorField J() const;
  // Real part X + conj(X).
  PolyVectorField real_part() const { return *this + conj(); }
  bool is_type10() const;
  bool is_type01() const;
  bool is_zero() const;
  Vec eval(const Point& z) const;

  friend PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b);
  friend PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b);
  friend PolyVectorField operator*(const PolyScalar& f, const PolyVectorField& v);
  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) { return a.c_ == b.c_; }

 private:
  std::array<PolyScalar, kVars> c_{};
};

PolyVectorField bracket(const PolyVectorField& a, const PolyVectorField& b);

}  // namespace tanaka::poly

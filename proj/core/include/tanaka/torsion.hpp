#pragma once

#include <array>
#include <string>
#include <utility>

#include "tanaka/cochain.hpp"
#include "tanaka/linalg.hpp"

namespace tanaka::torsion {

// Unordered pairs of complex basis indices of m (0..4).
constexpr std::size_t kPairs = 10;
std::size_t pair_index(std::size_t a, std::size_t b);  // requires a < b < 5
std::pair<std::size_t, std::size_t> pair_at(std::size_t p);

// Alternating bilinear map wedge^2 m -> g in the complex basis.
struct FullTorsion {
  std::array<Vec, kPairs> values;

  static FullTorsion zero();
  // tau(X, Y) = [X, Y]
  static FullTorsion flat();
  // Extension by zero of a 2-cochain on the negative part.
  static FullTorsion from_ctorsion(const cochain::Cochain& c);

  Vec at(std::size_t a, std::size_t b) const;
  void set(std::size_t a, std::size_t b, const Vec& v);
  void add(std::size_t a, std::size_t b, std::size_t component, const Gaussian& coef);
  Gaussian coefficient(std::size_t a, std::size_t b, std::size_t component) const;

  // Component mapping m^i x m^j into g^(i+j+k).
  FullTorsion graded_component(int k) const;
  // Compatible with complex conjugation, i.e. the complexification of a real map.
  bool is_real() const;
  // Degree-k part restricted to the negative part, as a real cochain.
  cochain::Cochain ctorsion(int k) const;

  friend bool operator==(const FullTorsion& a, const FullTorsion& b) { return a.values == b.values; }
};

FullTorsion operator+(const FullTorsion& a, const FullTorsion& b);
FullTorsion operator-(const FullTorsion& a, const FullTorsion& b);

// First-order change of the flat torsion under the frame change I + B, where B is a
// complex-basis endomorphism of g: [B X, Y] + [X, B Y] - B [X, Y].
FullTorsion gauge_variation(const Matrix& b_complex);

// Complex-basis endomorphism with the given images of the complex basis vectors.
Matrix endo_from_images(const std::array<Vec, 10>& images);
Matrix endo_to_real(const Matrix& b_complex);
Matrix endo_to_complex(const Matrix& b_real);

std::string format(const FullTorsion& t);

}  // namespace tanaka::torsion

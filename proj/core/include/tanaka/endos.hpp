#pragma once

#include <string>
#include <vector>

#include "tanaka/linalg.hpp"

namespace tanaka::endos {

// Truncations of the algebra on which endomorphisms act.
enum class Carrier { M, M_H0, M_H0_H1, M_H };

std::string carrier_name(Carrier c);
// Real basis indices of the algebra lying in the carrier, in basis order.
const std::vector<std::size_t>& carrier_indices(Carrier c);
// Carrier m + h^0 + ... + h^(k-1) on which degree-k data lives.
Carrier carrier_for_degree(int k);

// Position in the semitone chain: e^-2 -> -3, m^-1 -> -2, m^0 -> -1,
// h^0 -> 0, h^1 -> 1, h^2 -> 2.
int star_level(std::size_t index);

// Endomorphisms of a carrier of dimension n are n x n matrices over the carrier
// basis; as vectors they are stored column-major (entry (r, c) at c * n + r).
Vec flatten(const Matrix& a);
Matrix unflatten(const Vec& v, std::size_t n);

struct EndoSubspace {
  Carrier carrier = Carrier::M;
  int degree = 0;
  bool star = false;
  bool j_compatible = false;
  bool graded = false;
  Subspace space;

  std::size_t n() const { return carrier_indices(carrier).size(); }
  std::size_t dim() const { return space.dim(); }
  std::vector<Matrix> members() const;
  // Evaluates the defining conditions directly.
  bool contains(const Matrix& a) const;
};

EndoSubspace gl_graded(Carrier c, int k, bool j_compatible);
EndoSubspace gl_filtered(Carrier c, int k, bool star, bool j_compatible);

struct StarComparison {
  bool equal = false;
  std::size_t dim_plain = 0;
  std::size_t dim_star = 0;
};
StarComparison compare_star(Carrier c, int k);
bool gl_star_equals_gl_on_m();

// Degree-1 semitone algebra with J: first-order frame changes with a fixed graded part.
EndoSubspace frame_freedom(Carrier c);
// I + b induces the identity on the graded pieces of the semitone chain.
bool preserves_graded_part(const Matrix& b, Carrier c);

// ad(x) on the carrier, with components outside the carrier dropped.
Matrix truncated_ad(const Vec& x, Carrier c);
// Keep only the entries shifting grade by exactly k.
Matrix graded_part(const Matrix& a, Carrier c, int k);
// Matrix of the partial complex structure on the carrier basis.
Matrix j_on_carrier(Carrier c);

}  // namespace tanaka::endos

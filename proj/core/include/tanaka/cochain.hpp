#pragma once

#include <string>
#include <vector>

#include "tanaka/linalg.hpp"

namespace tanaka::cochain {

// Arguments range over the negative part spanned by real basis indices 0, 1, 2.
constexpr std::size_t kArgDim = 3;
constexpr std::size_t kValueDim = 10;
constexpr int kMaxDegree = 3;

using Monomial = std::vector<std::size_t>;  // strictly increasing argument indices

// Wedge monomials of the given length, in lexicographic order.
const std::vector<Monomial>& monomials(int ell);
// Dimension of all ell-cochains (every homogeneity degree).
std::size_t full_dim(int ell);
// Coordinate of the basis cochain sending the monomial to the value basis vector.
std::size_t slot(int ell, std::size_t monomial_index, std::size_t value_index);
// Homogeneity degree of a basis slot: grade(value) - sum of argument grades.
int slot_degree(int ell, std::size_t slot_index);

struct Cochain {
  int ell = 0;
  int k = 0;
  Vec coeffs;  // full coordinates of length full_dim(ell)

  // Rejects coefficients outside the homogeneity degree.
  static Cochain make(int ell, int k, Vec coeffs);
  static Cochain zero(int ell, int k);
  // Value on the wedge of the given argument basis indices (any order).
  Vec value(const std::vector<std::size_t>& args) const;
  bool is_zero() const { return tanaka::is_zero(coeffs); }
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.ell == b.ell && a.k == b.k && a.coeffs == b.coeffs;
  }
};

Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);
Cochain operator*(const Gaussian& s, const Cochain& c);

struct CochainSpace {
  int ell = 0;
  int k = 0;
  std::vector<std::size_t> slots;  // full coordinates spanning the space

  std::size_t dim() const { return slots.size(); }
  Cochain basis(std::size_t i) const;
  Subspace as_subspace() const;
  // Full-coordinate vector from coordinates in the slot basis.
  Vec embed(const Vec& local) const;
  Vec restrict(const Vec& full) const;
};

CochainSpace cochain_space(int ell, int k);

// Full-coordinate matrices.
const Matrix& coboundary_matrix(int ell);      // C^ell -> C^(ell+1)
const Matrix& codifferential_matrix(int ell);  // C^ell -> C^(ell-1)
// Matrix of the induced action of x (real coordinates in g^0 + h_+) on C^ell.
Matrix action_matrix(const Vec& x, int ell);

Cochain coboundary(const Cochain& c);
Cochain codifferential(const Cochain& c);
Cochain act(const Vec& x, const Cochain& c);

// Subspaces of the full coordinate space of C^ell.
Subspace exact_space(int ell, int k);     // coboundary image of C^(ell-1)_k
Subspace coexact_space(int ell, int k);   // codifferential image of C^(ell+1)_k
Subspace closed_space(int ell, int k);    // kernel of the coboundary on C^ell_k
Subspace coclosed_space(int ell, int k);  // kernel of the codifferential on C^ell_k
Subspace harmonic_space(int ell, int k);

struct HodgeTriple {
  Cochain exact;
  Cochain harmonic;
  Cochain coexact;
};
HodgeTriple hodge_decompose(const Cochain& c);

int cohomology_dim(int ell, int k);

// Basis of the positive part dual to the arguments under the Killing form.
const std::vector<Vec>& dual_arguments();

// "e^{-2} ^ e_1^{-1} -> 1/2*E_1^{0}; ..."
std::string format(const Cochain& c);

}  // namespace tanaka::cochain

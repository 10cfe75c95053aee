#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tanaka/linalg.hpp"

namespace tanaka::so32 {

inline constexpr std::size_t kDim = 10;

enum class Basis { Real, Complex };

// Real basis order: e^-2, e_1^-1, e_2^-1, e_1^0, e_2^0, E_1^0, E_2^0, E_1^1, E_2^1, E^2.
namespace real {
inline constexpr std::size_t em2 = 0, em1_1 = 1, em1_2 = 2, e0_1 = 3, e0_2 = 4, E0_1 = 5, E0_2 = 6,
                             E1_1 = 7, E1_2 = 8, E2 = 9;
}
// Complex basis order: e^-2, e^-1(10), e^-1(01), e^0(10), e^0(01), E^0(10), E^0(01), E^1(10), E^1(01), E^2.
namespace cx {
inline constexpr std::size_t em2 = 0, em1_10 = 1, em1_01 = 2, e0_10 = 3, e0_01 = 4, E0_10 = 5,
                             E0_01 = 6, E1_10 = 7, E1_01 = 8, E2 = 9;
}

// Grade of each basis index; identical for both bases.
const std::array<int, kDim>& grades();
// Index paired with i under (10) <-> (01), identity on e^-2 and E^2.
std::size_t partner(std::size_t i);
// Pieces of the 3|5 split: indices 0..4 span m, 5..9 span h.
inline bool in_m(std::size_t i) { return i < 5; }

std::string label(std::size_t i, Basis b);
// Accepts labels with or without braces, e.g. "e^{-1(10)}" or "e^-1(10)".
std::optional<std::size_t> find_label(std::string_view text, Basis b);

Vec basis_vec(std::size_t i);

// Matrix model in the coordinates where the invariant form is the
// anti-diagonal matrix with ones.
const Matrix& form_matrix();
const std::vector<Matrix>& basis_matrices();
bool in_algebra(const Matrix& m);
std::optional<Vec> coords_of(const Matrix& m);  // real coordinates
Matrix to_matrix(const Vec& real_coords);

// Brackets computed once from matrix commutators.
const Vec& structure(std::size_t i, std::size_t j);          // real basis
const Vec& structure_complex(std::size_t i, std::size_t j);  // complex basis
Vec bracket(const Vec& x, const Vec& y);
Vec bracket_complex(const Vec& x, const Vec& y);
Matrix ad(const Vec& x);          // real basis, column j = [x, b_j]
Matrix ad_complex(const Vec& x);  // complex basis

// complex coords = complex_from_real() * real coords
const Matrix& complex_from_real();
const Matrix& real_from_complex();
Vec to_complex(const Vec& real_coords);
Vec from_complex(const Vec& complex_coords);
bool is_real_element(const Vec& complex_coords);
// Formal conjugation of complex coordinates of an element of the complexification.
Vec conjugate_complex(const Vec& complex_coords);

using GradedDecomposition = std::map<int, Vec>;
GradedDecomposition grade_decompose(const Vec& x);
Vec grade_component(const Vec& x, int g);

Gaussian killing(const Vec& x, const Vec& y);
const Matrix& killing_gram();

// Partial complex structure on m^-1 + m^0 + h^0 + h^1 (real coordinates).
Vec apply_J(const Vec& x);
// Matrix of J on the real basis, with J set to zero on e^-2 and E^2.
const Matrix& J_matrix();

enum class FiltrationKind { F, FStar };
std::vector<Subspace> filtration_chain(FiltrationKind kind);

// Human-readable linear combination, e.g. "E^{0(10)} + E^{0(01)}".
std::string format(const Vec& x, Basis b);
Vec parse_element(std::string_view text, Basis b);

// One cell of the transcribed bracket table compared with the commutator.
struct TableCell {
  std::string row;     // ad-argument label
  std::string column;  // argument label
  Vec transcribed;     // complex coordinates
  Vec computed;        // complex coordinates
  bool match = false;
  // Set when the cells differ by a single nonzero scalar factor.
  std::optional<Gaussian> factor;
  bool explained() const { return match || factor.has_value(); }
};
std::vector<TableCell> table_crosscheck();
std::vector<TableCell> table_crosscheck(std::string_view fixture_text);

}  // namespace tanaka::so32

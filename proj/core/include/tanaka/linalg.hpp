#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tanaka/scalar.hpp"

namespace tanaka {

using Vec = std::vector<Gaussian>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
bool is_real(const Vec& v);
Vec conj(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Gaussian& s, const Vec& v);
// acc += s * v
void axpy(Vec& acc, const Gaussian& s, const Vec& v);
std::string to_string(const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Gaussian& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Gaussian& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  std::vector<Vec> row_list() const;

  Matrix transpose() const;
  Matrix conj() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& a, const Vec& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a) { return Gaussian(-1) * a; }
  friend Matrix operator*(const Gaussian& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Gaussian> a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

struct RowEchelon {
  std::vector<Vec> rows;  // nonzero rows of the reduced row echelon form
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form of the given rows (each of length ncols).
RowEchelon rref(std::vector<Vec> rows, std::size_t ncols);
std::size_t rank(const Matrix& m);

// Linear subspace of Q[i]^n. The basis is stored canonically: it is the set of
// columns of the reduced column echelon form (pivot entries 1), so equal
// subspaces have identical representations.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : n_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Matrix basis_matrix() const;  // ambient x dim

  bool contains(const Vec& v) const;
  // Coordinates of v in the canonical basis; nullopt when v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  bool is_subspace_of(const Subspace& other) const;
  // Residual of v after eliminating the canonical pivots.
  Vec reduce(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t n_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);

struct AffineSolution {
  bool consistent = false;
  Vec particular;
  Subspace kernel;
};
AffineSolution solve(const Matrix& a, const Vec& b);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// Image of a subspace under a linear map.
Subspace map_subspace(const Matrix& m, const Subspace& s);

}  // namespace tanaka

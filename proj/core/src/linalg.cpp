#include "tanaka/linalg.hpp"

namespace tanaka {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = Gaussian(1);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool is_real(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_real()) return false;
  return true;
}

Vec conj(const Vec& v) {
  Vec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.conj());
  return out;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) out[i] += b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) out[i] -= b[i];
  return out;
}

Vec operator-(const Vec& a) {
  Vec out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(-x);
  return out;
}

Vec operator*(const Gaussian& s, const Vec& v) {
  Vec out(v.size());
  if (s.is_zero()) return out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[i] = s * v[i];
  return out;
}

void axpy(Vec& acc, const Gaussian& s, const Vec& v) {
  if (acc.size() != v.size()) throw DimensionError("vector length mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) acc[i] += s * v[i];
}

std::string to_string(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + "]";
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Gaussian(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::conj() const {
  Matrix t = *this;
  for (auto& x : t.a_) x = x.conj();
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Gaussian& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
    }
  return out;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
  Vec out(a.rows_);
  for (std::size_t c = 0; c < a.cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < a.rows_; ++r)
      if (!a(r, c).is_zero()) out[r] += a(r, c) * v[c];
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += b.a_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= b.a_[i];
  return out;
}

Matrix operator*(const Gaussian& s, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.a_) x *= s;
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

RowEchelon rref(std::vector<Vec> rows, std::size_t ncols) {
  for (const auto& r : rows)
    if (r.size() != ncols) throw DimensionError("row length mismatch");
  RowEchelon out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < ncols && lead < rows.size(); ++col) {
    std::size_t piv = lead;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[lead], rows[piv]);
    Vec& p = rows[lead];
    if (p[col] != Gaussian(1)) {
      Gaussian inv = Gaussian(1) / p[col];
      for (std::size_t c = col; c < ncols; ++c)
        if (!p[c].is_zero()) p[c] *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col].is_zero()) continue;
      Gaussian f = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c)
        if (!p[c].is_zero()) rows[r][c] -= f * p[c];
    }
    out.pivots.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  out.rows = std::move(rows);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m.row_list(), m.cols()).pivots.size(); }

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(ambient);
  RowEchelon e = rref(vectors, ambient);
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vec(ambient, i));
  return span(ambient, vs);
}

Matrix Subspace::basis_matrix() const { return Matrix::from_columns(basis_, n_); }

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != n_) throw DimensionError("ambient dimension mismatch");
  Vec r = v;
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    Gaussian f = r[pivots_[j]];
    if (!f.is_zero()) axpy(r, -f, basis_[j]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) c[j] = v[pivots_[j]];
  return c;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  if (other.n_ != n_) throw DimensionError("ambient dimension mismatch");
  for (const auto& b : basis_)
    if (!other.contains(b)) return false;
  return true;
}

Subspace kernel(const Matrix& m) {
  std::size_t n = m.cols();
  RowEchelon e = rref(m.row_list(), n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> vs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec x(n);
    x[f] = Gaussian(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (!e.rows[r][f].is_zero()) x[e.pivots[r]] = -e.rows[r][f];
    vs.push_back(std::move(x));
  }
  return Subspace::span(n, vs);
}

Subspace image(const Matrix& m) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.rows(), cols);
}

AffineSolution solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionError("right-hand side length mismatch");
  std::size_t n = a.cols();
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vec row = a.row(r);
    row.push_back(b[r]);
    rows.push_back(std::move(row));
  }
  RowEchelon e = rref(std::move(rows), n + 1);
  AffineSolution out;
  out.kernel = kernel(a);
  if (!e.pivots.empty() && e.pivots.back() == n) return out;
  out.consistent = true;
  out.particular = Vec(n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.particular[e.pivots[r]] = e.rows[r][n];
  return out;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(n);
  std::vector<Vec> cols = a.basis();
  for (const auto& v : b.basis()) cols.push_back(-v);
  Subspace k = kernel(Matrix::from_columns(cols, n));
  std::vector<Vec> vs;
  for (const auto& x : k.basis()) {
    Vec v(n);
    for (std::size_t i = 0; i < a.dim(); ++i) axpy(v, x[i], a.basis()[i]);
    vs.push_back(std::move(v));
  }
  return Subspace::span(n, vs);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  std::vector<Vec> vs = a.basis();
  vs.insert(vs.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), vs);
}

Subspace map_subspace(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw DimensionError("map/subspace shape mismatch");
  std::vector<Vec> vs;
  for (const auto& v : s.basis()) vs.push_back(m * v);
  return Subspace::span(m.rows(), vs);
}

}  // namespace tanaka

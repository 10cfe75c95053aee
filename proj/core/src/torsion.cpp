#include "tanaka/torsion.hpp"

#include "tanaka/so32.hpp"

namespace tanaka::torsion {

using so32::kDim;

std::size_t pair_index(std::size_t a, std::size_t b) {
  if (!(a < b && b < 5)) throw DomainError("torsion arguments must satisfy a < b < 5");
  // lexicographic over (0,1), (0,2), ..., (3,4)
  return a * (9 - a) / 2 + (b - a - 1);
}

std::pair<std::size_t, std::size_t> pair_at(std::size_t p) {
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a + 1; b < 5; ++b)
      if (pair_index(a, b) == p) return {a, b};
  throw DomainError("pair index out of range");
}

FullTorsion FullTorsion::zero() {
  FullTorsion t;
  for (auto& v : t.values) v = zero_vec(kDim);
  return t;
}

FullTorsion FullTorsion::flat() {
  FullTorsion t;
  for (std::size_t p = 0; p < kPairs; ++p) {
    auto [a, b] = pair_at(p);
    t.values[p] = so32::structure_complex(a, b);
  }
  return t;
}

Vec FullTorsion::at(std::size_t a, std::size_t b) const {
  if (a == b) return zero_vec(kDim);
  if (a < b) return values[pair_index(a, b)];
  return -values[pair_index(b, a)];
}

void FullTorsion::set(std::size_t a, std::size_t b, const Vec& v) {
  if (v.size() != kDim) throw DimensionError("torsion value has wrong length");
  if (a == b) throw DomainError("torsion is alternating");
  if (a < b)
    values[pair_index(a, b)] = v;
  else
    values[pair_index(b, a)] = -v;
}

void FullTorsion::add(std::size_t a, std::size_t b, std::size_t component, const Gaussian& coef) {
  if (a == b) throw DomainError("torsion is alternating");
  if (a < b)
    values[pair_index(a, b)].at(component) += coef;
  else
    values[pair_index(b, a)].at(component) -= coef;
}

Gaussian FullTorsion::coefficient(std::size_t a, std::size_t b, std::size_t component) const {
  return at(a, b).at(component);
}

FullTorsion FullTorsion::graded_component(int k) const {
  FullTorsion out = zero();
  const auto& g = so32::grades();
  for (std::size_t p = 0; p < kPairs; ++p) {
    auto [a, b] = pair_at(p);
    for (std::size_t c = 0; c < kDim; ++c)
      if (g[c] == g[a] + g[b] + k) out.values[p][c] = values[p][c];
  }
  return out;
}

bool FullTorsion::is_real() const {
  for (std::size_t p = 0; p < kPairs; ++p) {
    auto [a, b] = pair_at(p);
    Vec mirrored = at(so32::partner(a), so32::partner(b));
    if (so32::conjugate_complex(values[p]) != mirrored) return false;
  }
  return true;
}

cochain::Cochain FullTorsion::ctorsion(int k) const {
  FullTorsion part = graded_component(k);
  const auto& mons = cochain::monomials(2);
  Vec coeffs(cochain::full_dim(2));
  for (std::size_t m = 0; m < mons.size(); ++m) {
    Vec x = so32::to_complex(so32::basis_vec(mons[m][0]));
    Vec y = so32::to_complex(so32::basis_vec(mons[m][1]));
    Vec v(kDim);
    for (std::size_t s = 0; s < 3; ++s)
      for (std::size_t t = 0; t < 3; ++t)
        if (!x[s].is_zero() && !y[t].is_zero()) axpy(v, x[s] * y[t], part.at(s, t));
    Vec real = so32::from_complex(v);
    if (!tanaka::is_real(real)) throw DomainError("c-torsion is not real");
    for (std::size_t c = 0; c < kDim; ++c) coeffs[cochain::slot(2, m, c)] = real[c];
  }
  return cochain::Cochain::make(2, k, std::move(coeffs));
}

FullTorsion FullTorsion::from_ctorsion(const cochain::Cochain& c) {
  if (c.ell != 2) throw DomainError("c-torsion must be a 2-cochain");
  FullTorsion out = zero();
  // Complex arguments in real coordinates.
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b) {
      Vec x = so32::from_complex(so32::basis_vec(a));
      Vec y = so32::from_complex(so32::basis_vec(b));
      Vec v(kDim);
      for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t t = 0; t < 3; ++t)
          if (!x[s].is_zero() && !y[t].is_zero()) axpy(v, x[s] * y[t], c.value({s, t}));
      out.set(a, b, so32::to_complex(v));
    }
  return out;
}

FullTorsion operator+(const FullTorsion& a, const FullTorsion& b) {
  FullTorsion out;
  for (std::size_t p = 0; p < kPairs; ++p) out.values[p] = a.values[p] + b.values[p];
  return out;
}

FullTorsion operator-(const FullTorsion& a, const FullTorsion& b) {
  FullTorsion out;
  for (std::size_t p = 0; p < kPairs; ++p) out.values[p] = a.values[p] - b.values[p];
  return out;
}

FullTorsion gauge_variation(const Matrix& b) {
  if (b.rows() != kDim || b.cols() != kDim) throw DimensionError("gauge endomorphism must be 10 x 10");
  FullTorsion out = FullTorsion::zero();
  for (std::size_t p = 0; p < kPairs; ++p) {
    auto [x, y] = pair_at(p);
    Vec bx = b.column(x), by = b.column(y);
    Vec v = so32::bracket_complex(bx, so32::basis_vec(y)) + so32::bracket_complex(so32::basis_vec(x), by) -
            b * so32::structure_complex(x, y);
    out.values[p] = v;
  }
  return out;
}

Matrix endo_from_images(const std::array<Vec, 10>& images) {
  return Matrix::from_columns(std::vector<Vec>(images.begin(), images.end()), kDim);
}

Matrix endo_to_real(const Matrix& b_complex) {
  return so32::real_from_complex() * b_complex * so32::complex_from_real();
}

Matrix endo_to_complex(const Matrix& b_real) {
  return so32::complex_from_real() * b_real * so32::real_from_complex();
}

std::string format(const FullTorsion& t) {
  std::string out;
  for (std::size_t p = 0; p < kPairs; ++p) {
    if (is_zero(t.values[p])) continue;
    auto [a, b] = pair_at(p);
    if (!out.empty()) out += "; ";
    out += "(" + so32::label(a, so32::Basis::Complex) + ", " + so32::label(b, so32::Basis::Complex) +
           ") -> " + so32::format(t.values[p], so32::Basis::Complex);
  }
  return out.empty() ? "0" : out;
}

}  // namespace tanaka::torsion

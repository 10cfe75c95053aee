#include "tanaka/endos.hpp"

#include <climits>

#include "tanaka/so32.hpp"

namespace tanaka::endos {

using so32::grades;

std::string carrier_name(Carrier c) {
  switch (c) {
    case Carrier::M: return "m";
    case Carrier::M_H0: return "m+h^0";
    case Carrier::M_H0_H1: return "m+h^0+h^1";
    case Carrier::M_H: return "m+h";
  }
  return "?";
}

const std::vector<std::size_t>& carrier_indices(Carrier c) {
  static const std::vector<std::size_t> m = {0, 1, 2, 3, 4};
  static const std::vector<std::size_t> mh0 = {0, 1, 2, 3, 4, 5, 6};
  static const std::vector<std::size_t> mh01 = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  static const std::vector<std::size_t> all = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  switch (c) {
    case Carrier::M: return m;
    case Carrier::M_H0: return mh0;
    case Carrier::M_H0_H1: return mh01;
    case Carrier::M_H: return all;
  }
  throw DomainError("unknown carrier");
}

Carrier carrier_for_degree(int k) {
  switch (k) {
    case 0: return Carrier::M;
    case 1: return Carrier::M_H0;
    case 2: return Carrier::M_H0_H1;
    default:
      if (k < 0) throw DomainError("negative degree");
      return Carrier::M_H;
  }
}

int star_level(std::size_t index) {
  int g = grades().at(index);
  if (g <= -1) return g - 1;
  if (g == 0) return so32::in_m(index) ? -1 : 0;
  return g;
}

Vec flatten(const Matrix& a) {
  std::size_t n = a.rows();
  Vec v(n * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) v[c * n + r] = a(r, c);
  return v;
}

Matrix unflatten(const Vec& v, std::size_t n) {
  if (v.size() != n * n) throw DimensionError("endomorphism vector has wrong length");
  Matrix a(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) a(r, c) = v[c * n + r];
  return a;
}

Matrix j_on_carrier(Carrier c) {
  const auto& idx = carrier_indices(c);
  const Matrix& J = so32::J_matrix();
  Matrix out(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t s = 0; s < idx.size(); ++s) out(r, s) = J(idx[r], idx[s]);
  return out;
}

namespace {

// Star-level threshold of the F-filtration piece V_j.
int f_threshold(int j) {
  if (j <= -2) return INT_MIN;
  if (j == -1) return -2;
  if (j == 0) return -1;
  return j;
}

struct EndoShape {
  Carrier carrier;
  int k;
  bool star;
  bool graded;
  bool j;
};

bool entry_allowed(const EndoShape& s, std::size_t row_index, std::size_t col_index) {
  int gr = grades()[row_index], gc = grades()[col_index];
  if (s.graded) return gr == gc + s.k;
  int level = star_level(col_index);
  if (!s.star) {
    if (gr < gc + s.k) return false;
    // J-compatible maps live inside the semitone-preserving algebra.
    return !s.j || level <= -2 || star_level(row_index) >= level;
  }
  int threshold = level <= -2 ? f_threshold(gc + s.k) : level + s.k;
  return star_level(row_index) >= threshold;
}

// Domain of the J-condition: m^-1 + m^0 for graded maps, V_-1 otherwise.
bool j_domain(const EndoShape& s, std::size_t index) {
  if (s.graded) return grades()[index] == -1 || (grades()[index] == 0 && so32::in_m(index));
  return grades()[index] >= -1;
}

// Rows of the J-condition, as linear functionals of the flattened matrix.
std::vector<Vec> j_conditions(const EndoShape& s) {
  const auto& idx = carrier_indices(s.carrier);
  std::size_t n = idx.size();
  Matrix J = j_on_carrier(s.carrier);
  std::vector<Vec> rows;
  for (std::size_t c = 0; c < n; ++c) {
    if (!j_domain(s, idx[c])) continue;
    for (std::size_t r = 0; r < n; ++r) {
      if (star_level(idx[r]) >= 0) continue;  // only modulo the semitone space
      // (J A - A J)(r, c)
      Vec f(n * n);
      for (std::size_t t = 0; t < n; ++t) {
        if (!J(r, t).is_zero()) f[c * n + t] += J(r, t);
        if (!J(t, c).is_zero()) f[t * n + r] -= J(t, c);
      }
      if (!is_zero(f)) rows.push_back(std::move(f));
    }
  }
  return rows;
}

EndoSubspace build(const EndoShape& s) {
  if (s.k < 0) throw DomainError("degree must be nonnegative");
  const auto& idx = carrier_indices(s.carrier);
  std::size_t n = idx.size();
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r)
      if (entry_allowed(s, idx[r], idx[c])) free.push_back(c * n + r);

  std::vector<Vec> generators;
  if (!s.j) {
    for (auto f : free) generators.push_back(unit_vec(n * n, f));
  } else {
    std::vector<Vec> conds = j_conditions(s);
    Matrix sys(conds.size(), free.size());
    for (std::size_t q = 0; q < conds.size(); ++q)
      for (std::size_t v = 0; v < free.size(); ++v) sys(q, v) = conds[q][free[v]];
    Subspace ker = conds.empty() ? Subspace::full(free.size()) : kernel(sys);
    for (const auto& b : ker.basis()) {
      Vec g(n * n);
      for (std::size_t v = 0; v < free.size(); ++v) g[free[v]] = b[v];
      generators.push_back(std::move(g));
    }
  }
  EndoSubspace out;
  out.carrier = s.carrier;
  out.degree = s.k;
  out.star = s.star;
  out.j_compatible = s.j;
  out.graded = s.graded;
  out.space = Subspace::span(n * n, generators);
  return out;
}

}  // namespace

std::vector<Matrix> EndoSubspace::members() const {
  std::vector<Matrix> out;
  for (const auto& b : space.basis()) out.push_back(unflatten(b, n()));
  return out;
}

bool EndoSubspace::contains(const Matrix& a) const {
  EndoShape s{carrier, degree, star, graded, j_compatible};
  const auto& idx = carrier_indices(carrier);
  std::size_t n = idx.size();
  if (a.rows() != n || a.cols() != n) throw DimensionError("endomorphism has wrong size");
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r)
      if (!a(r, c).is_zero() && !entry_allowed(s, idx[r], idx[c])) return false;
  if (!j_compatible) return true;
  Matrix J = j_on_carrier(carrier);
  Matrix d = J * a - a * J;
  for (std::size_t c = 0; c < n; ++c) {
    if (!j_domain(s, idx[c])) continue;
    for (std::size_t r = 0; r < n; ++r)
      if (star_level(idx[r]) < 0 && !d(r, c).is_zero()) return false;
  }
  return true;
}

EndoSubspace gl_graded(Carrier c, int k, bool j_compatible) {
  return build({c, k, false, true, j_compatible});
}

EndoSubspace gl_filtered(Carrier c, int k, bool star, bool j_compatible) {
  return build({c, k, star, false, j_compatible});
}

StarComparison compare_star(Carrier c, int k) {
  EndoSubspace plain = gl_filtered(c, k, false, true);
  EndoSubspace star = gl_filtered(c, k, true, true);
  return {plain.space == star.space, plain.dim(), star.dim()};
}

bool gl_star_equals_gl_on_m() { return compare_star(Carrier::M, 1).equal; }

EndoSubspace frame_freedom(Carrier c) { return gl_filtered(c, 1, true, true); }

bool preserves_graded_part(const Matrix& b, Carrier c) {
  const auto& idx = carrier_indices(c);
  for (std::size_t col = 0; col < idx.size(); ++col)
    for (std::size_t r = 0; r < idx.size(); ++r)
      if (!b(r, col).is_zero() && star_level(idx[r]) <= star_level(idx[col])) return false;
  return true;
}

Matrix truncated_ad(const Vec& x, Carrier c) {
  const auto& idx = carrier_indices(c);
  Matrix a(idx.size(), idx.size());
  for (std::size_t col = 0; col < idx.size(); ++col) {
    Vec v = so32::bracket(x, so32::basis_vec(idx[col]));
    for (std::size_t r = 0; r < idx.size(); ++r) a(r, col) = v[idx[r]];
  }
  return a;
}

Matrix graded_part(const Matrix& a, Carrier c, int k) {
  const auto& idx = carrier_indices(c);
  Matrix out(idx.size(), idx.size());
  for (std::size_t col = 0; col < idx.size(); ++col)
    for (std::size_t r = 0; r < idx.size(); ++r)
      if (grades()[idx[r]] == grades()[idx[col]] + k) out(r, col) = a(r, col);
  return out;
}

}  // namespace tanaka::endos

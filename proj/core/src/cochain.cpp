#include "tanaka/cochain.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "tanaka/so32.hpp"

namespace tanaka::cochain {

namespace {

void check_ell(int ell) {
  if (ell < 0 || ell > kMaxDegree) throw DomainError("cochain degree out of range: " + std::to_string(ell));
}

std::size_t monomial_index(int ell, const Monomial& m) {
  const auto& list = monomials(ell);
  auto it = std::lower_bound(list.begin(), list.end(), m);
  if (it == list.end() || *it != m) throw DomainError("not a wedge monomial");
  return static_cast<std::size_t>(it - list.begin());
}

// Sign of the permutation sorting seq onto the monomial m; 0 if seq is not a permutation of m.
int evaluate_monomial(const Monomial& m, std::vector<std::size_t> seq) {
  if (seq.size() != m.size()) return 0;
  int sign = 1;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b) {
      if (seq[a] == seq[b]) return 0;
      if (seq[a] > seq[b]) sign = -sign;
    }
  std::sort(seq.begin(), seq.end());
  return seq == m ? sign : 0;
}

// Coboundary of C^ell(A, M) -> C^(ell+1)(A, M) for a 3-dimensional argument algebra A
// with brackets given in its own basis and action matrices on the module M.
Matrix generic_coboundary(int ell, const std::array<std::array<Vec, kArgDim>, kArgDim>& br,
                          const std::array<Matrix, kArgDim>& rho) {
  std::size_t m = rho[0].rows();
  const auto& src = monomials(ell);
  const auto& dst = monomials(ell + 1);
  Matrix d(dst.size() * m, src.size() * m);
  for (std::size_t jj = 0; jj < dst.size(); ++jj) {
    const Monomial& J = dst[jj];
    for (std::size_t s = 0; s < J.size(); ++s) {
      Monomial rest = J;
      rest.erase(rest.begin() + static_cast<long>(s));
      std::size_t ii = monomial_index(ell, rest);
      Gaussian sign(s % 2 == 0 ? 1 : -1);
      for (std::size_t a2 = 0; a2 < m; ++a2)
        for (std::size_t a = 0; a < m; ++a)
          if (!rho[J[s]](a2, a).is_zero()) d(jj * m + a2, ii * m + a) += sign * rho[J[s]](a2, a);
    }
    for (std::size_t s = 0; s < J.size(); ++s)
      for (std::size_t t = s + 1; t < J.size(); ++t) {
        Monomial rest;
        for (std::size_t u = 0; u < J.size(); ++u)
          if (u != s && u != t) rest.push_back(J[u]);
        const Vec& b = br[J[s]][J[t]];
        for (std::size_t c = 0; c < kArgDim; ++c) {
          if (b[c].is_zero()) continue;
          std::vector<std::size_t> seq = {c};
          seq.insert(seq.end(), rest.begin(), rest.end());
          Monomial sorted = seq;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
          int perm = evaluate_monomial(sorted, seq);
          Gaussian coef = b[c] * Gaussian((s + t) % 2 == 0 ? perm : -perm);
          std::size_t ii = monomial_index(ell, sorted);
          for (std::size_t a = 0; a < m; ++a) d(jj * m + a, ii * m + a) += coef;
        }
      }
  }
  return d;
}

struct Complexes {
  std::array<Matrix, 3> d;      // on the negative part with adjoint values, ell = 0..2
  std::array<Matrix, 3> d_pos;  // on the dual positive part with coadjoint values
  std::array<Matrix, 4> dstar;  // ell = 1..3 used
};

const Complexes& complexes() {
  static const Complexes cx = [] {
    Complexes out;
    std::array<std::array<Vec, kArgDim>, kArgDim> br_neg, br_pos;
    std::array<Matrix, kArgDim> rho_neg, rho_pos;
    const auto& z = dual_arguments();
    Matrix z_cols(3, 3);  // Z basis restricted to indices 7, 8, 9
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t h = 0; h < 3; ++h) z_cols(h, b) = z[b][7 + h];
    for (std::size_t s = 0; s < kArgDim; ++s) {
      rho_neg[s] = so32::ad(so32::basis_vec(s));
      rho_pos[s] = -so32::ad(z[s]).transpose();
      for (std::size_t t = 0; t < kArgDim; ++t) {
        Vec v = so32::bracket(so32::basis_vec(s), so32::basis_vec(t));
        br_neg[s][t] = Vec(v.begin(), v.begin() + 3);
        Vec w = so32::bracket(z[s], z[t]);
        AffineSolution sol = solve(z_cols, Vec(w.begin() + 7, w.end()));
        if (!sol.consistent) throw Error("positive part is not closed under brackets");
        br_pos[s][t] = sol.particular;
      }
    }
    for (int ell = 0; ell < 3; ++ell) {
      out.d[ell] = generic_coboundary(ell, br_neg, rho_neg);
      out.d_pos[ell] = generic_coboundary(ell, br_pos, rho_pos);
      out.dstar[ell + 1] = -out.d_pos[ell].transpose();
    }
    return out;
  }();
  return cx;
}

}  // namespace

const std::vector<Monomial>& monomials(int ell) {
  static const std::array<std::vector<Monomial>, 4> lists = [] {
    std::array<std::vector<Monomial>, 4> out;
    for (unsigned mask = 0; mask < (1u << kArgDim); ++mask) {
      Monomial m;
      for (std::size_t b = 0; b < kArgDim; ++b)
        if (mask & (1u << b)) m.push_back(b);
      out[m.size()].push_back(m);
    }
    for (auto& l : out) std::sort(l.begin(), l.end());
    return out;
  }();
  check_ell(ell);
  return lists[static_cast<std::size_t>(ell)];
}

std::size_t full_dim(int ell) { return monomials(ell).size() * kValueDim; }

std::size_t slot(int ell, std::size_t monomial_index, std::size_t value_index) {
  (void)ell;
  return monomial_index * kValueDim + value_index;
}

int slot_degree(int ell, std::size_t slot_index) {
  const Monomial& m = monomials(ell).at(slot_index / kValueDim);
  int g = so32::grades()[slot_index % kValueDim];
  for (auto a : m) g -= so32::grades()[a];
  return g;
}

Cochain Cochain::make(int ell, int k, Vec coeffs) {
  if (coeffs.size() != full_dim(ell)) throw DimensionError("cochain coefficient vector has wrong length");
  for (std::size_t s = 0; s < coeffs.size(); ++s)
    if (!coeffs[s].is_zero() && slot_degree(ell, s) != k)
      throw DomainError("coefficient violates homogeneity degree " + std::to_string(k));
  return Cochain{ell, k, std::move(coeffs)};
}

Cochain Cochain::zero(int ell, int k) { return Cochain{ell, k, zero_vec(full_dim(ell))}; }

Vec Cochain::value(const std::vector<std::size_t>& args) const {
  Vec out(kValueDim);
  const auto& mons = monomials(ell);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    int sign = evaluate_monomial(mons[i], args);
    if (sign == 0) continue;
    for (std::size_t a = 0; a < kValueDim; ++a) out[a] += Gaussian(sign) * coeffs[i * kValueDim + a];
  }
  return out;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  if (a.ell != b.ell || a.k != b.k) throw DimensionError("cochains of different type");
  return Cochain{a.ell, a.k, a.coeffs + b.coeffs};
}

Cochain operator-(const Cochain& a, const Cochain& b) {
  if (a.ell != b.ell || a.k != b.k) throw DimensionError("cochains of different type");
  return Cochain{a.ell, a.k, a.coeffs - b.coeffs};
}

Cochain operator*(const Gaussian& s, const Cochain& c) { return Cochain{c.ell, c.k, s * c.coeffs}; }

Cochain CochainSpace::basis(std::size_t i) const { return Cochain{ell, k, unit_vec(full_dim(ell), slots.at(i))}; }

Subspace CochainSpace::as_subspace() const {
  std::vector<Vec> vs;
  for (auto s : slots) vs.push_back(unit_vec(full_dim(ell), s));
  return Subspace::span(full_dim(ell), vs);
}

Vec CochainSpace::embed(const Vec& local) const {
  if (local.size() != slots.size()) throw DimensionError("local cochain coordinates have wrong length");
  Vec out(full_dim(ell));
  for (std::size_t i = 0; i < slots.size(); ++i) out[slots[i]] = local[i];
  return out;
}

Vec CochainSpace::restrict(const Vec& full) const {
  Vec out(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) out[i] = full[slots[i]];
  return out;
}

CochainSpace cochain_space(int ell, int k) {
  check_ell(ell);
  CochainSpace sp{ell, k, {}};
  for (std::size_t s = 0; s < full_dim(ell); ++s)
    if (slot_degree(ell, s) == k) sp.slots.push_back(s);
  return sp;
}

const std::vector<Vec>& dual_arguments() {
  static const std::vector<Vec> z = [] {
    Matrix pairing(3, 3);  // rows: arguments, columns: E_1^1, E_2^1, E^2
    for (std::size_t c = 0; c < 3; ++c)
      for (std::size_t h = 0; h < 3; ++h)
        pairing(c, h) = so32::killing(so32::basis_vec(c), so32::basis_vec(7 + h));
    std::vector<Vec> out;
    for (std::size_t b = 0; b < 3; ++b) {
      AffineSolution sol = solve(pairing, unit_vec(3, b));
      if (!sol.consistent || sol.kernel.dim() != 0) throw Error("Killing pairing is degenerate");
      Vec zb(kValueDim);
      for (std::size_t h = 0; h < 3; ++h) zb[7 + h] = sol.particular[h];
      out.push_back(zb);
    }
    return out;
  }();
  return z;
}

const Matrix& coboundary_matrix(int ell) {
  if (ell < 0 || ell > 2) throw DomainError("coboundary is defined for cochain degree 0..2");
  return complexes().d[static_cast<std::size_t>(ell)];
}

const Matrix& codifferential_matrix(int ell) {
  if (ell < 1 || ell > 3) throw DomainError("codifferential is defined for cochain degree 1..3");
  return complexes().dstar[static_cast<std::size_t>(ell)];
}

Matrix action_matrix(const Vec& x, int ell) {
  check_ell(ell);
  Matrix adx = so32::ad(x);
  const auto& mons = monomials(ell);
  std::size_t n = full_dim(ell);
  Matrix out(n, n);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    // values
    for (std::size_t a = 0; a < kValueDim; ++a)
      for (std::size_t a2 = 0; a2 < kValueDim; ++a2)
        if (!adx(a2, a).is_zero()) out(i * kValueDim + a2, i * kValueDim + a) += adx(a2, a);
    // arguments: -sum_s e^I(..., proj [x, Y_s], ...)
    for (std::size_t j = 0; j < mons.size(); ++j) {
      const Monomial& J = mons[j];
      Gaussian coef;
      for (std::size_t s = 0; s < J.size(); ++s)
        for (std::size_t b = 0; b < kArgDim; ++b) {
          const Gaussian& a_bs = adx(b, J[s]);
          if (a_bs.is_zero()) continue;
          std::vector<std::size_t> seq = J;
          seq[s] = b;
          int sign = evaluate_monomial(mons[i], seq);
          if (sign != 0) coef -= Gaussian(sign) * a_bs;
        }
      if (coef.is_zero()) continue;
      for (std::size_t a = 0; a < kValueDim; ++a) out(j * kValueDim + a, i * kValueDim + a) += coef;
    }
  }
  return out;
}

Cochain coboundary(const Cochain& c) {
  if (c.ell >= kMaxDegree) throw DomainError("coboundary of a top-degree cochain");
  return Cochain{c.ell + 1, c.k, coboundary_matrix(c.ell) * c.coeffs};
}

Cochain codifferential(const Cochain& c) {
  if (c.ell <= 0) throw DomainError("codifferential of a 0-cochain");
  return Cochain{c.ell - 1, c.k, codifferential_matrix(c.ell) * c.coeffs};
}

Cochain act(const Vec& x, const Cochain& c) { return Cochain{c.ell, c.k, action_matrix(x, c.ell) * c.coeffs}; }

namespace {

Subspace image_of(const Matrix& m, const CochainSpace& src, std::size_t target_dim) {
  std::vector<Vec> vs;
  for (auto s : src.slots) vs.push_back(m.column(s));
  return Subspace::span(target_dim, vs);
}

Subspace kernel_on(const Matrix& m, const CochainSpace& sp) {
  Matrix restricted(m.rows(), sp.dim());
  for (std::size_t i = 0; i < sp.dim(); ++i)
    for (std::size_t r = 0; r < m.rows(); ++r) restricted(r, i) = m(r, sp.slots[i]);
  Subspace ker = kernel(restricted);
  std::vector<Vec> vs;
  for (const auto& b : ker.basis()) vs.push_back(sp.embed(b));
  return Subspace::span(full_dim(sp.ell), vs);
}

}  // namespace

Subspace exact_space(int ell, int k) {
  check_ell(ell);
  if (ell == 0) return Subspace(full_dim(0));
  return image_of(coboundary_matrix(ell - 1), cochain_space(ell - 1, k), full_dim(ell));
}

Subspace coexact_space(int ell, int k) {
  check_ell(ell);
  if (ell == kMaxDegree) return Subspace(full_dim(ell));
  return image_of(codifferential_matrix(ell + 1), cochain_space(ell + 1, k), full_dim(ell));
}

Subspace closed_space(int ell, int k) {
  CochainSpace sp = cochain_space(ell, k);
  if (ell == kMaxDegree) return sp.as_subspace();
  return kernel_on(coboundary_matrix(ell), sp);
}

Subspace coclosed_space(int ell, int k) {
  CochainSpace sp = cochain_space(ell, k);
  if (ell == 0) return sp.as_subspace();
  return kernel_on(codifferential_matrix(ell), sp);
}

Subspace harmonic_space(int ell, int k) { return intersect(closed_space(ell, k), coclosed_space(ell, k)); }

HodgeTriple hodge_decompose(const Cochain& c) {
  Subspace e = exact_space(c.ell, c.k), h = harmonic_space(c.ell, c.k), x = coexact_space(c.ell, c.k);
  std::vector<Vec> cols;
  for (const auto* s : {&e, &h, &x})
    for (const auto& b : s->basis()) cols.push_back(b);
  HodgeTriple out{Cochain::zero(c.ell, c.k), Cochain::zero(c.ell, c.k), Cochain::zero(c.ell, c.k)};
  if (cols.empty()) {
    if (!c.is_zero()) throw Error("cochain outside an empty space");
    return out;
  }
  AffineSolution sol = solve(Matrix::from_columns(cols, full_dim(c.ell)), c.coeffs);
  if (!sol.consistent || sol.kernel.dim() != 0) throw Error("Hodge decomposition is not a direct sum");
  std::size_t pos = 0;
  for (auto [space, part] : {std::pair{&e, &out.exact}, {&h, &out.harmonic}, {&x, &out.coexact}})
    for (const auto& b : space->basis()) axpy(part->coeffs, sol.particular[pos++], b);
  return out;
}

int cohomology_dim(int ell, int k) {
  return static_cast<int>(closed_space(ell, k).dim()) - static_cast<int>(exact_space(ell, k).dim());
}

std::string format(const Cochain& c) {
  std::string out;
  const auto& mons = monomials(c.ell);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    Vec v(c.coeffs.begin() + static_cast<long>(i * kValueDim), c.coeffs.begin() + static_cast<long>((i + 1) * kValueDim));
    if (tanaka::is_zero(v)) continue;
    if (!out.empty()) out += "; ";
    std::string args;
    for (auto a : mons[i]) args += (args.empty() ? "" : " ^ ") + so32::label(a, so32::Basis::Real);
    out += (args.empty() ? "()" : args) + " -> " + so32::format(v, so32::Basis::Real);
  }
  return out.empty() ? "0" : out;
}

}  // namespace tanaka::cochain

#include "tanaka/prolongation.hpp"

#include "tanaka/endos.hpp"
#include "tanaka/so32.hpp"

namespace tanaka::prolong {

namespace cx = so32::cx;
namespace re = so32::real;
using cochain::Cochain;
using so32::kDim;

namespace {

Vec cunit(std::size_t i) { return unit_vec(kDim, i); }

Vec runit(std::size_t i, const Gaussian& s = Gaussian(1)) { return s * unit_vec(kDim, i); }

// Real 1-cochain from the images of the complex arguments e^-2, e^-1(10), e^-1(01).
Cochain cochain_from_images(int k, const std::array<Vec, 3>& images) {
  Vec coeffs(cochain::full_dim(1));
  for (std::size_t j = 0; j < 3; ++j) {
    Vec arg = so32::to_complex(so32::basis_vec(j));
    Vec value(kDim);
    for (std::size_t t = 0; t < 3; ++t)
      if (!arg[t].is_zero()) axpy(value, arg[t], images[t]);
    Vec real = so32::from_complex(value);
    if (!is_real(real)) throw DomainError("cochain images are not conjugation symmetric");
    for (std::size_t c = 0; c < kDim; ++c) coeffs[cochain::slot(1, j, c)] = real[c];
  }
  return Cochain::make(1, k, std::move(coeffs));
}

std::array<Vec, 3> images_of(const Cochain& c) {
  std::array<Vec, 3> out;
  for (std::size_t t = 0; t < 3; ++t) {
    Vec arg = so32::from_complex(so32::basis_vec(t));
    Vec value(kDim);
    for (std::size_t j = 0; j < 3; ++j)
      if (!arg[j].is_zero()) axpy(value, arg[j], c.value({j}));
    out[t] = so32::to_complex(value);
  }
  return out;
}

Vec conj_image(const Vec& v) { return so32::conjugate_complex(v); }

Matrix embed_m(const Matrix& a) {
  Matrix out(kDim, kDim);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  return out;
}

Matrix restrict_m(const Matrix& a) {
  Matrix out(5, 5);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) out(r, c) = a(r, c);
  return out;
}

// Real solutions of complex linear equations: split rows into real and imaginary parts.
Subspace real_kernel(const std::vector<Vec>& complex_rows, std::size_t ncols) {
  std::vector<Vec> rows;
  for (const auto& r : complex_rows) {
    Vec re_part(ncols), im_part(ncols);
    for (std::size_t c = 0; c < ncols; ++c) {
      re_part[c] = Gaussian(r[c].re());
      im_part[c] = Gaussian(r[c].im());
    }
    rows.push_back(re_part);
    rows.push_back(im_part);
  }
  if (rows.empty()) return Subspace::full(ncols);
  return kernel(Matrix::from_rows(rows, ncols));
}

Vec combine(const std::vector<Vec>& vectors, const Vec& coeffs, std::size_t n) {
  Vec out(n);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (!coeffs[i].is_zero()) axpy(out, coeffs[i], vectors[i]);
  return out;
}

}  // namespace

Cochain degree_one_cochain(const DegreeOneParams& p) {
  Vec em2 = p.lambda * cunit(cx::em1_10) + p.lambda.conj() * cunit(cx::em1_01);
  Vec em1 = p.mu * cunit(cx::e0_10) + p.nu * cunit(cx::E0_10) + p.nu_prime * cunit(cx::E0_01);
  return cochain_from_images(1, {em2, em1, conj_image(em1)});
}

DegreeOneParams degree_one_params(const Cochain& c) {
  auto img = images_of(c);
  return {img[0][cx::em1_10], img[1][cx::e0_10], img[1][cx::E0_10], img[1][cx::E0_01]};
}

Cochain l1_member(const Gaussian& lambda, const Gaussian& mu, const Gaussian& nu) {
  return degree_one_cochain({lambda, mu, nu, nu - mu.conj()});
}

Subspace l1_subspace() {
  const Gaussian one(1), i = Gaussian::i(), zero(0);
  std::vector<Vec> gens;
  for (const auto& s : {one, i}) {
    gens.push_back(l1_member(s, zero, zero).coeffs);
    gens.push_back(l1_member(zero, s, zero).coeffs);
    gens.push_back(l1_member(zero, zero, s).coeffs);
  }
  return Subspace::span(cochain::full_dim(1), gens);
}

Matrix cochain_endo(const Cochain& c) {
  if (c.ell != 1) throw DomainError("endomorphism form needs a 1-cochain");
  Matrix out(kDim, kDim);
  for (std::size_t j = 0; j < 3; ++j) {
    Vec v = c.value({j});
    for (std::size_t r = 0; r < kDim; ++r) out(r, j) = v[r];
  }
  return out;
}

ProlongationStep prolong_step0() {
  auto ambient = endos::gl_graded(endos::Carrier::M, 0, true);
  auto members = ambient.members();
  const std::size_t m = members.size();

  const Vec e1 = cunit(cx::em1_10), e1b = cunit(cx::em1_01);
  const Vec z = cunit(cx::e0_10), zb = cunit(cx::e0_01);
  auto br = [](const Vec& a, const Vec& b) { return so32::bracket_complex(a, b); };

  // Derivation conditions on [m^-1(10), m^-1(01)] and on the double bracket with m^0.
  auto conditions = [&](const Matrix& b) {
    std::vector<Vec> out;
    out.push_back(br(b * e1, e1b) + br(e1, b * e1b) - b * br(e1, e1b));
    for (const auto& [x, y] : {std::pair{z, e1b}, std::pair{zb, e1}}) {
      Vec xy = br(x, y);
      out.push_back(br(br(b * x, y), y) + br(br(x, b * y), y) + br(xy, b * y) - b * br(xy, y));
    }
    return out;
  };

  std::vector<std::vector<Vec>> per_member;
  for (const auto& a : members) per_member.push_back(conditions(torsion::endo_to_complex(embed_m(a))));
  std::vector<Vec> rows;
  for (std::size_t e = 0; e < per_member[0].size(); ++e)
    for (std::size_t c = 0; c < kDim; ++c) {
      Vec row(m);
      for (std::size_t i = 0; i < m; ++i) row[i] = per_member[i][e][c];
      rows.push_back(row);
    }
  Subspace coeffs = real_kernel(rows, m);

  std::vector<Vec> flat;
  for (const auto& a : members) flat.push_back(endos::flatten(a));
  std::vector<Vec> solved;
  for (const auto& c : coeffs.basis()) solved.push_back(combine(flat, c, 25));

  ProlongationStep s;
  s.step = 0;
  s.algebra = Subspace::span(25, solved);
  s.witnesses = {runit(re::E0_1), runit(re::E0_2)};
  for (const auto& w : s.witnesses) s.generators.push_back(embed_m(endos::truncated_ad(w, endos::Carrier::M)));

  bool tau_ok = true, mu_ok = true;
  for (const auto& v : s.algebra.basis()) {
    Matrix b = torsion::endo_to_complex(embed_m(endos::unflatten(v, 5)));
    Gaussian tau = b(cx::em2, cx::em2), lambda = b(cx::em1_10, cx::em1_10), mu = b(cx::e0_10, cx::e0_10);
    if (tau != Gaussian(2 * lambda.re())) tau_ok = false;
    if (mu != Gaussian(0, 2 * lambda.im())) mu_ok = false;
  }
  s.relations = {{"tau = 2Re(lambda)", tau_ok}, {"mu = 2i Im(lambda)", mu_ok}};
  return s;
}

ProlongationStep prolong_step1() {
  ProlongationStep s;
  s.step = 1;
  s.algebra = intersect(l1_subspace(), kernel(cochain::coboundary_matrix(1)));
  const Gaussian half_i(0, rat(1, 2));
  for (const auto& lambda : {Gaussian(1), Gaussian::i()})
    s.generators.push_back(cochain_endo(l1_member(lambda, -half_i * lambda, half_i * lambda.conj())));
  s.witnesses = {runit(re::E1_2, Gaussian(-1)), runit(re::E1_1)};

  bool ok = true;
  for (const auto& v : s.algebra.basis()) {
    auto p = degree_one_params(Cochain::make(1, 1, v));
    if (p.nu != half_i * p.lambda.conj() || p.mu != -half_i * p.lambda || !p.nu_prime.is_zero()) ok = false;
  }
  s.relations = {{"(nu, mu, nu') = (i conj(lambda)/2, -i lambda/2, 0)", ok}};
  return s;
}

ProlongationStep prolong_step2() {
  ProlongationStep s;
  s.step = 2;
  s.algebra = cochain::closed_space(1, 2);
  const Gaussian i = Gaussian::i();
  Cochain gen = cochain_from_images(
      2, {cunit(cx::E0_10) + cunit(cx::E0_01), i * cunit(cx::E1_10), -i * cunit(cx::E1_01)});
  s.generators = {cochain_endo(gen)};
  s.witnesses = {runit(re::E2)};

  // e^-2 -> lambda e^0(10) + mu E^0(10) + conj, e^-1(10) -> nu E^1(10) + nu' E^1(01)
  bool ok = true;
  for (const auto& v : s.algebra.basis()) {
    auto img = images_of(Cochain::make(1, 2, v));
    Gaussian lambda = img[0][cx::e0_10], mu = img[0][cx::E0_10];
    Gaussian nu = img[1][cx::E1_10], nu_prime = img[1][cx::E1_01];
    if (!lambda.is_zero() || !mu.is_real() || nu != i * mu || !nu_prime.is_zero()) ok = false;
  }
  s.relations = {{"(lambda, mu, nu, nu') = (0, t, it, 0), t real", ok}};
  return s;
}

WirtingerPair wirtinger(const Vec& at_one, const Vec& at_i) {
  const Gaussian i = Gaussian::i(), half(rat(1, 2));
  return {half * (at_one - i * at_i), half * (at_one + i * at_i)};
}

StepThreeObstruction step3_obstruction() {
  auto value = [](const Cochain& b) {
    return torsion::FullTorsion::from_ctorsion(cochain::coboundary(b)).at(cx::em2, cx::em1_10);
  };
  auto lambda_member = [](const Gaussian& l) {
    return cochain_from_images(3, {l * cunit(cx::E1_10) + l.conj() * cunit(cx::E1_01), zero_vec(kDim),
                                   zero_vec(kDim)});
  };
  auto mu_member = [](const Gaussian& m) {
    return cochain_from_images(3, {zero_vec(kDim), m * cunit(cx::E2), m.conj() * cunit(cx::E2)});
  };
  const Gaussian one(1), i = Gaussian::i();
  std::vector<Vec> cols = {value(lambda_member(one)), value(lambda_member(i)), value(mu_member(one)),
                           value(mu_member(i))};
  StepThreeObstruction out;
  out.lambda = wirtinger(cols[0], cols[1]);
  out.mu = wirtinger(cols[2], cols[3]);
  std::vector<Vec> rows;
  for (std::size_t c = 0; c < kDim; ++c) {
    Vec row(4);
    for (std::size_t j = 0; j < 4; ++j) row[j] = cols[j][c];
    rows.push_back(row);
  }
  out.forces_zero = real_kernel(rows, 4).dim() == 0;
  return out;
}

ProlongationStep prolong_step3() {
  ProlongationStep s;
  s.step = 3;
  s.algebra = cochain::closed_space(1, 3);
  s.relations = {{"lambda = 0 = mu", step3_obstruction().forces_zero}};
  return s;
}

ProlongationStep prolong_step(int step) {
  switch (step) {
    case 0: return prolong_step0();
    case 1: return prolong_step1();
    case 2: return prolong_step2();
    case 3: return prolong_step3();
    default: throw DomainError("prolongation step must be 0..3");
  }
}

std::size_t top_gauge_dim(int k) {
  return endos::gl_filtered(endos::Carrier::M_H, k, false, false).dim();
}

Subspace gauge_space(int k) {
  if (k == 1) return l1_subspace();
  if (k == 2 || k == 3) return cochain::cochain_space(1, k).as_subspace();
  throw DomainError("gauge degree must be 1..3");
}

const InnerProduct& invariant_inner_product() {
  static const InnerProduct ip = [] {
    InnerProduct out;
    out.domain = cochain::exact_space(2, 1);
    const auto& basis = out.domain.basis();
    const std::size_t n = basis.size();
    out.gram = Matrix(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Gaussian s;
        for (std::size_t c = 0; c < basis[a].size(); ++c) s += basis[a][c] * basis[b][c];
        out.gram(a, b) = s;
      }
    out.symmetric = out.gram == out.gram.transpose();

    // Symmetric elimination; positive definite iff every pivot is positive.
    Matrix w = out.gram;
    out.positive_definite = true;
    for (std::size_t p = 0; p < n; ++p) {
      const Gaussian piv = w(p, p);
      if (!piv.is_real() || sgn(piv.re()) <= 0) {
        out.positive_definite = false;
        break;
      }
      out.pivots.push_back(piv.re());
      for (std::size_t r = p + 1; r < n; ++r) {
        Gaussian f = w(r, p) / piv;
        for (std::size_t c = p; c < n; ++c) w(r, c) -= f * w(p, c);
      }
    }

    Matrix act = cochain::action_matrix(runit(re::E0_2), 2);
    Matrix rep(n, n);
    bool closed = true;
    for (std::size_t j = 0; j < n; ++j) {
      auto coords = out.domain.coordinates(act * basis[j]);
      if (!coords) {
        closed = false;
        break;
      }
      for (std::size_t r = 0; r < n; ++r) rep(r, j) = (*coords)[r];
    }
    out.skew_rotation = closed && (out.gram * rep + rep.transpose() * out.gram).is_zero();
    return out;
  }();
  return ip;
}

Subspace normalization_space(int k) {
  if (k < 1 || k > 3) throw DomainError("normalization degree must be 1..3");
  Subspace coclosed = cochain::coclosed_space(2, k);
  if (k > 1) return coclosed;

  const auto& ip = invariant_inner_product();
  Subspace gauge_image = map_subspace(cochain::coboundary_matrix(1), l1_subspace());
  const std::size_t n = ip.domain.dim();
  std::vector<Vec> rows;
  for (const auto& w : gauge_image.basis()) {
    Vec y = *ip.domain.coordinates(w);
    Vec row(n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) row[c] += y[r] * ip.gram(r, c);
    rows.push_back(row);
  }
  Subspace perp_coords = rows.empty() ? Subspace::full(n) : kernel(Matrix::from_rows(rows, n));
  std::vector<Vec> perp;
  for (const auto& y : perp_coords.basis()) perp.push_back(combine(ip.domain.basis(), y, ip.domain.ambient_dim()));
  return sum(Subspace::span(ip.domain.ambient_dim(), perp), coclosed);
}

Normalized normalize_ctorsion(const Cochain& c) {
  if (c.ell != 2) throw DomainError("c-torsion must be a 2-cochain");
  const int k = c.k;
  Subspace gauge = gauge_space(k);
  Subspace normal = normalization_space(k);
  const Matrix& d = cochain::coboundary_matrix(1);
  std::vector<Vec> cols;
  for (const auto& g : gauge.basis()) cols.push_back(d * g);
  for (const auto& v : normal.basis()) cols.push_back(v);
  const std::size_t n = cochain::full_dim(2);
  auto sol = solve(Matrix::from_columns(cols, n), c.coeffs);
  if (!sol.consistent) throw DomainError("c-torsion outside the gauge image plus normalization space");

  const std::size_t m = gauge.dim();
  Vec b(cochain::full_dim(1)), res(n);
  for (std::size_t i = 0; i < m; ++i)
    if (!sol.particular[i].is_zero()) axpy(b, sol.particular[i], gauge.basis()[i]);
  for (std::size_t j = 0; j < normal.dim(); ++j)
    if (!sol.particular[m + j].is_zero()) axpy(res, sol.particular[m + j], normal.basis()[j]);
  return {Cochain::make(1, k, std::move(b)), Cochain::make(2, k, std::move(res))};
}

Gaussian FrameFunctional::operator()(const torsion::FullTorsion& t) const {
  return t.graded_component(degree).coefficient(first, second, component);
}

std::vector<FrameFunctional> frame_conditions(int step) {
  switch (step) {
    case 1:
      return {{"alpha", cx::em1_10, cx::e0_10, cx::em1_10, 0},
              {"alpha-bar", cx::em1_01, cx::e0_01, cx::em1_01, 0},
              {"beta", cx::em1_10, cx::e0_10, cx::e0_01, 1}};
    case 2:
      return {{"gamma", cx::em1_10, cx::e0_10, cx::e0_10, 1},
              {"gamma-mixed", cx::em1_01, cx::e0_10, cx::e0_01, 1}};
    case 3:
      return {{"epsilon(10)", cx::em2, cx::e0_10, cx::E0_10, 2},
              {"epsilon(01)", cx::em2, cx::e0_10, cx::E0_01, 2}};
    default: throw DomainError("frame-condition step must be 1..3");
  }
}

namespace {

Matrix m0_gauge(std::size_t to_10, std::size_t to_01, const Gaussian& nu, const Gaussian& nu_prime) {
  std::array<Vec, 10> images;
  for (auto& v : images) v = zero_vec(kDim);
  images[cx::e0_10] = nu * cunit(to_10) + nu_prime * cunit(to_01);
  images[cx::e0_01] = conj_image(images[cx::e0_10]);
  return torsion::endo_from_images(images);
}

}  // namespace

Matrix gauge_h0_on_m0(const Gaussian& nu, const Gaussian& nu_prime) {
  return m0_gauge(cx::E0_10, cx::E0_01, nu, nu_prime);
}

Matrix gauge_h1_on_m0(const Gaussian& nu, const Gaussian& nu_prime) {
  return m0_gauge(cx::E1_10, cx::E1_01, nu, nu_prime);
}

Matrix gauge_h2_on_m0(const Gaussian& nu) { return m0_gauge(cx::E2, cx::E2, nu, Gaussian(0)); }

Matrix degree_one_gauge(const DegreeOneParams& p) {
  return torsion::endo_to_complex(cochain_endo(degree_one_cochain(p)));
}

Matrix isotropy_map(const Vec& x) {
  Matrix out(5, 5);
  for (std::size_t j = 0; j < 5; ++j) {
    Vec v = so32::bracket(x, so32::basis_vec(j));
    for (std::size_t r = 0; r < 5; ++r) out(r, j) = v[r];
  }
  return out;
}

std::vector<Matrix> isotropy_generators() {
  std::vector<Matrix> out;
  for (int k = 0; k <= 2; ++k)
    {
      auto step = prolong_step(k);
      for (const auto& g : step.generators) out.push_back(restrict_m(g));
    }
  return out;
}

std::vector<Vec> isotropy_witnesses() {
  std::vector<Vec> out;
  for (int k = 0; k <= 2; ++k)
    {
      auto step = prolong_step(k);
      for (const auto& w : step.witnesses) out.push_back(w);
    }
  return out;
}

std::vector<CompatibilityCheck> bracket_compatibility() {
  auto gens = isotropy_generators();
  auto wits = isotropy_witnesses();
  std::vector<CompatibilityCheck> out;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      out.push_back({a, b, commutator(gens[a], gens[b]) == isotropy_map(so32::bracket(wits[a], wits[b]))});
  return out;
}

}  // namespace tanaka::prolong

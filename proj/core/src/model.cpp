#include "tanaka/model.hpp"

#include "tanaka/so32.hpp"

namespace tanaka::model {

using poly::PolyScalar;
using poly::PolyVectorField;

namespace {

Matrix i32_form() {
  Matrix m(5, 5);
  for (std::size_t i = 0; i < 5; ++i) m(i, i) = i < 3 ? 1 : -1;
  return m;
}

const Matrix& form_of(Chart c) {
  static const Matrix i32 = i32_form();
  return c == Chart::I32 ? i32 : so32::form_matrix();
}

// Iota coordinates from I32 coordinates; carries the base point into the orbit Im(t^3 conj t^4) > 0.
const Matrix& iota_from_i32() {
  static const Matrix m = [] {
    const Gaussian h(rat(1, 2));
    Matrix c(5, 5);
    c(0, 0) = 1, c(0, 3) = 1;
    c(1, 1) = 1, c(1, 4) = -1;
    c(2, 2) = 1;
    c(3, 1) = h, c(3, 4) = h;
    c(4, 0) = h, c(4, 3) = -h;
    return c;
  }();
  return m;
}

const Matrix& i32_from_iota() {
  static const Matrix m = [] {
    const Gaussian h(rat(1, 2));
    Matrix c(5, 5);
    c(0, 0) = h, c(0, 4) = 1;
    c(3, 0) = h, c(3, 4) = -1;
    c(1, 1) = h, c(1, 3) = 1;
    c(4, 1) = -h, c(4, 3) = 1;
    c(2, 2) = 1;
    return c;
  }();
  return m;
}

Gaussian bilinear(const Vec& a, const Matrix& q, const Vec& b) {
  Vec qb = q * b;
  Gaussian s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * qb[i];
  return s;
}

std::size_t rank_of(const std::vector<Vec>& vs, std::size_t n) { return Subspace::span(n, vs).dim(); }

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
  return kernel(Matrix::from_rows(rows, ncols));
}

const std::vector<PolyVectorField>& holomorphic_spanning() {
  static const std::vector<PolyVectorField> v = {cone_fields().l12, cone_fields().l13, cone_fields().l23};
  return v;
}

// Two (1,0) spanning fields independent at p.
std::vector<PolyVectorField> frame_at(const ConePoint& p) {
  const auto& all = holomorphic_spanning();
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b)
      if (rank_of({all[a].eval(p.z), all[b].eval(p.z)}, 6) == 2) return {all[a], all[b]};
  throw DomainError("the CR distribution degenerates at " + p.str());
}

Subspace rib_at(const ConePoint& p) {
  const auto& r = cone_fields().rib;
  return Subspace::span(6, {r.real_part().eval(p.z), r.J().real_part().eval(p.z)});
}

// Tangent vector of the conjugate field: swap the (1,0) and (0,1) halves and conjugate.
Vec conj_swap(const Vec& v) {
  Vec out(6);
  for (std::size_t j = 0; j < 3; ++j) {
    out[j] = v[j + 3].conj();
    out[j + 3] = v[j].conj();
  }
  return out;
}

// A real polynomial vanishing at p, used to build alternative extensions.
PolyScalar vanishing_at(const ConePoint& p) {
  return PolyScalar::x(0) - PolyScalar(Gaussian(p.z[0].re())) + PolyScalar::y(1) -
         PolyScalar(Gaussian(p.z[1].im()));
}

}  // namespace

ProjectivePoint ProjectivePoint::make(Vec coords, Chart chart) {
  if (coords.size() != 5) throw DimensionError("projective points have 5 coordinates");
  if (is_zero(coords)) throw DomainError("projective point must be nonzero");
  return {std::move(coords), chart};
}

ProjectivePoint ProjectivePoint::to_chart(Chart target) const {
  if (target == chart) return *this;
  return {(target == Chart::Iota ? iota_from_i32() : i32_from_iota()) * coords, target};
}

bool ProjectivePoint::same_point(const ProjectivePoint& other) const {
  return rank_of({coords, other.to_chart(chart).coords}, 5) == 1;
}

ProjectivePoint base_point() {
  return ProjectivePoint::make({Gaussian(1), Gaussian::i(), Gaussian(0), Gaussian(0), Gaussian(0)}, Chart::Iota);
}

QuadricValues quadric_eval(const ProjectivePoint& t) {
  const Matrix& q = form_of(t.chart);
  QuadricValues out;
  out.bilinear = bilinear(t.coords, q, t.coords);
  Gaussian h = bilinear(conj(t.coords), q, t.coords);
  out.hermitian = h.re();
  if (t.chart == Chart::I32) out.orbit_sign = (t.coords[3] * t.coords[4].conj()).im();
  return out;
}

std::array<PolyScalar, 5> embed_f_poly() {
  const Gaussian half_i(Rational(0), rat(1, 2));
  PolyScalar q = PolyScalar::z(0) * PolyScalar::z(0) + PolyScalar::z(1) * PolyScalar::z(1) -
                 PolyScalar::z(2) * PolyScalar::z(2);
  return {PolyScalar(-half_i) - PolyScalar(half_i) * q, PolyScalar::z(0), PolyScalar::z(1), PolyScalar::z(2),
          PolyScalar(-half_i) + PolyScalar(half_i) * q};
}

ProjectivePoint embed_f(const poly::Point& z) {
  auto f = embed_f_poly();
  Vec t(5);
  for (std::size_t i = 0; i < 5; ++i) t[i] = f[i].eval(z);
  return ProjectivePoint::make(std::move(t), Chart::I32);
}

EmbeddingIdentities embedding_identity_check() {
  auto f = embed_f_poly();
  EmbeddingIdentities out;
  PolyScalar herm;
  for (std::size_t i = 0; i < 5; ++i) {
    PolyScalar sign(i < 3 ? 1 : -1);
    out.bilinear += sign * f[i] * f[i];
    herm += sign * f[i].conj() * f[i];
  }
  out.hermitian_minus_rho2 = herm - PolyScalar(2) * rho();
  return out;
}

Subspace isotropy_algebra(const ProjectivePoint& point) {
  const Vec v = point.to_chart(Chart::Iota).coords;
  const auto& basis = so32::basis_matrices();
  std::vector<Vec> images;
  for (const auto& a : basis) images.push_back(a * v);
  // A v parallel to v: all 2x2 minors of [A v | v] vanish.
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      Vec row(basis.size());
      for (std::size_t k = 0; k < basis.size(); ++k) row[k] = images[k][i] * v[j] - images[k][j] * v[i];
      rows.push_back(row);
    }
  return real_kernel(rows, basis.size());
}

LeviCubic model_levi_cubic(const Rational& scale) {
  namespace cx = so32::cx;
  auto theta = [&](const Vec& x) { return Gaussian(scale) * x[cx::em2]; };
  auto br = [](const Vec& a, const Vec& b) { return so32::bracket_complex(a, b); };
  const Vec e1 = unit_vec(10, cx::em1_10), e1b = unit_vec(10, cx::em1_01), z = unit_vec(10, cx::e0_10);
  // J acts by -i on the (01) part.
  const Vec j_e1b = Gaussian(Rational(0), Rational(-1)) * e1b;
  return {-theta(br(e1, j_e1b)), theta(br(br(z, e1b), e1b))};
}

ConePoint ConePoint::make(const std::array<Rational, 3>& x, const std::array<Rational, 3>& y) {
  if (x[0] * x[0] + x[1] * x[1] - x[2] * x[2] != 0) throw DomainError("real part is not on the light cone");
  if (sgn(x[2]) <= 0) throw DomainError("real part is not on the future cone (x3 must be positive)");
  return {{Gaussian(x[0], y[0]), Gaussian(x[1], y[1]), Gaussian(x[2], y[2])}};
}

ConePoint ConePoint::parse(std::string_view csv) {
  std::vector<Rational> vals;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    vals.push_back(parse_rational(csv.substr(start, end - start)));
    start = end + 1;
  }
  if (vals.size() != 6) throw ParseError("expected six comma-separated rationals x1,x2,x3,y1,y2,y3");
  return make({vals[0], vals[1], vals[2]}, {vals[3], vals[4], vals[5]});
}

std::string ConePoint::str() const {
  std::string out = "(";
  for (std::size_t j = 0; j < 3; ++j) out += (j ? ", " : "") + z[j].str();
  return out + ")";
}

const std::vector<ConePoint>& sample_points() {
  static const std::vector<ConePoint> pts = [] {
    auto r = [](long a, long b = 1) { return rat(a, b); };
    return std::vector<ConePoint>{
        ConePoint::make({r(1), r(0), r(1)}, {r(0), r(0), r(0)}),
        ConePoint::make({r(3), r(4), r(5)}, {r(1, 2), r(-1, 3), r(1, 4)}),
        ConePoint::make({r(5), r(12), r(13)}, {r(1), r(2), r(-1)}),
        ConePoint::make({r(8), r(15), r(17)}, {r(0), r(0), r(0)}),
        ConePoint::make({r(0), r(1), r(1)}, {r(2), r(-3), r(5)}),
        ConePoint::make({r(-4), r(3), r(5)}, {r(-7), r(1), r(3)}),
    };
  }();
  return pts;
}

PolyScalar rho() {
  return PolyScalar::x(0) * PolyScalar::x(0) + PolyScalar::x(1) * PolyScalar::x(1) -
         PolyScalar::x(2) * PolyScalar::x(2);
}

const ConeFields& cone_fields() {
  static const ConeFields f = [] {
    PolyScalar r = rho();
    std::array<PolyScalar, 3> dz = {r.derivative(0), r.derivative(1), r.derivative(2)};
    auto l = [&](std::size_t j, std::size_t k) {
      std::array<PolyScalar, 3> c;
      c[j] = dz[k];
      c[k] = -dz[j];
      return PolyVectorField::holomorphic(c);
    };
    return ConeFields{l(0, 1), l(0, 2), l(1, 2),
                      PolyVectorField::holomorphic({PolyScalar::x(0), PolyScalar::x(1), PolyScalar::x(2)})};
  }();
  return f;
}

PolyScalar theta(const PolyVectorField& v) {
  static const PolyScalar r = rho();
  PolyScalar s;
  for (std::size_t j = 0; j < 3; ++j) s += v[j] * r.derivative(j) - v[j + 3] * r.derivative(j + 3);
  return PolyScalar(Gaussian(Rational(0), rat(1, 2))) * s;
}

bool in_distribution_at(const ConePoint& p, const PolyVectorField& v) {
  return v.apply(rho()).eval(p.z).is_zero() && theta(v).eval(p.z).is_zero();
}

Gaussian levi_form_at(const ConePoint& p, const PolyVectorField& v, const PolyVectorField& w) {
  if (!in_distribution_at(p, v) || !in_distribution_at(p, w))
    throw DomainError("Levi form arguments must be tangent to the CR distribution at " + p.str());
  return -theta(bracket(v, w.J())).eval(p.z);
}

Gaussian cubic_form_at(const ConePoint& p, const PolyVectorField& e, const PolyVectorField& h,
                       const PolyVectorField& h2) {
  if (!e.is_type10() || !in_distribution_at(p, e) || !rib_at(p).contains(e.real_part().eval(p.z)))
    throw DomainError("first cubic-form argument must be a (1,0) rib field at " + p.str());
  for (const auto* f : {&h, &h2})
    if (!f->is_type01() || !in_distribution_at(p, *f))
      throw DomainError("cubic-form arguments 2 and 3 must be (0,1) sections of D at " + p.str());
  return theta(bracket(bracket(e, h), h2)).eval(p.z);
}

LeviAnalysis levi_analysis(const ConePoint& p) {
  LeviAnalysis out;
  auto frame = frame_at(p);
  for (const auto& l : frame) {
    out.real_basis.push_back(l.real_part());
    out.real_basis.push_back(l.J().real_part());
  }
  const std::size_t n = out.real_basis.size();
  out.real_form = Matrix(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out.real_form(a, b) = levi_form_at(p, out.real_basis[a], out.real_basis[b]);
  out.symmetric = out.real_form == out.real_form.transpose();
  out.real_rank = rank(out.real_form);

  out.hermitian = Matrix(frame.size(), frame.size());
  for (std::size_t a = 0; a < frame.size(); ++a)
    for (std::size_t b = 0; b < frame.size(); ++b)
      out.hermitian(a, b) = Gaussian::i() * theta(bracket(frame[a], frame[b].conj())).eval(p.z);
  out.hermitian_rank = rank(out.hermitian);

  std::vector<Vec> kernel_vectors;
  const Subspace null_space = kernel(out.real_form);
  for (const auto& c : null_space.basis()) {
    Vec v(6);
    for (std::size_t a = 0; a < n; ++a)
      if (!c[a].is_zero()) axpy(v, c[a], out.real_basis[a].eval(p.z));
    kernel_vectors.push_back(v);
  }
  out.kernel = Subspace::span(6, kernel_vectors);
  out.rib = rib_at(p);
  return out;
}

CubicWitness cubic_witness(const ConePoint& p) {
  const auto& rib = cone_fields().rib;
  Subspace rib_line = Subspace::span(6, {rib.eval(p.z)});
  for (const auto& l : holomorphic_spanning()) {
    Vec v = l.eval(p.z);
    if (is_zero(v) || rib_line.contains(v)) continue;
    PolyVectorField h = l.conj();
    return {rib, h, cubic_form_at(p, rib, h, h)};
  }
  throw DomainError("no (1,0) field transverse to the rib at " + p.str());
}

FreemanRanks freeman_ranks_at(const ConePoint& p) {
  FreemanRanks out;
  const auto& spanning = holomorphic_spanning();
  std::vector<Vec> d10, d01;
  for (const auto& l : spanning) {
    d10.push_back(l.eval(p.z));
    d01.push_back(l.conj().eval(p.z));
  }
  out.f_minus1 = rank_of(d10, 6);
  Subspace d01_space = Subspace::span(6, d01);

  // Next Freeman space from fields spanning the current one near p.
  auto step = [&](const std::vector<PolyVectorField>& fields) {
    std::vector<Vec> current;
    for (const auto& f : fields) current.push_back(f.eval(p.z));
    Subspace modulus = sum(Subspace::span(6, current), d01_space);
    std::vector<Vec> rows;
    for (const auto& l : spanning) {
      std::vector<Vec> residuals;
      for (const auto& f : fields) residuals.push_back(modulus.reduce(bracket(f, l.conj()).eval(p.z)));
      for (std::size_t c = 0; c < 6; ++c) {
        Vec row(fields.size());
        for (std::size_t i = 0; i < fields.size(); ++i) row[i] = residuals[i][c];
        rows.push_back(row);
      }
    }
    std::vector<Vec> out_vectors;
    const Subspace solutions = kernel(Matrix::from_rows(rows, fields.size()));
    for (const auto& c : solutions.basis()) {
      Vec v(6);
      for (std::size_t i = 0; i < fields.size(); ++i)
        if (!c[i].is_zero()) axpy(v, c[i], current[i]);
      out_vectors.push_back(v);
    }
    return Subspace::span(6, out_vectors);
  };

  Subspace f0 = step(spanning);
  out.f0 = f0.dim();
  std::vector<Vec> real_parts;
  for (const auto& v : f0.basis()) {
    real_parts.push_back(v + conj_swap(v));
    real_parts.push_back(Gaussian::i() * v + conj_swap(Gaussian::i() * v));
  }
  out.f0_is_rib = Subspace::span(6, real_parts) == rib_at(p);

  // The rib field spans F0 near p (regularity); anything else is reported.
  const auto& rib = cone_fields().rib;
  if (f0 != Subspace::span(6, {rib.eval(p.z)})) throw DomainError("F0 is not spanned by the rib field at " + p.str());
  out.f1 = step({rib}).dim();
  return out;
}

RibChecks rib_checks(const ConePoint& p) {
  const auto& r = cone_fields().rib;
  PolyVectorField re = r.real_part(), re_i = r.J().real_part();
  Subspace rib = rib_at(p);
  RibChecks out;
  out.j_invariant = rib.contains(re.J().eval(p.z)) && rib.contains(re_i.J().eval(p.z));
  out.involutive = rib.contains(bracket(re, re_i).eval(p.z));
  return out;
}

bool levi_extension_independent(const ConePoint& p) {
  auto an = levi_analysis(p);
  PolyScalar f = PolyScalar(1) + vanishing_at(p);
  PolyVectorField y = PolyVectorField::holomorphic({PolyScalar(1), PolyScalar(0), PolyScalar::z(1)}).real_part();
  const std::size_t n = an.real_basis.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      PolyVectorField v = f * an.real_basis[a] + rho() * y;
      PolyVectorField w = f * f * an.real_basis[b] - rho() * y.J();
      if (levi_form_at(p, v, w) != an.real_form(a, b)) return false;
    }
  return true;
}

bool cubic_extension_independent(const ConePoint& p) {
  auto w = cubic_witness(p);
  PolyScalar f = PolyScalar(1) + vanishing_at(p);
  PolyVectorField y = PolyVectorField::holomorphic({PolyScalar::z(2), PolyScalar(1), PolyScalar(0)}).conj();
  return cubic_form_at(p, f * w.e, w.h + rho() * y, f * w.h - rho() * y) == w.value;
}

bool cubic_linear_in_last(const ConePoint& p) {
  auto w = cubic_witness(p);
  return cubic_form_at(p, w.e, w.h, PolyScalar(2) * w.h) == Gaussian(2) * w.value;
}

}  // namespace tanaka::model

#include "doctest.h"

#include "tanaka/model.hpp"
#include "tanaka/so32.hpp"

using namespace tanaka;
using namespace tanaka::model;
using poly::PolyScalar;
using poly::PolyVectorField;

namespace {

Gaussian g(long re, long im = 0) { return Gaussian(Rational(re), Rational(im)); }
Gaussian gq(long rn, long rd, long in = 0, long id = 1) { return Gaussian(rat(rn, rd), rat(in, id)); }

// Rank of the complex Hessian of rho restricted to the holomorphic tangent space at p.
// rho_{z_j zbar_k} = eps_j / 2 delta_jk, tangency: sum eps_j x_j w_j = 0.
std::size_t oracle_levi_rank(const ConePoint& p) {
  const int eps[3] = {1, 1, -1};
  Vec normal(3);
  for (std::size_t j = 0; j < 3; ++j) normal[j] = Gaussian(eps[j] * p.z[j].re());
  Subspace tangent = kernel(Matrix::from_rows({normal}, 3));
  const auto& basis = tangent.basis();
  Matrix h(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Gaussian s;
      for (std::size_t j = 0; j < 3; ++j) s += Gaussian(rat(eps[j], 2)) * basis[a][j] * basis[b][j].conj();
      h(a, b) = s;
    }
  return rank(h);
}

}  // namespace

TEST_CASE("quadric evaluation and membership") {
  auto p = ProjectivePoint::make({gq(0, 1, -1, 2), g(3), g(4), g(5), gq(0, 1, -1, 2)}, Chart::I32);
  auto q = quadric_eval(p);
  CHECK(q.bilinear.is_zero());
  CHECK(q.hermitian == 0);
  REQUIRE(q.orbit_sign);
  CHECK(*q.orbit_sign == rat(5, 2));
  CHECK(q.member());

  auto off = quadric_eval(ProjectivePoint::make({g(1), g(0), g(0), g(0), g(0)}, Chart::I32));
  CHECK(off.bilinear == g(1));
  CHECK(off.hermitian == 1);
  CHECK_FALSE(off.member());

  // Opposite orbit: conjugate point.
  auto conj_p = ProjectivePoint::make(conj(p.coords), Chart::I32);
  CHECK(quadric_eval(conj_p).on_quadrics());
  CHECK_FALSE(quadric_eval(conj_p).member());

  CHECK_THROWS_AS(ProjectivePoint::make(zero_vec(5), Chart::I32), DomainError);
  CHECK_THROWS_AS(ProjectivePoint::make(zero_vec(4), Chart::I32), DimensionError);
}

TEST_CASE("base point and chart conversion") {
  auto xo = base_point();
  auto in_iota = quadric_eval(xo);
  CHECK(in_iota.on_quadrics());
  CHECK_FALSE(in_iota.orbit_sign);
  auto in_i32 = xo.to_chart(Chart::I32);
  CHECK(in_i32.coords == Vec{gq(1, 2), gq(0, 1, 1, 2), g(0), gq(1, 2), gq(0, 1, -1, 2)});
  auto qi = quadric_eval(in_i32);
  CHECK(qi.member());
  CHECK(*qi.orbit_sign == rat(1, 4));
  CHECK(in_i32.to_chart(Chart::Iota).coords == xo.coords);
  CHECK(in_i32.same_point(xo));

  // Conversion preserves both forms (form pulled back equals the other form).
  for (const auto& v : {Vec{g(1), g(2, 1), g(0, -3), gq(1, 2), g(4)}, Vec{g(0), g(1), g(1), g(0, 1), g(2, 2)}}) {
    auto a = ProjectivePoint::make(v, Chart::I32);
    auto b = a.to_chart(Chart::Iota);
    CHECK(quadric_eval(a).bilinear == quadric_eval(b).bilinear);
    CHECK(quadric_eval(a).hermitian == quadric_eval(b).hermitian);
  }
}

TEST_CASE("isotropy at the base point is the non-negative part") {
  namespace r = so32::real;
  auto iso = isotropy_algebra(base_point());
  CHECK(iso.dim() == 5);
  std::vector<Vec> expected;
  for (auto k : {r::E0_1, r::E0_2, r::E1_1, r::E1_2, r::E2}) expected.push_back(unit_vec(10, k));
  CHECK(iso == Subspace::span(10, expected));

  auto scaled = ProjectivePoint::make(Gaussian(rat(0, 1), rat(3)) * base_point().coords, Chart::Iota);
  CHECK(isotropy_algebra(scaled) == iso);
  CHECK(isotropy_algebra(base_point().to_chart(Chart::I32)) == iso);
}

TEST_CASE("embedding of the tube") {
  auto a = embed_f({g(3), g(4), g(5)});
  CHECK(quadric_eval(a).member());
  CHECK(a.same_point(ProjectivePoint::make({gq(0, 1, -1, 2), g(3), g(4), g(5), gq(0, 1, -1, 2)}, Chart::I32)));
  CHECK(quadric_eval(embed_f({g(1), g(0), g(1)})).member());

  auto b = embed_f({g(3, 1), g(4, -2), g(5, 7)});
  CHECK(quadric_eval(b).bilinear.is_zero());
  // <f,f> = 2 rho, and rho = 0 on the cone.
  auto origin = quadric_eval(embed_f({g(0), g(0), g(0)}));
  CHECK(origin.bilinear.is_zero());
  CHECK(origin.hermitian == 0);

  auto ids = embedding_identity_check();
  CHECK(ids.bilinear.is_zero());
  CHECK(ids.hermitian_minus_rho2.is_zero());
  CHECK(ids.holds());
}

TEST_CASE("model Levi and cubic values") {
  auto lc = model_levi_cubic();
  CHECK(lc.levi == gq(-1, 2));
  CHECK(lc.cubic == gq(0, 1, -1, 2));
  auto scaled = model_levi_cubic(rat(2));
  CHECK(scaled.levi == Gaussian(2) * lc.levi);
  CHECK(scaled.cubic == Gaussian(2) * lc.cubic);
}

TEST_CASE("cone points") {
  CHECK(sample_points().size() == 6);
  auto p = ConePoint::parse("3,4,5,1/2,-1/3,1/4");
  CHECK(p.z[0] == gq(3, 1, 1, 2));
  CHECK(p.z[1] == gq(4, 1, -1, 3));
  CHECK_THROWS_AS(ConePoint::parse("1,1,1,0,0,0"), DomainError);
  CHECK_THROWS_AS(ConePoint::parse("1,0,-1,0,0,0"), DomainError);
  CHECK_THROWS_AS(ConePoint::parse("1,0,1"), ParseError);
  CHECK_THROWS(ConePoint::parse("1,0,x,0,0,0"));
}

TEST_CASE("cone fields") {
  const auto& f = cone_fields();
  PolyScalar r = rho();
  CHECK(r.is_real());
  for (const auto* l : {&f.l12, &f.l13, &f.l23}) {
    CHECK(l->is_type10());
    CHECK(l->apply(r).is_zero());
  }
  CHECK(f.rib.apply(r) == r);
  for (const auto& p : sample_points()) {
    CHECK(rho().eval(p.z).is_zero());
    CHECK(in_distribution_at(p, f.rib));
    CHECK(in_distribution_at(p, f.l12.real_part()));
    CHECK(Subspace::span(6, {f.l12.eval(p.z), f.l13.eval(p.z), f.l23.eval(p.z)}).dim() == 2);
  }
  // The transverse field is not in D.
  auto d = PolyVectorField::holomorphic({PolyScalar(1), PolyScalar(0), PolyScalar(0)});
  CHECK_FALSE(in_distribution_at(sample_points()[0], d));
  CHECK(theta(f.rib.real_part()).is_real());
}

TEST_CASE("Levi form on the cone") {
  for (const auto& p : sample_points()) {
    CAPTURE(p.str());
    auto an = levi_analysis(p);
    CHECK(an.symmetric);
    CHECK(an.real_rank == 2);
    CHECK(an.hermitian_rank == 1);
    CHECK(an.hermitian_rank == oracle_levi_rank(p));
    CHECK(an.kernel.dim() == 2);
    CHECK(an.kernel_is_rib());
    CHECK(levi_extension_independent(p));
  }
  auto p = sample_points()[0];
  CHECK_THROWS_AS(levi_form_at(p, PolyVectorField::holomorphic({PolyScalar(1), PolyScalar(0), PolyScalar(0)}).real_part(),
                               cone_fields().rib.real_part()),
                  DomainError);
}

TEST_CASE("cubic form on the cone") {
  for (const auto& p : sample_points()) {
    CAPTURE(p.str());
    auto w = cubic_witness(p);
    CHECK_FALSE(w.value.is_zero());
    CHECK(cubic_extension_independent(p));
    CHECK(cubic_linear_in_last(p));
  }
  // At (1,0,1) the witness is h = conj(L12). By hand: [R, h] = (h - L12)/2, so the cubic value is
  // -theta([L12, conj L12])/2 = -(i/2)(x1^2 + x2^2)/2 = -i/4.
  auto w0 = cubic_witness(sample_points()[0]);
  CHECK(w0.h == cone_fields().l12.conj());
  CHECK(w0.value == gq(0, 1, -1, 4));

  // A first argument outside the rib is rejected.
  auto p = sample_points()[0];
  CHECK_THROWS_AS(cubic_form_at(p, cone_fields().l12, w0.h, w0.h), DomainError);
}

TEST_CASE("Freeman filtration and rib") {
  for (const auto& p : sample_points()) {
    CAPTURE(p.str());
    auto fr = freeman_ranks_at(p);
    CHECK(fr.f_minus1 == 2);
    CHECK(fr.f0 == 1);
    CHECK(fr.f1 == 0);
    CHECK(fr.f0_is_rib);
    auto rc = rib_checks(p);
    CHECK(rc.j_invariant);
    CHECK(rc.involutive);
  }
}

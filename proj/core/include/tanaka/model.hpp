#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tanaka/linalg.hpp"
#include "tanaka/poly.hpp"

namespace tanaka::model {

// I32: diag(1,1,1,-1,-1).  Iota: the anti-diagonal form used by the matrix realization.
enum class Chart { I32, Iota };

struct ProjectivePoint {
  Vec coords;  // length 5, nonzero
  Chart chart = Chart::I32;

  static ProjectivePoint make(Vec coords, Chart chart);
  ProjectivePoint to_chart(Chart target) const;
  // Equal as points of CP^4 (after moving to a common chart).
  bool same_point(const ProjectivePoint& other) const;
};

// The base point [1 : i : 0 : 0 : 0] in Iota coordinates.
ProjectivePoint base_point();

struct QuadricValues {
  Gaussian bilinear;
  Rational hermitian;
  std::optional<Rational> orbit_sign;  // Im(t^3 conj(t^4)), only in the I32 chart
  bool on_quadrics() const { return bilinear.is_zero() && sgn(hermitian) == 0; }
  bool member() const { return on_quadrics() && orbit_sign && sgn(*orbit_sign) > 0; }
};
QuadricValues quadric_eval(const ProjectivePoint& t);

ProjectivePoint embed_f(const poly::Point& z);
// The five homogeneous coordinates of the embedding as polynomials in z.
std::array<poly::PolyScalar, 5> embed_f_poly();

struct EmbeddingIdentities {
  poly::PolyScalar bilinear;               // (f, f)
  poly::PolyScalar hermitian_minus_rho2;   // <f, f> - 2 rho
  bool holds() const { return bilinear.is_zero() && hermitian_minus_rho2.is_zero(); }
};
EmbeddingIdentities embedding_identity_check();

// {A in so(3,2) : A v in span{v}}, in real basis coordinates.
Subspace isotropy_algebra(const ProjectivePoint& v);

// Levi value on (e^-1(10), e^-1(01)) and cubic value on (e^0(10), e^-1(01), e^-1(01))
// for the covector scale * (e^-2)^*.
struct LeviCubic {
  Gaussian levi;
  Gaussian cubic;
};
LeviCubic model_levi_cubic(const Rational& scale = Rational(1));

// Point of the tube: real part on the future light cone.
struct ConePoint {
  poly::Point z;

  static ConePoint make(const std::array<Rational, 3>& x, const std::array<Rational, 3>& y);
  // "x1,x2,x3,y1,y2,y3"
  static ConePoint parse(std::string_view csv);
  std::string str() const;
};
const std::vector<ConePoint>& sample_points();

poly::PolyScalar rho();

struct ConeFields {
  poly::PolyVectorField l12, l13, l23;  // (1,0) fields annihilating rho
  poly::PolyVectorField rib;            // x^j d/dz^j
};
const ConeFields& cone_fields();

// Defining form (i/2)(d rho - dbar rho) applied to a field.
poly::PolyScalar theta(const poly::PolyVectorField& v);
bool in_distribution_at(const ConePoint& p, const poly::PolyVectorField& v);

Gaussian levi_form_at(const ConePoint& p, const poly::PolyVectorField& v, const poly::PolyVectorField& w);
Gaussian cubic_form_at(const ConePoint& p, const poly::PolyVectorField& e, const poly::PolyVectorField& h,
                       const poly::PolyVectorField& h2);

struct LeviAnalysis {
  std::vector<poly::PolyVectorField> real_basis;  // four real sections of D
  Matrix real_form;                               // 4 x 4
  bool symmetric = false;
  std::size_t real_rank = 0;
  Matrix hermitian;  // i theta([L_a, conj L_b]) over two (1,0) fields
  std::size_t hermitian_rank = 0;
  Subspace kernel;   // evaluated at p, inside C^6
  Subspace rib;      // span{Re R, Re(iR)} at p
  bool kernel_is_rib() const { return kernel == rib; }
};
LeviAnalysis levi_analysis(const ConePoint& p);

struct CubicWitness {
  poly::PolyVectorField e, h;
  Gaussian value;
};
// e = R, h = h' = conjugate of a D^10 field not proportional to R at p.
CubicWitness cubic_witness(const ConePoint& p);

struct FreemanRanks {
  std::size_t f_minus1 = 0, f0 = 0, f1 = 0;
  bool f0_is_rib = false;
};
FreemanRanks freeman_ranks_at(const ConePoint& p);

struct RibChecks {
  bool j_invariant = false;
  bool involutive = false;
};
RibChecks rib_checks(const ConePoint& p);

// Re-evaluation with perturbed extensions (f X + rho Y with f(p) = 1).
bool levi_extension_independent(const ConePoint& p);
bool cubic_extension_independent(const ConePoint& p);
bool cubic_linear_in_last(const ConePoint& p);

}  // namespace tanaka::model

#pragma once

#include <array>
#include <string>
#include <vector>

#include "tanaka/cochain.hpp"
#include "tanaka/linalg.hpp"
#include "tanaka/torsion.hpp"

namespace tanaka::prolong {

struct Relation {
  std::string text;
  bool holds = false;
};

struct ProlongationStep {
  int step = 0;
  // Step 0: flattened endomorphisms of m (see endos::flatten); steps 1..3: full C^1 coordinates.
  Subspace algebra;
  // Real-basis 10 x 10 endomorphisms of g, zero outside the carrier columns.
  std::vector<Matrix> generators;
  // Elements of h^step (real coordinates) matched with the generators.
  std::vector<Vec> witnesses;
  std::vector<Relation> relations;

  std::size_t dim() const { return algebra.dim(); }
};

// Complex parameters of a degree-1 graded J-compatible map on m + h^0:
// e^-2 -> lambda e^-1(10) + conj, e^-1(10) -> mu e^0(10) + nu E^0(10) + nu' E^0(01).
struct DegreeOneParams {
  Gaussian lambda, mu, nu, nu_prime;
};

cochain::Cochain degree_one_cochain(const DegreeOneParams& p);
DegreeOneParams degree_one_params(const cochain::Cochain& c);
// The l^1 member has nu' = nu - conj(mu).
cochain::Cochain l1_member(const Gaussian& lambda, const Gaussian& mu, const Gaussian& nu);

Subspace l1_subspace();
// Cochain as an endomorphism of g, extended by zero on m^0 and h.
Matrix cochain_endo(const cochain::Cochain& c);

ProlongationStep prolong_step0();
ProlongationStep prolong_step1();
ProlongationStep prolong_step2();
ProlongationStep prolong_step3();
ProlongationStep prolong_step(int step);

// Gauge space of the c-torsion normalization at degree k (l^1 for k = 1).
Subspace gauge_space(int k);

// Coefficients of a real-linear function written as a z + b conj(z).
struct WirtingerPair {
  Vec holomorphic;
  Vec antiholomorphic;
};
WirtingerPair wirtinger(const Vec& at_one, const Vec& at_i);

// Degree-3 obstruction: the (e^-2, e^-1(10)) value of dB, split by parameter.
struct StepThreeObstruction {
  WirtingerPair lambda;  // B(e^-2) = lambda E^1(10) + conj
  WirtingerPair mu;      // B(e^-1(10)) = mu E^2
  bool forces_zero = false;
};
StepThreeObstruction step3_obstruction();

// Gauge spaces for degree >= 4 on the whole algebra vanish identically.
std::size_t top_gauge_dim(int k);

struct InnerProduct {
  Subspace domain;  // exact 2-cochains of degree 1
  Matrix gram;      // in the canonical basis of domain
  std::vector<Rational> pivots;
  bool symmetric = false;
  bool positive_definite = false;
  bool skew_rotation = false;  // E_2^0 acts skew-adjointly
};
const InnerProduct& invariant_inner_product();

Subspace normalization_space(int k);

struct Normalized {
  cochain::Cochain gauge;
  cochain::Cochain residual;
};
Normalized normalize_ctorsion(const cochain::Cochain& c);

struct FrameFunctional {
  std::string name;  // "alpha", "alpha-bar", "beta", ...
  std::size_t first = 0, second = 0;  // complex arguments in m
  std::size_t component = 0;          // complex value index
  int degree = 0;                     // graded component the functional reads

  Gaussian operator()(const torsion::FullTorsion& t) const;
};
std::vector<FrameFunctional> frame_conditions(int step);

// Frame changes acting on m^0, used to read off gauge responses.
Matrix gauge_h0_on_m0(const Gaussian& nu, const Gaussian& nu_prime);  // e^0(10) -> nu E^0(10) + nu' E^0(01)
Matrix gauge_h1_on_m0(const Gaussian& nu, const Gaussian& nu_prime);  // e^0(10) -> nu E^1(10) + nu' E^1(01)
Matrix gauge_h2_on_m0(const Gaussian& nu);                            // e^0(10) -> nu E^2
Matrix degree_one_gauge(const DegreeOneParams& p);

struct CompatibilityCheck {
  std::size_t a = 0, b = 0;  // generator indices in the list of all generators
  bool holds = false;
};
// Generators of steps 0..2 as isotropy maps of m (values taken modulo h).
std::vector<Matrix> isotropy_generators();
std::vector<Vec> isotropy_witnesses();
Matrix isotropy_map(const Vec& x);
std::vector<CompatibilityCheck> bracket_compatibility();

}  // namespace tanaka::prolong

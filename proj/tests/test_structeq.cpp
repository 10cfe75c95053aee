#include "doctest.h"

#include <random>
#include <set>

#include "tanaka/cochain.hpp"
#include "tanaka/prolongation.hpp"
#include "tanaka/so32.hpp"
#include "tanaka/structeq.hpp"

using namespace tanaka;
using namespace tanaka::structeq;
namespace cx = so32::cx;

namespace {

Gaussian half_i(int sign = 1) { return Gaussian(Rational(0), rat(sign, 2)); }

// dw^a(X_b, X_c) = -w^a([X_b, X_c]) read straight from the complex commutator of basis matrices.
Gaussian oracle_mc(CoframeIndex a, CoframeIndex b, CoframeIndex c) {
  Matrix mb = so32::to_matrix(so32::from_complex(unit_vec(10, b)));
  Matrix mc = so32::to_matrix(so32::from_complex(unit_vec(10, c)));
  auto coords = so32::coords_of(commutator(mb, mc));
  REQUIRE(coords);
  return -so32::to_complex(*coords)[a];
}

}  // namespace

TEST_CASE("coframe labels and conjugation") {
  CHECK(coframe_label(cx::em1_10) == "θ^{-1(10)}");
  CHECK(coframe_label(cx::E2) == "ω^{2}");
  CHECK(find_coframe("omega^1(01)") == cx::E1_01);
  CHECK(find_coframe("θ^{0(10)}") == cx::e0_10);
  CHECK_FALSE(find_coframe("theta^3"));
  CHECK(conjugate_index(cx::em2) == cx::em2);
  CHECK(conjugate_index(cx::E2) == cx::E2);
  CHECK(conjugate_index(cx::e0_10) == cx::e0_01);
  CHECK_THROWS_AS(coframe_label(10), DomainError);
}

TEST_CASE("form arithmetic") {
  Form f = Form::wedge_pair(3, 1, Gaussian(2));
  CHECK(f.coefficient({1, 3}) == Gaussian(-2));
  CHECK(f.coefficient({3, 1}) == Gaussian(2));
  CHECK(Form::wedge_pair(2, 2).is_zero());
  CHECK((f + Form::wedge_pair(1, 3, Gaussian(2))).is_zero());
  Form a = Form::one_form(0), b = Form::one_form(4);
  CHECK(wedge(a, b) == Gaussian(-1) * wedge(b, a));
  CHECK(wedge(a, a).is_zero());
  CHECK(wedge(wedge(a, b), Form::one_form(2)).coefficient({0, 2, 4}) == Gaussian(-1));
  CHECK_THROWS_AS(Form(2) + Form(1), DimensionError);
  CHECK(Form::wedge_pair(cx::em1_10, cx::em1_01, half_i()).str() == "i/2 * θ^{-1(10)} ∧ θ^{-1(01)}");
  CHECK(Form(2).str() == "0");
}

TEST_CASE("Maurer-Cartan differentials") {
  for (CoframeIndex a = 0; a < kCoframe; ++a)
    for (CoframeIndex b = 0; b < kCoframe; ++b)
      for (CoframeIndex c = b + 1; c < kCoframe; ++c) CHECK(maurer_cartan(a).coefficient({b, c}) == oracle_mc(a, b, c));

  TwoForm top(2);
  top.add({cx::E1_10, cx::E1_01}, half_i());
  top.add({cx::E0_10, cx::E2}, Gaussian(-1));
  top.add({cx::E0_01, cx::E2}, Gaussian(-1));
  CHECK(maurer_cartan(cx::E2) == top);

  TwoForm bottom(2);
  bottom.add({cx::em1_10, cx::em1_01}, half_i(-1));
  bottom.add({cx::E0_10, cx::em2}, Gaussian(1));
  bottom.add({cx::E0_01, cx::em2}, Gaussian(1));
  CHECK(maurer_cartan(cx::em2) == bottom);

  CHECK(maurer_cartan(cx::em1_01) == maurer_cartan(cx::em1_10).conjugate());
  for (CoframeIndex a = 0; a < kCoframe; ++a) CHECK(maurer_cartan(conjugate_index(a)) == maurer_cartan(a).conjugate());
}

TEST_CASE("printed structure equations") {
  const auto& eqs = printed_equations();
  REQUIRE(eqs.size() == 10);
  std::set<CoframeIndex> targets;
  for (const auto& e : eqs) targets.insert(e.target);
  CHECK(targets.size() == 10);
  for (const auto& check : verify_structure_equations()) {
    CAPTURE(check.name);
    CAPTURE(check.residual.str());
    CHECK(check.passed());
  }
  CHECK(eqs[1].name() == "dθ^{-1(10)}");
  // Printed terms in canonical index order.
  CHECK(eqs[1].terms.str() == "-i * θ^{-2} ∧ ω^{1(10)} + θ^{-1(10)} ∧ ω^{0(10)} + θ^{-1(01)} ∧ θ^{0(10)}");
  CHECK(maurer_cartan(cx::E2).str() == "-ω^{0(10)} ∧ ω^{2} - ω^{0(01)} ∧ ω^{2} + i/2 * ω^{1(10)} ∧ ω^{1(01)}");
}

TEST_CASE("fault injection is localized") {
  auto eqs = printed_equations();
  eqs[2].terms += Form::wedge_pair(cx::em2, cx::E2);
  auto checks = verify_structure_equations(eqs);
  std::size_t failing = 0;
  for (const auto& c : checks)
    if (!c.passed()) {
      ++failing;
      CHECK(c.target == eqs[2].target);
      CHECK(c.residual.terms().size() == 1);
      CHECK(c.residual.coefficient({cx::em2, cx::E2}) == Gaussian(1));
    }
  CHECK(failing == 1);

  CHECK_THROWS_AS(parse_printed_equations("theta^-2: 1 theta^9 ^ omega^2"), ParseError);
  CHECK_THROWS_AS(parse_printed_equations("theta^-2 1 theta^-2 ^ omega^2"), ParseError);
}

TEST_CASE("d squared vanishes") {
  for (const auto& c : d_squared_checks()) {
    CAPTURE(coframe_label(c.target));
    CHECK(c.value.degree() == 3);
    CHECK(c.passed());
  }
  // A form that is not closed: d of a single 1-form is its Maurer-Cartan differential.
  CHECK(exterior_derivative(Form::one_form(cx::em2)) == maurer_cartan(cx::em2));
}

TEST_CASE("structure-function symbols") {
  auto s = StructureFunctionSymbol::make(cx::em1_10, cx::em1_10, cx::e0_10);
  CHECK(s.kind() == 'T');
  CHECK(s.degree() == 0);
  CHECK(s.str() == "T^{-1(10)}_{-1(10)|0(10)}");
  auto [c, sign] = s.conjugate();
  CHECK(c.str() == "T^{-1(01)}_{-1(01)|0(01)}");
  CHECK(sign == 1);
  auto r = StructureFunctionSymbol::make(cx::E0_10, cx::em2, cx::e0_10);
  CHECK(r.kind() == 'R');
  CHECK(r.degree() == 2);
  auto mixed = StructureFunctionSymbol::make(cx::e0_01, cx::em1_01, cx::e0_10);
  auto [mc, msign] = mixed.conjugate();
  CHECK(mc.str() == "T^{0(10)}_{-1(10)|0(01)}");
  CHECK(msign == 1);
  CHECK_THROWS_AS(StructureFunctionSymbol::make(0, 3, 1), DomainError);
  CHECK(s.value(torsion::FullTorsion::flat()).is_zero());
}

TEST_CASE("constraint catalog") {
  const auto& cat = constraint_catalog();
  auto alpha = StructureFunctionSymbol::make(cx::em1_10, cx::em1_10, cx::e0_10);
  CHECK(cat.contains_vanishing(alpha));
  CHECK(cat.contains_vanishing(alpha.conjugate().first));
  // The (e^-1(01), e^0(10)) pair is a different component, not the conjugate.
  CHECK_FALSE(cat.contains_vanishing(StructureFunctionSymbol::make(cx::em1_01, cx::em1_01, cx::e0_10)));

  auto beta = StructureFunctionSymbol::make(cx::e0_01, cx::em1_10, cx::e0_10);
  CHECK(cat.contains_vanishing(beta));
  CHECK(cat.contains_vanishing(beta.conjugate().first));

  CHECK(cat.count("alpha-torsion frame condition") == 2);
  CHECK(cat.count("beta-torsion frame condition") == 2);
  CHECK(cat.count("gamma-torsion frame condition") == 4);
  CHECK(cat.count("epsilon-torsion frame condition") == 4);
  // Normalization relations number dim C^2_k - dim N_k = dim of the gauge image.
  for (int k = 1; k <= 3; ++k) {
    auto space = cochain::cochain_space(2, k);
    std::size_t expected = space.dim() - prolong::normalization_space(k).dim();
    CHECK(cat.count("degree-" + std::to_string(k) + " normalization (harmonic-type complement)") == expected);
  }
  CHECK(cat.count("degree-3 normalization (harmonic-type complement)") == cochain::exact_space(2, 3).dim());

  CHECK(cat.conjugation_closed());
  CHECK(cat.satisfied_by(torsion::FullTorsion::flat()));
  for (const auto& r : cat.relations) CHECK_FALSE(r.source.empty());
  CHECK(cat.relations.front().str() == "T^{-1(10)}_{-1(10)|0(10)} = 0");
}

TEST_CASE("catalog agrees with the functionals and the normalization spaces") {
  const auto& cat = constraint_catalog();
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> d(-3, 3);
  auto rnd = [&] { return Gaussian(Rational(d(rng)), Rational(d(rng))); };

  for (int trial = 0; trial < 20; ++trial) {
    auto tau = torsion::FullTorsion::flat();
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = a + 1; b < 5; ++b)
        for (std::size_t v = 0; v < 10; ++v) tau.add(a, b, v, rnd());
    for (int step = 1; step <= 3; ++step)
      for (const auto& f : prolong::frame_conditions(step)) {
        auto sym = StructureFunctionSymbol::make(f.component, std::min(f.first, f.second), std::max(f.first, f.second));
        CHECK(f(tau) == sym.value(tau));
      }
  }

  for (int k = 1; k <= 3; ++k) {
    Subspace normal = prolong::normalization_space(k);
    auto space = cochain::cochain_space(2, k);
    std::uniform_int_distribution<int> small(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
      Vec inside(cochain::full_dim(2));
      for (const auto& v : normal.basis()) axpy(inside, Gaussian(small(rng)), v);
      auto tau = torsion::FullTorsion::flat() + torsion::FullTorsion::from_ctorsion(cochain::Cochain::make(2, k, inside));
      for (const auto& r : cat.relations)
        if (r.source.rfind("degree-" + std::to_string(k), 0) == 0) CHECK(r.evaluate(tau).is_zero());

      Vec any(cochain::full_dim(2));
      for (std::size_t i = 0; i < space.dim(); ++i) axpy(any, Gaussian(small(rng)), space.basis(i).coeffs);
      bool in_normal = normal.contains(any);
      auto tau2 = torsion::FullTorsion::flat() + torsion::FullTorsion::from_ctorsion(cochain::Cochain::make(2, k, any));
      bool all_zero = true;
      for (const auto& r : cat.relations)
        if (r.source.rfind("degree-" + std::to_string(k), 0) == 0 && !r.evaluate(tau2).is_zero()) all_zero = false;
      CHECK(all_zero == in_normal);
    }
  }
}

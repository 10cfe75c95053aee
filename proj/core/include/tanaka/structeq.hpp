#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tanaka/torsion.hpp"

namespace tanaka::structeq {

// Coframe index = complex basis index of so(3,2): 0..4 are the soldering forms theta,
// 5..9 the connection forms omega.
using CoframeIndex = std::size_t;
constexpr std::size_t kCoframe = 10;

// "θ^{-1(10)}", "ω^{2}"
std::string coframe_label(CoframeIndex a);
// Accepts the unicode label or the ASCII spelling "theta^-1(10)", "omega^2".
std::optional<CoframeIndex> find_coframe(std::string_view text);
CoframeIndex conjugate_index(CoframeIndex a);

// Constant-coefficient exterior form on the coframe; monomials are strictly increasing index lists.
class Form {
 public:
  using Monomial = std::vector<CoframeIndex>;

  explicit Form(int degree = 0) : degree_(degree) {}
  static Form one_form(CoframeIndex a);
  static Form wedge_pair(CoframeIndex a, CoframeIndex b, const Gaussian& coef = Gaussian(1));

  int degree() const { return degree_; }
  const std::map<Monomial, Gaussian>& terms() const { return terms_; }
  // Adds coef * (wedge of the indices in the given order), normalizing to increasing order.
  void add(const Monomial& indices, const Gaussian& coef);
  Gaussian coefficient(const Monomial& indices) const;
  bool is_zero() const { return terms_.empty(); }
  // Conjugates coefficients and swaps (10) <-> (01) indices.
  Form conjugate() const;
  // "i/2 * θ^{-1(10)} ∧ θ^{-1(01)} - ω^{0(10)} ∧ θ^{-2}"; "0" when empty.
  std::string str() const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Gaussian& s, const Form& f);
  friend bool operator==(const Form& a, const Form& b) { return a.degree_ == b.degree_ && a.terms_ == b.terms_; }

 private:
  int degree_ = 0;
  std::map<Monomial, Gaussian> terms_;
};

using TwoForm = Form;

Form wedge(const Form& a, const Form& b);

// Flat differential d omega^a = -1/2 sum c^a_{bc} omega^b ^ omega^c.
TwoForm maurer_cartan(CoframeIndex a);
// Extends the flat rule to constant-coefficient forms by the Leibniz rule.
Form exterior_derivative(const Form& f);

// d(target) + terms = curvature, transcribed.
struct PrintedEquation {
  CoframeIndex target = 0;
  TwoForm terms{2};
  bool conjugated = false;  // obtained as the formal conjugate of a transcribed line
  std::string name() const;
};
std::vector<PrintedEquation> parse_printed_equations(std::string_view text);
// The six transcribed equations followed by the conjugates of the four complex ones.
const std::vector<PrintedEquation>& printed_equations();

struct EquationCheck {
  std::string name;
  CoframeIndex target = 0;
  TwoForm residual{2};  // maurer_cartan(target) + printed terms
  bool passed() const { return residual.is_zero(); }
};
EquationCheck check_equation(const PrintedEquation& eq);
std::vector<EquationCheck> verify_structure_equations();
std::vector<EquationCheck> verify_structure_equations(const std::vector<PrintedEquation>& eqs);

struct DSquaredCheck {
  CoframeIndex target = 0;
  Form value{3};
  bool passed() const { return value.is_zero(); }
};
std::vector<DSquaredCheck> d_squared_checks();

// T^upper_{first|second} (upper in m) or R^upper_{first|second} (upper in h), first < second in m.
// Symbol values of a torsion tau are the components of tau - flat; the overall sign
// convention of the curvature form does not affect the homogeneous relations below.
struct StructureFunctionSymbol {
  CoframeIndex upper = 0;
  CoframeIndex first = 0;
  CoframeIndex second = 0;

  static StructureFunctionSymbol make(CoframeIndex upper, CoframeIndex first, CoframeIndex second);
  char kind() const { return upper < 5 ? 'T' : 'R'; }
  int degree() const;
  // Conjugate symbol and the sign picked up by reordering the lower pair.
  std::pair<StructureFunctionSymbol, int> conjugate() const;
  // "T^{-1(10)}_{-1(10)|0(10)}"
  std::string str() const;
  Gaussian value(const torsion::FullTorsion& tau) const;

  friend auto operator<=>(const StructureFunctionSymbol&, const StructureFunctionSymbol&) = default;
};

struct LinearRelation {
  std::string source;
  std::map<StructureFunctionSymbol, Gaussian> terms;

  bool is_vanishing_of(const StructureFunctionSymbol& s) const;
  LinearRelation conjugate() const;
  Gaussian evaluate(const torsion::FullTorsion& tau) const;
  // "T^{...}_{...} = 0", "T^{a}_{..} - i*T^{b}_{..} = 0"
  std::string str() const;
};

struct ConstraintCatalog {
  std::vector<LinearRelation> relations;

  std::size_t count(std::string_view source) const;
  std::vector<std::string> sources() const;
  bool contains_vanishing(const StructureFunctionSymbol& s) const;
  bool satisfied_by(const torsion::FullTorsion& tau) const;
  // Conjugating every relation gives relations in the span of the same source.
  bool conjugation_closed() const;
};

// Frame conditions (each functional and its conjugate) and normalization-space membership
// for degrees 1..3.
const ConstraintCatalog& constraint_catalog();

// Symbols of degree k on the negative part, in canonical order.
std::vector<StructureFunctionSymbol> negative_symbols(int k);

}  // namespace tanaka::structeq

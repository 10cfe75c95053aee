#include "tanaka/structeq.hpp"

#include <algorithm>
#include <set>

#include "tanaka/cochain.hpp"
#include "tanaka/fixtures.hpp"
#include "tanaka/prolongation.hpp"
#include "tanaka/so32.hpp"

namespace tanaka::structeq {

namespace {

constexpr const char* kLabels[kCoframe] = {"θ^{-2}",     "θ^{-1(10)}", "θ^{-1(01)}", "θ^{0(10)}",  "θ^{0(01)}",
                                           "ω^{0(10)}",  "ω^{0(01)}",  "ω^{1(10)}",  "ω^{1(01)}",  "ω^{2}"};
constexpr const char* kAscii[kCoframe] = {"theta^-2",    "theta^-1(10)", "theta^-1(01)", "theta^0(10)", "theta^0(01)",
                                          "omega^0(10)", "omega^0(01)",  "omega^1(10)",  "omega^1(01)", "omega^2"};

std::string index_text(CoframeIndex a) {
  std::string s = kLabels[a];
  auto open = s.find('{');
  return s.substr(open + 1, s.size() - open - 2);
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start)));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

CoframeIndex require_coframe(std::string_view text) {
  auto a = find_coframe(text);
  if (!a) throw ParseError("unknown coframe label: " + std::string(text));
  return *a;
}

bool renders_negative(const Gaussian& c) { return sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0); }

// "coef * name" with sign pulled out for joining.
std::string join_terms(const std::vector<std::pair<Gaussian, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [c, name] : terms) {
    bool neg = renders_negative(c) && (c.re() == 0 || c.im() == 0);
    Gaussian m = neg ? -c : c;
    std::string t = m == Gaussian(1) ? name : m.pretty() + " * " + name;
    if (out.empty())
      out = neg ? "-" + t : t;
    else
      out += (neg ? " - " : " + ") + t;
  }
  return out;
}

std::size_t symbol_index(const StructureFunctionSymbol& s) {
  return s.upper * torsion::kPairs + torsion::pair_index(s.first, s.second);
}

constexpr std::size_t kSymbols = kCoframe * torsion::kPairs;

StructureFunctionSymbol symbol_at(std::size_t i) {
  auto [a, b] = torsion::pair_at(i % torsion::kPairs);
  return StructureFunctionSymbol::make(i / torsion::kPairs, a, b);
}

Vec relation_vector(const LinearRelation& r) {
  Vec v(kSymbols);
  for (const auto& [s, c] : r.terms) v[symbol_index(s)] = c;
  return v;
}

LinearRelation relation_from(const std::string& source, const Vec& v) {
  LinearRelation r{source, {}};
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.terms[symbol_at(i)] = v[i];
  return r;
}

// Real-basis cochain coordinates (complexified) of the complex symbol viewed as a 2-cochain on m_-.
Vec symbol_to_cochain(const StructureFunctionSymbol& s) {
  const Matrix& to_cx = so32::complex_from_real();
  const Matrix& to_real = so32::real_from_complex();
  const auto& monos = cochain::monomials(2);
  Vec out(cochain::full_dim(2));
  for (std::size_t m = 0; m < monos.size(); ++m) {
    std::size_t i = monos[m][0], j = monos[m][1];
    Gaussian w = to_cx(s.first, i) * to_cx(s.second, j) - to_cx(s.second, i) * to_cx(s.first, j);
    if (w.is_zero()) continue;
    for (std::size_t k = 0; k < cochain::kValueDim; ++k) {
      Gaussian v = to_real(k, s.upper) * w;
      if (!v.is_zero()) out[cochain::slot(2, m, k)] += v;
    }
  }
  return out;
}

std::vector<LinearRelation> normalization_relations(int k) {
  const std::string source = "degree-" + std::to_string(k) + " normalization (harmonic-type complement)";
  auto space = cochain::cochain_space(2, k);
  Subspace normal = prolong::normalization_space(k);
  std::vector<Vec> local_rows;
  for (const auto& n : normal.basis()) local_rows.push_back(space.restrict(n));
  Subspace annihilator = local_rows.empty() ? Subspace::full(space.dim())
                                            : kernel(Matrix::from_rows(local_rows, space.dim()));
  auto symbols = negative_symbols(k);
  std::vector<Vec> images;
  for (const auto& s : symbols) images.push_back(space.restrict(symbol_to_cochain(s)));

  std::vector<Vec> rows;
  for (const auto& a : annihilator.basis()) {
    Vec row(kSymbols);
    for (std::size_t j = 0; j < symbols.size(); ++j) {
      Gaussian v;
      for (std::size_t l = 0; l < a.size(); ++l) v += a[l] * images[j][l];
      row[symbol_index(symbols[j])] = v;
    }
    rows.push_back(row);
  }
  Subspace span = Subspace::span(kSymbols, rows);
  std::vector<LinearRelation> out;
  for (const auto& r : span.basis()) out.push_back(relation_from(source, r));
  return out;
}

std::string frame_source(const std::string& functional) {
  std::string base = functional.substr(0, functional.find_first_of("-("));
  return base + "-torsion frame condition";
}

}  // namespace

std::string coframe_label(CoframeIndex a) {
  if (a >= kCoframe) throw DomainError("coframe index out of range");
  return kLabels[a];
}

std::optional<CoframeIndex> find_coframe(std::string_view text) {
  for (CoframeIndex a = 0; a < kCoframe; ++a)
    if (text == kLabels[a] || text == kAscii[a]) return a;
  return std::nullopt;
}

CoframeIndex conjugate_index(CoframeIndex a) { return so32::partner(a); }

Form Form::one_form(CoframeIndex a) {
  Form f(1);
  f.add({a}, Gaussian(1));
  return f;
}

Form Form::wedge_pair(CoframeIndex a, CoframeIndex b, const Gaussian& coef) {
  Form f(2);
  f.add({a, b}, coef);
  return f;
}

void Form::add(const Monomial& indices, const Gaussian& coef) {
  if (static_cast<int>(indices.size()) != degree_) throw DimensionError("monomial degree mismatch");
  if (coef.is_zero()) return;
  Monomial m = indices;
  int sign = 1;
  // Insertion sort counting transpositions.
  for (std::size_t i = 1; i < m.size(); ++i)
    for (std::size_t j = i; j > 0 && m[j - 1] > m[j]; --j) {
      std::swap(m[j - 1], m[j]);
      sign = -sign;
    }
  if (std::adjacent_find(m.begin(), m.end()) != m.end()) return;
  Gaussian c = sign > 0 ? coef : -coef;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Gaussian Form::coefficient(const Monomial& indices) const {
  Form probe(degree_);
  probe.add(indices, Gaussian(1));
  if (probe.is_zero()) return Gaussian(0);
  const auto& [m, sign] = *probe.terms_.begin();
  auto it = terms_.find(m);
  return it == terms_.end() ? Gaussian(0) : sign * it->second;
}

Form Form::conjugate() const {
  Form out(degree_);
  for (const auto& [m, c] : terms_) {
    Monomial cm;
    for (auto a : m) cm.push_back(conjugate_index(a));
    out.add(cm, c.conj());
  }
  return out;
}

std::string Form::str() const {
  std::vector<std::pair<Gaussian, std::string>> parts;
  for (const auto& [m, c] : terms_) {
    std::string name;
    for (auto a : m) name += (name.empty() ? "" : " ∧ ") + coframe_label(a);
    parts.emplace_back(c, name.empty() ? "1" : name);
  }
  return join_terms(parts);
}

Form& Form::operator+=(const Form& o) {
  if (o.degree_ != degree_) throw DimensionError("adding forms of different degree");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (o.degree_ != degree_) throw DimensionError("subtracting forms of different degree");
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Form operator*(const Gaussian& s, const Form& f) {
  Form out(f.degree_);
  for (const auto& [m, c] : f.terms_) out.add(m, s * c);
  return out;
}

Form wedge(const Form& a, const Form& b) {
  Form out(a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Form::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add(m, ca * cb);
    }
  }
  return out;
}

TwoForm maurer_cartan(CoframeIndex a) {
  if (a >= kCoframe) throw DomainError("coframe index out of range");
  TwoForm out(2);
  for (CoframeIndex b = 0; b < kCoframe; ++b)
    for (CoframeIndex c = b + 1; c < kCoframe; ++c) {
      const Gaussian& s = so32::structure_complex(b, c)[a];
      if (!s.is_zero()) out.add({b, c}, -s);
    }
  return out;
}

Form exterior_derivative(const Form& f) {
  static const std::vector<TwoForm> mc = [] {
    std::vector<TwoForm> v;
    for (CoframeIndex a = 0; a < kCoframe; ++a) v.push_back(maurer_cartan(a));
    return v;
  }();
  Form out(f.degree() + 1);
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      Form prefix(static_cast<int>(j)), suffix(static_cast<int>(m.size() - j - 1));
      prefix.add(Form::Monomial(m.begin(), m.begin() + static_cast<long>(j)), Gaussian(1));
      suffix.add(Form::Monomial(m.begin() + static_cast<long>(j) + 1, m.end()), Gaussian(1));
      Gaussian sign = j % 2 == 0 ? c : -c;
      out += sign * wedge(wedge(prefix, mc[m[j]]), suffix);
    }
  }
  return out;
}

std::string PrintedEquation::name() const { return "d" + coframe_label(target); }

std::vector<PrintedEquation> parse_printed_equations(std::string_view text) {
  std::vector<PrintedEquation> lines;
  for (const auto& raw : split(text, '\n')) {
    if (raw.empty() || raw[0] == '#') continue;
    auto colon = raw.find(':');
    if (colon == std::string::npos) throw ParseError("structure equation line lacks ':' : " + raw);
    PrintedEquation eq;
    eq.target = require_coframe(trim(std::string_view(raw).substr(0, colon)));
    for (const auto& term : split(std::string_view(raw).substr(colon + 1), ';')) {
      // "<coef> <a> ^ <b>": the separating caret is the one surrounded by spaces.
      auto first_space = term.find(' ');
      auto sep = term.find(" ^ ");
      if (first_space == std::string::npos || sep == std::string::npos || sep <= first_space)
        throw ParseError("malformed wedge term: " + term);
      Gaussian coef = Gaussian::parse(term.substr(0, first_space));
      CoframeIndex a = require_coframe(trim(term.substr(first_space + 1, sep - first_space - 1)));
      CoframeIndex b = require_coframe(trim(term.substr(sep + 3)));
      eq.terms.add({a, b}, coef);
    }
    lines.push_back(std::move(eq));
  }
  std::vector<PrintedEquation> out = lines;
  for (const auto& eq : lines) {
    if (conjugate_index(eq.target) == eq.target) continue;
    out.push_back({conjugate_index(eq.target), eq.terms.conjugate(), true});
  }
  return out;
}

const std::vector<PrintedEquation>& printed_equations() {
  static const std::vector<PrintedEquation> eqs = parse_printed_equations(fixtures::structure_equations());
  return eqs;
}

EquationCheck check_equation(const PrintedEquation& eq) {
  return {eq.name(), eq.target, maurer_cartan(eq.target) + eq.terms};
}

std::vector<EquationCheck> verify_structure_equations() { return verify_structure_equations(printed_equations()); }

std::vector<EquationCheck> verify_structure_equations(const std::vector<PrintedEquation>& eqs) {
  std::vector<EquationCheck> out;
  for (const auto& eq : eqs) out.push_back(check_equation(eq));
  return out;
}

std::vector<DSquaredCheck> d_squared_checks() {
  std::vector<DSquaredCheck> out;
  for (CoframeIndex a = 0; a < kCoframe; ++a) out.push_back({a, exterior_derivative(maurer_cartan(a))});
  return out;
}

StructureFunctionSymbol StructureFunctionSymbol::make(CoframeIndex upper, CoframeIndex first, CoframeIndex second) {
  if (upper >= kCoframe || first >= second || second >= 5)
    throw DomainError("structure-function symbol needs upper < 10 and first < second < 5");
  return {upper, first, second};
}

int StructureFunctionSymbol::degree() const {
  const auto& g = so32::grades();
  return g[upper] - g[first] - g[second];
}

std::pair<StructureFunctionSymbol, int> StructureFunctionSymbol::conjugate() const {
  CoframeIndex a = conjugate_index(first), b = conjugate_index(second);
  if (a < b) return {make(conjugate_index(upper), a, b), 1};
  return {make(conjugate_index(upper), b, a), -1};
}

std::string StructureFunctionSymbol::str() const {
  return std::string(1, kind()) + "^{" + index_text(upper) + "}_{" + index_text(first) + "|" + index_text(second) +
         "}";
}

Gaussian StructureFunctionSymbol::value(const torsion::FullTorsion& tau) const {
  static const torsion::FullTorsion flat = torsion::FullTorsion::flat();
  return tau.coefficient(first, second, upper) - flat.coefficient(first, second, upper);
}

bool LinearRelation::is_vanishing_of(const StructureFunctionSymbol& s) const {
  return terms.size() == 1 && terms.begin()->first == s;
}

LinearRelation LinearRelation::conjugate() const {
  LinearRelation out{source, {}};
  for (const auto& [s, c] : terms) {
    auto [cs, sign] = s.conjugate();
    out.terms[cs] = sign > 0 ? c.conj() : -c.conj();
  }
  return out;
}

Gaussian LinearRelation::evaluate(const torsion::FullTorsion& tau) const {
  Gaussian total;
  for (const auto& [s, c] : terms) total += c * s.value(tau);
  return total;
}

std::string LinearRelation::str() const {
  std::vector<std::pair<Gaussian, std::string>> parts;
  for (const auto& [s, c] : terms) parts.emplace_back(c, s.str());
  return join_terms(parts) + " = 0";
}

std::size_t ConstraintCatalog::count(std::string_view source) const {
  return static_cast<std::size_t>(
      std::count_if(relations.begin(), relations.end(), [&](const auto& r) { return r.source == source; }));
}

std::vector<std::string> ConstraintCatalog::sources() const {
  std::vector<std::string> out;
  for (const auto& r : relations)
    if (std::find(out.begin(), out.end(), r.source) == out.end()) out.push_back(r.source);
  return out;
}

bool ConstraintCatalog::contains_vanishing(const StructureFunctionSymbol& s) const {
  return std::any_of(relations.begin(), relations.end(), [&](const auto& r) { return r.is_vanishing_of(s); });
}

bool ConstraintCatalog::satisfied_by(const torsion::FullTorsion& tau) const {
  return std::all_of(relations.begin(), relations.end(), [&](const auto& r) { return r.evaluate(tau).is_zero(); });
}

bool ConstraintCatalog::conjugation_closed() const {
  for (const auto& source : sources()) {
    std::vector<Vec> rows, conj_rows;
    for (const auto& r : relations)
      if (r.source == source) {
        rows.push_back(relation_vector(r));
        conj_rows.push_back(relation_vector(r.conjugate()));
      }
    if (Subspace::span(kSymbols, rows) != Subspace::span(kSymbols, conj_rows)) return false;
  }
  return true;
}

std::vector<StructureFunctionSymbol> negative_symbols(int k) {
  std::vector<StructureFunctionSymbol> out;
  for (CoframeIndex upper = 0; upper < kCoframe; ++upper)
    for (CoframeIndex a = 0; a < 3; ++a)
      for (CoframeIndex b = a + 1; b < 3; ++b) {
        auto s = StructureFunctionSymbol::make(upper, a, b);
        if (s.degree() == k) out.push_back(s);
      }
  return out;
}

const ConstraintCatalog& constraint_catalog() {
  static const ConstraintCatalog catalog = [] {
    ConstraintCatalog c;
    for (int step = 1; step <= 3; ++step) {
      std::set<StructureFunctionSymbol> seen;
      for (const auto& f : prolong::frame_conditions(step)) {
        auto s = f.first < f.second ? StructureFunctionSymbol::make(f.component, f.first, f.second)
                                    : StructureFunctionSymbol::make(f.component, f.second, f.first);
        for (const auto& sym : {s, s.conjugate().first}) {
          if (!seen.insert(sym).second) continue;
          c.relations.push_back({frame_source(f.name), {{sym, Gaussian(1)}}});
        }
      }
    }
    for (int k = 1; k <= 3; ++k)
      for (auto& r : normalization_relations(k)) c.relations.push_back(std::move(r));
    return c;
  }();
  return catalog;
}

}  // namespace tanaka::structeq

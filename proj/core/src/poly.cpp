#include "tanaka/poly.hpp"

namespace tanaka::poly {

namespace {

const char* kNames[kVars] = {"z1", "z2", "z3", "zb1", "zb2", "zb3"};

Exponent swap_halves(const Exponent& e) { return {e[3], e[4], e[5], e[0], e[1], e[2]}; }

}  // namespace

PolyScalar::PolyScalar(const Gaussian& c) {
  if (!c.is_zero()) terms_[Exponent{}] = c;
}

PolyScalar PolyScalar::var(std::size_t i) {
  if (i >= kVars) throw DomainError("polynomial variable out of range");
  Exponent e{};
  e[i] = 1;
  PolyScalar p;
  p.terms_[e] = Gaussian(1);
  return p;
}

PolyScalar PolyScalar::x(std::size_t j) { return Gaussian(rat(1, 2)) * (z(j) + zbar(j)); }

PolyScalar PolyScalar::y(std::size_t j) { return Gaussian(Rational(0), rat(-1, 2)) * (z(j) - zbar(j)); }

void PolyScalar::add_term(const Exponent& e, const Gaussian& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyScalar PolyScalar::conj() const {
  PolyScalar out;
  for (const auto& [e, c] : terms_) out.terms_[swap_halves(e)] = c.conj();
  return out;
}

PolyScalar PolyScalar::derivative(std::size_t var) const {
  if (var >= kVars) throw DomainError("polynomial variable out of range");
  PolyScalar out;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    out.add_term(d, Gaussian(static_cast<long>(e[var])) * c);
  }
  return out;
}

Gaussian PolyScalar::eval(const Point& z) const {
  std::array<Gaussian, kVars> v = {z[0], z[1], z[2], z[0].conj(), z[1].conj(), z[2].conj()};
  Gaussian total;
  for (const auto& [e, c] : terms_) {
    Gaussian term = c;
    for (std::size_t i = 0; i < kVars; ++i)
      for (unsigned p = 0; p < e[i]; ++p) term *= v[i];
    total += term;
  }
  return total;
}

std::string PolyScalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < kVars; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kNames[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coef = c.str();
    if (!out.empty()) out += " + ";
    if (mono.empty())
      out += coef;
    else if (c == Gaussian(1))
      out += mono;
    else
      out += "(" + coef + ")*" + mono;
  }
  return out;
}

PolyScalar& PolyScalar::operator+=(const PolyScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PolyScalar& PolyScalar::operator-=(const PolyScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) {
  PolyScalar out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e;
      for (std::size_t i = 0; i < kVars; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

PolyVectorField PolyVectorField::holomorphic(const std::array<PolyScalar, 3>& comps) {
  return PolyVectorField({comps[0], comps[1], comps[2], {}, {}, {}});
}

PolyScalar PolyVectorField::apply(const PolyScalar& f) const {
  PolyScalar out;
  for (std::size_t i = 0; i < kVars; ++i)
    if (!c_[i].is_zero()) out += c_[i] * f.derivative(i);
  return out;
}

PolyVectorField PolyVectorField::conj() const {
  std::array<PolyScalar, kVars> out;
  for (std::size_t j = 0; j < 3; ++j) {
    out[j] = c_[j + 3].conj();
    out[j + 3] = c_[j].conj();
  }
  return PolyVectorField(out);
}

PolyVectorField PolyVectorField::J() const {
  const Gaussian i = Gaussian::i();
  std::array<PolyScalar, kVars> out;
  for (std::size_t j = 0; j < 3; ++j) {
    out[j] = PolyScalar(i) * c_[j];
    out[j + 3] = PolyScalar(-i) * c_[j + 3];
  }
  return PolyVectorField(out);
}

bool PolyVectorField::is_type10() const { return c_[3].is_zero() && c_[4].is_zero() && c_[5].is_zero(); }

bool PolyVectorField::is_type01() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }

bool PolyVectorField::is_zero() const { return is_type10() && is_type01(); }

Vec PolyVectorField::eval(const Point& z) const {
  Vec out(kVars);
  for (std::size_t i = 0; i < kVars; ++i) out[i] = c_[i].eval(z);
  return out;
}

PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b) {
  std::array<PolyScalar, kVars> out;
  for (std::size_t i = 0; i < kVars; ++i) out[i] = a.c_[i] + b.c_[i];
  return PolyVectorField(out);
}

PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b) {
  std::array<PolyScalar, kVars> out;
  for (std::size_t i = 0; i < kVars; ++i) out[i] = a.c_[i] - b.c_[i];
  return PolyVectorField(out);
}

PolyVectorField operator*(const PolyScalar& f, const PolyVectorField& v) {
  std::array<PolyScalar, kVars> out;
  for (std::size_t i = 0; i < kVars; ++i) out[i] = f * v.c_[i];
  return PolyVectorField(out);
}

PolyVectorField bracket(const PolyVectorField& a, const PolyVectorField& b) {
  std::array<PolyScalar, kVars> out;
  for (std::size_t i = 0; i < kVars; ++i) out[i] = a.apply(b[i]) - b.apply(a[i]);
  return PolyVectorField(out);
}

}  // namespace tanaka::poly

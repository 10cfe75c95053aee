#include "tanaka_cli/report_json.hpp"

#include "tanaka/so32.hpp"

namespace tanaka::cli {

namespace {

std::string monomial_key(const cochain::Monomial& m) {
  std::string key;
  for (auto a : m) key += (key.empty() ? "" : " ^ ") + so32::label(a, so32::Basis::Real);
  return key;
}

}  // namespace

Json report_to_json(const report::Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}, {"source", c.source}});
  Json out = {{"command", r.command}, {"status", report::status_text(r.status())}, {"checks", std::move(checks)}};
  if (!r.error.empty()) out["error"] = r.error;
  return out;
}

std::string report_json_text(const report::Report& r) { return report_to_json(r).dump(2) + "\n"; }

Json cochain_to_json(const cochain::Cochain& c) {
  Json values = Json::object();
  const auto& mons = cochain::monomials(c.ell);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    Vec v(cochain::kValueDim);
    for (std::size_t j = 0; j < cochain::kValueDim; ++j) v[j] = c.coeffs[cochain::slot(c.ell, i, j)];
    if (is_zero(v)) continue;
    values[monomial_key(mons[i])] = so32::format(v, so32::Basis::Real);
  }
  return {{"degree", c.k}, {"values", std::move(values)}};
}

cochain::Cochain cochain_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("values"))
    throw ParseError("cochain JSON needs \"degree\" and \"values\"");
  if (!j["degree"].is_number_integer()) throw ParseError("\"degree\" must be an integer");
  const int k = j["degree"].get<int>();
  const auto& values = j["values"];
  if (!values.is_object()) throw ParseError("\"values\" must be an object");
  const auto& mons = cochain::monomials(2);
  Vec coeffs(cochain::full_dim(2));
  for (const auto& [key, text] : values.items()) {
    std::size_t index = mons.size();
    for (std::size_t i = 0; i < mons.size(); ++i)
      if (monomial_key(mons[i]) == key) index = i;
    if (index == mons.size()) throw ParseError("unknown argument pair: " + key);
    if (!text.is_string()) throw ParseError("value for " + key + " must be a string");
    Vec v = so32::parse_element(text.get<std::string>(), so32::Basis::Real);
    for (std::size_t c = 0; c < cochain::kValueDim; ++c) coeffs[cochain::slot(2, index, c)] = v[c];
  }
  return cochain::Cochain::make(2, k, std::move(coeffs));
}

}  // namespace tanaka::cli

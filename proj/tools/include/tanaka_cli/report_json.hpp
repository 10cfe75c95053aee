#pragma once

#include <string>

#include "json.hpp"

#include "tanaka/cochain.hpp"
#include "tanaka/report.hpp"

namespace tanaka::cli {

using Json = nlohmann::ordered_json;

Json report_to_json(const report::Report& r);
// Two-space indented, trailing newline.
std::string report_json_text(const report::Report& r);

// {"degree": k, "values": {"e^{-2} ^ e_1^{-1}": "<element in the real basis>", ...}}
Json cochain_to_json(const cochain::Cochain& c);
cochain::Cochain cochain_from_json(const Json& j);

}  // namespace tanaka::cli

#pragma once

#include <string_view>

namespace tanaka::fixtures {

// Transcribed bracket table (core/data/bracket_table.txt).
std::string_view bracket_table();
// Transcribed flat structure equations (core/data/structure_equations.txt).
std::string_view structure_equations();

}  // namespace tanaka::fixtures

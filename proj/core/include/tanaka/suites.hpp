#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tanaka/cochain.hpp"
#include "tanaka/model.hpp"
#include "tanaka/report.hpp"

namespace tanaka::suites {

using report::Report;

Report verify_table1();
Report verify_jacobi();
Report verify_structeq();
Report cohomology(int ell, int k);
Report hodge(int ell, int k);
// step in 0..3, or -1 for all steps.
Report prolong(int step);
Report normalize(const cochain::Cochain& c);
Report model_quadric(const model::ProjectivePoint& p);
Report model_embed(const model::ConePoint& p);
Report model_levi(const model::ConePoint& p);
Report model_cubic(const model::ConePoint& p);
Report model_freeman(const model::ConePoint& p);
Report model_identities();
Report constraints();

// "t0,t1,t2,t3,t4" with exact complex entries, diagonal chart.
model::ProjectivePoint parse_projective_csv(std::string_view csv);

// Acceptance criteria 1..10; determinism (11) needs serialization and lives with the caller.
constexpr int kCriteria = 11;
std::string criterion_title(int n);
Report acceptance(int n);

// Every command report in a fixed order, used for determinism checks.
std::vector<Report> full_suite();

}  // namespace tanaka::suites

// The regression scenario bank: twelve pinned criteria spanning the
// single-domain relations, kernels, extremals, product lemmas, and the
// quadrature cross-checks. Shared by the acceptance binary and the CLI.

#pragma once

#include <ostream>
#include <vector>

#include "minl2/report.hpp"

namespace minl2 {

// runs every criterion, printing one "criterion N PASS|FAIL: name" line
// per criterion; returns the number of failures; smoke mode reduces
// resolutions and widens tolerances accordingly
int run_acceptance(std::ostream& out, bool smoke,
                   std::vector<ReportRow>* rows = nullptr);

}  // namespace minl2

#pragma once

#include <vector>

#include "hermcert/rational.hpp"

namespace hermcert {

struct LpResult {
    Rational optimum;
    std::vector<Rational> coefficients;
    int iterations = 0;
};

/// Minimizes ||target + columns * c||_1 over real coefficient vectors c,
/// exactly. The l1 objective is split into positive and negative residual
/// parts and solved by a dense primal simplex over rationals with Bland's
/// anti-cycling rule; the sign split of the target rows gives a feasible
/// identity basis, so no phase-1 is needed. The returned optimum is exact.
///
/// columns[l][i] is the i-th row of column l; target[i] the i-th row of the
/// fixed term. Rows must be aligned by the caller.
LpResult l1_minimize(const std::vector<std::vector<Rational>>& columns,
                     const std::vector<Rational>& target);

}  // namespace hermcert

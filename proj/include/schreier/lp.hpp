#pragma once

#include <vector>

#include "schreier/rational.hpp"

namespace schreier {

/// Exact-rational linear program in standard form:
///   minimize c'x  subject to  Ax = b, x >= 0.
struct LinearProgram {
    std::vector<std::vector<Rat>> rows; // A
    std::vector<Rat> rhs;               // b
    std::vector<Rat> cost;              // c
};

struct LPResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status;
    Rat objective;
    std::vector<Rat> solution;
};

/// Two-phase primal simplex with Bland's rule (no cycling). All arithmetic
/// exact; the returned optimum is the true rational optimum.
LPResult solve_lp(const LinearProgram& lp);

} // namespace schreier

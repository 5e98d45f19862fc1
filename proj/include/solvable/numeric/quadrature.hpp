#pragma once

#include "solvable/numeric/kernels.hpp"
#include "solvable/numeric/tolerances.hpp"

namespace solvable::numeric {

struct QuadratureResult {
    double value = 0;
    double error_estimate = 0;
};

struct QuadOptions {
    double rel_tol = kQuadRelTol;
    double abs_tol = kQuadAbsTol;
    int panels = kQuadPanels;
};

// Integral of f over (lo, hi); infinite ends are mapped algebraically onto a finite interval.
// Throws AccuracyError when the requested tolerance is not reached.
QuadratureResult integrate(const Fn& f, double lo, double hi, Exec exec = Exec::parallel, QuadOptions opts = {});

}  // namespace solvable::numeric

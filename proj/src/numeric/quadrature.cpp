#include "solvable/numeric/quadrature.hpp"

#include "solvable/errors.hpp"

#include <cmath>

namespace solvable::numeric {

QuadratureResult integrate(const Fn& f, double lo, double hi, Exec exec, QuadOptions opts) {
    if (!(lo < hi)) throw UsageError("integration interval is empty");
    const bool li = std::isinf(lo), hi_inf = std::isinf(hi);
    Fn g;
    double a, b;
    if (li && hi_inf) {
        g = [&f](double t) {
            const double d = 1 - t * t;
            return f(t / d) * (1 + t * t) / (d * d);
        };
        a = -1, b = 1;
    } else if (hi_inf) {
        g = [&f, lo](double t) {
            const double d = 1 - t;
            return f(lo + t / d) / (d * d);
        };
        a = 0, b = 1;
    } else if (li) {
        g = [&f, hi](double t) {
            const double d = 1 - t;
            return f(hi - t / d) / (d * d);
        };
        a = 0, b = 1;
    } else {
        g = f;
        a = lo, b = hi;
    }
    const int np = opts.panels;
    std::vector<std::pair<double, double>> panels(np);
    for (int i = 0; i < np; ++i) panels[i] = {a + (b - a) * i / np, a + (b - a) * (i + 1) / np};

    // coarse pass fixes the absolute scale of the per-panel tolerance
    std::vector<PanelResult> coarse = integrate_panels(g, panels, INFINITY, exec);
    std::vector<double> mags(np);
    for (int i = 0; i < np; ++i) mags[i] = std::abs(coarse[i].value);
    const double scale = pairwise_sum(mags);
    const double tol = std::max(opts.abs_tol, opts.rel_tol * scale);

    std::vector<PanelResult> fine = integrate_panels(g, panels, tol / np, exec);
    std::vector<double> vals(np), errs(np);
    bool ok = true;
    for (int i = 0; i < np; ++i) {
        vals[i] = fine[i].value;
        errs[i] = fine[i].error;
        ok = ok && fine[i].converged;
    }
    QuadratureResult r{pairwise_sum(vals), pairwise_sum(errs)};
    if (!std::isfinite(r.value)) throw AccuracyError("integrand is not finite", INFINITY);
    if (!ok && r.error_estimate > 1e3 * tol)
        throw AccuracyError("quadrature did not converge", r.error_estimate);
    return r;
}

}  // namespace solvable::numeric

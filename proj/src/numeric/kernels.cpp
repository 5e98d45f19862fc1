#include "solvable/numeric/kernels.hpp"

#include "solvable/numeric/tolerances.hpp"

#include <array>
#include <cmath>

namespace solvable::numeric {

namespace {

struct GL16 {
    std::array<double, 16> x{}, w{};
    GL16() {
        const int n = 16;
        for (int i = 0; i < n / 2; ++i) {
            double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double dp = 0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    double pk = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = pk;
                }
                dp = n * (t * p1 - p0) / (t * t - 1);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            x[i] = -t;
            x[n - 1 - i] = t;
            w[i] = w[n - 1 - i] = 2 / ((1 - t * t) * dp * dp);
        }
    }
};

const GL16& gl16() {
    static const GL16 rule;
    return rule;
}

PanelResult adapt(const Fn& f, double a, double b, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double l = gauss_legendre16(f, a, m), r = gauss_legendre16(f, m, b);
    const double fine = l + r, err = std::abs(fine - whole);
    if (err <= tol || !std::isfinite(fine)) return {fine, err, std::isfinite(fine)};
    if (depth >= kQuadMaxDepth) return {fine, err, false};
    PanelResult pl = adapt(f, a, m, l, tol / 2, depth + 1);
    PanelResult pr = adapt(f, m, b, r, tol / 2, depth + 1);
    return {pl.value + pr.value, pl.error + pr.error, pl.converged && pr.converged};
}

}  // namespace

double pairwise_sum(const double* v, std::size_t n) {
    if (n <= 8) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

double gauss_legendre16(const Fn& f, double a, double b) {
    const auto& q = gl16();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0;
    for (int i = 0; i < 16; ++i) s += q.w[i] * f(c + h * q.x[i]);
    return s * h;
}

std::vector<double> map_points(const Fn& f, const std::vector<double>& xs, Exec exec) {
    const long n = static_cast<long>(xs.size());
    std::vector<double> out(xs.size());
    if (exec == Exec::serial) {
        for (long i = 0; i < n; ++i) out[i] = f(xs[i]);
    } else {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < n; ++i) out[i] = f(xs[i]);
    }
    return out;
}

std::vector<PanelResult> integrate_panels(const Fn& f, const std::vector<std::pair<double, double>>& panels, double tol,
                                          Exec exec) {
    const long n = static_cast<long>(panels.size());
    std::vector<PanelResult> out(panels.size());
    auto one = [&](long i) {
        const auto [a, b] = panels[i];
        out[i] = adapt(f, a, b, gauss_legendre16(f, a, b), tol, 0);
    };
    if (exec == Exec::serial) {
        for (long i = 0; i < n; ++i) one(i);
    } else {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < n; ++i) one(i);
    }
    return out;
}

double fd_max_residual(const std::vector<double>& psi, const std::vector<double>& U, double E, double step, Exec exec) {
    const long n = static_cast<long>(psi.size());
    const double inv = 1.0 / (12 * step * step);
    auto at = [&](long i) {
        double d2 = (-psi[i + 2] + 16 * psi[i + 1] - 30 * psi[i] + 16 * psi[i - 1] - psi[i - 2]) * inv;
        return std::abs(-d2 + (U[i] - E) * psi[i]);
    };
    double m = 0;
    if (exec == Exec::serial) {
        for (long i = 2; i + 2 < n; ++i) m = std::max(m, at(i));
    } else {
#pragma omp parallel for reduction(max : m) schedule(static)
        for (long i = 2; i < n - 2; ++i) m = std::max(m, at(i));
    }
    return m;
}

}  // namespace solvable::numeric

#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace solvable::numeric {

// Every kernel has a serial reference and an OpenMP version that must agree bit for bit.
enum class Exec { serial, parallel };

using Fn = std::function<double(double)>;

// Pairwise (cascade) summation in a fixed order.
double pairwise_sum(const double* v, std::size_t n);
inline double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v.data(), v.size()); }

std::vector<double> map_points(const Fn& f, const std::vector<double>& xs, Exec exec);

struct PanelResult {
    double value = 0;
    double error = 0;
    bool converged = true;
};

// 16-point Gauss-Legendre on [a, b].
double gauss_legendre16(const Fn& f, double a, double b);

// Adaptive bisection on each panel until |fine - coarse| <= tol.
std::vector<PanelResult> integrate_panels(const Fn& f, const std::vector<std::pair<double, double>>& panels, double tol,
                                          Exec exec);

// max over interior points of |-psi'' + (U - E) psi| with the five-point stencil.
double fd_max_residual(const std::vector<double>& psi, const std::vector<double>& U, double E, double step, Exec exec);

}  // namespace solvable::numeric

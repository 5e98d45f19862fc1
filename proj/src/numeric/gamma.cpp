#include "solvable/numeric/gamma.hpp"

#include "solvable/errors.hpp"
#include "solvable/numeric/tolerances.hpp"

#include <cmath>

namespace solvable::numeric {

namespace {

using C = std::complex<double>;

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr double kStirling[] = {1.0 / 12,           -1.0 / 360,         1.0 / 1260,        -1.0 / 1680,
                                1.0 / 1188,         -691.0 / 360360,    1.0 / 156,         -3617.0 / 122400,
                                43867.0 / 244188,   -174611.0 / 125400};

C stirling(C z) {
    C inv = 1.0 / z, inv2 = inv * inv, term = inv, sum = 0;
    for (double c : kStirling) {
        sum += c * term;
        term *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * M_PI) + sum;
}

}  // namespace

C log_gamma(C z) {
    if (std::abs(z.imag()) < kPoleDistance && z.real() <= 0.5) {
        double r = std::round(z.real());
        if (r <= 0 && std::abs(z.real() - r) < kPoleDistance) throw PoleError("log_gamma at a non-positive integer");
    }
    if (z.real() < 0.5) return std::log(M_PI) - std::log(std::sin(M_PI * z)) - log_gamma(1.0 - z);
    C shift = 0;
    while (z.real() < 15) {
        shift += std::log(z);
        z += 1.0;
    }
    return stirling(z) - shift;
}

}  // namespace solvable::numeric

#pragma once

#include <complex>

namespace solvable::numeric {

// log Gamma(z). Throws PoleError at non-positive integers.
std::complex<double> log_gamma(std::complex<double> z);

inline std::complex<double> gamma(std::complex<double> z) { return std::exp(log_gamma(z)); }

}  // namespace solvable::numeric

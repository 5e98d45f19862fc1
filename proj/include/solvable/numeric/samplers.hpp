#pragma once

#include "solvable/darboux.hpp"
#include "solvable/multi_indexed.hpp"
#include "solvable/numeric/quadrature.hpp"

#include <array>
#include <utility>
#include <vector>

namespace solvable::numeric {

// Double-precision copy of a prefactored function.
class CompiledPF {
public:
    CompiledPF() = default;
    explicit CompiledPF(const PrefactoredFunction& f);
    LogValue eval(const BasisLogs& at) const;

private:
    std::vector<double> poly_, exponent_;
    std::array<double, kFactorCount> powers_{};
    std::array<bool, kFactorCount> odd_{};
    double log2_shift_ = 0;
};

class CompiledRatFunc {
public:
    CompiledRatFunc() = default;
    explicit CompiledRatFunc(const RatFunc& r);
    double operator()(double v) const;

private:
    std::vector<double> num_, den_;
};

// num/den as a function of x, evaluated through the model's basis logarithms.
class WaveFunction {
public:
    WaveFunction(const ModelSystem& sys, const PrefactoredFunction& num, const PrefactoredFunction& den = {});
    LogValue log_eval(double x) const;
    // NaN at a pole of the denominator.
    double operator()(double x) const;
    const ModelSystem& system() const { return sys_; }

private:
    ModelSystem sys_;
    CompiledPF num_, den_;
};

WaveFunction level_wave(const ModelSystem& sys, int n);
WaveFunction deformed_wave(const DeformedSystem& sys, const DeformedState& s);
WaveFunction multi_wave(const MultiIndexedSystem& sys, int n);

class PotentialFn {
public:
    PotentialFn(const ModelSystem& sys, const RatFunc& U);
    double operator()(double x) const;

private:
    ModelSystem sys_;
    CompiledRatFunc U_;
};

struct GridSpec {
    enum class Mapping { linear, tanh_compactified, exp_compactified };
    double lo = 0, hi = 1;
    int points = 512;
    Mapping mapping = Mapping::linear;
};
// Throws UsageError when the grid is inconsistent.
std::vector<double> grid_points(const GridSpec& g);

// Mapping chosen from the model's x-range: tanh for the full line, exp for a half line,
// linear with a half-cell inset for a finite interval.
GridSpec default_grid(const ModelSystem& sys, int points = 2048);

// Interior interval for finite-difference residuals; finite ends are inset by 0.1.
std::pair<double, double> fd_interval(const ModelSystem& sys);

struct Sample {
    double x = 0;
    double value = 0;
    bool flagged = false;  // pole or non-finite value
};
std::vector<Sample> sample(const WaveFunction& f, const std::vector<double>& xs, Exec exec = Exec::parallel);
int count_sign_changes(const std::vector<Sample>& samples);

QuadratureResult inner_product(const WaveFunction& a, const WaveFunction& b, Exec exec = Exec::parallel);

// Uniform grid lo..hi with the given step; result normalized by max |psi|.
double fd_schrodinger_residual(const PotentialFn& U, const WaveFunction& psi, double E, double lo, double hi,
                               double step, Exec exec = Exec::parallel);

}  // namespace solvable::numeric

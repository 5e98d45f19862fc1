#include "solvable/numeric/samplers.hpp"

#include "solvable/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace solvable::numeric {

namespace {

std::vector<double> to_doubles(const Poly& p) {
    std::vector<double> c;
    if (p.is_zero()) return c;
    for (int k = 0; k <= p.degree(); ++k) c.push_back(p.coeff(k).get_d());
    return c;
}

double horner(const std::vector<double>& c, double v) {
    double s = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * v + *it;
    return s;
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

CompiledPF::CompiledPF(const PrefactoredFunction& f)
    : poly_(to_doubles(f.poly())), exponent_(to_doubles(f.exponent())), log2_shift_(f.pow2().get_d() * std::log(2.0)) {
    for (std::size_t i = 0; i < kFactorCount; ++i) {
        powers_[i] = f.powers()[i].get_d();
        odd_[i] = power_sign(f.powers()[i], -1) < 0;
    }
}

LogValue CompiledPF::eval(const BasisLogs& at) const {
    const double p = horner(poly_, at.eta);
    if (p == 0) return {-std::numeric_limits<double>::infinity(), 0};
    double l = std::log(std::abs(p)) + horner(exponent_, at.eta) + log2_shift_;
    int sign = p > 0 ? 1 : -1;
    for (std::size_t f = 0; f < kFactorCount; ++f) {
        if (powers_[f] != 0) l += powers_[f] * at.log_factor[f];
        if (odd_[f] && at.factor_sign[f] < 0) sign = -sign;
    }
    return {l, sign};
}

CompiledRatFunc::CompiledRatFunc(const RatFunc& r) : num_(to_doubles(r.num())), den_(to_doubles(r.den())) {}

double CompiledRatFunc::operator()(double v) const { return horner(num_, v) / horner(den_, v); }

WaveFunction::WaveFunction(const ModelSystem& sys, const PrefactoredFunction& num, const PrefactoredFunction& den)
    : sys_(sys), num_(num), den_(den) {}

LogValue WaveFunction::log_eval(double x) const {
    const BasisLogs b = sys_.basis_logs(x);
    const LogValue a = num_.eval(b), d = den_.eval(b);
    if (d.sign == 0 || !std::isfinite(d.log_abs)) return {kNaN, 0};
    if (a.sign == 0) return {-std::numeric_limits<double>::infinity(), 0};
    return {a.log_abs - d.log_abs, a.sign * d.sign};
}

double WaveFunction::operator()(double x) const {
    const LogValue v = log_eval(x);
    if (std::isnan(v.log_abs)) return kNaN;
    if (v.sign == 0) return 0;
    return v.sign * std::exp(v.log_abs);
}

WaveFunction level_wave(const ModelSystem& sys, int n) { return {sys, sys.eigenfunction(n)}; }

WaveFunction deformed_wave(const DeformedSystem& sys, const DeformedState& s) { return {sys.base(), s.num, s.den}; }

WaveFunction multi_wave(const MultiIndexedSystem& sys, int n) {
    DeformedState s = sys.eigenfunction(n);
    return {ModelSystem::unchecked(sys.model(), sys.params()), s.num, s.den};
}

PotentialFn::PotentialFn(const ModelSystem& sys, const RatFunc& U) : sys_(sys), U_(U) {}

double PotentialFn::operator()(double x) const { return U_(sys_.basis_logs(x).eta); }

std::vector<double> grid_points(const GridSpec& g) {
    if (g.points < 16) throw UsageError("grid needs at least 16 points");
    const bool lo_inf = std::isinf(g.lo), hi_inf = std::isinf(g.hi);
    std::vector<double> xs(static_cast<std::size_t>(g.points));
    const double n = g.points;
    switch (g.mapping) {
        case GridSpec::Mapping::linear:
            if (lo_inf || hi_inf || !(g.lo < g.hi)) throw UsageError("linear grid needs a finite interval lo < hi");
            for (int i = 0; i < g.points; ++i) xs[i] = g.lo + (g.hi - g.lo) * i / (n - 1);
            break;
        case GridSpec::Mapping::tanh_compactified:
            if (!lo_inf || !hi_inf) throw UsageError("tanh-compactified grid is for the full line");
            for (int i = 0; i < g.points; ++i) xs[i] = 4 * std::atanh(-1 + 2 * (i + 0.5) / n);
            break;
        case GridSpec::Mapping::exp_compactified:
            if (lo_inf || !hi_inf) throw UsageError("exp-compactified grid is for a half line [lo, inf)");
            for (int i = 0; i < g.points; ++i) xs[i] = g.lo - 4 * std::log1p(-(i + 0.5) / n);
            break;
    }
    return xs;
}

GridSpec default_grid(const ModelSystem& sys, int points) {
    const XRange r = sys.x_range();
    GridSpec g;
    g.points = points;
    g.lo = r.lo;
    g.hi = r.hi;
    if (std::isinf(r.lo) && std::isinf(r.hi)) {
        g.mapping = GridSpec::Mapping::tanh_compactified;
    } else if (std::isinf(r.hi)) {
        g.mapping = GridSpec::Mapping::exp_compactified;
    } else {
        const double inset = (r.hi - r.lo) / (2.0 * points);
        g.lo = r.lo + inset;
        g.hi = r.hi - inset;
    }
    return g;
}

std::pair<double, double> fd_interval(const ModelSystem& sys) {
    const XRange r = sys.x_range();
    const double lo = std::isinf(r.lo) ? -6.0 : r.lo + 0.1;
    const double hi = std::isinf(r.hi) ? (std::isinf(r.lo) ? 6.0 : r.lo + 8.0) : r.hi - 0.1;
    return {lo, hi};
}

std::vector<Sample> sample(const WaveFunction& f, const std::vector<double>& xs, Exec exec) {
    std::vector<double> v = map_points([&f](double x) { return f(x); }, xs, exec);
    std::vector<Sample> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = {xs[i], v[i], !std::isfinite(v[i])};
    return out;
}

int count_sign_changes(const std::vector<Sample>& samples) {
    int changes = 0, last = 0;
    for (const auto& s : samples) {
        if (s.flagged || s.value == 0) continue;
        const int sg = s.value > 0 ? 1 : -1;
        if (last != 0 && sg != last) ++changes;
        last = sg;
    }
    return changes;
}

QuadratureResult inner_product(const WaveFunction& a, const WaveFunction& b, Exec exec) {
    const XRange r = a.system().x_range();
    auto f = [&a, &b](double x) {
        const LogValue u = a.log_eval(x), v = b.log_eval(x);
        if (std::isnan(u.log_abs) || std::isnan(v.log_abs)) return kNaN;
        if (u.sign == 0 || v.sign == 0) return 0.0;
        return u.sign * v.sign * std::exp(u.log_abs + v.log_abs);
    };
    return integrate(f, r.lo, r.hi, exec);
}

double fd_schrodinger_residual(const PotentialFn& U, const WaveFunction& psi, double E, double lo, double hi,
                               double step, Exec exec) {
    if (!(step > 0) || !(lo < hi)) throw UsageError("finite-difference grid needs lo < hi and step > 0");
    const long n = static_cast<long>(std::floor((hi - lo) / step + 0.5)) + 1;
    if (n < 5) throw UsageError("finite-difference grid has fewer than five points");
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) xs[i] = lo + step * i;
    std::vector<double> p = map_points([&psi](double x) { return psi(x); }, xs, exec);
    std::vector<double> u = map_points([&U](double x) { return U(x); }, xs, exec);
    double m = 0;
    for (double v : p) {
        if (!std::isfinite(v)) throw PoleError("wavefunction is singular on the finite-difference grid");
        m = std::max(m, std::abs(v));
    }
    return fd_max_residual(p, u, E, step, exec) / m;
}

}  // namespace solvable::numeric

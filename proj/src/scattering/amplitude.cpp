#include "solvable/scattering.hpp"

#include "solvable/errors.hpp"
#include "solvable/numeric/gamma.hpp"
#include "solvable/numeric/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace solvable {

namespace {

Poly affine(const GammaArg& g) { return Poly::linear(g.a, g.b, Var::s); }

RatFunc sfun(Poly num, Poly den = Poly(Rational(1), Var::s)) { return RatFunc(std::move(num), std::move(den)); }

Poly s_linear(const Rational& a, const Rational& b) { return Poly::linear(a, b, Var::s); }

}  // namespace

std::string GammaArg::str() const {
    std::ostringstream os;
    os << "Gamma(" << to_string(a);
    if (b != 0) os << (b > 0 ? "+" : "-") << (abs(b) == 1 ? std::string() : to_string(abs(b)) + "*") << "ik";
    os << ")";
    return os.str();
}

void AmplitudeExpr::simplify() {
    if (vanishes) return;
    // constant arguments
    auto fold_constants = [this](std::vector<GammaArg>& args, bool in_den) {
        std::vector<GammaArg> keep;
        for (const auto& g : args) {
            if (g.b != 0 || !is_integer(g.a)) {
                keep.push_back(g);
                continue;
            }
            if (g.a <= 0) {
                if (in_den) {
                    vanishes = true;
                    continue;
                }
                throw DomainError("amplitude has a Gamma pole in its numerator for every k");
            }
            Rational f(factorial(g.a.get_num().get_ui() - 1));
            factor *= in_den ? RatFunc(Poly(Rational(1) / f, Var::s)) : RatFunc(Poly(f, Var::s));
        }
        args = std::move(keep);
    };
    fold_constants(gamma_num, false);
    fold_constants(gamma_den, true);
    if (vanishes) {
        gamma_num.clear();
        gamma_den.clear();
        factor = sfun(Poly(Rational(0), Var::s));
        return;
    }
    // Gamma(z + m) / Gamma(z) as a polynomial ratio
    for (std::size_t i = 0; i < gamma_num.size();) {
        auto it = std::find_if(gamma_den.begin(), gamma_den.end(), [&](const GammaArg& d) {
            return d.b == gamma_num[i].b && is_integer(gamma_num[i].a - d.a);
        });
        if (it == gamma_den.end()) {
            ++i;
            continue;
        }
        const long m = Rational(gamma_num[i].a - it->a).get_num().get_si();
        const Poly z = affine(*it);
        Poly prod(Rational(1), Var::s);
        if (m > 0)
            for (long j = 0; j < m; ++j) prod *= z + Poly(Rational(j), Var::s);
        else
            for (long j = 1; j <= -m; ++j) prod *= z - Poly(Rational(j), Var::s);
        factor *= m >= 0 ? sfun(prod) : sfun(Poly(Rational(1), Var::s), prod);
        gamma_den.erase(it);
        gamma_num.erase(gamma_num.begin() + static_cast<long>(i));
    }
}

AmplitudeExpr AmplitudeExpr::reciprocal() const {
    if (vanishes) throw PoleError("reciprocal of an identically vanishing amplitude");
    AmplitudeExpr r;
    r.gamma_num = gamma_den;
    r.gamma_den = gamma_num;
    r.factor = RatFunc(Poly(Rational(1), Var::s)) / factor;
    return r;
}

std::string AmplitudeExpr::str() const {
    if (vanishes) return "0";
    std::ostringstream os;
    os << "(" << factor.str() << ")";
    for (const auto& g : gamma_num) os << "*" << g.str();
    if (!gamma_den.empty()) {
        os << "/(";
        for (std::size_t i = 0; i < gamma_den.size(); ++i) os << (i ? "*" : "") << gamma_den[i].str();
        os << ")";
    }
    return os.str();
}

AmplitudeExpr operator*(const AmplitudeExpr& a, const AmplitudeExpr& b) {
    AmplitudeExpr r;
    if (a.vanishes || b.vanishes) {
        r.vanishes = true;
        r.factor = sfun(Poly(Rational(0), Var::s));
        return r;
    }
    r.gamma_num = a.gamma_num;
    r.gamma_num.insert(r.gamma_num.end(), b.gamma_num.begin(), b.gamma_num.end());
    r.gamma_den = a.gamma_den;
    r.gamma_den.insert(r.gamma_den.end(), b.gamma_den.begin(), b.gamma_den.end());
    r.factor = a.factor * b.factor;
    r.simplify();
    return r;
}

AmplitudeExpr operator/(const AmplitudeExpr& a, const AmplitudeExpr& b) { return a * b.reciprocal(); }

Amplitudes soliton_amplitudes(const Rational& h, bool unsafe) {
    if (!unsafe && h <= Rational(1, 2)) throw DomainError("soliton amplitudes need h > 1/2, got h = " + to_string(h));
    Amplitudes out;
    out.t.gamma_num = {{-h, -1}, {1 + h, -1}};
    out.t.gamma_den = {{0, -1}, {1, -1}};
    out.r.gamma_num = {{0, 1}, {-h, -1}, {1 + h, -1}};
    out.r.gamma_den = {{0, -1}, {-h, 0}, {1 + h, 0}};
    out.t.simplify();
    out.r.simplify();
    return out;
}

std::complex<double> evaluate_amplitude(const AmplitudeExpr& e, std::complex<double> k) {
    if (e.vanishes) return 0;
    const std::complex<double> s = std::complex<double>(0, 1) * k;
    const std::complex<double> den = e.factor.den().eval(s);
    if (std::abs(den) < numeric::kPoleDistance) throw PoleError("amplitude evaluated at a pole of its rational factor");
    std::complex<double> lg = 0;
    for (const auto& g : e.gamma_num) lg += numeric::log_gamma(g.a.get_d() + g.b.get_d() * s);
    for (const auto& g : e.gamma_den) {
        const std::complex<double> z = g.a.get_d() + g.b.get_d() * s;
        // 1/Gamma is entire: a denominator pole is a zero of the amplitude
        try {
            lg -= numeric::log_gamma(z);
        } catch (const PoleError&) {
            return 0;
        }
    }
    return std::exp(lg) * e.factor.num().eval(s) / den;
}

double unitarity_deviation(const Amplitudes& a, const std::vector<double>& ks, numeric::Exec exec) {
    auto dev = [&a](double k) {
        const auto t = evaluate_amplitude(a.t, k), r = evaluate_amplitude(a.r, k);
        return std::abs(std::norm(t) + std::norm(r) - 1);
    };
    const auto d = numeric::map_points(dev, ks, exec);
    return d.empty() ? 0.0 : *std::max_element(d.begin(), d.end());
}

ShapeConstraint shape_constraint_check(const Rational& h, const std::vector<double>& ks) {
    ShapeConstraint out;
    const Amplitudes lo = soliton_amplitudes(h - 1, true), hi = soliton_amplitudes(h);
    const RatFunc expected = sfun(s_linear(h, 1), s_linear(-h, 1));
    const AmplitudeExpr tr = lo.t / hi.t;
    out.t_exact = tr.gamma_num.empty() && tr.gamma_den.empty() && tr.factor == expected;
    out.r_checked = !hi.r.vanishes && !lo.r.vanishes;
    if (out.r_checked) {
        const AmplitudeExpr rr = lo.r / hi.r;
        out.r_exact = rr.gamma_num.empty() && rr.gamma_den.empty() && rr.factor == -expected;
    }
    for (double k : ks) {
        const std::complex<double> s(0, k);
        const std::complex<double> w = (s + h.get_d()) / (s - h.get_d());
        const auto tl = evaluate_amplitude(lo.t, k), th = evaluate_amplitude(hi.t, k);
        out.max_deviation = std::max(out.max_deviation, std::abs(tl / th - w));
        if (out.r_checked) {
            const auto rl = evaluate_amplitude(lo.r, k), rh = evaluate_amplitude(hi.r, k);
            out.max_deviation = std::max(out.max_deviation, std::abs(rl / rh + w));
        }
    }
    return out;
}

double discrete_symmetry_deviation(const Rational& h, const std::vector<double>& ks) {
    const Amplitudes a = soliton_amplitudes(h, true), b = soliton_amplitudes(-h - 1, true);
    double dev = 0;
    for (double k : ks) {
        dev = std::max(dev, std::abs(evaluate_amplitude(a.t, k) - evaluate_amplitude(b.t, k)));
        dev = std::max(dev, std::abs(evaluate_amplitude(a.r, k) - evaluate_amplitude(b.r, k)));
    }
    return dev;
}

std::vector<double> locate_t_poles(const AmplitudeExpr& t, double kappa_max, int scan_points) {
    const AmplitudeExpr inv = t.reciprocal();
    // 1/t is real on the positive imaginary axis; nullopt-like NaN marks a pole of 1/t
    auto f = [&inv](double kappa) {
        try {
            return evaluate_amplitude(inv, std::complex<double>(0, kappa)).real();
        } catch (const PoleError&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    std::vector<double> poles;
    // offset keeps grid points off rational pole positions
    const double step = kappa_max / scan_points, off = step * 0.318309886183790671;
    double a = off, fa = f(a);
    for (int i = 1; i <= scan_points; ++i) {
        const double b = off + i * step;
        const double fb = f(b);
        if (std::isfinite(fa) && std::isfinite(fb) && (fa == 0 || (fa < 0) != (fb < 0))) {
            double lo = a, hi = b, flo = fa;
            if (fa == 0) {
                hi = lo;
            } else {
                for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
                    const double mid = 0.5 * (lo + hi), fm = f(mid);
                    if (!std::isfinite(fm) || fm == 0) {
                        lo = hi = mid;
                        break;
                    }
                    if ((fm < 0) == (flo < 0)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
            }
            poles.push_back(0.5 * (lo + hi));
        }
        a = b;
        fa = fb;
    }
    return poles;
}

RatFunc DeformationFactor::t_factor() const {
    if (side == Side::half_line) throw UsageError("half-line deformations have no transmission factor");
    RatFunc f(Poly(Rational(1), Var::s));
    // (k + i D+) / (k + i D-) = (s - D+) / (s - D-)
    for (std::size_t j = 0; j < plus.size(); ++j) f *= sfun(s_linear(-plus[j], 1), s_linear(-minus[j], 1));
    return f;
}

RatFunc DeformationFactor::r_factor() const {
    RatFunc f(Poly(Rational(M() % 2 ? -1 : 1), Var::s));
    for (std::size_t j = 0; j < plus.size(); ++j) {
        if (side == Side::full_line)
            f *= sfun(s_linear(minus[j], 1), s_linear(-minus[j], 1));  // (k - i D-) / (k + i D-)
        else
            f *= sfun(s_linear(-plus[j], 1), s_linear(plus[j], 1));  // (k + i D+) / (k - i D+)
    }
    return f;
}

Amplitudes deform_amplitudes(const Amplitudes& base, const DeformationFactor& d) {
    if (d.plus.size() != d.minus.size()) throw UsageError("deformation needs one Delta- per Delta+");
    Amplitudes out = base;
    if (d.side == DeformationFactor::Side::full_line) out.t.factor = base.t.factor * d.t_factor();
    if (!out.r.vanishes) out.r.factor = base.r.factor * d.r_factor();
    return out;
}

bool defrt_identity(const Amplitudes& base, const Amplitudes& deformed, int M) {
    const RatFunc sign(Poly(Rational(M % 2 ? -1 : 1), Var::s));
    const RatFunc tq = deformed.t.factor / base.t.factor;
    if (deformed.t.gamma_num != base.t.gamma_num || deformed.t.gamma_den != base.t.gamma_den) return false;
    if (base.r.vanishes) return deformed.r.vanishes;
    if (deformed.r.gamma_num != base.r.gamma_num || deformed.r.gamma_den != base.r.gamma_den) return false;
    const RatFunc rq = deformed.r.factor / base.r.factor;
    return tq == sign * rq;
}

std::pair<Rational, Rational> soliton_asymptotic_exponents(const SeedSpec& seed, const Rational& h) {
    Rational plus;
    switch (seed.kind) {
        case SeedSpec::Kind::PseudoVirtual:
            plus = h + 1 + seed.index;
            break;
        case SeedSpec::Kind::Overshoot:
            if (Rational(seed.index) <= 2 * h)
                throw DomainError("overshoot seed needs v > 2h, got v = " + std::to_string(seed.index));
            plus = Rational(seed.index) - h;
            break;
        default:
            throw DomainError("soliton asymptotic exponents are defined for pseudo-virtual and overshoot seeds");
    }
    return {plus, -plus};
}

DeformationFactor soliton_deformation(const std::vector<SeedSpec>& seeds, const Rational& h) {
    DeformationFactor d;
    for (const auto& s : seeds) {
        auto [p, m] = soliton_asymptotic_exponents(s, h);
        d.plus.push_back(p);
        d.minus.push_back(m);
    }
    return d;
}

}  // namespace solvable

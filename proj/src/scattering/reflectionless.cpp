#include "solvable/scattering.hpp"

#include "solvable/errors.hpp"
#include "solvable/numeric/tolerances.hpp"

#include <algorithm>
#include <cmath>

namespace solvable {

namespace {

// num / u^p
struct UFrac {
    ExpSum num;
    int p = 0;
};

UFrac d_dx(const UFrac& f, const ExpSum& u, const ExpSum& ux) {
    return {f.num.dx() * u - ExpSum(Rational(f.p)) * f.num * ux, f.p + 1};
}

UFrac d_dt(const UFrac& f, const ExpSum& u, const ExpSum& ut) {
    return {f.num.dt() * u - ExpSum(Rational(f.p)) * f.num * ut, f.p + 1};
}

double eval_frac(const UFrac& f, const ExpSum& u, double x, double t) {
    const double shift = u.max_exponent(x, t);
    return f.num.eval_scaled(x, t, f.p * shift) / std::pow(u.eval_scaled(x, t, shift), f.p);
}

// -2 (u u'' - u'^2) / u^2
UFrac log_potential(const ExpSum& u) {
    const ExpSum ux = u.dx();
    return {ExpSum(-2) * (u * u.dx(2) - ux * ux), 2};
}

}  // namespace

void ReflectionlessSpec::validate() const {
    if (k.empty()) throw UsageError("reflectionless potential needs at least one k");
    if (k.size() != c.size()) throw UsageError("reflectionless potential needs one c per k");
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (k[j] <= 0) throw DomainError("k_j must be positive");
        if (c[j] <= 0) throw DomainError("c_j must be positive");
        if (j > 0 && k[j] <= k[j - 1]) throw DomainError("k_j must be strictly increasing");
    }
}

ReflectionlessSpec ReflectionlessSpec::special_case(int N) {
    if (N < 1) throw UsageError("special case needs N >= 1");
    ReflectionlessSpec s;
    for (int j = 1; j <= N; ++j) {
        s.k.emplace_back(j);
        s.c.emplace_back(Rational(factorial(N + j)) / Rational(factorial(j) * factorial(j - 1) * factorial(N - j)));
    }
    return s;
}

ExpSum expsum_determinant(std::vector<std::vector<ExpSum>> m) {
    const std::size_t n = m.size();
    if (n == 0) return ExpSum(1);
    if (n == 1) return m[0][0];
    ExpSum det;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) continue;
        std::vector<std::vector<ExpSum>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<ExpSum> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        ExpSum term = m[0][col] * expsum_determinant(std::move(minor));
        if (col % 2) det -= term;
        else det += term;
    }
    return det;
}

ExpSum kay_moses_u(const ReflectionlessSpec& spec, bool time_dependent) {
    spec.validate();
    const std::size_t n = spec.k.size();
    std::vector<std::vector<ExpSum>> a(n, std::vector<ExpSum>(n));
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational ks = spec.k[m] + spec.k[j];
            const Rational nu = time_dependent ? Rational(8 * spec.k[m] * spec.k[m] * spec.k[m]) : Rational(0);
            a[m][j] = ExpSum::term(spec.c[m] / ks, -ks, nu);
            if (m == j) a[m][j] += ExpSum(1);
        }
    return expsum_determinant(std::move(a));
}

double KayMoses::potential(double x, double t) const { return eval_frac({num, 2}, u, x, t); }

KayMoses kay_moses(const ReflectionlessSpec& spec, bool time_dependent) {
    KayMoses km;
    km.u = kay_moses_u(spec, time_dependent);
    km.num = log_potential(km.u).num;
    return km;
}

bool single_soliton_identity(const ReflectionlessSpec& spec) {
    if (spec.N() != 1) throw UsageError("single-soliton identity needs N = 1");
    const KayMoses km = kay_moses(spec);
    const Rational k = spec.k[0], a = spec.c[0] / (2 * k);
    if (!(km.u == ExpSum(1) + ExpSum::term(a, -2 * k))) return false;
    return km.num == ExpSum::term(-8 * k * k * a, -2 * k);
}

bool special_case_identity(int N) {
    const KayMoses km = kay_moses(ReflectionlessSpec::special_case(N));
    // sech^2 x = 4 e^{-2x} / (1 + e^{-2x})^2
    const ExpSum q = ExpSum(1) + ExpSum::term(1, -2);
    return km.num * q * q == ExpSum::term(Rational(-4 * N * (N + 1)), -2) * km.u * km.u;
}

ExpSum make_free_seed(const Rational& k, const Rational& c_tilde) {
    return ExpSum::term(1, k) + ExpSum::term(c_tilde, -k);
}

namespace {

ExpSum wronskian(const std::vector<ExpSum>& fs) {
    const std::size_t n = fs.size();
    std::vector<std::vector<ExpSum>> m(n, std::vector<ExpSum>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m[r][c] = fs[c].dx(static_cast<int>(r));
    return expsum_determinant(std::move(m));
}

std::vector<Rational> c_tilde_of(const ReflectionlessSpec& spec) {
    // coefficient of e^{-2 k_j x} in W / (vdM e^{sum k x}) must equal c_j / (2 k_j)
    std::vector<Rational> ct;
    for (int j = 0; j < spec.N(); ++j) {
        Rational v = spec.c[j] / (2 * spec.k[j]);
        for (int l = 0; l < spec.N(); ++l)
            if (l != j) v *= (spec.k[l] - spec.k[j]) / (spec.k[l] + spec.k[j]);
        ct.push_back(v);
    }
    return ct;
}

std::vector<ExpSum> seeds_of(const ReflectionlessSpec& spec, const std::vector<Rational>& ct) {
    std::vector<ExpSum> seeds;
    for (int j = 0; j < spec.N(); ++j) {
        if ((j % 2 == 0) != (ct[j] > 0)) throw InvariantViolation("seed coefficient violates (-1)^{j-1} c_j > 0");
        seeds.push_back(make_free_seed(spec.k[j], ct[j]));
    }
    return seeds;
}

}  // namespace

WronskianEquivalence wronskian_equivalence(const ReflectionlessSpec& spec) {
    spec.validate();
    WronskianEquivalence out;
    out.c_tilde = c_tilde_of(spec);
    const ExpSum W = wronskian(seeds_of(spec, out.c_tilde));
    if (W.is_zero()) throw DegeneracyError("seed Wronskian vanishes identically");
    const ExpSum u = kay_moses_u(spec);
    Rational vdm = 1, ksum = 0;
    for (int j = 0; j < spec.N(); ++j) {
        ksum += spec.k[j];
        for (int l = 0; l < j; ++l) vdm *= spec.k[j] - spec.k[l];
    }
    out.wronskian_equals_stripped_u = W == ExpSum::term(vdm, ksum) * u;
    // -2 d^2 log W == -2 d^2 log u, cross-multiplied
    const UFrac uw = log_potential(W), uu = log_potential(u);
    out.potential_exact = uw.num * u * u == uu.num * W * W;
    for (int i = 0; i <= 400; ++i) {
        const double x = -10 + 0.05 * i;
        out.max_deviation = std::max(out.max_deviation, std::abs(eval_frac(uw, W, x, 0) - eval_frac(uu, u, x, 0)));
    }
    return out;
}

std::pair<Rational, Rational> plane_wave_factors(const ReflectionlessSpec& spec, const Rational& alpha) {
    spec.validate();
    std::vector<ExpSum> seeds = seeds_of(spec, c_tilde_of(spec));
    const ExpSum Wn = wronskian(seeds);
    seeds.push_back(ExpSum::term(1, alpha));
    const ExpSum Wn1 = wronskian(seeds);
    if (Wn1.is_zero()) throw DegeneracyError("plane wave exponent coincides with a seed exponent");
    // terms are keyed by (mu, nu) in increasing order
    auto lead = [](const ExpSum& e, bool top) { return top ? *e.terms().rbegin() : *e.terms().begin(); };
    const auto [kp1, cp1] = lead(Wn1, true);
    const auto [kp0, cp0] = lead(Wn, true);
    const auto [km1, cm1] = lead(Wn1, false);
    const auto [km0, cm0] = lead(Wn, false);
    if (kp1.first - kp0.first != alpha || km1.first - km0.first != alpha)
        throw InvariantViolation("plane-wave asymptotics do not carry e^{alpha x}");
    return {cp1 / cp0, cm1 / cm0};
}

bool KdvResult::pass() const {
    if (exact) return exact_zero;
    return max_residual <= numeric::kKdvNumericTol;
}

KdvResult kdv_evolve(const ReflectionlessSpec& spec, const Rational& t) {
    const ExpSum u = kay_moses_u(spec, true);
    const ExpSum ux = u.dx(), ut = u.dt();
    const UFrac U = log_potential(u);
    const UFrac Ut = d_dt(U, u, ut);
    const UFrac Ux = d_dx(U, u, ux);
    const UFrac Uxxx = d_dx(d_dx(Ux, u, ux), u, ux);
    KdvResult out;
    const double td = t.get_d();
    if (spec.N() <= 2) {
        // (Ut u^2 - 6 U Ux + Uxxx) / u^5
        const ExpSum R = Ut.num * u * u - ExpSum(6) * U.num * Ux.num + Uxxx.num;
        out.exact = true;
        out.exact_zero = R.is_zero();
        out.numerator_terms = R.size();
        if (out.exact_zero) return out;
        for (int i = 0; i <= 400; ++i) {
            const double x = -10 + 0.05 * i;
            out.max_residual = std::max(out.max_residual, std::abs(eval_frac({R, 5}, u, x, td)));
        }
        return out;
    }
    for (int i = 0; i <= 400; ++i) {
        const double x = -10 + 0.05 * i;
        const double r = eval_frac(Ut, u, x, td) - 6 * eval_frac(U, u, x, td) * eval_frac(Ux, u, x, td) +
                         eval_frac(Uxxx, u, x, td);
        out.max_residual = std::max(out.max_residual, std::abs(r));
    }
    return out;
}

}  // namespace solvable

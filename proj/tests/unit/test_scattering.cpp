#include "doctest.h"

#include "solvable/errors.hpp"
#include "solvable/scattering.hpp"

#include <cmath>
#include <numbers>

using namespace solvable;

namespace {
// |t|^2 for -h(h+1) sech^2 x from the hyperbolic closed form
double transmission_oracle(double h, double k) {
    const double s = std::sinh(std::numbers::pi * k), c = std::cos(std::numbers::pi * (h + 0.5));
    return s * s / (s * s + c * c);
}

Poly S(std::vector<Rational> c) { return Poly(std::move(c), Var::s); }
}  // namespace

TEST_SUITE("scattering") {
    TEST_CASE("integer h is reflectionless with a rational t") {
        auto a = soliton_amplitudes(1);
        CHECK(a.r.vanishes);
        CHECK(a.t.gamma_num.empty());
        CHECK(a.t.factor == RatFunc(S({-1, 1}), S({1, 1})));
        const auto t1 = evaluate_amplitude(a.t, {1.0, 0.0});
        CHECK(t1.real() == doctest::Approx(0.0).scale(1));
        CHECK(t1.imag() == doctest::Approx(1.0));
        // prod (s - j)/(s + j)
        auto b = soliton_amplitudes(3);
        CHECK(b.r.vanishes);
        CHECK(b.t.factor == RatFunc(S({-1, 1}) * S({-2, 1}) * S({-3, 1}), S({1, 1}) * S({2, 1}) * S({3, 1})));
    }

    TEST_CASE("transmission probability matches the closed form") {
        for (Rational h : {Rational(3, 2), Rational(7, 3), Rational(11, 4)}) {
            const auto a = soliton_amplitudes(h);
            for (double k : {0.1, 0.4, 1.0, 2.5}) {
                const double t2 = std::norm(evaluate_amplitude(a.t, {k, 0}));
                const double r2 = std::norm(evaluate_amplitude(a.r, {k, 0}));
                CHECK(t2 == doctest::Approx(transmission_oracle(h.get_d(), k)).epsilon(1e-10));
                CHECK(t2 + r2 == doctest::Approx(1.0).epsilon(1e-12));
            }
            CHECK(unitarity_deviation(a, {0.2, 0.7, 1.3}) < 1e-10);
        }
    }

    TEST_CASE("bound-state poles") {
        const Rational h(5, 2);
        const auto poles = locate_t_poles(soliton_amplitudes(h).t, 4.0);
        REQUIRE(poles.size() == 3);
        CHECK(poles[0] == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(poles[1] == doctest::Approx(1.5).epsilon(1e-10));
        CHECK(poles[2] == doctest::Approx(2.5).epsilon(1e-10));
    }

    TEST_CASE("shape constraint and discrete symmetry") {
        std::vector<double> ks = {0.3, 0.9, 1.7};
        for (Rational h : {Rational(3, 2), Rational(2), Rational(7, 2), Rational(8, 3)}) {
            const auto sc = shape_constraint_check(h, ks);
            CHECK(sc.t_exact);
            CHECK(sc.r_checked == !is_integer(h));
            if (sc.r_checked) CHECK(sc.r_exact);
            CHECK(discrete_symmetry_deviation(h, ks) < 1e-10);
        }
        CHECK_THROWS_AS(soliton_amplitudes(Rational(1, 2)), DomainError);
    }

    TEST_CASE("deformation factors") {
        const auto base = soliton_amplitudes(Rational(3, 2));
        DeformationFactor none;
        CHECK(none.t_factor() == RatFunc(Rational(1), Var::s));
        const auto same = deform_amplitudes(base, none);
        CHECK(same.t.factor == base.t.factor);
        const auto [dp, dm] = soliton_asymptotic_exponents(SeedSpec::overshoot(4), Rational(3, 2));
        CHECK(dp == Rational(5, 2));
        CHECK(dm == Rational(-5, 2));
        const auto d = soliton_deformation({SeedSpec::overshoot(4)}, Rational(3, 2));
        CHECK(d.M() == 1);
        const auto def = deform_amplitudes(base, d);
        CHECK(defrt_identity(base, def, d.M()));
        // t picks up a pole at the new bound state Delta^+
        const auto poles = locate_t_poles(def.t, 4.0);
        CHECK(std::any_of(poles.begin(), poles.end(), [](double p) { return std::abs(p - 2.5) < 1e-8; }));
    }

    TEST_CASE("Kay-Moses single soliton") {
        ReflectionlessSpec s{{Rational(3, 2)}, {Rational(6)}};
        CHECK(single_soliton_identity(s));
        const auto km = kay_moses(s);
        const double k = 1.5, a = 6.0 / 3.0;
        for (double x : {-3.0, -0.4, 0.0, 1.1, 5.0}) {
            const double sech = 1.0 / std::cosh(k * x - std::log(a) / 2);
            CHECK(km.potential(x) == doctest::Approx(-2 * k * k * sech * sech).epsilon(1e-12));
        }
    }

    TEST_CASE("special-case spectra are -N(N+1) sech^2") {
        for (int N = 1; N <= 4; ++N) CHECK(special_case_identity(N));
        const auto km = kay_moses(ReflectionlessSpec::special_case(2));
        CHECK(km.potential(0) == doctest::Approx(-6.0));
    }

    TEST_CASE("Wronskian of free seeds reproduces u_N") {
        ReflectionlessSpec s{{1, 2, Rational(7, 2)}, {Rational(6), Rational(12), Rational(5)}};
        for (int N = 1; N <= 3; ++N) {
            ReflectionlessSpec p{{s.k.begin(), s.k.begin() + N}, {s.c.begin(), s.c.begin() + N}};
            const auto w = wronskian_equivalence(p);
            CHECK(w.pass());
            CHECK(w.max_deviation < 1e-9);
            for (int j = 0; j < N; ++j) CHECK((j % 2 == 0) == (w.c_tilde[j] > 0));
        }
    }

    TEST_CASE("plane-wave asymptotic factors") {
        ReflectionlessSpec s{{1, 3}, {Rational(2), Rational(5)}};
        const Rational alpha(1, 3);
        const auto [plus, minus] = plane_wave_factors(s, alpha);
        CHECK(plus == (alpha - 1) * (alpha - 3));
        CHECK(minus == (alpha + 1) * (alpha + 3));
    }

    TEST_CASE("KdV evolution") {
        ReflectionlessSpec two{{1, 2}, {6, 12}};
        const auto r = kdv_evolve(two, Rational(1, 4));
        CHECK(r.exact);
        CHECK(r.exact_zero);
        const auto r3 = kdv_evolve(ReflectionlessSpec{{1, 2, 3}, {1, 2, 3}}, Rational(1, 10));
        CHECK_FALSE(r3.exact);
        CHECK(r3.max_residual < 1e-6);
    }

    TEST_CASE("reflectionless parameter validation") {
        CHECK_THROWS_AS((ReflectionlessSpec{{2, 1}, {1, 1}}.validate()), DomainError);
        CHECK_THROWS_AS((ReflectionlessSpec{{1}, {1, 2}}.validate()), UsageError);
        CHECK_THROWS_AS((ReflectionlessSpec{{1}, {-1}}.validate()), DomainError);
    }
}

#include "doctest.h"

#include "solvable/errors.hpp"
#include "solvable/models.hpp"
#include "solvable/ortho_poly.hpp"

#include <cmath>

using namespace solvable;

namespace {
const Poly E = Poly::identity();
const Rational half(1, 2);

ModelSystem sys(ModelId m, Rational g, Rational h = 0) { return ModelSystem::make(m, {g, h}); }

// U written directly in eta
RatFunc potential_oracle(ModelId m, const Rational& g, const Rational& h) {
    switch (m) {
        case ModelId::H: return RatFunc(E * E - Poly(1));
        case ModelId::L: return RatFunc(E * E - E * Rational(1 + 2 * g) + Poly(Rational(g * (g - 1))), E);
        case ModelId::J: {
            // g(g-1)/sin^2 + h(h-1)/cos^2 - (g+h)^2 with sin^2 = (1-eta)/2, cos^2 = (1+eta)/2
            RatFunc a(Poly(Rational(2 * g * (g - 1))), Poly(1) - E), b(Poly(Rational(2 * h * (h - 1))), Poly(1) + E);
            return a + b - RatFunc(Rational((g + h) * (g + h)));
        }
        case ModelId::Soliton: return RatFunc((E * E - Poly(1)) * Rational(h * (h + 1)));
    }
    return {};
}

std::vector<ModelSystem> samples() {
    return {sys(ModelId::H, 0), sys(ModelId::L, Rational(3, 2)), sys(ModelId::L, Rational(7, 3)),
            sys(ModelId::J, Rational(3, 2), Rational(5, 2)), sys(ModelId::J, Rational(4, 5), Rational(13, 4))};
}
}  // namespace

TEST_SUITE("models") {
    TEST_CASE("parameter validation") {
        CHECK_THROWS_AS(sys(ModelId::L, half), DomainError);
        CHECK_THROWS_AS(sys(ModelId::J, 2, Rational(1, 3)), DomainError);
        CHECK_THROWS_AS(sys(ModelId::Soliton, 0, half), DomainError);
        CHECK_THROWS_AS(parse_model("Q"), UsageError);
        CHECK(parse_model("Soliton") == ModelId::Soliton);
    }

    TEST_CASE("energies") {
        const auto j = sys(ModelId::J, Rational(3, 2), Rational(5, 2));
        for (int n = 0; n <= 10; ++n) {
            CHECK(sys(ModelId::H, 0).energy(n) == 2 * n);
            CHECK(sys(ModelId::L, 2).energy(n) == 4 * n);
            CHECK(j.energy(n) == 4 * n * (n + 4));
        }
        const auto s = sys(ModelId::Soliton, 0, Rational(5, 2));
        CHECK(s.max_level() == 2);
        CHECK(s.energy(0) == Rational(-25, 4));
        CHECK(s.energy(2) == Rational(-1, 4));
        CHECK_THROWS_AS(s.energy(3), DomainError);
        CHECK(sys(ModelId::Soliton, 0, 4).max_level() == 3);
    }

    TEST_CASE("potentials") {
        for (const auto& s : samples()) CHECK(s.potential() == potential_oracle(s.id(), s.g(), s.h()));
        const auto sol = sys(ModelId::Soliton, 0, Rational(3, 2));
        CHECK(sol.potential() == potential_oracle(ModelId::Soliton, 0, sol.h()));
    }

    TEST_CASE("eigenfunctions satisfy the Schroedinger equation exactly") {
        for (const auto& s : samples())
            for (int n = 0; n <= 6; ++n) {
                const auto r = schrodinger_residual(s.map(), s.potential(), s.eigenfunction(n).log_derivative(),
                                                    s.energy(n));
                CHECK(r.is_zero());
                CHECK(s.tilde_h().apply_poly(s.eigen_poly(n)) == s.eigen_poly(n) * s.energy(n));
            }
        const auto sol = sys(ModelId::Soliton, 0, Rational(7, 2));
        for (int n = 0; n <= sol.max_level(); ++n) {
            const auto r = schrodinger_residual(sol.map(), sol.potential(),
                                                sol.eigenfunction(n).log_derivative(), sol.energy(n));
            CHECK(r.is_zero());
        }
    }

    TEST_CASE("shape invariance") {
        for (const auto& s : samples()) CHECK(shape_invariance_residual(s.id(), s.params()).is_zero());
    }

    TEST_CASE("shift relations") {
        for (const auto& s : samples())
            for (int n = 1; n <= 5; ++n) {
                const auto c = shift_relation_check(s.id(), n, s.params());
                CHECK(c.forward_residual.is_zero());
                CHECK(c.backward_residual.is_zero());
                CHECK(c.f_n * c.b_nm1 == s.energy(n));
            }
    }

    TEST_CASE("closure and Heisenberg steps") {
        for (const auto& s : samples()) {
            CHECK(closure_residual(s.id(), s.params()).is_zero());
            for (int n = 0; n <= 8; ++n) CHECK_NOTHROW(heisenberg_step_check(s.id(), n, s.params()));
        }
    }

    TEST_CASE("H norms agree with direct quadrature") {
        for (int n = 0; n <= 5; ++n) {
            const Poly hn = hermite_poly(n);
            double sum = 0;
            const double dx = 1e-3;
            for (int i = -12000; i <= 12000; ++i) {
                const double x = i * dx, v = hn.eval(x);
                sum += v * v * std::exp(-x * x) * dx;
            }
            CHECK(norm_closed_form(ModelId::H, n, {}).value() == doctest::Approx(sum).epsilon(1e-10));
        }
    }

    TEST_CASE("boundary exponents") {
        const auto b = boundary_exponents(ModelId::J, {Rational(3, 2), Rational(5, 2)});
        REQUIRE(b.size() == 2);
        CHECK(b[0].rho1 == Rational(3, 2));
        CHECK(b[0].rho2 == Rational(-1, 2));
        CHECK(b[1].rho2 == Rational(-3, 2));
        CHECK_THROWS_AS(boundary_exponents(ModelId::H, {}), DomainError);
    }
}

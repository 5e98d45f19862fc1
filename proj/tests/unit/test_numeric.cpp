#include "doctest.h"

#include "solvable/errors.hpp"
#include "solvable/numeric/gamma.hpp"
#include "solvable/numeric/samplers.hpp"
#include "solvable/ortho_poly.hpp"

#include <cmath>
#include <numbers>

using namespace solvable;
using namespace solvable::numeric;

TEST_SUITE("numeric") {
    TEST_CASE("log-gamma") {
        for (double x : {0.5, 1.0, 2.5, 5.0, 17.25})
            CHECK(log_gamma({x, 0}).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
        CHECK(std::exp(log_gamma({-3.5, 0})).real() == doctest::Approx(std::tgamma(-3.5)).epsilon(1e-12));
        // Gamma(z+1) = z Gamma(z)
        const std::complex<double> z(2, 3);
        const auto lhs = gamma(z + 1.0), rhs = z * gamma(z);
        CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-13);
        // Gamma(1/2 + iy) Gamma(1/2 - iy) = pi / cosh(pi y)
        const double y = 1.3;
        const auto p = gamma({0.5, y}) * gamma({0.5, -y});
        CHECK(p.real() == doctest::Approx(std::numbers::pi / std::cosh(std::numbers::pi * y)).epsilon(1e-13));
        CHECK_THROWS_AS(log_gamma({-2, 0}), PoleError);
    }

    TEST_CASE("pairwise sums and mapping") {
        std::vector<double> v(1000, 0.1);
        CHECK(pairwise_sum(v) == doctest::Approx(100.0).epsilon(1e-14));
        std::vector<double> xs;
        for (int i = 0; i < 5000; ++i) xs.push_back(i * 1e-3);
        auto f = [](double x) { return std::sin(x) * std::exp(-x); };
        CHECK(map_points(f, xs, Exec::serial) == map_points(f, xs, Exec::parallel));
    }

    TEST_CASE("quadrature") {
        auto g = [](double x) { return std::exp(-x * x); };
        const auto a = integrate(g, -INFINITY, INFINITY);
        CHECK(a.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
        const auto b = integrate([](double x) { return std::sqrt(x); }, 0, 1);
        CHECK(b.value == doctest::Approx(2.0 / 3).epsilon(1e-12));
        // inverse-root endpoint: bisection alone stalls near 1e-9
        const auto c = integrate([](double x) { return 1 / std::sqrt(x); }, 0, 1);
        CHECK(c.value == doctest::Approx(2.0).epsilon(1e-8));
        CHECK(c.error_estimate > 1e-12);
        const auto s = integrate(g, 0, INFINITY, Exec::serial), p = integrate(g, 0, INFINITY, Exec::parallel);
        CHECK(s.value == p.value);
        CHECK(gauss_legendre16([](double x) { return std::pow(x, 31); }, 0, 1) == doctest::Approx(1.0 / 32));
    }

    TEST_CASE("grids") {
        GridSpec g{-1, 1, 16, GridSpec::Mapping::linear};
        const auto xs = grid_points(g);
        REQUIRE(xs.size() == 16);
        CHECK(xs.front() == -1);
        CHECK(xs.back() == 1);
        CHECK_THROWS_AS(grid_points(GridSpec{1, 0, 32}), UsageError);
        CHECK_THROWS_AS(grid_points(GridSpec{0, 1, 4}), UsageError);
        const auto h = default_grid(ModelSystem::make(ModelId::H, {}));
        CHECK(h.mapping == GridSpec::Mapping::tanh_compactified);
        const auto l = default_grid(ModelSystem::make(ModelId::L, {2, 0}));
        CHECK(l.mapping == GridSpec::Mapping::exp_compactified);
        for (double x : grid_points(l)) CHECK(x > 0);
    }

    TEST_CASE("wavefunction values and nodes") {
        const auto h = ModelSystem::make(ModelId::H, {});
        for (int n = 0; n <= 6; ++n) {
            const auto w = level_wave(h, n);
            for (double x : {-1.7, 0.3, 2.2})
                CHECK(w(x) == doctest::Approx(hermite_poly(n).eval(x) * std::exp(-x * x / 2)).epsilon(1e-12));
            CHECK(count_sign_changes(sample(w, grid_points(default_grid(h)))) == n);
        }
        const auto l = ModelSystem::make(ModelId::L, {1, 0});
        CHECK(level_wave(l, 0)(1.0) == doctest::Approx(std::exp(-0.5)));
        const auto s = ModelSystem::make(ModelId::Soliton, {0, Rational(7, 2)});
        for (int n = 0; n <= s.max_level(); ++n)
            CHECK(count_sign_changes(sample(level_wave(s, n), grid_points(default_grid(s)))) == n);
    }

    TEST_CASE("inner products") {
        const auto h = ModelSystem::make(ModelId::H, {});
        const double n2 = inner_product(level_wave(h, 2), level_wave(h, 2)).value;
        CHECK(n2 == doctest::Approx(8 * std::sqrt(std::numbers::pi)).epsilon(1e-12));
        CHECK(std::abs(inner_product(level_wave(h, 1), level_wave(h, 3)).value) < 1e-12);
        const auto j = ModelSystem::make(ModelId::J, {Rational(3, 2), Rational(5, 2)});
        CHECK(std::abs(inner_product(level_wave(j, 0), level_wave(j, 2)).value) < 1e-12);
        CHECK(inner_product(level_wave(j, 1), level_wave(j, 1), Exec::serial).value ==
              inner_product(level_wave(j, 1), level_wave(j, 1), Exec::parallel).value);
    }

    TEST_CASE("finite-difference residual converges at fourth order") {
        const auto h = ModelSystem::make(ModelId::H, {});
        const PotentialFn U(h, h.potential());
        const auto w = level_wave(h, 3);
        const double e = h.energy(3).get_d();
        const double r1 = fd_schrodinger_residual(U, w, e, -6, 6, 0.2);
        const double r2 = fd_schrodinger_residual(U, w, e, -6, 6, 0.1);
        CHECK(r1 / r2 > 8);
        const auto [lo, hi] = fd_interval(h);
        CHECK(fd_schrodinger_residual(U, level_wave(h, 0), 0, lo, hi, 1e-3) < 1e-8);
    }

    TEST_CASE("deformed wavefunctions") {
        const auto h = ModelSystem::make(ModelId::H, {});
        const auto ka = krein_adler(h, {1, 2});
        const PotentialFn U(h, ka.system.potential());
        for (int n : {0, 3, 4}) {
            const auto w = deformed_wave(ka.system, ka.system.state(n));
            CHECK(fd_schrodinger_residual(U, w, h.energy(n).get_d(), -6, 6, 1e-3) < 1e-7);
        }
    }
}

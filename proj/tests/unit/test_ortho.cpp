#include "doctest.h"

#include "solvable/errors.hpp"
#include "solvable/ortho_poly.hpp"

using namespace solvable;

namespace {
const Poly X = Poly::identity(Var::x);

// H_{n+1} = 2x H_n - 2n H_{n-1}
Poly hermite_by_recurrence(int n) {
    Poly a(1, Var::x), b = X * Rational(2);
    if (n == 0) return a;
    for (int k = 1; k < n; ++k) {
        Poly c = X * Rational(2) * b - a * Rational(2 * k);
        a = b;
        b = c;
    }
    return b;
}

// L_n^a = sum_k (-1)^k C(n+a, n-k) x^k / k!, with the binomial as a falling product
Poly laguerre_explicit(int n, const Rational& a) {
    std::vector<Rational> c;
    for (int k = 0; k <= n; ++k) {
        Rational binom = 1;
        for (int i = 0; i < n - k; ++i) binom *= (n + a - i) / Rational(i + 1);
        Rational t = binom / Rational(factorial(k));
        c.push_back(k % 2 ? Rational(-t) : t);
    }
    return Poly(c, Var::x);
}
}  // namespace

TEST_SUITE("ortho") {
    TEST_CASE("Hermite matches the three-term recurrence") {
        CHECK(hermite_poly(3) == Poly({0, -12, 0, 8}, Var::x));
        for (int n = 0; n <= 10; ++n) CHECK(hermite_poly(n) == hermite_by_recurrence(n));
    }

    TEST_CASE("Laguerre matches the explicit sum") {
        for (Rational a : {Rational(0), Rational(1, 2), Rational(7, 3)})
            for (int n = 0; n <= 7; ++n) CHECK(laguerre_poly(n, a) == laguerre_explicit(n, a));
    }

    TEST_CASE("Jacobi low degrees") {
        const Rational a(1, 2), b(3, 2);
        CHECK(jacobi_poly(0, a, b) == Poly(1, Var::x));
        // (a+1) + (a+b+2)(x-1)/2
        CHECK(jacobi_poly(1, a, b) == Poly::linear(a + 1 - (a + b + 2) / 2, (a + b + 2) / 2, Var::x));
        // symmetry P_n^{(a,b)}(-x) = (-1)^n P_n^{(b,a)}(x)
        for (int n = 0; n <= 6; ++n) {
            Poly flipped = jacobi_poly(n, a, b).compose(-X);
            CHECK(flipped * Rational(n % 2 ? -1 : 1) == jacobi_poly(n, b, a));
        }
    }

    TEST_CASE("differential equations hold exactly") {
        for (int n = 0; n <= 8; ++n) {
            CHECK(diffeq_residual(FamilyId::hermite(), n).is_zero());
            CHECK(diffeq_residual(FamilyId::laguerre(Rational(3, 2)), n).is_zero());
            CHECK(diffeq_residual(FamilyId::jacobi(Rational(-1, 2), Rational(5, 2)), n).is_zero());
        }
    }

    TEST_CASE("Rodrigues formula is proportional to the sum") {
        for (int n = 0; n <= 6; ++n) {
            for (const auto& f : {FamilyId::hermite(), FamilyId::laguerre(Rational(1, 2)),
                                  FamilyId::jacobi(Rational(1, 2), Rational(3, 2))}) {
                const auto r = rodrigues_poly(f, n);
                CHECK(r.proportionality != 0);
                CHECK(r.poly.with_var(Var::x) == classical_poly(f, n) * r.proportionality);
            }
        }
    }

    TEST_CASE("recurrence coefficients") {
        for (int n = 1; n <= 6; ++n) {
            const Rational g(3, 2);
            const auto c = recurrence_coeffs(FamilyId::laguerre(g - Rational(1, 2)), n);
            CHECK(c.A == -(n + 1));
            CHECK(c.B == 2 * n + g + Rational(1, 2));
            CHECK(c.C == -(n + g - Rational(1, 2)));
            const auto h = recurrence_coeffs(FamilyId::hermite(), n);
            CHECK(h.A == Rational(1, 2));
            CHECK(h.B == 0);
            CHECK(h.C == n);
        }
    }

    TEST_CASE("parameter domain") {
        CHECK_THROWS_AS(classical_poly(FamilyId::laguerre(-1), 2), DomainError);
        CHECK_THROWS_AS(classical_poly(FamilyId::jacobi(0, Rational(-3, 2)), 2), DomainError);
    }
}

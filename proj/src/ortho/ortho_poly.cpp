#include "solvable/ortho_poly.hpp"

#include "solvable/errors.hpp"
#include "solvable/prefactored.hpp"

namespace solvable {

Poly hermite_poly(int n, Var v) {
    if (n < 0) throw DomainError("negative degree");
    // (2x)^n 2F0(-n/2, -(n-1)/2; ; -1/x^2)
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    Rational a(-n, 2), b(-(n - 1), 2);
    a.canonicalize();
    b.canonicalize();
    Rational two_n = pow(Rational(2), n);
    for (int k = 0; 2 * k <= n; ++k) {
        Rational t = two_n * pochhammer(a, k) * pochhammer(b, k) / Rational(factorial(k));
        if (k % 2) t = -t;
        c[static_cast<std::size_t>(n - 2 * k)] = t;
    }
    return Poly(std::move(c), v);
}

Poly laguerre_poly(int n, const Rational& alpha, Var v) {
    if (n < 0) throw DomainError("negative degree");
    // (alpha+1)_n/n! 1F1(-n; alpha+1; x); (alpha+1)_n/(alpha+1)_k = (alpha+k+1)_{n-k}
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    Rational nf(factorial(n));
    for (int k = 0; k <= n; ++k)
        c[static_cast<std::size_t>(k)] =
            pochhammer(alpha + k + 1, n - k) * pochhammer(Rational(-n), k) / (nf * Rational(factorial(k)));
    return Poly(std::move(c), v);
}

Poly jacobi_poly(int n, const Rational& alpha, const Rational& beta, Var v) {
    if (n < 0) throw DomainError("negative degree");
    // (alpha+1)_n/n! 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2)
    Poly u = Poly::linear(Rational(1, 2), Rational(-1, 2), v);
    Poly r(Rational(0), v), upow(Rational(1), v);
    Rational nf(factorial(n));
    for (int k = 0; k <= n; ++k) {
        if (k > 0) upow *= u;
        Rational c = pochhammer(alpha + k + 1, n - k) * pochhammer(Rational(-n), k) *
                     pochhammer(alpha + beta + n + 1, k) / (nf * Rational(factorial(k)));
        r += upow * c;
    }
    return r.with_var(v);
}

Poly classical_poly(const FamilyId& f, int n, Var v) {
    switch (f.kind) {
        case FamilyId::Kind::Hermite: return hermite_poly(n, v);
        case FamilyId::Kind::Laguerre:
            if (f.alpha <= -1) throw DomainError("Laguerre parameter must exceed -1");
            return laguerre_poly(n, f.alpha, v);
        case FamilyId::Kind::Jacobi:
            if (f.alpha <= -1 || f.beta <= -1) throw DomainError("Jacobi parameters must exceed -1");
            return jacobi_poly(n, f.alpha, f.beta, v);
    }
    return {};
}

Poly diffeq_residual(const FamilyId& f, int n) {
    Poly p = classical_poly(f, n);
    Poly x = Poly::identity(Var::x), d1 = p.derivative(), d2 = p.derivative(2);
    switch (f.kind) {
        case FamilyId::Kind::Hermite: return d2 - x * d1 * Rational(2) + p * Rational(2 * n);
        case FamilyId::Kind::Laguerre: return x * d2 + (Poly(f.alpha + 1, Var::x) - x) * d1 + p * Rational(n);
        case FamilyId::Kind::Jacobi: {
            Poly one(Rational(1), Var::x);
            return (one - x * x) * d2 + (Poly(f.beta - f.alpha, Var::x) - x * (f.alpha + f.beta + 2)) * d1 +
                   p * (Rational(n) * (f.alpha + f.beta + n + 1));
        }
    }
    return {};
}

RodriguesResult rodrigues_poly(const FamilyId& f, int n) {
    Poly eta = Poly::identity();
    PrefactoredFunction g, undo;
    Rational scale(1);
    switch (f.kind) {
        case FamilyId::Kind::Hermite:
            g = PrefactoredFunction::exp_of(-(eta * eta));
            undo = PrefactoredFunction::exp_of(eta * eta);
            scale = n % 2 ? -1 : 1;
            break;
        case FamilyId::Kind::Laguerre:
            g = PrefactoredFunction::exp_of(-eta) * PrefactoredFunction::power_of(Factor::eta, f.alpha + n);
            undo = PrefactoredFunction::exp_of(eta) * PrefactoredFunction::power_of(Factor::eta, -f.alpha);
            scale = Rational(1) / Rational(factorial(n));
            break;
        case FamilyId::Kind::Jacobi:
            g = PrefactoredFunction::power_of(Factor::one_minus_eta, f.alpha + n) *
                PrefactoredFunction::power_of(Factor::one_plus_eta, f.beta + n);
            undo = PrefactoredFunction::power_of(Factor::one_minus_eta, -f.alpha) *
                   PrefactoredFunction::power_of(Factor::one_plus_eta, -f.beta);
            scale = Rational(n % 2 ? -1 : 1) / (pow(Rational(2), n) * Rational(factorial(n)));
            break;
    }
    for (int i = 0; i < n; ++i) g = g.derivative();
    auto p = (g * undo).to_poly();
    if (!p) throw InvariantViolation("Rodrigues formula did not produce a polynomial");
    Poly rod = (*p * scale).with_var(Var::x);
    auto c = proportionality(rod, classical_poly(f, n));
    if (!c) throw InvariantViolation("Rodrigues polynomial not proportional to the hypergeometric one");
    return {rod, *c};
}

RecurrenceCoeffs recurrence_coeffs(const FamilyId& f, int n) {
    if (n < 0) throw DomainError("negative degree");
    Poly x = Poly::identity(Var::x);
    Poly pn = classical_poly(f, n), pn1 = classical_poly(f, n + 1);
    Poly lhs = x * pn;
    RecurrenceCoeffs r;
    r.A = lhs.leading() / pn1.leading();
    Poly rem = lhs - pn1 * r.A;
    r.B = rem.coeff(n) / pn.leading();
    rem -= pn * r.B;
    r.C = 0;
    if (n >= 1) {
        Poly pm = classical_poly(f, n - 1);
        r.C = rem.coeff(n - 1) / pm.leading();
        rem -= pm * r.C;
    }
    if (!rem.is_zero()) throw InvariantViolation("three-term recurrence does not close");
    return r;
}

}  // namespace solvable

#pragma once

#include "solvable/poly.hpp"

namespace solvable {

struct FamilyId {
    enum class Kind { Hermite, Laguerre, Jacobi };
    Kind kind = Kind::Hermite;
    Rational alpha = 0, beta = 0;

    static FamilyId hermite() { return {Kind::Hermite, 0, 0}; }
    static FamilyId laguerre(Rational a) { return {Kind::Laguerre, std::move(a), 0}; }
    static FamilyId jacobi(Rational a, Rational b) { return {Kind::Jacobi, std::move(a), std::move(b)}; }
};

struct RecurrenceCoeffs {
    Rational A, B, C;
};

// Hypergeometric-sum definitions, valid for every rational parameter.
Poly hermite_poly(int n, Var v = Var::x);
Poly laguerre_poly(int n, const Rational& alpha, Var v = Var::x);
Poly jacobi_poly(int n, const Rational& alpha, const Rational& beta, Var v = Var::x);

// Checked entry point: alpha, beta > -1.
Poly classical_poly(const FamilyId& family, int n, Var v = Var::x);

Poly diffeq_residual(const FamilyId& family, int n);

struct RodriguesResult {
    Poly poly;
    Rational proportionality;  // poly == proportionality * classical_poly
};
RodriguesResult rodrigues_poly(const FamilyId& family, int n);

// eta P_n = A P_{n+1} + B P_n + C P_{n-1}, by exact division.
RecurrenceCoeffs recurrence_coeffs(const FamilyId& family, int n);

}  // namespace solvable

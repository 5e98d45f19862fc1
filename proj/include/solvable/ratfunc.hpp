#pragma once

#include "solvable/poly.hpp"

#include <utility>

namespace solvable {

// Reduced quotient num/den with monic den.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(Poly num);  // NOLINT: polynomials are rational functions
    RatFunc(Poly num, Poly den);
    RatFunc(const Rational& c, Var v = Var::eta) : RatFunc(Poly(c, v)) {}  // NOLINT
    RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    Var var() const { return num_.is_constant() ? den_.var() : num_.var(); }

    RatFunc derivative(int order = 1) const;
    Rational operator()(const Rational& v) const;
    double eval(double v) const { return num_.eval(v) / den_.eval(v); }
    RatFunc compose(const Poly& inner) const;
    // Polynomial part and proper remainder: *this == first + second.
    std::pair<Poly, RatFunc> split_proper() const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    RatFunc operator-() const { return RatFunc(-num_, den_); }

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

private:
    void reduce();
    Poly num_, den_;
};

}  // namespace solvable

#pragma once

#include "solvable/rational.hpp"

#include <climits>
#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace solvable {

enum class Var { x, eta, y, s };  // s = ik for scattering amplitudes

const char* var_name(Var v);

// Dense univariate polynomial over Q. The zero polynomial has no coefficients.
class Poly {
public:
    static constexpr int kZeroDegree = INT_MIN;  // stands in for -infinity

    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs, Var v = Var::eta);
    Poly(const Rational& c, Var v = Var::eta);  // NOLINT: constants convert implicitly
    Poly(long c, Var v = Var::eta) : Poly(Rational(c), v) {}  // NOLINT

    static Poly monomial(const Rational& c, int degree, Var v = Var::eta);
    static Poly identity(Var v = Var::eta);  // the variable itself
    // a + b v
    static Poly linear(const Rational& a, const Rational& b, Var v = Var::eta);

    int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Var var() const { return var_; }
    Poly with_var(Var v) const;

    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Poly derivative(int order = 1) const;
    Rational operator()(const Rational& v) const;
    double eval(double v) const;
    std::complex<double> eval(std::complex<double> v) const;
    Poly compose(const Poly& inner) const;
    Poly pow(unsigned n) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    // Euclidean division over Q.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    // Exact quotient; throws InvariantViolation if b does not divide a.
    static Poly exact_div(const Poly& a, const Poly& b);
    static Poly gcd(const Poly& a, const Poly& b);  // monic, or zero

    Poly monic() const;
    // Primitive integer-coefficient representative with positive leading coefficient.
    Poly normalized() const;
    Poly square_free() const;

    std::vector<std::string> coeff_strings() const;
    std::string str() const;

private:
    void trim();
    static Var join(const Poly& a, const Poly& b);

    std::vector<Rational> coeffs_;
    Var var_ = Var::eta;
};

}  // namespace solvable

#pragma once

#include "solvable/poly.hpp"
#include "solvable/ratfunc.hpp"

#include <array>
#include <optional>
#include <string>

namespace solvable {

// Linear factors a function of eta may carry with rational exponents.
enum class Factor { eta = 0, one_minus_eta = 1, one_plus_eta = 2 };
inline constexpr std::size_t kFactorCount = 3;

Poly factor_poly(Factor f);

// Logarithms of the basis factors at a physical point, computed stably from x.
struct BasisLogs {
    double eta = 0;
    std::array<double, kFactorCount> log_factor{};  // log|factor(eta)|
    std::array<int, kFactorCount> factor_sign{1, 1, 1};
};

// Sign carried by factor^a: odd integer powers keep the factor's sign, other powers use |factor|.
int power_sign(const Rational& a, int factor_sign);

struct LogValue {
    double log_abs = 0;
    int sign = 0;  // 0 means the value vanishes
    double value() const;
};

// poly(eta) * exp(q(eta)) * prod_f factor_f(eta)^{a_f} * 2^{c}.
//
// Canonical form: poly is not divisible by any basis factor and 0 <= c < 1, so
// the representation is unique for a nonzero function.
class PrefactoredFunction {
public:
    PrefactoredFunction() : poly_(Rational(1)) {}
    PrefactoredFunction(Poly poly);  // NOLINT
    PrefactoredFunction(Poly poly, Poly exponent, std::array<Rational, kFactorCount> powers,
                        Rational pow2 = 0);

    static PrefactoredFunction exp_of(const Poly& q);
    static PrefactoredFunction power_of(Factor f, const Rational& a);
    static PrefactoredFunction two_to(const Rational& c);

    const Poly& poly() const { return poly_; }
    const Poly& exponent() const { return exponent_; }
    const std::array<Rational, kFactorCount>& powers() const { return powers_; }
    const Rational& power(Factor f) const { return powers_[static_cast<std::size_t>(f)]; }
    const Rational& pow2() const { return pow2_; }
    bool is_zero() const { return poly_.is_zero(); }

    PrefactoredFunction derivative() const;  // d/deta
    PrefactoredFunction pow(long n) const;
    // Divides by a function whose polynomial part is constant.
    PrefactoredFunction divided_by(const PrefactoredFunction& g) const;

    // (d/deta) log|f| as a rational function of eta.
    RatFunc log_derivative() const;

    // Plain polynomial when the prefactor is trivial up to integer powers.
    std::optional<Poly> to_poly() const;

    LogValue eval(const BasisLogs& at) const;

    friend PrefactoredFunction operator*(const PrefactoredFunction& a, const PrefactoredFunction& b);
    friend PrefactoredFunction operator*(PrefactoredFunction a, const Rational& c);
    friend bool operator==(const PrefactoredFunction& a, const PrefactoredFunction& b);

    // Sum of two functions whose prefactors differ by integer powers only.
    friend PrefactoredFunction operator+(const PrefactoredFunction& a, const PrefactoredFunction& b);
    friend PrefactoredFunction operator-(const PrefactoredFunction& a, const PrefactoredFunction& b);

    bool same_prefactor_class(const PrefactoredFunction& o) const;

    std::string str() const;

private:
    void canonicalize();

    Poly poly_;
    Poly exponent_;
    std::array<Rational, kFactorCount> powers_{};
    Rational pow2_;
};

// c with a == c * b, if it exists.
std::optional<Rational> proportionality(const PrefactoredFunction& a, const PrefactoredFunction& b);
std::optional<Rational> proportionality(const Poly& a, const Poly& b);

}  // namespace solvable

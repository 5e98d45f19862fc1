#pragma once

#include "solvable/rational.hpp"

#include <complex>
#include <map>
#include <string>
#include <utility>

namespace solvable {

// Finite sum of c * exp(mu x + nu t) with rational c, mu, nu.
class ExpSum {
public:
    using Key = std::pair<Rational, Rational>;  // (mu, nu)

    ExpSum() = default;
    ExpSum(const Rational& c);  // NOLINT
    ExpSum(long c) : ExpSum(Rational(c)) {}  // NOLINT
    static ExpSum term(const Rational& c, const Rational& mu, const Rational& nu = 0);

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    ExpSum dx(int order = 1) const;
    ExpSum dt() const;

    // Value scaled by exp(-shift); shift is chosen as the largest exponent so
    // sums stay finite. Ratios of sums evaluated with a common shift are exact.
    double eval_scaled(double x, double t, double shift) const;
    double max_exponent(double x, double t) const;
    double eval(double x, double t = 0) const;

    ExpSum& operator+=(const ExpSum& o);
    ExpSum& operator-=(const ExpSum& o);
    ExpSum& operator*=(const ExpSum& o);
    ExpSum operator-() const;
    friend ExpSum operator+(ExpSum a, const ExpSum& b) { return a += b; }
    friend ExpSum operator-(ExpSum a, const ExpSum& b) { return a -= b; }
    friend ExpSum operator*(ExpSum a, const ExpSum& b) { return a *= b; }
    friend bool operator==(const ExpSum& a, const ExpSum& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    void add(const Key& k, const Rational& c);
    std::map<Key, Rational> terms_;
};

}  // namespace solvable

#include "solvable/prefactored.hpp"

#include "solvable/errors.hpp"

#include <cmath>
#include <sstream>

namespace solvable {

Poly factor_poly(Factor f) {
    switch (f) {
        case Factor::eta: return Poly::linear(0, 1);
        case Factor::one_minus_eta: return Poly::linear(1, -1);
        case Factor::one_plus_eta: return Poly::linear(1, 1);
    }
    return Poly(Rational(1));
}

double LogValue::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

PrefactoredFunction::PrefactoredFunction(Poly poly) : poly_(poly.with_var(Var::eta)) { canonicalize(); }

PrefactoredFunction::PrefactoredFunction(Poly poly, Poly exponent,
                                         std::array<Rational, kFactorCount> powers, Rational pow2)
    : poly_(poly.with_var(Var::eta)),
      exponent_(exponent.with_var(Var::eta)),
      powers_(std::move(powers)),
      pow2_(std::move(pow2)) {
    canonicalize();
}

PrefactoredFunction PrefactoredFunction::exp_of(const Poly& q) { return {Poly(Rational(1)), q, {}, 0}; }

PrefactoredFunction PrefactoredFunction::power_of(Factor f, const Rational& a) {
    std::array<Rational, kFactorCount> p{};
    p[static_cast<std::size_t>(f)] = a;
    return {Poly(Rational(1)), Poly(), p, 0};
}

PrefactoredFunction PrefactoredFunction::two_to(const Rational& c) { return {Poly(Rational(1)), Poly(), {}, c}; }

void PrefactoredFunction::canonicalize() {
    if (exponent_.coeff(0) != 0) {
        // e^c is not rational
        throw UsageError("constant term in exponential factor is not representable");
    }
    if (poly_.is_zero()) {
        exponent_ = Poly();
        powers_ = {};
        pow2_ = 0;
        return;
    }
    for (std::size_t f = 0; f < kFactorCount; ++f) {
        Poly lf = factor_poly(static_cast<Factor>(f));
        for (;;) {
            if (poly_.degree() < 1) break;
            auto [q, r] = Poly::divmod(poly_, lf);
            if (!r.is_zero()) break;
            poly_ = q;
            powers_[f] += 1;
        }
    }
    Integer fl = floor_of(pow2_);
    if (fl != 0) {
        pow2_ -= fl;
        Rational two(2);
        poly_ *= solvable::pow(two, fl.get_si());
    }
}

PrefactoredFunction PrefactoredFunction::derivative() const {
    if (is_zero()) return *this;
    // f' = prefactor * prod_{a_j != 0} l_j^{-1} * [ (p' + q' p) prod l_j + sum_j a_j l_j' p prod_{i != j} l_i ]
    Poly base = poly_.derivative() + exponent_.derivative() * poly_;
    std::array<Rational, kFactorCount> np = powers_;
    Poly all(Rational(1));
    for (std::size_t f = 0; f < kFactorCount; ++f)
        if (powers_[f] != 0) all *= factor_poly(static_cast<Factor>(f));
    Poly result = base * all;
    for (std::size_t f = 0; f < kFactorCount; ++f) {
        if (powers_[f] == 0) continue;
        Poly lf = factor_poly(static_cast<Factor>(f));
        Poly others = Poly::exact_div(all, lf);
        result += poly_ * others * (powers_[f] * lf.coeff(1));
        np[f] -= 1;
    }
    return {result, exponent_, np, pow2_};
}

PrefactoredFunction PrefactoredFunction::pow(long n) const {
    if (n < 0) {
        if (poly_.degree() != 0) throw UsageError("negative power of a non-monomial prefactored function");
        std::array<Rational, kFactorCount> p{};
        for (std::size_t f = 0; f < kFactorCount; ++f) p[f] = powers_[f] * n;
        return {Poly(solvable::pow(poly_.leading(), n)), exponent_ * Rational(n), p, pow2_ * n};
    }
    PrefactoredFunction r;
    for (long i = 0; i < n; ++i) r = r * *this;
    return r;
}

PrefactoredFunction PrefactoredFunction::divided_by(const PrefactoredFunction& g) const {
    if (g.is_zero()) throw UsageError("division by zero prefactored function");
    return *this * g.pow(-1);
}

PrefactoredFunction operator*(const PrefactoredFunction& a, const PrefactoredFunction& b) {
    std::array<Rational, kFactorCount> p{};
    for (std::size_t f = 0; f < kFactorCount; ++f) p[f] = a.powers_[f] + b.powers_[f];
    return {a.poly_ * b.poly_, a.exponent_ + b.exponent_, p, a.pow2_ + b.pow2_};
}

PrefactoredFunction operator*(PrefactoredFunction a, const Rational& c) {
    return {a.poly_ * c, a.exponent_, a.powers_, a.pow2_};
}

bool operator==(const PrefactoredFunction& a, const PrefactoredFunction& b) {
    return a.poly_ == b.poly_ && a.exponent_ == b.exponent_ && a.powers_ == b.powers_ && a.pow2_ == b.pow2_;
}

bool PrefactoredFunction::same_prefactor_class(const PrefactoredFunction& o) const {
    if (exponent_ != o.exponent_ || pow2_ != o.pow2_) return false;
    for (std::size_t f = 0; f < kFactorCount; ++f)
        if (!is_integer(Rational(powers_[f] - o.powers_[f]))) return false;
    return true;
}

PrefactoredFunction operator+(const PrefactoredFunction& a, const PrefactoredFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (!a.same_prefactor_class(b)) throw UsageError("adding prefactored functions of different classes");
    std::array<Rational, kFactorCount> lo{};
    Poly pa = a.poly_, pb = b.poly_;
    for (std::size_t f = 0; f < kFactorCount; ++f) {
        lo[f] = a.powers_[f] < b.powers_[f] ? a.powers_[f] : b.powers_[f];
        Poly lf = factor_poly(static_cast<Factor>(f));
        pa *= lf.pow(static_cast<unsigned>(Rational(a.powers_[f] - lo[f]).get_num().get_ui()));
        pb *= lf.pow(static_cast<unsigned>(Rational(b.powers_[f] - lo[f]).get_num().get_ui()));
    }
    return {pa + pb, a.exponent_, lo, a.pow2_};
}

PrefactoredFunction operator-(const PrefactoredFunction& a, const PrefactoredFunction& b) {
    return a + b * Rational(-1);
}

RatFunc PrefactoredFunction::log_derivative() const {
    if (is_zero()) throw UsageError("log derivative of zero");
    RatFunc r(poly_.derivative(), poly_);
    r += RatFunc(exponent_.derivative());
    for (std::size_t f = 0; f < kFactorCount; ++f) {
        if (powers_[f] == 0) continue;
        Poly lf = factor_poly(static_cast<Factor>(f));
        r += RatFunc(Poly(powers_[f] * lf.coeff(1)), lf);
    }
    return r;
}

std::optional<Poly> PrefactoredFunction::to_poly() const {
    if (is_zero()) return poly_;
    if (!exponent_.is_zero() || pow2_ != 0) return std::nullopt;
    Poly p = poly_;
    for (std::size_t f = 0; f < kFactorCount; ++f) {
        if (!is_integer(powers_[f]) || powers_[f] < 0) return std::nullopt;
        p *= factor_poly(static_cast<Factor>(f)).pow(static_cast<unsigned>(powers_[f].get_num().get_ui()));
    }
    return p;
}

LogValue PrefactoredFunction::eval(const BasisLogs& at) const {
    double p = poly_.eval(at.eta);
    if (p == 0 || !std::isfinite(p)) return {0, 0};
    double l = std::log(std::abs(p)) + exponent_.eval(at.eta) + pow2_.get_d() * std::log(2.0);
    int sign = p > 0 ? 1 : -1;
    for (std::size_t f = 0; f < kFactorCount; ++f)
        if (powers_[f] != 0) {
            l += powers_[f].get_d() * at.log_factor[f];
            sign *= power_sign(powers_[f], at.factor_sign[f]);
        }
    return {l, sign};
}

int power_sign(const Rational& a, int factor_sign) {
    if (factor_sign >= 0 || a.get_den() != 1) return 1;
    return mpz_odd_p(a.get_num_mpz_t()) ? -1 : 1;
}

std::string PrefactoredFunction::str() const {
    std::ostringstream os;
    os << "(" << poly_.str() << ")";
    if (!exponent_.is_zero()) os << "*exp(" << exponent_.str() << ")";
    static const char* names[] = {"eta", "(1-eta)", "(1+eta)"};
    for (std::size_t f = 0; f < kFactorCount; ++f)
        if (powers_[f] != 0) os << "*" << names[f] << "^(" << to_string(powers_[f]) << ")";
    if (pow2_ != 0) os << "*2^(" << to_string(pow2_) << ")";
    return os.str();
}

std::optional<Rational> proportionality(const Poly& a, const Poly& b) {
    if (b.is_zero()) return a.is_zero() ? std::optional<Rational>(0) : std::nullopt;
    if (a.degree() != b.degree() && !a.is_zero()) return std::nullopt;
    Rational c = a.leading() / b.leading();
    if (a.is_zero()) c = 0;
    if (!(a == b * c)) return std::nullopt;
    return c;
}

std::optional<Rational> proportionality(const PrefactoredFunction& a, const PrefactoredFunction& b) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    if (a.exponent() != b.exponent() || a.powers() != b.powers() || a.pow2() != b.pow2()) return std::nullopt;
    return proportionality(a.poly(), b.poly());
}

}  // namespace solvable

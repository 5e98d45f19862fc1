#include "solvable/poly.hpp"

#include "solvable/errors.hpp"

#include <algorithm>
#include <sstream>

namespace solvable {

const char* var_name(Var v) {
    switch (v) {
        case Var::x: return "x";
        case Var::eta: return "eta";
        case Var::y: return "y";
        case Var::s: return "s";
    }
    return "?";
}

Poly::Poly(std::vector<Rational> coeffs, Var v) : coeffs_(std::move(coeffs)), var_(v) { trim(); }

Poly::Poly(const Rational& c, Var v) : var_(v) {
    if (c != 0) coeffs_.push_back(c);
}

Poly Poly::monomial(const Rational& c, int degree, Var v) {
    if (degree < 0) throw UsageError("negative monomial degree");
    std::vector<Rational> cs(static_cast<std::size_t>(degree) + 1);
    cs.back() = c;
    return Poly(std::move(cs), v);
}

Poly Poly::identity(Var v) { return monomial(1, 1, v); }

Poly Poly::linear(const Rational& a, const Rational& b, Var v) { return Poly({a, b}, v); }

Poly Poly::with_var(Var v) const {
    Poly p = *this;
    p.var_ = v;
    return p;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Var Poly::join(const Poly& a, const Poly& b) {
    if (a.var_ == b.var_) return a.var_;
    if (b.is_constant()) return a.var_;
    if (a.is_constant()) return b.var_;
    throw UsageError(std::string("polynomials in different variables: ") + var_name(a.var_) +
                     " and " + var_name(b.var_));
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Poly Poly::derivative(int order) const {
    Poly p = *this;
    for (int o = 0; o < order; ++o) {
        if (p.coeffs_.size() <= 1) return Poly(Rational(0), var_);
        std::vector<Rational> d(p.coeffs_.size() - 1);
        for (std::size_t i = 1; i < p.coeffs_.size(); ++i) d[i - 1] = p.coeffs_[i] * static_cast<long>(i);
        p = Poly(std::move(d), var_);
    }
    return p;
}

Rational Poly::operator()(const Rational& v) const {
    Rational r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * v + *it;
    return r;
}

double Poly::eval(double v) const {
    double r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * v + it->get_d();
    return r;
}

std::complex<double> Poly::eval(std::complex<double> v) const {
    std::complex<double> r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * v + it->get_d();
    return r;
}

Poly Poly::compose(const Poly& inner) const {
    Poly r(Rational(0), inner.var_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        r *= inner;
        r += Poly(*it, inner.var_);
    }
    return r.with_var(inner.var_);
}

Poly Poly::pow(unsigned n) const {
    Poly r(Rational(1), var_), b = *this;
    while (n) {
        if (n & 1u) r *= b;
        b *= b;
        n >>= 1u;
    }
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    var_ = join(*this, o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    var_ = join(*this, o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    Var v = join(*this, o);
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        var_ = v;
        return *this;
    }
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    var_ = v;
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& a : p.coeffs_) a = -a;
    return p;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw UsageError("polynomial division by zero");
    Var v = join(a, b);
    std::vector<Rational> rem = a.coeffs_;
    int db = b.degree();
    int da = a.degree();
    if (a.is_zero() || da < db) return {Poly(Rational(0), v), a.with_var(v)};
    std::vector<Rational> q(static_cast<std::size_t>(da - db) + 1);
    Rational lb = b.leading();
    for (int i = da; i >= db; --i) {
        Rational c = rem[static_cast<std::size_t>(i)] / lb;
        q[static_cast<std::size_t>(i - db)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(q), v), Poly(std::move(rem), v)};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InvariantViolation("inexact polynomial division");
    return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
}

Poly Poly::normalized() const {
    if (is_zero()) return *this;
    Integer l = 1, g = 0;
    for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    Poly p = *this * Rational(l);
    for (const auto& c : p.coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    Rational s(1, 1);
    s = Rational(Integer(1), g);
    if (p.leading() < 0) s = -s;
    return p * s;
}

Poly Poly::square_free() const {
    if (degree() <= 0) return *this;
    Poly g = gcd(*this, derivative());
    return exact_div(*this, g);
}

std::vector<std::string> Poly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(to_string(c));
    return out;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational a = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (a != 1 || i == 0) os << to_string(a);
        if (i > 0) os << (a != 1 ? "*" : "") << var_name(var_);
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

}  // namespace solvable

#include "solvable/ratfunc.hpp"

#include "solvable/errors.hpp"

namespace solvable {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Rational(1), num_.var()) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw UsageError("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1), den_.var());
        return;
    }
    if (den_.degree() > 0) {
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly::exact_div(num_, g);
            den_ = Poly::exact_div(den_, g);
        }
    }
    Rational l = den_.leading();
    if (l != 1) {
        num_ *= Rational(1) / l;
        den_ *= Rational(1) / l;
    }
}

RatFunc RatFunc::derivative(int order) const {
    RatFunc r = *this;
    for (int o = 0; o < order; ++o)
        r = RatFunc(r.num_.derivative() * r.den_ - r.num_ * r.den_.derivative(), r.den_ * r.den_);
    return r;
}

Rational RatFunc::operator()(const Rational& v) const {
    Rational d = den_(v);
    if (d == 0) throw DomainError("rational function evaluated at a pole");
    return num_(v) / d;
}

RatFunc RatFunc::compose(const Poly& inner) const {
    return RatFunc(num_.compose(inner), den_.compose(inner));
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) {
        *this = RatFunc(num_ + o.num_, den_);
    } else {
        *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    *this = RatFunc(num_ * o.num_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw UsageError("division by the zero rational function");
    *this = RatFunc(num_ * o.den_, den_ * o.num_);
    return *this;
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::pair<Poly, RatFunc> RatFunc::split_proper() const {
    auto [q, r] = Poly::divmod(num_, den_);
    return {q, RatFunc(r, den_)};
}

}  // namespace solvable

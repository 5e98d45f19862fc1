#include "solvable/diffop.hpp"

#include "solvable/errors.hpp"

#include <sstream>

namespace solvable {

DiffOp::DiffOp(std::vector<RatFunc> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void DiffOp::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

DiffOp DiffOp::multiplication(const RatFunc& f) { return DiffOp({f}); }

DiffOp DiffOp::d(int order) {
    std::vector<RatFunc> c(static_cast<std::size_t>(order) + 1, RatFunc(0));
    c.back() = RatFunc(1);
    return DiffOp(std::move(c));
}

RatFunc DiffOp::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return RatFunc(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

RatFunc DiffOp::apply(const RatFunc& f) const {
    RatFunc r(0), df = f;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0) df = df.derivative();
        if (!coeffs_[k].is_zero()) r += coeffs_[k] * df;
    }
    return r;
}

Poly DiffOp::apply_poly(const Poly& p) const {
    RatFunc r = apply(p);
    if (!r.is_polynomial()) throw InvariantViolation("operator image is not a polynomial");
    return r.num() * (Rational(1) / r.den().leading());
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), RatFunc(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) { return *this += -o; }

DiffOp DiffOp::operator-() const {
    DiffOp r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    // a_i D^i b_j D^j = a_i sum_m C(i,m) b_j^{(m)} D^{i-m+j}
    if (a.is_zero() || b.is_zero()) return DiffOp();
    std::vector<RatFunc> out(a.coeffs_.size() + b.coeffs_.size() - 1, RatFunc(0));
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        std::vector<RatFunc> derivs{b.coeffs_[j]};
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (i > 0) derivs.push_back(derivs.back().derivative());
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t m = 0; m <= i; ++m) {
                if (derivs[m].is_zero()) continue;
                Rational c(binomial(i, m));
                out[i - m + j] += a.coeffs_[i] * derivs[m] * RatFunc(c);
            }
        }
    }
    return DiffOp(std::move(out));
}

DiffOp operator*(const RatFunc& f, const DiffOp& a) {
    DiffOp r = a;
    for (auto& c : r.coeffs_) c = f * c;
    r.trim();
    return r;
}

DiffOp DiffOp::polynomial_of(const Poly& p) const {
    DiffOp r, power = DiffOp::multiplication(RatFunc(1));
    for (int i = 0; i <= p.degree(); ++i) {
        if (i > 0) power = *this * power;
        if (p.coeff(i) != 0) r += RatFunc(p.coeff(i)) * power;
    }
    return r;
}

std::string DiffOp::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        os << (first ? "" : " + ") << "[" << coeffs_[k].str() << "]";
        if (k > 0) os << "*D^" << k;
        first = false;
    }
    return os.str();
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

}  // namespace solvable

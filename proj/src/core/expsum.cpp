#include "solvable/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace solvable {

ExpSum::ExpSum(const Rational& c) {
    if (c != 0) terms_[{Rational(0), Rational(0)}] = c;
}

ExpSum ExpSum::term(const Rational& c, const Rational& mu, const Rational& nu) {
    ExpSum e;
    e.add({mu, nu}, c);
    return e;
}

void ExpSum::add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

ExpSum ExpSum::dx(int order) const {
    ExpSum r;
    for (const auto& [k, c] : terms_) r.add(k, c * pow(k.first, order));
    return r;
}

ExpSum ExpSum::dt() const {
    ExpSum r;
    for (const auto& [k, c] : terms_) r.add(k, c * k.second);
    return r;
}

double ExpSum::max_exponent(double x, double t) const {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& [k, c] : terms_) m = std::max(m, k.first.get_d() * x + k.second.get_d() * t);
    return terms_.empty() ? 0.0 : m;
}

double ExpSum::eval_scaled(double x, double t, double shift) const {
    double s = 0;
    for (const auto& [k, c] : terms_) s += c.get_d() * std::exp(k.first.get_d() * x + k.second.get_d() * t - shift);
    return s;
}

double ExpSum::eval(double x, double t) const { return eval_scaled(x, t, 0.0); }

ExpSum& ExpSum::operator+=(const ExpSum& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

ExpSum& ExpSum::operator-=(const ExpSum& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

ExpSum& ExpSum::operator*=(const ExpSum& o) {
    ExpSum r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) r.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    *this = std::move(r);
    return *this;
}

ExpSum ExpSum::operator-() const {
    ExpSum r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

std::string ExpSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        os << (first ? "" : " + ") << to_string(c);
        if (k.first != 0 || k.second != 0)
            os << "*exp(" << to_string(k.first) << "*x" << (k.second != 0 ? " + " + to_string(k.second) + "*t" : "")
               << ")";
        first = false;
    }
    return os.str();
}

}  // namespace solvable

#include "solvable/rational.hpp"

#include "solvable/errors.hpp"

#include <cctype>

namespace solvable {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    s = s.substr(b);
    if (s.empty()) throw UsageError("empty rational literal");

    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };

    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (ip == "-" || ip == "+" || ip.empty()) ip += "0";
        if (!valid_int(ip) || fp.empty() || !valid_int(fp) || fp[0] == '-' || fp[0] == '+')
            throw UsageError("malformed rational literal: " + s);
        Integer whole(strip_plus(ip)), frac(fp), scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        Rational r(frac, scale);
        r.canonicalize();
        Rational w(whole);
        return neg ? Rational(w - r) : Rational(w + r);
    }
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw UsageError("malformed rational literal: " + s);
    Integer d(den);
    if (d == 0) throw UsageError("zero denominator: " + s);
    Rational r(Integer(strip_plus(num)), d);
    r.canonicalize();
    return r;
}

double to_double(const Rational& r) { return r.get_d(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer floor_of(const Rational& a) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    return q;
}

Integer floor_prime(const Rational& a) {
    Integer f = floor_of(a);
    return is_integer(a) ? Integer(f - 1) : f;
}

bool rational_sqrt(const Rational& r, Rational& out) {
    if (r < 0) return false;
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
        return false;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
    out = Rational(n, d);
    out.canonicalize();
    return true;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw DomainError("zero to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Rational pochhammer(const Rational& a, unsigned long n) {
    Rational p(1);
    for (unsigned long j = 0; j < n; ++j) p *= a + j;
    return p;
}

int sign(const Rational& r) { return sgn(r); }

}  // namespace solvable

#include "solvable/wronskian.hpp"

#include "solvable/errors.hpp"

namespace solvable {

Poly poly_determinant(PolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) throw UsageError("determinant of an empty matrix");
    Var v = m[0][0].var();
    Poly prev(Rational(1), v);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return Poly(Rational(0), v);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = Poly::exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = Poly(Rational(0), v);
        }
        prev = m[k][k];
    }
    Poly d = m[n - 1][n - 1];
    return sign > 0 ? d : -d;
}

Poly poly_wronskian(const std::vector<Poly>& fs) {
    if (fs.empty()) throw UsageError("Wronskian of an empty sequence");
    const std::size_t n = fs.size();
    for (const auto& f : fs)
        if (f.var() != fs[0].var() && !f.is_constant()) throw UsageError("Wronskian entries in different variables");
    PolyMatrix m(n, std::vector<Poly>(n));
    for (std::size_t k = 0; k < n; ++k) {
        Poly d = fs[k];
        for (std::size_t j = 0; j < n; ++j) {
            m[j][k] = d;
            d = d.derivative();
        }
    }
    return poly_determinant(std::move(m));
}

namespace {

// Strips each column to a common prefactor and multiplies out the polynomial determinant.
PrefactoredFunction strip_and_det(const std::vector<std::vector<PrefactoredFunction>>& cols) {
    const std::size_t n = cols.size();
    PrefactoredFunction total;
    PolyMatrix m(n, std::vector<Poly>(n));
    for (std::size_t k = 0; k < n; ++k) {
        const auto& col = cols[k];
        const PrefactoredFunction* ref = nullptr;
        for (const auto& e : col)
            if (!e.is_zero()) {
                ref = &e;
                break;
            }
        if (!ref) return PrefactoredFunction(Poly(Rational(0)));
        std::array<Rational, kFactorCount> lo = ref->powers();
        for (const auto& e : col) {
            if (e.is_zero()) continue;
            if (!e.same_prefactor_class(*ref))
                throw UsageError("Wronskian column entries do not share a factor class");
            for (std::size_t f = 0; f < kFactorCount; ++f)
                if (e.powers()[f] < lo[f]) lo[f] = e.powers()[f];
        }
        for (std::size_t j = 0; j < n; ++j) {
            const auto& e = col[j];
            if (e.is_zero()) {
                m[j][k] = Poly(Rational(0));
                continue;
            }
            Poly p = e.poly();
            for (std::size_t f = 0; f < kFactorCount; ++f) {
                Rational diff = e.powers()[f] - lo[f];
                p *= factor_poly(static_cast<Factor>(f)).pow(static_cast<unsigned>(diff.get_num().get_ui()));
            }
            m[j][k] = p;
        }
        total = total * PrefactoredFunction(Poly(Rational(1)), ref->exponent(), lo, ref->pow2());
    }
    return total * PrefactoredFunction(poly_determinant(std::move(m)));
}

}  // namespace

PrefactoredFunction prefactored_wronskian_with(
    const std::vector<PrefactoredFunction>& fs,
    const std::function<PrefactoredFunction(const PrefactoredFunction&)>& deriv) {
    if (fs.empty()) throw UsageError("Wronskian of an empty sequence");
    const std::size_t n = fs.size();
    std::vector<std::vector<PrefactoredFunction>> cols(n);
    for (std::size_t k = 0; k < n; ++k) {
        cols[k].push_back(fs[k]);
        for (std::size_t j = 1; j < n; ++j) cols[k].push_back(deriv(cols[k].back()));
    }
    return strip_and_det(cols);
}

PrefactoredFunction prefactored_wronskian(const std::vector<PrefactoredFunction>& fs) {
    return prefactored_wronskian_with(fs, [](const PrefactoredFunction& f) { return f.derivative(); });
}

PrefactoredFunction prefactored_wronskian_x(const std::vector<PrefactoredFunction>& fs,
                                            const PrefactoredFunction& eta_prime) {
    const long n = static_cast<long>(fs.size());
    return eta_prime.pow(n * (n - 1) / 2) * prefactored_wronskian(fs);
}

}  // namespace solvable

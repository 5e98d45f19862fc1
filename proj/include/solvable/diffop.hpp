#pragma once

#include "solvable/ratfunc.hpp"

#include <vector>

namespace solvable {

// sum_k c_k(eta) (d/deta)^k
class DiffOp {
public:
    DiffOp() = default;
    explicit DiffOp(std::vector<RatFunc> coeffs);

    static DiffOp multiplication(const RatFunc& f);
    static DiffOp d(int order = 1);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<RatFunc>& coeffs() const { return coeffs_; }
    RatFunc coeff(int k) const;
    bool is_zero() const { return coeffs_.empty(); }

    RatFunc apply(const RatFunc& f) const;
    RatFunc apply(const Poly& p) const { return apply(RatFunc(p)); }
    // Polynomial image; throws if a coefficient leaves a nonpolynomial result.
    Poly apply_poly(const Poly& p) const;

    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    DiffOp operator-() const;
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    // Composition: (a*b) f = a(b f).
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
    friend DiffOp operator*(const RatFunc& f, const DiffOp& a);
    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.coeffs_ == b.coeffs_; }

    // p(op) for a polynomial p in y.
    DiffOp polynomial_of(const Poly& p) const;

    std::string str() const;

private:
    void trim();
    std::vector<RatFunc> coeffs_;
};

DiffOp commutator(const DiffOp& a, const DiffOp& b);

}  // namespace solvable

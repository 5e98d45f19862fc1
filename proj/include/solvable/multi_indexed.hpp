#pragma once

#include "solvable/darboux.hpp"
#include "solvable/models.hpp"

#include <optional>
#include <string>
#include <vector>

namespace solvable {

// Deletion set. Entries keep the given order, which fixes the Wronskian column
// order (type I columns first, then type II).
struct IndexSet {
    std::vector<int> dI, dII;

    // Sorted, distinct, all >= 1.
    static IndexSet make(std::vector<int> dI, std::vector<int> dII);
    // "1I,2I,1II" style, optionally in braces; empty string is the empty set.
    static IndexSet parse(const std::string& text);

    int M() const { return static_cast<int>(dI.size()); }
    int N() const { return static_cast<int>(dII.size()); }
    bool empty() const { return dI.empty() && dII.empty(); }
    long ell() const;
    std::string str() const;
    friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

// Virtual-state polynomials.
Poly xi_I(ModelId m, int v, const ModelParams& p);
Poly xi_II(ModelId m, int v, const ModelParams& p);

// Throws DomainError naming the violated bound.
void check_multi_bounds(ModelId m, const ModelParams& p, const IndexSet& D);

ModelParams multi_shifted(ModelId m, const ModelParams& p, const IndexSet& D);  // lambda^{[M,N]}
ModelParams plus_delta(ModelId m, const ModelParams& p, long times = 1);

// Raw Wronskian sign is kept (see normalized() on Poly for display).
Poly denominator_xi(ModelId m, const ModelParams& p, const IndexSet& D, bool unsafe = false);
Poly multi_poly(ModelId m, const ModelParams& p, const IndexSet& D, int n, bool unsafe = false);

class MultiIndexedSystem {
public:
    MultiIndexedSystem(ModelId m, ModelParams p, IndexSet D, bool unsafe = false);

    ModelId model() const { return m_; }
    const ModelParams& params() const { return p_; }
    const IndexSet& index_set() const { return D_; }
    const Poly& xi() const { return xi_; }
    const ModelParams& shifted_params() const { return shifted_; }
    long ell() const { return D_.ell(); }
    bool unsafe() const { return unsafe_; }

    Poly poly(int n) const { return multi_poly(m_, p_, D_, n, unsafe_); }
    // The operator governing P_{D,n}, with coefficients in eta.
    DiffOp tilde_h() const;
    RatFunc fuchs_residual(int n) const;
    Rational energy(int n) const;

    // Weight W(eta; lambda^{[M,N]}) / Xi^2 as a prefactored numerator over Xi^2.
    PrefactoredFunction weight_numerator() const;
    // phi_{D,n} up to the constant c_F^{M+N}: psi_D * P_{D,n}, given as num/den in eta.
    DeformedState eigenfunction(int n) const;
    RatFunc potential() const;

private:
    ModelId m_;
    ModelParams p_;
    IndexSet D_;
    bool unsafe_;
    Poly xi_;
    ModelParams shifted_;
};

struct MultiShiftCheck {
    RatFunc forward_residual, backward_residual;
};
MultiShiftCheck multi_shift_relations_check(ModelId m, const ModelParams& p, const IndexSet& D, int n,
                                            bool unsafe = false);

struct ConstantCheck {
    std::string name;
    std::optional<Rational> actual;  // empty when not proportional
    Rational expected;
    bool pass() const { return actual && *actual == expected; }
};

// P_{D,0}(lambda) / Xi_D(lambda + delta) against the closed-form product.
ConstantCheck plusdelta_check(ModelId m, const ModelParams& p, const IndexSet& D, bool unsafe = false);
Rational plusdelta_constant(ModelId m, const ModelParams& p, const IndexSet& D);

// Level-0 reductions (type I with 0 appended last, and type II likewise) and the
// exceptional X_ell specialization, for n = 0..nmax.
std::vector<ConstantCheck> structural_identities(ModelId m, const ModelParams& p, const IndexSet& D, int nmax = 2);

// Single-deletion exceptional polynomials. The two-term closed form of P_{ell,n}
// is available for X^I L (all ell) and X^II L (ell = 1); empty otherwise.
Poly exceptional_xi(ModelId m, bool type_one, int ell, const ModelParams& p);
std::optional<Poly> exceptional_poly(ModelId m, bool type_one, int ell, int n, const ModelParams& p);
Rational exceptional_constant(ModelId m, bool type_one, int n, const ModelParams& p);

Rational orthogonality_factor(ModelId m, const ModelParams& p, const IndexSet& D, int n);

// Indicial exponents of the governing operator at each rational root of Xi.
struct IndicialExponents {
    Rational root;
    std::vector<Rational> exponents;  // empty when irrational
};
std::vector<IndicialExponents> xi_indicial_exponents(const MultiIndexedSystem& sys);

// ---- duality between pseudo-virtual deletions and Krein-Adler deletions ----

struct DualityReport {
    std::vector<int> D, Dbar;
    int N = 0;
    ModelParams lambda_bar;
    bool potential_equal = false;
    std::optional<Rational> wronskian_ratio;  // W[xi_d] / W[P_e](lambda_bar)
    std::vector<bool> eigen_proportional;     // n = 0..2
    bool nonsingular_rule = false;            // combinatorial rule on Dbar
    bool nonsingular_sturm = false;           // exact root count of the DP denominator
    bool pass() const;
};
DualityReport duality_check(ModelId m, const ModelParams& p, const std::vector<int>& D, int N);

}  // namespace solvable

#pragma once

#include "solvable/diffop.hpp"
#include "solvable/prefactored.hpp"
#include "solvable/sturm.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace solvable {

enum class ModelId { H, L, J, Soliton };

const char* model_name(ModelId m);
ModelId parse_model(const std::string& s);

struct ModelParams {
    Rational g = 0;
    Rational h = 0;
    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

struct SinusoidalMap {
    std::string eta_of;          // "x", "x^2", "cos 2x", "tanh x"
    Poly eta_prime_sq;           // (eta')^2 in eta
    Poly eta_double_prime;       // eta'' in eta
    Interval eta_interval;
    PrefactoredFunction eta_prime;  // eta' itself, with its sign on the physical interval
};

// Physical x-range as doubles (infinite ends are +-inf).
struct XRange {
    double lo, hi;
};

class ModelSystem {
public:
    // Validates parameter bounds.
    static ModelSystem make(ModelId id, ModelParams p);
    // No validation; used for shifted and dual parameter sets.
    static ModelSystem unchecked(ModelId id, ModelParams p) { return ModelSystem(id, std::move(p)); }

    ModelId id() const { return id_; }
    const ModelParams& params() const { return p_; }
    const Rational& g() const { return p_.g; }
    const Rational& h() const { return p_.h; }

    ModelParams delta() const;
    ModelSystem shifted(long s) const;  // lambda + s delta, unchecked

    const SinusoidalMap& map() const { return map_; }
    XRange x_range() const;
    BasisLogs basis_logs(double x) const;

    // Highest bound-state level; -1 when unbounded.
    long max_level() const;
    void require_level(long n) const;

    // Energy formula; negative n is allowed for H/L/J (used by pseudo-virtual energies).
    Rational energy(long n) const;
    Poly eigen_poly(int n) const;
    PrefactoredFunction ground_state() const;  // level-0 prefactor
    // Prefactor multiplying eigen_poly(n); level dependent only for the soliton.
    PrefactoredFunction level_prefactor(int n) const;
    PrefactoredFunction eigenfunction(int n) const;
    RatFunc potential() const;  // U(eta) with E(0) = 0 for H/L/J

    // Similarity-transformed Hamiltonian for level n (n matters for the soliton only).
    DiffOp tilde_h(int level = 0) const;

private:
    ModelSystem(ModelId id, ModelParams p);
    ModelId id_;
    ModelParams p_;
    SinusoidalMap map_;
};

// -(eta')^2 [L' + L^2] - eta'' L + U - E, with L = d/deta log psi. Zero iff H psi = E psi.
RatFunc schrodinger_residual(const SinusoidalMap& map, const RatFunc& U, const RatFunc& log_derivative,
                             const Rational& E);

// G^{-1} (-d^2/dx^2 + U) G written in eta.
DiffOp conjugated_hamiltonian(const SinusoidalMap& map, const RatFunc& U, const PrefactoredFunction& G);

// -2 d^2/dx^2 log|F| in eta, given the eta-log-derivative of F.
RatFunc minus_two_d2x_log(const SinusoidalMap& map, const RatFunc& log_derivative);

// A = d/dx - w' and A^dagger = -d/dx - w' with w = log phi0.
PrefactoredFunction apply_A(const SinusoidalMap& map, const PrefactoredFunction& phi0, const PrefactoredFunction& f);
PrefactoredFunction apply_A_dagger(const SinusoidalMap& map, const PrefactoredFunction& phi0,
                                   const PrefactoredFunction& f);

// ---- operations on a model ----

Rational energy(ModelId m, long n, const ModelParams& p);
Poly eigen_poly(ModelId m, int n, const ModelParams& p);
DiffOp tilde_h_operator(ModelId m, const ModelParams& p);

RatFunc shape_invariance_residual(ModelId m, const ModelParams& p);

struct ShiftData {
    Rational cF;
    Poly c1, c2;
    std::function<Rational(int)> f, b;  // f(n) = f_n, b(n) = b_{n-1}
};
ShiftData shift_data(ModelId m, const ModelParams& p);

struct ShiftCheck {
    Poly forward_residual, backward_residual;
    Rational f_n, b_nm1;
};
// H/L/J: polynomial relations in eta. Soliton: the same relations on the x-space
// level functions, with f_n and b_{n-1} read off by proportionality.
ShiftCheck shift_relation_check(ModelId m, int n, const ModelParams& p);

struct ClosureData {
    Poly R1, R0, Rm1;  // in y
};
ClosureData closure_data(ModelId m, const ModelParams& p);
DiffOp closure_residual(ModelId m, const ModelParams& p);

struct HeisenbergStep {
    Rational alpha_plus, alpha_minus, discriminant;
};
HeisenbergStep heisenberg_step_check(ModelId m, int n, const ModelParams& p);

enum class Direction { up, down };
Rational ladder_action(ModelId m, int n, const ModelParams& p, Direction dir);

struct NormExpr {
    enum class Tag { sqrt_pi, gamma_product };
    Rational coeff;
    Tag tag = Tag::sqrt_pi;
    std::vector<Rational> gamma_num, gamma_den;
    double value() const;
};
NormExpr norm_closed_form(ModelId m, int n, const ModelParams& p);

struct BoundaryExponents {
    std::string boundary;
    Rational rho1, rho2;
};
std::vector<BoundaryExponents> boundary_exponents(ModelId m, const ModelParams& p);

// Named exact residuals that must vanish (discrete symmetries of the potential body).
std::vector<std::pair<std::string, RatFunc>> discrete_symmetry_residuals(ModelId m, const ModelParams& p);

// (W+, W-) = -lim w'(x) at x -> +inf, -inf for the soliton.
std::pair<Rational, Rational> soliton_w_limits(const Rational& h);

}  // namespace solvable

#pragma once

#include "solvable/darboux.hpp"
#include "solvable/expsum.hpp"
#include "solvable/numeric/kernels.hpp"
#include "solvable/ratfunc.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace solvable {

// ---- amplitudes ----

// Gamma argument a + b s with s = ik.
struct GammaArg {
    Rational a, b;
    friend bool operator==(const GammaArg&, const GammaArg&) = default;
    std::string str() const;
};

// factor(s) * prod Gamma(num) / prod Gamma(den), s = ik.
struct AmplitudeExpr {
    std::vector<GammaArg> gamma_num, gamma_den;
    RatFunc factor{Poly(Rational(1), Var::s)};
    bool vanishes = false;  // a Gamma pole in the denominator kills the whole expression

    // Cancels Gamma pairs whose arguments differ by an integer and folds constant Gammas.
    void simplify();
    AmplitudeExpr reciprocal() const;
    std::string str() const;

    friend AmplitudeExpr operator*(const AmplitudeExpr& a, const AmplitudeExpr& b);
    friend AmplitudeExpr operator/(const AmplitudeExpr& a, const AmplitudeExpr& b);
};

struct Amplitudes {
    AmplitudeExpr t, r;
};

// Throws DomainError for h <= 1/2 unless unsafe.
Amplitudes soliton_amplitudes(const Rational& h, bool unsafe = false);

// Throws PoleError within kPoleDistance of a pole.
std::complex<double> evaluate_amplitude(const AmplitudeExpr& e, std::complex<double> k);

double unitarity_deviation(const Amplitudes& a, const std::vector<double>& ks,
                           numeric::Exec exec = numeric::Exec::parallel);

struct ShapeConstraint {
    bool t_exact = false;  // t(h-1)/t(h) == (s+h)/(s-h) after simplification
    bool r_exact = false;  // r(h-1)/r(h) == -(s+h)/(s-h); only for non-integer h
    bool r_checked = false;
    double max_deviation = 0;
};
ShapeConstraint shape_constraint_check(const Rational& h, const std::vector<double>& ks);

// max |t(h) - t(-h-1)|, |r(h) - r(-h-1)| over ks.
double discrete_symmetry_deviation(const Rational& h, const std::vector<double>& ks);

// kappa > 0 with 1/t(i kappa) = 0, found by sign changes and bisection.
std::vector<double> locate_t_poles(const AmplitudeExpr& t, double kappa_max, int scan_points = 4000);

// ---- deformations ----

struct DeformationFactor {
    enum class Side { full_line, half_line };
    std::vector<Rational> plus, minus;  // Delta^+_j, Delta^-_j
    Side side = Side::full_line;

    int M() const { return static_cast<int>(plus.size()); }
    RatFunc t_factor() const;  // full line only
    RatFunc r_factor() const;
};

// The half line has no transmission; t is passed through unchanged there.
Amplitudes deform_amplitudes(const Amplitudes& base, const DeformationFactor& d);

// t_D / t == (-1)^M r_D / r as rational factors, with identical Gamma content.
bool defrt_identity(const Amplitudes& base, const Amplitudes& deformed, int M);

std::pair<Rational, Rational> soliton_asymptotic_exponents(const SeedSpec& seed, const Rational& h);
DeformationFactor soliton_deformation(const std::vector<SeedSpec>& seeds, const Rational& h);

// ---- reflectionless potentials ----

struct ReflectionlessSpec {
    std::vector<Rational> k, c;
    void validate() const;
    int N() const { return static_cast<int>(k.size()); }
    // k_j = j, c_j = (N+j)! / (j! (j-1)! (N-j)!)
    static ReflectionlessSpec special_case(int N);
};

ExpSum expsum_determinant(std::vector<std::vector<ExpSum>> m);

// u_N(x), or u_N(x;t) with c_j -> c_j e^{8 k_j^3 t}.
ExpSum kay_moses_u(const ReflectionlessSpec& spec, bool time_dependent = false);

// U = num / u^2.
struct KayMoses {
    ExpSum u, num;
    double potential(double x, double t = 0) const;
};
KayMoses kay_moses(const ReflectionlessSpec& spec, bool time_dependent = false);

// N = 1: U == -8 k^2 a e^{-2kx} / u^2 with u = 1 + a e^{-2kx}, i.e. -2k^2 sech^2(kx - log(a)/2).
bool single_soliton_identity(const ReflectionlessSpec& spec);

// -2 d^2 log u_N == -N(N+1) sech^2 x for the special-case parameters.
bool special_case_identity(int N);

ExpSum make_free_seed(const Rational& k, const Rational& c_tilde);

struct WronskianEquivalence {
    std::vector<Rational> c_tilde;
    bool wronskian_equals_stripped_u = false;  // W == prod(k_j - k_l) e^{sum k x} u_N
    bool potential_exact = false;
    double max_deviation = 0;
    bool pass() const { return wronskian_equals_stripped_u && potential_exact; }
};
WronskianEquivalence wronskian_equivalence(const ReflectionlessSpec& spec);

// Leading coefficients of W[psi.., e^{alpha x}] / W[psi..] at +inf and -inf.
// alpha = ik gives the plane-wave factors prod(ik - k_j) and prod(ik + k_j).
std::pair<Rational, Rational> plane_wave_factors(const ReflectionlessSpec& spec, const Rational& alpha);

struct KdvResult {
    bool exact = false;       // residual computed in the ExpSum algebra
    bool exact_zero = false;  // and it vanished identically
    double max_residual = 0;  // on x in [-10, 10], 401 points, at the given t
    std::size_t numerator_terms = 0;
    bool pass() const;
};
// dU/dt - 6 U dU/dx + d^3U/dx^3. Exact for N <= 2, numeric beyond.
KdvResult kdv_evolve(const ReflectionlessSpec& spec, const Rational& t);

}  // namespace solvable

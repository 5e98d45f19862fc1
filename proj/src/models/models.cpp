#include "solvable/models.hpp"

#include "solvable/errors.hpp"
#include "solvable/ortho_poly.hpp"

#include <cmath>
#include <limits>

namespace solvable {

namespace {

const Poly kEta = Poly::identity();
const Poly kOne = Poly(Rational(1));

PrefactoredFunction pf_pow(Factor f, const Rational& a) { return PrefactoredFunction::power_of(f, a); }

SinusoidalMap make_map(ModelId id) {
    SinusoidalMap m;
    switch (id) {
        case ModelId::H:
            m = {"x", kOne, Poly(Rational(0)), Interval::real_line(), PrefactoredFunction()};
            break;
        case ModelId::L:
            m = {"x^2", kEta * Rational(4), Poly(Rational(2)), Interval{Rational(0), std::nullopt},
                 pf_pow(Factor::eta, Rational(1, 2)) * Rational(2)};
            break;
        case ModelId::J:
            m = {"cos 2x", (kOne - kEta * kEta) * Rational(4), kEta * Rational(-4), Interval{Rational(-1), Rational(1)},
                 pf_pow(Factor::one_minus_eta, Rational(1, 2)) * pf_pow(Factor::one_plus_eta, Rational(1, 2)) *
                     Rational(-2)};
            break;
        case ModelId::Soliton:
            m = {"tanh x", (kOne - kEta * kEta).pow(2), kEta * (kOne - kEta * kEta) * Rational(-2),
                 Interval{Rational(-1), Rational(1)}, PrefactoredFunction(kOne - kEta * kEta)};
            break;
    }
    return m;
}

}  // namespace

const char* model_name(ModelId m) {
    switch (m) {
        case ModelId::H: return "H";
        case ModelId::L: return "L";
        case ModelId::J: return "J";
        case ModelId::Soliton: return "Soliton";
    }
    return "?";
}

ModelId parse_model(const std::string& s) {
    if (s == "H") return ModelId::H;
    if (s == "L") return ModelId::L;
    if (s == "J") return ModelId::J;
    if (s == "Soliton" || s == "soliton" || s == "S") return ModelId::Soliton;
    throw UsageError("unknown model '" + s + "' (expected H, L, J or Soliton)");
}

ModelSystem::ModelSystem(ModelId id, ModelParams p) : id_(id), p_(std::move(p)), map_(make_map(id)) {
    if (id_ == ModelId::H) p_ = {};
    if (id_ == ModelId::L) p_.h = 0;
    if (id_ == ModelId::Soliton) p_.g = 0;
}

ModelSystem ModelSystem::make(ModelId id, ModelParams p) {
    const Rational half(1, 2);
    switch (id) {
        case ModelId::H: break;
        case ModelId::L:
            if (p.g <= half) throw DomainError("L requires g > 1/2");
            break;
        case ModelId::J:
            if (p.g <= half) throw DomainError("J requires g > 1/2");
            if (p.h <= half) throw DomainError("J requires h > 1/2");
            break;
        case ModelId::Soliton:
            if (p.h <= half) throw DomainError("Soliton requires h > 1/2");
            break;
    }
    return ModelSystem(id, std::move(p));
}

ModelParams ModelSystem::delta() const {
    switch (id_) {
        case ModelId::H: return {0, 0};
        case ModelId::L: return {1, 0};
        case ModelId::J: return {1, 1};
        case ModelId::Soliton: return {0, -1};
    }
    return {};
}

ModelSystem ModelSystem::shifted(long s) const {
    ModelParams d = delta();
    return unchecked(id_, {p_.g + d.g * s, p_.h + d.h * s});
}

XRange ModelSystem::x_range() const {
    const double inf = std::numeric_limits<double>::infinity();
    switch (id_) {
        case ModelId::H:
        case ModelId::Soliton: return {-inf, inf};
        case ModelId::L: return {0.0, inf};
        case ModelId::J: return {0.0, M_PI / 2};
    }
    return {-inf, inf};
}

BasisLogs ModelSystem::basis_logs(double x) const {
    BasisLogs b;
    const double ln2 = std::log(2.0);
    switch (id_) {
        case ModelId::H:
            b.eta = x;
            b.log_factor = {std::log(std::abs(x)), std::log(std::abs(1 - x)), std::log(std::abs(1 + x))};
            break;
        case ModelId::L:
            b.eta = x * x;
            b.log_factor = {2 * std::log(std::abs(x)), std::log(std::abs(1 - x * x)), std::log1p(x * x)};
            break;
        case ModelId::J:
            b.eta = std::cos(2 * x);
            b.log_factor = {std::log(std::abs(b.eta)), ln2 + 2 * std::log(std::abs(std::sin(x))),
                            ln2 + 2 * std::log(std::abs(std::cos(x)))};
            break;
        case ModelId::Soliton: {
            b.eta = std::tanh(x);
            // log(1 - tanh x) = log 2 - log(1 + e^{2x}); log(1 + tanh x) = log 2 - log(1 + e^{-2x})
            auto softplus = [](double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); };
            b.log_factor = {std::log(std::abs(b.eta)), ln2 - softplus(2 * x), ln2 - softplus(-2 * x)};
            break;
        }
    }
    const double eta = b.eta;
    b.factor_sign = {eta < 0 ? -1 : 1, 1 - eta < 0 ? -1 : 1, 1 + eta < 0 ? -1 : 1};
    return b;
}

long ModelSystem::max_level() const {
    if (id_ != ModelId::Soliton) return -1;
    return floor_prime(p_.h).get_si();
}

void ModelSystem::require_level(long n) const {
    if (n < 0) throw DomainError("negative level index");
    if (id_ == ModelId::Soliton && n > max_level())
        throw DomainError("Soliton level n=" + std::to_string(n) + " exceeds the bound-state count (max " +
                          std::to_string(max_level()) + ")");
}

Rational ModelSystem::energy(long n) const {
    switch (id_) {
        case ModelId::H: return Rational(2 * n);
        case ModelId::L: return Rational(4 * n);
        case ModelId::J: return Rational(4 * n) * (p_.g + p_.h + n);
        case ModelId::Soliton: require_level(n); return -(p_.h - n) * (p_.h - n);
    }
    return 0;
}

Poly ModelSystem::eigen_poly(int n) const {
    require_level(n);
    const Rational half(1, 2);
    switch (id_) {
        case ModelId::H: return hermite_poly(n, Var::eta);
        case ModelId::L: return laguerre_poly(n, p_.g - half, Var::eta);
        case ModelId::J: return jacobi_poly(n, p_.g - half, p_.h - half, Var::eta);
        case ModelId::Soliton: return jacobi_poly(n, p_.h - n, p_.h - n, Var::eta);
    }
    return {};
}

PrefactoredFunction ModelSystem::ground_state() const { return level_prefactor(0); }

PrefactoredFunction ModelSystem::level_prefactor(int n) const {
    const Rational half(1, 2);
    switch (id_) {
        case ModelId::H: return PrefactoredFunction::exp_of(kEta * kEta * Rational(-1, 2));
        case ModelId::L: return PrefactoredFunction::exp_of(kEta * (-half)) * pf_pow(Factor::eta, p_.g / 2);
        case ModelId::J:
            return pf_pow(Factor::one_minus_eta, p_.g / 2) * pf_pow(Factor::one_plus_eta, p_.h / 2) *
                   PrefactoredFunction::two_to(-(p_.g + p_.h) / 2);
        case ModelId::Soliton: {
            Rational mu = p_.h - n;
            return pf_pow(Factor::one_minus_eta, mu / 2) * pf_pow(Factor::one_plus_eta, mu / 2);
        }
    }
    return {};
}

PrefactoredFunction ModelSystem::eigenfunction(int n) const {
    return level_prefactor(n) * PrefactoredFunction(eigen_poly(n));
}

RatFunc ModelSystem::potential() const {
    const Rational& g = p_.g;
    const Rational& h = p_.h;
    switch (id_) {
        case ModelId::H: return RatFunc(kEta * kEta - kOne);
        case ModelId::L:
            return RatFunc(kEta - kOne * (g * 2 + 1)) + RatFunc(Poly(g * (g - 1)), kEta);
        case ModelId::J:
            return RatFunc(Poly(g * (g - 1) * 2), kOne - kEta) + RatFunc(Poly(h * (h - 1) * 2), kOne + kEta) -
                   RatFunc(Poly((g + h) * (g + h)));
        case ModelId::Soliton: return RatFunc((kOne - kEta * kEta) * (-h * (h + 1)));
    }
    return {};
}

DiffOp ModelSystem::tilde_h(int level) const {
    if (id_ == ModelId::Soliton) return conjugated_hamiltonian(map_, potential(), level_prefactor(level));
    ShiftData s = shift_data(id_, p_);
    return DiffOp({RatFunc(0), RatFunc(s.c1 * Rational(-4)), RatFunc(s.c2 * Rational(-4))});
}

// ---- generic calculus in eta ----

RatFunc schrodinger_residual(const SinusoidalMap& map, const RatFunc& U, const RatFunc& L, const Rational& E) {
    RatFunc s(map.eta_prime_sq), e(map.eta_double_prime);
    return -(s * (L.derivative() + L * L) + e * L) + U - RatFunc(E);
}

DiffOp conjugated_hamiltonian(const SinusoidalMap& map, const RatFunc& U, const PrefactoredFunction& G) {
    RatFunc s(map.eta_prime_sq), e(map.eta_double_prime);
    RatFunc L = G.log_derivative();
    RatFunc c0 = U - (s * (L.derivative() + L * L) + e * L);
    RatFunc c1 = -(e + RatFunc(2) * s * L);
    return DiffOp({c0, c1, -s});
}

RatFunc minus_two_d2x_log(const SinusoidalMap& map, const RatFunc& L) {
    RatFunc s(map.eta_prime_sq), e(map.eta_double_prime);
    return RatFunc(-2) * (s * L.derivative() + e * L);
}

PrefactoredFunction apply_A(const SinusoidalMap& map, const PrefactoredFunction& phi0, const PrefactoredFunction& f) {
    return map.eta_prime * phi0 * f.divided_by(phi0).derivative();
}

PrefactoredFunction apply_A_dagger(const SinusoidalMap& map, const PrefactoredFunction& phi0,
                                   const PrefactoredFunction& f) {
    return (map.eta_prime * (phi0 * f).derivative()).divided_by(phi0) * Rational(-1);
}

// ---- operations ----

Rational energy(ModelId m, long n, const ModelParams& p) {
    auto sys = ModelSystem::make(m, p);
    sys.require_level(n);
    return sys.energy(n);
}

Poly eigen_poly(ModelId m, int n, const ModelParams& p) { return ModelSystem::make(m, p).eigen_poly(n); }

DiffOp tilde_h_operator(ModelId m, const ModelParams& p) { return ModelSystem::make(m, p).tilde_h(0); }

RatFunc shape_invariance_residual(ModelId m, const ModelParams& p) {
    auto sys = ModelSystem::make(m, p);
    auto next = sys.shifted(1);
    const auto& map = sys.map();
    RatFunc s(map.eta_prime_sq), e(map.eta_double_prime);
    RatFunc L0 = sys.ground_state().log_derivative();
    RatFunc L1 = next.ground_state().log_derivative();
    RatFunc lhs = s * L0 * L0 - (s * L0.derivative() + e * L0);
    RatFunc rhs = s * L1 * L1 + (s * L1.derivative() + e * L1) + RatFunc(sys.energy(1) - sys.energy(0));
    return lhs - rhs;
}

ShiftData shift_data(ModelId m, const ModelParams& p) {
    const Rational half(1, 2);
    const Rational g = p.g, h = p.h;
    ShiftData s;
    switch (m) {
        case ModelId::H:
            s.cF = 1;
            s.c1 = kEta * Rational(-1, 2);
            s.c2 = Poly(Rational(1, 4));
            s.f = [](int n) -> Rational { return Rational(2 * n); };
            s.b = [](int) -> Rational { return Rational(1); };
            break;
        case ModelId::L:
            s.cF = 2;
            s.c1 = Poly(g + half) - kEta;
            s.c2 = kEta;
            s.f = [](int) -> Rational { return Rational(-2); };
            s.b = [](int n) -> Rational { return Rational(-2 * n); };
            break;
        case ModelId::J:
            s.cF = -4;
            s.c1 = Poly(h - g) - kEta * (g + h + 1);
            s.c2 = kOne - kEta * kEta;
            s.f = [g, h](int n) -> Rational { return Rational(-2) * (g + h + n); };
            s.b = [](int n) -> Rational { return Rational(-2 * n); };
            break;
        case ModelId::Soliton: {
            // c2 = (eta')^2/4, c1 = (eta'' + 2 w' eta')/4 with w = -h log cosh x
            s.cF = 1;
            s.c2 = (kOne - kEta * kEta).pow(2) * Rational(1, 4);
            s.c1 = kEta * (kOne - kEta * kEta) * (-(h + 1) / 2);
            s.f = [p](int n) -> Rational { return shift_relation_check(ModelId::Soliton, n, p).f_n; };
            s.b = [p](int n) -> Rational { return shift_relation_check(ModelId::Soliton, n, p).b_nm1; };
            break;
        }
    }
    return s;
}

ShiftCheck shift_relation_check(ModelId m, int n, const ModelParams& p) {
    if (n < 1) throw DomainError("shift relations need n >= 1");
    auto sys = ModelSystem::make(m, p);
    sys.require_level(n);
    auto next = sys.shifted(1);
    ShiftCheck out;
    if (m == ModelId::Soliton) {
        PrefactoredFunction phi0 = sys.ground_state();
        PrefactoredFunction up = sys.eigenfunction(n);
        PrefactoredFunction down = next.eigenfunction(n - 1);
        PrefactoredFunction a = apply_A(sys.map(), phi0, up);
        auto f = proportionality(a, down);
        if (!f) throw InvariantViolation("soliton forward shift is not proportional to the shifted level");
        PrefactoredFunction ad = apply_A_dagger(sys.map(), phi0, down);
        auto b = proportionality(ad, up);
        if (!b) throw InvariantViolation("soliton backward shift is not proportional to the original level");
        out.f_n = *f;
        out.b_nm1 = *b;
        out.forward_residual = (a - down * *f).poly();
        out.backward_residual = (ad - up * *b).poly();
        return out;
    }
    ShiftData s = shift_data(m, p);
    // shifted c1 appears through lambda only in the backward operator at lambda
    Poly Pn = sys.eigen_poly(n), Qm = next.eigen_poly(n - 1);
    out.f_n = s.f(n);
    out.b_nm1 = s.b(n);
    out.forward_residual = Pn.derivative() * s.cF - Qm * out.f_n;
    // B = -4 cF^{-1} (c2 d/deta + c1)
    Poly bq = (s.c2 * Qm.derivative() + s.c1 * Qm) * (Rational(-4) / s.cF);
    out.backward_residual = bq - Pn * out.b_nm1;
    return out;
}

ClosureData closure_data(ModelId m, const ModelParams& p) {
    const Poly y = Poly::identity(Var::y);
    const Rational g = p.g, h = p.h;
    switch (m) {
        case ModelId::H: return {Poly(Rational(0), Var::y), Poly(Rational(4), Var::y), Poly(Rational(0), Var::y)};
        case ModelId::L:
            return {Poly(Rational(0), Var::y), Poly(Rational(16), Var::y), (y + Poly(g * 2 + 1, Var::y)) * Rational(-8)};
        case ModelId::J:
            return {Poly(Rational(8), Var::y), (y + Poly((g + h) * (g + h) - 1, Var::y)) * Rational(16),
                    Poly(Rational(16) * (g - h) * (g + h - 1), Var::y)};
        case ModelId::Soliton: break;
    }
    throw DomainError("closure data is tabulated for H, L and J only");
}

DiffOp closure_residual(ModelId m, const ModelParams& p) {
    auto sys = ModelSystem::make(m, p);
    ClosureData c = closure_data(m, p);
    DiffOp H = sys.tilde_h();
    DiffOp eta = DiffOp::multiplication(RatFunc(kEta));
    DiffOp c1 = commutator(H, eta);
    DiffOp lhs = commutator(H, c1);
    return lhs - eta * H.polynomial_of(c.R0) - c1 * H.polynomial_of(c.R1) - H.polynomial_of(c.Rm1);
}

HeisenbergStep heisenberg_step_check(ModelId m, int n, const ModelParams& p) {
    auto sys = ModelSystem::make(m, p);
    ClosureData c = closure_data(m, p);
    Rational y = sys.energy(n);
    HeisenbergStep out;
    Rational r1 = c.R1(y);
    out.discriminant = r1 * r1 + c.R0(y) * 4;
    Rational root;
    if (!rational_sqrt(out.discriminant, root))
        throw InvariantViolation("Heisenberg discriminant is not a rational square");
    out.alpha_plus = (r1 + root) / 2;
    out.alpha_minus = (r1 - root) / 2;
    if (sys.energy(n + 1) - y != out.alpha_plus) throw InvariantViolation("E(n+1) - E(n) != alpha_+");
    if (n >= 1 && sys.energy(n - 1) - y != out.alpha_minus) throw InvariantViolation("E(n-1) - E(n) != alpha_-");
    return out;
}

Rational ladder_action(ModelId m, int n, const ModelParams& p, Direction dir) {
    auto sys = ModelSystem::make(m, p);
    HeisenbergStep st = heisenberg_step_check(m, n, p);
    ClosureData c = closure_data(m, p);
    Rational E = sys.energy(n);
    Poly Pn = sys.eigen_poly(n);
    Poly etaP = kEta * Pn;
    Poly comm = sys.tilde_h().apply_poly(etaP) - etaP * E;
    Rational ratio = c.Rm1(E) / c.R0(E);
    Rational alpha = dir == Direction::up ? st.alpha_minus : st.alpha_plus;
    Poly img = (comm - (etaP + Pn * ratio) * alpha) * (Rational(1) / (st.alpha_plus - st.alpha_minus));
    if (dir == Direction::down) img = -img;
    if (dir == Direction::down && n == 0) {
        if (!img.is_zero()) throw InvariantViolation("lowering operator does not annihilate the ground state");
        return 0;
    }
    Poly target = sys.eigen_poly(dir == Direction::up ? n + 1 : n - 1);
    auto k = proportionality(img, target);
    if (!k) throw InvariantViolation("ladder image is not proportional to the adjacent level");
    return *k;
}

double NormExpr::value() const {
    double l = 0;
    for (const auto& a : gamma_num) l += std::lgamma(a.get_d());
    for (const auto& a : gamma_den) l -= std::lgamma(a.get_d());
    double v = coeff.get_d() * std::exp(l);
    return tag == Tag::sqrt_pi ? v * std::sqrt(M_PI) : v;
}

NormExpr norm_closed_form(ModelId m, int n, const ModelParams& p) {
    auto sys = ModelSystem::make(m, p);
    const Rational half(1, 2);
    Rational nf(factorial(static_cast<unsigned long>(n)));
    NormExpr e;
    switch (m) {
        case ModelId::H:
            e.coeff = pow(Rational(2), n) * nf;
            e.tag = NormExpr::Tag::sqrt_pi;
            return e;
        case ModelId::L:
            e.coeff = Rational(1) / (nf * 2);
            e.tag = NormExpr::Tag::gamma_product;
            e.gamma_num = {p.g + half + n};
            return e;
        case ModelId::J:
            e.coeff = Rational(1) / (nf * 2 * (p.g + p.h + 2 * n));
            e.tag = NormExpr::Tag::gamma_product;
            e.gamma_num = {p.g + half + n, p.h + half + n};
            e.gamma_den = {p.g + p.h + n};
            return e;
        case ModelId::Soliton: break;
    }
    throw DomainError("closed-form norms are tabulated for H, L and J only");
}

std::vector<BoundaryExponents> boundary_exponents(ModelId m, const ModelParams& p) {
    switch (m) {
        case ModelId::L: return {{"x=0", p.g, 1 - p.g}};
        case ModelId::J: return {{"x=0", p.g, 1 - p.g}, {"x=pi/2", p.h, 1 - p.h}};
        default: break;
    }
    throw DomainError("no regular singular boundary for this model");
}

std::vector<std::pair<std::string, RatFunc>> discrete_symmetry_residuals(ModelId m, const ModelParams& p) {
    std::vector<std::pair<std::string, RatFunc>> out;
    const Poly minus_eta = -kEta;
    switch (m) {
        case ModelId::H: {
            // body x^2 written in s = x^2; x -> ix sends s -> -s
            RatFunc body(kEta);
            out.emplace_back("x->ix negates body", body.compose(minus_eta) + body);
            break;
        }
        case ModelId::L: {
            auto body = [](const Rational& g) { return RatFunc(kEta) + RatFunc(Poly(g * (g - 1)), kEta); };
            out.emplace_back("g<->1-g", body(p.g) - body(1 - p.g));
            out.emplace_back("x->ix negates body", body(p.g).compose(minus_eta) + body(p.g));
            break;
        }
        case ModelId::J: {
            auto body = [](const Rational& g, const Rational& h) {
                return RatFunc(Poly(g * (g - 1) * 2), kOne - kEta) + RatFunc(Poly(h * (h - 1) * 2), kOne + kEta);
            };
            out.emplace_back("g<->1-g", body(p.g, p.h) - body(1 - p.g, p.h));
            out.emplace_back("h<->1-h", body(p.g, p.h) - body(p.g, 1 - p.h));
            out.emplace_back("both", body(p.g, p.h) - body(1 - p.g, 1 - p.h));
            break;
        }
        case ModelId::Soliton: {
            auto body = [](const Rational& h) { return RatFunc((kOne - kEta * kEta) * (-h * (h + 1))); };
            out.emplace_back("h<->-(h+1)", body(p.h) - body(-p.h - 1));
            break;
        }
    }
    return out;
}

std::pair<Rational, Rational> soliton_w_limits(const Rational& h) {
    auto sys = ModelSystem::make(ModelId::Soliton, {0, h});
    auto ep = sys.map().eta_prime.to_poly();
    RatFunc wprime = RatFunc(*ep) * sys.ground_state().log_derivative();
    return {-wprime(Rational(1)), -wprime(Rational(-1))};
}

}  // namespace solvable

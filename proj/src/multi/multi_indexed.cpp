#include "solvable/multi_indexed.hpp"

#include "solvable/errors.hpp"
#include "solvable/ortho_poly.hpp"
#include "solvable/wronskian.hpp"

#include <algorithm>
#include <sstream>

namespace solvable {

namespace {

const Poly kEta = Poly::identity();
const Rational kHalf(1, 2);

PrefactoredFunction pf_pow(Factor f, const Rational& a) { return PrefactoredFunction::power_of(f, a); }

// ((1 -+ eta)/2)^a
PrefactoredFunction half_pow(Factor f, const Rational& a) {
    return pf_pow(f, a) * PrefactoredFunction::two_to(-a);
}

void require_lj(ModelId m) {
    if (m != ModelId::L && m != ModelId::J)
        throw DomainError(std::string("multi-indexed polynomials exist only for L and J, not ") + model_name(m));
}

Poly base_poly(ModelId m, int n, const ModelParams& p) {
    if (n < 0) return Poly(Rational(0));
    if (m == ModelId::L) return laguerre_poly(n, p.g - kHalf, Var::eta);
    return jacobi_poly(n, p.g - kHalf, p.h - kHalf, Var::eta);
}

std::vector<PrefactoredFunction> columns(ModelId m, const ModelParams& p, const IndexSet& D) {
    std::vector<PrefactoredFunction> fs;
    for (int d : D.dI) {
        PrefactoredFunction pre = m == ModelId::L ? PrefactoredFunction::exp_of(kEta)
                                                  : half_pow(Factor::one_plus_eta, kHalf - p.h);
        fs.push_back(pre * PrefactoredFunction(xi_I(m, d, p)));
    }
    for (int d : D.dII) {
        PrefactoredFunction pre = m == ModelId::L ? pf_pow(Factor::eta, kHalf - p.g)
                                                  : half_pow(Factor::one_minus_eta, kHalf - p.g);
        fs.push_back(pre * PrefactoredFunction(xi_II(m, d, p)));
    }
    return fs;
}

// Global prefactor; shift is -1/2 for Xi and +1/2 for P.
PrefactoredFunction global_prefactor(ModelId m, const ModelParams& p, const IndexSet& D, const Rational& shift) {
    const Rational M = D.M(), N = D.N();
    if (m == ModelId::L)
        return PrefactoredFunction::exp_of(kEta * (-M)) * pf_pow(Factor::eta, (M + p.g + shift) * N);
    return half_pow(Factor::one_minus_eta, (M + p.g + shift) * N) * half_pow(Factor::one_plus_eta, (N + p.h + shift) * M);
}

Poly stripped(const PrefactoredFunction& f, const char* what) {
    auto p = f.to_poly();
    if (!p) throw InvariantViolation(std::string(what) + " did not reduce to a polynomial: " + f.str());
    return *p;
}

Rational prod(const std::vector<int>& v, const std::function<Rational(int)>& f) {
    Rational r(1);
    for (int d : v) r *= f(d);
    return r;
}

Rational ipow(const Rational& b, long e) { return pow(b, e); }

}  // namespace

IndexSet IndexSet::make(std::vector<int> dI, std::vector<int> dII) {
    for (auto* v : {&dI, &dII}) {
        std::sort(v->begin(), v->end());
        if (std::adjacent_find(v->begin(), v->end()) != v->end()) throw UsageError("repeated index in deletion set");
        for (int d : *v)
            if (d < 1) throw UsageError("deletion indices must be >= 1");
    }
    return {std::move(dI), std::move(dII)};
}

IndexSet IndexSet::parse(const std::string& text) {
    std::vector<int> a, b;
    std::string body = text;
    if (body.size() >= 2 && body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t pos = 0;
        while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos == 0) throw UsageError("bad deletion index '" + tok + "'");
        int d = std::stoi(tok.substr(0, pos));
        std::string kind = tok.substr(pos);
        if (kind == "I") a.push_back(d);
        else if (kind == "II") b.push_back(d);
        else throw UsageError("deletion index '" + tok + "' needs suffix I or II");
    }
    return make(std::move(a), std::move(b));
}

long IndexSet::ell() const {
    long s = 0;
    for (int d : dI) s += d;
    for (int d : dII) s += d;
    const long m = M(), n = N();
    return s - m * (m - 1) / 2 - n * (n - 1) / 2 + m * n;
}

std::string IndexSet::str() const {
    std::string out;
    for (int d : dI) out += (out.empty() ? "" : ",") + std::to_string(d) + "I";
    for (int d : dII) out += (out.empty() ? "" : ",") + std::to_string(d) + "II";
    return "{" + out + "}";
}

Poly xi_I(ModelId m, int v, const ModelParams& p) {
    require_lj(m);
    if (m == ModelId::L) return laguerre_poly(v, p.g - kHalf, Var::eta).compose(-kEta);
    return jacobi_poly(v, p.g - kHalf, kHalf - p.h, Var::eta);
}

Poly xi_II(ModelId m, int v, const ModelParams& p) {
    require_lj(m);
    if (m == ModelId::L) return laguerre_poly(v, kHalf - p.g, Var::eta);
    return jacobi_poly(v, kHalf - p.g, p.h - kHalf, Var::eta);
}

void check_multi_bounds(ModelId m, const ModelParams& p, const IndexSet& D) {
    require_lj(m);
    ModelSystem::make(m, p);
    if (D.empty()) return;
    Rational gmin = m == ModelId::L ? Rational(D.N()) + Rational(3, 2) : Rational(D.N() + 2);
    for (int d : D.dII) gmin = std::max(gmin, Rational(Rational(d) + kHalf));
    if (p.g <= gmin)
        throw DomainError("deletion " + D.str() + " requires g > " + to_string(gmin) + " (got g = " + to_string(p.g) + ")");
    if (m == ModelId::J && !D.empty()) {
        Rational hmin = Rational(D.M() + 2);
        for (int d : D.dI) hmin = std::max(hmin, Rational(Rational(d) + kHalf));
        if (p.h <= hmin)
            throw DomainError("deletion " + D.str() + " requires h > " + to_string(hmin) + " (got h = " + to_string(p.h) + ")");
    }
}

ModelParams multi_shifted(ModelId m, const ModelParams& p, const IndexSet& D) {
    const int M = D.M(), N = D.N();
    if (m == ModelId::L) return {p.g + M - N, 0};
    return {p.g + M - N, p.h - M + N};
}

ModelParams plus_delta(ModelId m, const ModelParams& p, long times) {
    if (m == ModelId::L) return {p.g + times, 0};
    if (m == ModelId::J) return {p.g + times, p.h + times};
    return ModelSystem::unchecked(m, p).shifted(times).params();
}

Poly denominator_xi(ModelId m, const ModelParams& p, const IndexSet& D, bool unsafe) {
    require_lj(m);
    if (!unsafe) check_multi_bounds(m, p, D);
    if (D.empty()) return Poly(Rational(1));
    PrefactoredFunction W = prefactored_wronskian(columns(m, p, D));
    return stripped(W * global_prefactor(m, p, D, -kHalf), "Xi_D");
}

Poly multi_poly(ModelId m, const ModelParams& p, const IndexSet& D, int n, bool unsafe) {
    require_lj(m);
    if (n < 0) throw DomainError("negative degree index");
    if (!unsafe) check_multi_bounds(m, p, D);
    if (D.empty()) return base_poly(m, n, p);
    auto fs = columns(m, p, D);
    fs.push_back(PrefactoredFunction(base_poly(m, n, p)));
    PrefactoredFunction W = prefactored_wronskian(fs);
    return stripped(W * global_prefactor(m, p, D, kHalf), "P_{D,n}");
}

MultiIndexedSystem::MultiIndexedSystem(ModelId m, ModelParams p, IndexSet D, bool unsafe)
    : m_(m), p_(std::move(p)), D_(std::move(D)), unsafe_(unsafe) {
    xi_ = denominator_xi(m_, p_, D_, unsafe_);
    if (xi_.is_zero()) throw DegeneracyError("Xi_D vanishes identically for " + D_.str());
    shifted_ = multi_shifted(m_, p_, D_);
}

Rational MultiIndexedSystem::energy(int n) const { return ModelSystem::unchecked(m_, p_).energy(n); }

DiffOp MultiIndexedSystem::tilde_h() const {
    ShiftData s = shift_data(m_, shifted_);
    ShiftData sm = shift_data(m_, plus_delta(m_, shifted_, -1));
    RatFunc c2(s.c2), c1(s.c1), c1m(sm.c1);
    RatFunc L1(xi_.derivative(), xi_), L2(xi_.derivative(2), xi_);
    RatFunc a2 = c2, a1 = c1 - RatFunc(2) * c2 * L1, a0 = c2 * L2 - c1m * L1;
    return DiffOp({a0 * RatFunc(-4), a1 * RatFunc(-4), a2 * RatFunc(-4)});
}

RatFunc MultiIndexedSystem::fuchs_residual(int n) const {
    Poly P = poly(n);
    return tilde_h().apply(RatFunc(P)) - RatFunc(P * energy(n));
}

PrefactoredFunction MultiIndexedSystem::weight_numerator() const {
    const Rational& g = shifted_.g;
    if (m_ == ModelId::L)
        return PrefactoredFunction::exp_of(-kEta) * pf_pow(Factor::eta, g - kHalf) * Rational(1, 2);
    const Rational& h = shifted_.h;
    return pf_pow(Factor::one_minus_eta, g - kHalf) * pf_pow(Factor::one_plus_eta, h - kHalf) *
           PrefactoredFunction::two_to(-(g + h + 1));
}

DeformedState MultiIndexedSystem::eigenfunction(int n) const {
    ModelSystem s = ModelSystem::unchecked(m_, shifted_);
    return {s.ground_state() * PrefactoredFunction(poly(n)), PrefactoredFunction(xi_), energy(n)};
}

RatFunc MultiIndexedSystem::potential() const {
    // U_D = (w_D')^2 + w_D'' with phi_{D,0} = phi_0(lambda^{[M,N]}) Xi(lambda+delta)/Xi(lambda), shifted by E(0) = 0.
    DeformedState g0 = eigenfunction(0);
    ModelSystem s = ModelSystem::unchecked(m_, p_);
    RatFunc L = g0.log_derivative();
    RatFunc S(s.map().eta_prime_sq), E(s.map().eta_double_prime);
    return S * (L.derivative() + L * L) + E * L;
}

MultiShiftCheck multi_shift_relations_check(ModelId m, const ModelParams& p, const IndexSet& D, int n, bool unsafe) {
    if (n < 1) throw UsageError("shift relations need n >= 1");
    ModelParams pd = plus_delta(m, p);
    Poly X = denominator_xi(m, p, D, unsafe);
    Poly Xd = denominator_xi(m, pd, D, true);
    Poly P = multi_poly(m, p, D, n, unsafe);
    Poly Q = multi_poly(m, pd, D, n - 1, true);
    ShiftData base = shift_data(m, p);
    ShiftData sh = shift_data(m, multi_shifted(m, p, D));
    // F_D P = c_F (Xd P' - Xd' P) / X
    RatFunc F = RatFunc(Xd * P.derivative() - Xd.derivative() * P, X) * RatFunc(base.cF);
    // B_D Q = -4/c_F [c2 (X Q' - X' Q) + c1 X Q] / Xd
    RatFunc B = RatFunc(base.c2 * (X * Q.derivative() - X.derivative() * Q) + sh.c1 * X * Q, Xd) *
                RatFunc(Rational(-4) / base.cF);
    return {F - RatFunc(Q * base.f(n)), B - RatFunc(P * base.b(n))};
}

Rational plusdelta_constant(ModelId m, const ModelParams& p, const IndexSet& D) {
    const Rational g = p.g, h = p.h;
    const int M = D.M(), N = D.N();
    auto gII = [&](int d) -> Rational { return g - d - kHalf; };
    if (m == ModelId::L) return ipow(Rational(-1), M) * prod(D.dII, gII);
    auto hI = [&](int d) -> Rational { return h - d - kHalf; };
    return ipow(Rational(2), -M) * prod(D.dI, hI) * ipow(Rational(-2), -N) * prod(D.dII, gII);
}

ConstantCheck plusdelta_check(ModelId m, const ModelParams& p, const IndexSet& D, bool unsafe) {
    Poly P0 = multi_poly(m, p, D, 0, unsafe);
    Poly Xd = denominator_xi(m, plus_delta(m, p), D, true);
    return {"plusdelta " + D.str(), proportionality(P0, Xd), plusdelta_constant(m, p, D)};
}

Poly exceptional_xi(ModelId m, bool type_one, int ell, const ModelParams& p) {
    require_lj(m);
    const Rational g = p.g, h = p.h;
    const Rational l = ell;
    if (m == ModelId::L) {
        if (type_one) return laguerre_poly(ell, g + l - Rational(3, 2), Var::eta).compose(-kEta);
        return laguerre_poly(ell, -g - l - kHalf, Var::eta);
    }
    if (type_one) return jacobi_poly(ell, g + l - Rational(3, 2), -h - l - kHalf, Var::eta);
    return jacobi_poly(ell, -g - l - kHalf, h + l - Rational(3, 2), Var::eta);
}

std::optional<Poly> exceptional_poly(ModelId m, bool type_one, int ell, int n, const ModelParams& p) {
    require_lj(m);
    if (m != ModelId::L) return std::nullopt;
    const Rational g = p.g;
    if (type_one) {
        Poly a = exceptional_xi(m, true, ell, {g + 1, 0}) * base_poly(m, n, {g + ell, 0});
        Poly b = exceptional_xi(m, true, ell - 1, {g + 2, 0}) * base_poly(m, n - 1, {g + ell, 0});
        return a - b;
    }
    if (ell != 1) return std::nullopt;
    return exceptional_xi(m, false, 1, {g + 1, 0}) * base_poly(m, n, {g + 1, 0}) + base_poly(m, n - 1, {g + 1, 0});
}

Rational exceptional_constant(ModelId m, bool type_one, int n, const ModelParams& p) {
    if (m == ModelId::L) return type_one ? Rational(-1) : Rational(1) / (n + p.g + kHalf);
    return type_one ? Rational(2) / (n + p.h + kHalf) : Rational(-2) / (n + p.g + kHalf);
}

Rational orthogonality_factor(ModelId m, const ModelParams& p, const IndexSet& D, int n) {
    require_lj(m);
    const Rational g = p.g, h = p.h;
    auto I = [&](int d) -> Rational { return n + g + d + kHalf; };
    auto II = [&](int d) -> Rational { return n + g - d - kHalf; };
    if (m == ModelId::L) return prod(D.dI, I) * prod(D.dII, II);
    auto Ih = [&](int d) -> Rational { return n + h - d - kHalf; };
    auto IIh = [&](int d) -> Rational { return n + h + d + kHalf; };
    return ipow(Rational(4), -(D.M() + D.N())) * prod(D.dI, I) * prod(D.dI, Ih) * prod(D.dII, II) * prod(D.dII, IIh);
}

std::vector<ConstantCheck> structural_identities(ModelId m, const ModelParams& p, const IndexSet& D, int nmax) {
    require_lj(m);
    std::vector<ConstantCheck> out;
    const Rational g = p.g, h = p.h;
    const int M = D.M(), N = D.N();
    // type I level-0: 0 appended last among the type-I indices
    {
        IndexSet Z{D.dI, D.dII};
        Z.dI.push_back(0);
        IndexSet Dp;
        for (int d : D.dI) Dp.dI.push_back(d - 1);
        for (int d : D.dII) Dp.dII.push_back(d + 1);
        ModelParams q = m == ModelId::L ? ModelParams{g + 1, 0} : ModelParams{g + 1, h - 1};
        const int Mz = M + 1;
        for (int n = 0; n <= nmax; ++n) {
            Rational A;
            if (m == ModelId::L) {
                A = ipow(Rational(-1), Mz) * prod(D.dII, [](int d) -> Rational { return Rational(d + 1); });
            } else {
                A = -ipow(Rational(-2), -Mz) * prod(D.dI, [&](int d) -> Rational { return g - h + d + 1; }) *
                    ipow(Rational(-2), -N) * prod(D.dII, [](int d) -> Rational { return Rational(d + 1); }) *
                    (n + h - kHalf);
            }
            Poly lhs = multi_poly(m, p, Z, n, true);
            Poly rhs = multi_poly(m, q, Dp, n, true);
            out.push_back({"level0 typeI " + D.str() + " n=" + std::to_string(n), proportionality(lhs, rhs), A});
        }
    }
    {
        IndexSet Z{D.dI, D.dII};
        Z.dII.push_back(0);
        IndexSet Dp;
        for (int d : D.dI) Dp.dI.push_back(d + 1);
        for (int d : D.dII) Dp.dII.push_back(d - 1);
        ModelParams q = m == ModelId::L ? ModelParams{g - 1, 0} : ModelParams{g - 1, h + 1};
        const int Nz = N + 1;
        for (int n = 0; n <= nmax; ++n) {
            Rational B;
            if (m == ModelId::L) {
                B = ipow(Rational(-1), M) * prod(D.dI, [](int d) -> Rational { return Rational(d + 1); }) *
                    (n + g - kHalf);
            } else {
                B = ipow(Rational(2), -M) * prod(D.dI, [](int d) -> Rational { return Rational(d + 1); }) *
                    ipow(Rational(-2), -Nz) * prod(D.dII, [&](int d) -> Rational { return h - g + d + 1; }) *
                    (n + g - kHalf);
            }
            Poly lhs = multi_poly(m, p, Z, n, true);
            Poly rhs = multi_poly(m, q, Dp, n, true);
            out.push_back({"level0 typeII " + D.str() + " n=" + std::to_string(n), proportionality(lhs, rhs), B});
        }
    }
    // exceptional specialization for single deletions
    if (M + N == 1) {
        const bool one = M == 1;
        const int ell = one ? D.dI[0] : D.dII[0];
        ModelParams q = p;
        if (m == ModelId::L) q.g = g + ell + (one ? -1 : 1);
        else q = one ? ModelParams{g + ell - 1, h + ell + 1} : ModelParams{g + ell + 1, h + ell - 1};
        out.push_back({"exceptional xi " + D.str(), proportionality(exceptional_xi(m, one, ell, p), denominator_xi(m, q, D, true)),
                       Rational(1)});
        for (int n = 0; n <= nmax; ++n) {
            auto closed = exceptional_poly(m, one, ell, n, p);
            if (!closed) continue;
            out.push_back({"exceptional P " + D.str() + " n=" + std::to_string(n),
                           proportionality(*closed, multi_poly(m, q, D, n, true)), exceptional_constant(m, one, n, p)});
        }
    }
    return out;
}

std::vector<IndicialExponents> xi_indicial_exponents(const MultiIndexedSystem& sys) {
    std::vector<IndicialExponents> out;
    const Poly& X = sys.xi();
    DiffOp op = sys.tilde_h();
    const auto& c = op.coeffs();
    // rational roots via the linear factors of the square-free part
    Poly sf = X.square_free();
    std::vector<Rational> roots;
    // candidate roots p/q with p | a0, q | an over the primitive integer form
    Poly prim = sf.normalized();
    Integer a0 = prim.coeff(0).get_num(), an = prim.leading().get_num();
    auto divisors = [](Integer v) {
        std::vector<Integer> ds;
        v = abs(v);
        if (v == 0) return ds;
        for (Integer d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                ds.push_back(d);
                if (d * d != v) ds.push_back(v / d);
            }
        return ds;
    };
    if (a0 == 0) roots.push_back(0);
    for (const auto& pn : divisors(a0))
        for (const auto& qd : divisors(an))
            for (int s : {1, -1}) {
                Rational r(pn * s, qd);
                r.canonicalize();
                if (prim(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
            }
    std::sort(roots.begin(), roots.end());
    for (const auto& r : roots) {
        RatFunc lin(Poly::linear(-r, Rational(1)));
        Rational P0 = (c[1] / c[2] * lin)(r);
        Rational Q0 = (c[0] / c[2] * lin * lin)(r);
        // rho^2 + (P0 - 1) rho + Q0 = 0
        Rational b = P0 - 1;
        Rational disc = b * b - 4 * Q0;
        IndicialExponents e{r, {}};
        Rational sq;
        if (rational_sqrt(disc, sq)) e.exponents = {(-b - sq) / 2, (-b + sq) / 2};
        out.push_back(e);
    }
    return out;
}

}  // namespace solvable

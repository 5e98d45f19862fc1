#include "solvable/darboux.hpp"

#include "solvable/errors.hpp"
#include "solvable/ortho_poly.hpp"
#include "solvable/wronskian.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace solvable {

namespace {

const Poly kEta = Poly::identity();

PrefactoredFunction pf_pow(Factor f, const Rational& a) { return PrefactoredFunction::power_of(f, a); }
PrefactoredFunction pf_exp(const Poly& q) { return PrefactoredFunction::exp_of(q); }

// p(-eta)
Poly reflect(const Poly& p) { return p.compose(-kEta); }

// i^{-v} H_v(i eta): real, positive leading coefficient.
Poly twisted_hermite(int v) {
    Poly h = hermite_poly(v, Var::eta);
    std::vector<Rational> c(static_cast<std::size_t>(v) + 1);
    for (int k = 0; k <= v; ++k) {
        if ((v - k) % 2 != 0) continue;
        Rational s = ((v - k) / 2) % 2 == 0 ? Rational(1) : Rational(-1);
        c[static_cast<std::size_t>(k)] = s * h.coeff(k);
    }
    return Poly(std::move(c), Var::eta);
}

// sin^a x cos^b x for eta = cos 2x.
PrefactoredFunction sin_cos(const Rational& a, const Rational& b) {
    return pf_pow(Factor::one_minus_eta, a / 2) * pf_pow(Factor::one_plus_eta, b / 2) *
           PrefactoredFunction::two_to(-(a + b) / 2);
}

void require_nonneg(int v) {
    if (v < 0) throw DomainError("seed index must be non-negative");
}

[[noreturn]] void no_seed(const ModelSystem& sys, const SeedSpec& s) {
    throw DomainError(std::string("seed ") + seed_name(s) + " does not exist for model " + model_name(sys.id()));
}

// Behaviour of |f| toward one physical endpoint.
struct EndBehaviour {
    bool finite = true;  // endpoint at finite x
    int exp_sign = 0;    // infinite endpoint: sign of the exponential rate (growth toward the end)
    Rational power;      // power of x (finite) or of |x| (infinite, only when exp_sign == 0)

    EndBehaviour reciprocal() const { return {finite, -exp_sign, -power}; }
    bool integrable() const {
        if (finite) return power * 2 > -1;
        return exp_sign < 0 || (exp_sign == 0 && power * 2 < -1);
    }
    bool degenerate() const {
        if (finite) return power * 2 == -1;
        return exp_sign == 0 && power * 2 == -1;
    }
};

int sgn(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

Rational total_power(const PrefactoredFunction& f) {
    Rational p = f.poly().degree();
    for (const auto& a : f.powers()) p += a;
    return p;
}

// Left and right endpoint behaviour in the physical coordinate.
std::pair<EndBehaviour, EndBehaviour> ends(const PrefactoredFunction& f, ModelId id) {
    const Poly& q = f.exponent();
    const int qd = q.degree();
    switch (id) {
        case ModelId::H: {
            int right = qd > 0 ? sgn(q.leading()) : 0;
            int left = qd > 0 ? sgn(q.leading()) * (qd % 2 == 0 ? 1 : -1) : 0;
            Rational p = total_power(f);
            return {{false, left, p}, {false, right, p}};
        }
        case ModelId::L: {
            int right = qd > 0 ? sgn(q.leading()) : 0;
            return {{true, 0, f.power(Factor::eta) * 2}, {false, right, total_power(f) * 2}};
        }
        case ModelId::J:
            return {{true, 0, f.power(Factor::one_minus_eta) * 2}, {true, 0, f.power(Factor::one_plus_eta) * 2}};
        case ModelId::Soliton:
            // 1 + eta ~ 2 e^{2x} at -inf, 1 - eta ~ 2 e^{-2x} at +inf.
            return {{false, -sgn(f.power(Factor::one_plus_eta)), 0},
                    {false, -sgn(f.power(Factor::one_minus_eta)), 0}};
    }
    return {};
}

std::vector<PrefactoredFunction> seed_fns(const std::vector<SeedFunction>& seeds) {
    std::vector<PrefactoredFunction> out;
    out.reserve(seeds.size());
    for (const auto& s : seeds) out.push_back(s.fn);
    return out;
}

}  // namespace

std::string seed_name(const SeedSpec& s) {
    std::string k;
    switch (s.kind) {
        case SeedSpec::Kind::Eigenstate: k = "eigen"; break;
        case SeedSpec::Kind::VirtualI: k = "virtI"; break;
        case SeedSpec::Kind::VirtualII: k = "virtII"; break;
        case SeedSpec::Kind::PseudoVirtual: k = "pseudo"; break;
        case SeedSpec::Kind::Overshoot: k = "overshoot"; break;
    }
    return k + ":" + std::to_string(s.index);
}

SeedSpec parse_seed(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("seed '" + text + "' must look like kind:index");
    std::string k = text.substr(0, colon);
    int idx = 0;
    try {
        std::size_t used = 0;
        idx = std::stoi(text.substr(colon + 1), &used);
        if (used != text.size() - colon - 1) throw UsageError("bad seed index in '" + text + "'");
    } catch (const std::logic_error&) {
        throw UsageError("bad seed index in '" + text + "'");
    }
    if (k == "eigen" || k == "Eig") return SeedSpec::eigen(idx);
    if (k == "virtI" || k == "I") return SeedSpec::virtual1(idx);
    if (k == "virtII" || k == "II") return SeedSpec::virtual2(idx);
    if (k == "pseudo" || k == "pv") return SeedSpec::pseudo(idx);
    if (k == "overshoot") return SeedSpec::overshoot(idx);
    throw UsageError("unknown seed kind '" + k + "'");
}

const char* seed_class_name(SeedClass c) {
    switch (c) {
        case SeedClass::Eigen: return "eigen";
        case SeedClass::TypeI: return "typeI";
        case SeedClass::TypeII: return "typeII";
        case SeedClass::Pseudo: return "pseudo";
        case SeedClass::Free: return "free";
        case SeedClass::Unclassified: return "unclassified";
        case SeedClass::BoundaryDegenerate: return "boundary-degenerate";
    }
    return "?";
}

SeedFunction make_seed(const ModelSystem& sys, const SeedSpec& spec) {
    const Rational half(1, 2);
    const Rational g = sys.g(), h = sys.h();
    const int v = spec.index;
    require_nonneg(v);
    SeedFunction s;
    s.spec = spec;
    using K = SeedSpec::Kind;
    if (spec.kind == K::Eigenstate) {
        sys.require_level(v);
        s.xi = sys.eigen_poly(v);
        s.fn = sys.eigenfunction(v);
        s.energy = sys.energy(v);
        s.classification = classify_seed(s, sys);
        return s;
    }
    switch (sys.id()) {
        case ModelId::H:
            if (spec.kind != K::PseudoVirtual) no_seed(sys, spec);
            s.xi = twisted_hermite(v);
            s.fn = pf_exp(kEta * kEta * half) * PrefactoredFunction(s.xi);
            s.energy = Rational(-2 * (v + 1));
            break;
        case ModelId::L:
            if (spec.kind == K::VirtualI) {
                s.xi = reflect(laguerre_poly(v, g - half, Var::eta));
                s.fn = pf_exp(kEta * half) * pf_pow(Factor::eta, g / 2) * PrefactoredFunction(s.xi);
                s.energy = Rational(-4) * (g + v + half);
            } else if (spec.kind == K::VirtualII) {
                if (v > floor_prime(g - half)) no_seed(sys, spec);
                s.xi = laguerre_poly(v, half - g, Var::eta);
                s.fn = pf_exp(kEta * (-half)) * pf_pow(Factor::eta, (1 - g) / 2) * PrefactoredFunction(s.xi);
                s.energy = Rational(-4) * (g - v - half);
            } else if (spec.kind == K::PseudoVirtual) {
                s.xi = reflect(laguerre_poly(v, half - g, Var::eta));
                s.fn = pf_exp(kEta * half) * pf_pow(Factor::eta, (1 - g) / 2) * PrefactoredFunction(s.xi);
                s.energy = Rational(-4 * (v + 1));
            } else {
                no_seed(sys, spec);
            }
            break;
        case ModelId::J:
            if (spec.kind == K::VirtualI) {
                if (v > floor_prime(h - half)) no_seed(sys, spec);
                s.xi = jacobi_poly(v, g - half, half - h, Var::eta);
                s.fn = sin_cos(g, 1 - h) * PrefactoredFunction(s.xi);
                s.energy = Rational(-4) * (g + v + half) * (h - v - half);
            } else if (spec.kind == K::VirtualII) {
                if (v > floor_prime(g - half)) no_seed(sys, spec);
                s.xi = jacobi_poly(v, half - g, h - half, Var::eta);
                s.fn = sin_cos(1 - g, h) * PrefactoredFunction(s.xi);
                s.energy = Rational(-4) * (g - v - half) * (h + v + half);
            } else if (spec.kind == K::PseudoVirtual) {
                s.xi = jacobi_poly(v, half - g, half - h, Var::eta);
                s.fn = sin_cos(1 - g, 1 - h) * PrefactoredFunction(s.xi);
                s.energy = Rational(-4 * (v + 1)) * (g + h - v - 1);
            } else {
                no_seed(sys, spec);
            }
            break;
        case ModelId::Soliton:
            if (spec.kind == K::PseudoVirtual) {
                Rational a = -(h + 1 + v);
                s.xi = jacobi_poly(v, a, a, Var::eta);
                s.fn = pf_pow(Factor::one_minus_eta, a / 2) * pf_pow(Factor::one_plus_eta, a / 2) *
                       PrefactoredFunction(s.xi);
                s.energy = -a * a;
            } else if (spec.kind == K::Overshoot) {
                if (Rational(v) <= h * 2) throw DomainError("overshoot seed needs index > 2h");
                Rational a = h - v;
                s.xi = jacobi_poly(v, a, a, Var::eta);
                if (s.xi.is_zero()) throw DegeneracyError("overshoot polynomial vanishes identically");
                s.fn = pf_pow(Factor::one_minus_eta, a / 2) * pf_pow(Factor::one_plus_eta, a / 2) *
                       PrefactoredFunction(s.xi);
                s.energy = -a * a;
            } else {
                no_seed(sys, spec);
            }
            break;
    }
    s.classification = classify_seed(s, sys);
    return s;
}

SeedClass classify_seed(const SeedFunction& seed, const ModelSystem& sys) {
    auto [l, r] = ends(seed.fn, sys.id());
    if (l.degenerate() || r.degenerate()) return SeedClass::BoundaryDegenerate;
    bool i1 = l.integrable(), i2 = r.integrable();
    bool r1 = l.reciprocal().integrable(), r2 = r.reciprocal().integrable();
    if (i1 && i2) return SeedClass::Eigen;
    if (i1 && !i2 && !r1 && r2) return SeedClass::TypeI;
    if (!i1 && i2 && r1 && !r2) return SeedClass::TypeII;
    if (!i1 && !i2 && r1 && r2) return SeedClass::Pseudo;
    return SeedClass::Unclassified;
}

LogValue DeformedState::eval(const BasisLogs& at) const {
    LogValue a = num.eval(at), b = den.eval(at);
    if (b.sign == 0) throw PoleError("deformed state evaluated at a zero of the denominator");
    return {a.log_abs - b.log_abs, a.sign * b.sign};
}

DeformedSystem::DeformedSystem(ModelSystem base, std::vector<SeedFunction> seeds, bool unsafe)
    : base_(std::move(base)), seeds_(std::move(seeds)), shifted_(base_.params()), unsafe_(unsafe) {
    for (std::size_t i = 0; i < seeds_.size(); ++i)
        for (std::size_t j = i + 1; j < seeds_.size(); ++j)
            if (seeds_[i].spec == seeds_[j].spec) throw DegeneracyError("repeated seed " + seed_name(seeds_[i].spec));
    denom_ = prefactored_wronskian_x(seed_fns(seeds_), base_.map().eta_prime);
    if (denom_.is_zero()) throw DegeneracyError("seed Wronskian vanishes identically");
    delta_ = minus_two_d2x_log(base_.map(), denom_.log_derivative());
}

DeformedState DeformedSystem::state(int n) const {
    for (const auto& s : seeds_)
        if (s.spec == SeedSpec::eigen(n)) throw DomainError("level " + std::to_string(n) + " was deleted");
    auto fs = seed_fns(seeds_);
    fs.push_back(base_.eigenfunction(n));
    return {prefactored_wronskian_x(fs, base_.map().eta_prime), denom_, base_.energy(n)};
}

DeformedState DeformedSystem::seed_state(std::size_t j) const {
    if (j >= seeds_.size()) throw UsageError("seed index out of range");
    std::vector<PrefactoredFunction> fs;
    for (std::size_t i = 0; i < seeds_.size(); ++i)
        if (i != j) fs.push_back(seeds_[i].fn);
    PrefactoredFunction num = fs.empty() ? PrefactoredFunction() : prefactored_wronskian_x(fs, base_.map().eta_prime);
    return {num, denom_, seeds_[j].energy};
}

RatFunc DeformedSystem::residual(const DeformedState& s) const {
    return schrodinger_residual(base_.map(), potential(), s.log_derivative(), s.energy);
}

DeformedSystem deform_system(const ModelSystem& sys, const std::vector<SeedSpec>& seeds, bool unsafe) {
    if (seeds.empty()) throw UsageError("at least one seed is required");
    std::vector<SeedFunction> fs;
    fs.reserve(seeds.size());
    for (const auto& s : seeds) fs.push_back(make_seed(sys, s));
    DeformedSystem out(sys, std::move(fs), unsafe);
    std::set<int> eig;
    bool all_eigen = true;
    for (const auto& s : seeds) {
        if (s.kind != SeedSpec::Kind::Eigenstate) all_eigen = false;
        else eig.insert(s.index);
    }
    const int m = static_cast<int>(seeds.size());
    if (all_eigen && !eig.empty() && *eig.begin() == 0 && *eig.rbegin() == m - 1)
        out.set_shifted_params(sys.shifted(m).params());
    return out;
}

NonsingularVerdict certify_nonsingular(const DeformedSystem& sys) {
    NonsingularVerdict v;
    const auto& W = sys.denominator();
    const Interval& I = sys.base().map().eta_interval;
    v.interior_roots = real_root_count(W.poly(), I);
    int factor_zeros = 0;
    const Rational roots[kFactorCount] = {Rational(0), Rational(1), Rational(-1)};
    for (std::size_t f = 0; f < kFactorCount; ++f)
        if (W.powers()[f] != 0 && I.contains(roots[f])) ++factor_zeros;
    v.interior_roots += factor_zeros;
    v.nonsingular = v.interior_roots == 0;
    v.detail = v.nonsingular ? "denominator Wronskian has no zero inside the interval"
                             : std::to_string(v.interior_roots) + " distinct zero(s) of the denominator inside the interval";
    return v;
}

CrumReport crum_tower(const ModelSystem& sys, int s) {
    if (s < 1) throw UsageError("Crum depth must be at least 1");
    if (sys.id() == ModelId::Soliton && s > sys.max_level())
        throw DomainError("Crum depth exceeds the soliton bound-state count");
    std::vector<SeedSpec> seeds;
    for (int k = 0; k < s; ++k) seeds.push_back(SeedSpec::eigen(k));
    DeformedSystem d = deform_system(sys, seeds);
    ModelSystem next = sys.shifted(s);
    RatFunc target = next.potential() + RatFunc(sys.energy(s) - next.energy(0));
    CrumReport r{d, d.potential() == target, {}};
    const int top = sys.id() == ModelId::Soliton ? static_cast<int>(sys.max_level()) : s + 3;
    for (int n = s; n <= top; ++n) {
        DeformedState st = d.state(n);
        PrefactoredFunction f = sys.eigenfunction(n);
        for (int j = 0; j < s; ++j) f = apply_A(sys.map(), sys.shifted(j).ground_state(), f);
        auto c = proportionality(st.num, f * st.den);
        if (!c) throw InvariantViolation("Crum state " + std::to_string(n) + " is not proportional to the iterated A image");
        r.state_constants.push_back(*c);
    }
    return r;
}

std::optional<int> adler_violation(const std::vector<int>& D) {
    if (D.empty()) return std::nullopt;
    const int top = *std::max_element(D.begin(), D.end());
    for (int m = 0; m <= top; ++m) {
        if (std::find(D.begin(), D.end(), m) != D.end()) continue;
        int above = 0;
        for (int d : D) above += d > m ? 1 : 0;
        if (above % 2 != 0) return m;
    }
    return std::nullopt;
}

Rational KreinAdlerResult::norm_ratio(int n) const {
    Rational r(1);
    const ModelSystem& b = system.base();
    for (int d : deleted) r *= b.energy(n) - b.energy(d);
    return r;
}

KreinAdlerResult krein_adler(const ModelSystem& sys, const std::vector<int>& D, bool unsafe) {
    if (D.empty()) throw UsageError("deletion set is empty");
    std::vector<int> sorted = D;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DegeneracyError("deletion set has a repeated level");
    if (!unsafe) {
        if (auto m = adler_violation(sorted))
            throw DomainError("deletion set violates the Krein-Adler condition at m=" + std::to_string(*m));
    }
    std::vector<SeedSpec> seeds;
    for (int d : sorted) seeds.push_back(SeedSpec::eigen(d));
    KreinAdlerResult r{deform_system(sys, seeds, unsafe), 0, sorted};
    while (std::binary_search(sorted.begin(), sorted.end(), r.mu)) ++r.mu;
    return r;
}

}  // namespace solvable

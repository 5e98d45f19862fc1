#include "solvable/cli/commands.hpp"

#include "solvable/cli/report.hpp"
#include "solvable/darboux.hpp"
#include "solvable/errors.hpp"
#include "solvable/models.hpp"
#include "solvable/multi_indexed.hpp"
#include "solvable/numeric/samplers.hpp"
#include "solvable/numeric/tolerances.hpp"
#include "solvable/ortho_poly.hpp"
#include "solvable/scattering.hpp"

#include "CLI11.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

namespace solvable::cli {

namespace {

using numeric::Exec;

struct Options {
    std::string model = "H", g = "0", h = "0";
    int n = 5;
    std::string seeds, krein_adler, D;
    int N = -1;
    std::string k, c, t = "0";
    int special_case = 0;
    double lo = std::numeric_limits<double>::quiet_NaN(), hi = lo;
    int points = 0;
    std::string mapping;
    double kmin = 0.25, kmax = 5.0;
    bool kay_moses = false, unsafe = false;
    std::string format, output;
    std::string what, suite;
};

std::vector<std::string> split(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        cur.erase(0, cur.find_first_not_of(" \t"));
        cur.erase(cur.find_last_not_of(" \t") + 1);
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

std::vector<int> int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& p : split(s)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(p, &used));
            if (used != p.size()) throw std::invalid_argument(p);
        } catch (const std::exception&) {
            throw UsageError("not an integer: " + p);
        }
    }
    return out;
}

std::vector<Rational> rational_list(const std::string& s) {
    std::vector<Rational> out;
    for (const auto& p : split(s)) out.push_back(parse_rational(p));
    return out;
}

ModelId model_of(const Options& o) { return parse_model(o.model); }

ModelParams params_of(const Options& o) { return {parse_rational(o.g), parse_rational(o.h)}; }

ModelSystem system_of(const Options& o) { return ModelSystem::make(model_of(o), params_of(o)); }

std::vector<SeedSpec> seeds_of(const Options& o) {
    std::vector<SeedSpec> out;
    for (const auto& s : split(o.seeds)) out.push_back(parse_seed(s));
    return out;
}

ReflectionlessSpec reflectionless_of(const Options& o) {
    if (o.special_case > 0) return ReflectionlessSpec::special_case(o.special_case);
    ReflectionlessSpec s{rational_list(o.k), rational_list(o.c)};
    s.validate();
    return s;
}

Json exact_residual(bool zero, const std::string& text) { return zero ? Json("0") : Json(text); }

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

int top_level(const ModelSystem& sys, int n) {
    return sys.max_level() >= 0 ? static_cast<int>(std::min<long>(n, sys.max_level())) : n;
}

// ---- spectrum and tables ----

void spectrum(const Options& o, Report& rep, Csv* csv) {
    const ModelSystem sys = system_of(o);
    std::vector<Rational> es;
    for (int n = 0; n <= top_level(sys, o.n); ++n) {
        es.push_back(sys.energy(n));
        if (csv) csv->row({std::to_string(n), to_string(es.back())});
    }
    rep.results["energies"] = rationals_json(es);
}

FamilyId family_of(const ModelSystem& sys) {
    const Rational half(1, 2);
    switch (sys.id()) {
        case ModelId::H: return FamilyId::hermite();
        case ModelId::L: return FamilyId::laguerre(sys.g() - half);
        case ModelId::J: return FamilyId::jacobi(sys.g() - half, sys.h() - half);
        case ModelId::Soliton: break;
    }
    throw UsageError("recurrence tables are available for H, L and J");
}

void poly_rows(Csv* csv, const std::string& label, const Poly& p) {
    if (!csv) return;
    for (int k = 0; k <= std::max(p.degree(), 0); ++k) csv->row({label, std::to_string(k), to_string(p.coeff(k))});
}

void table(const Options& o, Report& rep, std::unique_ptr<Csv>& csv) {
    const std::string what = o.what.empty() ? "spectrum" : o.what;
    rep.inputs["what"] = what;
    if (what == "spectrum") {
        if (csv) csv = std::make_unique<Csv>(std::vector<std::string>{"n", "E"});
        spectrum(o, rep, csv.get());
    } else if (what == "recurrence") {
        const ModelSystem sys = system_of(o);
        const FamilyId fam = family_of(sys);
        if (csv) csv = std::make_unique<Csv>(std::vector<std::string>{"n", "A", "B", "C"});
        Json rows = Json::array();
        for (int n = 0; n <= o.n; ++n) {
            const RecurrenceCoeffs rc = recurrence_coeffs(fam, n);
            rows.push_back({{"n", n}, {"A", rational_json(rc.A)}, {"B", rational_json(rc.B)}, {"C", rational_json(rc.C)}});
            if (csv) csv->row({std::to_string(n), to_string(rc.A), to_string(rc.B), to_string(rc.C)});
        }
        rep.results["recurrence"] = rows;
    } else if (what == "eigen-poly") {
        const ModelSystem sys = system_of(o);
        if (csv) csv = std::make_unique<Csv>(std::vector<std::string>{"n", "power", "coefficient"});
        Json rows = Json::array();
        for (int n = 0; n <= top_level(sys, o.n); ++n) {
            rows.push_back(poly_json(sys.eigen_poly(n)));
            poly_rows(csv.get(), std::to_string(n), sys.eigen_poly(n));
        }
        rep.results["eigen_polys"] = rows;
    } else if (what == "xi" || what == "multi-poly") {
        const MultiIndexedSystem S(model_of(o), params_of(o), IndexSet::parse(o.D), o.unsafe);
        if (csv) csv = std::make_unique<Csv>(std::vector<std::string>{"n", "power", "coefficient"});
        if (what == "xi") {
            rep.results["xi"] = poly_json(S.xi());
            poly_rows(csv.get(), "xi", S.xi());
        } else {
            Json rows = Json::array();
            for (int n = 0; n <= o.n; ++n) {
                rows.push_back(poly_json(S.poly(n)));
                poly_rows(csv.get(), std::to_string(n), S.poly(n));
            }
            rep.results["multi_polys"] = rows;
        }
    } else if (what == "seeds") {
        const ModelSystem sys = system_of(o);
        if (csv) csv = std::make_unique<Csv>(std::vector<std::string>{"seed", "power", "coefficient"});
        Json rows = Json::array();
        for (const auto& spec : seeds_of(o)) {
            const SeedFunction s = make_seed(sys, spec);
            rows.push_back({{"seed", seed_name(spec)},
                            {"class", seed_class_name(s.classification)},
                            {"energy", rational_json(s.energy)},
                            {"xi", poly_json(s.xi)}});
            poly_rows(csv.get(), seed_name(spec), s.xi);
        }
        rep.results["seeds"] = rows;
    } else {
        throw UsageError("unknown table '" + what + "' (spectrum, recurrence, eigen-poly, xi, multi-poly, seeds)");
    }
}

// ---- base-model verification suites ----

Rational energy_oracle(ModelId m, int n, const ModelParams& p) {
    switch (m) {
        case ModelId::H: return Rational(2 * n);
        case ModelId::L: return Rational(4 * n);
        case ModelId::J: return 4 * n * (n + p.g + p.h);
        case ModelId::Soliton: return -(p.h - n) * (p.h - n);
    }
    return 0;
}

void suite_spectrum(const Options& o, Report& rep) {
    const ModelSystem sys = system_of(o);
    for (int n = 0; n <= top_level(sys, o.n); ++n) {
        const Rational e = sys.energy(n), want = energy_oracle(sys.id(), n, sys.params());
        rep.verdict("energy_" + std::to_string(n), e == want, rational_json(e - want));
    }
}

void suite_eigen(const Options& o, Report& rep) {
    const ModelSystem sys = system_of(o);
    for (int n = 0; n <= top_level(sys, o.n); ++n) {
        const Poly P = sys.eigen_poly(n);
        const RatFunc r = sys.tilde_h(n).apply(P) - RatFunc(P * sys.energy(n));
        rep.verdict("eigen_residual_" + std::to_string(n), r.is_zero(), exact_residual(r.is_zero(), r.str()));
    }
}

void suite_shape_invariance(const Options& o, Report& rep) {
    const RatFunc r = shape_invariance_residual(model_of(o), params_of(o));
    rep.verdict("shape_invariance", r.is_zero(), exact_residual(r.is_zero(), r.str()));
}

void suite_closure(const Options& o, Report& rep) {
    const DiffOp r = closure_residual(model_of(o), params_of(o));
    rep.verdict("closure", r.is_zero(), exact_residual(r.is_zero(), r.str()));
}

void suite_heisenberg(const Options& o, Report& rep) {
    const ModelSystem sys = system_of(o);
    for (int n = 0; n <= o.n; ++n) {
        bool ok = false;
        std::string detail;
        try {
            const HeisenbergStep st = heisenberg_step_check(sys.id(), n, sys.params());
            ok = st.alpha_plus == sys.energy(n + 1) - sys.energy(n) &&
                 (n == 0 || st.alpha_minus == sys.energy(n - 1) - sys.energy(n));
            detail = to_string(st.alpha_plus) + "," + to_string(st.alpha_minus);
        } catch (const InvariantViolation& e) {
            detail = e.what();
        }
        rep.verdict("heisenberg_step_" + std::to_string(n), ok, ok ? Json("0") : Json(detail));
    }
}

void suite_crum(const Options& o, Report& rep) {
    const ModelSystem sys = system_of(o);
    const int smax = std::min(o.n, sys.max_level() >= 0 ? static_cast<int>(sys.max_level()) : 3);
    for (int s = 1; s <= smax; ++s) {
        const CrumReport cr = crum_tower(sys, s);
        bool consts = true;
        for (const auto& c : cr.state_constants) consts = consts && c != 0;
        rep.verdict("crum_potential_s" + std::to_string(s), cr.potential_matches, cr.potential_matches ? "0" : "mismatch");
        rep.verdict("crum_states_s" + std::to_string(s), consts, consts ? "0" : "zero proportionality constant");
    }
}

void numeric_ortho(const Options& o, Report& rep) {
    const ModelSystem sys = system_of(o);
    const int top = top_level(sys, std::min(o.n, 5));
    for (int n = 0; n <= top; ++n)
        for (int m = 0; m <= n; ++m) {
            const auto r = numeric::inner_product(numeric::level_wave(sys, n), numeric::level_wave(sys, m));
            if (sys.id() == ModelId::Soliton) {
                if (n != m) rep.verdict("ortho_" + std::to_string(n) + "_" + std::to_string(m),
                                        std::abs(r.value) <= numeric::kOrthoTol, std::abs(r.value), numeric::kOrthoTol);
                continue;
            }
            const double hn = norm_closed_form(sys.id(), n, sys.params()).value();
            const double hm = norm_closed_form(sys.id(), m, sys.params()).value();
            const double dev = n == m ? std::abs(r.value / hn - 1) : std::abs(r.value) / std::max(hn, hm);
            rep.verdict("ortho_" + std::to_string(n) + "_" + std::to_string(m), dev <= numeric::kOrthoTol, dev, numeric::kOrthoTol);
        }
}

void numeric_nodes(const Options& o, Report& rep) {
    const ModelSystem sys = system_of(o);
    const auto xs = numeric::grid_points(numeric::default_grid(sys));
    for (int n = 0; n <= top_level(sys, std::min(o.n, 6)); ++n) {
        const int changes = numeric::count_sign_changes(numeric::sample(numeric::level_wave(sys, n), xs));
        rep.verdict("nodes_" + std::to_string(n), changes == n, changes - n);
    }
}

void numeric_fd(const Options& o, Report& rep) {
    const ModelSystem sys = system_of(o);
    const auto [lo, hi] = numeric::fd_interval(sys);
    const numeric::PotentialFn U(sys, sys.potential());
    for (int n = 0; n <= top_level(sys, std::min(o.n, 2)); ++n) {
        const double r = numeric::fd_schrodinger_residual(U, numeric::level_wave(sys, n), sys.energy(n).get_d(), lo, hi, 1e-3);
        const double tol = n == 0 ? numeric::kFdBaseTol : numeric::kFdDeformedTol;
        rep.verdict("fd_residual_" + std::to_string(n), r <= tol, r, tol);
    }
}

// ---- deformations ----

struct Deformed {
    DeformedSystem system;
    std::optional<KreinAdlerResult> ka;
};

Deformed build_deformed(const Options& o) {
    const ModelSystem base = system_of(o);
    if (!o.krein_adler.empty()) {
        KreinAdlerResult ka = krein_adler(base, int_list(o.krein_adler), o.unsafe);
        return {ka.system, ka};
    }
    if (o.seeds.empty()) throw UsageError("deform needs --seeds or --krein-adler");
    return {deform_system(base, seeds_of(o), o.unsafe), std::nullopt};
}

std::vector<int> retained_levels(const Deformed& d, int n) {
    std::vector<int> out;
    const ModelSystem& base = d.system.base();
    for (int k = 0; k <= top_level(base, n); ++k) {
        bool deleted = false;
        for (const auto& s : d.system.seeds())
            deleted = deleted || (s.spec.kind == SeedSpec::Kind::Eigenstate && s.spec.index == k);
        if (!deleted) out.push_back(k);
    }
    return out;
}

void deform(const Options& o, Report& rep) {
    const Deformed d = build_deformed(o);
    const DeformedSystem& sys = d.system;
    Json seeds = Json::array();
    for (const auto& s : sys.seeds())
        seeds.push_back({{"seed", seed_name(s.spec)},
                         {"class", seed_class_name(s.classification)},
                         {"energy", rational_json(s.energy)},
                         {"xi", poly_json(s.xi)}});
    rep.results["seeds"] = seeds;
    rep.results["denominator_poly"] = poly_json(sys.denominator_poly());
    rep.results["denominator"] = sys.denominator().str();
    rep.results["potential_delta"] = ratfunc_json(sys.potential_delta());
    const NonsingularVerdict nv = certify_nonsingular(sys);
    rep.results["interior_roots"] = nv.interior_roots;
    rep.verdict("nonsingular", nv.nonsingular, nv.interior_roots);
    Json states = Json::array();
    for (int n : retained_levels(d, o.n)) {
        const DeformedState st = sys.state(n);
        const RatFunc r = sys.residual(st);
        states.push_back({{"level", n}, {"energy", rational_json(st.energy)}});
        rep.verdict("state_residual_" + std::to_string(n), r.is_zero(), exact_residual(r.is_zero(), r.str()));
    }
    for (std::size_t j = 0; j < sys.seeds().size(); ++j) {
        if (sys.seeds()[j].spec.kind != SeedSpec::Kind::PseudoVirtual &&
            sys.seeds()[j].spec.kind != SeedSpec::Kind::Overshoot)
            continue;
        const DeformedState st = sys.seed_state(j);
        const RatFunc r = sys.residual(st);
        states.push_back({{"seed", seed_name(sys.seeds()[j].spec)}, {"energy", rational_json(st.energy)}});
        rep.verdict("seed_state_residual_" + seed_name(sys.seeds()[j].spec), r.is_zero(),
                    exact_residual(r.is_zero(), r.str()));
    }
    rep.results["states"] = states;
    if (!d.ka) return;
    const KreinAdlerResult& ka = *d.ka;
    rep.results["mu"] = ka.mu;
    const auto viol = adler_violation(ka.deleted);
    rep.verdict("adler_rule_agrees", nv.nonsingular == !viol.has_value(), viol ? *viol : -1);
    if (!nv.nonsingular || sys.base().id() == ModelId::Soliton) return;
    for (int n : retained_levels(d, std::min(o.n, 4))) {
        const auto w = numeric::deformed_wave(sys, sys.state(n));
        const auto r = numeric::inner_product(w, w);
        const double want = ka.norm_ratio(n).get_d() * norm_closed_form(sys.base().id(), n, sys.base().params()).value();
        const double dev = std::abs(r.value / want - 1);
        rep.verdict("norm_ratio_" + std::to_string(n), dev <= numeric::kNormRatioTol, dev, numeric::kNormRatioTol);
    }
}

// ---- multi-indexed ----

void multi(const Options& o, Report& rep) {
    const ModelId m = model_of(o);
    const ModelParams p = params_of(o);
    const IndexSet D = IndexSet::parse(o.D);
    const MultiIndexedSystem S(m, p, D, o.unsafe);
    rep.results["xi"] = poly_json(S.xi());
    rep.results["ell"] = S.ell();
    rep.results["shifted_params"] = {{"g", rational_json(S.shifted_params().g)}, {"h", rational_json(S.shifted_params().h)}};
    Json polys = Json::array(), energies = Json::array();
    for (int n = 0; n <= o.n; ++n) {
        const Poly P = S.poly(n);
        polys.push_back(poly_json(P));
        energies.push_back(rational_json(S.energy(n)));
        rep.verdict("degree_" + std::to_string(n), P.degree() == S.ell() + n, P.degree() - S.ell() - n);
    }
    rep.results["polys"] = polys;
    rep.results["energies"] = energies;
    for (int n = 0; n <= std::min(o.n, 4); ++n) {
        const RatFunc r = S.fuchs_residual(n);
        rep.verdict("fuchs_" + std::to_string(n), r.is_zero(), exact_residual(r.is_zero(), r.str()));
        if (n == 0) continue;
        const MultiShiftCheck sc = multi_shift_relations_check(m, p, D, n, o.unsafe);
        const bool fz = sc.forward_residual.is_zero(), bz = sc.backward_residual.is_zero();
        rep.verdict("forward_shift_" + std::to_string(n), fz, exact_residual(fz, sc.forward_residual.str()));
        rep.verdict("backward_shift_" + std::to_string(n), bz, exact_residual(bz, sc.backward_residual.str()));
    }
    if (!D.empty()) {
        const ConstantCheck pd = plusdelta_check(m, p, D, o.unsafe);
        rep.verdict("plusdelta", pd.pass(), pd.actual ? rational_json(*pd.actual - pd.expected) : Json("not proportional"));
        for (const auto& c : structural_identities(m, p, D))
            rep.verdict(c.name, c.pass(), c.actual ? rational_json(*c.actual - c.expected) : Json("not proportional"));
        for (const auto& ie : xi_indicial_exponents(S)) {
            const bool ok = ie.exponents == std::vector<Rational>{0, 3};
            rep.verdict("indicial_" + to_string(ie.root), ok, ok ? Json("0") : rationals_json(ie.exponents));
        }
    }
    const int top = std::min(o.n, 3);
    for (int n = 0; n <= top; ++n)
        for (int k = 0; k <= n; ++k) {
            const auto r = numeric::inner_product(numeric::multi_wave(S, n), numeric::multi_wave(S, k));
            const double hn = norm_closed_form(m, n, p).value() * orthogonality_factor(m, p, D, n).get_d();
            const double hk = norm_closed_form(m, k, p).value() * orthogonality_factor(m, p, D, k).get_d();
            const double dev = n == k ? std::abs(r.value / hn - 1) : std::abs(r.value) / std::max(hn, hk);
            rep.verdict("multi_ortho_" + std::to_string(n) + "_" + std::to_string(k), dev <= numeric::kMultiOrthoTol, dev, numeric::kMultiOrthoTol);
        }
}

void duality(const Options& o, Report& rep) {
    const std::vector<int> D = int_list(o.D);
    if (D.empty()) throw UsageError("duality needs a nonempty --D list of pseudo-virtual degrees");
    const int N = o.N >= 0 ? o.N : *std::max_element(D.begin(), D.end());
    const DualityReport r = duality_check(model_of(o), params_of(o), D, N);
    rep.results["D"] = r.D;
    rep.results["Dbar"] = r.Dbar;
    rep.results["N"] = r.N;
    rep.results["lambda_bar"] = {{"g", rational_json(r.lambda_bar.g)}, {"h", rational_json(r.lambda_bar.h)}};
    rep.results["wronskian_ratio"] = r.wronskian_ratio ? rational_json(*r.wronskian_ratio) : Json(nullptr);
    rep.verdict("potential_equal", r.potential_equal, r.potential_equal ? "0" : "mismatch");
    rep.verdict("wronskian_proportional", r.wronskian_ratio.has_value(), r.wronskian_ratio ? "0" : "not proportional");
    for (std::size_t n = 0; n < r.eigen_proportional.size(); ++n)
        rep.verdict("eigen_proportional_" + std::to_string(n), r.eigen_proportional[n],
                    r.eigen_proportional[n] ? "0" : "not proportional");
    rep.results["nonsingular"] = r.nonsingular_sturm;
    rep.verdict("nonsingular_rule_agrees", r.nonsingular_rule == r.nonsingular_sturm, r.nonsingular_rule ? 1 : 0);
}

// ---- scattering ----

std::vector<double> k_grid(const Options& o, int default_points) {
    if (!o.k.empty()) {
        std::vector<double> ks;
        for (const auto& r : rational_list(o.k)) ks.push_back(r.get_d());
        return ks;
    }
    const int n = o.points > 0 ? o.points : default_points;
    if (n < 2 || !(o.kmin < o.kmax)) throw UsageError("k grid needs kmin < kmax and at least two points");
    std::vector<double> ks;
    for (int i = 0; i < n; ++i) ks.push_back(o.kmin + (o.kmax - o.kmin) * i / (n - 1));
    return ks;
}

void scatter(const Options& o, Report& rep) {
    const Rational h = parse_rational(o.h);
    const Amplitudes a = soliton_amplitudes(h);
    const std::vector<double> ks = k_grid(o, 20);
    rep.results["t"] = a.t.str();
    rep.results["r"] = a.r.str();
    rep.results["reflectionless"] = a.r.vanishes;
    Json vals = Json::array();
    for (double k : ks)
        vals.push_back({{"k", k}, {"t", complex_json(evaluate_amplitude(a.t, k))}, {"r", complex_json(evaluate_amplitude(a.r, k))}});
    rep.results["values"] = vals;
    const double u = unitarity_deviation(a, ks);
    rep.verdict("unitarity", u <= numeric::kUnitarityTol, u, numeric::kUnitarityTol);
    const auto poles = locate_t_poles(a.t, h.get_d() + 1);
    rep.results["t_poles_kappa"] = poles;
    const ModelSystem sol = ModelSystem::make(ModelId::Soliton, {0, h});
    bool ok = static_cast<long>(poles.size()) == sol.max_level() + 1;
    double worst = 0;
    for (std::size_t i = 0; ok && i < poles.size(); ++i) {
        // ascending kappa is descending level
        const int n = static_cast<int>(sol.max_level()) - static_cast<int>(i);
        worst = std::max(worst, std::abs(-poles[i] * poles[i] - sol.energy(n).get_d()));
        worst = std::max(worst, std::abs(poles[i] - Rational(h - n).get_d()));
    }
    rep.verdict("pole_bookkeeping", ok && worst <= numeric::kPoleLocateTol, worst, numeric::kPoleLocateTol);
    const ShapeConstraint sc = shape_constraint_check(h, ks);
    rep.verdict("shape_constraint", sc.t_exact && (!sc.r_checked || sc.r_exact) && sc.max_deviation <= numeric::kUnitarityTol,
                sc.max_deviation, numeric::kUnitarityTol);
    const double sym = discrete_symmetry_deviation(h, {0.3, 0.7, 1.1, 2.5, 4.0});
    rep.verdict("discrete_symmetry", sym <= numeric::kUnitarityTol, sym, numeric::kUnitarityTol);
    if (o.seeds.empty()) return;
    const std::vector<SeedSpec> seeds = seeds_of(o);
    const DeformationFactor d = soliton_deformation(seeds, h);
    const Amplitudes ad = deform_amplitudes(a, d);
    rep.results["deformed_t_factor"] = ratfunc_json(d.t_factor());
    rep.results["deformed_r_factor"] = ratfunc_json(d.r_factor());
    rep.results["delta_plus"] = rationals_json(d.plus);
    rep.verdict("defrt_identity", defrt_identity(a, ad, d.M()), defrt_identity(a, ad, d.M()) ? "0" : "mismatch");
    const double ud = unitarity_deviation(ad, ks);
    rep.verdict("deformed_unitarity", ud <= numeric::kUnitarityTol, ud, numeric::kUnitarityTol);
    const ModelSystem base = ModelSystem::make(ModelId::Soliton, {0, h});
    for (const auto& s : seeds) {
        const auto [dp, dm] = soliton_asymptotic_exponents(s, h);
        const Rational e = make_seed(base, s).energy;
        rep.verdict("seed_energy_" + seed_name(s), e == -dp * dp, rational_json(e + dp * dp));
    }
}

void soliton(const Options& o, Report& rep) {
    const ReflectionlessSpec spec = reflectionless_of(o);
    const Rational t = parse_rational(o.t);
    const KayMoses km = kay_moses(spec);
    Json terms = Json::array();
    for (const auto& [key, coeff] : km.u.terms())
        terms.push_back({rational_json(coeff), rational_json(key.first), rational_json(key.second)});
    rep.results["u_terms"] = terms;  // [c, mu, nu] for c e^{mu x + nu t}
    rep.results["U_at_0"] = km.potential(0);
    const WronskianEquivalence we = wronskian_equivalence(spec);
    rep.results["c_tilde"] = rationals_json(we.c_tilde);
    rep.verdict("wronskian_equivalence", we.pass(), we.max_deviation);
    const KdvResult kdv = kdv_evolve(spec, t);
    rep.results["kdv_exact"] = kdv.exact;
    if (kdv.exact) rep.verdict("kdv_residual", kdv.pass(), kdv.exact_zero ? "0" : "nonzero");
    else rep.verdict("kdv_residual", kdv.pass(), kdv.max_residual, numeric::kKdvNumericTol);
    if (spec.N() == 1) rep.verdict("single_soliton_profile", single_soliton_identity(spec), "0");
    if (o.special_case > 0) {
        const bool ok = special_case_identity(o.special_case);
        rep.verdict("special_case_profile", ok, ok ? "0" : "mismatch");
    }
    double umax = -std::numeric_limits<double>::infinity(), umin = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 2000; ++i) {
        const double x = -20 + 0.02 * i;
        umax = std::max(umax, km.potential(x));
        const double shift = km.u.max_exponent(x, 0);
        umin = std::min(umin, km.u.eval_scaled(x, 0, shift));
    }
    rep.verdict("potential_negative", umax < 0, umax);
    rep.verdict("determinant_positive", umin > 0, umin);
}

// ---- sampling ----

void sample(const Options& o, Report& rep, std::unique_ptr<Csv>& csv) {
    const std::string what = o.what.empty() ? "wavefunction" : o.what;
    rep.inputs["what"] = what;
    if (what == "amplitudes") {
        const Amplitudes a = soliton_amplitudes(parse_rational(o.h));
        const auto ks = k_grid(o, 64);
        csv = std::make_unique<Csv>(std::vector<std::string>{"k", "re_t", "im_t", "re_r", "im_r", "abs_t2", "abs_r2", "unitarity"});
        Json rows = Json::array();
        for (double k : ks) {
            const auto t = evaluate_amplitude(a.t, k), r = evaluate_amplitude(a.r, k);
            const double s = std::norm(t) + std::norm(r);
            csv->row({format_double(k), format_double(t.real()), format_double(t.imag()), format_double(r.real()),
                      format_double(r.imag()), format_double(std::norm(t)), format_double(std::norm(r)), format_double(s)});
            rows.push_back({k, std::norm(t), std::norm(r)});
        }
        rep.results["samples"] = rows;
        return;
    }
    if (what == "potential" && o.kay_moses) {
        const KayMoses km = kay_moses(reflectionless_of(o), true);
        const double t = parse_rational(o.t).get_d();
        numeric::GridSpec g;
        g.lo = std::isnan(o.lo) ? -10 : o.lo;
        g.hi = std::isnan(o.hi) ? 10 : o.hi;
        g.points = o.points > 0 ? o.points : 401;
        csv = std::make_unique<Csv>(std::vector<std::string>{"x", "U"});
        Json rows = Json::array();
        for (double x : numeric::grid_points(g)) {
            csv->row({format_double(x), format_double(km.potential(x, t))});
            rows.push_back({x, km.potential(x, t)});
        }
        rep.results["samples"] = rows;
        return;
    }
    if (what != "potential" && what != "wavefunction")
        throw UsageError("unknown sample '" + what + "' (wavefunction, potential, amplitudes)");
    const ModelSystem base = system_of(o);
    numeric::GridSpec g = numeric::default_grid(base, o.points > 0 ? o.points : 512);
    if (!std::isnan(o.lo)) g.lo = o.lo;
    if (!std::isnan(o.hi)) g.hi = o.hi;
    if (!o.mapping.empty()) {
        static const std::map<std::string, numeric::GridSpec::Mapping> maps = {
            {"linear", numeric::GridSpec::Mapping::linear},
            {"tanh", numeric::GridSpec::Mapping::tanh_compactified},
            {"exp", numeric::GridSpec::Mapping::exp_compactified}};
        const auto it = maps.find(o.mapping);
        if (it == maps.end()) throw UsageError("unknown mapping '" + o.mapping + "' (linear, tanh, exp)");
        g.mapping = it->second;
    }
    const auto xs = numeric::grid_points(g);
    std::optional<numeric::WaveFunction> wave;
    std::optional<numeric::PotentialFn> pot;
    if (!o.D.empty()) {
        const MultiIndexedSystem S(base.id(), base.params(), IndexSet::parse(o.D), o.unsafe);
        wave = numeric::multi_wave(S, o.n);
        pot = numeric::PotentialFn(base, S.potential());
    } else if (!o.seeds.empty() || !o.krein_adler.empty()) {
        const Deformed d = build_deformed(o);
        wave = numeric::deformed_wave(d.system, d.system.state(o.n));
        pot = numeric::PotentialFn(base, d.system.potential());
    } else {
        wave = numeric::level_wave(base, o.n);
        pot = numeric::PotentialFn(base, base.potential());
    }
    Json rows = Json::array();
    if (what == "potential") {
        csv = std::make_unique<Csv>(std::vector<std::string>{"x", "U"});
        for (double x : xs) {
            const double u = (*pot)(x);
            csv->row({format_double(x), format_double(u)});
            rows.push_back({x, u});
        }
        rep.results["samples"] = rows;
        return;
    }
    csv = std::make_unique<Csv>(std::vector<std::string>{"x", "psi", "flagged"});
    const auto samples = numeric::sample(*wave, xs);
    int flagged = 0;
    for (const auto& s : samples) {
        csv->row({format_double(s.x), format_double(s.value), s.flagged ? "1" : "0"});
        rows.push_back({s.x, s.value});
        flagged += s.flagged;
    }
    rep.results["samples"] = rows;
    rep.results["sign_changes"] = numeric::count_sign_changes(samples);
    rep.verdict("no_flagged_samples", flagged == 0, flagged);
}

// ---- verify ----

using Suite = std::function<void(const Options&, Report&)>;

const std::map<std::string, Suite>& suites() {
    static const std::map<std::string, Suite> s = {
        {"spectrum", suite_spectrum},
        {"eigen", suite_eigen},
        {"shape-invariance", suite_shape_invariance},
        {"closure", suite_closure},
        {"heisenberg", suite_heisenberg},
        {"crum", suite_crum},
        {"deform", deform},
        {"krein-adler", deform},
        {"multi", multi},
        {"fuchs", multi},
        {"duality", duality},
        {"scattering", scatter},
        {"unitarity", scatter},
        {"kdv", soliton},
        {"soliton", soliton},
        {"ortho", numeric_ortho},
        {"nodes", numeric_nodes},
        {"fd", numeric_fd},
    };
    return s;
}

void verify(const Options& o, Report& rep) {
    const auto it = suites().find(o.suite);
    if (it == suites().end()) {
        std::string names;
        for (const auto& [k, v] : suites()) names += (names.empty() ? "" : ", ") + k;
        throw UsageError("unknown suite '" + o.suite + "' (" + names + ")");
    }
    rep.inputs["suite"] = o.suite;
    it->second(o, rep);
}

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(STDERR_FILENO); }

void summary(std::ostream& err, const Report& rep) {
    if (rep.verdicts.empty()) return;
    std::size_t pass = 0;
    for (const auto& v : rep.verdicts) pass += v.pass;
    const bool ok = pass == rep.verdicts.size();
    const bool color = use_color();
    err << (color ? (ok ? "\033[32m" : "\033[31m") : "") << (ok ? "PASS" : "FAIL") << (color ? "\033[0m" : "") << " "
        << rep.command << ": " << pass << "/" << rep.verdicts.size() << " verdicts pass\n";
    for (const auto& v : rep.verdicts)
        if (!v.pass) err << "  failed: " << v.name << "\n";
}

void add_options(CLI::App& app, Options& o) {
    app.add_option("--model", o.model, "H, L, J or soliton");
    app.add_option("--g", o.g, "parameter g (rational)");
    app.add_option("--h", o.h, "parameter h (rational)");
    app.add_option("--n", o.n, "highest level");
    app.add_option("--seeds", o.seeds, "seed list such as eigen:1,eigen:2 or pseudo:0");
    app.add_option("--krein-adler", o.krein_adler, "deleted eigenlevels such as 1,2");
    app.add_option("--D", o.D, "index set: 1I,2I,1II for multi, degrees for duality");
    app.add_option("--N", o.N, "duality parameter N (defaults to max D)");
    app.add_option("--k", o.k, "k list (reflectionless k_j or scattering k values)");
    app.add_option("--c", o.c, "c list for the reflectionless potential");
    app.add_option("--t", o.t, "time for KdV evolution");
    app.add_option("--special-case", o.special_case, "use k_j = j with the special c_j for this N");
    app.add_option("--lo", o.lo, "grid start");
    app.add_option("--hi", o.hi, "grid end");
    app.add_option("--points", o.points, "grid points");
    app.add_option("--mapping", o.mapping, "linear, tanh or exp");
    app.add_option("--kmin", o.kmin, "k grid start");
    app.add_option("--kmax", o.kmax, "k grid end");
    app.add_flag("--kay-moses", o.kay_moses, "sample the Kay-Moses potential");
    app.add_flag("--unsafe", o.unsafe, "skip parameter-bound checks");
    app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", o.output, "output path (default stdout)");
}

Json echo_inputs(const CLI::App& app) {
    Json in = Json::object();
    for (const CLI::Option* opt : app.get_options()) {
        if (opt->count() == 0 || opt->get_lnames().empty()) continue;
        const std::string name = opt->get_lnames().front();
        if (name == "help" || name == "config" || name == "output" || name == "format") continue;
        in[name] = opt->get_type_size() == 0 ? Json(true) : Json(opt->as<std::string>());
    }
    return in;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and numeric checks for solvable one-dimensional quantum mechanics", "solvable"};
    app.set_help_flag("--help", "print help");
    app.set_version_flag("--version", kVersion);
    app.set_config("--config", "", "key=value file using the flag names");
    app.allow_config_extras(false);
    app.fallthrough();
    app.require_subcommand(1);
    Options o;
    add_options(app, o);
    const std::map<std::string, std::string> commands = {
        {"spectrum", "energies E(0..n)"},
        {"table", "coefficient tables (--what spectrum|recurrence|eigen-poly|xi|multi-poly|seeds)"},
        {"sample", "plot data (--what wavefunction|potential|amplitudes)"},
        {"deform", "Darboux, Crum and Krein-Adler deformations"},
        {"multi", "multi-indexed polynomials"},
        {"duality", "pseudo-virtual / eigenstate duality"},
        {"scatter", "soliton scattering amplitudes"},
        {"soliton", "reflectionless potentials and KdV solitons"},
        {"verify", "run a verification suite"},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, desc] : commands) subs[name] = app.add_subcommand(name, desc);
    subs["table"]->add_option("--what", o.what, "table kind");
    subs["sample"]->add_option("--what", o.what, "sample kind");
    subs["verify"]->add_option("suite", o.suite, "suite name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    std::string command;
    for (const auto& [name, sub] : subs)
        if (sub->parsed()) command = name;

    Report rep;
    rep.command = command;
    rep.inputs = echo_inputs(app);
    std::unique_ptr<Csv> csv;
    const std::string format = o.format.empty() ? (command == "sample" ? "csv" : "json") : o.format;
    int code = 0;
    try {
        if (format == "csv" && command != "sample" && command != "table" && command != "spectrum")
            throw UsageError("csv output is available for spectrum, table and sample");
        if (format == "csv" && command != "sample") csv = std::make_unique<Csv>(std::vector<std::string>{"n", "E"});
        if (command == "spectrum") spectrum(o, rep, csv.get());
        else if (command == "table") table(o, rep, csv);
        else if (command == "sample") sample(o, rep, csv);
        else if (command == "deform") deform(o, rep);
        else if (command == "multi") multi(o, rep);
        else if (command == "duality") duality(o, rep);
        else if (command == "scatter") scatter(o, rep);
        else if (command == "soliton") soliton(o, rep);
        else if (command == "verify") verify(o, rep);
        code = rep.all_pass() ? 0 : 1;
    } catch (const std::invalid_argument& e) {  // UsageError
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {  // DomainError, PoleError
        err << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const DegeneracyError& e) {
        err << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "verification error: " << e.what() << "\n";
        return 1;
    }

    const std::string text = format == "csv" ? csv->str() : serialize(rep.to_json());
    if (o.output.empty()) {
        out << text;
    } else {
        std::ofstream f(o.output, std::ios::binary);
        if (!f) {
            err << "usage error: cannot write " << o.output << "\n";
            return 2;
        }
        f << text;
    }
    summary(err, rep);
    return code;
}

}  // namespace solvable::cli

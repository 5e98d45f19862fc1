// One line per acceptance criterion; exit status is nonzero if any fails.

#include "solvable/darboux.hpp"
#include "solvable/errors.hpp"
#include "solvable/models.hpp"
#include "solvable/multi_indexed.hpp"
#include "solvable/numeric/samplers.hpp"
#include "solvable/numeric/tolerances.hpp"
#include "solvable/scattering.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace solvable;
namespace nm = solvable::numeric;

namespace {

const Rational half(1, 2);

struct Outcome {
    bool pass = true;
    std::ostringstream note;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) note << "first failure: " << what;
            pass = false;
        }
    }
};

std::mt19937_64& rng() {
    static std::mt19937_64 r(20261016);
    return r;
}

// random rational in (lo, lo + 4) with denominator <= 6
Rational random_rational(const Rational& lo) {
    std::uniform_int_distribution<int> den(1, 6);
    const int q = den(rng());
    std::uniform_int_distribution<int> num(1, 4 * q - 1);
    Rational r(num(rng()), q);
    r.canonicalize();
    return lo + r;
}

std::vector<ModelParams> random_points(ModelId m, int count) {
    std::vector<ModelParams> out;
    for (int i = 0; i < count; ++i) {
        ModelParams p;
        if (m != ModelId::H) p.g = random_rational(half);
        if (m == ModelId::J) p.h = random_rational(half);
        out.push_back(p);
    }
    return out;
}

// Independent energy formulas.
Rational energy_oracle(ModelId m, int n, const ModelParams& p) {
    switch (m) {
        case ModelId::H: return 2 * n;
        case ModelId::L: return 4 * n;
        case ModelId::J: return Rational(4 * n) * (n + p.g + p.h);
        case ModelId::Soliton: return -(p.h - n) * (p.h - n);
    }
    return 0;
}

const std::vector<Rational> kSolitonH = {Rational(3, 2), Rational(5, 2), Rational(4)};

// ---- 1 ----
void spectra(Outcome& o) {
    for (ModelId m : {ModelId::H, ModelId::L, ModelId::J})
        for (const auto& p : random_points(m, 5)) {
            const auto sys = ModelSystem::make(m, p);
            for (int n = 0; n <= 10; ++n)
                o.require(sys.energy(n) == energy_oracle(m, n, p),
                          std::string(model_name(m)) + " E(" + std::to_string(n) + ")");
        }
    for (const auto& h : kSolitonH) {
        const auto sys = ModelSystem::make(ModelId::Soliton, {0, h});
        int count = 0;
        while (h - count > 0) ++count;
        o.require(sys.max_level() + 1 == count, "soliton level count at h=" + to_string(h));
        for (int n = 0; n < count; ++n)
            o.require(sys.energy(n) == energy_oracle(ModelId::Soliton, n, {0, h}), "soliton E(n)");
    }
    o.note << "3 models x 5 points x 11 levels, soliton h in {3/2,5/2,4}";
}

// ---- 2 ----
void eigen_residuals(Outcome& o) {
    std::vector<ModelSystem> systems;
    for (ModelId m : {ModelId::H, ModelId::L, ModelId::J})
        for (const auto& p : random_points(m, 2)) systems.push_back(ModelSystem::make(m, p));
    for (const auto& h : kSolitonH) systems.push_back(ModelSystem::make(ModelId::Soliton, {0, h}));
    int checked = 0;
    for (const auto& s : systems) {
        const int top = s.id() == ModelId::Soliton ? static_cast<int>(s.max_level()) : 8;
        for (int n = 0; n <= top; ++n) {
            const Poly P = s.eigen_poly(n);
            o.require((s.tilde_h(n).apply_poly(P) - P * s.energy(n)).is_zero(),
                      std::string(model_name(s.id())) + " n=" + std::to_string(n));
            ++checked;
        }
    }
    o.note << checked << " residuals, all zero";
}

// ---- 3 ----
void shape_invariance(Outcome& o) {
    o.require(shape_invariance_residual(ModelId::H, {}).is_zero(), "H");
    for (ModelId m : {ModelId::L, ModelId::J})
        for (const auto& p : random_points(m, 5))
            o.require(shape_invariance_residual(m, p).is_zero(), model_name(m));
    o.note << "H plus L, J at 5 points";
}

// ---- 4 ----
void closure(Outcome& o) {
    std::vector<std::pair<ModelId, ModelParams>> cases = {{ModelId::H, {}}};
    for (ModelId m : {ModelId::L, ModelId::J})
        for (const auto& p : random_points(m, 3)) cases.emplace_back(m, p);
    for (const auto& [m, p] : cases) {
        o.require(closure_residual(m, p).is_zero(), std::string(model_name(m)) + " closure");
        for (int n = 0; n <= 8; ++n) {
            try {
                const auto st = heisenberg_step_check(m, n, p);
                o.require(st.alpha_plus == energy_oracle(m, n + 1, p) - energy_oracle(m, n, p), "alpha+");
                if (n >= 1)
                    o.require(st.alpha_minus == energy_oracle(m, n - 1, p) - energy_oracle(m, n, p), "alpha-");
            } catch (const InvariantViolation& e) {
                o.require(false, std::string(model_name(m)) + " g=" + to_string(p.g) + " h=" + to_string(p.h) +
                                     " n=" + std::to_string(n) + ": " + e.what());
            }
        }
    }
    o.note << cases.size() << " closure residuals, Heisenberg steps n<=8";
}

// ---- 5 ----
// Accepted deletions: after dropping a leading block that starts at 0, every run of
// consecutive levels has even length.
bool adler_blocks_accept(std::vector<int> D) {
    std::sort(D.begin(), D.end());
    std::size_t i = 0;
    if (!D.empty() && D[0] == 0)
        while (i < D.size() && D[i] == static_cast<int>(i)) ++i;
    while (i < D.size()) {
        std::size_t j = i;
        while (j + 1 < D.size() && D[j + 1] == D[j] + 1) ++j;
        if ((j - i + 1) % 2) return false;
        i = j + 1;
    }
    return true;
}

void crum_krein_adler(Outcome& o) {
    const std::vector<ModelSystem> bases = {ModelSystem::make(ModelId::H, {}),
                                            ModelSystem::make(ModelId::L, {Rational(5, 3), 0}),
                                            ModelSystem::make(ModelId::J, {Rational(3, 2), Rational(7, 4)}),
                                            ModelSystem::make(ModelId::Soliton, {0, Rational(9, 2)})};
    for (const auto& b : bases)
        for (int s = 1; s <= 3; ++s)
            o.require(crum_tower(b, s).potential_matches, std::string("Crum ") + model_name(b.id()));

    const auto h = ModelSystem::make(ModelId::H, {});
    const auto ka = krein_adler(h, {1, 2});
    const Poly x = Poly::identity();
    const Poly target = (x * x * Rational(2) + Poly(1)).pow(2);
    const Poly xi = ka.system.denominator_poly();
    o.require((xi * xi).normalized() == target, "weight denominator (1+2x^2)^2");
    o.require(certify_nonsingular(ka.system).nonsingular, "nonsingular");
    const std::vector<int> levels = {0, 3, 4, 5, 6};
    double worst = 0;
    std::vector<nm::WaveFunction> waves;
    for (int n : levels) waves.push_back(nm::deformed_wave(ka.system, ka.system.state(n)));
    std::vector<double> norms;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        norms.push_back(nm::inner_product(waves[i], waves[i]).value);
        const double expect = ka.norm_ratio(levels[i]).get_d() * norm_closed_form(ModelId::H, levels[i], {}).value();
        o.require(std::abs(norms[i] / expect - 1) <= nm::kNormRatioTol, "KA norm ratio");
    }
    for (std::size_t i = 0; i < levels.size(); ++i)
        for (std::size_t j = i + 1; j < levels.size(); ++j)
            worst = std::max(worst, std::abs(nm::inner_product(waves[i], waves[j]).value) /
                                        std::sqrt(norms[i] * norms[j]));
    o.require(worst <= nm::kOrthoTol, "KA orthogonality");

    std::uniform_int_distribution<int> size(1, 4), level(0, 8);
    int accepted = 0;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> D;
        const int k = size(rng());
        while (static_cast<int>(D.size()) < k) {
            const int d = level(rng());
            if (std::find(D.begin(), D.end(), d) == D.end()) D.push_back(d);
        }
        const bool rule = adler_blocks_accept(D);
        o.require(!adler_violation(D).has_value() == rule, "adler_violation vs block rule");
        bool built = true;
        try {
            const auto r = krein_adler(h, D);
            o.require(certify_nonsingular(r.system).nonsingular, "accepted set is nonsingular");
        } catch (const DomainError&) {
            built = false;
        }
        o.require(built == rule, "krein_adler acceptance vs block rule");
        accepted += rule;
    }
    o.note << "Crum s<=3 on 4 models; KA {1,2} orthogonality " << worst << "; 50 random D (" << accepted
           << " accepted)";
}

// ---- 6 ----
void multi_indexed(Outcome& o) {
    const std::vector<std::string> sets = {"1I", "1II", "2I", "1I,2I", "1I,1II"};
    const std::vector<std::pair<ModelId, ModelParams>> cases = {{ModelId::L, {Rational(9, 2), 0}},
                                                                {ModelId::J, {Rational(47, 10), Rational(58, 9)}}};
    double worst = 0;
    for (const auto& [m, p] : cases)
        for (const auto& text : sets) {
            const auto D = IndexSet::parse(text);
            const std::string tag = std::string(model_name(m)) + " " + text;
            const MultiIndexedSystem sys(m, p, D);
            long ell = 0;
            for (int d : D.dI) ell += d;
            for (int d : D.dII) ell += d;
            ell += -D.M() * (D.M() - 1) / 2 - D.N() * (D.N() - 1) / 2 + D.M() * D.N();
            for (int n = 0; n <= 4; ++n) {
                o.require(sys.poly(n).degree() == ell + n, tag + " degree");
                o.require(sys.fuchs_residual(n).is_zero(), tag + " Fuchs");
            }
            for (int n = 1; n <= 4; ++n) {
                const auto c = multi_shift_relations_check(m, p, D, n);
                o.require(c.forward_residual.is_zero() && c.backward_residual.is_zero(), tag + " shift");
            }
            o.require(plusdelta_check(m, p, D).pass(), tag + " plusdelta");
            std::vector<nm::WaveFunction> w;
            for (int n = 0; n <= 3; ++n) w.push_back(nm::multi_wave(sys, n));
            std::vector<double> diag;
            for (int n = 0; n <= 3; ++n) {
                diag.push_back(nm::inner_product(w[n], w[n]).value);
                const double expect =
                    norm_closed_form(m, n, p).value() * orthogonality_factor(m, p, D, n).get_d();
                const double rel = std::abs(diag[n] / expect - 1);
                worst = std::max(worst, rel);
                o.require(rel <= nm::kMultiOrthoTol, tag + " norm");
            }
            for (int n = 0; n <= 3; ++n)
                for (int k = n + 1; k <= 3; ++k) {
                    const double rel = std::abs(nm::inner_product(w[n], w[k]).value) / std::sqrt(diag[n] * diag[k]);
                    worst = std::max(worst, rel);
                    o.require(rel <= nm::kMultiOrthoTol, tag + " orthogonality");
                }
        }
    o.note << "10 (model, D) cases, worst quadrature deviation " << worst;
}

// ---- 7 ----
void duality(Outcome& o) {
    int count = 0;
    auto check = [&](ModelId m, const ModelParams& p, const std::vector<int>& D) {
        const int N = *std::max_element(D.begin(), D.end());
        const auto r = duality_check(m, p, D, N);
        std::string tag = std::string(model_name(m)) + " D=";
        for (int d : D) tag += std::to_string(d) + ",";
        o.require(r.potential_equal, tag + " potential");
        o.require(r.wronskian_ratio.has_value(), tag + " Wronskian proportionality");
        o.require(r.pass(), tag);
        ++count;
    };
    for (const auto& D : std::vector<std::vector<int>>{{0}, {1}, {2}, {0, 2}}) check(ModelId::H, {}, D);
    const std::vector<ModelParams> lp = {{Rational(5, 2), 0}, {Rational(10, 3), 0}, {Rational(17, 4), 0}};
    const std::vector<ModelParams> jp = {
        {Rational(5, 2), Rational(7, 2)}, {Rational(10, 3), Rational(11, 4)}, {Rational(17, 4), Rational(23, 6)}};
    for (const auto& D : std::vector<std::vector<int>>{{0}, {1}}) {
        for (const auto& p : lp) check(ModelId::L, p, D);
        for (const auto& p : jp) check(ModelId::J, p, D);
    }
    o.note << count << " duality cases";
}

// ---- 8 ----
void scattering(Outcome& o) {
    const std::vector<Rational> hs = {Rational(3, 2), Rational(2), Rational(5, 2), Rational(7, 2)};
    std::vector<double> ks;
    for (int i = 1; i <= 20; ++i) ks.push_back(0.25 * i);
    double unit = 0, pole_err = 0, shape = 0;
    for (const auto& h : hs) {
        const auto a = soliton_amplitudes(h);
        const double u = unitarity_deviation(a, ks);
        unit = std::max(unit, u);
        o.require(u <= nm::kUnitarityTol, "unitarity at h=" + to_string(h));
        o.require(a.r.vanishes == is_integer(h), "structural r at h=" + to_string(h));

        std::vector<double> expect;
        for (int n = 0; h - n > 0; ++n) expect.push_back(Rational(h - n).get_d());
        std::sort(expect.begin(), expect.end());
        const auto poles = locate_t_poles(a.t, h.get_d() + 1);
        o.require(poles.size() == expect.size(), "pole count at h=" + to_string(h));
        for (std::size_t i = 0; i < std::min(poles.size(), expect.size()); ++i)
            pole_err = std::max(pole_err, std::abs(poles[i] - expect[i]));

        const auto sc = shape_constraint_check(h, ks);
        shape = std::max(shape, sc.max_deviation);
        o.require(sc.t_exact && (!sc.r_checked || sc.r_exact), "shape constraint exact");
        o.require(sc.max_deviation <= 1e-10, "shape constraint numeric");

        std::vector<std::vector<SeedSpec>> seedsets = {{SeedSpec::pseudo(0)}, {SeedSpec::pseudo(0), SeedSpec::pseudo(2)}};
        int v = 0;
        while (Rational(v) <= 2 * h) ++v;
        seedsets.push_back({SeedSpec::overshoot(v)});
        for (const auto& seeds : seedsets) {
            const auto d = soliton_deformation(seeds, h);
            o.require(defrt_identity(a, deform_amplitudes(a, d), d.M()), "defrt at h=" + to_string(h));
        }
    }
    o.require(pole_err <= nm::kPoleLocateTol, "pole location");
    o.note << "unitarity " << unit << ", pole error " << pole_err << ", shape " << shape;
}

// ---- 9 ----
void reflectionless(Outcome& o) {
    for (auto [k, c] : {std::pair{Rational(1), Rational(2)}, std::pair{Rational(3, 2), Rational(7)},
                        std::pair{Rational(2, 3), Rational(1, 5)}})
        o.require(single_soliton_identity({{k}, {c}}), "Kay-Moses N=1");
    const std::vector<ReflectionlessSpec> specs = {
        {{1}, {3}}, {{1, 2}, {6, 12}}, {{Rational(1, 2), Rational(3, 2)}, {1, 5}},
        {{1, 2, 3}, {1, 2, 3}}, {{Rational(1, 2), 1, Rational(7, 3)}, {2, Rational(1, 3), 9}}};
    for (const auto& s : specs) o.require(wronskian_equivalence(s).pass(), "Wronskian equivalence");
    for (const auto& t : {Rational(0), Rational(1, 4), Rational(-1, 3)}) {
        const auto r = kdv_evolve({{1, 2}, {6, 12}}, t);
        o.require(r.exact && r.exact_zero, "KdV N=2 exact");
    }
    double worst = 0;
    for (const auto& t : {Rational(0), Rational(1, 10)}) {
        const auto r = kdv_evolve({{1, 2, 3}, {1, 2, 3}}, t);
        worst = std::max(worst, r.max_residual);
        o.require(r.pass(), "KdV N=3");
    }
    for (int N = 1; N <= 3; ++N) o.require(special_case_identity(N), "special case N=" + std::to_string(N));
    o.note << "N=3 KdV residual " << worst;
}

// ---- 10 ----
void numerics(Outcome& o) {
    const std::vector<ModelSystem> bases = {
        ModelSystem::make(ModelId::H, {}), ModelSystem::make(ModelId::L, {Rational(3, 2), 0}),
        ModelSystem::make(ModelId::L, {Rational(13, 4), 0}),
        ModelSystem::make(ModelId::J, {Rational(3, 2), Rational(5, 2)}),
        ModelSystem::make(ModelId::J, {Rational(7, 3), Rational(9, 5)}),
        ModelSystem::make(ModelId::Soliton, {0, Rational(15, 2)})};
    double base_worst = 0, def_worst = 0;
    for (const auto& s : bases) {
        const auto [lo, hi] = nm::fd_interval(s);
        const nm::PotentialFn U(s, s.potential());
        const double r = nm::fd_schrodinger_residual(U, nm::level_wave(s, 0), s.energy(0).get_d(), lo, hi, 1e-3);
        base_worst = std::max(base_worst, r);
        o.require(r <= nm::kFdBaseTol, std::string("FD ground state ") + model_name(s.id()));
        const auto grid = nm::grid_points(nm::default_grid(s));
        for (int n = 0; n <= std::min<long>(6, s.max_level() < 0 ? 6 : s.max_level()); ++n)
            o.require(nm::count_sign_changes(nm::sample(nm::level_wave(s, n), grid)) == n,
                      std::string("nodes ") + model_name(s.id()) + " n=" + std::to_string(n));
    }
    auto deformed = [&](const DeformedSystem& d, std::vector<int> levels) {
        const auto [lo, hi] = nm::fd_interval(d.base());
        const nm::PotentialFn U(d.base(), d.potential());
        for (int n : levels) {
            const auto st = d.state(n);
            const double r = nm::fd_schrodinger_residual(U, nm::deformed_wave(d, st), st.energy.get_d(), lo, hi, 1e-3);
            def_worst = std::max(def_worst, r);
            o.require(r <= nm::kFdDeformedTol, "FD deformed");
        }
    };
    const auto h = ModelSystem::make(ModelId::H, {});
    deformed(krein_adler(h, {1, 2}).system, {0, 3, 4});
    deformed(deform_system(h, {SeedSpec::pseudo(2)}), {0, 1, 2});
    deformed(deform_system(ModelSystem::make(ModelId::L, {Rational(7, 2), 0}), {SeedSpec::virtual1(1)}), {0, 1});
    deformed(deform_system(ModelSystem::make(ModelId::J, {Rational(7, 2), Rational(9, 2)}), {SeedSpec::virtual2(1)}),
             {0, 1});
    o.note << "base FD " << base_worst << ", deformed FD " << def_worst;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit;
        std::function<void(Outcome&)> run;
    };
    const std::vector<Criterion> all = {
        {1, "spectra", 1, spectra},
        {2, "eigen-operator residuals", 5, eigen_residuals},
        {3, "shape invariance", 1, shape_invariance},
        {4, "closure relations", 5, closure},
        {5, "Crum and Krein-Adler", 30, crum_krein_adler},
        {6, "multi-indexed polynomials", 120, multi_indexed},
        {7, "duality", 60, duality},
        {8, "scattering", 10, scattering},
        {9, "reflectionless and KdV", 120, reflectionless},
        {10, "numerics", 60, numerics},
    };
    int failed = 0;
    for (const auto& c : all) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= c.limit) o.require(false, "runtime over " + std::to_string(c.limit) + " s");
        failed += !o.pass;
        std::printf("criterion %2d %-28s %s  %7.3f s  (limit %g s)  %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL",
                    secs, c.limit, o.note.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed ? 1 : 0;
}

#include "solvable/errors.hpp"
#include "solvable/multi_indexed.hpp"
#include "solvable/wronskian.hpp"

#include <algorithm>

namespace solvable {

namespace {

struct Side {
    RatFunc potential;
    std::vector<DeformedState> states;
    std::optional<DeformedSystem> sys;
};

Side build(const ModelSystem& base, const std::vector<SeedSpec>& seeds, const std::vector<int>& levels) {
    Side s;
    if (seeds.empty()) {
        s.potential = base.potential();
        for (int n : levels) s.states.push_back({base.eigenfunction(n), PrefactoredFunction(), base.energy(n)});
        return s;
    }
    s.sys = deform_system(base, seeds, true);
    s.potential = s.sys->potential();
    for (int n : levels) s.states.push_back(s.sys->state(n));
    return s;
}

}  // namespace

bool DualityReport::pass() const {
    bool eig = std::all_of(eigen_proportional.begin(), eigen_proportional.end(), [](bool b) { return b; });
    return potential_equal && wronskian_ratio.has_value() && eig && nonsingular_rule == nonsingular_sturm;
}

DualityReport duality_check(ModelId m, const ModelParams& p, const std::vector<int>& D, int N) {
    if (m == ModelId::Soliton) throw DomainError("duality check covers H, L and J");
    if (D.empty()) throw UsageError("pseudo-virtual index set is empty");
    std::vector<int> d = D;
    std::sort(d.begin(), d.end());
    if (std::adjacent_find(d.begin(), d.end()) != d.end()) throw UsageError("repeated pseudo-virtual index");
    if (d.front() < 0) throw UsageError("pseudo-virtual indices must be non-negative");
    if (N < d.back()) throw UsageError("N must be at least max(D)");

    ModelSystem sys = ModelSystem::make(m, p);
    ModelSystem bar = sys.shifted(-(N + 1));
    DualityReport r;
    r.D = d;
    r.N = N;
    r.lambda_bar = bar.params();
    for (int e = 0; e <= N; ++e)
        if (std::find(d.begin(), d.end(), N - e) == d.end()) r.Dbar.push_back(e);

    std::vector<SeedSpec> dp_seeds, ka_seeds;
    for (int v : d) dp_seeds.push_back(SeedSpec::pseudo(v));
    for (int e : r.Dbar) ka_seeds.push_back(SeedSpec::eigen(e));
    const std::vector<int> dp_levels{0, 1, 2}, ka_levels{N + 1, N + 2, N + 3};
    Side dp = build(sys, dp_seeds, dp_levels);
    Side ka = build(bar, ka_seeds, ka_levels);

    r.potential_equal = dp.potential - RatFunc(sys.energy(-N - 1)) == ka.potential;
    for (std::size_t i = 0; i < dp.states.size(); ++i) {
        const auto& a = dp.states[i];
        const auto& b = ka.states[i];
        r.eigen_proportional.push_back(proportionality(a.num * b.den, b.num * a.den).has_value());
    }

    std::vector<Poly> xis, ps;
    for (const auto& s : dp_seeds) xis.push_back(make_seed(sys, s).xi);
    for (int e : r.Dbar) ps.push_back(bar.eigen_poly(e));
    Poly wl = poly_wronskian(xis);
    Poly wr = ps.empty() ? Poly(Rational(1)) : poly_wronskian(ps);
    r.wronskian_ratio = proportionality(wl, wr);

    r.nonsingular_rule = !adler_violation(r.Dbar).has_value();
    r.nonsingular_sturm = certify_nonsingular(*dp.sys).nonsingular;
    return r;
}

}  // namespace solvable

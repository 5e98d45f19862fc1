#include "doctest.h"

#include "solvable/darboux.hpp"
#include "solvable/errors.hpp"

#include <algorithm>

using namespace solvable;

namespace {
const Poly E = Poly::identity();

// first m >= 0 where prod (m - d) < 0, scanning past max(D)
std::optional<int> adler_oracle(const std::vector<int>& D) {
    const int top = D.empty() ? 0 : *std::max_element(D.begin(), D.end());
    for (int m = 0; m <= top + 1; ++m) {
        int neg = 0;
        bool zero = false;
        for (int d : D) {
            if (m == d) zero = true;
            if (m < d) ++neg;
        }
        if (!zero && neg % 2) return m;
    }
    return std::nullopt;
}
}  // namespace

TEST_SUITE("darboux") {
    TEST_CASE("seed names round-trip") {
        for (const char* s : {"eigen:2", "virtI:1", "virtII:0", "pseudo:3", "overshoot:4"})
            CHECK(seed_name(parse_seed(s)) == s);
        CHECK_THROWS(parse_seed("bogus:1"));
    }

    TEST_CASE("seeds solve the Schroedinger equation at their energies") {
        const auto h = ModelSystem::make(ModelId::H, {});
        const auto l = ModelSystem::make(ModelId::L, {Rational(7, 2), 0});
        const auto j = ModelSystem::make(ModelId::J, {Rational(7, 2), Rational(9, 2)});
        std::vector<std::pair<ModelSystem, SeedSpec>> cases = {
            {h, SeedSpec::pseudo(0)},    {h, SeedSpec::pseudo(3)},   {l, SeedSpec::virtual1(2)},
            {l, SeedSpec::virtual2(1)},  {l, SeedSpec::pseudo(2)},   {j, SeedSpec::virtual1(1)},
            {j, SeedSpec::virtual2(2)},  {j, SeedSpec::pseudo(1)},   {l, SeedSpec::eigen(3)}};
        for (const auto& [s, spec] : cases) {
            const auto seed = make_seed(s, spec);
            CHECK(schrodinger_residual(s.map(), s.potential(), seed.fn.log_derivative(), seed.energy).is_zero());
        }
        CHECK(make_seed(h, SeedSpec::pseudo(2)).classification == SeedClass::Pseudo);
        CHECK(make_seed(l, SeedSpec::virtual1(1)).classification == SeedClass::TypeI);
        CHECK(make_seed(l, SeedSpec::virtual2(1)).classification == SeedClass::TypeII);
        CHECK(make_seed(l, SeedSpec::eigen(1)).classification == SeedClass::Eigen);
        CHECK_THROWS_AS(make_seed(l, SeedSpec::virtual2(3)), DomainError);
    }

    TEST_CASE("deleting the H ground state shifts the potential by 2") {
        const auto d = deform_system(ModelSystem::make(ModelId::H, {}), {SeedSpec::eigen(0)});
        CHECK(d.potential_delta() == RatFunc(2));
        for (int n = 1; n <= 4; ++n) CHECK(d.residual(d.state(n)).is_zero());
        CHECK_THROWS_AS(d.state(0), DomainError);
    }

    TEST_CASE("Krein-Adler H with levels 1 and 2 deleted") {
        const auto h = ModelSystem::make(ModelId::H, {});
        const auto ka = krein_adler(h, {2, 1});
        CHECK(ka.deleted == std::vector<int>{1, 2});
        CHECK(ka.mu == 0);
        CHECK(proportionality(ka.system.denominator_poly(), E * E * Rational(2) + Poly(1)).has_value());
        CHECK(certify_nonsingular(ka.system).nonsingular);
        for (int n : {0, 3, 4, 5}) {
            CHECK(ka.system.residual(ka.system.state(n)).is_zero());
            CHECK(ka.norm_ratio(n) == (h.energy(n) - 2) * (h.energy(n) - 4));
        }
        CHECK_THROWS(krein_adler(h, {1}));
        const auto bad = deform_system(h, {SeedSpec::eigen(1)}, true);
        const auto v = certify_nonsingular(bad);
        CHECK_FALSE(v.nonsingular);
        CHECK(v.interior_roots == 1);
    }

    TEST_CASE("Adler rule agrees with direct enumeration") {
        const std::vector<std::vector<int>> sets = {{}, {1}, {1, 2}, {2, 3}, {1, 3}, {0, 1}, {3, 4, 6, 7}, {2, 4}};
        for (const auto& D : sets) CHECK(adler_violation(D) == adler_oracle(D));
    }

    TEST_CASE("Crum tower reproduces the shifted potential") {
        for (int s = 1; s <= 3; ++s) {
            CHECK(crum_tower(ModelSystem::make(ModelId::H, {}), s).potential_matches);
            CHECK(crum_tower(ModelSystem::make(ModelId::L, {Rational(3, 2), 0}), s).potential_matches);
            CHECK(crum_tower(ModelSystem::make(ModelId::J, {Rational(3, 2), Rational(5, 2)}), s).potential_matches);
        }
    }

    TEST_CASE("repeated seeds are degenerate") {
        CHECK_THROWS_AS(deform_system(ModelSystem::make(ModelId::H, {}), {SeedSpec::eigen(1), SeedSpec::eigen(1)}),
                        DegeneracyError);
    }
}

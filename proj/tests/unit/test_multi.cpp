#include "doctest.h"

#include "solvable/errors.hpp"
#include "solvable/multi_indexed.hpp"
#include "solvable/ortho_poly.hpp"

using namespace solvable;

namespace {
const Poly E = Poly::identity();
const Rational half(1, 2);
const ModelParams kL{Rational(9, 2), 0};
const ModelParams kJ{Rational(47, 10), Rational(58, 9)};

long degree_oracle(const IndexSet& D) {
    long s = 0;
    for (int d : D.dI) s += d;
    for (int d : D.dII) s += d;
    const long M = D.M(), N = D.N();
    return s - M * (M - 1) / 2 - N * (N - 1) / 2 + M * N;
}

std::vector<IndexSet> sets() {
    return {IndexSet::parse("1I"), IndexSet::parse("1II"), IndexSet::parse("1I,2I"), IndexSet::parse("1I,1II"),
            IndexSet::parse("2I,1II,2II")};
}
}  // namespace

TEST_SUITE("multi") {
    TEST_CASE("index sets parse and print") {
        const auto D = IndexSet::parse("2I,1I,1II");
        CHECK(D.dI == std::vector<int>{1, 2});
        CHECK(D.dII == std::vector<int>{1});
        CHECK(IndexSet::parse(D.str()) == D);
        CHECK(IndexSet::parse("").empty());
        CHECK_THROWS(IndexSet::parse("0I"));
        CHECK_THROWS(IndexSet::parse("1I,1I"));
        CHECK_THROWS(IndexSet::parse("1X"));
    }

    TEST_CASE("single type I denominator for L") {
        // xi_1 = L_1^{(g-1/2)}(-eta)
        const ModelParams p{2, 0};
        const Poly xi = denominator_xi(ModelId::L, p, IndexSet::parse("1I"));
        CHECK(proportionality(xi, E + Poly(Rational(5, 2))).has_value());
        CHECK(xi_I(ModelId::L, 1, p) == laguerre_poly(1, p.g - half, Var::eta).compose(-E));
    }

    TEST_CASE("degrees, Fuchs equation and shift relations") {
        for (auto [m, p] : {std::pair{ModelId::L, kL}, std::pair{ModelId::J, kJ}})
            for (const auto& D : sets()) {
                CAPTURE(D.str());
                const MultiIndexedSystem sys(m, p, D);
                CHECK(sys.ell() == degree_oracle(D));
                for (int n = 0; n <= 4; ++n) {
                    CHECK(sys.poly(n).degree() == degree_oracle(D) + n);
                    CHECK(sys.fuchs_residual(n).is_zero());
                    CHECK(sys.energy(n) == ModelSystem::make(m, p).energy(n));
                }
                for (int n = 1; n <= 3; ++n) {
                    const auto c = multi_shift_relations_check(m, p, D, n);
                    CHECK(c.forward_residual.is_zero());
                    CHECK(c.backward_residual.is_zero());
                }
                CHECK(plusdelta_check(m, p, D).pass());
                for (const auto& s : structural_identities(m, p, D)) {
                    CAPTURE(s.name);
                    CHECK(s.pass());
                }
            }
    }

    TEST_CASE("leading coefficients cancel at h - g = 1") {
        const auto D = IndexSet::parse("2I,1II,2II");
        CHECK(denominator_xi(ModelId::J, {Rational(9, 2), Rational(13, 2)}, D).degree() == 6);
        CHECK(denominator_xi(ModelId::J, {Rational(9, 2), Rational(11, 2)}, D).degree() == 2);
        // xi_1^I has leading coefficient (g - h + 2)/2
        CHECK(xi_I(ModelId::J, 1, {Rational(9, 2), Rational(13, 2)}).degree() == 0);
        CHECK_THROWS_AS(MultiIndexedSystem(ModelId::J, {Rational(9, 2), Rational(17, 2)}, IndexSet::parse("1I,2I")),
                        DegeneracyError);
    }

    TEST_CASE("empty deletion reduces to the base polynomials") {
        const MultiIndexedSystem sys(ModelId::L, kL, IndexSet{});
        for (int n = 0; n <= 3; ++n)
            CHECK(proportionality(sys.poly(n), ModelSystem::make(ModelId::L, kL).eigen_poly(n)).has_value());
    }

    TEST_CASE("orthogonality factors") {
        const auto D = IndexSet::parse("1I");
        CHECK(orthogonality_factor(ModelId::L, kL, D, 2) == 2 + kL.g + 1 + half);
        CHECK(orthogonality_factor(ModelId::L, kL, IndexSet::parse("1II"), 0) == kL.g - 1 - half);
        // J: (n+g+d+1/2)(n+h-d-1/2)/4
        CHECK(orthogonality_factor(ModelId::J, kJ, D, 1) == (1 + kJ.g + Rational(3, 2)) * (1 + kJ.h - Rational(3, 2)) / 4);
    }

    TEST_CASE("parameter bounds") {
        CHECK_THROWS_AS(check_multi_bounds(ModelId::L, {Rational(3, 2), 0}, IndexSet::parse("2II")), DomainError);
        CHECK_NOTHROW(check_multi_bounds(ModelId::L, kL, IndexSet::parse("2II")));
    }

    TEST_CASE("pseudo-virtual and Krein-Adler duality") {
        CHECK(duality_check(ModelId::H, {}, {0}, 0).pass());
        CHECK(duality_check(ModelId::H, {}, {0, 2}, 2).pass());
        CHECK(duality_check(ModelId::L, {Rational(5, 2), 0}, {1}, 1).pass());
        CHECK(duality_check(ModelId::J, {Rational(5, 2), Rational(7, 2)}, {0}, 1).pass());
        CHECK_THROWS_AS(duality_check(ModelId::H, {}, {2}, 1), UsageError);
    }
}

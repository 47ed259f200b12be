#include "doctest.h"

#include <numeric>

#include "nsimplex/electric.hpp"
#include "nsimplex/errors.hpp"
#include "nsimplex/propagation.hpp"

using namespace nsimplex;

TEST_CASE("rational electric map evaluates exactly") {
    auto out = electric_apply_rational(1, 1, 1);
    CHECK(out[0] == mpq_class(1, 3));
    CHECK(out[1] == 3);
    CHECK(out[2] == mpq_class(1, 3));

    // z = 0 swaps x and y.
    auto swap = electric_apply_rational(mpq_class(7, 5), mpq_class(-3, 2), 0);
    CHECK(swap[0] == mpq_class(-3, 2));
    CHECK(swap[1] == mpq_class(7, 5));
    CHECK(swap[2] == 0);

    CHECK_THROWS_AS(electric_apply_rational(1, 0, -1), SingularityError);
}

TEST_CASE("residue color sets pick the smallest root of -1") {
    ResidueColorSet z25 = ResidueColorSet::make(5, 2);
    CHECK(z25.epsilon == 2);
    CHECK(z25.modulus == 25);
    CHECK(z25.elements == std::vector<std::int64_t>{2, 7, 12, 17, 22});
    CHECK(z25.color_of(7) == 1);

    ResidueColorSet z169 = ResidueColorSet::make(13, 2);
    CHECK(z169.epsilon == 5);
    CHECK(z169.color_count() == 13);

    ResidueColorSet z8 = ResidueColorSet::make(2, 3);
    CHECK(z8.elements == std::vector<std::int64_t>{1, 3, 5, 7});

    CHECK_THROWS_AS(ResidueColorSet::make(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(ResidueColorSet::make(5, 1), std::invalid_argument);
    CHECK(ResidueColorSet::make(5, 2, 3).epsilon == 3); // 3^2 = -1 mod 5 too
    CHECK_THROWS_AS(ResidueColorSet::make(5, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(z25.color_of(3), std::invalid_argument);
}

TEST_CASE("electric restrictions are closed bijections for all pinned rings") {
    for (auto [p, k] : std::vector<std::pair<std::int64_t, int>>{
             {5, 2}, {13, 2}, {2, 3}, {2, 4}, {5, 3}}) {
        ResidueColorSet cs = ResidueColorSet::make(p, k);
        RMap r = electric_rmap(cs); // construction asserts closure + bijectivity
        CHECK(r.colors() == cs.color_count());
        CHECK(r.is_bijective());
    }
}

TEST_CASE("electric restrictions solve the tetrahedron equation") {
    for (auto [p, k] : std::vector<std::pair<std::int64_t, int>>{{5, 2}, {2, 3}, {2, 4}}) {
        ResidueColorSet cs = ResidueColorSet::make(p, k);
        CHECK(check_n_simplex(electric_rmap(cs)).ok);
    }
}

TEST_CASE("Z/25 reduced form equals the tabulated map") {
    CHECK(reduced_form_z25(0, 1, 0) == std::array<int, 3>{0, 1, 0});
    CHECK(reduced_form_z25(0, 0, 0) == std::array<int, 3>{3, 2, 3});

    ResidueColorSet cs = ResidueColorSet::make(5, 2, 2);
    RMap r = electric_rmap(cs);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c) {
                std::array<int, 3> in{a, b, c};
                auto got = r.apply(in);
                auto want = reduced_form_z25(a, b, c);
                CHECK(got == std::vector<int>{want[0], want[1], want[2]});
            }
}

TEST_CASE("Z/8 reduced form equals the tabulated map") {
    CHECK(reduced_form_z8(0, 0, 0) == std::array<int, 3>{1, 1, 1});

    ResidueColorSet cs = ResidueColorSet::make(2, 3);
    RMap r = electric_rmap(cs);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                std::array<int, 3> in{a, b, c};
                auto got = r.apply(in);
                auto want = reduced_form_z8(a, b, c);
                CHECK(got == std::vector<int>{want[0], want[1], want[2]});
            }
}

TEST_CASE("character groups have the pinned sizes and are homomorphisms") {
    ResidueColorSet z25 = ResidueColorSet::make(5, 2);
    auto chars25 = characters(z25);
    CHECK(chars25.size() == 20);

    ResidueColorSet z8 = ResidueColorSet::make(2, 3);
    auto chars8 = characters(z8);
    CHECK(chars8.size() == 4);

    ResidueColorSet z16 = ResidueColorSet::make(2, 4);
    CHECK(characters(z16).size() == 8);

    ResidueColorSet z169 = ResidueColorSet::make(13, 2);
    CHECK(characters(z169).size() == 156);

    auto check_hom = [](const ResidueColorSet& cs, const Character& eta) {
        for (std::int64_t u = 1; u < cs.modulus; ++u) {
            if (std::gcd(u, cs.modulus) != 1) continue;
            for (std::int64_t v = 1; v < cs.modulus; ++v) {
                if (std::gcd(v, cs.modulus) != 1) continue;
                std::int64_t lhs = eta(u * v % cs.modulus);
                std::int64_t rhs = (eta(u) + eta(v)) % eta.order;
                CHECK(lhs == rhs);
            }
        }
    };
    for (const auto& eta : chars25) check_hom(z25, eta);
    for (const auto& eta : chars8) check_hom(z8, eta);

    CHECK(chars25[0].is_trivial());
    CHECK_FALSE(chars25[1].is_trivial());
}

TEST_CASE("electric cocycles read the middle line of the map") {
    ResidueColorSet cs = ResidueColorSet::make(5, 2, 2);
    RMap r = electric_rmap(cs);
    auto chars = characters(cs);

    // Trivial character gives the zero cocycle.
    ElectricCocycles trivial = electric_cocycles(cs, chars[0]);
    CHECK(trivial.c1 == Cocycle::zero(5, 20));
    CHECK(trivial.c2 == Cocycle::zero(5, 20));

    // c2 is definable straight from the ring: eta(x + z + xyz).
    const Character& eta = chars[3];
    ElectricCocycles cc = electric_cocycles(cs, eta);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c) {
                std::int64_t x = cs.element(a), y = cs.element(b), z = cs.element(c);
                std::int64_t w = (x + z + x * y % 25 * z) % 25;
                CHECK(cc.c2(a, b, c) == eta(w));
                CHECK(cc.c1(a, b, c) == eta(y));
            }
}

TEST_CASE("nontriviality report for a faithful character of Z/25") {
    ResidueColorSet cs = ResidueColorSet::make(5, 2, 2);
    auto chars = characters(cs);
    REQUIRE(chars[1](7) % chars[1].order != 0);

    NontrivialityReport report = nontriviality_report(cs, chars[1]);
    CHECK(report.c1.cocycle_ok);
    CHECK_FALSE(report.c1.is_coboundary);
    CHECK(report.c1.fixed_witnesses.size() == 25);
    for (const auto& w : report.c1.fixed_witnesses) CHECK(w[1] == 1);

    NontrivialityReport trivial = nontriviality_report(cs, chars[0]);
    CHECK(trivial.c1.is_coboundary);
    CHECK(trivial.c2.is_coboundary);
    CHECK(trivial.c1.fixed_witnesses.empty());
}

#include "doctest.h"

#include <random>

#include "nsimplex/chain_complex.hpp"
#include "nsimplex/cocycle.hpp"
#include "nsimplex/electric.hpp"

using namespace nsimplex;

namespace {

RMap shift_middle(int m) {
    std::vector<std::int32_t> flat;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) {
                flat.push_back(a);
                flat.push_back((b + 1) % m);
                flat.push_back(c);
            }
    return RMap(3, m, std::move(flat));
}

Potential random_potential(int colors, std::int64_t modulus, std::mt19937_64& rng) {
    Potential psi = Potential::zero(colors, modulus);
    std::uniform_int_distribution<std::int64_t> dist(0, modulus - 1);
    for (auto& v : psi.table) v = dist(rng);
    return psi;
}

// Independent verdict: try every potential with psi(0) = 0. Adding a constant
// to psi leaves its coboundary unchanged, so this exhausts all coboundaries.
bool is_coboundary_brute(const RMap& r, const Cocycle& phi) {
    const int colors = phi.colors;
    const std::int64_t m = phi.modulus;
    const std::uint64_t triples = r.states();
    std::vector<int> in0(triples), in1(triples), in2(triples);
    std::vector<int> out0(triples), out1(triples), out2(triples);
    for (std::uint64_t t = 0; t < triples; ++t) {
        auto in = r.tuple_of(t);
        in0[t] = in[0];
        in1[t] = in[1];
        in2[t] = in[2];
        out0[t] = r.output_component(t, 0);
        out1[t] = r.output_component(t, 1);
        out2[t] = r.output_component(t, 2);
    }
    std::uint64_t space = 1;
    for (int i = 1; i < colors; ++i) space *= static_cast<std::uint64_t>(m);
    std::vector<std::int64_t> psi(static_cast<std::size_t>(colors), 0);
    for (std::uint64_t s = 0; s < space; ++s) {
        std::uint64_t v = s;
        for (int i = 1; i < colors; ++i) {
            psi[static_cast<std::size_t>(i)] =
                static_cast<std::int64_t>(v % static_cast<std::uint64_t>(m));
            v /= static_cast<std::uint64_t>(m);
        }
        bool match = true;
        for (std::uint64_t t = 0; t < triples && match; ++t) {
            std::int64_t delta = psi[in0[t]] + psi[in1[t]] + psi[in2[t]] -
                                 psi[out0[t]] - psi[out1[t]] - psi[out2[t]];
            match = ((delta - phi.table[t]) % m + m) % m == 0;
        }
        if (match) return true;
    }
    return false;
}

} // namespace

TEST_CASE("zero cocycles and coboundaries pass the cocycle check") {
    std::mt19937_64 rng(1);
    ResidueColorSet cs = ResidueColorSet::make(5, 2, 2);
    RMap el = electric_rmap(cs);
    for (const RMap& r : {RMap::identity(3, 3), shift_middle(4), el}) {
        CHECK(check_cocycle(r, Cocycle::zero(r.colors(), 12)).ok);
        for (int trial = 0; trial < 5; ++trial) {
            Potential psi = random_potential(r.colors(), 20, rng);
            CHECK(check_cocycle(r, coboundary_of(r, psi)).ok);
        }
    }
}

TEST_CASE("both electric cocycles pass for every character of Z/25") {
    ResidueColorSet cs = ResidueColorSet::make(5, 2, 2);
    RMap r = electric_rmap(cs);
    auto chars = characters(cs);
    REQUIRE(chars.size() == 20);
    for (const Character& eta : chars) {
        ElectricCocycles cc = electric_cocycles(cs, eta);
        CHECK(check_cocycle(r, cc.c1).ok);
        CHECK(check_cocycle(r, cc.c2).ok);

        // Products and integer powers stay cocycles.
        Cocycle mix = Cocycle::zero(5, cc.c1.modulus);
        for (std::size_t i = 0; i < mix.table.size(); ++i)
            mix.table[i] = (3 * cc.c1.table[i] + 7 * cc.c2.table[i]) % mix.modulus;
        CHECK(check_cocycle(r, mix).ok);
    }
}

TEST_CASE("a failing phase table is caught with its first counterexample") {
    ResidueColorSet cs = ResidueColorSet::make(5, 2, 2);
    RMap r = electric_rmap(cs);
    Cocycle broken = electric_cocycles(cs, characters(cs)[1]).c1;
    broken.at(0, 0, 0) = (broken(0, 0, 0) + 1) % broken.modulus;
    CocycleCheckResult res = check_cocycle(r, broken);
    CHECK_FALSE(res.ok);
    REQUIRE(res.counterexample.has_value());
    CHECK(res.left != res.right);
    // Re-evaluate the traces at the reported tuple.
    CHECK(twisted_product_trace(r, broken, TraceSide::left, *res.counterexample) == res.left);
    CHECK(twisted_product_trace(r, broken, TraceSide::right, *res.counterexample) == res.right);
}

TEST_CASE("trace sides agree exactly when the cocycle condition holds") {
    ResidueColorSet cs = ResidueColorSet::make(5, 2, 2);
    RMap r = electric_rmap(cs);
    Cocycle c1 = electric_cocycles(cs, characters(cs)[1]).c1;
    CHECK(twisted_product_trace(r, Cocycle::zero(5, 20), TraceSide::left,
                                std::array<int, 6>{1, 2, 3, 4, 0, 1}) == 0);
    std::array<int, 6> a{0, 1, 0, 1, 0, 1};
    CHECK(twisted_product_trace(r, c1, TraceSide::left, a) ==
          twisted_product_trace(r, c1, TraceSide::right, a));
}

TEST_CASE("coboundary solver round-trips and certifies obstructions") {
    std::mt19937_64 rng(2);
    ResidueColorSet cs = ResidueColorSet::make(5, 2, 2);
    RMap r = electric_rmap(cs);

    // phi = delta(psi0) is recognized with some witness potential.
    Potential psi0 = random_potential(5, 20, rng);
    Cocycle phi = coboundary_of(r, psi0);
    CoboundarySolution sol = solve_coboundary(r, phi);
    REQUIRE(sol.exists);
    CHECK(coboundary_of(r, *sol.psi) == phi);

    // The zero cocycle is a coboundary of a constant-free potential.
    CoboundarySolution zero_sol = solve_coboundary(r, Cocycle::zero(5, 20));
    REQUIRE(zero_sol.exists);
    CHECK(coboundary_of(r, *zero_sol.psi) == Cocycle::zero(5, 20));

    // A faithful character gives a non-coboundary with pinned witnesses.
    Cocycle c1 = electric_cocycles(cs, characters(cs)[1]).c1;
    CoboundarySolution none = solve_coboundary(r, c1);
    CHECK_FALSE(none.exists);
    REQUIRE(none.certificate.has_value());

    auto witnesses = fixed_point_obstruction(r, c1);
    CHECK(witnesses.size() == 25);
    for (const auto& w : witnesses) CHECK(w[1] == 1); // middle color 1, element 7
    CHECK(cs.element(1) == 7);

    // Coboundaries never produce witnesses.
    CHECK(fixed_point_obstruction(r, phi).empty());
}

TEST_CASE("solver verdicts match brute force over all potentials") {
    // Z/8 pipeline: 4 colors, modulus 2, so the potential space is tiny.
    ResidueColorSet cs8 = ResidueColorSet::make(2, 3);
    RMap r8 = electric_rmap(cs8);
    for (const Character& eta : characters(cs8)) {
        ElectricCocycles cc = electric_cocycles(cs8, eta);
        CHECK(solve_coboundary(r8, cc.c1).exists == is_coboundary_brute(r8, cc.c1));
        CHECK(solve_coboundary(r8, cc.c2).exists == is_coboundary_brute(r8, cc.c2));
    }

    // Two Z/25 characters: one faithful, one of order five.
    ResidueColorSet cs = ResidueColorSet::make(5, 2, 2);
    RMap r = electric_rmap(cs);
    auto chars = characters(cs);
    for (std::size_t j : {std::size_t(1), std::size_t(4)}) {
        ElectricCocycles cc = electric_cocycles(cs, chars[j]);
        CHECK(solve_coboundary(r, cc.c1).exists == is_coboundary_brute(r, cc.c1));
    }

    // The Z/8 map has no fixed points, so the obstruction list is always
    // empty and inconclusive.
    Cocycle any = electric_cocycles(cs8, characters(cs8)[3]).c1;
    CHECK(fixed_point_obstruction(r8, any).empty());
}

TEST_CASE("cocycle exponents lie in the kernel of the transposed boundary") {
    ResidueColorSet cs = ResidueColorSet::make(5, 2, 2);
    RMap r = electric_rmap(cs);
    SparseIntMatrix d4 = boundary_matrix(r, 4, SignConvention::alternating);
    auto chars = characters(cs);

    auto kernel_residue_ok = [&](const Cocycle& phi) {
        // d4^T phi = 0 mod 20, column by column.
        std::vector<std::int64_t> acc(static_cast<std::size_t>(d4.cols), 0);
        for (const auto& e : d4.entries)
            acc[static_cast<std::size_t>(e.col)] +=
                e.value * phi.table[static_cast<std::size_t>(e.row)];
        for (std::int64_t v : acc)
            if (((v % phi.modulus) + phi.modulus) % phi.modulus != 0) return false;
        return true;
    };
    for (std::size_t j : {std::size_t(0), std::size_t(1), std::size_t(7)}) {
        ElectricCocycles cc = electric_cocycles(cs, chars[j]);
        CHECK(kernel_residue_ok(cc.c1));
        CHECK(kernel_residue_ok(cc.c2));
    }
    // A perturbed table leaves the kernel.
    Cocycle broken = electric_cocycles(cs, chars[1]).c1;
    broken.at(2, 3, 1) = (broken(2, 3, 1) + 1) % broken.modulus;
    CHECK_FALSE(kernel_residue_ok(broken));

    // Characters of order five embed in F_5: rescaled exponents must lie in
    // the cocycle space computed over that field.
    auto basis = cocycle_space_basis(r, 3, 5);
    ElectricCocycles order5 = electric_cocycles(cs, chars[4]);
    std::vector<std::int64_t> rescaled;
    for (std::int64_t v : order5.c1.table) {
        REQUIRE(v % 4 == 0);
        rescaled.push_back(v / 4 % 5);
    }
    CHECK(in_span_mod_p(basis, rescaled, 5));
}

TEST_CASE("fixed points of the reduced Z/25 map force the middle color") {
    // R fixes (n1, 1, n3) and nothing else: the middle output 2 - n2 equals
    // n2 only at n2 = 1.
    ResidueColorSet cs = ResidueColorSet::make(5, 2, 2);
    RMap r = electric_rmap(cs);
    int fixed = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c) {
                std::array<int, 3> in{a, b, c};
                auto out = r.apply(in);
                if (out[0] == a && out[1] == b && out[2] == c) {
                    ++fixed;
                    CHECK(b == 1);
                }
            }
    CHECK(fixed == 25);
}

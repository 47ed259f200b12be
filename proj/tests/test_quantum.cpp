#include "doctest.h"

#include <random>

#include "nsimplex/electric.hpp"
#include "nsimplex/propagation.hpp"
#include "nsimplex/quantum.hpp"

using namespace nsimplex;

namespace {

MonomialOperator random_operator(int arity, int colors, std::int64_t modulus,
                                 std::mt19937_64& rng) {
    MonomialOperator op = identity_operator(arity, colors, modulus);
    std::shuffle(op.perm.begin(), op.perm.end(), rng);
    std::uniform_int_distribution<std::int32_t> dist(0, static_cast<std::int32_t>(modulus - 1));
    for (auto& p : op.phase) p = dist(rng);
    return op;
}

} // namespace

TEST_CASE("permutation operators copy the map table with zero phases") {
    RMap id = RMap::identity(3, 2);
    CHECK(permutation_operator(id) == identity_operator(3, 2, 1));

    ResidueColorSet cs = ResidueColorSet::make(5, 2, 2);
    RMap el = electric_rmap(cs);
    MonomialOperator op = permutation_operator(el);
    CHECK(op.states() == 125);
    CHECK(op.is_invertible());
    for (std::int32_t ph : op.phase) CHECK(ph == 0);
}

TEST_CASE("twisting by the zero cocycle is the bare permutation operator") {
    ResidueColorSet cs = ResidueColorSet::make(5, 2, 2);
    RMap el = electric_rmap(cs);
    CHECK(twisted_operator(el, Cocycle::zero(5, 20)) == permutation_operator(el, 20));

    // Twisting the identity map gives a diagonal operator.
    RMap id = RMap::identity(3, 2);
    Cocycle phi = Cocycle::zero(2, 8);
    phi.at(1, 0, 1) = 5;
    MonomialOperator diag = twisted_operator(id, phi);
    for (std::uint64_t t = 0; t < diag.states(); ++t) CHECK(diag.perm[t] == t);
    CHECK(diag.phase[5] == 5); // index of (1,0,1) base 2
}

TEST_CASE("composition is associative and respects inverses") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        MonomialOperator a = random_operator(2, 3, 12, rng);
        MonomialOperator b = random_operator(2, 3, 12, rng);
        MonomialOperator c = random_operator(2, 3, 12, rng);
        CHECK(compose(compose(c, b), a) == compose(c, compose(b, a)));
        CHECK(compose(a, inverse(a)) == identity_operator(2, 3, 12));
        CHECK(compose(inverse(a), a) == identity_operator(2, 3, 12));
    }
}

TEST_CASE("embedding acts on the chosen slots only") {
    ResidueColorSet cs = ResidueColorSet::make(2, 3); // 4 colors
    RMap r = electric_rmap(cs);
    Cocycle c1 = electric_cocycles(cs, characters(cs)[1]).c1;
    MonomialOperator op = twisted_operator(r, c1);
    std::array<int, 3> slots{2, 4, 5};
    MonomialOperator big = embed_on_slots(op, slots, 6);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> dist(0, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> state(6);
        std::uint64_t idx = 0;
        for (auto& v : state) {
            v = dist(rng);
            idx = idx * 4 + static_cast<std::uint64_t>(v);
        }
        std::vector<int> expect = apply_on_slots(r, state, slots);
        std::uint64_t expect_idx = 0;
        for (int v : expect) expect_idx = expect_idx * 4 + static_cast<std::uint64_t>(v);
        CHECK(big.perm[idx] == expect_idx);
        CHECK(big.phase[idx] == c1(state[2], state[4], state[5]));
    }

    // Disjoint supports commute.
    MonomialOperator left = embed_on_slots(op, std::array<int, 3>{0, 1, 2}, 6);
    MonomialOperator right = embed_on_slots(op, std::array<int, 3>{3, 4, 5}, 6);
    CHECK(compose(left, right) == compose(right, left));

    CHECK_THROWS_AS(embed_on_slots(op, std::array<int, 3>{0, 0, 1}, 6),
                    std::invalid_argument);
}

TEST_CASE("identity embedding is the identity on six slots") {
    MonomialOperator id3 = identity_operator(3, 2, 4);
    CHECK(embed_on_slots(id3, std::array<int, 3>{1, 3, 4}, 6) ==
          identity_operator(6, 2, 4));
}

TEST_CASE("tetrahedron verification of permutation and twisted operators") {
    ResidueColorSet cs = ResidueColorSet::make(5, 2, 2);
    RMap r = electric_rmap(cs);
    CHECK(check_qte(permutation_operator(r)).ok);

    Cocycle c1 = electric_cocycles(cs, characters(cs)[1]).c1;
    CHECK(check_qte(twisted_operator(r, c1)).ok);

    // Perturbing one phase entry must break the equation somewhere.
    Cocycle broken = c1;
    broken.at(0, 0, 0) = (broken(0, 0, 0) + 1) % broken.modulus;
    QteCheckResult bad = check_qte(twisted_operator(r, broken));
    CHECK_FALSE(bad.ok);
    CHECK(bad.counterexample.has_value());

    // A map that fails the set-theoretic equation fails the quantum one too.
    RMap id = RMap::identity(3, 2);
    std::vector<std::int32_t> flat;
    for (std::uint64_t s = 0; s < id.states(); ++s)
        for (int j = 0; j < 3; ++j) flat.push_back(id.output_component(s, j));
    std::swap(flat[0 * 3 + 2], flat[1 * 3 + 2]);
    RMap swapped(3, 2, std::move(flat));
    CHECK_FALSE(check_qte(permutation_operator(swapped)).ok);
}

TEST_CASE("every verified twist satisfies the tensor equation") {
    std::mt19937_64 rng(29);
    ResidueColorSet cs25 = ResidueColorSet::make(5, 2, 2);
    ResidueColorSet cs8 = ResidueColorSet::make(2, 3);
    struct Case {
        RMap r;
        Cocycle phi;
    };
    std::vector<Case> cases;
    RMap el25 = electric_rmap(cs25);
    RMap el8 = electric_rmap(cs8);
    cases.push_back({el25, electric_cocycles(cs25, characters(cs25)[2]).c2});
    cases.push_back({el8, electric_cocycles(cs8, characters(cs8)[3]).c1});
    for (const RMap& r : {RMap::identity(3, 3), el8}) {
        Potential psi = Potential::zero(r.colors(), 12);
        std::uniform_int_distribution<std::int64_t> dist(0, 11);
        for (auto& v : psi.table) v = dist(rng);
        cases.push_back({r, coboundary_of(r, psi)});
    }
    for (const Case& c : cases) {
        REQUIRE(check_n_simplex(c.r).ok);
        REQUIRE(check_cocycle(c.r, c.phi).ok);
        CHECK(check_qte(twisted_operator(c.r, c.phi)).ok);
    }
}

TEST_CASE("composite phases equal the accumulated traces") {
    ResidueColorSet cs = ResidueColorSet::make(5, 2, 2);
    RMap r = electric_rmap(cs);
    Cocycle c1 = electric_cocycles(cs, characters(cs)[3]).c1;
    MonomialOperator op = twisted_operator(r, c1);

    const std::array<std::array<int, 3>, 4> seq{
        {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}}};
    MonomialOperator lhs = embed_on_slots(op, seq[0], 6);
    for (std::size_t i = 1; i < seq.size(); ++i)
        lhs = compose(embed_on_slots(op, seq[i], 6), lhs);
    MonomialOperator rhs = embed_on_slots(op, seq[3], 6);
    for (std::size_t i = seq.size() - 1; i-- > 0;)
        rhs = compose(embed_on_slots(op, seq[i], 6), rhs);

    std::array<int, 6> a{};
    for (std::uint64_t t = 0; t < lhs.states(); ++t) {
        std::uint64_t v = t;
        for (std::size_t j = 6; j-- > 0;) {
            a[j] = static_cast<int>(v % 5);
            v /= 5;
        }
        CHECK(lhs.phase[t] == twisted_product_trace(r, c1, TraceSide::left, a));
        CHECK(rhs.phase[t] == twisted_product_trace(r, c1, TraceSide::right, a));
    }
}

TEST_CASE("gauge equivalence detects coboundary shifts") {
    ResidueColorSet cs = ResidueColorSet::make(5, 2, 2);
    RMap r = electric_rmap(cs);
    Cocycle c1 = electric_cocycles(cs, characters(cs)[1]).c1;
    MonomialOperator op = twisted_operator(r, c1);

    // psi = 0 demands equality.
    CHECK(gauge_equivalent(op, op, Potential::zero(5, 20)).equivalent);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(0, 19);
    for (int trial = 0; trial < 10; ++trial) {
        Potential psi = Potential::zero(5, 20);
        for (auto& v : psi.table) v = dist(rng);
        Cocycle shifted = c1;
        Cocycle delta = coboundary_of(r, psi);
        for (std::size_t i = 0; i < shifted.table.size(); ++i)
            shifted.table[i] = (shifted.table[i] + delta.table[i]) % 20;
        CHECK(gauge_equivalent(op, twisted_operator(r, shifted), psi).equivalent);
        // The wrong potential is rejected (unless it happens to match).
        Potential wrong = psi;
        wrong.table[2] = (wrong.table[2] + 1) % 20;
        CHECK_FALSE(gauge_equivalent(op, twisted_operator(r, shifted), wrong).equivalent);
    }

    // Mismatched permutation parts are refused outright.
    RMap id = RMap::identity(3, 5);
    GaugeCheckResult res =
        gauge_equivalent(op, twisted_operator(id, c1), Potential::zero(5, 20));
    CHECK_FALSE(res.equivalent);
    CHECK(res.reason.find("permutation") != std::string::npos);
}

TEST_CASE("tetrahedron verdicts are gauge invariant") {
    ResidueColorSet cs = ResidueColorSet::make(2, 3);
    RMap r = electric_rmap(cs);
    Cocycle c1 = electric_cocycles(cs, characters(cs)[2]).c1;
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<std::int64_t> dist(0, 1);

    auto gauge_shift = [&](const MonomialOperator& op, const Potential& psi) {
        MonomialOperator out = op;
        for (std::uint64_t t = 0; t < op.states(); ++t) {
            std::uint64_t v = t;
            int z = static_cast<int>(v % 4);
            v /= 4;
            int y = static_cast<int>(v % 4);
            v /= 4;
            int x = static_cast<int>(v);
            std::uint64_t img = op.perm[t];
            int zp = static_cast<int>(img % 4);
            img /= 4;
            int yp = static_cast<int>(img % 4);
            img /= 4;
            int xp = static_cast<int>(img);
            std::int64_t shift = psi.table[x] + psi.table[y] + psi.table[z] -
                                 psi.table[xp] - psi.table[yp] - psi.table[zp];
            out.phase[t] = static_cast<std::int32_t>(
                ((out.phase[t] + shift) % op.modulus + op.modulus) % op.modulus);
        }
        return out;
    };

    for (int trial = 0; trial < 5; ++trial) {
        Potential psi = Potential::zero(4, 2);
        for (auto& v : psi.table) v = dist(rng);

        MonomialOperator good = twisted_operator(r, c1);
        CHECK(check_qte(good).ok == check_qte(gauge_shift(good, psi)).ok);

        MonomialOperator bad = good;
        bad.phase[7] = static_cast<std::int32_t>((bad.phase[7] + 1) % 2);
        CHECK(check_qte(bad).ok == check_qte(gauge_shift(bad, psi)).ok);
    }
}

TEST_CASE("operator export lists one line per basis tuple") {
    MonomialOperator id = identity_operator(2, 2, 3);
    std::string text = id.serialize();
    CHECK(text == "0 0 -> 0 0 0\n0 1 -> 0 1 0\n1 0 -> 1 0 0\n1 1 -> 1 1 0\n");
}

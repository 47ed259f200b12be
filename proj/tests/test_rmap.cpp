#include "doctest.h"

#include <array>

#include "nsimplex/errors.hpp"
#include "nsimplex/rmap.hpp"

using namespace nsimplex;

TEST_CASE("identity map applies and is bijective") {
    RMap id = RMap::identity(3, 4);
    CHECK(id.states() == 64);
    std::array<int, 3> in{1, 3, 2};
    CHECK(id.apply(in) == std::vector<int>{1, 3, 2});
    CHECK(id.is_bijective());
}

TEST_CASE("constant map is not bijective") {
    std::vector<std::int32_t> flat(8 * 3, 0); // everything to (0,0,0), m=2
    RMap constant(3, 2, std::move(flat));
    CHECK_FALSE(constant.is_bijective());
}

TEST_CASE("apply_on_slots touches only the chosen slots") {
    RMap id = RMap::identity(3, 5);
    std::vector<int> state{1, 2, 3, 4, 0, 2};
    CHECK(apply_on_slots(id, state, std::array<int, 3>{2, 4, 5}) == state);

    // A map that rotates its inputs makes the slot wiring visible.
    std::vector<std::int32_t> flat;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                flat.push_back(b);
                flat.push_back(c);
                flat.push_back(a);
            }
    RMap rot(3, 3, std::move(flat));
    std::vector<int> s{0, 1, 2, 0, 1, 2};
    auto out = apply_on_slots(rot, s, std::array<int, 3>{2, 4, 5});
    CHECK(out == std::vector<int>{0, 1, 1, 0, 2, 2});
    CHECK_THROWS_AS(apply_on_slots(rot, s, std::array<int, 3>{2, 2, 5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_on_slots(rot, s, std::array<int, 3>{2, 4, 6}),
                    std::invalid_argument);
}

TEST_CASE("rmap file format round-trips bit-exactly") {
    RMap id = RMap::identity(2, 3);
    std::string text = id.serialize();
    CHECK(text.substr(0, 16) == "simplex-rmap v1\n");
    RMap back = RMap::parse(text);
    CHECK(back == id);
    CHECK(back.serialize() == text);
}

TEST_CASE("rmap parser reports line and column") {
    CHECK_THROWS_AS(RMap::parse("bogus\n"), ParseError);
    try {
        RMap::parse("simplex-rmap v1\nn=2 m=2\n0 0 -> 0 0\n0 1 -> 0 x\n");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
        CHECK(e.column == 10); // the offending 'x'
    }
    // Inputs out of order are rejected.
    CHECK_THROWS_AS(RMap::parse("simplex-rmap v1\nn=2 m=2\n0 1 -> 0 0\n"), ParseError);
    // Output color out of range.
    CHECK_THROWS_AS(
        RMap::parse("simplex-rmap v1\nn=2 m=2\n0 0 -> 0 2\n0 1 -> 0 0\n1 0 -> 0 0\n1 1 -> 0 0\n"),
        ParseError);
}

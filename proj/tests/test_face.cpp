#include "doctest.h"

#include <algorithm>
#include <set>

#include "nsimplex/face.hpp"

using namespace nsimplex;

namespace {

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i)
        r = r * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
    return r;
}

} // namespace

TEST_CASE("face words parse, print and order") {
    FaceCode f = FaceCode::parse("0**1");
    CHECK(f.str() == "0**1");
    CHECK(f.ambient_dim() == 4);
    CHECK(f.dim() == 2);
    CHECK(f.star_positions() == std::vector<int>{1, 2});
    CHECK(FaceCode::parse("0**") < FaceCode::parse("1**"));
    CHECK(FaceCode::parse("1**") < FaceCode::parse("*0*")); // digits sort before stars
    CHECK_THROWS_AS(FaceCode::parse("0x*"), std::invalid_argument);
}

TEST_CASE("face enumeration counts and order") {
    CHECK(enumerate_faces(3, 3) == std::vector<FaceCode>{FaceCode::parse("***")});

    auto two_faces = enumerate_faces(3, 2);
    std::vector<std::string> got;
    for (const auto& f : two_faces) got.push_back(f.str());
    CHECK(got == std::vector<std::string>{"0**", "1**", "*0*", "*1*", "**0", "**1"});

    CHECK(enumerate_faces(4, 2).size() == 24);
    for (int N = 1; N <= 6; ++N)
        for (int k = 0; k <= N; ++k)
            CHECK(enumerate_faces(N, k).size() == binom(N, k) << (N - k));

    auto all = enumerate_faces(5, 2);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK_THROWS_AS(enumerate_faces(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_faces(3, -1), std::invalid_argument);
}

TEST_CASE("subface classification follows the alternating digit rule") {
    FaceCode cube = FaceCode::parse("***");
    CHECK(classify_subface(cube, FaceCode::parse("0**")) == FaceRole::incoming);
    CHECK(classify_subface(cube, FaceCode::parse("*1*")) == FaceRole::incoming);
    CHECK(classify_subface(cube, FaceCode::parse("**0")) == FaceRole::incoming);
    CHECK(classify_subface(cube, FaceCode::parse("1**")) == FaceRole::outgoing);
    CHECK(classify_subface(cube, FaceCode::parse("*0*")) == FaceRole::outgoing);
    CHECK(classify_subface(cube, FaceCode::parse("**1")) == FaceRole::outgoing);

    // In I^4: stars of 0*** sit at axes 2,3,4 with kappa 0,1,0.
    CHECK(classify_subface(FaceCode::parse("0***"), FaceCode::parse("00**")) ==
          FaceRole::incoming);

    CHECK_THROWS_AS(classify_subface(cube, FaceCode::parse("00*")),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify_subface(FaceCode::parse("0**"), FaceCode::parse("***")),
                    std::invalid_argument);
}

TEST_CASE("every n-face has n incoming and n outgoing subfaces") {
    for (int N = 2; N <= 5; ++N) {
        for (int n = 2; n <= N; ++n) {
            for (const FaceCode& f : enumerate_faces(N, n)) {
                int in = 0, out = 0;
                for (const FaceCode& g : enumerate_faces(N, n - 1)) {
                    if (!f.contains(g)) continue;
                    if (classify_subface(f, g) == FaceRole::incoming)
                        ++in;
                    else
                        ++out;
                }
                CHECK(in == n);
                CHECK(out == n);
            }
        }
    }
}

TEST_CASE("face order counts incoming containments") {
    CHECK(face_order(FaceCode::parse("0**"), 3) == 1);
    CHECK(face_order(FaceCode::parse("1**"), 3) == 0); // absolutely outgoing
    // The unique order-2 face of I^4 parallel to axes 3,4 (0-based 2,3).
    CHECK(face_order(FaceCode::parse("00**"), 3) == 2);
    CHECK_THROWS_AS(face_order(FaceCode::parse("0**"), 2), std::invalid_argument);
}

TEST_CASE("absolutely incoming faces: pinned slot order for small cubes") {
    auto abs3 = absolutely_incoming_faces(3, 3);
    std::vector<std::string> got;
    for (const auto& f : abs3) got.push_back(f.str());
    CHECK(got == std::vector<std::string>{"0**", "*1*", "**0"});

    auto out3 = absolutely_outgoing_faces(3, 3);
    got.clear();
    for (const auto& f : out3) got.push_back(f.str());
    CHECK(got == std::vector<std::string>{"1**", "*0*", "**1"});

    // The slot order of I^4 pinned by the classic tetrahedron labelling.
    auto abs4 = absolutely_incoming_faces(4, 3);
    got.clear();
    for (const auto& f : abs4) got.push_back(f.str());
    CHECK(got == std::vector<std::string>{"00**", "0*1*", "0**0", "*11*", "*1*0", "**00"});

    CHECK(absolutely_incoming_faces(4, 3).size() == 6);
    CHECK(absolutely_incoming_faces(5, 3).size() == 10);

    // Degenerate bottom: the cube I^(n-1) is its own single (n-1)-face.
    CHECK(absolutely_incoming_faces(2, 3) == std::vector<FaceCode>{FaceCode::parse("**")});
}

TEST_CASE("absolute faces match the brute-force order filter") {
    for (int N = 2; N <= 8; ++N) {
        for (int n = 2; n <= N; ++n) {
            std::vector<FaceCode> brute_in, brute_out;
            for (const FaceCode& g : enumerate_faces(N, n - 1)) {
                int order = face_order(g, n);
                if (order == N - n + 1) brute_in.push_back(g);
                if (order == 0) brute_out.push_back(g);
            }
            std::sort(brute_in.begin(), brute_in.end());
            std::sort(brute_out.begin(), brute_out.end());
            CHECK(absolutely_incoming_faces(N, n) == brute_in);
            CHECK(absolutely_outgoing_faces(N, n) == brute_out);
            CHECK(brute_in.size() == binom(N, n - 1));
            CHECK(brute_out.size() == binom(N, n - 1));
        }
    }
}

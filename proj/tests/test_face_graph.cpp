#include "doctest.h"

#include <map>
#include <set>

#include "nsimplex/errors.hpp"
#include "nsimplex/face_graph.hpp"

using namespace nsimplex;

TEST_CASE("single cube face graph") {
    FaceGraph g = build_face_graph(3, 3);
    CHECK(g.n_faces.size() == 1);
    CHECK(g.sub_faces.size() == 6);
    CHECK(g.edges.size() == 6);
    CHECK(g.topo_order.size() == 7);

    int into_cube = 0, out_of_cube = 0;
    for (const auto& e : g.edges) {
        if (g.is_n_face(e.to)) ++into_cube;
        if (g.is_n_face(e.from)) ++out_of_cube;
    }
    CHECK(into_cube == 3);
    CHECK(out_of_cube == 3);
}

TEST_CASE("face graphs are acyclic and sources/sinks are the absolute faces") {
    for (int N = 2; N <= 7; ++N) {
        for (int n = 2; n <= N; ++n) {
            FaceGraph g = build_face_graph(N, n); // throws on a cycle
            CHECK(g.topo_order.size() == g.vertex_count());

            std::vector<int> indeg(g.vertex_count(), 0), outdeg(g.vertex_count(), 0);
            for (const auto& e : g.edges) {
                ++indeg[e.to];
                ++outdeg[e.from];
            }
            std::set<FaceCode> sources, sinks;
            for (std::size_t v = g.n_faces.size(); v < g.vertex_count(); ++v) {
                if (indeg[v] == 0) sources.insert(g.face_of(v));
                if (outdeg[v] == 0) sinks.insert(g.face_of(v));
            }
            auto abs_in = absolutely_incoming_faces(N, n);
            auto abs_out = absolutely_outgoing_faces(N, n);
            CHECK(sources == std::set<FaceCode>(abs_in.begin(), abs_in.end()));
            CHECK(sinks == std::set<FaceCode>(abs_out.begin(), abs_out.end()));
        }
    }
}

TEST_CASE("topological order respects edges and is lexicographically tie-broken") {
    FaceGraph g = build_face_graph(4, 3);
    std::vector<std::size_t> position(g.vertex_count());
    for (std::size_t i = 0; i < g.topo_order.size(); ++i) position[g.topo_order[i]] = i;
    for (const auto& e : g.edges) CHECK(position[e.from] < position[e.to]);
}

TEST_CASE("absolutely incoming faces precede absolutely outgoing ones in I^(n+1)") {
    // Verified by a two-n-face path search: f -> F1 -> g -> F2 -> h.
    for (int n = 2; n <= 5; ++n) {
        const int N = n + 1;
        FaceGraph g = build_face_graph(N, n);
        std::map<FaceCode, std::size_t> index;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) index[g.face_of(v)] = v;
        std::vector<std::vector<std::size_t>> succ(g.vertex_count());
        for (const auto& e : g.edges) succ[e.from].push_back(e.to);

        for (const FaceCode& f : absolutely_incoming_faces(N, n)) {
            for (const FaceCode& h : absolutely_outgoing_faces(N, n)) {
                bool found = false;
                for (std::size_t f1 : succ[index[f]]) {
                    for (std::size_t mid : succ[f1]) {
                        for (std::size_t f2 : succ[mid]) {
                            for (std::size_t end : succ[f2])
                                if (g.face_of(end) == h) {
                                    found = true;
                                    break;
                                }
                            if (found) break;
                        }
                        if (found) break;
                    }
                    if (found) break;
                }
                CHECK(found);
            }
        }
    }
}

TEST_CASE("equation graph splits into two ordered tournaments") {
    EquationGraph eg = build_equation_graph(3);
    std::vector<std::string> lhs, rhs;
    for (const auto& f : eg.lhs) lhs.push_back(f.str());
    for (const auto& f : eg.rhs) rhs.push_back(f.str());
    CHECK(lhs == std::vector<std::string>{"0***", "*1**", "**0*", "***1"});
    CHECK(rhs == std::vector<std::string>{"1***", "*0**", "**1*", "***0"});

    EquationGraph tri = build_equation_graph(2);
    CHECK(tri.lhs.size() == 3);
    CHECK(tri.rhs.size() == 3);
    CHECK(tri.edges.size() == 6); // two triangles

    for (int n = 2; n <= 6; ++n) {
        EquationGraph g = build_equation_graph(n);
        CHECK(g.lhs.size() == static_cast<std::size_t>(n + 1));
        CHECK(g.rhs.size() == static_cast<std::size_t>(n + 1));
        // Complete tournament per component, each edge agreeing with the
        // component's linear order (lhs listed increasing, rhs decreasing).
        std::map<std::string, std::size_t> lhs_pos, rhs_pos;
        for (std::size_t i = 0; i < g.lhs.size(); ++i) lhs_pos[g.lhs[i].str()] = i;
        for (std::size_t i = 0; i < g.rhs.size(); ++i) rhs_pos[g.rhs[i].str()] = i;
        std::size_t lhs_edges = 0, rhs_edges = 0;
        for (const auto& e : g.edges) {
            if (lhs_pos.count(e.from.str())) {
                REQUIRE(lhs_pos.count(e.to.str()));
                CHECK(lhs_pos[e.from.str()] < lhs_pos[e.to.str()]);
                ++lhs_edges;
            } else {
                REQUIRE(rhs_pos.count(e.from.str()));
                REQUIRE(rhs_pos.count(e.to.str()));
                CHECK(rhs_pos[e.from.str()] > rhs_pos[e.to.str()]);
                ++rhs_edges;
            }
            // The edge label is the shared codimension-1 face, outgoing for
            // the tail and incoming for the head.
            CHECK(e.from.contains(e.shared));
            CHECK(e.to.contains(e.shared));
            CHECK(classify_subface(e.from, e.shared) == FaceRole::outgoing);
            CHECK(classify_subface(e.to, e.shared) == FaceRole::incoming);
        }
        std::size_t complete = static_cast<std::size_t>((n + 1) * n / 2);
        CHECK(lhs_edges == complete);
        CHECK(rhs_edges == complete);

        // No edges across the components: every shared face is incoming for
        // both or outgoing for both.
        for (const auto& a : g.lhs) {
            for (const auto& b : g.rhs) {
                std::vector<Symbol> w(static_cast<std::size_t>(n + 1), Symbol::star);
                bool disjoint = false;
                for (int i = 0; i < n + 1; ++i) {
                    Symbol sa = a.at(i), sb = b.at(i);
                    if (sa == sb)
                        w[static_cast<std::size_t>(i)] = sa;
                    else if (sa == Symbol::star)
                        w[static_cast<std::size_t>(i)] = sb;
                    else if (sb == Symbol::star)
                        w[static_cast<std::size_t>(i)] = sa;
                    else
                        disjoint = true;
                }
                if (disjoint) continue;
                FaceCode shared{w};
                if (shared.dim() != n - 1) continue;
                CHECK(classify_subface(a, shared) == classify_subface(b, shared));
            }
        }
    }
}

#include "nsimplex/face_graph.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>

#include "nsimplex/errors.hpp"

namespace nsimplex {

namespace {

std::size_t face_rank(const std::vector<FaceCode>& sorted, const FaceCode& f) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), f);
    if (it == sorted.end() || !(*it == f))
        throw InvariantError("face not found in enumeration");
    return static_cast<std::size_t>(it - sorted.begin());
}

// Intersection of two faces as a face, or nothing if they are disjoint.
std::optional<FaceCode> face_intersection(const FaceCode& a, const FaceCode& b) {
    std::vector<Symbol> w(static_cast<std::size_t>(a.ambient_dim()));
    for (int i = 0; i < a.ambient_dim(); ++i) {
        Symbol sa = a.at(i), sb = b.at(i);
        if (sa == sb) {
            w[static_cast<std::size_t>(i)] = sa;
        } else if (sa == Symbol::star) {
            w[static_cast<std::size_t>(i)] = sb;
        } else if (sb == Symbol::star) {
            w[static_cast<std::size_t>(i)] = sa;
        } else {
            return std::nullopt; // opposite digits
        }
    }
    return FaceCode(std::move(w));
}

} // namespace

FaceGraph build_face_graph(int N, int n) {
    if (n < 2 || n > N)
        throw std::invalid_argument("build_face_graph requires 2 <= n <= N");
    FaceGraph g;
    g.N = N;
    g.n = n;
    g.n_faces = enumerate_faces(N, n);
    g.sub_faces = enumerate_faces(N, n - 1);

    const std::size_t nf = g.n_faces.size();
    for (std::size_t i = 0; i < nf; ++i) {
        const FaceCode& f = g.n_faces[i];
        std::vector<Symbol> w = f.word();
        for (int p = 0; p < N; ++p) {
            if (w[static_cast<std::size_t>(p)] != Symbol::star) continue;
            for (Symbol d : {Symbol::zero, Symbol::one}) {
                w[static_cast<std::size_t>(p)] = d;
                FaceCode sub{w};
                std::size_t j = nf + face_rank(g.sub_faces, sub);
                if (classify_subface(f, sub) == FaceRole::incoming)
                    g.edges.push_back({j, i});
                else
                    g.edges.push_back({i, j});
            }
            w[static_cast<std::size_t>(p)] = Symbol::star;
        }
    }

    // Kahn's algorithm; the ready set is kept as a min-heap on the face word
    // so the order is deterministic.
    std::size_t V = g.vertex_count();
    std::vector<std::vector<std::size_t>> succ(V);
    std::vector<std::size_t> indeg(V, 0);
    for (const auto& e : g.edges) {
        succ[e.from].push_back(e.to);
        ++indeg[e.to];
    }
    auto cmp = [&](std::size_t a, std::size_t b) { return g.face_of(b) < g.face_of(a); };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> ready(cmp);
    for (std::size_t v = 0; v < V; ++v)
        if (indeg[v] == 0) ready.push(v);
    while (!ready.empty()) {
        std::size_t v = ready.top();
        ready.pop();
        g.topo_order.push_back(v);
        for (std::size_t w2 : succ[v])
            if (--indeg[w2] == 0) ready.push(w2);
    }
    if (g.topo_order.size() != V)
        throw InvariantError("cycle detected in face graph");
    return g;
}

EquationGraph build_equation_graph(int n) {
    if (n < 2) throw std::invalid_argument("equation graph requires n >= 2");
    EquationGraph eg;
    eg.n = n;
    const int N = n + 1;
    for (int i = 0; i < N; ++i) {
        std::vector<Symbol> w(static_cast<std::size_t>(N), Symbol::star);
        // lhs faces carry 0 at even axes and 1 at odd axes (0-based).
        w[static_cast<std::size_t>(i)] = (i % 2 == 0) ? Symbol::zero : Symbol::one;
        eg.lhs.emplace_back(w);
        w[static_cast<std::size_t>(i)] = (i % 2 == 0) ? Symbol::one : Symbol::zero;
        eg.rhs.emplace_back(w); // ascending i lists the rhs in decreasing order
    }

    auto add_component_edges = [&](const std::vector<FaceCode>& comp) {
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (std::size_t j = 0; j < comp.size(); ++j) {
                if (i == j) continue;
                auto shared = face_intersection(comp[i], comp[j]);
                if (!shared) continue;
                if (classify_subface(comp[i], *shared) == FaceRole::outgoing &&
                    classify_subface(comp[j], *shared) == FaceRole::incoming)
                    eg.edges.push_back({comp[i], comp[j], *shared});
            }
        }
    };
    add_component_edges(eg.lhs);
    add_component_edges(eg.rhs);
    return eg;
}

} // namespace nsimplex

#ifndef NSIMPLEX_FACE_GRAPH_HPP
#define NSIMPLEX_FACE_GRAPH_HPP

#include <cstddef>
#include <vector>

#include "nsimplex/face.hpp"

namespace nsimplex {

/// The directed graph on the n-faces and (n-1)-faces of I^N: an edge runs
/// from g to f when the (n-1)-face g is incoming for the n-face f, and from
/// f to g when g is outgoing for f. The graph is acyclic; a topological order
/// (ties broken by lexicographic face order) is computed on construction.
struct FaceGraph {
    int N = 0;
    int n = 0;
    std::vector<FaceCode> n_faces;   // enumeration order
    std::vector<FaceCode> sub_faces; // (n-1)-faces, enumeration order

    // Vertex v: n-face i is encoded as v = i, sub-face j as v = n_faces.size() + j.
    struct Edge {
        std::size_t from;
        std::size_t to;
    };
    std::vector<Edge> edges;
    std::vector<std::size_t> topo_order; // all vertices, sources first

    std::size_t vertex_count() const { return n_faces.size() + sub_faces.size(); }
    bool is_n_face(std::size_t v) const { return v < n_faces.size(); }
    const FaceCode& face_of(std::size_t v) const {
        return is_n_face(v) ? n_faces[v] : sub_faces[v - n_faces.size()];
    }
};

/// Requires 2 <= n <= N. Throws InvariantError if a cycle is detected (which
/// would contradict the acyclicity of the incoming/outgoing orientation).
FaceGraph build_face_graph(int N, int n);

/// The graph on the n-faces of I^(n+1) whose edges are the (n-1)-faces that
/// are outgoing for one n-face and incoming for another, directed accordingly.
/// It splits into two complete tournaments ("components"), each linearly
/// ordered; lhs is listed in increasing order, rhs in decreasing order.
struct EquationGraph {
    int n = 0;
    std::vector<FaceCode> lhs; // digit at axis i is 0 for even i, 1 for odd i; increasing
    std::vector<FaceCode> rhs; // complementary digits; listed decreasing
    struct Edge {
        FaceCode from;
        FaceCode to;
        FaceCode shared; // the (n-1)-face labelling the edge
    };
    std::vector<Edge> edges;
};

EquationGraph build_equation_graph(int n);

} // namespace nsimplex

#endif

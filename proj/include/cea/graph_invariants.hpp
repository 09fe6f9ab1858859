#pragma once

#include "cea/combinatorics.hpp"
#include "cea/mpolynomial.hpp"
#include "cea/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cea {

/// Oriented graph encoding of an m-invariant. Edge k carries the factor
/// m[i_k, j_k]: the tail end holds the row index, the head end the column
/// index. A white vertex contracts its two incident slots with the metric;
/// a black vertex alternates its N ordered slots (unnormalized alternator,
/// i.e. the full signed permutation sum).
struct InvariantGraph {
    enum class Color { white, black };
    struct EdgeEnd {
        int edge;  // 1-based edge number
        bool head; // false: tail end (row slot), true: head end (column slot)
        friend bool operator==(const EdgeEnd &, const EdgeEnd &) = default;
    };
    struct Vertex {
        Color color = Color::white;
        std::vector<EdgeEnd> slots; // required for black (ordered); ignored for white
    };
    struct Edge {
        int tail = 0; // vertex index
        int head = 0;
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    /// Ends incident to a vertex, in edge order (tail end first for loops).
    std::vector<EdgeEnd> incident_ends(int v) const
    {
        std::vector<EdgeEnd> ends;
        for (size_t e = 0; e < edges.size(); ++e) {
            if (edges[e].tail == v) ends.push_back({int(e) + 1, false});
            if (edges[e].head == v) ends.push_back({int(e) + 1, true});
        }
        return ends;
    }

    /// Structural validation; throws with the offending vertex on failure.
    void validate(int N) const
    {
        if (edges.empty()) throw std::invalid_argument("graph: no edges");
        for (size_t e = 0; e < edges.size(); ++e) {
            if (edges[e].tail < 0 || edges[e].tail >= int(vertices.size()) || edges[e].head < 0 ||
                edges[e].head >= int(vertices.size()))
                throw std::invalid_argument("graph: edge " + std::to_string(e + 1) +
                                            " references a missing vertex");
        }
        for (size_t v = 0; v < vertices.size(); ++v) {
            const auto ends = incident_ends(int(v));
            if (vertices[v].color == Color::white) {
                if (ends.size() != 2)
                    throw std::invalid_argument("graph: white vertex " + std::to_string(v) +
                                                " has degree " + std::to_string(ends.size()) +
                                                ", expected 2");
            } else {
                if (int(ends.size()) != N)
                    throw std::invalid_argument("graph: black vertex " + std::to_string(v) +
                                                " has degree " + std::to_string(ends.size()) +
                                                ", expected " + std::to_string(N));
                if (vertices[v].slots.size() != ends.size())
                    throw std::invalid_argument("graph: black vertex " + std::to_string(v) +
                                                " slot list does not cover its edge ends");
                for (const auto &slot : vertices[v].slots) {
                    bool found = false;
                    for (const auto &end : ends) found = found || end == slot;
                    if (!found)
                        throw std::invalid_argument("graph: black vertex " + std::to_string(v) +
                                                    " lists a slot that is not incident");
                }
                for (size_t a = 0; a < vertices[v].slots.size(); ++a)
                    for (size_t b = a + 1; b < vertices[v].slots.size(); ++b)
                        if (vertices[v].slots[a] == vertices[v].slots[b])
                            throw std::invalid_argument("graph: black vertex " + std::to_string(v) +
                                                        " repeats a slot");
            }
        }
    }
};

/// Compiles a graph into its m-invariant over an N-dimensional index range.
inline MPolynomial compile_graph(const InvariantGraph &g, int N)
{
    g.validate(N);
    const int K = static_cast<int>(g.edges.size());

    // Each edge has a row slot (tail) and a column slot (head); slot id
    // 2*(e-1) is the row, 2*(e-1)+1 the column.
    auto slot_id = [](const InvariantGraph::EdgeEnd &end) {
        return 2 * (end.edge - 1) + (end.head ? 1 : 0);
    };

    std::vector<int> white_vertices, black_vertices;
    for (size_t v = 0; v < g.vertices.size(); ++v)
        (g.vertices[v].color == InvariantGraph::Color::white ? white_vertices : black_vertices)
            .push_back(int(v));

    std::vector<int> slot_value(2 * K, -1);
    MPolynomial out;

    // Enumerate white contraction indices and black alternator permutations.
    std::function<void(size_t, Rational)> assign_black = [&](size_t bi, Rational coeff) {
        if (bi == black_vertices.size()) {
            Monomial mono(K);
            for (int e = 0; e < K; ++e)
                mono[e] = var_m(slot_value[2 * e] + 1, slot_value[2 * e + 1] + 1);
            out.add_term(std::move(mono), coeff);
            return;
        }
        const auto &slots = g.vertices[black_vertices[bi]].slots;
        for_each_signed_permutation(N, [&](const std::vector<int> &perm, int sign) {
            for (int t = 0; t < N; ++t) slot_value[slot_id(slots[t])] = perm[t];
            assign_black(bi + 1, coeff * Rational(sign));
        });
    };
    std::function<void(size_t)> assign_white = [&](size_t wi) {
        if (wi == white_vertices.size()) {
            assign_black(0, Rational(1));
            return;
        }
        const auto ends = g.incident_ends(white_vertices[wi]);
        for (int c = 0; c < N; ++c) {
            slot_value[slot_id(ends[0])] = c;
            slot_value[slot_id(ends[1])] = c;
            assign_white(wi + 1);
        }
    };
    assign_white(0);
    return out;
}

/// Combinatorial prefactors the graph encodings produce relative to the
/// unit-normalized pfaffian and determinant: k! 2^k and k! respectively.
inline Rational pf_graph_normalization(int k) { return factorial(k) * pow2(k); }
inline Rational det_graph_normalization(int k) { return factorial(k); }

} // namespace cea

#pragma once

#include <cstdint>
#include <string>

#include "dgeo/graph.hpp"
#include "dgeo/rational.hpp"

namespace dgeo {

// Inductive dimension: dim(empty) = -1, dim(G) = 1 + average of dim(S(x)).
Rational inductive_dimension(const SimpleGraph& g);

// Result of checking whether G is a geometric graph of dimension d.
// Base case d=1: every unit sphere is exactly two isolated vertices.
// Recursive case: every S(x) has chi = 1-(-1)^d and is (d-1)-geometric.
// The empty graph passes vacuously at every d.
struct GeometricCheck {
    bool ok = false;
    int d = 0;
    VertexId offending_vertex = -1;  // -1 when ok
    std::string reason;
};

GeometricCheck is_geometric(const SimpleGraph& g, int d);

// Cone: one new apex adjacent to every old vertex.
SimpleGraph pyramid_extension(const SimpleGraph& g);

// Double cone: two new apexes adjacent to every old vertex, not to each other.
SimpleGraph suspension(const SimpleGraph& g);

// Cartesian-style product: (v1,w1)~(v2,w2) iff equal in one factor and
// adjacent in the other. Vertex (v,w) gets id v*|H|+w.
SimpleGraph graph_product(const SimpleGraph& g, const SimpleGraph& h);

// All chordless (induced) cycles of length min_len..max_len, each as a
// canonical closed walk starting at its minimal vertex.
std::vector<std::vector<VertexId>> chordless_cycles(const SimpleGraph& g, int min_len,
                                                    int max_len, long long limit = 1'000'000);

// Adds one center vertex per chordless cycle of length 4..max_len, adjacent
// to that cycle's vertices. Original edges are kept.
SimpleGraph stellate_cycles(const SimpleGraph& g, int max_len, long long cycle_limit = 1'000'000);

// --- generators ---

SimpleGraph cyclic_graph(int n);          // n >= 3
SimpleGraph complete_graph(int n);        // n >= 0
SimpleGraph path_graph(int n);            // n >= 1 vertices
SimpleGraph wheel_graph(int n);           // pyramid over C_n, n >= 3
SimpleGraph cross_polytope(int d);        // d >= 1; d+1 parts of size 2
SimpleGraph octahedron();                 // = cross_polytope(2)
SimpleGraph icosahedron();
SimpleGraph dodecahedron();
SimpleGraph cube_graph();                 // Q3
SimpleGraph erdos_renyi(int n, double p, std::uint64_t seed);

}  // namespace dgeo

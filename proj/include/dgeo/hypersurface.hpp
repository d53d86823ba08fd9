#pragma once

#include <optional>
#include <vector>

#include "dgeo/function.hpp"
#include "dgeo/graph.hpp"

namespace dgeo {

// Two-coloring of a host graph's vertices by the sign of f - c.
struct SignPartition {
    std::vector<signed char> sign;  // +1 or -1 per vertex

    long long plus_count() const {
        long long s = 0;
        for (auto v : sign) s += v > 0;
        return s;
    }
    long long minus_count() const { return (long long)sign.size() - plus_count(); }
};

SignPartition sign_partition(const SimpleGraph& g, const VertexFunction& f, const Rational& level);

// counts[k] = W_k, the number of mixed k-simplices (K_{k+1} cliques meeting
// both sides). counts[0] is always 0.
using WVector = std::vector<long long>;

// Splits of a clique across the partition: s = |clique ∩ V+|, t = |clique ∩ V-|.
struct MixedSimplex {
    Clique clique;
    int s = 0;
    int t = 0;
};

WVector mixed_simplices(const SimpleGraph& g, const SignPartition& p,
                        std::vector<MixedSimplex>* out = nullptr,
                        std::optional<int> max_dim = std::nullopt,
                        long long limit = kDefaultCliqueLimit);

// How a hypersurface vertex arose: a mixed edge of the host, or the center
// added for a mixed simplex during completion.
struct SurfaceVertex {
    bool is_center = false;
    std::vector<VertexId> host_vertices;  // the edge {u,v} or the simplex
};

// G_f: vertices are the host's mixed edges, edges its mixed triangles.
// Completion adds one center per mixed simplex with s,t >= 2, adjacent to the
// mixed-edge vertices inside it and to centers of nested mixed simplices.
struct HypersurfaceGraph {
    SimpleGraph graph;
    std::vector<SurfaceVertex> provenance;
    SimpleGraph host;
    SignPartition partition;
};

HypersurfaceGraph hypersurface_graph(const SimpleGraph& g, const SignPartition& p);
HypersurfaceGraph complete_hypersurface(const HypersurfaceGraph& h);

// A_f(x) (completed=false) or B_f(x) (completed=true): the hypersurface of
// S(x) under g(y) = f(y) - f(x). Requires f injective on the closed
// neighborhood of x.
HypersurfaceGraph sphere_hypersurface(const SimpleGraph& g, const VertexFunction& f, VertexId x,
                                      bool completed);

// W-vector of the sphere partition at x, i.e. mixed counts of S(x) under
// g(y) = f(y) - f(x).
WVector sphere_w_vector(const SimpleGraph& g, const VertexFunction& f, VertexId x);

}  // namespace dgeo

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "dgeo/errors.hpp"

namespace dgeo {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

// A clique given by its strictly increasing vertex list; dimension = size - 1.
using Clique = std::vector<VertexId>;

// f-vector: counts[k] is the number of K_{k+1} subgraphs.
using FVector = std::vector<long long>;

// Immutable simple graph over dense vertex ids [0, n). Neighbor lists are
// sorted, symmetric and loop-free by construction.
class SimpleGraph {
public:
    SimpleGraph() = default;

    static SimpleGraph from_edge_list(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return (int)adj_.size(); }
    long long edge_count() const { return edge_count_; }
    bool empty() const { return adj_.empty(); }

    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(v); }
    int degree(VertexId v) const { return (int)adj_.at(v).size(); }
    bool adjacent(VertexId u, VertexId v) const;

    std::vector<Edge> edges() const;

    bool operator==(const SimpleGraph& o) const { return adj_ == o.adj_; }

private:
    std::vector<std::vector<VertexId>> adj_;
    long long edge_count_ = 0;
};

// A derived graph together with the map from its dense ids back to host ids.
struct Subgraph {
    SimpleGraph graph;
    std::vector<VertexId> to_host;  // to_host[new id] = old id
};

Subgraph induced_subgraph(const SimpleGraph& g, const std::vector<VertexId>& vertices);
Subgraph unit_sphere(const SimpleGraph& g, VertexId x);

// Emits every nonempty complete subgraph exactly once, in lexicographic
// order of the (sorted) vertex lists. Throws enumeration_limit_error once
// more than `limit` cliques have been emitted.
inline constexpr long long kDefaultCliqueLimit = 100'000'000;

void enumerate_cliques(const SimpleGraph& g,
                       const std::function<void(const Clique&)>& emit,
                       std::optional<int> max_dim = std::nullopt,
                       long long limit = kDefaultCliqueLimit);

FVector f_vector(const SimpleGraph& g, long long limit = kDefaultCliqueLimit);

// chi(G) = sum (-1)^k v_k; 0 for the empty graph.
long long euler_characteristic(const SimpleGraph& g);

// [V_0(x), V_1(x), ...]: the f-vector of the unit sphere S(x).
FVector clique_degrees(const SimpleGraph& g, VertexId x);

std::vector<std::vector<VertexId>> connected_components(const SimpleGraph& g);

}  // namespace dgeo

#include "dgeo/graph.hpp"

#include <algorithm>
#include <string>

namespace dgeo {

SimpleGraph SimpleGraph::from_edge_list(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    SimpleGraph g;
    g.adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw input_error("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.edge_count_ += (long long)nbrs.size();
    }
    g.edge_count_ /= 2;
    return g;
}

bool SimpleGraph::adjacent(VertexId u, VertexId v) const {
    const auto& nbrs = adj_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    out.reserve((size_t)edge_count_);
    for (VertexId u = 0; u < vertex_count(); ++u)
        for (VertexId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Subgraph induced_subgraph(const SimpleGraph& g, const std::vector<VertexId>& vertices) {
    std::vector<VertexId> sel = vertices;
    std::sort(sel.begin(), sel.end());
    sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
    for (VertexId v : sel)
        if (v < 0 || v >= g.vertex_count())
            throw input_error("induced_subgraph: vertex " + std::to_string(v) + " out of range");

    std::vector<VertexId> to_new(g.vertex_count(), -1);
    for (size_t i = 0; i < sel.size(); ++i) to_new[sel[i]] = (VertexId)i;

    std::vector<Edge> edges;
    for (VertexId v : sel)
        for (VertexId w : g.neighbors(v))
            if (v < w && to_new[w] >= 0) edges.emplace_back(to_new[v], to_new[w]);

    return {SimpleGraph::from_edge_list((int)sel.size(), edges), std::move(sel)};
}

Subgraph unit_sphere(const SimpleGraph& g, VertexId x) {
    if (x < 0 || x >= g.vertex_count())
        throw input_error("unit_sphere: vertex " + std::to_string(x) + " out of range");
    return induced_subgraph(g, g.neighbors(x));
}

namespace {

// Candidate extension vertices are kept sorted and strictly above the last
// clique member, so each clique appears exactly once, lexicographically.
void extend_clique(const SimpleGraph& g, Clique& current, const std::vector<VertexId>& cands,
                   const std::function<void(const Clique&)>& emit,
                   std::optional<int> max_dim, long long limit, long long& emitted) {
    for (size_t i = 0; i < cands.size(); ++i) {
        VertexId v = cands[i];
        current.push_back(v);
        if (++emitted > limit)
            throw enumeration_limit_error("clique count exceeded limit of " + std::to_string(limit));
        emit(current);
        if (!max_dim || (int)current.size() - 1 < *max_dim) {
            std::vector<VertexId> next;
            for (size_t j = i + 1; j < cands.size(); ++j)
                if (g.adjacent(v, cands[j])) next.push_back(cands[j]);
            if (!next.empty())
                extend_clique(g, current, next, emit, max_dim, limit, emitted);
        }
        current.pop_back();
    }
}

}  // namespace

void enumerate_cliques(const SimpleGraph& g, const std::function<void(const Clique&)>& emit,
                       std::optional<int> max_dim, long long limit) {
    if (max_dim && *max_dim < 0) return;
    std::vector<VertexId> all(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
    Clique current;
    long long emitted = 0;
    extend_clique(g, current, all, emit, max_dim, limit, emitted);
}

FVector f_vector(const SimpleGraph& g, long long limit) {
    FVector counts;
    enumerate_cliques(g, [&](const Clique& c) {
        size_t k = c.size() - 1;
        if (counts.size() <= k) counts.resize(k + 1, 0);
        ++counts[k];
    }, std::nullopt, limit);
    return counts;
}

long long euler_characteristic(const SimpleGraph& g) {
    long long chi = 0;
    int sign = 1;
    for (long long vk : f_vector(g)) {
        chi += sign * vk;
        sign = -sign;
    }
    return chi;
}

FVector clique_degrees(const SimpleGraph& g, VertexId x) {
    return f_vector(unit_sphere(g, x).graph);
}

std::vector<std::vector<VertexId>> connected_components(const SimpleGraph& g) {
    std::vector<std::vector<VertexId>> comps;
    std::vector<bool> seen(g.vertex_count(), false);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<VertexId> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId w : g.neighbors(v))
                if (!seen[w]) { seen[w] = true; stack.push_back(w); }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace dgeo

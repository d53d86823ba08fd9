#include "dgeo/hypersurface.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <string>

namespace dgeo {

SignPartition sign_partition(const SimpleGraph& g, const VertexFunction& f,
                             const Rational& level) {
    if (f.size() != g.vertex_count())
        throw input_error("function size does not match graph order");
    SignPartition p;
    p.sign.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (f(v) == level)
            throw degenerate_level_error("f(" + std::to_string(v) + ") equals the level");
        p.sign[v] = f(v) > level ? 1 : -1;
    }
    return p;
}

WVector mixed_simplices(const SimpleGraph& g, const SignPartition& p,
                        std::vector<MixedSimplex>* out, std::optional<int> max_dim,
                        long long limit) {
    WVector w{0};
    enumerate_cliques(g, [&](const Clique& c) {
        int s = 0;
        for (VertexId v : c) s += p.sign[v] > 0;
        int t = (int)c.size() - s;
        if (s == 0 || t == 0) return;
        size_t k = c.size() - 1;
        if (w.size() <= k) w.resize(k + 1, 0);
        ++w[k];
        if (out) out->push_back({c, s, t});
    }, max_dim, limit);
    return w;
}

HypersurfaceGraph hypersurface_graph(const SimpleGraph& g, const SignPartition& p) {
    HypersurfaceGraph h;
    h.host = g;
    h.partition = p;

    std::map<Edge, VertexId> edge_index;
    for (const auto& [u, v] : g.edges())
        if (p.sign[u] != p.sign[v]) {
            VertexId id = (VertexId)h.provenance.size();
            edge_index[{u, v}] = id;
            h.provenance.push_back({false, {u, v}});
        }

    std::vector<Edge> surf_edges;
    enumerate_cliques(g, [&](const Clique& c) {
        if (c.size() != 3) return;
        std::vector<VertexId> mixed;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (p.sign[c[i]] != p.sign[c[j]])
                    mixed.push_back(edge_index.at({c[i], c[j]}));
        if (mixed.empty()) return;  // pure triangle
        assert(mixed.size() == 2);  // a mixed triangle has exactly two mixed edges
        surf_edges.emplace_back(mixed[0], mixed[1]);
    }, 2);

    h.graph = SimpleGraph::from_edge_list((int)h.provenance.size(), surf_edges);
    return h;
}

namespace {

// strict subset test on sorted vertex lists
bool strict_subset(const Clique& a, const Clique& b) {
    if (a.size() >= b.size()) return false;
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

HypersurfaceGraph complete_hypersurface(const HypersurfaceGraph& h) {
    std::vector<MixedSimplex> mixed;
    mixed_simplices(h.host, h.partition, &mixed);

    // centers already present (input was completed before) are not re-added
    std::set<Clique> existing;
    for (const auto& p : h.provenance)
        if (p.is_center) existing.insert(p.host_vertices);

    std::vector<const MixedSimplex*> centers;
    for (const auto& m : mixed)
        if (m.s >= 2 && m.t >= 2 && !existing.count(m.clique)) centers.push_back(&m);

    HypersurfaceGraph out;
    out.host = h.host;
    out.partition = h.partition;
    out.provenance = h.provenance;

    int base = h.graph.vertex_count();
    std::vector<Edge> edges = h.graph.edges();
    for (size_t i = 0; i < centers.size(); ++i) {
        VertexId cid = base + (VertexId)i;
        out.provenance.push_back({true, centers[i]->clique});
        for (VertexId e = 0; e < base; ++e)
            if (strict_subset(h.provenance[e].host_vertices, centers[i]->clique))
                edges.emplace_back(e, cid);
        for (size_t j = 0; j < i; ++j)
            if (strict_subset(centers[j]->clique, centers[i]->clique) ||
                strict_subset(centers[i]->clique, centers[j]->clique))
                edges.emplace_back(base + (VertexId)j, cid);
    }
    out.graph = SimpleGraph::from_edge_list(base + (int)centers.size(), edges);
    return out;
}

namespace {

// Restrict f to S(x) and cut at the level f(x).
std::pair<Subgraph, SignPartition> sphere_partition(const SimpleGraph& g, const VertexFunction& f,
                                                    VertexId x) {
    if (f.size() != g.vertex_count())
        throw input_error("function size does not match graph order");
    Subgraph sphere = unit_sphere(g, x);
    VertexFunction fs;
    fs.values.reserve(sphere.to_host.size());
    for (VertexId old : sphere.to_host) fs.values.push_back(f(old));
    for (size_t i = 0; i < fs.values.size(); ++i)
        for (size_t j = i + 1; j < fs.values.size(); ++j)
            if (fs.values[i] == fs.values[j])
                throw degenerate_level_error("f not injective on the closed neighborhood of " +
                                             std::to_string(x));
    return {sphere, sign_partition(sphere.graph, fs, f(x))};
}

}  // namespace

HypersurfaceGraph sphere_hypersurface(const SimpleGraph& g, const VertexFunction& f, VertexId x,
                                      bool completed) {
    auto [sphere, part] = sphere_partition(g, f, x);
    HypersurfaceGraph h = hypersurface_graph(sphere.graph, part);
    if (completed) h = complete_hypersurface(h);
    // report provenance in the host graph's ids, not sphere-local ones
    for (auto& pv : h.provenance)
        for (VertexId& v : pv.host_vertices) v = sphere.to_host[v];
    return h;
}

WVector sphere_w_vector(const SimpleGraph& g, const VertexFunction& f, VertexId x) {
    auto [sphere, part] = sphere_partition(g, f, x);
    return mixed_simplices(sphere.graph, part);
}

}  // namespace dgeo

#include "dgeo/geometry.hpp"

#include <algorithm>
#include <random>

namespace dgeo {

Rational inductive_dimension(const SimpleGraph& g) {
    if (g.empty()) return Rational(-1);
    Rational sum(0);
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        sum += inductive_dimension(unit_sphere(g, x).graph);
    return Rational(1) + sum / Rational(g.vertex_count());
}

namespace {

GeometricCheck fail(int d, VertexId x, std::string reason) {
    return {false, d, x, std::move(reason)};
}

}  // namespace

GeometricCheck is_geometric(const SimpleGraph& g, int d) {
    if (d < 1) return fail(d, -1, "dimension must be >= 1");
    if (g.empty()) return {true, d, -1, "empty graph (vacuous)"};
    long long want_chi = 1 - (d % 2 == 0 ? 1 : -1);
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        SimpleGraph s = unit_sphere(g, x).graph;
        if (d == 1) {
            if (s.vertex_count() != 2 || s.edge_count() != 0)
                return fail(d, x, "unit sphere is not two isolated vertices");
            continue;
        }
        if (s.empty())
            return fail(d, x, "isolated vertex in a graph claimed to be " + std::to_string(d) +
                               "-dimensional");
        long long chi = euler_characteristic(s);
        if (chi != want_chi)
            return fail(d, x, "chi(S(x)) = " + std::to_string(chi) + ", expected " +
                               std::to_string(want_chi));
        GeometricCheck sub = is_geometric(s, d - 1);
        if (!sub.ok)
            return fail(d, x, "S(x) not (" + std::to_string(d - 1) + ")-geometric: " + sub.reason);
    }
    return {true, d, -1, ""};
}

SimpleGraph pyramid_extension(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, n);
    return SimpleGraph::from_edge_list(n + 1, edges);
}

SimpleGraph suspension(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (VertexId v = 0; v < n; ++v) {
        edges.emplace_back(v, n);
        edges.emplace_back(v, n + 1);
    }
    return SimpleGraph::from_edge_list(n + 2, edges);
}

SimpleGraph graph_product(const SimpleGraph& g, const SimpleGraph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<Edge> edges;
    for (VertexId v = 0; v < ng; ++v)
        for (const auto& [w1, w2] : h.edges())
            edges.emplace_back(v * nh + w1, v * nh + w2);
    for (VertexId w = 0; w < nh; ++w)
        for (const auto& [v1, v2] : g.edges())
            edges.emplace_back(v1 * nh + w, v2 * nh + w);
    return SimpleGraph::from_edge_list(ng * nh, edges);
}

namespace {

// Path grows with all vertices > start; a new vertex may touch only the path
// tip, closing back to start is the only allowed second contact. Direction is
// fixed by path[1] < closing vertex.
void cycle_dfs(const SimpleGraph& g, std::vector<VertexId>& path, std::vector<bool>& on_path,
               int min_len, int max_len, long long limit,
               std::vector<std::vector<VertexId>>& out) {
    VertexId start = path.front();
    VertexId tip = path.back();
    for (VertexId w : g.neighbors(tip)) {
        if (w <= start || on_path[w]) continue;
        bool chord = false;
        for (size_t i = 1; i + 1 < path.size(); ++i)
            if (g.adjacent(w, path[i])) { chord = true; break; }
        if (chord) continue;
        if (path.size() == 1) {
            // first hop: the edge back to start is a cycle edge, not a chord
            path.push_back(w);
            on_path[w] = true;
            cycle_dfs(g, path, on_path, min_len, max_len, limit, out);
            on_path[w] = false;
            path.pop_back();
            continue;
        }
        if (g.adjacent(w, start)) {
            if ((int)path.size() + 1 >= min_len && path[1] < w) {
                if ((long long)out.size() >= limit)
                    throw enumeration_limit_error("chordless cycle count exceeded limit");
                auto cyc = path;
                cyc.push_back(w);
                out.push_back(std::move(cyc));
            }
            continue;  // any extension through w would carry the chord w~start
        }
        if ((int)path.size() + 1 < max_len) {
            path.push_back(w);
            on_path[w] = true;
            cycle_dfs(g, path, on_path, min_len, max_len, limit, out);
            on_path[w] = false;
            path.pop_back();
        }
    }
}

}  // namespace

std::vector<std::vector<VertexId>> chordless_cycles(const SimpleGraph& g, int min_len, int max_len,
                                                    long long limit) {
    std::vector<std::vector<VertexId>> out;
    if (max_len < min_len || max_len < 3) return out;
    std::vector<bool> on_path(g.vertex_count(), false);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        std::vector<VertexId> path{s};
        on_path[s] = true;
        cycle_dfs(g, path, on_path, min_len, max_len, limit, out);
        on_path[s] = false;
    }
    return out;
}

SimpleGraph stellate_cycles(const SimpleGraph& g, int max_len, long long cycle_limit) {
    auto cycles = chordless_cycles(g, 4, max_len, cycle_limit);
    int n = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (const auto& cyc : cycles) {
        for (VertexId v : cyc) edges.emplace_back(v, n);
        ++n;
    }
    return SimpleGraph::from_edge_list(n, edges);
}

SimpleGraph cyclic_graph(int n) {
    if (n < 3) throw input_error("cyclic: need n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return SimpleGraph::from_edge_list(n, edges);
}

SimpleGraph complete_graph(int n) {
    if (n < 0) throw input_error("complete: need n >= 0");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return SimpleGraph::from_edge_list(n, edges);
}

SimpleGraph path_graph(int n) {
    if (n < 1) throw input_error("path: need n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return SimpleGraph::from_edge_list(n, edges);
}

SimpleGraph wheel_graph(int n) {
    if (n < 3) throw input_error("wheel: need n >= 3");
    return pyramid_extension(cyclic_graph(n));
}

SimpleGraph cross_polytope(int d) {
    if (d < 1) throw input_error("cross-polytope: need d >= 1");
    // complete multipartite with d+1 parts {2i, 2i+1}
    int n = 2 * (d + 1);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u / 2 != v / 2) edges.emplace_back(u, v);
    return SimpleGraph::from_edge_list(n, edges);
}

SimpleGraph octahedron() { return cross_polytope(2); }

SimpleGraph icosahedron() {
    // apex 0, upper ring 1..5, lower ring 6..10, apex 11
    std::vector<Edge> edges;
    for (int k = 0; k < 5; ++k) {
        int u = 1 + k, un = 1 + (k + 1) % 5;
        int l = 6 + k, ln = 6 + (k + 1) % 5;
        edges.emplace_back(0, u);
        edges.emplace_back(u, un);
        edges.emplace_back(11, l);
        edges.emplace_back(l, ln);
        edges.emplace_back(u, l);
        edges.emplace_back(u, ln);
    }
    return SimpleGraph::from_edge_list(12, edges);
}

SimpleGraph dodecahedron() {
    // LCF notation [10,7,4,-4,-7,10,-4,7,-7,4]^2 over a 20-cycle
    static const int lcf[10] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
    std::vector<Edge> edges;
    for (int i = 0; i < 20; ++i) {
        edges.emplace_back(i, (i + 1) % 20);
        edges.emplace_back(i, ((i + lcf[i % 10]) % 20 + 20) % 20);
    }
    return SimpleGraph::from_edge_list(20, edges);
}

SimpleGraph cube_graph() {
    std::vector<Edge> edges;
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b)
            if (u < (u ^ (1 << b))) edges.emplace_back(u, u ^ (1 << b));
    return SimpleGraph::from_edge_list(8, edges);
}

SimpleGraph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw input_error("erdos_renyi: bad parameters");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double r = (double)(rng() >> 11) * 0x1.0p-53;
            if (r < p) edges.emplace_back(u, v);
        }
    return SimpleGraph::from_edge_list(n, edges);
}

}  // namespace dgeo

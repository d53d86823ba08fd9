#include "dgeo/isomorphism.hpp"

#include <algorithm>

namespace dgeo {

namespace {

bool extend(const SimpleGraph& g, const SimpleGraph& h, std::vector<VertexId>& map,
            std::vector<bool>& used, VertexId next) {
    int n = g.vertex_count();
    if (next == n) return true;
    for (VertexId cand = 0; cand < n; ++cand) {
        if (used[cand] || h.degree(cand) != g.degree(next)) continue;
        bool ok = true;
        for (VertexId prev = 0; prev < next; ++prev)
            if (g.adjacent(next, prev) != h.adjacent(cand, map[prev])) { ok = false; break; }
        if (!ok) continue;
        map[next] = cand;
        used[cand] = true;
        if (extend(g, h, map, used, next + 1)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace

bool isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg, dh;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    std::vector<VertexId> map(g.vertex_count(), -1);
    std::vector<bool> used(g.vertex_count(), false);
    return extend(g, h, map, used, 0);
}

}  // namespace dgeo

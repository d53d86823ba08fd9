#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "dgeo/geometry.hpp"
#include "dgeo/morse.hpp"
#include "oracles.hpp"

using namespace dgeo;

namespace {

VertexFunction perm_function(const std::vector<int>& ranks) { return ranking_function(ranks); }

// Independent oracle: average i_f(x) over all (deg+1)! relative orderings of
// the closed neighborhood, enumerated explicitly.
Rational expectation_by_full_enumeration(const SimpleGraph& g, VertexId x) {
    Subgraph sphere = unit_sphere(g, x);
    int deg = g.degree(x);
    std::vector<int> order(deg + 1);
    for (int i = 0; i <= deg; ++i) order[i] = i;
    long long total = 0, count = 0;
    do {
        // order[i] is the rank of element i; element deg stands for x
        std::vector<VertexId> below;
        for (int i = 0; i < deg; ++i)
            if (order[i] < order[deg]) below.push_back(i);
        total += 1 - euler_characteristic(induced_subgraph(sphere.graph, below).graph);
        ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    return Rational(total, count);
}

}  // namespace

TEST_CASE("sub-level spheres") {
    auto p4 = path_graph(4);
    auto inc = perm_function({0, 1, 2, 3});
    CHECK(sub_level_sphere(p4, inc, 0, -1).graph.empty());
    CHECK(sub_level_sphere(p4, inc, 3, -1).graph.vertex_count() == 1);
    CHECK(sub_level_sphere(p4, inc, 3, +1).graph.empty());

    // octahedron pairs {0,1},{2,3},{4,5}; at x=3 (rank 3) the below part of
    // S(3)={0,1,4,5} is {0,4}, an edge
    auto oct = octahedron();
    auto f = perm_function({0, 4, 2, 3, 1, 5});
    auto below = sub_level_sphere(oct, f, 3, -1);
    CHECK(below.graph.vertex_count() == 2);
    CHECK(below.graph.edge_count() == 1);
}

TEST_CASE("morse index basics") {
    auto c6 = cyclic_graph(6);
    auto f = perm_function({0, 2, 4, 5, 3, 1});
    CHECK(morse_index(c6, f, 0) == 1);   // global minimum
    CHECK(morse_index(c6, f, 3) == -1);  // local maximum: two below-neighbors
    long long sum = 0;
    for (VertexId x = 0; x < 6; ++x) sum += morse_index(c6, f, x);
    CHECK(sum == 0);

    // saddle on the octahedron: alternating signs around the C_4 sphere
    auto oct = octahedron();
    auto saddle = perm_function({4, 0, 5, 1, 3, 2});
    // S(0) = {2,3,4,5} is a C_4 (2-3 and 4-5 are the nonedges); ranks 5,1,3,2:
    // below = {3,5} which are adjacent? no: 3 and 5 lie in different pairs, so
    // they are adjacent in the octahedron. Pick below = the nonedge pair.
    CHECK(symmetric_index(oct, perm_function({5, 0, 4, 1, 3, 2}), 0) ==
          symmetric_index(oct, perm_function({5, 0, 4, 1, 3, 2}).negated(), 0));
}

TEST_CASE("symmetric index values") {
    auto k2 = complete_graph(2);
    auto f = perm_function({0, 1});
    CHECK(symmetric_index(k2, f, 0) == Rational(1, 2));
    CHECK(symmetric_index(k2, f, 1) == Rational(1, 2));

    // x with S(x) = C_4 split alternately: i_f = i_{-f} = -1
    auto w4 = wheel_graph(4);  // rim 0..3, hub 4
    auto alt = perm_function({0, 3, 1, 4, 2});
    CHECK(morse_index(w4, alt, 4) == -1);
    CHECK(symmetric_index(w4, alt, 4) == Rational(-1));

    auto cp3 = cross_polytope(3);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        VertexFunction rf = random_vertex_function(8, rng);
        for (VertexId x = 0; x < 8; ++x)
            CHECK(symmetric_index(cp3, rf, x) == Rational(0));
    }
}

TEST_CASE("indices depend only on the ordering of f") {
    auto ico = icosahedron();
    std::mt19937_64 rng(19);
    VertexFunction f = random_vertex_function(12, rng);
    VertexFunction scaled;
    for (const auto& v : f.values) scaled.values.push_back(v * Rational(7) + Rational(3, 2));
    for (VertexId x = 0; x < 12; ++x)
        CHECK(morse_index(ico, f, x) == morse_index(ico, scaled, x));
}

TEST_CASE("curvature") {
    CHECK(curvature(cross_polytope(3), 0) == Rational(0));
    CHECK(curvature(icosahedron(), 5) == Rational(1, 6));
    auto isolated = SimpleGraph::from_edge_list(1, {});
    CHECK(curvature(isolated, 0) == Rational(1));
    for (VertexId x = 0; x < 6; ++x) CHECK(curvature(octahedron(), x) == Rational(1, 3));
}

TEST_CASE("gauss-bonnet") {
    CHECK(verify_gauss_bonnet(icosahedron()).pass);
    CHECK(verify_gauss_bonnet(cross_polytope(5)).pass);
    CHECK(verify_gauss_bonnet(dodecahedron()).pass);
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial)
        CHECK(verify_gauss_bonnet(erdos_renyi(15, 0.3, rng())).pass);
}

TEST_CASE("poincare-hopf") {
    auto p5 = path_graph(5);
    CHECK(verify_poincare_hopf(p5, perm_function({0, 1, 2, 3, 4})).pass);

    // exhaustive over all orderings of C_5 and C_6
    for (int n = 5; n <= 6; ++n) {
        auto cn = cyclic_graph(n);
        std::vector<int> ranks(n);
        for (int i = 0; i < n; ++i) ranks[i] = i;
        do {
            long long sum = 0;
            auto f = perm_function(ranks);
            for (VertexId x = 0; x < n; ++x) sum += morse_index(cn, f, x);
            CHECK(sum == 0);
        } while (std::next_permutation(ranks.begin(), ranks.end()));
    }

    auto cp3 = cross_polytope(3);
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; ++trial)
        CHECK(verify_poincare_hopf(cp3, random_vertex_function(8, rng)).pass);
}

TEST_CASE("index formula on known graphs and random graphs") {
    auto k2 = complete_graph(2);
    CHECK(verify_index_formula(k2, perm_function({0, 1})).pass);

    auto cp3 = cross_polytope(3);
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 10; ++trial)
        CHECK(verify_index_formula(cp3, random_vertex_function(8, rng)).pass);

    for (int trial = 0; trial < 20; ++trial) {
        auto g = erdos_renyi(12, 0.4, rng());
        CHECK(verify_index_formula(g, random_vertex_function(12, rng)).pass);
    }
}

TEST_CASE("V_k decomposition into W_k and one-sided counts") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = erdos_renyi(12, 0.45, rng());
        VertexFunction f = random_vertex_function(12, rng);
        for (VertexId x = 0; x < 12; ++x) {
            FVector vx = clique_degrees(g, x);
            WVector w = sphere_w_vector(g, f, x);
            FVector below = f_vector(sub_level_sphere(g, f, x, -1).graph);
            FVector above = f_vector(sub_level_sphere(g, f, x, +1).graph);
            for (size_t k = 0; k < vx.size(); ++k) {
                long long wk = k < w.size() ? w[k] : 0;
                long long bk = k < below.size() ? below[k] : 0;
                long long ak = k < above.size() ? above[k] : 0;
                CHECK(vx[k] == wk + bk + ak);
            }
        }
    }
}

TEST_CASE("transfer and intermediate verifiers") {
    CHECK(verify_transfer(octahedron()).pass);
    CHECK(verify_transfer(cross_polytope(4)).pass);

    auto k5 = complete_graph(5);
    auto f = perm_function({3, 1, 4, 0, 2});
    auto rep = verify_intermediate(k5, f);
    CHECK(rep.pass);
    // triangle-free: sum_x W_1(x) = 1 * v_2 = 0
    CHECK(verify_intermediate(cyclic_graph(8), perm_function({4, 2, 7, 0, 5, 1, 6, 3})).pass);

    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = erdos_renyi(13, 0.4, rng());
        CHECK(verify_transfer(g).pass);
        CHECK(verify_intermediate(g, random_vertex_function(13, rng)).pass);
    }
}

TEST_CASE("index stability") {
    std::mt19937_64 rng(67);
    auto g = erdos_renyi(14, 0.35, rng());
    for (int trial = 0; trial < 50; ++trial)
        CHECK(verify_index_stability(g, random_vertex_function(14, rng),
                                     random_vertex_function(14, rng))
                  .pass);
}

TEST_CASE("zero curvature verifier") {
    std::mt19937_64 rng(71);
    std::vector<VertexFunction> fs;
    for (int i = 0; i < 5; ++i) fs.push_back(random_vertex_function(8, rng));
    CHECK(verify_zero_curvature(cross_polytope(3), 3, fs).pass);

    // even dimension rejected up front
    CHECK_FALSE(verify_zero_curvature(octahedron(), 2, {}).pass);
    // non-geometric input rejected up front
    CHECK_FALSE(verify_zero_curvature(complete_graph(4), 3, {}).pass);
}

TEST_CASE("exact index expectation equals curvature") {
    auto ico = icosahedron();
    for (VertexId x = 0; x < 12; ++x)
        CHECK(index_expectation_exact(ico, x) == Rational(1, 6));
    auto cp3 = cross_polytope(3);
    for (VertexId x = 0; x < 8; ++x)
        CHECK(index_expectation_exact(cp3, x) == Rational(0));
    std::mt19937_64 rng(73);
    int tested = 0;
    while (tested < 10) {
        auto g = erdos_renyi(10, 0.4, rng());
        int maxdeg = 0;
        for (VertexId v = 0; v < 10; ++v) maxdeg = std::max(maxdeg, g.degree(v));
        if (maxdeg > 8) continue;
        ++tested;
        for (VertexId x = 0; x < 10; ++x)
            CHECK(index_expectation_exact(g, x) == curvature(g, x));
    }
}

TEST_CASE("rank-weight fast path agrees with the full-enumeration oracle") {
    std::mt19937_64 rng(79);
    int tested = 0;
    while (tested < 6) {
        auto g = erdos_renyi(9, 0.4, rng());
        int maxdeg = 0;
        for (VertexId v = 0; v < 9; ++v) maxdeg = std::max(maxdeg, g.degree(v));
        if (maxdeg > 6) continue;
        ++tested;
        for (VertexId x = 0; x < 9; ++x)
            CHECK(index_expectation_exact(g, x) == expectation_by_full_enumeration(g, x));
    }
    for (VertexId x = 0; x < 6; ++x)
        CHECK(index_expectation_exact(octahedron(), x) ==
              expectation_by_full_enumeration(octahedron(), x));
}

TEST_CASE("degree guard on exact expectation") {
    CHECK_THROWS_AS(index_expectation_exact(complete_graph(11), 0), input_error);
}

TEST_CASE("monte carlo expectation is reproducible and consistent") {
    auto ico = icosahedron();
    auto a = index_expectation_monte_carlo(ico, 0, 20000, 12345);
    auto b = index_expectation_monte_carlo(ico, 0, 20000, 12345);
    CHECK(a.mean == b.mean);
    CHECK(std::abs(a.mean - 1.0 / 6.0) < 4.0 * a.stderr_ + 1e-12);

    std::mt19937_64 rng(83);
    auto g = erdos_renyi(15, 0.3, rng());
    for (VertexId x = 0; x < 15; x += 3) {
        auto e = index_expectation_monte_carlo(g, x, 100000, 999 + x);
        CHECK(std::abs(e.mean - curvature(g, x).to_double()) < 4.0 * e.stderr_ + 1e-12);
    }
}

TEST_CASE("analyze_vertex ties the report fields together") {
    auto oct = octahedron();
    std::mt19937_64 rng(89);
    VertexFunction f = random_vertex_function(6, rng);
    for (VertexId x = 0; x < 6; ++x) {
        auto r = analyze_vertex(oct, f, x);
        CHECK(r.j == Rational(r.index_f + r.index_neg_f, 2));
        CHECK(r.k == Rational(1, 3));
        // even-dimensional formula: j = 1 - chi(B)/2
        CHECK(r.j == Rational(1) - Rational(r.chi_b, 2));
    }
}

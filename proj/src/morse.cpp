#include "dgeo/morse.hpp"

#include <algorithm>
#include <cmath>

#include "dgeo/geometry.hpp"

namespace dgeo {

Subgraph sub_level_sphere(const SimpleGraph& g, const VertexFunction& f, VertexId x, int sign) {
    if (f.size() != g.vertex_count())
        throw input_error("function size does not match graph order");
    std::vector<VertexId> keep;
    for (VertexId y : g.neighbors(x)) {
        if (f(y) == f(x))
            throw degenerate_level_error("f not injective on the closed neighborhood");
        if ((sign < 0) ? (f(y) < f(x)) : (f(y) > f(x))) keep.push_back(y);
    }
    return induced_subgraph(g, keep);
}

long long morse_index(const SimpleGraph& g, const VertexFunction& f, VertexId x) {
    return 1 - euler_characteristic(sub_level_sphere(g, f, x, -1).graph);
}

Rational symmetric_index(const SimpleGraph& g, const VertexFunction& f, VertexId x) {
    return Rational(morse_index(g, f, x) + morse_index(g, f.negated(), x), 2);
}

Rational curvature(const SimpleGraph& g, VertexId x) {
    FVector v = clique_degrees(g, x);
    Rational k(1);  // V_{-1}(x)/1
    int sign = -1;
    for (size_t i = 0; i < v.size(); ++i) {
        k += Rational(sign * v[i], (long long)i + 2);
        sign = -sign;
    }
    return k;
}

VertexReport analyze_vertex(const SimpleGraph& g, const VertexFunction& f, VertexId x) {
    VertexReport r;
    r.vertex = x;
    r.index_f = morse_index(g, f, x);
    r.index_neg_f = morse_index(g, f.negated(), x);
    r.j = Rational(r.index_f + r.index_neg_f, 2);
    r.w = sphere_w_vector(g, f, x);
    r.chi_b = euler_characteristic(sphere_hypersurface(g, f, x, true).graph);
    r.k = curvature(g, x);
    return r;
}

void Report::record(std::string context, std::string lhs, std::string rhs, bool ok,
                    bool keep_passing) {
    if (!ok) pass = false;
    if (!ok || keep_passing)
        details.push_back({std::move(context), std::move(lhs), std::move(rhs), ok});
}

Report verify_gauss_bonnet(const SimpleGraph& g) {
    Report r{"gauss-bonnet"};
    Rational sum(0);
    for (VertexId x = 0; x < g.vertex_count(); ++x) sum += curvature(g, x);
    Rational chi(euler_characteristic(g));
    r.record("sum_x K(x) vs chi(G)", sum.str(), chi.str(), sum == chi, true);
    return r;
}

Report verify_poincare_hopf(const SimpleGraph& g, const VertexFunction& f) {
    Report r{"poincare-hopf"};
    long long sum = 0;
    for (VertexId x = 0; x < g.vertex_count(); ++x) sum += morse_index(g, f, x);
    long long chi = euler_characteristic(g);
    r.record("sum_x i_f(x) vs chi(G)", std::to_string(sum), std::to_string(chi), sum == chi, true);
    return r;
}

namespace {

long long alternating_w_sum(const WVector& w) {
    long long s = 0;
    int sign = 1;
    for (size_t k = 1; k < w.size(); ++k) {
        s += sign * w[k];
        sign = -sign;
    }
    return s;  // W_1 - W_2 + W_3 - ...
}

}  // namespace

Report verify_index_formula(const SimpleGraph& g, const VertexFunction& f) {
    Report r{"index-formula"};
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        VertexReport v = analyze_vertex(g, f, x);
        long long chi_s = euler_characteristic(unit_sphere(g, x).graph);
        Rational rhs = Rational(2 - chi_s - v.chi_b, 2);
        r.record("vertex " + std::to_string(x) + ": j_f vs (2-chi(S)-chi(B))/2",
                 v.j.str(), rhs.str(), v.j == rhs);
        long long wsum = alternating_w_sum(v.w);
        r.record("vertex " + std::to_string(x) + ": chi(B) vs W_1-W_2+...",
                 std::to_string(v.chi_b), std::to_string(wsum), v.chi_b == wsum);
    }
    r.record("all vertices", "ok", "ok", r.pass, true);
    return r;
}

Report verify_transfer(const SimpleGraph& g) {
    Report r{"transfer"};
    FVector v = f_vector(g);
    std::vector<long long> sums(v.size() + 1, 0);  // sums[k] = sum_x V_{k-1}(x)
    sums[0] = g.vertex_count();                    // V_{-1}(x) = 1
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        FVector vx = clique_degrees(g, x);
        for (size_t i = 0; i < vx.size() && i + 1 < sums.size(); ++i) sums[i + 1] += vx[i];
    }
    for (size_t k = 0; k < v.size(); ++k)
        r.record("k=" + std::to_string(k) + ": sum_x V_{k-1}(x) vs (k+1) v_k",
                 std::to_string(sums[k]), std::to_string((long long)(k + 1) * v[k]),
                 sums[k] == (long long)(k + 1) * v[k], true);
    return r;
}

Report verify_intermediate(const SimpleGraph& g, const VertexFunction& f) {
    Report r{"intermediate"};
    FVector v = f_vector(g);
    std::vector<long long> sums(v.size(), 0);  // sums[k] = sum_x W_k(x)
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        WVector w = sphere_w_vector(g, f, x);
        for (size_t k = 1; k < w.size() && k < sums.size(); ++k) sums[k] += w[k];
    }
    for (size_t k = 1; k + 1 < v.size() + 1 && k < sums.size(); ++k) {
        long long rhs = k + 1 < v.size() ? (long long)k * v[k + 1] : 0;
        r.record("k=" + std::to_string(k) + ": sum_x W_k(x) vs k v_{k+1}",
                 std::to_string(sums[k]), std::to_string(rhs), sums[k] == rhs, true);
    }
    return r;
}

Report verify_index_stability(const SimpleGraph& g, const VertexFunction& f,
                              const VertexFunction& f2) {
    Report r{"index-stability"};
    long long a = 0, b = 0;
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        a += morse_index(g, f, x);
        b += morse_index(g, f2, x);
    }
    r.record("sum_x i_f(x) vs sum_x i_g(x)", std::to_string(a), std::to_string(b), a == b, true);
    return r;
}

Report verify_zero_curvature(const SimpleGraph& g, int d,
                             const std::vector<VertexFunction>& functions) {
    Report r{"zero-curvature"};
    if (d % 2 == 0) {
        r.record("precondition", "d=" + std::to_string(d), "odd dimension", false);
        return r;
    }
    GeometricCheck geo = is_geometric(g, d);
    if (!geo.ok) {
        r.record("precondition: is_geometric(G," + std::to_string(d) + ")", geo.reason, "valid",
                 false);
        return r;
    }
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        Rational k = curvature(g, x);
        r.record("vertex " + std::to_string(x) + ": K(x)", k.str(), "0", k == Rational(0));
    }
    long long chi = euler_characteristic(g);
    r.record("chi(G)", std::to_string(chi), "0", chi == 0, true);
    for (size_t i = 0; i < functions.size(); ++i)
        for (VertexId x = 0; x < g.vertex_count(); ++x) {
            Rational j = symmetric_index(g, functions[i], x);
            r.record("f#" + std::to_string(i) + " vertex " + std::to_string(x) + ": j_f(x)",
                     j.str(), "0", j == Rational(0));
        }
    r.record("all checks", "ok", "ok", r.pass, true);
    return r;
}

namespace {

Rational factorial(int n) {
    Rational f(1);
    for (int i = 2; i <= n; ++i) f *= Rational(i);
    return f;
}

}  // namespace

Rational index_expectation_exact(const SimpleGraph& g, VertexId x, int degree_limit) {
    int deg = g.degree(x);
    if (deg > degree_limit)
        throw input_error("degree " + std::to_string(deg) + " above exact bound " +
                          std::to_string(degree_limit) + "; use monte-carlo");
    Subgraph sphere = unit_sphere(g, x);
    Rational denom = factorial(deg + 1);
    Rational expect(0);
    for (unsigned mask = 0; mask < (1u << deg); ++mask) {
        std::vector<VertexId> below;
        for (int i = 0; i < deg; ++i)
            if (mask & (1u << i)) below.push_back(i);
        long long chi = euler_characteristic(induced_subgraph(sphere.graph, below).graph);
        Rational weight = factorial((int)below.size()) * factorial(deg - (int)below.size()) / denom;
        expect += weight * Rational(1 - chi);
    }
    return expect;
}

MonteCarloEstimate index_expectation_monte_carlo(const SimpleGraph& g, VertexId x,
                                                 long long trials, std::uint64_t seed) {
    if (trials <= 1) throw input_error("monte-carlo needs at least 2 trials");
    Subgraph sphere = unit_sphere(g, x);
    int deg = g.degree(x);
    std::mt19937_64 rng(seed);
    double sum = 0.0, sumsq = 0.0;
    for (long long t = 0; t < trials; ++t) {
        // random ordering of B_1(x): ranks for the deg neighbors plus x
        VertexFunction f = random_vertex_function(deg + 1, rng);
        std::vector<VertexId> below;
        for (int i = 0; i < deg; ++i)
            if (f(i) < f(deg)) below.push_back(i);
        double i_f = 1.0 - (double)euler_characteristic(induced_subgraph(sphere.graph, below).graph);
        sum += i_f;
        sumsq += i_f * i_f;
    }
    MonteCarloEstimate e;
    e.trials = trials;
    e.seed = seed;
    e.mean = sum / (double)trials;
    double var = (sumsq - sum * sum / (double)trials) / (double)(trials - 1);
    e.stderr_ = std::sqrt(std::max(0.0, var) / (double)trials);
    return e;
}

}  // namespace dgeo

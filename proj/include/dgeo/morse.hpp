#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dgeo/function.hpp"
#include "dgeo/graph.hpp"
#include "dgeo/hypersurface.hpp"
#include "dgeo/rational.hpp"

namespace dgeo {

// Below-sphere S^-_f(x) (sign < 0) or above-sphere S^+_f(x) (sign > 0).
Subgraph sub_level_sphere(const SimpleGraph& g, const VertexFunction& f, VertexId x, int sign);

// i_f(x) = 1 - chi(S^-_f(x))
long long morse_index(const SimpleGraph& g, const VertexFunction& f, VertexId x);

// j_f(x) = (i_f(x) + i_{-f}(x)) / 2
Rational symmetric_index(const SimpleGraph& g, const VertexFunction& f, VertexId x);

// K(x) = sum_k (-1)^k V_{k-1}(x) / (k+1), with V_{-1}(x) = 1
Rational curvature(const SimpleGraph& g, VertexId x);

// Per-vertex summary of every quantity the identities relate.
struct VertexReport {
    VertexId vertex = -1;
    long long index_f = 0;
    long long index_neg_f = 0;
    Rational j;
    WVector w;            // mixed counts in S(x)
    long long chi_b = 0;  // chi(B_f(x))
    Rational k;
};

VertexReport analyze_vertex(const SimpleGraph& g, const VertexFunction& f, VertexId x);

// One verified (in)equality; lhs/rhs are exact values rendered as strings.
struct CheckDetail {
    std::string context;
    std::string lhs;
    std::string rhs;
    bool ok = true;
};

struct Report {
    std::string check;
    bool pass = true;
    std::vector<CheckDetail> details;

    void record(std::string context, std::string lhs, std::string rhs, bool ok,
                bool keep_passing = false);
};

Report verify_gauss_bonnet(const SimpleGraph& g);
Report verify_poincare_hopf(const SimpleGraph& g, const VertexFunction& f);

// Thm route j = (2 - chi(S) - chi(B))/2 plus the counting route
// chi(B) = W_1 - W_2 + W_3 - ..., per vertex.
Report verify_index_formula(const SimpleGraph& g, const VertexFunction& f);

Report verify_transfer(const SimpleGraph& g);
Report verify_intermediate(const SimpleGraph& g, const VertexFunction& f);
Report verify_index_stability(const SimpleGraph& g, const VertexFunction& f,
                              const VertexFunction& f2);

// Requires is_geometric(g, d) with d odd; then checks K == 0 everywhere,
// chi(G) == 0, and j_f == 0 for each supplied function.
Report verify_zero_curvature(const SimpleGraph& g, int d,
                             const std::vector<VertexFunction>& functions);

inline constexpr int kExactExpectationDegreeLimit = 8;

// E[i_f(x)] over uniform random orderings of B_1(x), computed exactly by
// weighting each below-set A of S(x) with |A|! (deg-|A|)! / (deg+1)!.
Rational index_expectation_exact(const SimpleGraph& g, VertexId x,
                                 int degree_limit = kExactExpectationDegreeLimit);

struct MonteCarloEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    long long trials = 0;
    std::uint64_t seed = 0;
};

MonteCarloEstimate index_expectation_monte_carlo(const SimpleGraph& g, VertexId x,
                                                 long long trials, std::uint64_t seed);

}  // namespace dgeo

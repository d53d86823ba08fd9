#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dgeo/errors.hpp"
#include "dgeo/rational.hpp"

namespace dgeo {

// Injective vertex function with exact values. Only the induced ordering
// matters for indices; random functions are uniform random rankings.
struct VertexFunction {
    std::vector<Rational> values;

    int size() const { return (int)values.size(); }
    const Rational& operator()(int v) const { return values.at(v); }

    VertexFunction negated() const {
        VertexFunction g;
        g.values.reserve(values.size());
        for (const auto& r : values) g.values.push_back(-r);
        return g;
    }

    bool injective() const;
};

// Values are the permutation ranks 0..n-1, shuffled by Fisher-Yates with
// rejection-free bounded draws so runs reproduce across platforms.
VertexFunction random_vertex_function(int n, std::mt19937_64& rng);

VertexFunction ranking_function(const std::vector<int>& ranks);

}  // namespace dgeo

#include "dgeo/function.hpp"

#include <algorithm>

namespace dgeo {

bool VertexFunction::injective() const {
    auto sorted = values;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

namespace {

// Uniform in [0, bound) by multiply-shift; bias is < 2^-64 per draw and the
// result is identical on every platform, unlike uniform_int_distribution.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    return (std::uint64_t)(((__uint128_t)rng() * bound) >> 64);
}

}  // namespace

VertexFunction random_vertex_function(int n, std::mt19937_64& rng) {
    std::vector<int> ranks(n);
    for (int i = 0; i < n; ++i) ranks[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(ranks[i], ranks[bounded(rng, (std::uint64_t)i + 1)]);
    return ranking_function(ranks);
}

VertexFunction ranking_function(const std::vector<int>& ranks) {
    VertexFunction f;
    f.values.reserve(ranks.size());
    for (int r : ranks) f.values.push_back(Rational(r));
    if (!f.injective()) throw input_error("vertex function must be injective");
    return f;
}

}  // namespace dgeo

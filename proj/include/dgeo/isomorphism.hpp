#pragma once

#include "dgeo/graph.hpp"

namespace dgeo {

// Brute-force isomorphism test with degree pruning; intended for the small
// graphs (order <= ~12) that appear in the verification surface.
bool isomorphic(const SimpleGraph& g, const SimpleGraph& h);

}  // namespace dgeo

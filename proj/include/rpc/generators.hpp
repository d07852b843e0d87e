// Instance generators. Deterministic for a fixed seed across platforms:
// randomness goes through local helpers over std::mt19937_64 rather than
// distribution objects, whose output the standard leaves unspecified.
#pragma once

#include <cstdint>

#include "rpc/graph.hpp"

namespace rpc {

// Complete graph where c(uv) = c(xy) forces {u,v} = {x,y}. In a complete
// graph any two edges lie at distance <= 1, so properness alone already
// forces all colors distinct; this is the unique strong coloring shape.
ColoredGraph rainbow_complete(int n);

// Random graph on n vertices targeting minimum degree >= target, then
// greedily strong-colored. target must satisfy 0 <= target < n. The result
// is always strongly colored; the degree target is met by augmentation.
ColoredGraph random_strong(int n, int target, std::uint64_t seed);

// A single cycle v0 v1 ... v_{l-1}, greedily strong-colored in natural edge
// order.
ColoredGraph cycle_instance(int l);

}  // namespace rpc

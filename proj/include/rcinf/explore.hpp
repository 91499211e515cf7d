#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "rcinf/forward.hpp"
#include "rcinf/reverse.hpp"

namespace rcinf {

/// Visits every exponent triangle of rank n with entries in 0..bound, in lexicographic order of
/// the entries taken column by column.
void for_each_forward(int n, int bound, const std::function<void(const ForwardExponents&)>& visit);
void for_each_reverse(int n, int bound, const std::function<void(const ReverseExponents&)>& visit);

struct CrystalEdge {
    std::size_t from;
    std::size_t to;
    int i;
};

/// Part of the crystal graph reachable from the highest weight element in at most `depth` steps.
/// Nodes are in breadth-first discovery order (children by increasing i), keyed by to_string;
/// edges leave only nodes at distance < depth.
struct CrystalGraph {
    std::vector<RiggedConfiguration> nodes;
    std::vector<int> distance;
    std::vector<CrystalEdge> edges;
};

CrystalGraph explore(int n, int depth);

} // namespace rcinf

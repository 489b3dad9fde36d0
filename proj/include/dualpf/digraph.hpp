#pragma once

#include <vector>

namespace dualpf {

/// Tarjan's algorithm over an adjacency list. Components are returned in
/// reverse topological order of the condensation.
std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& successors);

bool is_strongly_connected(const std::vector<std::vector<int>>& successors);

}  // namespace dualpf

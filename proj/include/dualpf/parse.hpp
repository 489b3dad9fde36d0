#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "dualpf/hypergraph.hpp"

namespace dualpf {

// Text format: one edge per line, whitespace-separated 1-based vertex ids,
// '#' starts a comment, blank lines are skipped. Perturbation lines may end
// with a `w=<real>` token (default weight 1).

struct ParseOptions {
  /// Vertex count; defaults to the largest id seen.
  std::optional<int> num_vertices;
  /// Required when the input has no edges; otherwise checked against the first edge.
  std::optional<int> uniformity;
};

Hypergraph parse_hypergraph(std::string_view text, const ParseOptions& opts = {});
Perturbation parse_perturbation(std::string_view text);

/// Single edge given as "v1,v2,...[,w=W]" (1-based ids).
Perturbation parse_edge_spec(std::string_view spec);

Hypergraph read_hypergraph(const std::filesystem::path& path, const ParseOptions& opts = {});
Perturbation read_perturbation(const std::filesystem::path& path);

std::string format_hypergraph(const Hypergraph& h);
std::string format_perturbation(const Perturbation& p);

}  // namespace dualpf

#include "dualpf/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "dualpf/error.hpp"

namespace dualpf {

namespace {

struct RawEdge {
  std::size_t line;
  Edge vertices;
  double weight;
};

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

int parse_vertex(std::string_view tok, std::size_t line) {
  long long id = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "malformed vertex id '" + std::string(tok) + "'");
  }
  if (id < 1) throw ParseError(line, "vertex id " + std::string(tok) + " is below 1");
  if (id > 1'000'000'000) throw ParseError(line, "vertex id " + std::string(tok) + " too large");
  return static_cast<int>(id - 1);
}

double parse_weight(std::string_view tok, std::size_t line) {
  std::string body(tok.substr(2));
  std::size_t used = 0;
  double w = 0.0;
  try {
    w = std::stod(body, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (body.empty() || used != body.size() || !std::isfinite(w)) {
    throw ParseError(line, "malformed weight '" + std::string(tok) + "'");
  }
  return w;
}

// Shared line reader; weights are only accepted when `weighted`.
std::vector<RawEdge> read_edges(std::string_view text, bool weighted) {
  std::vector<RawEdge> edges;
  std::size_t line_no = 0;
  std::size_t uniformity = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }

    RawEdge raw{line_no, {}, 1.0};
    if (tokens.back().starts_with("w=")) {
      if (!weighted) throw ParseError(line_no, "weights are not allowed in a hypergraph file");
      raw.weight = parse_weight(tokens.back(), line_no);
      tokens.pop_back();
    }
    for (auto tok : tokens) raw.vertices.push_back(parse_vertex(tok, line_no));
    if (raw.vertices.size() < 2) throw ParseError(line_no, "edge needs at least 2 vertices");

    Edge sorted = raw.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
      throw ParseError(line_no, "repeated vertex " + std::to_string(*dup + 1) + " in edge");
    }
    if (uniformity == 0) {
      uniformity = sorted.size();
    } else if (sorted.size() != uniformity) {
      throw ParseError(line_no, "non-uniform edge: expected " + std::to_string(uniformity) +
                                    " vertices, found " + std::to_string(sorted.size()));
    }
    raw.vertices = std::move(sorted);
    edges.push_back(std::move(raw));
    if (end == text.size()) break;
  }
  return edges;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join_edge(const Edge& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(e[i] + 1);
  }
  return s;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text, const ParseOptions& opts) {
  auto raw = read_edges(text, false);
  int m = 0;
  if (!raw.empty()) {
    m = static_cast<int>(raw.front().vertices.size());
    if (opts.uniformity && *opts.uniformity != m) {
      throw ParseError(raw.front().line, "expected " + std::to_string(*opts.uniformity) +
                                             "-uniform edges, found " + std::to_string(m));
    }
  } else {
    m = opts.uniformity.value_or(2);
  }

  int max_id = -1;
  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (auto& r : raw) {
    max_id = std::max(max_id, r.vertices.back());
    if (!seen.insert(r.vertices).second) throw ParseError(r.line, "duplicate edge");
    edges.push_back(std::move(r.vertices));
  }
  int n = max_id + 1;
  if (opts.num_vertices) {
    if (*opts.num_vertices < n) {
      throw ParseError(0, "vertex count " + std::to_string(*opts.num_vertices) +
                              " is smaller than the largest id " + std::to_string(n));
    }
    n = *opts.num_vertices;
  }
  return Hypergraph(n, m, std::move(edges));
}

Perturbation parse_perturbation(std::string_view text) {
  Perturbation p;
  for (auto& r : read_edges(text, true)) p.edges.push_back({std::move(r.vertices), r.weight});
  return p;
}

Perturbation parse_edge_spec(std::string_view spec) {
  std::string text(spec);
  std::replace(text.begin(), text.end(), ',', ' ');
  if (text.find('\n') != std::string::npos) throw ParseError(1, "edge spec spans lines");
  auto p = parse_perturbation(text);
  if (p.edges.size() != 1) throw ParseError(1, "empty edge spec");
  return p;
}

Hypergraph read_hypergraph(const std::filesystem::path& path, const ParseOptions& opts) {
  return parse_hypergraph(slurp(path), opts);
}

Perturbation read_perturbation(const std::filesystem::path& path) {
  return parse_perturbation(slurp(path));
}

std::string format_hypergraph(const Hypergraph& h) {
  std::string out = "# " + std::to_string(h.uniformity()) + "-uniform, " +
                    std::to_string(h.num_vertices()) + " vertices, " +
                    std::to_string(h.edges().size()) + " edges\n";
  for (const auto& e : h.edges()) out += join_edge(e) + "\n";
  return out;
}

std::string format_perturbation(const Perturbation& p) {
  std::string out;
  for (const auto& we : p.edges) {
    std::ostringstream w;
    w.precision(17);
    w << we.weight;
    out += join_edge(we.edge) + " w=" + w.str() + "\n";
  }
  return out;
}

}  // namespace dualpf

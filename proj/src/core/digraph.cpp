#include "dualpf/digraph.hpp"

#include <algorithm>
#include <utility>

namespace dualpf {

std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& successors) {
  const int n = static_cast<int>(successors.size());
  std::vector<int> index(n, -1);
  std::vector<int> lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int next_index = 0;

  // Explicit call stack of (vertex, next successor position).
  std::vector<std::pair<int, std::size_t>> frames;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.emplace_back(root, 0);
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;

    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < successors[v].size()) {
        const int w = successors[v][pos++];
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      const int done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const int parent = frames.back().first;
        lowlink[parent] = std::min(lowlink[parent], lowlink[done]);
      }
      if (lowlink[done] == index[done]) {
        std::vector<int> component;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
        } while (w != done);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

bool is_strongly_connected(const std::vector<std::vector<int>>& successors) {
  if (successors.empty()) return false;
  return strongly_connected_components(successors).size() == 1;
}

}  // namespace dualpf

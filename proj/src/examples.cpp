#include "smalehom/examples.hpp"

#include <array>

namespace smalehom {

Graph full_shift_graph(Index m) {
  if (m < 1) throw ValidationError("full shift needs at least one symbol");
  std::vector<std::array<std::string, 3>> edges;
  for (Index i = 1; i <= m; ++i) edges.push_back({"e" + std::to_string(i), "v", "v"});
  return Graph({"v"}, edges);
}

Graph cycle_graph(Index n) {
  if (n < 1) throw ValidationError("cycle needs at least one vertex");
  std::vector<std::string> vertices;
  std::vector<std::array<std::string, 3>> edges;
  for (Index i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  for (Index i = 0; i < n; ++i)
    edges.push_back({"e" + std::to_string(i), "v" + std::to_string(i),
                     "v" + std::to_string((i + 1) % n)});
  return Graph(std::move(vertices), edges);
}

Graph complete_graph(Index m) {
  if (m < 1) throw ValidationError("complete graph needs at least one vertex");
  std::vector<std::string> vertices;
  std::vector<std::array<std::string, 3>> edges;
  for (Index i = 0; i < m; ++i) vertices.push_back("v" + std::to_string(i));
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      edges.push_back({"e" + std::to_string(i) + "_" + std::to_string(j),
                       "v" + std::to_string(i), "v" + std::to_string(j)});
  return Graph(std::move(vertices), edges);
}

GraphHom fold_hom(Index m) { return GraphHom::fold(full_shift_graph(m)); }

}  // namespace smalehom

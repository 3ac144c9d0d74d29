// Random graph corpus shared by the graph/fiber/pipeline suites.
#pragma once

#include "smalehom/examples.hpp"
#include "test_util.hpp"

namespace smalehom::testutil {

inline Graph random_graph(std::mt19937& r, Index max_vertices = 5, Index max_edges = 10) {
  std::uniform_int_distribution<Index> nv(1, max_vertices);
  const Index n = nv(r);
  std::uniform_int_distribution<Index> ne(0, max_edges);
  const Index e = ne(r);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  std::vector<std::string> vertices;
  for (Index v = 0; v < n; ++v) vertices.push_back("v" + std::to_string(v));
  std::vector<std::array<std::string, 3>> edges;
  for (Index k = 0; k < e; ++k)
    edges.push_back({"e" + std::to_string(k), "v" + std::to_string(pick(r)),
                     "v" + std::to_string(pick(r))});
  return Graph(std::move(vertices), edges);
}

inline Graph random_graph(Index max_vertices = 5, Index max_edges = 10) {
  return random_graph(rng(), max_vertices, max_edges);
}

}  // namespace smalehom::testutil

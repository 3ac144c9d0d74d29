// Directed graphs presenting shifts of finite type: higher-block
// presentations, the vertex endomorphism gamma_s, dimension groups,
// Bowen-Franks groups, and the functorial maps between them.
//
// Convention: gamma_s sends a vertex v to the sum of terminal vertices of the
// edges leaving v, i.e. entry (w, v) counts edges v -> w. Every invariant
// computed downstream (BF, kernel, limit invariants) is transpose-invariant,
// so the orientation choice is observationally irrelevant; it is fixed here
// once and for all.
//
// The declared vertex order is total and seeds every matrix indexing and
// lexicographic tie-break downstream.
#pragma once

#include <string>
#include <vector>

#include "smalehom/stationary_limit.hpp"

namespace smalehom {

class Graph {
 public:
  struct Edge {
    std::string id;
    Index src;
    Index dst;
  };

  Graph() = default;
  // Edges given as (id, source label, target label); labels must resolve.
  Graph(std::vector<std::string> vertices,
        const std::vector<std::array<std::string, 3>>& edges);

  Index n_vertices() const { return static_cast<Index>(vertices_.size()); }
  Index n_edges() const { return static_cast<Index>(edges_.size()); }
  const std::vector<std::string>& vertex_labels() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(Index e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::string& vertex_label(Index v) const {
    return vertices_[static_cast<std::size_t>(v)];
  }
  Index vertex_index(const std::string& label) const;  // throws if unknown
  Index edge_index(const std::string& id) const;

  Graph reversed() const;  // all edges flipped

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

Graph disjoint_union(const Graph& a, const Graph& b);  // labels suffixed @1/@2

class GraphHom {
 public:
  // vertex_map[v] and edge_map[e] index into the target; i/t compatibility is
  // checked at construction.
  GraphHom(Graph source, Graph target, std::vector<Index> vertex_map,
           std::vector<Index> edge_map);

  static GraphHom identity(const Graph& g);
  // The fold map G (+) G -> G collapsing the two copies.
  static GraphHom fold(const Graph& g);

  const Graph& source() const { return source_; }
  const Graph& target() const { return target_; }
  Index vertex_image(Index v) const { return vertex_map_[static_cast<std::size_t>(v)]; }
  Index edge_image(Index e) const { return edge_map_[static_cast<std::size_t>(e)]; }
  const std::vector<Index>& vertex_map() const { return vertex_map_; }
  const std::vector<Index>& edge_map() const { return edge_map_; }

 private:
  Graph source_;
  Graph target_;
  std::vector<Index> vertex_map_;
  std::vector<Index> edge_map_;
};

GraphHom product_hom(const GraphHom& a, const GraphHom& b);

// Paths of length len, each a list of edge indices, in lexicographic order.
std::vector<std::vector<Index>> paths_of_length(const Graph& g, Index len);

// G^k: vertices are paths of length k-1, edges paths of length k. G^1 is G.
Graph higher_block_graph(const Graph& g, Index k);

// Entry (w, v) counts edges from v to w.
IntMatrix gamma_s(const Graph& g);

// (Z G^0, gamma_s); its stationary limit is Krieger's dimension group D^s.
EndoModule dimension_group(const Graph& g);

// (BF(gamma_s), ker(1 - gamma_s)).
ShiftCokKer bowen_franks(const Graph& g);

// The block identification Z G^0 -> Z (G^{k+1})^0 sending a vertex to the
// sum of length-k paths starting at it (the path-pullback map in the
// orientation of gamma_s above). Intertwines gamma_s(G) with
// gamma_s(G^{k+1}) exactly and identifies the dimension groups.
GroupHom higher_block_iso(const Graph& g, Index k);

// The sum-over-preimages map pi^{s,K}: Z H^0 -> Z (G^{K+1})^0 of a graph
// homomorphism pi: H -> G. Throws CommutationError if it fails to commute
// with the gamma_s endomorphisms (K too small, or pi not a valid recoding).
IntMatrix induced_map_pi_sK(const GraphHom& pi, Index K);

// Componentwise product presentation; gamma_s of the product is the
// Kronecker product of the factors' gamma_s.
Graph product_graph(const Graph& a, const Graph& b);

// Presentations of irreducible shifts are strongly connected; this is only
// consulted to warn, never enforced.
bool is_strongly_connected(const Graph& g);

}  // namespace smalehom

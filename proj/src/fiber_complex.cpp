#include "smalehom/fiber_complex.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace smalehom {

namespace {

std::string tuple_label(const Graph& h, const std::vector<Index>& tuple, bool edge) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ",";
    out += edge ? h.edge(tuple[i]).id : h.vertex_label(tuple[i]);
  }
  return out + ")";
}

// All (level+1)-tuples of indices from `by_image` classes sharing one image,
// in global lexicographic order over the component indices.
std::vector<std::vector<Index>> equal_image_tuples(
    const std::vector<std::vector<Index>>& preimages, const std::vector<Index>& image_of,
    Index level) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> cur(static_cast<std::size_t>(level + 1));
  const Index n = static_cast<Index>(image_of.size());
  auto fill = [&](auto&& self, Index pos, const std::vector<Index>& pool) -> void {
    if (pos == level + 1) {
      out.push_back(cur);
      return;
    }
    for (Index x : pool) {
      cur[static_cast<std::size_t>(pos)] = x;
      self(self, pos + 1, pool);
    }
  };
  for (Index first = 0; first < n; ++first) {
    cur[0] = first;
    const auto& pool = preimages[static_cast<std::size_t>(image_of[static_cast<std::size_t>(first)])];
    fill(fill, 1, pool);
  }
  return out;
}

}  // namespace

Index FiberGraph::vertex_of_tuple(const std::vector<Index>& tuple) const {
  // Tuples are stored in lexicographic order.
  auto it = std::lower_bound(vertex_tuples.begin(), vertex_tuples.end(), tuple);
  if (it == vertex_tuples.end() || *it != tuple)
    throw Error("fiber graph does not contain the requested tuple");
  return static_cast<Index>(it - vertex_tuples.begin());
}

FiberGraph fiber_product_graph(const GraphHom& pi, Index level) {
  if (level < 0) throw ValidationError("fiber product level must be >= 0");
  const Graph& h = pi.source();
  const Graph& g = pi.target();

  std::vector<std::vector<Index>> vertex_preimages(static_cast<std::size_t>(g.n_vertices()));
  for (Index v = 0; v < h.n_vertices(); ++v)
    vertex_preimages[static_cast<std::size_t>(pi.vertex_image(v))].push_back(v);
  std::vector<std::vector<Index>> edge_preimages(static_cast<std::size_t>(g.n_edges()));
  for (Index e = 0; e < h.n_edges(); ++e)
    edge_preimages[static_cast<std::size_t>(pi.edge_image(e))].push_back(e);

  FiberGraph out;
  out.level = level;
  out.vertex_tuples = equal_image_tuples(vertex_preimages, pi.vertex_map(), level);
  out.edge_tuples = equal_image_tuples(edge_preimages, pi.edge_map(), level);

  std::vector<std::string> vertices;
  vertices.reserve(out.vertex_tuples.size());
  for (const auto& t : out.vertex_tuples) vertices.push_back(tuple_label(h, t, false));
  std::vector<std::array<std::string, 3>> edges;
  edges.reserve(out.edge_tuples.size());
  for (const auto& t : out.edge_tuples) {
    std::vector<Index> src, dst;
    for (Index e : t) {
      src.push_back(h.edge(e).src);
      dst.push_back(h.edge(e).dst);
    }
    edges.push_back({tuple_label(h, t, true), tuple_label(h, src, false),
                     tuple_label(h, dst, false)});
  }
  out.graph = Graph(std::move(vertices), edges);
  return out;
}

namespace {

// Signature of the permutation sorting `tuple`; entries must be distinct.
int sorting_sign(std::vector<Index> tuple) {
  int sign = 1;
  for (std::size_t i = 0; i + 1 < tuple.size(); ++i) {
    std::size_t min_at = i;
    for (std::size_t j = i + 1; j < tuple.size(); ++j)
      if (tuple[j] < tuple[min_at]) min_at = j;
    if (min_at != i) {
      std::swap(tuple[i], tuple[min_at]);
      sign = -sign;
    }
  }
  return sign;
}

bool has_repeat(const std::vector<Index>& tuple) {
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j)
      if (tuple[i] == tuple[j]) return true;
  return false;
}

}  // namespace

SignedBasis free_orbit_basis(const FiberGraph& f) {
  SignedBasis out;
  out.level = f.level;
  const Index n = static_cast<Index>(f.vertex_tuples.size());
  out.reduction.resize(static_cast<std::size_t>(n));

  std::map<std::vector<Index>, Index> rep_index;
  for (Index v = 0; v < n; ++v) {
    const auto& t = f.vertex_tuples[static_cast<std::size_t>(v)];
    if (std::is_sorted(t.begin(), t.end()) &&
        std::adjacent_find(t.begin(), t.end()) == t.end()) {
      rep_index[t] = out.size();
      out.representatives.push_back(v);
    }
  }
  for (Index v = 0; v < n; ++v) {
    const auto& t = f.vertex_tuples[static_cast<std::size_t>(v)];
    auto& red = out.reduction[static_cast<std::size_t>(v)];
    if (has_repeat(t)) continue;  // stays zero
    std::vector<Index> sorted = t;
    std::sort(sorted.begin(), sorted.end());
    red.rep = rep_index.at(sorted);
    red.sign = sorting_sign(t);
  }
  return out;
}

IntMatrix boundary_matrix(const FiberGraph& upper, const SignedBasis& upper_basis,
                          const FiberGraph& lower, const SignedBasis& lower_basis) {
  if (upper.level != lower.level + 1 || upper_basis.level != upper.level ||
      lower_basis.level != lower.level)
    throw DimensionError("boundary matrix needs consecutive levels");
  const Index n = upper.level;
  IntMatrix out = IntMatrix::Zero(lower_basis.size(), upper_basis.size());
  for (Index col = 0; col < upper_basis.size(); ++col) {
    const auto& tuple =
        upper.vertex_tuples[static_cast<std::size_t>(upper_basis.representatives[static_cast<std::size_t>(col)])];
    for (Index k = 0; k <= n; ++k) {
      std::vector<Index> face;
      face.reserve(tuple.size() - 1);
      for (Index i = 0; i <= n; ++i)
        if (i != k) face.push_back(tuple[static_cast<std::size_t>(i)]);
      const auto& red =
          lower_basis.reduction[static_cast<std::size_t>(lower.vertex_of_tuple(face))];
      if (red.sign == 0) continue;
      const int face_sign = ((n - k) % 2 == 0) ? 1 : -1;
      out(red.rep, col) += face_sign * red.sign;
    }
  }
  return out;
}

IntMatrix gamma_on_basis(const FiberGraph& f, const SignedBasis& basis) {
  IntMatrix out = IntMatrix::Zero(basis.size(), basis.size());
  // Position of each representative vertex in the basis, for source lookup.
  std::vector<Index> rep_position(f.vertex_tuples.size(), -1);
  for (Index b = 0; b < basis.size(); ++b)
    rep_position[static_cast<std::size_t>(basis.representatives[static_cast<std::size_t>(b)])] = b;

  const Graph& graph = f.graph;
  for (Index e = 0; e < graph.n_edges(); ++e) {
    Index src = graph.edge(e).src;
    Index col = rep_position[static_cast<std::size_t>(src)];
    if (col < 0) continue;  // gamma is applied to representatives only
    const auto& red = basis.reduction[static_cast<std::size_t>(graph.edge(e).dst)];
    if (red.sign == 0) continue;
    out(red.rep, col) += red.sign;
  }
  return out;
}

PutnamComplex::PutnamComplex(std::vector<Degree> degrees, Provenance provenance)
    : degrees_(std::move(degrees)), provenance_(provenance) {
  for (Index n = 0; n < n_degrees(); ++n) {
    auto& d = degrees_[static_cast<std::size_t>(n)];
    if (d.gamma.rows() != d.rank || d.gamma.cols() != d.rank)
      throw DimensionError("gamma at degree " + std::to_string(n) + " has wrong shape");
    if (n == 0) {
      if (d.boundary.has_value())
        throw ValidationError("degree 0 carries no boundary map");
      continue;
    }
    const auto& prev = degrees_[static_cast<std::size_t>(n - 1)];
    if (!d.boundary.has_value())
      throw ValidationError("missing boundary at degree " + std::to_string(n));
    if (d.boundary->rows() != prev.rank || d.boundary->cols() != d.rank)
      throw DimensionError("boundary at degree " + std::to_string(n) + " has wrong shape");
    IntMatrix comm = prev.gamma * (*d.boundary) - (*d.boundary) * d.gamma;
    if (!is_zero(comm))
      throw CommutationError("gamma does not commute with the boundary at degree " +
                                 std::to_string(n),
                             n);
    if (n >= 2) {
      const auto& prev2 = degrees_[static_cast<std::size_t>(n - 1)];
      IntMatrix sq = (*prev2.boundary) * (*d.boundary);
      if (!is_zero(sq))
        throw BoundarySquareError("boundary squared is nonzero at degree " +
                                      std::to_string(n),
                                  n);
    }
  }
}

ChainComplexZ PutnamComplex::chain_complex() const {
  std::vector<Index> dims;
  std::vector<IntMatrix> boundaries;
  for (Index n = 0; n < n_degrees(); ++n) {
    dims.push_back(degree(n).rank);
    if (n > 0) boundaries.push_back(*degree(n).boundary);
  }
  return ChainComplexZ(std::move(dims), std::move(boundaries));
}

std::vector<IntMatrix> PutnamComplex::gamma_chain() const {
  std::vector<IntMatrix> out;
  for (Index n = 0; n < n_degrees(); ++n) out.push_back(degree(n).gamma);
  return out;
}

PutnamComplex putnam_complex(const GraphHom& pi, Index n_max) {
  std::vector<PutnamComplex::Degree> degrees;
  FiberGraph prev_graph;
  SignedBasis prev_basis;
  for (Index level = 0; n_max < 0 || level <= n_max; ++level) {
    FiberGraph fg = fiber_product_graph(pi, level);
    SignedBasis basis = free_orbit_basis(fg);
    if (basis.size() == 0) break;  // empty level terminates the complex
    PutnamComplex::Degree d;
    d.rank = basis.size();
    d.gamma = gamma_on_basis(fg, basis);
    if (level > 0) d.boundary = boundary_matrix(fg, basis, prev_graph, prev_basis);
    degrees.push_back(std::move(d));
    prev_graph = std::move(fg);
    prev_basis = std::move(basis);
  }
  return PutnamComplex(std::move(degrees), PutnamComplex::Provenance::computed);
}

PutnamComplex unreduced_complex(const GraphHom& pi, Index n_max) {
  if (n_max < 0) throw ValidationError("the unreduced complex needs an explicit n_max");
  std::vector<PutnamComplex::Degree> degrees;
  FiberGraph prev;
  for (Index level = 0; level <= n_max; ++level) {
    FiberGraph fg = fiber_product_graph(pi, level);
    PutnamComplex::Degree d;
    d.rank = static_cast<Index>(fg.vertex_tuples.size());
    d.gamma = gamma_s(fg.graph);
    if (level > 0) {
      IntMatrix b = IntMatrix::Zero(prev.graph.n_vertices(), d.rank);
      for (Index col = 0; col < d.rank; ++col) {
        const auto& tuple = fg.vertex_tuples[static_cast<std::size_t>(col)];
        for (Index k = 0; k <= level; ++k) {
          std::vector<Index> face;
          for (Index i = 0; i <= level; ++i)
            if (i != k) face.push_back(tuple[static_cast<std::size_t>(i)]);
          const int face_sign = ((level - k) % 2 == 0) ? 1 : -1;
          b(prev.vertex_of_tuple(face), col) += face_sign;
        }
      }
      d.boundary = std::move(b);
    }
    degrees.push_back(std::move(d));
    prev = std::move(fg);
  }
  return PutnamComplex(std::move(degrees), PutnamComplex::Provenance::computed);
}

PutnamComplex solenoid_preset(Index m) {
  if (m < 2) throw ValidationError("solenoid preset needs m >= 2");
  std::vector<PutnamComplex::Degree> degrees(2);
  degrees[0].rank = m;
  degrees[0].gamma = IntMatrix::Constant(m, m, 1);
  degrees[1].rank = 1;
  degrees[1].gamma = IntMatrix::Identity(1, 1);
  degrees[1].boundary = IntMatrix::Zero(m, 1);
  return PutnamComplex(std::move(degrees), PutnamComplex::Provenance::preset);
}

}  // namespace smalehom

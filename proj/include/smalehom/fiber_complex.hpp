// Fiber-product graphs of a graph homomorphism, symmetric-orbit
// normalization with signs, face maps, and assembly of the normalized
// complex whose limit homology is the stable homology of the target.
//
// Sign conventions, fixed here once:
//  * Orbit representatives are the lexicographically smallest tuples under
//    the source vertex order, i.e. the strictly increasing ones.
//  * reduction(t) is zero when t has a repeated entry; otherwise it carries
//    the signature of the unique permutation sorting t.
//  * The face sign alternates so that the deletion of the last entry always
//    carries +1: face k of an (N+1)-tuple contributes (-1)^(N-k).
//  * gamma on the reduced basis applies the vertex endomorphism to the
//    representative itself and reduces the result; this is the descended map
//    on the sign-isotypic quotient, and it is verified to commute with the
//    boundary when the complex is assembled.
#pragma once

#include <optional>

#include "smalehom/sft_graph.hpp"

namespace smalehom {

// Level-N fiber product of pi: H -> G: vertices are (N+1)-tuples of
// H-vertices with equal pi-image, edges are (N+1)-tuples of H-edges with
// equal pi-image, incidence componentwise. Level 0 is H itself.
struct FiberGraph {
  Index level = 0;
  Graph graph;
  std::vector<std::vector<Index>> vertex_tuples;  // H-vertex indices
  std::vector<std::vector<Index>> edge_tuples;    // H-edge indices

  Index vertex_of_tuple(const std::vector<Index>& tuple) const;  // throws if absent
};

FiberGraph fiber_product_graph(const GraphHom& pi, Index level);

// One representative per free symmetric-group orbit of distinct-entry vertex
// tuples, with the signed reduction map.
struct SignedBasis {
  struct Reduction {
    Index rep = -1;
    int sign = 0;  // 0 encodes the zero reduction (repeated entries)
  };
  Index level = 0;
  std::vector<Index> representatives;  // fiber-graph vertex indices, in order
  std::vector<Reduction> reduction;    // indexed by fiber-graph vertex

  Index size() const { return static_cast<Index>(representatives.size()); }
};

SignedBasis free_orbit_basis(const FiberGraph& f);

// Alternating sum of the signed entry deletions, from the level-N basis to
// the level-(N-1) basis.
IntMatrix boundary_matrix(const FiberGraph& upper, const SignedBasis& upper_basis,
                          const FiberGraph& lower, const SignedBasis& lower_basis);

// The endomorphism gamma_{B_N} on the reduced basis.
IntMatrix gamma_on_basis(const FiberGraph& f, const SignedBasis& basis);

// Per-degree data of the normalized complex. boundary is absent in degree 0.
class PutnamComplex {
 public:
  struct Degree {
    Index rank = 0;
    IntMatrix gamma;
    std::optional<IntMatrix> boundary;  // to the previous degree
  };
  enum class Provenance { computed, preset };

  PutnamComplex(std::vector<Degree> degrees, Provenance provenance);

  Index n_degrees() const { return static_cast<Index>(degrees_.size()); }
  const std::vector<Degree>& degrees() const { return degrees_; }
  const Degree& degree(Index n) const { return degrees_[static_cast<std::size_t>(n)]; }
  Provenance provenance() const { return provenance_; }

  ChainComplexZ chain_complex() const;
  std::vector<IntMatrix> gamma_chain() const;

 private:
  std::vector<Degree> degrees_;
  Provenance provenance_;
};

// Assemble the normalized complex of pi through degree n_max (inclusive);
// n_max < 0 means "until the first empty level". Both structural identities
// (boundary squared zero, gamma commuting with the boundary) are verified
// and violations raise hard errors: they signal input outside the contract
// (a map that is not an s-bijective recoding datum).
PutnamComplex putnam_complex(const GraphHom& pi, Index n_max = -1);

// Same assembly on the full vertex sets, with no orbit reduction and no
// signs beyond the alternating sum of deletions. Used as a cross-check:
// limit homology invariants must agree with the reduced complex.
PutnamComplex unreduced_complex(const GraphHom& pi, Index n_max);

// The normalized data of the m-solenoid: degree 0 is the complete graph on m
// vertices, degree 1 a single basis element with identity action and zero
// boundary, and nothing above.
PutnamComplex solenoid_preset(Index m);

}  // namespace smalehom

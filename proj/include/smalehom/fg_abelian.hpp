// Finitely generated abelian groups presented by relation matrices,
// homomorphisms between presentations, chain complexes of free Z-modules,
// homology, tensor and Tor.
//
// Groups are compared only through their isomorphism invariants
// (free rank + invariant factors); no presentation isomorphism search.
#pragma once

#include <vector>

#include "smalehom/exact_linalg.hpp"

namespace smalehom {

class FgAbelianGroup {
 public:
  FgAbelianGroup() : FgAbelianGroup(0, IntMatrix::Zero(0, 0)) {}
  FgAbelianGroup(Index n_generators, IntMatrix relations);

  static FgAbelianGroup free_group(Index n);
  static FgAbelianGroup cyclic(const Integer& order);  // order 0 gives Z
  static FgAbelianGroup from_invariants(const GroupInvariants& inv);

  Index n_generators() const { return n_generators_; }
  const IntMatrix& relations() const { return relations_; }
  const GroupInvariants& invariants() const { return invariants_; }
  Index free_rank() const { return invariants_.free_rank; }
  const std::vector<Integer>& torsion() const { return invariants_.torsion; }
  bool is_trivial() const { return invariants_.is_trivial(); }
  bool isomorphic(const FgAbelianGroup& other) const {
    return invariants_ == other.invariants_;
  }

  // Are the given column vectors (in generator coordinates) zero in the group?
  bool relations_contain(const IntMatrix& vectors) const;

 private:
  Index n_generators_;
  IntMatrix relations_;  // n_generators x n_relations
  GroupInvariants invariants_;
};

class GroupHom {
 public:
  // matrix: target generators x source generators. Well-definedness (the
  // matrix maps the source relation lattice into the target one) is checked.
  GroupHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix);

  static GroupHom identity(const FgAbelianGroup& g);
  static GroupHom zero(const FgAbelianGroup& source, const FgAbelianGroup& target);

  const FgAbelianGroup& source() const { return source_; }
  const FgAbelianGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  GroupHom compose(const GroupHom& inner) const;  // *this after inner
  GroupHom direct_sum(const GroupHom& other) const;
  bool equals(const GroupHom& other) const;  // as maps of the presentations
  bool is_identity() const;

 private:
  FgAbelianGroup source_;
  FgAbelianGroup target_;
  IntMatrix matrix_;
};

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup tensor_product(const FgAbelianGroup& a, const FgAbelianGroup& b);
GroupHom tensor_hom(const GroupHom& f, const GroupHom& g);

// Kernel of a homomorphism, with the inclusion of its generators into the
// source (generator coordinates).
struct KernelData {
  FgAbelianGroup group;
  IntMatrix inclusion;  // source gens x kernel gens
};
KernelData kernel_of_hom(const GroupHom& f);

FgAbelianGroup cokernel_of_hom(const GroupHom& f);
bool is_isomorphism(const GroupHom& f);

FgAbelianGroup tor_product(const FgAbelianGroup& a, const FgAbelianGroup& b);
GroupHom tor_hom(const GroupHom& f, const GroupHom& g);

// Bounded chain complex of free Z-modules. boundary(n) maps degree n to
// degree n-1; out-of-range boundaries are zero maps to/from rank-0 modules.
// dd = 0 is enforced at construction.
class ChainComplexZ {
 public:
  // boundaries[k] is the boundary map from degree k+1 to degree k,
  // so boundaries.size() == degrees.size() - 1 (or both empty).
  ChainComplexZ(std::vector<Index> degrees, std::vector<IntMatrix> boundaries);

  Index n_degrees() const { return static_cast<Index>(degrees_.size()); }
  Index dim(Index n) const {
    return (n >= 0 && n < n_degrees()) ? degrees_[static_cast<std::size_t>(n)] : 0;
  }
  IntMatrix boundary(Index n) const;

 private:
  std::vector<Index> degrees_;
  std::vector<IntMatrix> boundaries_;
};

// Presentation of ker(boundary n) / im(boundary n+1): generators are a
// saturated basis of the cycle lattice, relations the coordinates of the
// incoming boundaries in that basis.
struct HomologyPresentation {
  FgAbelianGroup group;
  IntMatrix cycle_basis;  // dim(n) x generators
};
HomologyPresentation homology_presentation_at(const ChainComplexZ& c, Index n);
FgAbelianGroup homology_at(const ChainComplexZ& c, Index n);

// Endomorphism of H_n induced by a chain endomorphism (one square matrix per
// degree). Throws CommutationError naming the degree if it is not a chain map.
GroupHom induced_map_on_homology(const ChainComplexZ& c,
                                 const std::vector<IntMatrix>& chain_endo,
                                 Index n);

// Map H_n(from) -> H_n(to) induced by a chain map.
GroupHom induced_map_between_complexes(const ChainComplexZ& from,
                                       const ChainComplexZ& to,
                                       const std::vector<IntMatrix>& chain_map,
                                       Index n);

// Homology of a complex of *presented* groups; maps[k] is the map from
// groups[k+1] to groups[k], written on generators.
FgAbelianGroup homology_of_presented_complex(const std::vector<FgAbelianGroup>& groups,
                                             const std::vector<IntMatrix>& maps,
                                             Index p);

// Free quotient G / torsion in a Smith-adapted basis. to_free * from_free = I.
struct FreeQuotient {
  IntMatrix to_free;    // free_rank x gens
  IntMatrix from_free;  // gens x free_rank
};
FreeQuotient free_quotient(const FgAbelianGroup& g);

// Matrix of the map induced on free quotients, in the Smith-adapted bases.
IntMatrix induced_on_free_quotient(const GroupHom& f);

}  // namespace smalehom

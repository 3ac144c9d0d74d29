#include "smalehom/fg_abelian.hpp"

#include <string>

namespace smalehom {

FgAbelianGroup::FgAbelianGroup(Index n_generators, IntMatrix relations)
    : n_generators_(n_generators), relations_(std::move(relations)) {
  if (n_generators_ < 0) throw DimensionError("negative generator count");
  if (relations_.size() == 0 && relations_.rows() != n_generators_)
    relations_ = IntMatrix::Zero(n_generators_, 0);
  if (relations_.rows() != n_generators_)
    throw DimensionError("relation matrix must have one row per generator");
  invariants_ = cokernel_invariants(relations_);
}

FgAbelianGroup FgAbelianGroup::free_group(Index n) {
  return FgAbelianGroup(n, IntMatrix::Zero(n, 0));
}

FgAbelianGroup FgAbelianGroup::cyclic(const Integer& order) {
  IntMatrix rel(1, 1);
  rel(0, 0) = order;
  return order == 0 ? free_group(1) : FgAbelianGroup(1, rel);
}

FgAbelianGroup FgAbelianGroup::from_invariants(const GroupInvariants& inv) {
  const Index nt = static_cast<Index>(inv.torsion.size());
  const Index n = inv.free_rank + nt;
  IntMatrix rel = IntMatrix::Zero(n, nt);
  for (Index i = 0; i < nt; ++i) rel(i, i) = inv.torsion[static_cast<std::size_t>(i)];
  return FgAbelianGroup(n, rel);
}

bool FgAbelianGroup::relations_contain(const IntMatrix& vectors) const {
  if (vectors.rows() != n_generators_)
    throw DimensionError("vector length does not match generator count");
  return lattice_contains(relations_, vectors);
}

GroupHom::GroupHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.size() == 0 &&
      (matrix_.rows() != target_.n_generators() || matrix_.cols() != source_.n_generators()))
    matrix_ = IntMatrix::Zero(target_.n_generators(), source_.n_generators());
  if (matrix_.rows() != target_.n_generators() || matrix_.cols() != source_.n_generators())
    throw DimensionError("homomorphism matrix shape does not match presentations");
  if (!target_.relations_contain(matrix_ * source_.relations()))
    throw ValidationError("homomorphism does not map relations into relations");
}

GroupHom GroupHom::identity(const FgAbelianGroup& g) {
  return GroupHom(g, g, IntMatrix::Identity(g.n_generators(), g.n_generators()));
}

GroupHom GroupHom::zero(const FgAbelianGroup& source, const FgAbelianGroup& target) {
  return GroupHom(source, target,
                  IntMatrix::Zero(target.n_generators(), source.n_generators()));
}

GroupHom GroupHom::compose(const GroupHom& inner) const {
  if (inner.target_.n_generators() != source_.n_generators())
    throw DimensionError("composition: middle presentations do not match");
  return GroupHom(inner.source_, target_, matrix_ * inner.matrix_);
}

GroupHom GroupHom::direct_sum(const GroupHom& other) const {
  return GroupHom(smalehom::direct_sum(source_, other.source_),
                  smalehom::direct_sum(target_, other.target_),
                  block_diag(matrix_, other.matrix_));
}

bool GroupHom::equals(const GroupHom& other) const {
  if (matrix_.rows() != other.matrix_.rows() || matrix_.cols() != other.matrix_.cols())
    return false;
  return target_.relations_contain(matrix_ - other.matrix_);
}

bool GroupHom::is_identity() const {
  if (source_.n_generators() != target_.n_generators()) return false;
  return target_.relations_contain(
      matrix_ - IntMatrix::Identity(matrix_.rows(), matrix_.cols()));
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  return FgAbelianGroup(a.n_generators() + b.n_generators(),
                        block_diag(a.relations(), b.relations()));
}

FgAbelianGroup tensor_product(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  const Index na = a.n_generators();
  const Index nb = b.n_generators();
  IntMatrix rel = hcat(kronecker_product(a.relations(), IntMatrix::Identity(nb, nb)),
                       kronecker_product(IntMatrix::Identity(na, na), b.relations()));
  return FgAbelianGroup(na * nb, rel);
}

GroupHom tensor_hom(const GroupHom& f, const GroupHom& g) {
  return GroupHom(tensor_product(f.source(), g.source()),
                  tensor_product(f.target(), g.target()),
                  kronecker_product(f.matrix(), g.matrix()));
}

KernelData kernel_of_hom(const GroupHom& f) {
  const IntMatrix& mat = f.matrix();
  const IntMatrix& target_rel = f.target().relations();
  // x is in the kernel iff mat*x lies in the target relation lattice.
  IntMatrix stacked = kernel_basis(hcat(mat, -target_rel));
  IntMatrix preimages = stacked.topRows(f.source().n_generators());
  IntMatrix basis = image_lattice_basis(preimages);
  // Source relations are kernel elements, so their coordinates are integral.
  IntMatrix rel = solve_exact(basis, f.source().relations());
  KernelData out{FgAbelianGroup(basis.cols(), rel), basis};
  return out;
}

FgAbelianGroup cokernel_of_hom(const GroupHom& f) {
  return FgAbelianGroup(f.target().n_generators(),
                        hcat(f.matrix(), f.target().relations()));
}

bool is_isomorphism(const GroupHom& f) {
  return kernel_of_hom(f).group.is_trivial() && cokernel_of_hom(f).is_trivial();
}

namespace {

struct TorData {
  FgAbelianGroup group;
  IntMatrix inclusion;       // (r * nb) x gens, coordinates in Z^r (x) B
  IntMatrix injective_rels;  // na x r, basis of the relation lattice of a
};

// Tor(A, B) as the kernel of R' (x) id_B, where 0 -> Z^r -> Z^na -> A -> 0
// is the free resolution given by a basis R' of the relation lattice.
TorData tor_with_data(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  IntMatrix rprime = image_lattice_basis(a.relations());
  const Index r = rprime.cols();
  const Index nb = b.n_generators();
  FgAbelianGroup src(r * nb, kronecker_product(IntMatrix::Identity(r, r), b.relations()));
  FgAbelianGroup tgt = tensor_product(FgAbelianGroup::free_group(a.n_generators()), b);
  GroupHom theta(src, tgt, kronecker_product(rprime, IntMatrix::Identity(nb, nb)));
  KernelData kd = kernel_of_hom(theta);
  return TorData{std::move(kd.group), std::move(kd.inclusion), std::move(rprime)};
}

}  // namespace

FgAbelianGroup tor_product(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  return tor_with_data(a, b).group;
}

GroupHom tor_hom(const GroupHom& f, const GroupHom& g) {
  TorData src = tor_with_data(f.source(), g.source());
  TorData tgt = tor_with_data(f.target(), g.target());
  // Lift f across the resolutions: rprime_tgt * lift = f * rprime_src.
  IntMatrix lift = solve_exact(tgt.injective_rels, f.matrix() * src.injective_rels);
  IntMatrix on_resolution = kronecker_product(lift, g.matrix());
  IntMatrix coords = solve_exact(tgt.inclusion, on_resolution * src.inclusion);
  return GroupHom(src.group, tgt.group, coords);
}

ChainComplexZ::ChainComplexZ(std::vector<Index> degrees, std::vector<IntMatrix> boundaries)
    : degrees_(std::move(degrees)), boundaries_(std::move(boundaries)) {
  const Index d = n_degrees();
  if (static_cast<Index>(boundaries_.size()) != std::max<Index>(d - 1, 0))
    throw DimensionError("chain complex needs one boundary per consecutive degree pair");
  for (Index n = 1; n < d; ++n) {
    const IntMatrix& b = boundaries_[static_cast<std::size_t>(n - 1)];
    if (b.rows() != dim(n - 1) || b.cols() != dim(n))
      throw DimensionError("boundary " + std::to_string(n) + " has wrong shape");
  }
  for (Index n = 1; n + 1 < d; ++n) {
    IntMatrix sq = boundaries_[static_cast<std::size_t>(n - 1)] *
                   boundaries_[static_cast<std::size_t>(n)];
    if (!is_zero(sq))
      throw BoundarySquareError(
          "boundary composition nonzero between degrees " + std::to_string(n + 1) +
              " and " + std::to_string(n - 1),
          n + 1);
  }
}

IntMatrix ChainComplexZ::boundary(Index n) const {
  if (n >= 1 && n < n_degrees()) return boundaries_[static_cast<std::size_t>(n - 1)];
  return IntMatrix::Zero(dim(n - 1), dim(n));
}

HomologyPresentation homology_presentation_at(const ChainComplexZ& c, Index n) {
  if (n < 0 || n >= c.n_degrees())
    return HomologyPresentation{FgAbelianGroup(), IntMatrix::Zero(c.dim(n), 0)};
  IntMatrix cycles = kernel_basis(c.boundary(n));
  // Incoming boundaries are cycles and the cycle basis is saturated, so the
  // coordinates exist and are unique.
  IntMatrix rel = solve_exact(cycles, c.boundary(n + 1));
  return HomologyPresentation{FgAbelianGroup(cycles.cols(), rel), std::move(cycles)};
}

FgAbelianGroup homology_at(const ChainComplexZ& c, Index n) {
  return homology_presentation_at(c, n).group;
}

namespace {

void check_chain_map(const ChainComplexZ& from, const ChainComplexZ& to,
                     const std::vector<IntMatrix>& f, const char* what) {
  const Index d = std::max(from.n_degrees(), to.n_degrees());
  if (static_cast<Index>(f.size()) < from.n_degrees())
    throw DimensionError(std::string(what) + ": one matrix per degree required");
  auto at = [&](Index n) -> IntMatrix {
    if (n >= 0 && n < static_cast<Index>(f.size())) return f[static_cast<std::size_t>(n)];
    return IntMatrix::Zero(to.dim(n), from.dim(n));
  };
  for (Index n = 0; n < static_cast<Index>(f.size()); ++n) {
    if (f[static_cast<std::size_t>(n)].rows() != to.dim(n) ||
        f[static_cast<std::size_t>(n)].cols() != from.dim(n))
      throw DimensionError(std::string(what) + ": wrong shape at degree " +
                           std::to_string(n));
  }
  for (Index n = 1; n <= d; ++n) {
    IntMatrix lhs = at(n - 1) * from.boundary(n);
    IntMatrix rhs = to.boundary(n) * at(n);
    if (!is_zero(lhs - rhs))
      throw CommutationError(std::string(what) + " does not commute with the boundary at degree " +
                                 std::to_string(n),
                             n);
  }
}

GroupHom induced_map_impl(const ChainComplexZ& from, const ChainComplexZ& to,
                          const std::vector<IntMatrix>& f, Index n) {
  HomologyPresentation hs = homology_presentation_at(from, n);
  HomologyPresentation ht = homology_presentation_at(to, n);
  IntMatrix fn = (n >= 0 && n < static_cast<Index>(f.size()))
                     ? f[static_cast<std::size_t>(n)]
                     : IntMatrix::Zero(to.dim(n), from.dim(n));
  IntMatrix mapped = fn * hs.cycle_basis;
  IntMatrix coords = solve_exact(ht.cycle_basis, mapped);
  return GroupHom(hs.group, ht.group, coords);
}

}  // namespace

GroupHom induced_map_on_homology(const ChainComplexZ& c,
                                 const std::vector<IntMatrix>& chain_endo, Index n) {
  check_chain_map(c, c, chain_endo, "chain endomorphism");
  return induced_map_impl(c, c, chain_endo, n);
}

GroupHom induced_map_between_complexes(const ChainComplexZ& from, const ChainComplexZ& to,
                                       const std::vector<IntMatrix>& chain_map, Index n) {
  check_chain_map(from, to, chain_map, "chain map");
  return induced_map_impl(from, to, chain_map, n);
}

FgAbelianGroup homology_of_presented_complex(const std::vector<FgAbelianGroup>& groups,
                                             const std::vector<IntMatrix>& maps,
                                             Index p) {
  const Index d = static_cast<Index>(groups.size());
  if (static_cast<Index>(maps.size()) != std::max<Index>(d - 1, 0))
    throw DimensionError("presented complex needs one map per consecutive pair");
  if (p < 0 || p >= d) return FgAbelianGroup();
  auto gens = [&](Index n) {
    return (n >= 0 && n < d) ? groups[static_cast<std::size_t>(n)].n_generators() : 0;
  };
  auto rels = [&](Index n) -> IntMatrix {
    if (n >= 0 && n < d) return groups[static_cast<std::size_t>(n)].relations();
    return IntMatrix::Zero(gens(n), 0);
  };
  auto map_at = [&](Index n) -> IntMatrix {  // degree n -> n-1
    if (n >= 1 && n < d) return maps[static_cast<std::size_t>(n - 1)];
    return IntMatrix::Zero(gens(n - 1), gens(n));
  };
  // Validate that the maps are well-defined and compose to zero in the
  // presented sense before quotienting.
  for (Index n = 1; n < d; ++n) {
    GroupHom step(groups[static_cast<std::size_t>(n)], groups[static_cast<std::size_t>(n - 1)],
                  map_at(n));
    if (n + 1 < d && !groups[static_cast<std::size_t>(n - 1)].relations_contain(
                         map_at(n) * map_at(n + 1)))
      throw BoundarySquareError("presented complex maps do not square to zero at degree " +
                                    std::to_string(n + 1),
                                n + 1);
  }
  // Cycles: x with d(x) zero in the presented quotient below.
  IntMatrix stacked = kernel_basis(hcat(map_at(p), -rels(p - 1)));
  IntMatrix basis = image_lattice_basis(stacked.topRows(gens(p)));
  IntMatrix killers = hcat(map_at(p + 1), rels(p));
  IntMatrix rel = solve_exact(basis, killers);
  return FgAbelianGroup(basis.cols(), rel);
}

FreeQuotient free_quotient(const FgAbelianGroup& g) {
  SmithDecomposition d = smith_normal_form(g.relations());
  const Index r = d.rank();
  const Index n = g.n_generators();
  FreeQuotient out;
  out.to_free = d.u.bottomRows(n - r);
  out.from_free = d.u_inverse.rightCols(n - r);
  return out;
}

IntMatrix induced_on_free_quotient(const GroupHom& f) {
  FreeQuotient src = free_quotient(f.source());
  FreeQuotient tgt = free_quotient(f.target());
  return tgt.to_free * f.matrix() * src.from_free;
}

}  // namespace smalehom

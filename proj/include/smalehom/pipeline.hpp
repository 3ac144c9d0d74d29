// Top-level invariants: stable homology of a normalized complex, the
// spectral-sheet table with K-theory rank bounds, the Bowen-Franks /
// kernel long-exact-sequence report for the Ruelle algebra, Kunneth
// predictions and cross-checks, and Z^N-odometer groupoid homology.
#pragma once

#include <string>
#include <vector>

#include "smalehom/fiber_complex.hpp"

namespace smalehom {

struct StableHomology {
  std::vector<EndoModule> modules;          // H_p with the induced gamma
  std::vector<LimitInvariants> invariants;  // limit along gamma

  Index n_degrees() const { return static_cast<Index>(invariants.size()); }
};

// H^s_p as the stationary limit of (H_p(Z B_*, d), gamma_*). Homology above
// the top degree of the (bounded) complex is exactly zero.
StableHomology stable_homology(const PutnamComplex& p);

// E^2_{p,q} = H_p (x) K_q(C): odd rows vanish, even rows repeat row zero.
// The K-theory ranks of the groupoid algebra are bounded by the alternating
// column sums.
struct SpectralSheet {
  std::vector<LimitInvariants> row;  // E^2_{p,0}
  Index rank_bound_k0 = 0;
  Index rank_bound_k1 = 0;

  Index n_columns() const { return static_cast<Index>(row.size()); }
  // Invariants of E^2_{p,q}; zero for odd q or out-of-range p.
  GroupInvariants entry(Index p, Index q) const;
};
SpectralSheet spectral_sheet(const std::vector<LimitInvariants>& h);

// Data of the long exact sequence relating the homology of the complexes
// C_n = BF(gamma_{B_n}) and C'_n = ker(1 - gamma_{B_n}) to the E^2-column of
// the Ruelle-algebra spectral sequence:
//   ... -> H_{p-1}(C') -> E^2_{p,0} -> H_p(C) -> H_{p-2}(C') -> ...
// E^2_{p,0} is marked determined only when vanishing adjacent terms force
// it; otherwise the segment is reported as an extension problem.
struct RuelleReport {
  std::vector<GroupInvariants> bf;             // C_n
  std::vector<GroupInvariants> ker;            // C'_n (free)
  std::vector<IntMatrix> c_boundaries;         // induced d on the BF presentations
  std::vector<IntMatrix> cprime_boundaries;    // induced d in the kernel bases
  std::vector<GroupInvariants> c_homology;
  std::vector<GroupInvariants> cprime_homology;

  struct Segment {
    Index p = 0;
    GroupInvariants incoming;  // H_{p-1}(C')
    GroupInvariants h_c;       // H_p(C)
    GroupInvariants outgoing;  // H_{p-2}(C')
    bool determined = false;
    GroupInvariants value;     // meaningful when determined
  };
  std::vector<Segment> segments;

  // True when no differential of the spectral sequence can be nonzero for
  // support reasons; only then are the abutment extension statements emitted.
  bool collapse_certain = false;
  std::vector<std::string> k_extensions;
};
RuelleReport ruelle_report(const PutnamComplex& p);

// Degreewise Kunneth prediction: (+) tensors in degree k plus Tor terms in
// degree k-1, as a direct sum of endo-modules, reported as limit invariants.
std::vector<LimitInvariants> kunneth_predict(const StableHomology& a,
                                             const StableHomology& b);

struct KunnethCheck {
  std::vector<LimitInvariants> predicted;
  std::vector<LimitInvariants> direct;  // stable homology of the product hom
  std::vector<bool> degree_pass;
  bool pass = true;
};
KunnethCheck kunneth_crosscheck(const GraphHom& pi1, const GraphHom& pi2,
                                Index n_max = -1);

// Groupoid homology of the Z^N odometer of an expanding integer matrix:
// H_{N-k} is the stationary limit of ext^k(B^t). Requires |det B| >= 2.
std::vector<LimitInvariants> odometer_homology(const IntMatrix& b);

// Koszul chain complex computing H_*(Z^N, M) for commuting automorphisms of
// M = Z^d; degree k has rank C(N,k)*d.
ChainComplexZ koszul_complex(const std::vector<IntMatrix>& actions);
FgAbelianGroup koszul_group_homology(const std::vector<IntMatrix>& actions, Index k);

// Koszul homology of the coset modules C(Z^N / B^j Z^N) for j = 0..levels-1,
// with the maps induced by the constant-on-fibers embeddings between
// consecutive levels, expressed on free quotients in the computed
// Smith-adapted bases and cross-checked against ext^k(B^t).
struct OdometerTower {
  Index n = 0;  // N
  struct Level {
    std::vector<Integer> coset_orders;      // invariant factors of B^j
    std::vector<GroupInvariants> homology;  // H_k for k = 0..N
  };
  std::vector<Level> levels;
  std::vector<std::vector<IntMatrix>> connecting;  // [step j][k]
  std::vector<IntMatrix> expected;                 // ext^{N-k}(B^t) per k
  std::vector<std::vector<bool>> matches_expected;
  std::vector<std::vector<bool>> equivalent_expected;  // equal Smith factors
  bool all_equivalent = true;
};
OdometerTower odometer_level_tower(const IntMatrix& b, Index n_levels);

}  // namespace smalehom

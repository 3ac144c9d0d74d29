// Stationary inductive limits lim(M -> M -> ...) of a finitely generated
// abelian group along one endomorphism: stabilization, limit invariants,
// cokernel/kernel of 1 - shift, and tensor/Tor of limits.
#pragma once

#include <vector>

#include "smalehom/fg_abelian.hpp"

namespace smalehom {

// A module together with an endomorphism of its presentation; presents the
// stationary inductive limit lim(M ->phi M ->phi ...).
class EndoModule {
 public:
  EndoModule() : EndoModule(FgAbelianGroup(), IntMatrix::Zero(0, 0)) {}
  EndoModule(FgAbelianGroup module, IntMatrix endo);

  static EndoModule free_with_endo(const IntMatrix& endo);

  const FgAbelianGroup& module() const { return module_; }
  const IntMatrix& endo() const { return endo_; }
  GroupHom endo_hom() const { return GroupHom(module_, module_, endo_); }

 private:
  FgAbelianGroup module_;
  IntMatrix endo_;
};

enum class LimitTag { zero, finite, free, localized, general };

std::string tag_name(LimitTag tag);

// Isomorphism data of the limit group: the rank and eventual torsion are
// invariants; free_action is the induced endomorphism of the free quotient in
// a Smith-adapted basis after stabilization (injective, so det != 0).
// tag == localized is claimed only when free_action is literally diagonal in
// that basis and there is no torsion; then localized_primes are the primes
// dividing the diagonal.
struct LimitInvariants {
  Index rank = 0;
  std::vector<Integer> eventual_torsion;
  IntMatrix free_action;
  LimitTag tag = LimitTag::zero;
  std::vector<Integer> localized_primes;

  bool same_group_invariants(const LimitInvariants& o) const {
    return rank == o.rank && eventual_torsion == o.eventual_torsion;
  }
  GroupInvariants group_invariants() const {
    return GroupInvariants{rank, eventual_torsion};
  }
  std::string to_string() const;
};

// Quotient by the eventual kernel: returns (M', phi') with
// M' = M / union_j ker(phi^j) and phi' injective; the limit is unchanged.
EndoModule stabilize(const EndoModule& e);

LimitInvariants limit_invariants(const EndoModule& e);

// cok(1 - phi) and ker(1 - phi), computed on the module itself. These equal
// the cokernel/kernel of 1 - alpha on the limit for the shift automorphism
// alpha, which is why no stabilization is applied here.
struct ShiftCokKer {
  FgAbelianGroup cok;
  FgAbelianGroup ker;
};
ShiftCokKer shift_cok_ker(const EndoModule& e);

// The maps induced on cok(1 - phi) and ker(1 - phi) by a matrix that
// intertwines two endo-modules (intertwiner * phi_src = phi_tgt *
// intertwiner, verified; CommutationError otherwise). Functorial in the
// intertwiner.
struct InducedShiftMaps {
  GroupHom on_cok;
  GroupHom on_ker;
};
InducedShiftMaps induced_shift_cok_ker(const EndoModule& src, const EndoModule& tgt,
                                       const IntMatrix& intertwiner);

EndoModule tensor_limits(const EndoModule& a, const EndoModule& b);
EndoModule tor_limits(const EndoModule& a, const EndoModule& b);
EndoModule direct_sum(const EndoModule& a, const EndoModule& b);

// Prime factorization by trial division plus Pollard rho; used only to name
// the primes in localized limit reports.
std::vector<Integer> prime_factors(Integer n);

}  // namespace smalehom

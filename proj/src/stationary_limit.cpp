#include "smalehom/stationary_limit.hpp"

#include <algorithm>
#include <set>

namespace smalehom {

EndoModule::EndoModule(FgAbelianGroup module, IntMatrix endo)
    : module_(std::move(module)), endo_(std::move(endo)) {
  if (endo_.size() == 0)
    endo_ = IntMatrix::Zero(module_.n_generators(), module_.n_generators());
  // Constructing the hom validates shape and well-definedness.
  GroupHom check(module_, module_, endo_);
}

EndoModule EndoModule::free_with_endo(const IntMatrix& endo) {
  if (endo.rows() != endo.cols())
    throw DimensionError("endomorphism of a free module must be square");
  return EndoModule(FgAbelianGroup::free_group(endo.rows()), endo);
}

std::string tag_name(LimitTag tag) {
  switch (tag) {
    case LimitTag::zero: return "zero";
    case LimitTag::finite: return "finite";
    case LimitTag::free: return "free";
    case LimitTag::localized: return "localized";
    case LimitTag::general: return "general";
  }
  return "general";
}

std::string LimitInvariants::to_string() const {
  if (tag == LimitTag::zero) return "0";
  if (tag == LimitTag::localized) {
    // Group the diagonal entries of the free action: Z[1/d] per entry.
    std::string out;
    Integer last = 0;
    Index count = 0;
    auto flush = [&]() {
      if (count == 0) return;
      if (!out.empty()) out += " ⊕ ";
      Integer radical = 1;
      for (const Integer& p : prime_factors(last)) radical *= p;
      out += "Z[1/" + radical.get_str() + "]";
      if (count > 1) out += "^" + std::to_string(count);
    };
    for (Index i = 0; i < free_action.rows(); ++i) {
      Integer d = abs(free_action(i, i));
      if (d == last) {
        ++count;
      } else {
        flush();
        last = d;
        count = 1;
      }
    }
    flush();
    return out;
  }
  std::string out = group_invariants().to_string();
  if (tag == LimitTag::general && rank > 0) out += " (limit of general type)";
  return out;
}

namespace {

// Lattice {x : f x lies in the lattice spanned by rel}, as a basis matrix.
IntMatrix preimage_lattice(const IntMatrix& f, const IntMatrix& rel) {
  IntMatrix stacked = kernel_basis(hcat(f, -rel));
  return image_lattice_basis(stacked.topRows(f.cols()));
}

}  // namespace

EndoModule stabilize(const EndoModule& e) {
  const IntMatrix& rel = e.module().relations();
  const IntMatrix& f = e.endo();
  const Index n = e.module().n_generators();
  if (n == 0) return e;

  IntMatrix power = f;
  IntMatrix kernel = preimage_lattice(power, rel);
  for (;;) {
    power = f * power;
    IntMatrix next = preimage_lattice(power, rel);
    if (lattice_contains(kernel, next)) break;
    kernel = std::move(next);
  }
  return EndoModule(FgAbelianGroup(n, kernel), f);
}

LimitInvariants limit_invariants(const EndoModule& e) {
  EndoModule st = stabilize(e);
  const FgAbelianGroup& m = st.module();

  LimitInvariants out;
  out.rank = m.free_rank();
  out.eventual_torsion = m.torsion();
  out.free_action = induced_on_free_quotient(st.endo_hom());

  if (out.rank == 0) {
    out.tag = out.eventual_torsion.empty() ? LimitTag::zero : LimitTag::finite;
    return out;
  }
  Integer det = determinant(out.free_action);
  if (det == 0) throw Error("stabilized free action is singular");
  if (!out.eventual_torsion.empty()) {
    out.tag = LimitTag::general;
    return out;
  }
  if (abs(det) == 1) {
    out.tag = LimitTag::free;
    return out;
  }
  bool diagonal = true;
  for (Index i = 0; i < out.free_action.rows() && diagonal; ++i)
    for (Index j = 0; j < out.free_action.cols() && diagonal; ++j)
      if (i != j && out.free_action(i, j) != 0) diagonal = false;
  if (diagonal) {
    out.tag = LimitTag::localized;
    std::set<Integer> primes;
    for (const Integer& p : prime_factors(abs(det))) primes.insert(p);
    out.localized_primes.assign(primes.begin(), primes.end());
  } else {
    out.tag = LimitTag::general;
  }
  return out;
}

ShiftCokKer shift_cok_ker(const EndoModule& e) {
  const Index n = e.module().n_generators();
  IntMatrix one_minus = IntMatrix::Identity(n, n) - e.endo();
  FgAbelianGroup cok(n, hcat(one_minus, e.module().relations()));
  GroupHom h(e.module(), e.module(), one_minus);
  FgAbelianGroup ker = kernel_of_hom(h).group;
  return ShiftCokKer{std::move(cok), std::move(ker)};
}

InducedShiftMaps induced_shift_cok_ker(const EndoModule& src, const EndoModule& tgt,
                                       const IntMatrix& intertwiner) {
  GroupHom module_map(src.module(), tgt.module(), intertwiner);
  IntMatrix comm = intertwiner * src.endo() - tgt.endo() * intertwiner;
  if (!is_zero(comm))
    throw CommutationError("intertwiner does not commute with the endomorphisms");

  auto one_minus = [](const EndoModule& e) {
    const Index n = e.module().n_generators();
    return IntMatrix(IntMatrix::Identity(n, n) - e.endo());
  };
  FgAbelianGroup cok_src(src.module().n_generators(),
                         hcat(one_minus(src), src.module().relations()));
  FgAbelianGroup cok_tgt(tgt.module().n_generators(),
                         hcat(one_minus(tgt), tgt.module().relations()));
  GroupHom on_cok(cok_src, cok_tgt, intertwiner);

  KernelData ker_src = kernel_of_hom(GroupHom(src.module(), src.module(), one_minus(src)));
  KernelData ker_tgt = kernel_of_hom(GroupHom(tgt.module(), tgt.module(), one_minus(tgt)));
  IntMatrix coords = solve_exact(ker_tgt.inclusion, intertwiner * ker_src.inclusion);
  GroupHom on_ker(ker_src.group, ker_tgt.group, coords);
  return InducedShiftMaps{std::move(on_cok), std::move(on_ker)};
}

EndoModule tensor_limits(const EndoModule& a, const EndoModule& b) {
  return EndoModule(tensor_product(a.module(), b.module()),
                    kronecker_product(a.endo(), b.endo()));
}

EndoModule tor_limits(const EndoModule& a, const EndoModule& b) {
  GroupHom t = tor_hom(a.endo_hom(), b.endo_hom());
  return EndoModule(t.source(), t.matrix());
}

EndoModule direct_sum(const EndoModule& a, const EndoModule& b) {
  return EndoModule(direct_sum(a.module(), b.module()), block_diag(a.endo(), b.endo()));
}

namespace {

Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(42);
  for (;;) {
    Integer x = rng.get_z_range(n - 2) + 2;
    Integer y = x;
    Integer c = rng.get_z_range(n - 1) + 1;
    Integer d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Integer diff = abs(x - y);
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(Integer n, std::vector<Integer>& out) {
  if (n <= 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    out.push_back(n);
    return;
  }
  for (Integer p = 2; p * p <= n && p < 100000; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      factor_into(n / p, out);
      return;
    }
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<Integer> prime_factors(Integer n) {
  std::vector<Integer> out;
  factor_into(abs(n), out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace smalehom

#include "smalehom/pipeline.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace smalehom {

StableHomology stable_homology(const PutnamComplex& p) {
  ChainComplexZ complex = p.chain_complex();
  std::vector<IntMatrix> gammas = p.gamma_chain();
  StableHomology out;
  for (Index n = 0; n < p.n_degrees(); ++n) {
    GroupHom induced = induced_map_on_homology(complex, gammas, n);
    out.modules.emplace_back(induced.source(), induced.matrix());
    out.invariants.push_back(limit_invariants(out.modules.back()));
  }
  return out;
}

GroupInvariants SpectralSheet::entry(Index p, Index q) const {
  if (q % 2 != 0 || p < 0 || p >= n_columns()) return GroupInvariants{};
  return row[static_cast<std::size_t>(p)].group_invariants();
}

SpectralSheet spectral_sheet(const std::vector<LimitInvariants>& h) {
  SpectralSheet out;
  out.row = h;
  for (Index p = 0; p < static_cast<Index>(h.size()); ++p) {
    if (p % 2 == 0)
      out.rank_bound_k0 += h[static_cast<std::size_t>(p)].rank;
    else
      out.rank_bound_k1 += h[static_cast<std::size_t>(p)].rank;
  }
  return out;
}

RuelleReport ruelle_report(const PutnamComplex& p) {
  const Index d = p.n_degrees();
  RuelleReport out;

  std::vector<FgAbelianGroup> c_groups;
  std::vector<IntMatrix> kernels;
  for (Index n = 0; n < d; ++n) {
    const auto& deg = p.degree(n);
    IntMatrix one_minus = IntMatrix::Identity(deg.rank, deg.rank) - deg.gamma;
    c_groups.emplace_back(deg.rank, one_minus);
    kernels.push_back(kernel_basis(one_minus));
    out.bf.push_back(c_groups.back().invariants());
    out.ker.push_back(GroupInvariants{kernels.back().cols(), {}});
  }
  std::vector<Index> ker_dims;
  for (const auto& k : kernels) ker_dims.push_back(k.cols());
  for (Index n = 1; n < d; ++n) {
    const IntMatrix& dn = *p.degree(n).boundary;
    out.c_boundaries.push_back(dn);
    // d maps ker(1-gamma) to ker(1-gamma) since it commutes with gamma.
    out.cprime_boundaries.push_back(
        solve_exact(kernels[static_cast<std::size_t>(n - 1)],
                    dn * kernels[static_cast<std::size_t>(n)]));
  }
  ChainComplexZ cprime(ker_dims, out.cprime_boundaries);
  for (Index n = 0; n < d; ++n) {
    out.c_homology.push_back(
        homology_of_presented_complex(c_groups, out.c_boundaries, n).invariants());
    out.cprime_homology.push_back(homology_at(cprime, n).invariants());
  }

  auto hc = [&](Index n) -> GroupInvariants {
    if (n < 0 || n >= d) return GroupInvariants{};
    return out.c_homology[static_cast<std::size_t>(n)];
  };
  auto hcp = [&](Index n) -> GroupInvariants {
    if (n < 0 || n >= d) return GroupInvariants{};
    return out.cprime_homology[static_cast<std::size_t>(n)];
  };

  for (Index pp = 0; pp <= d + 1; ++pp) {
    RuelleReport::Segment seg;
    seg.p = pp;
    seg.incoming = hcp(pp - 1);
    seg.h_c = hc(pp);
    seg.outgoing = hcp(pp - 2);
    // The three ways vanishing neighbours pin E^2_{p,0} down:
    //  (a) H_{p-1}(C') = H_{p-2}(C') = 0       => E^2 = H_p(C)
    //  (b) H_p(C) = H_{p+1}(C) = 0             => E^2 = H_{p-1}(C')
    //  (c) H_p(C) = H_{p-1}(C') = 0            => E^2 = 0
    if (seg.incoming.is_trivial() && seg.outgoing.is_trivial()) {
      seg.determined = true;
      seg.value = seg.h_c;
    } else if (seg.h_c.is_trivial() && hc(pp + 1).is_trivial()) {
      seg.determined = true;
      seg.value = seg.incoming;
    } else if (seg.h_c.is_trivial() && seg.incoming.is_trivial()) {
      seg.determined = true;
      seg.value = GroupInvariants{};
    }
    out.segments.push_back(std::move(seg));
  }

  bool all_determined = true;
  for (const auto& s : out.segments) all_determined = all_determined && s.determined;
  auto column = [&](Index pp) -> GroupInvariants {
    if (pp < 0 || pp >= static_cast<Index>(out.segments.size())) return GroupInvariants{};
    return out.segments[static_cast<std::size_t>(pp)].value;
  };
  bool no_differentials = true;
  for (Index pp = 0; pp < static_cast<Index>(out.segments.size()); ++pp)
    for (Index r = 3; pp - r >= 0; r += 2)
      if (!column(pp).is_trivial() && !column(pp - r).is_trivial())
        no_differentials = false;
  out.collapse_certain = all_determined && no_differentials;

  if (out.collapse_certain) {
    for (int parity = 0; parity < 2; ++parity) {
      std::vector<GroupInvariants> layers;
      for (Index pp = parity; pp < static_cast<Index>(out.segments.size()); pp += 2)
        if (!column(pp).is_trivial()) layers.push_back(column(pp));
      std::string name = "K_" + std::to_string(parity);
      if (layers.empty()) {
        out.k_extensions.push_back(name + " = 0");
      } else if (layers.size() == 1) {
        out.k_extensions.push_back(name + " = " + layers[0].to_string());
      } else {
        // Filtration runs from the lowest column (subobject) upward.
        std::string s = "0 -> " + layers[0].to_string() + " -> " + name;
        for (std::size_t i = 1; i < layers.size(); ++i) s += " -> " + layers[i].to_string();
        s += " -> 0";
        out.k_extensions.push_back(std::move(s));
      }
    }
  }
  return out;
}

std::vector<LimitInvariants> kunneth_predict(const StableHomology& a,
                                             const StableHomology& b) {
  const Index da = a.n_degrees();
  const Index db = b.n_degrees();
  std::vector<LimitInvariants> out;
  if (da == 0 || db == 0) return out;
  const Index top = da + db - 1;  // top tensor degree plus one for Tor
  for (Index k = 0; k <= top; ++k) {
    EndoModule acc;
    for (Index i = 0; i < da; ++i) {
      Index j = k - i;
      if (j >= 0 && j < db)
        acc = direct_sum(acc, tensor_limits(a.modules[static_cast<std::size_t>(i)],
                                            b.modules[static_cast<std::size_t>(j)]));
      Index jt = k - 1 - i;
      if (jt >= 0 && jt < db)
        acc = direct_sum(acc, tor_limits(a.modules[static_cast<std::size_t>(i)],
                                         b.modules[static_cast<std::size_t>(jt)]));
    }
    out.push_back(limit_invariants(acc));
  }
  return out;
}

KunnethCheck kunneth_crosscheck(const GraphHom& pi1, const GraphHom& pi2, Index n_max) {
  KunnethCheck out;
  StableHomology h1 = stable_homology(putnam_complex(pi1, n_max));
  StableHomology h2 = stable_homology(putnam_complex(pi2, n_max));
  out.predicted = kunneth_predict(h1, h2);
  out.direct = stable_homology(putnam_complex(product_hom(pi1, pi2), n_max)).invariants;

  const Index top = std::max(static_cast<Index>(out.predicted.size()),
                             static_cast<Index>(out.direct.size()));
  auto at = [](const std::vector<LimitInvariants>& v, Index k) -> GroupInvariants {
    if (k < 0 || k >= static_cast<Index>(v.size())) return GroupInvariants{};
    return v[static_cast<std::size_t>(k)].group_invariants();
  };
  for (Index k = 0; k < top; ++k) {
    bool ok = at(out.predicted, k) == at(out.direct, k);
    out.degree_pass.push_back(ok);
    out.pass = out.pass && ok;
  }
  return out;
}

std::vector<LimitInvariants> odometer_homology(const IntMatrix& b) {
  if (b.rows() != b.cols()) throw DimensionError("odometer matrix must be square");
  const Index n = b.rows();
  Integer det = determinant(b);
  if (abs(det) < 2)
    throw ValidationError("odometer matrix must have |det| >= 2 (expanding datum)");
  IntMatrix bt = b.transpose();
  std::vector<LimitInvariants> out;
  for (Index p = 0; p <= n; ++p)
    out.push_back(limit_invariants(EndoModule::free_with_endo(exterior_power(bt, n - p))));
  return out;
}

ChainComplexZ koszul_complex(const std::vector<IntMatrix>& actions) {
  const Index n = static_cast<Index>(actions.size());
  if (n == 0) throw ValidationError("koszul complex needs at least one action");
  const Index d = actions[0].rows();
  for (const auto& a : actions) {
    if (a.rows() != d || a.cols() != d)
      throw DimensionError("all actions must be square of equal size");
    if (abs(determinant(a)) != 1)
      throw ValidationError("koszul actions must be automorphisms of Z^d");
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      IntMatrix comm = actions[static_cast<std::size_t>(i)] * actions[static_cast<std::size_t>(j)] -
                       actions[static_cast<std::size_t>(j)] * actions[static_cast<std::size_t>(i)];
      if (!is_zero(comm))
        throw CommutationError("koszul actions " + std::to_string(i) + " and " +
                               std::to_string(j) + " do not commute");
    }

  // Degree k carries (N-k)-subsets; the differential wedges in one more
  // generator with coefficient 1 - lambda_i.
  std::vector<Index> dims;
  std::vector<std::vector<std::vector<Index>>> subsets;
  for (Index k = 0; k <= n; ++k) {
    subsets.push_back(k_subsets(n, n - k));
    dims.push_back(static_cast<Index>(subsets.back().size()) * d);
  }
  std::vector<IntMatrix> boundaries;
  for (Index k = 1; k <= n; ++k) {
    const auto& src = subsets[static_cast<std::size_t>(k)];
    const auto& dst = subsets[static_cast<std::size_t>(k - 1)];
    std::map<std::vector<Index>, Index> dst_pos;
    for (Index s = 0; s < static_cast<Index>(dst.size()); ++s)
      dst_pos[dst[static_cast<std::size_t>(s)]] = s;
    IntMatrix bd = IntMatrix::Zero(dims[static_cast<std::size_t>(k - 1)],
                                   dims[static_cast<std::size_t>(k)]);
    for (Index s = 0; s < static_cast<Index>(src.size()); ++s) {
      const auto& set = src[static_cast<std::size_t>(s)];
      for (Index i = 0; i < n; ++i) {
        if (std::binary_search(set.begin(), set.end(), i)) continue;
        std::vector<Index> bigger = set;
        bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), i), i);
        const Index below = static_cast<Index>(
            std::lower_bound(set.begin(), set.end(), i) - set.begin());
        const int sign = (below % 2 == 0) ? 1 : -1;
        IntMatrix block = IntMatrix::Identity(d, d) - actions[static_cast<std::size_t>(i)];
        bd.block(dst_pos.at(bigger) * d, s * d, d, d) += sign * block;
      }
    }
    boundaries.push_back(std::move(bd));
  }
  return ChainComplexZ(std::move(dims), std::move(boundaries));
}

FgAbelianGroup koszul_group_homology(const std::vector<IntMatrix>& actions, Index k) {
  return homology_at(koszul_complex(actions), k);
}

namespace {

struct CosetModule {
  std::vector<Integer> orders;       // m_1, ..., m_N
  std::vector<IntMatrix> actions;    // translation permutations per generator
  IntMatrix adapted;                 // U of the Smith form of B^j
  IntMatrix adapted_inverse;
};

Index coset_index(const std::vector<Integer>& c, const std::vector<Integer>& orders) {
  Integer idx = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + c[i];
  return static_cast<Index>(idx.get_si());
}

// The coset space Z^N / B^j Z^N in Smith-adapted coordinates, with the
// translation action of the standard generators.
CosetModule coset_module(const IntMatrix& b_power) {
  const Index n = b_power.rows();
  SmithDecomposition snf = smith_normal_form(b_power);
  CosetModule out;
  out.orders = snf.factors;
  out.adapted = snf.u;
  out.adapted_inverse = snf.u_inverse;
  Integer total = 1;
  for (const Integer& m : out.orders) total *= m;
  if (total > 100000)
    throw ValidationError("tower level has more than 100000 cosets; lower the level count");
  const Index size = static_cast<Index>(total.get_si());

  std::vector<std::vector<Integer>> tuples;
  tuples.reserve(static_cast<std::size_t>(size));
  std::vector<Integer> cur(static_cast<std::size_t>(n), 0);
  for (Index t = 0; t < size; ++t) {
    tuples.push_back(cur);
    for (Index i = n - 1; i >= 0; --i) {
      cur[static_cast<std::size_t>(i)] += 1;
      if (cur[static_cast<std::size_t>(i)] < out.orders[static_cast<std::size_t>(i)]) break;
      cur[static_cast<std::size_t>(i)] = 0;
    }
  }
  for (Index g = 0; g < n; ++g) {
    IntMatrix perm = IntMatrix::Zero(size, size);
    for (Index t = 0; t < size; ++t) {
      std::vector<Integer> shifted = tuples[static_cast<std::size_t>(t)];
      for (Index i = 0; i < n; ++i) {
        shifted[static_cast<std::size_t>(i)] =
            (shifted[static_cast<std::size_t>(i)] + out.adapted(i, g)) %
            out.orders[static_cast<std::size_t>(i)];
        if (shifted[static_cast<std::size_t>(i)] < 0)
          shifted[static_cast<std::size_t>(i)] += out.orders[static_cast<std::size_t>(i)];
      }
      perm(coset_index(shifted, out.orders), t) = 1;
    }
    out.actions.push_back(std::move(perm));
  }
  return out;
}

// Pullback of indicator functions along Z^N / B^{j+1} -> Z^N / B^j.
IntMatrix constant_on_fibers_embedding(const CosetModule& coarse, const CosetModule& fine) {
  const Index n = coarse.adapted.rows();
  Integer fine_total = 1, coarse_total = 1;
  for (const Integer& m : fine.orders) fine_total *= m;
  for (const Integer& m : coarse.orders) coarse_total *= m;
  const Index rows = static_cast<Index>(fine_total.get_si());
  const Index cols = static_cast<Index>(coarse_total.get_si());
  IntMatrix out = IntMatrix::Zero(rows, cols);

  std::vector<Integer> c(static_cast<std::size_t>(n), 0);
  for (Index t = 0; t < rows; ++t) {
    // Integer representative of the fine coset, then coarse coordinates.
    IntVector cvec(n);
    for (Index i = 0; i < n; ++i) cvec(i) = c[static_cast<std::size_t>(i)];
    IntVector rep = fine.adapted_inverse * cvec;
    IntVector coarse_coord = coarse.adapted * rep;
    std::vector<Integer> cc(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
      Integer m = coarse.orders[static_cast<std::size_t>(i)];
      Integer r = coarse_coord(i) % m;
      if (r < 0) r += m;
      cc[static_cast<std::size_t>(i)] = r;
    }
    out(t, coset_index(cc, coarse.orders)) = 1;
    for (Index i = n - 1; i >= 0; --i) {
      c[static_cast<std::size_t>(i)] += 1;
      if (c[static_cast<std::size_t>(i)] < fine.orders[static_cast<std::size_t>(i)]) break;
      c[static_cast<std::size_t>(i)] = 0;
    }
  }
  return out;
}

}  // namespace

OdometerTower odometer_level_tower(const IntMatrix& b, Index n_levels) {
  if (b.rows() != b.cols()) throw DimensionError("odometer matrix must be square");
  const Index n = b.rows();
  Integer det = determinant(b);
  if (abs(det) < 2)
    throw ValidationError("odometer matrix must have |det| >= 2 (expanding datum)");
  if (n_levels < 1) throw ValidationError("tower needs at least one level");

  OdometerTower out;
  out.n = n;
  IntMatrix bt = b.transpose();
  for (Index k = 0; k <= n; ++k) out.expected.push_back(exterior_power(bt, n - k));

  std::vector<CosetModule> modules;
  std::vector<ChainComplexZ> complexes;
  IntMatrix b_power = IntMatrix::Identity(n, n);
  for (Index j = 0; j < n_levels; ++j) {
    CosetModule cm = coset_module(b_power);
    complexes.push_back(koszul_complex(cm.actions));
    OdometerTower::Level level;
    if (j > 0) level.coset_orders = cm.orders;
    for (Index k = 0; k <= n; ++k) {
      FgAbelianGroup h = homology_at(complexes.back(), k);
      if (!h.torsion().empty())
        throw Error("odometer koszul homology unexpectedly has torsion");
      level.homology.push_back(h.invariants());
    }
    out.levels.push_back(std::move(level));
    modules.push_back(std::move(cm));
    b_power = b_power * b;
  }

  for (Index j = 0; j + 1 < n_levels; ++j) {
    IntMatrix embed = constant_on_fibers_embedding(modules[static_cast<std::size_t>(j)],
                                                   modules[static_cast<std::size_t>(j + 1)]);
    std::vector<IntMatrix> chain_map;
    for (Index k = 0; k <= n; ++k) {
      const Index blocks = static_cast<Index>(k_subsets(n, n - k).size());
      chain_map.push_back(
          kronecker_product(IntMatrix::Identity(blocks, blocks), embed));
    }
    std::vector<IntMatrix> step;
    std::vector<bool> match, equiv;
    for (Index k = 0; k <= n; ++k) {
      GroupHom induced = induced_map_between_complexes(
          complexes[static_cast<std::size_t>(j)], complexes[static_cast<std::size_t>(j + 1)],
          chain_map, k);
      IntMatrix on_free = induced_on_free_quotient(induced);
      const IntMatrix& want = out.expected[static_cast<std::size_t>(k)];
      bool literal = on_free.rows() == want.rows() && on_free.cols() == want.cols() &&
                     is_zero(on_free - want);
      bool equivalent =
          smith_normal_form(on_free).factors == smith_normal_form(want).factors;
      out.all_equivalent = out.all_equivalent && equivalent;
      match.push_back(literal);
      equiv.push_back(equivalent);
      step.push_back(std::move(on_free));
    }
    out.connecting.push_back(std::move(step));
    out.matches_expected.push_back(std::move(match));
    out.equivalent_expected.push_back(std::move(equiv));
  }
  return out;
}

}  // namespace smalehom

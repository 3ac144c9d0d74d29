
#include <doctest.h>

#include <algorithm>

#include "graph_util.hpp"
#include "smalehom/pipeline.hpp"

using namespace smalehom;
using namespace smalehom::testutil;

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(static_cast<Index>(rows.size()),
              rows.size() ? static_cast<Index>(rows.begin()->size()) : 0);
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

GroupInvariants inv(Index rank, std::vector<Integer> torsion = {}) {
  return GroupInvariants{rank, std::move(torsion)};
}

bool is_z_inverse_m(const LimitInvariants& l, std::vector<Integer> primes) {
  return l.rank == 1 && l.eventual_torsion.empty() && l.tag == LimitTag::localized &&
         l.localized_primes == primes;
}

std::vector<Integer> distinct_primes(long m) {
  std::vector<Integer> ps = prime_factors(m);
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

}  // namespace

TEST_CASE("stable homology of the solenoid presets") {
  for (Index m : {2, 3, 5, 6}) {
    StableHomology h = stable_homology(solenoid_preset(m));
    REQUIRE(h.n_degrees() == 2);
    CHECK(is_z_inverse_m(h.invariants[0], distinct_primes(m)));
    CHECK(h.invariants[1].rank == 1);
    CHECK(h.invariants[1].eventual_torsion.empty());
    CHECK(h.invariants[1].tag == LimitTag::free);
  }
}

TEST_CASE("stable homology of identity and fold recodings") {
  Graph g = complete_graph(3);
  StableHomology id_h = stable_homology(putnam_complex(GraphHom::identity(g)));
  REQUIRE(id_h.n_degrees() == 1);
  LimitInvariants dim = limit_invariants(dimension_group(g));
  CHECK(id_h.invariants[0].rank == dim.rank);
  CHECK(id_h.invariants[0].eventual_torsion == dim.eventual_torsion);

  for (Index m : {2, 3}) {
    StableHomology fold_h = stable_homology(putnam_complex(fold_hom(m)));
    REQUIRE(fold_h.n_degrees() == 2);
    CHECK(is_z_inverse_m(fold_h.invariants[0], {Integer(m)}));
    CHECK(fold_h.invariants[1].tag == LimitTag::zero);
  }
}

TEST_CASE("spectral sheet shape and rank bounds") {
  StableHomology h = stable_homology(solenoid_preset(3));
  SpectralSheet s = spectral_sheet(h.invariants);
  CHECK(s.rank_bound_k0 == 1);
  CHECK(s.rank_bound_k1 == 1);
  CHECK(s.entry(0, 1).is_trivial());
  CHECK(s.entry(0, -3).is_trivial());
  CHECK(s.entry(0, 2) == s.entry(0, 0));
  CHECK(s.entry(1, 0) == inv(1));

  SpectralSheet empty = spectral_sheet({});
  CHECK(empty.rank_bound_k0 == 0);
  CHECK(empty.rank_bound_k1 == 0);

  SpectralSheet fold = spectral_sheet(stable_homology(putnam_complex(fold_hom(2))).invariants);
  CHECK(fold.rank_bound_k0 == 1);
  CHECK(fold.rank_bound_k1 == 0);
}

TEST_CASE("ruelle report for the solenoid") {
  for (Index m : {2, 3, 5, 6}) {
    RuelleReport r = ruelle_report(solenoid_preset(m));
    GroupInvariants zm1 = (m == 2) ? inv(0) : inv(0, {Integer(m - 1)});
    REQUIRE(r.bf.size() == 2);
    CHECK(r.bf[0] == zm1);
    CHECK(r.bf[1] == inv(1));
    CHECK(r.ker[0] == inv(0));
    CHECK(r.ker[1] == inv(1));
    CHECK(is_zero(r.c_boundaries[0]));
    CHECK(is_zero(r.cprime_boundaries[0]));
    CHECK(r.c_homology[0] == zm1);
    CHECK(r.c_homology[1] == inv(1));
    CHECK(r.cprime_homology[0] == inv(0));
    CHECK(r.cprime_homology[1] == inv(1));

    REQUIRE(r.segments.size() >= 4);
    CHECK(r.segments[0].determined);
    CHECK(r.segments[0].value == zm1);
    CHECK(r.segments[1].determined);
    CHECK(r.segments[1].value == inv(1));
    CHECK(r.segments[2].determined);
    CHECK(r.segments[2].value == inv(1));
    CHECK(r.segments[3].determined);
    CHECK(r.segments[3].value == inv(0));

    CHECK(r.collapse_certain);
    REQUIRE(r.k_extensions.size() == 2);
    if (m >= 3)
      CHECK(r.k_extensions[0] == "0 -> Z/" + Integer(m - 1).get_str() + " -> K_0 -> Z -> 0");
    else
      CHECK(r.k_extensions[0] == "K_0 = Z");
    CHECK(r.k_extensions[1] == "K_1 = Z");

    // Pimsner-Voiculescu cross-check: the K_0 layers assemble to
    // Z (+) Z/(m-1) because the quotient layer is free.
    Index rank = r.segments[0].value.free_rank + r.segments[2].value.free_rank;
    std::vector<Integer> torsion = r.segments[0].value.torsion;
    CHECK(rank == 1);
    CHECK(torsion == zm1.torsion);
  }
}

TEST_CASE("ruelle report for one-column complexes") {
  Graph g = complete_graph(3);
  RuelleReport r = ruelle_report(putnam_complex(GraphHom::identity(g)));
  REQUIRE(r.bf.size() == 1);
  CHECK(r.bf[0] == inv(0, {2}));
  CHECK(r.ker[0] == inv(0));
  // One segment per p with zero flanking terms; E2_00 = BF, the rest vanish.
  CHECK(r.segments[0].determined);
  CHECK(r.segments[0].value == inv(0, {2}));
  for (std::size_t p = 1; p < r.segments.size(); ++p) {
    CHECK(r.segments[p].determined);
    CHECK(r.segments[p].value == inv(0));
  }
  // A one-loop graph has ker(1-gamma) = Z, which must surface at p = 1.
  RuelleReport loop = ruelle_report(putnam_complex(GraphHom::identity(full_shift_graph(1))));
  CHECK(loop.segments[0].value == inv(1));
  CHECK(loop.segments[1].determined);
  CHECK(loop.segments[1].value == inv(1));
}

TEST_CASE("ruelle report for the fold complex") {
  const Index m = 3;
  RuelleReport r = ruelle_report(putnam_complex(fold_hom(m)));
  REQUIRE(r.bf.size() == 2);
  CHECK(r.bf[0] == inv(0, {2, 2}));  // Z/(m-1) (+) Z/(m-1)
  CHECK(r.bf[1] == inv(0, {2}));
  CHECK(r.c_homology[0] == inv(0, {2}));
  CHECK(r.c_homology[1] == inv(0));
  CHECK(r.cprime_homology[0] == inv(0));
  CHECK(r.cprime_homology[1] == inv(0));
  CHECK(r.segments[0].value == inv(0, {2}));
  CHECK(r.segments[1].value == inv(0));
  CHECK(r.segments[2].value == inv(0));
}

TEST_CASE("kunneth prediction for solenoid products") {
  StableHomology h2 = stable_homology(solenoid_preset(2));
  StableHomology h3 = stable_homology(solenoid_preset(3));
  std::vector<LimitInvariants> pred = kunneth_predict(h2, h3);
  REQUIRE(pred.size() >= 3);
  CHECK(is_z_inverse_m(pred[0], {2, 3}));
  CHECK(pred[1].rank == 2);
  CHECK(pred[1].eventual_torsion.empty());
  CHECK(pred[2].rank == 1);
  CHECK(pred[2].eventual_torsion.empty());
  for (std::size_t k = 3; k < pred.size(); ++k) CHECK(pred[k].tag == LimitTag::zero);
}

TEST_CASE("kunneth prediction units and torsion corrections") {
  // (Z in degree 0) acts as the unit.
  StableHomology unit = stable_homology(putnam_complex(GraphHom::identity(full_shift_graph(1))));
  StableHomology sol = stable_homology(solenoid_preset(2));
  std::vector<LimitInvariants> pred = kunneth_predict(sol, unit);
  REQUIRE(pred.size() >= 2);
  CHECK(pred[0].group_invariants() == sol.invariants[0].group_invariants());
  CHECK(pred[1].group_invariants() == sol.invariants[1].group_invariants());

  // (Z/2 in degree 0) squared picks up the Tor term in degree 1.
  EndoModule z2(FgAbelianGroup::cyclic(2), IntMatrix::Identity(1, 1));
  StableHomology torsion;
  torsion.modules = {z2};
  torsion.invariants = {limit_invariants(z2)};
  std::vector<LimitInvariants> tt = kunneth_predict(torsion, torsion);
  REQUIRE(tt.size() == 2);
  CHECK(tt[0].group_invariants() == inv(0, {2}));
  CHECK(tt[1].group_invariants() == inv(0, {2}));
}

TEST_CASE("kunneth crosscheck on fold and identity recodings") {
  for (Index m1 : {2, 3})
    for (Index m2 : {2, 3}) {
      KunnethCheck k = kunneth_crosscheck(fold_hom(m1), fold_hom(m2));
      CHECK(k.pass);
    }
  KunnethCheck ids = kunneth_crosscheck(GraphHom::identity(cycle_graph(2)),
                                        GraphHom::identity(full_shift_graph(2)));
  CHECK(ids.pass);
  KunnethCheck mixed = kunneth_crosscheck(fold_hom(2), GraphHom::identity(full_shift_graph(3)));
  CHECK(mixed.pass);
}

TEST_CASE("reduced and unreduced complexes have the same limit homology") {
  std::vector<GraphHom> corpus;
  corpus.push_back(fold_hom(2));
  corpus.push_back(GraphHom::identity(cycle_graph(2)));
  for (int trial = 0; trial < 3; ++trial) corpus.push_back(GraphHom::fold(random_graph(3, 5)));
  for (const GraphHom& pi : corpus) {
    const Index n_max = 3;
    StableHomology reduced = stable_homology(putnam_complex(pi, n_max));
    StableHomology unreduced = stable_homology(unreduced_complex(pi, n_max));
    for (Index p = 0; p < n_max; ++p) {
      GroupInvariants lhs = p < reduced.n_degrees()
                                ? reduced.invariants[static_cast<std::size_t>(p)].group_invariants()
                                : GroupInvariants{};
      GroupInvariants rhs = unreduced.invariants[static_cast<std::size_t>(p)].group_invariants();
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("odometer homology pinned values") {
  auto adding = odometer_homology(from_rows({{2}}));
  REQUIRE(adding.size() == 2);
  CHECK(is_z_inverse_m(adding[0], {2}));
  CHECK(adding[1].rank == 1);
  CHECK(adding[1].tag == LimitTag::free);

  auto diag = odometer_homology(from_rows({{2, 0}, {0, 3}}));
  REQUIRE(diag.size() == 3);
  CHECK(is_z_inverse_m(diag[0], {2, 3}));
  CHECK(diag[1].rank == 2);
  CHECK(diag[1].tag == LimitTag::localized);
  CHECK(diag[1].localized_primes == std::vector<Integer>{2, 3});
  CHECK(diag[2].rank == 1);
  CHECK(diag[2].tag == LimitTag::free);

  auto twoi = odometer_homology(from_rows({{2, 0}, {0, 2}}));
  Index even_rank = twoi[0].rank + twoi[2].rank;
  Index odd_rank = twoi[1].rank;
  CHECK(even_rank == 2);
  CHECK(odd_rank == 2);

  CHECK_THROWS_AS(odometer_homology(from_rows({{1}})), ValidationError);
  CHECK_THROWS_AS(odometer_homology(IntMatrix::Zero(2, 3)), DimensionError);
}

TEST_CASE("koszul group homology pinned values") {
  // N = 1, trivial action on Z.
  std::vector<IntMatrix> trivial1{IntMatrix::Identity(1, 1)};
  CHECK(koszul_group_homology(trivial1, 0).invariants() == inv(1));
  CHECK(koszul_group_homology(trivial1, 1).invariants() == inv(1));

  // N = 1, the swap on Z^2.
  std::vector<IntMatrix> swap1{from_rows({{0, 1}, {1, 0}})};
  CHECK(koszul_group_homology(swap1, 0).invariants() == inv(1));
  CHECK(koszul_group_homology(swap1, 1).invariants() == inv(1));

  // N = 2, both actions trivial on Z: ranks (1, 2, 1).
  std::vector<IntMatrix> trivial2{IntMatrix::Identity(1, 1), IntMatrix::Identity(1, 1)};
  CHECK(koszul_group_homology(trivial2, 0).invariants() == inv(1));
  CHECK(koszul_group_homology(trivial2, 1).invariants() == inv(2));
  CHECK(koszul_group_homology(trivial2, 2).invariants() == inv(1));

  // Violations.
  std::vector<IntMatrix> noncomm{from_rows({{0, 1}, {1, 0}}), from_rows({{1, 1}, {0, 1}})};
  CHECK_THROWS_AS(koszul_group_homology(noncomm, 0), CommutationError);
  std::vector<IntMatrix> nonauto{from_rows({{2}})};
  CHECK_THROWS_AS(koszul_group_homology(nonauto, 0), ValidationError);
}

TEST_CASE("odometer tower for the adding machine") {
  OdometerTower t = odometer_level_tower(from_rows({{2}}), 3);
  REQUIRE(t.levels.size() == 3);
  for (const auto& level : t.levels) {
    CHECK(level.homology[0] == inv(1));
    CHECK(level.homology[1] == inv(1));
  }
  CHECK(t.levels[1].coset_orders == std::vector<Integer>{2});
  CHECK(t.levels[2].coset_orders == std::vector<Integer>{4});
  REQUIRE(t.connecting.size() == 2);
  for (const auto& step : t.connecting) {
    REQUIRE(step.size() == 2);
    CHECK(step[0](0, 0) == 2);  // H_0 grows by the determinant
    CHECK(step[1](0, 0) == 1);  // H_1 is stable
  }
  CHECK(t.all_equivalent);
}

TEST_CASE("odometer tower for 2I and a non-diagonal matrix") {
  OdometerTower t = odometer_level_tower(from_rows({{2, 0}, {0, 2}}), 2);
  REQUIRE(t.levels.size() == 2);
  for (const auto& level : t.levels) {
    CHECK(level.homology[0] == inv(1));
    CHECK(level.homology[1] == inv(2));
    CHECK(level.homology[2] == inv(1));
  }
  REQUIRE(t.connecting.size() == 1);
  CHECK(is_zero(t.connecting[0][0] - IntMatrix::Constant(1, 1, 4)));
  CHECK(is_zero(t.connecting[0][1] - IntMatrix(Integer(2) * IntMatrix::Identity(2, 2))));
  CHECK(is_zero(t.connecting[0][2] - IntMatrix::Identity(1, 1)));
  CHECK(t.all_equivalent);

  OdometerTower skew = odometer_level_tower(from_rows({{1, 1}, {-1, 1}}), 3);
  CHECK(skew.all_equivalent);
  for (const auto& level : skew.levels) {
    CHECK(level.homology[0] == inv(1));
    CHECK(level.homology[1] == inv(2));
    CHECK(level.homology[2] == inv(1));
  }
}

TEST_CASE("tower connecting maps match the exterior powers for [3]") {
  OdometerTower t = odometer_level_tower(from_rows({{3}}), 2);
  CHECK(t.levels[1].coset_orders == std::vector<Integer>{3});
  CHECK(t.connecting[0][0](0, 0) == 3);
  CHECK(t.connecting[0][1](0, 0) == 1);
  CHECK(t.all_equivalent);
}

namespace {

// Three disjoint copies collapsing onto one: exercises the signed orbit
// machinery through level 2 (free S_3 orbits).
GraphHom triple_fold(const Graph& g) {
  Graph tripled = disjoint_union(disjoint_union(g, g), g);
  std::vector<Index> vm, em;
  for (int copy = 0; copy < 3; ++copy)
    for (Index v = 0; v < g.n_vertices(); ++v) vm.push_back(v);
  for (int copy = 0; copy < 3; ++copy)
    for (Index e = 0; e < g.n_edges(); ++e) em.push_back(e);
  return GraphHom(std::move(tripled), g, std::move(vm), std::move(em));
}

}  // namespace

TEST_CASE("triple fold: signed complex through level 2") {
  const Index m = 2;
  GraphHom pi = triple_fold(full_shift_graph(m));
  PutnamComplex p = putnam_complex(pi);
  REQUIRE(p.n_degrees() == 3);
  CHECK(p.degree(0).rank == 3);
  CHECK(p.degree(1).rank == 3);
  CHECK(p.degree(2).rank == 1);

  StableHomology h = stable_homology(p);
  CHECK(is_z_inverse_m(h.invariants[0], {Integer(m)}));
  CHECK(h.invariants[1].tag == LimitTag::zero);
  CHECK(h.invariants[2].tag == LimitTag::zero);

  // Reduced and unreduced agree degreewise here as well.
  StableHomology un = stable_homology(unreduced_complex(pi, 3));
  for (Index q = 0; q < 3; ++q) {
    GroupInvariants lhs = q < h.n_degrees()
                              ? h.invariants[static_cast<std::size_t>(q)].group_invariants()
                              : GroupInvariants{};
    CHECK(lhs == un.invariants[static_cast<std::size_t>(q)].group_invariants());
  }
}

TEST_CASE("invalid recoding data fails loudly in the unreduced complex") {
  // Collapsing two loops onto one is not an s-bijective recoding; the
  // commuting validation rejects it at the first level that sees it.
  Graph two = full_shift_graph(2);
  Graph one = full_shift_graph(1);
  GraphHom collapse(two, one, {0}, {0, 0});
  CHECK_THROWS_AS(unreduced_complex(collapse, 2), CommutationError);
}

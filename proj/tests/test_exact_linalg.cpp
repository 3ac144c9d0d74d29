
#include <doctest.h>

#include "smalehom/exact_linalg.hpp"
#include "test_util.hpp"

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

std::vector<Integer> factors_of(const IntMatrix& a) {
  return smith_normal_form(a).factors;
}

void check_decomposition(const IntMatrix& a) {
  SmithDecomposition d = smith_normal_form(a);
  CHECK(is_zero(d.u * a * d.v - d.s));
  CHECK(abs(laplace_det(d.u)) == 1);
  CHECK(abs(laplace_det(d.v)) == 1);
  CHECK(is_zero(d.u * d.u_inverse - IntMatrix::Identity(a.rows(), a.rows())));
  CHECK(is_zero(d.v * d.v_inverse - IntMatrix::Identity(a.cols(), a.cols())));
  // Diagonal, nonnegative, divisibility chain, zeros trailing.
  for (Index i = 0; i < d.s.rows(); ++i)
    for (Index j = 0; j < d.s.cols(); ++j)
      if (i != j) CHECK(d.s(i, j) == 0);
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    CHECK(d.factors[i] >= 0);
    if (i + 1 < d.factors.size() && d.factors[i + 1] != 0) {
      CHECK(d.factors[i] != 0);
      CHECK(d.factors[i + 1] % d.factors[i] == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
  CHECK(factors_of(from_rows({{2, 4}, {6, 8}})) == std::vector<Integer>{2, 4});
  CHECK(factors_of(IntMatrix::Identity(3, 3)) == std::vector<Integer>{1, 1, 1});
  CHECK(factors_of(from_rows({{0}})) == std::vector<Integer>{0});
  SmithDecomposition zero = smith_normal_form(from_rows({{0}}));
  CHECK(zero.s(0, 0) == 0);
  check_decomposition(from_rows({{2, 4}, {6, 8}}));
}

TEST_CASE("smith normal form is deterministic") {
  IntMatrix a = random_matrix(4, 5, -9, 9);
  SmithDecomposition d1 = smith_normal_form(a);
  SmithDecomposition d2 = smith_normal_form(a);
  CHECK(is_zero(d1.u - d2.u));
  CHECK(is_zero(d1.v - d2.v));
  CHECK(d1.factors == d2.factors);
}

TEST_CASE("smith normal form properties on random matrices") {
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<Index> size(0, 5);
    IntMatrix a = random_matrix(size(rng()), size(rng()), -5, 5);
    check_decomposition(a);
    // Product of the first k factors equals the gcd of the k x k minors.
    if (a.rows() <= 4 && a.cols() <= 4) {
      auto factors = factors_of(a);
      Integer prod = 1;
      for (Index k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
        prod *= factors[static_cast<std::size_t>(k - 1)];
        CHECK(prod == minor_gcd(a, k));
      }
    }
    // Transpose invariance.
    IntMatrix at = a.transpose();
    CHECK(factors_of(a) == factors_of(at));
  }
}

TEST_CASE("kernel basis on pinned examples") {
  IntMatrix a = from_rows({{1, -1}, {-1, 1}});
  IntMatrix k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  CHECK(is_zero(a * k));
  // Brute force: Av = 0 on a small box exactly for multiples of (1,1).
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y) {
      IntMatrix v(2, 1);
      v(0, 0) = x;
      v(1, 0) = y;
      bool in_kernel = is_zero(a * v);
      CHECK(in_kernel == (x == y));
      if (in_kernel) {
        // Saturation: every kernel vector is an integer combination of the
        // basis; for one column that means componentwise divisibility.
        CHECK(lattice_contains(k, v));
      }
    }
  CHECK(kernel_basis(IntMatrix::Identity(2, 2)).cols() == 0);
  IntMatrix z = kernel_basis(IntMatrix::Zero(2, 2));
  CHECK(z.cols() == 2);
  CHECK(abs(laplace_det(z)) == 1);  // spans all of Z^2
}

TEST_CASE("kernel basis properties") {
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<Index> size(1, 4);
    IntMatrix a = random_matrix(size(rng()), size(rng()), -4, 4);
    IntMatrix k = kernel_basis(a);
    CHECK(is_zero(a * k));
    CHECK(k.cols() == a.cols() - minor_rank(a));
    if (k.cols() > 0) {
      // Columns are linearly independent over Q: some maximal minor is nonzero.
      CHECK(minor_rank(k) == k.cols());
    }
  }
}

TEST_CASE("cokernel invariants on pinned examples") {
  IntMatrix one_minus_m(1, 1);
  one_minus_m(0, 0) = 1 - 3;
  GroupInvariants g = cokernel_invariants(one_minus_m);
  CHECK(g.free_rank == 0);
  CHECK(g.torsion == std::vector<Integer>{2});

  GroupInvariants free2 = cokernel_invariants(IntMatrix::Zero(2, 0));
  CHECK(free2.free_rank == 2);
  CHECK(free2.torsion.empty());

  GroupInvariants mixed = cokernel_invariants(from_rows({{1, -1}, {-1, 1}}));
  CHECK(mixed.free_rank == 1);
  CHECK(mixed.torsion.empty());
}

TEST_CASE("cokernel invariants agree with brute-force quotient enumeration") {
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 40; ++trial) {
    std::uniform_int_distribution<Index> size(1, 3);
    Index n = size(rng());
    std::uniform_int_distribution<Index> extra(0, 1);
    IntMatrix a = random_matrix(n, n + extra(rng()), -3, 3);
    BruteQuotient q = BruteQuotient::build(a);
    if (!q.finite || !q.tractable) continue;
    ++tested;
    GroupInvariants inv = cokernel_invariants(a);
    CHECK(inv.free_rank == 0);
    Integer order = 1;
    for (const Integer& t : inv.torsion) order *= t;
    CHECK(order == q.order);
    for (const auto& [k, count] : q.killed_by) {
      Integer expect = 1;
      for (const Integer& t : inv.torsion) {
        Integer g;
        Integer kk(k);
        mpz_gcd(g.get_mpz_t(), kk.get_mpz_t(), t.get_mpz_t());
        expect *= g;
      }
      CHECK(expect == count);
    }
  }
  CHECK(tested >= 20);
}

TEST_CASE("determinant matches laplace expansion") {
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<Index> size(0, 5);
    Index n = size(rng());
    IntMatrix a = random_matrix(n, n, -6, 6);
    CHECK(determinant(a) == laplace_det(a));
  }
}

TEST_CASE("exterior power on pinned examples") {
  IntMatrix d23 = from_rows({{2, 0}, {0, 3}});
  IntMatrix top = exterior_power(d23, 2);
  REQUIRE(top.rows() == 1);
  CHECK(top(0, 0) == 6);

  IntMatrix a = from_rows({{1, 1}, {-1, 1}});
  CHECK(is_zero(exterior_power(a, 1) - a));

  IntMatrix u = from_rows({{1, 1}, {0, 1}});
  IntMatrix v = from_rows({{2, 0}, {0, 3}});
  IntMatrix lhs = exterior_power(IntMatrix(u * v), 2);
  IntMatrix rhs = exterior_power(u, 2) * exterior_power(v, 2);
  CHECK(is_zero(lhs - rhs));
  CHECK(lhs(0, 0) == 6);

  IntMatrix e0 = exterior_power(a, 0);
  REQUIRE(e0.rows() == 1);
  CHECK(e0(0, 0) == 1);

  CHECK_THROWS_AS(exterior_power(a, 3), DimensionError);
  CHECK_THROWS_AS(exterior_power(IntMatrix::Zero(2, 3), 1), DimensionError);
}

TEST_CASE("exterior power functoriality") {
  for (Index n : {3, 4}) {
    IntMatrix a = random_matrix(n, n, -3, 3);
    IntMatrix b = random_matrix(n, n, -3, 3);
    for (Index k = 0; k <= n; ++k) {
      IntMatrix lhs = exterior_power(IntMatrix(a * b), k);
      IntMatrix rhs = exterior_power(a, k) * exterior_power(b, k);
      CHECK(is_zero(lhs - rhs));
      IntMatrix id = exterior_power(IntMatrix(IntMatrix::Identity(n, n)), k);
      CHECK(is_zero(id - IntMatrix::Identity(id.rows(), id.cols())));
    }
  }
}

TEST_CASE("exact solve and lattice helpers") {
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix a = random_matrix(3, 2, -4, 4);
    IntMatrix x0 = random_matrix(2, 2, -3, 3);
    IntMatrix b = a * x0;
    IntMatrix x = solve_exact(a, b);
    CHECK(is_zero(a * x - b));
    CHECK(lattice_contains(a, b));

    IntMatrix basis = image_lattice_basis(a);
    CHECK(lattices_equal(basis, a));
    CHECK(basis.cols() == minor_rank(a));
  }
  // Unsolvable system.
  IntMatrix two(1, 1);
  two(0, 0) = 2;
  IntMatrix one(1, 1);
  one(0, 0) = 1;
  CHECK(!lattice_contains(two, one));
  CHECK_THROWS_AS(solve_exact(two, one), Error);
}

TEST_CASE("saturation basis") {
  IntMatrix a(2, 1);
  a(0, 0) = 2;
  a(1, 0) = 4;
  IntMatrix sat = saturation_basis(a);
  REQUIRE(sat.cols() == 1);
  // (1, 2) spans the saturation.
  IntMatrix v(2, 1);
  v(0, 0) = 1;
  v(1, 0) = 2;
  CHECK(lattices_equal(sat, v));
}

#include "doctest.h"

#include <random>

#include "liftcert/threemanifold.hpp"

using namespace liftcert;

namespace {

ConstructionInstance instance(std::uint64_t n, std::uint64_t m, PrimeSet a, PrimeSet b) {
  auto r = check_admissible(n, m, a, b);
  REQUIRE(r.admissible());
  return build_instance(*r.pair);
}

}  // namespace

TEST_SUITE("threemanifold") {

TEST_CASE("mapping torus homology") {
  const auto cat = mapping_torus_h1(IntMatrix{{2, 1}, {1, 1}});
  CHECK(cat.h1_free_rank == 1);
  CHECK(cat.h1_torsion.is_trivial());
  CHECK(cat.det_shifted == -1);
  CHECK(cat.to_string() == "Z");

  const auto id = mapping_torus_h1(IntMatrix::identity(2));
  CHECK(id.h1_free_rank == 3);
  CHECK(id.to_string() == "Z^3");

  const auto four = mapping_torus_h1(IntMatrix{{3, 1}, {2, 1}});
  CHECK(four.h1_free_rank == 1);
  CHECK(four.h1_torsion.order() == 2);
  CHECK(four.to_string() == "Z + Z/2");

  // torsion order is |det(M - I)| whenever it is nonzero
  const auto cat5 = mapping_torus_h1(IntMatrix{{2, 1}, {1, 1}}.pow(2));
  CHECK(cat5.h1_torsion.order() == 5);
}

TEST_CASE("conjugate monodromies have isomorphic mapping torus homology") {
  const auto f = lift_to_X(TorusMap(2, 1, 1, 1)).matrix4;
  const auto rec = conjugate_monodromy_h1_equal(f, 6);
  CHECK(rec.h1_isomorphic);
  CHECK(rec.monodromies_equal);

  const auto t = transvection({Integer(1), Integer(0), Integer(0), Integer(0)});
  const auto g = transvection({Integer(0), Integer(1), Integer(1), Integer(0)});
  const auto other = conjugate_monodromy_h1_equal(t * f, 2, g);
  CHECK(other.h1_isomorphic);
  CHECK_THROWS_AS(conjugate_monodromy_h1_equal(f, 1, IntMatrix::identity(4) * 2), std::invalid_argument);
}

TEST_CASE("(6, 4) example ladder") {
  const auto ladder = cover_ladder(instance(6, 4, {}, {2}));
  CHECK(ladder.deg_tilde_over_m1 == 12);
  CHECK(ladder.deg_tilde_over_m2 == 12);
  CHECK(ladder.deg_mi_over_n == 2);
  CHECK(ladder.deg_tilde_over_n == 24);
  CHECK(ladder.fiber_genus_tilde == 25);
  CHECK(ladder.fiber_genus_mi == 3);
  CHECK(ladder.fiber_genus_n == 2);
  CHECK(ladder.witness_prime == 2);
  CHECK(ladder.degrees_multiply);
  CHECK_FALSE(are_isomorphic(ladder.covering_group_1, ladder.covering_group_2));
}

TEST_CASE("two-prime family") {
  const auto rep = family_certificate(PrimeSet{2, 3}, {TorusMap(2, 1, 1, 1), TorusMap(3, 1, 2, 1)}, 10);
  CHECK(rep.n == 36);
  CHECK(rep.m == 6);
  CHECK(rep.splittings.size() == 3);
  CHECK(rep.kernel_pairs_distinct);
  for (const auto& s : rep.splittings) CHECK(s.ladder.fiber_genus_tilde == 217);
  REQUIRE(rep.independence.size() == 1);
  CHECK(rep.independence[0].independent);
  CHECK(rep.passed());
}

TEST_CASE("duplicate matrix is flagged") {
  const auto rep = family_certificate(PrimeSet{2}, {TorusMap(2, 1, 1, 1), TorusMap(2, 1, 1, 1)}, 5);
  REQUIRE(rep.independence.size() == 1);
  CHECK_FALSE(rep.independence[0].independent);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("single matrix is degenerate") {
  const auto rep = family_certificate(PrimeSet{2}, {TorusMap(2, 1, 1, 1)}, 5);
  CHECK(rep.degenerate);
  CHECK(rep.independence.empty());
  CHECK(rep.passed());
  CHECK_THROWS_AS(family_certificate(PrimeSet{2}, {TorusMap()}, 5), std::invalid_argument);
}

TEST_CASE("families over five primes") {
  const auto rep = family_certificate(PrimeSet{2, 3, 5, 7, 11}, {}, 10);
  CHECK(rep.splittings.size() >= 5);
  CHECK(rep.kernel_pairs_distinct);
  CHECK(rep.passed());
}

}  // TEST_SUITE

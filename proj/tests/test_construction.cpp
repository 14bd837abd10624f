#include "doctest.h"

#include "liftcert/construction.hpp"
#include "oracles.hpp"

using namespace liftcert;

namespace {

AdmissiblePair admissible(std::uint64_t n, std::uint64_t m, PrimeSet a, PrimeSet b) {
  auto r = check_admissible(n, m, a, b);
  REQUIRE(r.admissible());
  return *r.pair;
}

FiniteAbelianGroup cyclic_product(std::initializer_list<long> orders) {
  std::vector<Integer> o;
  for (long x : orders) o.emplace_back(x);
  return FiniteAbelianGroup::from_cyclic_product(o);
}

}  // namespace

TEST_SUITE("construction") {

TEST_CASE("(6, 4) example instance") {
  const auto inst = build_instance(admissible(6, 4, {}, {2}));
  CHECK(inst.h1 == cyclic_product({3, 4}));
  CHECK(inst.h2 == cyclic_product({6, 2}));
  CHECK(inst.q1 == cyclic_product({2}));
  CHECK(inst.q2 == cyclic_product({2}));
  CHECK(inst.witness_prime == 2);
  CHECK(inst.g == cyclic_product({6, 4}));

  const auto genus = genus_table(inst);
  CHECK(genus.genus_total == 25);
  CHECK(genus.genus_s1 == 3);
  CHECK(genus.genus_s2 == 3);
  CHECK(genus.genus_x == 2);
  CHECK(genus.euler_total == -48);
}

TEST_CASE("square seed (4, 2, {2}, {})") {
  const auto inst = build_instance(admissible(4, 2, {2}, {}));
  CHECK(inst.h1 == cyclic_product({4}));
  CHECK(inst.h2 == cyclic_product({2, 2}));
  CHECK(inst.q1 == cyclic_product({2}));
  CHECK(inst.q2 == cyclic_product({2}));
  // n_B m_A = 1 * 2, so the intermediate covers are double covers.
  const auto genus = genus_table(inst);
  CHECK(genus.genus_total == 9);
  CHECK(genus.genus_s1 == 3);
  CHECK(genus.genus_s2 == 3);
}

TEST_CASE("(36, 6, {3}, {})") {
  const auto inst = build_instance(admissible(36, 6, {3}, {}));
  CHECK(inst.h1.order() == 72);
  CHECK(inst.h2.order() == 72);
  CHECK(inst.q1 == cyclic_product({3}));
  CHECK(inst.q2 == cyclic_product({3}));
  CHECK(inst.witness_prime == 3);
}

TEST_CASE("witness search skips primes with equal valuations") {
  // A = {2, 3}, n = 12, m = 6: only p = 2 has v_p(n) > v_p(m).
  const auto inst = build_instance(admissible(12, 6, {2, 3}, {}));
  CHECK(inst.witness_prime == 2);
  CHECK(inst.h1.sylow(Integer(3)).is_cyclic());
  CHECK(inst.h2.sylow(Integer(3)).is_cyclic());
}

TEST_CASE("subgroups agree with brute-force enumeration on small instances") {
  for (std::uint64_t n = 2; n <= 40; ++n)
    for (std::uint64_t m = 2; n * m <= 400; ++m)
      for (const auto& pair : enumerate_admissible(n, m)) {
        const auto inst = build_instance(pair);
        const auto nn = static_cast<std::int64_t>(n), mm = static_cast<std::int64_t>(m);
        const auto nb = static_cast<std::int64_t>(pair.n_b), ma = static_cast<std::int64_t>(pair.m_a);
        const auto e1 = oracle::generated_subgroup(nn, mm, {{nb % nn, 0}, {0, ma % mm}});
        const auto e2 = oracle::generated_subgroup(nn, mm, {{ma % nn, 0}, {0, nb % mm}});
        std::vector<Integer> f1, f2;
        for (auto f : oracle::classify(e1, nn, mm)) f1.emplace_back(f);
        for (auto f : oracle::classify(e2, nn, mm)) f2.emplace_back(f);
        CHECK(inst.h1 == FiniteAbelianGroup::from_invariant_factors(f1));
        CHECK(inst.h2 == FiniteAbelianGroup::from_invariant_factors(f2));
      }
}

TEST_CASE("structure from generators matches the cyclic-product formulas") {
  int count = 0;
  for (std::uint64_t n = 2; n <= 100; ++n)
    for (std::uint64_t m = 2; n * m <= 10000; ++m)
      for (const auto& pair : enumerate_admissible(n, m)) {
        const auto inst = build_instance(pair);
        CHECK(inst.h1 == predicted_h1(pair));
        CHECK(inst.h2 == predicted_h2(pair));
        CHECK(inst.quotient_order() > 1);
        ++count;
      }
  CHECK(count >= 200);
}

}  // TEST_SUITE

#include "doctest.h"

#include <random>

#include "liftcert/normal_form.hpp"

using namespace liftcert;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

bool is_unimodular(const IntMatrix& m) {
  const Integer d = determinant(m);
  return d == 1 || d == -1;
}

void check_smith(const IntMatrix& m) {
  const auto s = smith_normal_form(m);
  REQUIRE(s.left * m * s.right == s.diagonal);
  CHECK(is_unimodular(s.left));
  CHECK(is_unimodular(s.right));
  for (std::size_t i = 0; i < s.diagonal.rows(); ++i)
    for (std::size_t j = 0; j < s.diagonal.cols(); ++j)
      if (i != j) CHECK(s.diagonal(i, j) == 0);
  const auto d = s.invariants();
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (i + 1 < d.size() && d[i] != 0)
      CHECK(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
    if (i + 1 < d.size() && d[i] == 0) CHECK(d[i + 1] == 0);
  }
}

}  // namespace

TEST_SUITE("normal_form") {

TEST_CASE("smith examples") {
  CHECK(smith_normal_form(IntMatrix::identity(2)).diagonal == IntMatrix::identity(2));
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).invariants() == std::vector<Integer>{1, 6});
  CHECK(smith_normal_form(IntMatrix{{4, 3}, {3, 1}}).invariants() == std::vector<Integer>{1, 5});
  CHECK(smith_normal_form(IntMatrix(2, 2)).invariants() == std::vector<Integer>{0, 0});
}

TEST_CASE("smith: transforms, divisibility, determinant") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 5;
    const IntMatrix m = random_matrix(rng, r, c, trial % 3 == 0 ? 3 : 40);
    check_smith(m);
    if (r == c) {
      Integer prod = 1;
      for (const auto& d : smith_normal_form(m).invariants()) prod *= d;
      CHECK(prod == abs_value(determinant(m)));
    }
  }
}

TEST_CASE("smith is deterministic and idempotent") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = random_matrix(rng, 4, 4, 20);
    const auto a = smith_normal_form(m);
    const auto b = smith_normal_form(m);
    CHECK(a.left == b.left);
    CHECK(a.right == b.right);
    CHECK(smith_normal_form(a.diagonal).diagonal == a.diagonal);
  }
}

TEST_CASE("smith survives entries beyond 64 bits") {
  IntMatrix m{{1, 0}, {0, 1}};
  m(0, 0) = Integer("123456789012345678901234567890");
  m(1, 1) = Integer("987654321098765432109876543210");
  check_smith(m);
}

TEST_CASE("hermite examples") {
  CHECK(hermite_normal_form(IntMatrix::identity(3)) == IntMatrix::identity(3));
  CHECK(hermite_normal_form(IntMatrix{{2, 0}, {0, 1}}) == hermite_normal_form(IntMatrix{{2, 2}, {0, 1}}));
  const auto zero = hermite_normal_form(IntMatrix(2, 2));
  CHECK(zero.rows() == 2);
  CHECK(zero.cols() == 0);
}

TEST_CASE("hermite is a lattice invariant") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> small(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix m = random_matrix(rng, 3, 4, 15);
    // random unimodular column operations
    IntMatrix ops = IntMatrix::identity(4);
    for (int k = 0; k < 8; ++k) {
      const std::size_t i = trial % 4, j = (trial + k + 1) % 4;
      if (i != j) ops.add_col_multiple(j, i, Integer(small(rng)));
      ops.swap_cols(k % 4, (k + 2) % 4);
    }
    const auto h1 = hermite_normal_form(m);
    CHECK(h1 == hermite_normal_form(m * ops));
    CHECK(hermite_normal_form(h1) == h1);
  }
}

TEST_CASE("kernel_mod") {
  // a1 -> 1 mod 2, everything else 0
  IntMatrix phi(1, 4);
  phi(0, 0) = 1;
  const auto k = kernel_mod(phi, {Integer(2)});
  CHECK(k == IntMatrix{{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(kernel_mod(IntMatrix(1, 4), {Integer(1)}) == IntMatrix::identity(4));
  // exact equation x + y = 0 over Z
  const auto exact = kernel_mod(IntMatrix{{1, 1}}, {Integer(0)});
  REQUIRE(exact.cols() == 1);
  CHECK(exact(0, 0) * exact(1, 0) == -1);
}

TEST_CASE("determinant and characteristic polynomial") {
  CHECK(determinant(IntMatrix{{4, 3}, {3, 1}}) == -5);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(characteristic_polynomial(IntMatrix{{2, 1}, {1, 1}}) == std::vector<Integer>{1, -3, 1});
  const auto r = polynomial_remainder({1, -6, 11, -6, 1}, {1, -3, 1});
  CHECK(r == std::vector<Integer>{0, 0});
}

}  // TEST_SUITE

#include "doctest.h"

#include <random>

#include "liftcert/lifting.hpp"

using namespace liftcert;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Integer> basis(std::size_t i) {
  std::vector<Integer> v(4, Integer(0));
  v[i] = 1;
  return v;
}

IntMatrix column(const std::vector<Integer>& v) {
  IntMatrix c(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) c(i, 0) = v[i];
  return c;
}

ConstructionCovers covers_of(std::uint64_t n, std::uint64_t m, PrimeSet a, PrimeSet b) {
  auto r = check_admissible(n, m, a, b);
  REQUIRE(r.admissible());
  return construction_covers(build_instance(*r.pair));
}

TwistWord random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> letter(0, 3), len(1, max_len), sign(0, 1);
  TwistWord w;
  for (int i = len(rng); i > 0; --i) w.letters.push_back(static_cast<Twist>(letter(rng)));
  w.sign = sign(rng) ? 1 : -1;
  return w;
}

}  // namespace

TEST_SUITE("lifting") {

TEST_CASE("generator lifts") {
  const auto g = twist_generator_lifts();
  CHECK(g.t_b * column(basis(kA1)) == column(ints({1, 1, 0, 0})));
  CHECK(g.t_b * column(basis(kA2)) == column(ints({0, 0, 1, 1})));
  CHECK(g.t_b * column(basis(kB1)) == column(basis(kB1)));
  CHECK(g.t_a * column(basis(kA1)) == column(basis(kA1)));
  CHECK(is_symplectic(g.t_a));
  CHECK(is_symplectic(g.t_b));
  const IntMatrix tau = tau_matrix();
  CHECK(tau * g.t_a == g.t_a * tau);
  CHECK(tau * g.t_b == g.t_b * tau);
}

TEST_CASE("letter table reproduces the letters on the invariant plane") {
  // Derive the table: each letter must act on <a1+a2, b1+b2> as itself.
  const auto g = twist_generator_lifts();
  const IntMatrix candidates[] = {g.t_a, g.t_a.pow(3), g.t_b, g.t_b.pow(3)};
  for (auto t : {Twist::kR, Twist::kRInv, Twist::kL, Twist::kLInv}) {
    int matches = 0;
    for (const auto& c : candidates) {
      // inverses via the characteristic identity (T - I)^2 = 0 on transvections
      const IntMatrix inv = IntMatrix::identity(4) * 2 - c;
      if (invariant_plane_action(c) == twist_matrix(t)) {
        CHECK(letter_lift(t) == c);
        ++matches;
      }
      if (invariant_plane_action(inv) == twist_matrix(t)) {
        CHECK(letter_lift(t) == inv);
        ++matches;
      }
    }
    CHECK(matches == 1);
  }
}

TEST_CASE("lift of the cat map") {
  const TorusMap cat(2, 1, 1, 1);
  const auto lifted = lift_to_X(cat);
  CHECK(lifted.word.to_string() == "R L");
  CHECK(invariant_plane_action(lifted.matrix4) == cat.matrix());
  CHECK(is_symplectic(lifted.matrix4));
  const IntMatrix tau = tau_matrix();
  CHECK(tau * lifted.matrix4 == lifted.matrix4 * tau);
  CHECK(lift_word(TwistWord{{}, -1}).matrix4 == IntMatrix::identity(4) * -1);
}

TEST_CASE("lifts are symplectic, commute with tau, and satisfy the torus characteristic polynomial") {
  std::mt19937_64 rng(41);
  const IntMatrix tau = tau_matrix();
  for (int trial = 0; trial < 300; ++trial) {
    const TwistWord w = random_word(rng, 10);
    const auto lifted = lift_word(w);
    const IntMatrix& f = lifted.matrix4;
    CHECK(is_symplectic(f));
    CHECK(tau * f == f * tau);
    CHECK(invariant_plane_action(f) == w.evaluate());
    const Integer t = TorusMap(w.evaluate()).trace();
    CHECK((f * f - f * t + IntMatrix::identity(4)).is_zero());
    const auto rem = polynomial_remainder(characteristic_polynomial(f), characteristic_polynomial(w.evaluate()));
    for (const auto& r : rem) CHECK(r == 0);
  }
}

TEST_CASE("lift does not depend on the chosen word") {
  std::mt19937_64 rng(43);
  // S = R L^-1 R has order four
  const std::vector<Twist> s{Twist::kR, Twist::kLInv, Twist::kR};
  for (int trial = 0; trial < 200; ++trial) {
    TwistWord w = random_word(rng, 8);
    TwistWord padded = w;
    const auto at = padded.letters.begin() + static_cast<long>(rng() % (padded.letters.size() + 1));
    std::vector<Twist> s4;
    for (int i = 0; i < 4; ++i) s4.insert(s4.end(), s.begin(), s.end());
    padded.letters.insert(at, s4.begin(), s4.end());
    REQUIRE(padded.evaluate() == w.evaluate());
    CHECK(lift_word(padded).matrix4 == lift_word(w).matrix4);
    CHECK(lift_to_X(TorusMap(w.evaluate())).matrix4 == lift_word(w).matrix4);
  }
}

TEST_CASE("lifting criterion on the (6, 4) example covers") {
  const auto covers = covers_of(6, 4, {}, {2});
  const auto g = twist_generator_lifts();
  CHECK(lifts_fixing_fiber(covers.phi1, g.t_b));
  CHECK(lifts_fixing_fiber(covers.phi2, g.t_b));
  CHECK_FALSE(lifts_fixing_fiber(covers.phi1, g.t_a));
  CHECK(min_lift_power(covers.phi1, g.t_a) == 2);
  CHECK(min_lift_power(covers.phi1, g.t_b) == 1);
  CHECK(verify_lift_power(covers.phi1, g.t_a, 2));
  CHECK_FALSE(verify_lift_power(covers.phi1, g.t_a, 4));
  CHECK_FALSE(verify_lift_power(covers.phi1, g.t_a, 1));
}

TEST_CASE("min_lift_power agrees with the big-integer recheck") {
  std::mt19937_64 rng(47);
  const std::vector<ConstructionCovers> all{covers_of(6, 4, {}, {2}), covers_of(36, 6, {3}, {}),
                                     covers_of(12, 6, {2, 3}, {}), covers_of(4, 2, {2}, {})};
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix f = lift_word(random_word(rng, 6)).matrix4;
    for (const auto& c : all)
      for (const auto* spec : {&c.phi1, &c.phi2, &c.phi_full}) {
        const auto k = min_lift_power(*spec, f);
        CHECK(verify_lift_power(*spec, f, k));
        CHECK(lifts_fixing_fiber(*spec, f.pow(k)));
      }
  }
}

TEST_CASE("non-invertible actions are rejected") {
  const auto covers = covers_of(6, 4, {}, {2});
  CHECK_THROWS_AS(min_lift_power(covers.phi_full, IntMatrix::diagonal(ints({2, 1, 1, 1}))), LiftPowerError);
  CHECK_THROWS_AS(min_lift_power(covers.phi_full, IntMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("certificate on the (6, 4) example instance") {
  const auto covers = covers_of(6, 4, {}, {2});
  const TorusMap cat(2, 1, 1, 1);
  const auto cert = certificate_power(covers, cat);
  for (const auto& c : cert.checks) CHECK_MESSAGE(c.passed, c.name);
  CHECK(cert.k_fix == 2);
  CHECK(cert.k_total % cert.k_lift_full == 0);
  CHECK(cert.k_lift_full % cert.k_lift_phi1 == 0);
  for (const auto& c : conjugacy_certificate(covers, cert.lifted.matrix4, cert.k_total))
    CHECK_MESSAGE(c.passed, c.name);
}

TEST_CASE("negative control: a single transvection breaks the symmetry") {
  const IntMatrix t = transvection(basis(kA1));
  CHECK(is_symplectic(t));
  CHECK_FALSE(tau_matrix() * t == t * tau_matrix());
  CHECK_THROWS_AS(invariant_plane_action(t), std::domain_error);
  const auto covers = covers_of(6, 4, {}, {2});
  const auto checks = conjugacy_certificate(covers, t, 1);
  bool any_failed = false;
  for (const auto& c : checks) any_failed = any_failed || !c.passed;
  CHECK(any_failed);
}

}  // TEST_SUITE

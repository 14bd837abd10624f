#include "liftcert/construction.hpp"

#include <string>

namespace liftcert {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError("construction invariant violated: " + what);
}

Integer euler_characteristic(std::uint64_t genus) { return Integer(2) - 2 * Integer(genus); }

// Sylow-p of H1 cyclic while Sylow-p of H2 is not.
bool separates(const ConstructionInstance& inst, std::uint64_t p) {
  return inst.h1.sylow(Integer(p)).is_cyclic() && !inst.h2.sylow(Integer(p)).is_cyclic();
}

}  // namespace

FiniteAbelianGroup predicted_h1(const AdmissiblePair& p) {
  return FiniteAbelianGroup::from_cyclic_product(
      {Integer(p.n_a), Integer(p.n_c), Integer(p.m_b), Integer(p.m_d)});
}

FiniteAbelianGroup predicted_h2(const AdmissiblePair& p) {
  return FiniteAbelianGroup::from_cyclic_product({Integer(p.n_a / p.m_a), Integer(p.n_b),
                                                  Integer(p.n_c), Integer(p.m_a),
                                                  Integer(p.m_b / p.n_b), Integer(p.m_d)});
}

ConstructionInstance build_instance(const AdmissiblePair& pair) {
  ConstructionInstance inst;
  inst.pair = pair;
  const Integer n(pair.n), m(pair.m), nb(pair.n_b), ma(pair.m_a);
  inst.g = FiniteAbelianGroup::from_cyclic_product({n, m});
  inst.h1_pres = SubgroupPresentation::make({n, m}, {{nb, Integer(0)}, {Integer(0), ma}});
  inst.h2_pres = SubgroupPresentation::make({n, m}, {{ma, Integer(0)}, {Integer(0), nb}});

  auto s1 = subgroup_from_generators(inst.h1_pres);
  auto s2 = subgroup_from_generators(inst.h2_pres);
  inst.h1 = s1.group;
  inst.h2 = s2.group;
  inst.h1_index = s1.index;
  inst.h2_index = s2.index;
  inst.q1 = quotient_by_subgroup(inst.h1_pres);
  inst.q2 = quotient_by_subgroup(inst.h2_pres);

  require(pair.m_a != 0 && pair.n_a % pair.m_a == 0 && pair.m_b % pair.n_b == 0,
          "m_A | n_A and n_B | m_B");
  const Integer order = Integer(pair.n_a) * pair.m_b * pair.n_c * pair.m_d;
  require(order * nb * ma == n * m, "n_A m_B n_C m_D * n_B m_A = nm");
  require(inst.h1.order() == order, "|H1| = n_A m_B n_C m_D");
  require(inst.h2.order() == order, "|H2| = n_A m_B n_C m_D");
  require(order > 1, "|H_i| > 1");
  require(inst.h1_index == nb * ma && inst.h2_index == nb * ma, "[G : H_i] = n_B m_A");
  require(inst.h1 == predicted_h1(pair), "H1 matches its cyclic-product formula");
  require(inst.h2 == predicted_h2(pair), "H2 matches its cyclic-product formula");
  require(!are_isomorphic(inst.h1, inst.h2), "H1 not isomorphic to H2");
  const auto cyclic = FiniteAbelianGroup::from_cyclic_product({nb * ma});
  require(inst.q1 == cyclic && inst.q2 == cyclic, "G/H_i cyclic of order n_B m_A");
  require(nb * ma > 1, "n_B m_A > 1");

  const PrimeSet primes = pair.a.set_union(pair.b);
  for (auto p : primes.primes())
    if (separates(inst, p)) {
      inst.witness_prime = p;
      break;
    }
  require(inst.witness_prime != 0, "a prime of A u B separates the Sylow subgroups");
  return inst;
}

GenusTable genus_table(const ConstructionInstance& inst) {
  GenusTable t;
  const std::uint64_t deg_total = inst.group_order();
  const std::uint64_t deg_1 = inst.q1.order().get_ui();
  const std::uint64_t deg_2 = inst.q2.order().get_ui();
  // Free actions: chi(cover) = degree * chi(X), chi(X) = -2.
  t.genus_total = deg_total * (t.genus_x - 1) + 1;
  t.genus_s1 = deg_1 * (t.genus_x - 1) + 1;
  t.genus_s2 = deg_2 * (t.genus_x - 1) + 1;
  t.euler_x = euler_characteristic(t.genus_x);
  t.euler_s1 = euler_characteristic(t.genus_s1);
  t.euler_s2 = euler_characteristic(t.genus_s2);
  t.euler_total = euler_characteristic(t.genus_total);

  require(t.genus_total == inst.group_order() + 1, "genus(S~) = nm + 1");
  require(t.genus_s1 == inst.quotient_order() + 1 && t.genus_s2 == inst.quotient_order() + 1,
          "genus(S_i) = n_B m_A + 1");
  require(t.euler_total == inst.h1.order() * t.euler_s1, "chi(S~) = |H1| chi(S1)");
  require(t.euler_total == inst.h2.order() * t.euler_s2, "chi(S~) = |H2| chi(S2)");
  require(t.euler_total == inst.g.order() * t.euler_x, "chi(S~) = |G| chi(X)");
  return t;
}

}  // namespace liftcert

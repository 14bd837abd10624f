#include "liftcert/threemanifold.hpp"

#include <sstream>
#include <stdexcept>

#include "liftcert/covers.hpp"
#include "liftcert/normal_form.hpp"

namespace liftcert {

std::string MappingTorusInvariants::to_string() const {
  std::ostringstream os;
  os << "Z";
  if (h1_free_rank > 1) os << '^' << h1_free_rank;
  if (!h1_torsion.is_trivial()) os << " + " << h1_torsion.to_string();
  return os.str();
}

MappingTorusInvariants mapping_torus_h1(const IntMatrix& monodromy) {
  if (!monodromy.is_square()) throw std::invalid_argument("mapping_torus_h1: monodromy must be square");
  const IntMatrix shifted = monodromy - IntMatrix::identity(monodromy.rows());
  auto coker = cokernel(shifted);
  MappingTorusInvariants inv;
  inv.fiber_rank = monodromy.rows();
  inv.monodromy = monodromy;
  inv.h1_free_rank = 1 + coker.free_rank;
  inv.h1_torsion = std::move(coker.torsion);
  inv.det_shifted = determinant(shifted);
  return inv;
}

ConjugateMonodromyRecord conjugate_monodromy_h1_equal(const IntMatrix& f, std::uint64_t k,
                                                      const IntMatrix& g) {
  const Integer det_g = determinant(g);
  if (det_g != 1 && det_g != -1)
    throw std::invalid_argument("conjugate_monodromy_h1_equal: conjugator must be unimodular");
  // U g V = I, so g^-1 = V U.
  auto snf = smith_normal_form(g);
  const IntMatrix g_inv = snf.right * snf.left;
  if (g * g_inv != IntMatrix::identity(g.rows()))
    throw std::logic_error("conjugate_monodromy_h1_equal: inverse check failed");

  const IntMatrix p = f.pow(k);
  const IntMatrix q = g * p * g_inv;
  ConjugateMonodromyRecord rec;
  rec.h1 = mapping_torus_h1(p);
  const auto other = mapping_torus_h1(q);
  rec.h1_isomorphic =
      rec.h1.h1_free_rank == other.h1_free_rank && rec.h1.h1_torsion == other.h1_torsion;
  rec.monodromies_equal = p == q;
  return rec;
}

ConjugateMonodromyRecord conjugate_monodromy_h1_equal(const IntMatrix& f, std::uint64_t k) {
  return conjugate_monodromy_h1_equal(f, k, tau_matrix());
}

CoverLadder cover_ladder(const ConstructionInstance& inst) {
  const auto genus = genus_table(inst);
  CoverLadder l;
  l.deg_tilde_over_m1 = inst.h1.order();
  l.deg_tilde_over_m2 = inst.h2.order();
  l.deg_mi_over_n = inst.quotient_order();
  l.deg_tilde_over_n = inst.group_order();
  l.fiber_genus_tilde = genus.genus_total;
  l.fiber_genus_mi = genus.genus_s1;
  l.fiber_genus_n = genus.genus_x;
  l.covering_group_1 = inst.h1;
  l.covering_group_2 = inst.h2;
  l.witness_prime = inst.witness_prime;
  const Integer total(l.deg_tilde_over_n);
  l.degrees_multiply = l.deg_tilde_over_m1 * l.deg_mi_over_n == total &&
                       l.deg_tilde_over_m2 * l.deg_mi_over_n == total;
  return l;
}

FamilyReport family_certificate(const PrimeSet& primes, const std::vector<TorusMap>& matrices,
                                std::size_t depth) {
  const auto family = k_choice_family(primes);
  FamilyReport rep;
  rep.n = family.n;
  rep.m = family.m;
  rep.k = primes.size();
  rep.trace_depth = depth;

  for (const auto& pair : enumerate_admissible(family.n, family.m)) {
    const auto inst = build_instance(pair);
    const auto covers = construction_covers(inst);
    rep.splittings.push_back(
        {pair, kernel_lattice(covers.phi1), kernel_lattice(covers.phi2), cover_ladder(inst)});
  }

  bool distinct = true;
  bool non_equivalent = true;
  bool ladders_ok = true;
  for (std::size_t i = 0; i < rep.splittings.size(); ++i) {
    const auto& si = rep.splittings[i];
    non_equivalent = non_equivalent && si.kernel_phi1 != si.kernel_phi2;
    ladders_ok = ladders_ok && si.ladder.degrees_multiply &&
                 si.ladder.fiber_genus_tilde == family.n * family.m + 1;
    for (std::size_t j = i + 1; j < rep.splittings.size(); ++j) {
      const auto& sj = rep.splittings[j];
      if (si.kernel_phi1 == sj.kernel_phi1 && si.kernel_phi2 == sj.kernel_phi2) distinct = false;
    }
  }
  rep.kernel_pairs_distinct = distinct;

  bool family_members_found = true;
  for (const auto& want : family.pairs) {
    bool found = false;
    for (const auto& s : rep.splittings) found = found || s.pair == want;
    family_members_found = family_members_found && found;
  }

  auto& c = rep.checks;
  c.push_back({"at least k admissible splittings over (n, m)", rep.splittings.size() >= rep.k,
               std::to_string(rep.splittings.size()) + " found, k = " + std::to_string(rep.k)});
  c.push_back({"every ({p}, {}) of the family is admissible", family_members_found, ""});
  c.push_back({"kernel pairs pairwise distinct", distinct, ""});
  c.push_back({"phi1, phi2 non-equivalent for every splitting", non_equivalent, ""});
  c.push_back({"ladders over one S~ of genus nm + 1", ladders_ok, ""});

  for (const auto& mtx : matrices)
    if (!is_anosov(mtx)) throw std::invalid_argument("family_certificate: matrices must be Anosov");
  rep.degenerate = matrices.size() < 2;
  for (std::size_t i = 0; i < matrices.size(); ++i)
    for (std::size_t j = i + 1; j < matrices.size(); ++j) {
      const bool indep = power_independent_up_to(matrices[i], matrices[j], depth);
      rep.independence.push_back({i, j, indep});
      c.push_back({"matrices " + std::to_string(i) + ", " + std::to_string(j) +
                       " power independent up to K",
                   indep, indep ? "trace tables disjoint" : "inconclusive: shared trace"});
    }
  return rep;
}

}  // namespace liftcert

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liftcert/abgroup.hpp"
#include "liftcert/check.hpp"
#include "liftcert/construction.hpp"
#include "liftcert/lifting.hpp"

namespace liftcert {

/// H_1 of a mapping torus: Z + coker(monodromy - I).
struct MappingTorusInvariants {
  std::size_t fiber_rank = 0;
  IntMatrix monodromy;
  std::size_t h1_free_rank = 0;
  FiniteAbelianGroup h1_torsion;
  Integer det_shifted;  // det(monodromy - I), computed by elimination

  /// "Z^r + Z/d1 x ..." style rendering.
  std::string to_string() const;
};

MappingTorusInvariants mapping_torus_h1(const IntMatrix& monodromy);

/// Shadow of M1 = M2: H_1 of the mapping tori of F^k and tau F^k tau^-1
/// agree, and whether the two monodromies are literally equal.
struct ConjugateMonodromyRecord {
  bool h1_isomorphic = false;
  bool monodromies_equal = false;
  MappingTorusInvariants h1;
};

ConjugateMonodromyRecord conjugate_monodromy_h1_equal(const IntMatrix& f, std::uint64_t k);
/// Same comparison for an arbitrary conjugator g (g must be unimodular).
ConjugateMonodromyRecord conjugate_monodromy_h1_equal(const IntMatrix& f, std::uint64_t k,
                                                      const IntMatrix& g);

struct CoverLadder {
  Integer deg_tilde_over_m1;  // |H1|
  Integer deg_tilde_over_m2;  // |H2|
  std::uint64_t deg_mi_over_n = 0;      // n_B m_A
  std::uint64_t deg_tilde_over_n = 0;   // nm
  std::uint64_t fiber_genus_tilde = 0;
  std::uint64_t fiber_genus_mi = 0;
  std::uint64_t fiber_genus_n = 2;
  FiniteAbelianGroup covering_group_1;  // H1
  FiniteAbelianGroup covering_group_2;  // H2
  std::uint64_t witness_prime = 0;
  bool degrees_multiply = false;
};

CoverLadder cover_ladder(const ConstructionInstance& inst);

struct SplittingRecord {
  AdmissiblePair pair;
  IntMatrix kernel_phi1;
  IntMatrix kernel_phi2;
  CoverLadder ladder;
};

struct IndependenceEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  bool independent = false;
};

struct FamilyReport {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::size_t k = 0;  // number of primes
  std::vector<SplittingRecord> splittings;
  bool kernel_pairs_distinct = false;
  std::vector<IndependenceEntry> independence;
  std::size_t trace_depth = 0;
  bool degenerate = false;  // fewer than two matrices: no pair checks
  std::vector<Check> checks;

  bool passed() const { return all_passed(checks); }
};

/// For the k-prime family (n, m) = (prod p^2, prod p): all admissible
/// splittings with their kernel pairs and ladders, plus the pairwise
/// trace-disjointness table of the matrices up to depth K.
FamilyReport family_certificate(const PrimeSet& primes, const std::vector<TorusMap>& matrices,
                                std::size_t depth);

}  // namespace liftcert

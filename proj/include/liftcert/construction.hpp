#pragma once

#include <cstdint>
#include <stdexcept>

#include "liftcert/abgroup.hpp"
#include "liftcert/arithmetic.hpp"

namespace liftcert {

/// G = Z/n x Z/m with the two equal-order subgroups
///   H1 = <(n_B, 0), (0, m_A)>,   H2 = <(m_A, 0), (0, n_B)>
/// and everything derived from them. Every structural field is computed by
/// the lattice engine from the generators, then checked against the
/// closed-form predictions.
struct ConstructionInstance {
  AdmissiblePair pair;
  FiniteAbelianGroup g;
  SubgroupPresentation h1_pres;
  SubgroupPresentation h2_pres;
  FiniteAbelianGroup h1;
  FiniteAbelianGroup h2;
  Integer h1_index;
  Integer h2_index;
  FiniteAbelianGroup q1;  // G / H1
  FiniteAbelianGroup q2;  // G / H2
  std::uint64_t witness_prime = 0;

  /// n_B * m_A: order of both quotients, degree of S_i -> X.
  std::uint64_t quotient_order() const { return pair.n_b * pair.m_a; }
  /// n * m = |G|.
  std::uint64_t group_order() const { return pair.n * pair.m; }
};

/// Thrown when a computed structure disagrees with what the construction
/// guarantees. Reaching it means a bug in the engine, not bad input.
class ConstructionError : public std::logic_error {
  using std::logic_error::logic_error;
};

ConstructionInstance build_instance(const AdmissiblePair& pair);

/// H1 and H2 as predicted by the cyclic-product formulas (CRT splitting of
/// Z/n and Z/m into A-, B- and C/D-parts).
FiniteAbelianGroup predicted_h1(const AdmissiblePair& pair);
FiniteAbelianGroup predicted_h2(const AdmissiblePair& pair);

struct GenusTable {
  std::uint64_t genus_x = 2;
  std::uint64_t genus_s1 = 0;
  std::uint64_t genus_s2 = 0;
  std::uint64_t genus_total = 0;
  Integer euler_x;
  Integer euler_s1;
  Integer euler_s2;
  Integer euler_total;
};

/// Genera of X, S_1, S_2 and S~ from the free-action Euler characteristic
/// identity, cross-checked multiplicatively. Throws ConstructionError on mismatch.
GenusTable genus_table(const ConstructionInstance& inst);

}  // namespace liftcert

#pragma once

#include <map>
#include <string>
#include <vector>

#include "liftcert/int_matrix.hpp"

namespace liftcert {

/// Finite abelian group in invariant-factor form d_1 | d_2 | ... | d_k,
/// every d_i >= 2. The trivial group has no factors. Two values compare
/// equal exactly when the groups are isomorphic.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;

  /// Validates the divisibility chain; throws std::invalid_argument otherwise.
  static FiniteAbelianGroup from_invariant_factors(std::vector<Integer> factors);
  /// Z/orders[0] x Z/orders[1] x ... in canonical form. Orders of 1 are allowed.
  static FiniteAbelianGroup from_cyclic_product(const std::vector<Integer>& orders);
  /// Torsion part of a list of Smith diagonal entries (0 and 1 are skipped).
  static FiniteAbelianGroup from_smith_diagonal(const std::vector<Integer>& diagonal);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  Integer order() const;
  Integer exponent() const;
  bool is_trivial() const { return factors_.empty(); }
  bool is_cyclic() const { return factors_.size() <= 1; }

  /// Primary decomposition: prime -> prime-power orders of the cyclic
  /// p-factors, ascending.
  std::map<Integer, std::vector<Integer>> primary_decomposition() const;
  /// Invariant factors of the Sylow p-subgroup.
  FiniteAbelianGroup sylow(const Integer& p) const;

  /// "Z/3 x Z/4"-style rendering of the invariant factors ("1" if trivial).
  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<Integer> factors_;
};

bool are_isomorphic(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h);

/// Generators of a subgroup of Z/o_1 x ... x Z/o_r (for the construction,
/// r = 2 and the ambient is Z/n x Z/m).
struct SubgroupPresentation {
  std::vector<Integer> ambient;
  std::vector<std::vector<Integer>> generators;

  /// Reduces generator coordinates into [0, o_i).
  static SubgroupPresentation make(std::vector<Integer> ambient,
                                   std::vector<std::vector<Integer>> generators);
  Integer ambient_order() const;
};

struct SubgroupStructure {
  FiniteAbelianGroup group;
  Integer index;
};

SubgroupStructure subgroup_from_generators(const SubgroupPresentation& s);
FiniteAbelianGroup quotient_by_subgroup(const SubgroupPresentation& s);

/// HNF of the preimage lattice <generators> + diag(ambient) Z^r in Z^r.
/// Two presentations over the same ambient describe the same subgroup iff
/// these agree.
IntMatrix subgroup_lattice(const SubgroupPresentation& s);

struct Cokernel {
  std::size_t free_rank = 0;
  FiniteAbelianGroup torsion;
};

/// coker(M) = Z^rows / M Z^cols.
Cokernel cokernel(const IntMatrix& m);

}  // namespace liftcert

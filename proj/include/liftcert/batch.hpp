#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liftcert/arithmetic.hpp"
#include "liftcert/torus.hpp"

namespace liftcert {

/// Every admissible pair with n, m >= 2 and nm <= bound, ordered by (n, m)
/// and then by the enumeration order of each (n, m).
std::vector<AdmissiblePair> admissible_corpus(std::uint64_t nm_bound);

/// All matrices of SL(2, Z) with entries in [-bound, bound], row-major
/// lexicographic order.
std::vector<TorusMap> sl2_box(long bound);

/// Per-instance outcome of the group, genus and cover checks, plus lifting
/// powers for a fixed torus map.
struct CorpusRecord {
  AdmissiblePair pair;
  bool orders = false;          // |H1| = |H2| = nm/(n_B m_A) = n_A m_B n_C m_D > 1
  bool quotients = false;       // G/H_i cyclic of order n_B m_A, H1 not isomorphic to H2
  bool genus = false;           // nm + 1, n_B m_A + 1, chi(S~) = |H_i| chi(S_i)
  bool non_equivalent = false;  // ker phi1 != ker phi2
  bool swap = false;            // tau checks
  bool lift_divisibility = false;
  bool lift_minimal = false;    // only evaluated when verify_minimality is set
  std::uint64_t k_lift_phi1 = 0, k_lift_phi2 = 0, k_lift_full = 0;
  std::string error;

  bool passed(bool with_minimality) const;
  friend bool operator==(const CorpusRecord&, const CorpusRecord&) = default;
};

struct CorpusOptions {
  TorusMap map{2, 1, 1, 1};
  /// Re-check each lifting power with exact big-integer powers. This costs
  /// O(k) matrix compositions per cover.
  bool verify_minimality = false;
};

CorpusRecord verify_instance(const AdmissiblePair& pair, const CorpusOptions& options);
std::vector<CorpusRecord> verify_corpus_serial(const std::vector<AdmissiblePair>& pairs,
                                               const CorpusOptions& options);
std::vector<CorpusRecord> verify_corpus(const std::vector<AdmissiblePair>& pairs,
                                        const CorpusOptions& options);

/// Fixed-point count of M^k by the Smith lattice versus |2 - tr(M^k)|, with
/// explicit enumeration of the points when there are at most `enumerate_cap`.
struct LefschetzTally {
  std::uint64_t cases = 0;
  std::uint64_t lattice_agree = 0;
  std::uint64_t enumerated = 0;
  std::uint64_t enumerated_agree = 0;
  std::uint64_t skipped_identity = 0;     // M^k = I
  std::uint64_t skipped_degenerate = 0;   // det(M^k - I) = 0
  std::uint64_t failures = 0;

  LefschetzTally& operator+=(const LefschetzTally& o);
  friend bool operator==(const LefschetzTally&, const LefschetzTally&) = default;
};

LefschetzTally lefschetz_case(const TorusMap& m, unsigned k, std::uint64_t enumerate_cap);
LefschetzTally lefschetz_sweep_serial(const std::vector<TorusMap>& maps, unsigned max_k,
                                      std::uint64_t enumerate_cap);
LefschetzTally lefschetz_sweep(const std::vector<TorusMap>& maps, unsigned max_k,
                               std::uint64_t enumerate_cap);

/// Structural checks of the lift of one Anosov map.
struct LiftRecord {
  bool symplectic = false;
  bool commutes_with_tau = false;
  bool powers_commute = false;  // tau F^j = F^j tau for j <= power_depth
  bool char_poly_divides = false;
  bool plane_action = false;    // action on <a1+a2, b1+b2> is M

  bool passed() const {
    return symplectic && commutes_with_tau && powers_commute && char_poly_divides && plane_action;
  }
  friend bool operator==(const LiftRecord&, const LiftRecord&) = default;
};

LiftRecord lift_case(const TorusMap& m, unsigned power_depth);
std::vector<LiftRecord> lift_sweep_serial(const std::vector<TorusMap>& maps, unsigned power_depth);
std::vector<LiftRecord> lift_sweep(const std::vector<TorusMap>& maps, unsigned power_depth);

/// `count` distinct Anosov matrices with |entries| <= bound, drawn with a
/// seeded generator from the SL(2, Z) box.
std::vector<TorusMap> random_anosov(std::size_t count, long bound, std::uint64_t seed);

}  // namespace liftcert

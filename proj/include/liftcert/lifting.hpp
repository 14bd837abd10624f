#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "liftcert/check.hpp"
#include "liftcert/covers.hpp"
#include "liftcert/torus.hpp"

namespace liftcert {

/// Homology action on X (genus 2, basis a1, b1, a2, b2) of the lift of a
/// torus map, built by evaluating its twist word in the generator lifts.
///
/// The branched double cover X -> T is taken with both the meridian and the
/// longitude lifting to pairs of disjoint curves swapped by tau, so a twist
/// on the torus lifts to a product of two disjoint twists on X. For the
/// abelian covers used here the homological lifting criterion agrees with
/// the fundamental-group one: every such cover factors through H_1(X).
struct LiftedMap {
  IntMatrix matrix4;
  TorusMap source;
  TwistWord word;
};

struct GeneratorLifts {
  IntMatrix t_a;  // x -> x + <x,a1> a1 + <x,a2> a2
  IntMatrix t_b;  // x -> x + <x,b1> b1 + <x,b2> b2
};

/// Transvection x -> x + <x,c> c in the genus-2 basis.
IntMatrix transvection(const std::vector<Integer>& c);

GeneratorLifts twist_generator_lifts();

/// Which generator lift (and exponent) each torus letter maps to. Fixed by
/// requiring the action on the invariant plane <a1+a2, b1+b2> to reproduce
/// the letter: R -> T_A^-1, L -> T_B.
IntMatrix letter_lift(Twist t);

/// Action of a tau-symmetric 4x4 matrix on the plane spanned by a1+a2 and
/// b1+b2, in that basis. Throws std::domain_error if the plane is not invariant.
IntMatrix invariant_plane_action(const IntMatrix& f);

/// Lifts the factorisation of M letter by letter; a -I factor lifts to -I_4.
LiftedMap lift_to_X(const TorusMap& m);
/// Same, for an explicitly chosen word.
LiftedMap lift_word(const TwistWord& word);

/// spec o F = spec: the lift of F exists and acts trivially on the deck
/// group, so it fixes the fibre over the base point pointwise once one
/// point of it is fixed.
bool lifts_fixing_fiber(const CoverSpec& spec, const IntMatrix& f);

/// Raised when the induced action on the image group is not invertible.
class LiftPowerError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Least k >= 1 with spec o F^k = spec, by iterating F on the homomorphism.
std::uint64_t min_lift_power(const CoverSpec& spec, const IntMatrix& f);

/// Independent re-check of a reported k: the identity holds at k and fails
/// for every 0 < j < k. Computed with exact big-integer matrix powers.
bool verify_lift_power(const CoverSpec& spec, const IntMatrix& f, std::uint64_t k);

struct LiftCertificate {
  LiftedMap lifted;
  unsigned k_fix = 0;
  std::uint64_t k_lift_phi1 = 0;
  std::uint64_t k_lift_phi2 = 0;
  std::uint64_t k_lift_full = 0;
  std::uint64_t k_total = 0;
  std::vector<Check> checks;
};

/// k_total = lcm(least power of M with two fixed points, lifting power of the
/// full cover); per-cover lifting powers recorded and their divisibility checked.
LiftCertificate certificate_power(const ConstructionCovers& covers, const TorusMap& m);

/// phi2 = phi1 o tau (as covers) and tau F^k = F^k tau.
std::vector<Check> conjugacy_certificate(const ConstructionCovers& covers, const IntMatrix& f,
                                         std::uint64_t k);

}  // namespace liftcert

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "liftcert/int_matrix.hpp"

namespace liftcert {

/// Orientation-preserving automorphism of the torus R^2/Z^2: a 2x2 integer
/// matrix of determinant exactly 1.
class TorusMap {
 public:
  /// The identity.
  TorusMap() : TorusMap(Integer(1), Integer(0), Integer(0), Integer(1)) {}
  /// Throws std::invalid_argument unless ad - bc = 1.
  TorusMap(Integer a, Integer b, Integer c, Integer d);
  explicit TorusMap(const IntMatrix& m);

  const IntMatrix& matrix() const { return m_; }
  Integer trace() const { return m_(0, 0) + m_(1, 1); }

  friend bool operator==(const TorusMap&, const TorusMap&) = default;

 private:
  IntMatrix m_;
};

enum class Twist : std::uint8_t { kR, kRInv, kL, kLInv };

/// Word in R = [[1,1],[0,1]], L = [[1,0],[1,1]] and their inverses, with a
/// global sign so that sign * (letters multiplied left to right) is the map.
struct TwistWord {
  std::vector<Twist> letters;
  int sign = 1;

  IntMatrix evaluate() const;
  /// "R L^-1 R" style; "1" for the empty word, "-" prefix for sign -1.
  std::string to_string() const;

  friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

IntMatrix twist_matrix(Twist t);

bool is_anosov(const TorusMap& m);

struct Dilatation {
  double value = 0.0;
  Integer trace;
  Integer discriminant;  // t^2 - 4
};

/// (|t| + sqrt(t^2 - 4)) / 2. Throws std::invalid_argument if not Anosov.
Dilatation dilatation(const TorusMap& m);

/// Exact traces of M^1 .. M^K via t_{k+1} = t_1 t_k - t_{k-1}, t_0 = 2.
std::vector<Integer> trace_table(const TorusMap& m, std::size_t count);

/// |det(M^k - I)| = |2 - tr(M^k)|, the number of fixed points of M^k.
/// Throws std::invalid_argument if M^k = I and std::domain_error if the fixed
/// set is not isolated (det(M^k - I) = 0).
Integer fixed_point_count(const TorusMap& m, unsigned k);

/// Solution lattice of (M^k - I) x in Z^2 read off the Smith form:
/// x = V (j1/d1, j2/d2) mod Z^2 for 0 <= j_i < d_i.
struct FixedPointLattice {
  Integer d1;
  Integer d2;
  IntMatrix v;

  Integer size() const { return d1 * d2; }
};

FixedPointLattice fixed_point_lattice(const TorusMap& m, unsigned k);

using TorusPoint = std::array<Rational, 2>;

/// All fixed points of M^k as reduced fractions in [0,1)^2, in lattice
/// enumeration order (the origin first). Throws std::length_error when more
/// than `limit` points would be produced.
std::vector<TorusPoint> fixed_points(const TorusMap& m, unsigned k,
                                     std::size_t limit = 1u << 20);

/// Least k with at least two fixed points of M^k. Throws if not Anosov.
unsigned min_power_two_fixed(const TorusMap& m);

/// Deterministic Euclidean factorisation into R^{+-1}, L^{+-1} and a sign.
TwistWord factor_into_twists(const TorusMap& m);

/// True when the trace sets of M1^1..M1^K and M2^1..M2^K are disjoint. A true
/// result certifies that no M1^a is conjugate to M2^b for a, b <= K; false
/// is inconclusive.
bool power_independent_up_to(const TorusMap& m1, const TorusMap& m2, std::size_t k);

}  // namespace liftcert

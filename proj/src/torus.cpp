#include "liftcert/torus.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "liftcert/normal_form.hpp"

namespace liftcert {

TorusMap::TorusMap(Integer a, Integer b, Integer c, Integer d) : m_(2, 2) {
  m_(0, 0) = std::move(a);
  m_(0, 1) = std::move(b);
  m_(1, 0) = std::move(c);
  m_(1, 1) = std::move(d);
  if (m_(0, 0) * m_(1, 1) - m_(0, 1) * m_(1, 0) != 1)
    throw std::invalid_argument("TorusMap: determinant must be 1, got matrix " + liftcert::to_string(m_));
}

namespace {

const IntMatrix& require_2x2(const IntMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("TorusMap: matrix must be 2x2");
  return m;
}

}  // namespace

TorusMap::TorusMap(const IntMatrix& m)
    : TorusMap(require_2x2(m)(0, 0), m(0, 1), m(1, 0), m(1, 1)) {}

IntMatrix twist_matrix(Twist t) {
  switch (t) {
    case Twist::kR: return {{1, 1}, {0, 1}};
    case Twist::kRInv: return {{1, -1}, {0, 1}};
    case Twist::kL: return {{1, 0}, {1, 1}};
    case Twist::kLInv: return {{1, 0}, {-1, 1}};
  }
  throw std::logic_error("unknown twist");
}

IntMatrix TwistWord::evaluate() const {
  IntMatrix acc = IntMatrix::identity(2);
  for (Twist t : letters) acc = acc * twist_matrix(t);
  return sign < 0 ? -acc : acc;
}

std::string TwistWord::to_string() const {
  std::string out = sign < 0 ? "-" : "";
  if (letters.empty()) return out + "1";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    switch (letters[i]) {
      case Twist::kR: out += "R"; break;
      case Twist::kRInv: out += "R^-1"; break;
      case Twist::kL: out += "L"; break;
      case Twist::kLInv: out += "L^-1"; break;
    }
  }
  return out;
}

bool is_anosov(const TorusMap& m) { return abs_value(m.trace()) > 2; }

Dilatation dilatation(const TorusMap& m) {
  if (!is_anosov(m)) throw std::invalid_argument("dilatation: map is not Anosov");
  Dilatation d;
  d.trace = m.trace();
  d.discriminant = d.trace * d.trace - 4;
  const double t = std::fabs(d.trace.get_d());
  d.value = (t + std::sqrt(d.discriminant.get_d())) / 2.0;
  return d;
}

std::vector<Integer> trace_table(const TorusMap& m, std::size_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  const Integer t1 = m.trace();
  Integer prev = 2, cur = t1;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(cur);
    Integer next = t1 * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

Integer fixed_point_count(const TorusMap& m, unsigned k) {
  if (k == 0) throw std::invalid_argument("fixed_point_count: k must be positive");
  const IntMatrix mk = m.matrix().pow(k);
  if (mk == IntMatrix::identity(2))
    throw std::invalid_argument("fixed_point_count: M^k is the identity");
  const Integer count = abs_value(Integer(2) - trace_table(m, k).back());
  if (count == 0) throw std::domain_error("fixed_point_count: fixed set of M^k is not isolated");
  return count;
}

FixedPointLattice fixed_point_lattice(const TorusMap& m, unsigned k) {
  if (k == 0) throw std::invalid_argument("fixed_point_lattice: k must be positive");
  const IntMatrix shifted = m.matrix().pow(k) - IntMatrix::identity(2);
  if (shifted.is_zero()) throw std::invalid_argument("fixed_point_lattice: M^k is the identity");
  auto snf = smith_normal_form(shifted);
  auto diag = snf.invariants();
  if (diag[1] == 0) throw std::domain_error("fixed_point_lattice: fixed set of M^k is not isolated");
  return {diag[0], diag[1], snf.right};
}

namespace {

Rational fractional_part(Rational q) {
  q.canonicalize();
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

}  // namespace

std::vector<TorusPoint> fixed_points(const TorusMap& m, unsigned k, std::size_t limit) {
  const auto lattice = fixed_point_lattice(m, k);
  if (lattice.size() > limit)
    throw std::length_error("fixed_points: " + lattice.size().get_str() + " points exceed limit");
  std::vector<TorusPoint> out;
  out.reserve(lattice.size().get_ui());
  const IntMatrix& v = lattice.v;
  for (Integer j1 = 0; j1 < lattice.d1; ++j1)
    for (Integer j2 = 0; j2 < lattice.d2; ++j2) {
      Rational y1(j1, lattice.d1), y2(j2, lattice.d2);
      y1.canonicalize();
      y2.canonicalize();
      out.push_back({fractional_part(Rational(v(0, 0)) * y1 + Rational(v(0, 1)) * y2),
                     fractional_part(Rational(v(1, 0)) * y1 + Rational(v(1, 1)) * y2)});
    }
  return out;
}

unsigned min_power_two_fixed(const TorusMap& m) {
  if (!is_anosov(m)) throw std::invalid_argument("min_power_two_fixed: map is not Anosov");
  const Integer t1 = m.trace();
  Integer prev = 2, cur = t1;
  for (unsigned k = 1;; ++k) {
    if (abs_value(Integer(2) - cur) >= 2) return k;
    Integer next = t1 * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
}

TwistWord factor_into_twists(const TorusMap& map) {
  // Left-multiply by elementary matrices until the first column is (+-1, 0);
  // each step contributes its inverse to the word.
  IntMatrix m = map.matrix();
  TwistWord word;
  auto push_power = [&word](Twist pos, Twist neg, const Integer& q) {
    const Twist letter = q > 0 ? pos : neg;
    for (Integer i = abs_value(q); i > 0; --i) word.letters.push_back(letter);
  };
  // m <- R^{-q} m, word gains R^q.
  auto reduce_top = [&](const Integer& q) {
    m.add_row_multiple(0, 1, -q);
    push_power(Twist::kR, Twist::kRInv, q);
  };
  // m <- L^{-q} m, word gains L^q.
  auto reduce_bottom = [&](const Integer& q) {
    m.add_row_multiple(1, 0, -q);
    push_power(Twist::kL, Twist::kLInv, q);
  };

  while (m(1, 0) != 0) {
    const Integer a = m(0, 0);
    const Integer c = m(1, 0);
    if (a == 0) {
      // c = +-1 here; bring a to c.
      reduce_top(-c);
    } else if (mpz_divisible_p(c.get_mpz_t(), a.get_mpz_t())) {
      reduce_bottom(c / a);
    } else if (abs_value(a) > abs_value(c)) {
      // a -> r with 0 < r <= |c|
      Integer r = mod_nonneg(a, c);
      if (r == 0) r = abs_value(c);
      reduce_top((a - r) / c);
    } else {
      const Integer r = mod_nonneg(c, a);
      reduce_bottom((c - r) / a);
    }
  }
  // m = s * [[1, s*b], [0, 1]] with s = m(0,0) = +-1.
  const Integer s = m(0, 0);
  word.sign = s > 0 ? 1 : -1;
  push_power(Twist::kR, Twist::kRInv, s * m(0, 1));
  return word;
}

bool power_independent_up_to(const TorusMap& m1, const TorusMap& m2, std::size_t k) {
  if (!is_anosov(m1) || !is_anosov(m2))
    throw std::invalid_argument("power_independent_up_to: both maps must be Anosov");
  const auto t1 = trace_table(m1, k);
  const auto t2 = trace_table(m2, k);
  std::set<Integer> seen(t1.begin(), t1.end());
  return std::none_of(t2.begin(), t2.end(), [&](const Integer& t) { return seen.count(t) > 0; });
}

}  // namespace liftcert

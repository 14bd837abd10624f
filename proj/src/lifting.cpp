#include "liftcert/lifting.hpp"

#include <numeric>
#include <string>

namespace liftcert {

namespace {

std::vector<Integer> basis_vector(std::size_t i) {
  std::vector<Integer> e(4, Integer(0));
  e[i] = 1;
  return e;
}

IntMatrix inverse_transvection(const std::vector<Integer>& c) {
  // x -> x - <x,c> c
  IntMatrix t = transvection(c);
  return IntMatrix::identity(4) + IntMatrix::identity(4) - t;
}

}  // namespace

IntMatrix transvection(const std::vector<Integer>& c) {
  const IntMatrix j = symplectic_form(2);
  // <x, c> = x^T J c, so T = I + c (J c)^T.
  const std::vector<Integer> jc = j * c;
  IntMatrix t = IntMatrix::identity(4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t s = 0; s < 4; ++s) t(r, s) += c[r] * jc[s];
  return t;
}

GeneratorLifts twist_generator_lifts() {
  return {transvection(basis_vector(kA1)) * transvection(basis_vector(kA2)),
          transvection(basis_vector(kB1)) * transvection(basis_vector(kB2))};
}

IntMatrix letter_lift(Twist t) {
  switch (t) {
    case Twist::kR:
      return inverse_transvection(basis_vector(kA1)) * inverse_transvection(basis_vector(kA2));
    case Twist::kRInv: return twist_generator_lifts().t_a;
    case Twist::kL: return twist_generator_lifts().t_b;
    case Twist::kLInv:
      return inverse_transvection(basis_vector(kB1)) * inverse_transvection(basis_vector(kB2));
  }
  throw std::logic_error("unknown twist");
}

IntMatrix invariant_plane_action(const IntMatrix& f) {
  if (f.rows() != 4 || f.cols() != 4) throw std::invalid_argument("invariant_plane_action: need 4x4");
  std::vector<Integer> u{1, 0, 1, 0}, w{0, 1, 0, 1};
  IntMatrix out(2, 2);
  const std::vector<Integer> images[2] = {f * u, f * w};
  for (std::size_t col = 0; col < 2; ++col) {
    const auto& x = images[col];
    if (x[kA1] != x[kA2] || x[kB1] != x[kB2])
      throw std::domain_error("invariant_plane_action: plane <a1+a2, b1+b2> is not invariant");
    out(0, col) = x[kA1];
    out(1, col) = x[kB1];
  }
  return out;
}

LiftedMap lift_word(const TwistWord& word) {
  IntMatrix acc = IntMatrix::identity(4);
  for (Twist t : word.letters) acc = acc * letter_lift(t);
  if (word.sign < 0) acc = -acc;
  return {std::move(acc), TorusMap(word.evaluate()), word};
}

LiftedMap lift_to_X(const TorusMap& m) { return lift_word(factor_into_twists(m)); }

bool lifts_fixing_fiber(const CoverSpec& spec, const IntMatrix& f) { return compose(spec, f) == spec; }

namespace {

using u128 = unsigned __int128;

std::uint64_t mod_u64(const Integer& x, std::uint64_t m) {
  return mod_nonneg(x, Integer(m)).get_ui();
}

}  // namespace

std::uint64_t min_lift_power(const CoverSpec& spec, const IntMatrix& f) {
  const std::size_t dim = spec.images.size();
  const std::size_t rank = spec.orders.size();
  if (f.rows() != dim || f.cols() != dim)
    throw std::invalid_argument("min_lift_power: matrix does not act on the base homology");
  for (const auto& o : spec.orders)
    if (!o.fits_ulong_p() || o > Integer(1) << 62)
      throw std::invalid_argument("min_lift_power: target order too large");

  // The action psi -> psi o F on Hom(Z^dim, target) is a permutation when F
  // is invertible modulo the exponent; then the orbit of spec closes up.
  Integer exponent = 1;
  for (const auto& o : spec.orders) exponent = lcm_of(exponent, o);
  if (gcd_of(determinant(f), exponent) != 1)
    throw LiftPowerError("min_lift_power: det F = " + determinant(f).get_str() +
                         " is not invertible modulo the target exponent " + exponent.get_str());

  std::vector<std::uint64_t> mods(rank);
  for (std::size_t k = 0; k < rank; ++k) mods[k] = spec.orders[k].get_ui();
  // fk[k][j*dim+i] = F(j,i) mod o_k
  std::vector<std::vector<std::uint64_t>> fk(rank, std::vector<std::uint64_t>(dim * dim));
  for (std::size_t k = 0; k < rank; ++k)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t i = 0; i < dim; ++i) fk[k][j * dim + i] = mod_u64(f(j, i), mods[k]);

  std::vector<std::uint64_t> start(rank * dim), cur, next(rank * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < rank; ++k) start[k * dim + i] = mod_u64(spec.images[i][k], mods[k]);
  cur = start;

  for (std::uint64_t power = 1;; ++power) {
    for (std::size_t k = 0; k < rank; ++k) {
      const std::uint64_t mod = mods[k];
      const std::uint64_t* img = &cur[k * dim];
      const std::uint64_t* fm = fk[k].data();
      for (std::size_t i = 0; i < dim; ++i) {
        u128 acc = 0;
        for (std::size_t j = 0; j < dim; ++j) acc += static_cast<u128>(fm[j * dim + i]) * img[j];
        next[k * dim + i] = static_cast<std::uint64_t>(acc % mod);
      }
    }
    std::swap(cur, next);
    if (cur == start) return power;
  }
}

bool verify_lift_power(const CoverSpec& spec, const IntMatrix& f, std::uint64_t k) {
  if (k == 0) return false;
  CoverSpec cur = spec;
  for (std::uint64_t j = 1; j < k; ++j) {
    cur = compose(cur, f);
    if (cur == spec) return false;
  }
  return compose(cur, f) == spec;
}

LiftCertificate certificate_power(const ConstructionCovers& covers, const TorusMap& m) {
  if (!is_anosov(m)) throw std::invalid_argument("certificate_power: map is not Anosov");
  LiftCertificate cert;
  cert.lifted = lift_to_X(m);
  const IntMatrix& f = cert.lifted.matrix4;
  cert.k_fix = min_power_two_fixed(m);
  cert.k_lift_phi1 = min_lift_power(covers.phi1, f);
  cert.k_lift_phi2 = min_lift_power(covers.phi2, f);
  cert.k_lift_full = min_lift_power(covers.phi_full, f);
  cert.k_total = std::lcm(static_cast<std::uint64_t>(cert.k_fix), cert.k_lift_full);

  auto& c = cert.checks;
  c.push_back({"k_lift(phi1) | k_lift(phi_full)", cert.k_lift_full % cert.k_lift_phi1 == 0, ""});
  c.push_back({"k_lift(phi2) | k_lift(phi_full)", cert.k_lift_full % cert.k_lift_phi2 == 0, ""});
  c.push_back({"k_lift(phi1) minimal", verify_lift_power(covers.phi1, f, cert.k_lift_phi1), ""});
  c.push_back({"k_lift(phi2) minimal", verify_lift_power(covers.phi2, f, cert.k_lift_phi2), ""});
  c.push_back({"k_lift(phi_full) minimal", verify_lift_power(covers.phi_full, f, cert.k_lift_full), ""});
  const IntMatrix phi = f.pow(cert.k_total);
  c.push_back({"F^k_total fixes the fibres of x0 in S1, S2 and S~",
               lifts_fixing_fiber(covers.phi1, phi) && lifts_fixing_fiber(covers.phi2, phi) &&
                   lifts_fixing_fiber(covers.phi_full, phi),
               "k_total = " + std::to_string(cert.k_total)});
  c.push_back({"M^k_fix has two fixed points",
               fixed_point_count(m, cert.k_fix) >= 2 && (cert.k_fix == 1 || fixed_point_count(m, cert.k_fix - 1) < 2),
               "k_fix = " + std::to_string(cert.k_fix)});
  return cert;
}

std::vector<Check> conjugacy_certificate(const ConstructionCovers& covers, const IntMatrix& f,
                                         std::uint64_t k) {
  std::vector<Check> checks;
  const IntMatrix tau = tau_matrix();
  checks.push_back({"phi2 = phi1 o tau (as covers)",
                    kernel_lattice(compose(covers.phi1, tau)) == kernel_lattice(covers.phi2), ""});
  const IntMatrix fk = f.pow(k);
  checks.push_back({"tau F^k = F^k tau", tau * fk == fk * tau, "k = " + std::to_string(k)});
  return checks;
}

}  // namespace liftcert

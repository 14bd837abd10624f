#include "liftcert/batch.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "liftcert/construction.hpp"
#include "liftcert/covers.hpp"
#include "liftcert/lifting.hpp"

namespace liftcert {

std::vector<AdmissiblePair> admissible_corpus(std::uint64_t nm_bound) {
  std::vector<AdmissiblePair> out;
  for (std::uint64_t n = 2; 2 * n <= nm_bound; ++n)
    for (std::uint64_t m = 2; n * m <= nm_bound; ++m) {
      auto pairs = enumerate_admissible(n, m);
      out.insert(out.end(), pairs.begin(), pairs.end());
    }
  return out;
}

std::vector<TorusMap> sl2_box(long bound) {
  std::vector<TorusMap> out;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c) {
        if (a == 0) {
          if (b * c != -1) continue;
          for (long d = -bound; d <= bound; ++d) out.emplace_back(a, b, c, d);
          continue;
        }
        const long num = 1 + b * c;
        if (num % a != 0) continue;
        const long d = num / a;
        if (d >= -bound && d <= bound) out.emplace_back(a, b, c, d);
      }
  return out;
}

bool CorpusRecord::passed(bool with_minimality) const {
  return error.empty() && orders && quotients && genus && non_equivalent && swap &&
         lift_divisibility && (!with_minimality || lift_minimal);
}

CorpusRecord verify_instance(const AdmissiblePair& pair, const CorpusOptions& options) {
  CorpusRecord r;
  r.pair = pair;
  try {
    const auto inst = build_instance(pair);
    const Integer nm = Integer(pair.n) * pair.m;
    const Integer deg = Integer(pair.n_b) * pair.m_a;
    const Integer order = nm / deg;
    r.orders = order * deg == nm && inst.h1.order() == order && inst.h2.order() == order &&
               order == Integer(pair.n_a) * pair.m_b * pair.n_c * pair.m_d && order > 1;
    r.quotients = inst.q1 == inst.q2 && inst.q1.is_cyclic() && inst.q1.order() == deg &&
                  !are_isomorphic(inst.h1, inst.h2);

    const auto g = genus_table(inst);
    const Integer chi_total = -2 * nm;
    const Integer chi_mid = -2 * deg;
    r.genus = g.genus_x == 2 && Integer(g.genus_total) == nm + 1 &&
              Integer(g.genus_s1) == deg + 1 && g.genus_s2 == g.genus_s1 &&
              chi_total == inst.h1.order() * chi_mid && chi_total == inst.h2.order() * chi_mid &&
              g.euler_total == chi_total && g.euler_s1 == chi_mid;

    const auto covers = construction_covers(inst);
    r.non_equivalent = !covers_equivalent(covers.phi1, covers.phi2);
    r.swap = all_passed(swap_certificate(covers));

    const IntMatrix f = lift_to_X(options.map).matrix4;
    r.k_lift_phi1 = min_lift_power(covers.phi1, f);
    r.k_lift_phi2 = min_lift_power(covers.phi2, f);
    r.k_lift_full = min_lift_power(covers.phi_full, f);
    r.lift_divisibility = r.k_lift_full % r.k_lift_phi1 == 0 && r.k_lift_full % r.k_lift_phi2 == 0;
    if (options.verify_minimality)
      r.lift_minimal = verify_lift_power(covers.phi1, f, r.k_lift_phi1) &&
                       verify_lift_power(covers.phi2, f, r.k_lift_phi2) &&
                       verify_lift_power(covers.phi_full, f, r.k_lift_full);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

std::vector<CorpusRecord> verify_corpus_serial(const std::vector<AdmissiblePair>& pairs,
                                               const CorpusOptions& options) {
  std::vector<CorpusRecord> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(verify_instance(p, options));
  return out;
}

std::vector<CorpusRecord> verify_corpus(const std::vector<AdmissiblePair>& pairs,
                                        const CorpusOptions& options) {
  std::vector<CorpusRecord> out(pairs.size());
  const auto count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) out[i] = verify_instance(pairs[i], options);
  return out;
}

LefschetzTally& LefschetzTally::operator+=(const LefschetzTally& o) {
  cases += o.cases;
  lattice_agree += o.lattice_agree;
  enumerated += o.enumerated;
  enumerated_agree += o.enumerated_agree;
  skipped_identity += o.skipped_identity;
  skipped_degenerate += o.skipped_degenerate;
  failures += o.failures;
  return *this;
}

LefschetzTally lefschetz_case(const TorusMap& m, unsigned k, std::uint64_t enumerate_cap) {
  LefschetzTally t;
  const IntMatrix p = m.matrix().pow(k);
  if (p == IntMatrix::identity(2)) {
    ++t.skipped_identity;
    return t;
  }
  const Integer det_shifted = 2 - (p(0, 0) + p(1, 1));
  if (det_shifted == 0) {
    ++t.skipped_degenerate;
    return t;
  }
  ++t.cases;
  const Integer count = abs_value(det_shifted);
  bool ok = fixed_point_count(m, k) == count;
  if (fixed_point_lattice(m, k).size() == count)
    ++t.lattice_agree;
  else
    ok = false;

  if (count <= enumerate_cap) {
    ++t.enumerated;
    const auto pts = fixed_points(m, k);
    std::set<std::pair<std::string, std::string>> seen;
    bool pts_ok = Integer(static_cast<unsigned long>(pts.size())) == count;
    for (const auto& x : pts) {
      const Rational y0 = Rational(p(0, 0)) * x[0] + Rational(p(0, 1)) * x[1] - x[0];
      const Rational y1 = Rational(p(1, 0)) * x[0] + Rational(p(1, 1)) * x[1] - x[1];
      pts_ok = pts_ok && y0.get_den() == 1 && y1.get_den() == 1 && x[0] >= 0 && x[0] < 1 &&
               x[1] >= 0 && x[1] < 1;
      seen.insert({x[0].get_str(), x[1].get_str()});
    }
    pts_ok = pts_ok && seen.size() == pts.size();
    if (pts_ok)
      ++t.enumerated_agree;
    else
      ok = false;
  }
  if (!ok) ++t.failures;
  return t;
}

LefschetzTally lefschetz_sweep_serial(const std::vector<TorusMap>& maps, unsigned max_k,
                                      std::uint64_t enumerate_cap) {
  LefschetzTally total;
  for (const auto& m : maps)
    for (unsigned k = 1; k <= max_k; ++k) total += lefschetz_case(m, k, enumerate_cap);
  return total;
}

LefschetzTally lefschetz_sweep(const std::vector<TorusMap>& maps, unsigned max_k,
                               std::uint64_t enumerate_cap) {
  std::vector<LefschetzTally> per(maps.size());
  const auto count = static_cast<std::int64_t>(maps.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i)
    for (unsigned k = 1; k <= max_k; ++k) per[i] += lefschetz_case(maps[i], k, enumerate_cap);
  LefschetzTally total;
  for (const auto& t : per) total += t;
  return total;
}

LiftRecord lift_case(const TorusMap& m, unsigned power_depth) {
  LiftRecord r;
  const IntMatrix f = lift_to_X(m).matrix4;
  const IntMatrix tau = tau_matrix();
  r.symplectic = is_symplectic(f);
  r.commutes_with_tau = tau * f == f * tau;
  r.powers_commute = true;
  IntMatrix g = f;
  for (unsigned j = 1; j <= power_depth; ++j) {
    r.powers_commute = r.powers_commute && tau * g == g * tau;
    g = g * f;
  }
  r.char_poly_divides = true;
  for (const auto& x :
       polynomial_remainder(characteristic_polynomial(f), characteristic_polynomial(m.matrix())))
    r.char_poly_divides = r.char_poly_divides && x == 0;
  try {
    r.plane_action = invariant_plane_action(f) == m.matrix();
  } catch (const std::domain_error&) {
    r.plane_action = false;
  }
  return r;
}

std::vector<LiftRecord> lift_sweep_serial(const std::vector<TorusMap>& maps, unsigned power_depth) {
  std::vector<LiftRecord> out;
  out.reserve(maps.size());
  for (const auto& m : maps) out.push_back(lift_case(m, power_depth));
  return out;
}

std::vector<LiftRecord> lift_sweep(const std::vector<TorusMap>& maps, unsigned power_depth) {
  std::vector<LiftRecord> out(maps.size());
  const auto count = static_cast<std::int64_t>(maps.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) out[i] = lift_case(maps[i], power_depth);
  return out;
}

std::vector<TorusMap> random_anosov(std::size_t count, long bound, std::uint64_t seed) {
  std::vector<TorusMap> pool;
  for (auto& m : sl2_box(bound))
    if (is_anosov(m)) pool.push_back(std::move(m));
  if (pool.size() < count) throw std::invalid_argument("random_anosov: box too small");
  std::mt19937_64 rng(seed);
  // partial Fisher-Yates
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace liftcert

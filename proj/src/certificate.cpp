#include "liftcert/certificate.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "liftcert/construction.hpp"
#include "liftcert/covers.hpp"
#include "liftcert/lifting.hpp"
#include "liftcert/normal_form.hpp"

namespace liftcert {

using nlohmann::json;

namespace {

constexpr std::size_t kFixedPointListCap = 64;

const std::vector<std::string> kNotCertified = {
    "the lifted maps on S1 and S2 are pseudo-Anosov",
    "the mapping tori M1, M2 are hyperbolic",
    "first homology of the covering mapping tori M1, M2, M~",
};

Status status_of(bool ok) { return ok ? Status::kPass : Status::kFail; }

class Recorder {
 public:
  explicit Recorder(std::vector<CheckRecord>& out) : out_(out) {}
  bool add(const std::string& section, const std::string& name, bool ok,
           const std::string& detail = "") {
    out_.push_back({section, name, status_of(ok), detail});
    return ok;
  }
  void add_all(const std::string& section, const std::vector<Check>& checks) {
    for (const auto& c : checks) add(section, c.name, c.passed, c.detail);
  }

 private:
  std::vector<CheckRecord>& out_;
};

bool all_pass(const std::vector<CheckRecord>& checks) {
  for (const auto& c : checks)
    if (c.status != Status::kPass) return false;
  return true;
}

std::string group_string(const Factors& f) {
  return FiniteAbelianGroup::from_invariant_factors(f).to_string();
}

CoverRecord cover_record(const std::string& name, const CoverSpec& spec) {
  CoverRecord r;
  r.name = name;
  r.orders = spec.orders;
  r.images = spec.images;
  r.kernel = kernel_lattice(spec);
  r.degree = image_order(spec);
  r.genus = is_connected_cover(spec) ? cover_genus(spec) : Integer(0);
  return r;
}

// --- JSON primitives -------------------------------------------------------

json int_json(const Integer& x) {
  if (fits_int64(x)) return to_int64(x);
  return x.get_str();
}

Integer int_from(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  return Integer(j.get<long>());
}

json ints_json(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

std::vector<Integer> ints_from(const json& j) {
  std::vector<Integer> v;
  for (const auto& x : j) v.push_back(int_from(x));
  return v;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from(const json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw std::invalid_argument("matrix rows of unequal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = int_from(j[i][k]);
  }
  return m;
}

json primes_json(const PrimeSet& p) { return p.primes(); }
PrimeSet primes_from(const json& j) { return PrimeSet(j.get<std::vector<std::uint64_t>>()); }

std::string status_name(Status s) { return s == Status::kPass ? "PASS" : "FAIL"; }

Status status_from(const std::string& s) {
  if (s == "PASS") return Status::kPass;
  if (s == "FAIL") return Status::kFail;
  throw std::invalid_argument("unknown check status " + s);
}

Verdict verdict_from(const std::string& s) {
  if (s == "PASS") return Verdict::kPass;
  if (s == "FAIL") return Verdict::kFail;
  if (s == "PARTIAL") return Verdict::kPartial;
  throw std::invalid_argument("unknown verdict " + s);
}

json checks_json(const std::vector<CheckRecord>& checks) {
  json a = json::array();
  for (const auto& c : checks)
    a.push_back({{"section", c.section}, {"name", c.name}, {"status", status_name(c.status)},
                 {"detail", c.detail}});
  return a;
}

std::vector<CheckRecord> checks_from(const json& j) {
  std::vector<CheckRecord> out;
  for (const auto& c : j)
    out.push_back({c.at("section").get<std::string>(), c.at("name").get<std::string>(),
                   status_from(c.at("status").get<std::string>()), c.at("detail").get<std::string>()});
  return out;
}

template <class T, class F>
json optional_json(const std::optional<T>& v, F&& f) {
  return v ? f(*v) : json(nullptr);
}

template <class T, class F>
std::optional<T> optional_from(const json& j, const char* key, F&& f) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return f(j.at(key));
}

// --- section encoders ------------------------------------------------------

json input_json(const VerifyInput& in) {
  return {{"n", in.n},
          {"m", in.m},
          {"A", primes_json(in.a)},
          {"B", primes_json(in.b)},
          {"matrix", in.matrix ? matrix_json(*in.matrix) : json(nullptr)},
          {"K", in.k}};
}

VerifyInput input_from(const json& j) {
  VerifyInput in;
  in.n = j.at("n").get<std::uint64_t>();
  in.m = j.at("m").get<std::uint64_t>();
  in.a = primes_from(j.at("A"));
  in.b = primes_from(j.at("B"));
  in.matrix = optional_from<IntMatrix>(j, "matrix", matrix_from);
  in.k = j.at("K").get<std::size_t>();
  return in;
}

json admissibility_json(const AdmissibilityRecord& r) {
  return {{"admissible", r.admissible}, {"failed_clause", r.failed_clause},
          {"detail", r.detail},         {"n_A", r.n_a},
          {"n_B", r.n_b},               {"n_C", r.n_c},
          {"m_A", r.m_a},               {"m_B", r.m_b},
          {"m_D", r.m_d},               {"ratio", r.ratio},
          {"C", primes_json(r.c)},      {"D", primes_json(r.d)}};
}

AdmissibilityRecord admissibility_from(const json& j) {
  AdmissibilityRecord r;
  r.admissible = j.at("admissible").get<bool>();
  r.failed_clause = j.at("failed_clause").get<std::string>();
  r.detail = j.at("detail").get<std::string>();
  r.n_a = j.at("n_A").get<std::uint64_t>();
  r.n_b = j.at("n_B").get<std::uint64_t>();
  r.n_c = j.at("n_C").get<std::uint64_t>();
  r.m_a = j.at("m_A").get<std::uint64_t>();
  r.m_b = j.at("m_B").get<std::uint64_t>();
  r.m_d = j.at("m_D").get<std::uint64_t>();
  r.ratio = j.at("ratio").get<std::uint64_t>();
  r.c = primes_from(j.at("C"));
  r.d = primes_from(j.at("D"));
  return r;
}

json construction_json(const ConstructionRecord& r) {
  return {{"G", ints_json(r.g)},   {"H1", ints_json(r.h1)},
          {"H2", ints_json(r.h2)}, {"G_mod_H1", ints_json(r.q1)},
          {"G_mod_H2", ints_json(r.q2)}, {"index_H1", int_json(r.h1_index)},
          {"index_H2", int_json(r.h2_index)}, {"witness_prime", r.witness_prime}};
}

ConstructionRecord construction_from(const json& j) {
  ConstructionRecord r;
  r.g = ints_from(j.at("G"));
  r.h1 = ints_from(j.at("H1"));
  r.h2 = ints_from(j.at("H2"));
  r.q1 = ints_from(j.at("G_mod_H1"));
  r.q2 = ints_from(j.at("G_mod_H2"));
  r.h1_index = int_from(j.at("index_H1"));
  r.h2_index = int_from(j.at("index_H2"));
  r.witness_prime = j.at("witness_prime").get<std::uint64_t>();
  return r;
}

json genus_json(const GenusRecord& r) {
  return {{"genus_X", r.genus_x},
          {"genus_S1", r.genus_s1},
          {"genus_S2", r.genus_s2},
          {"genus_total", r.genus_total},
          {"euler_X", int_json(r.euler_x)},
          {"euler_S1", int_json(r.euler_s1)},
          {"euler_S2", int_json(r.euler_s2)},
          {"euler_total", int_json(r.euler_total)}};
}

GenusRecord genus_from(const json& j) {
  GenusRecord r;
  r.genus_x = j.at("genus_X").get<std::uint64_t>();
  r.genus_s1 = j.at("genus_S1").get<std::uint64_t>();
  r.genus_s2 = j.at("genus_S2").get<std::uint64_t>();
  r.genus_total = j.at("genus_total").get<std::uint64_t>();
  r.euler_x = int_from(j.at("euler_X"));
  r.euler_s1 = int_from(j.at("euler_S1"));
  r.euler_s2 = int_from(j.at("euler_S2"));
  r.euler_total = int_from(j.at("euler_total"));
  return r;
}

json covers_json(const CoversRecord& r) {
  json covers = json::array();
  for (const auto& c : r.covers) {
    json images = json::array();
    for (const auto& img : c.images) images.push_back(ints_json(img));
    covers.push_back({{"name", c.name},
                      {"orders", ints_json(c.orders)},
                      {"images", images},
                      {"kernel", matrix_json(c.kernel)},
                      {"degree", int_json(c.degree)},
                      {"genus", int_json(c.genus)}});
  }
  return {{"covers", covers}, {"phi1_phi2_equivalent", r.phi1_phi2_equivalent},
          {"tau", matrix_json(r.tau)}};
}

CoversRecord covers_from(const json& j) {
  CoversRecord r;
  for (const auto& c : j.at("covers")) {
    CoverRecord cr;
    cr.name = c.at("name").get<std::string>();
    cr.orders = ints_from(c.at("orders"));
    for (const auto& img : c.at("images")) cr.images.push_back(ints_from(img));
    cr.kernel = matrix_from(c.at("kernel"));
    cr.degree = int_from(c.at("degree"));
    cr.genus = int_from(c.at("genus"));
    r.covers.push_back(std::move(cr));
  }
  r.phi1_phi2_equivalent = j.at("phi1_phi2_equivalent").get<bool>();
  r.tau = matrix_from(j.at("tau"));
  return r;
}

json dynamics_json(const DynamicsRecord& r) {
  json pts = json::array();
  for (const auto& p : r.fixed_points) pts.push_back({p[0], p[1]});
  return {{"matrix", matrix_json(r.matrix)},
          {"anosov", r.anosov},
          {"dilatation", r.dilatation},
          {"discriminant", int_json(r.discriminant)},
          {"traces", ints_json(r.traces)},
          {"k_fix", r.k_fix},
          {"fixed_point_count", int_json(r.fixed_point_count)},
          {"fixed_points", pts}};
}

DynamicsRecord dynamics_from(const json& j) {
  DynamicsRecord r;
  r.matrix = matrix_from(j.at("matrix"));
  r.anosov = j.at("anosov").get<bool>();
  r.dilatation = j.at("dilatation").get<double>();
  r.discriminant = int_from(j.at("discriminant"));
  r.traces = ints_from(j.at("traces"));
  r.k_fix = j.at("k_fix").get<unsigned>();
  r.fixed_point_count = int_from(j.at("fixed_point_count"));
  for (const auto& p : j.at("fixed_points"))
    r.fixed_points.push_back({p.at(0).get<std::string>(), p.at(1).get<std::string>()});
  return r;
}

json lifting_json(const LiftingRecord& r) {
  return {{"word", r.word},
          {"matrix4", matrix_json(r.matrix4)},
          {"k_lift_phi1", r.k_lift_phi1},
          {"k_lift_phi2", r.k_lift_phi2},
          {"k_lift_full", r.k_lift_full},
          {"k_total", r.k_total}};
}

LiftingRecord lifting_from(const json& j) {
  LiftingRecord r;
  r.word = j.at("word").get<std::string>();
  r.matrix4 = matrix_from(j.at("matrix4"));
  r.k_lift_phi1 = j.at("k_lift_phi1").get<std::uint64_t>();
  r.k_lift_phi2 = j.at("k_lift_phi2").get<std::uint64_t>();
  r.k_lift_full = j.at("k_lift_full").get<std::uint64_t>();
  r.k_total = j.at("k_total").get<std::uint64_t>();
  return r;
}

json manifold_json(const ManifoldRecord& r) {
  return {{"base_h1", r.base_h1},
          {"base_h1_free_rank", r.h1_free_rank},
          {"base_h1_torsion", ints_json(r.h1_torsion)},
          {"det_shifted", int_json(r.det_shifted)},
          {"lifted_h1", r.lifted_h1},
          {"deg_tilde_over_M1", int_json(r.deg_tilde_over_m1)},
          {"deg_tilde_over_M2", int_json(r.deg_tilde_over_m2)},
          {"deg_Mi_over_N", r.deg_mi_over_n},
          {"deg_tilde_over_N", r.deg_tilde_over_n},
          {"fiber_genus_tilde", r.fiber_genus_tilde},
          {"fiber_genus_Mi", r.fiber_genus_mi},
          {"fiber_genus_N", r.fiber_genus_n}};
}

ManifoldRecord manifold_from(const json& j) {
  ManifoldRecord r;
  r.base_h1 = j.at("base_h1").get<std::string>();
  r.h1_free_rank = j.at("base_h1_free_rank").get<std::size_t>();
  r.h1_torsion = ints_from(j.at("base_h1_torsion"));
  r.det_shifted = int_from(j.at("det_shifted"));
  r.lifted_h1 = j.at("lifted_h1").get<std::string>();
  r.deg_tilde_over_m1 = int_from(j.at("deg_tilde_over_M1"));
  r.deg_tilde_over_m2 = int_from(j.at("deg_tilde_over_M2"));
  r.deg_mi_over_n = j.at("deg_Mi_over_N").get<std::uint64_t>();
  r.deg_tilde_over_n = j.at("deg_tilde_over_N").get<std::uint64_t>();
  r.fiber_genus_tilde = j.at("fiber_genus_tilde").get<std::uint64_t>();
  r.fiber_genus_mi = j.at("fiber_genus_Mi").get<std::uint64_t>();
  r.fiber_genus_n = j.at("fiber_genus_N").get<std::uint64_t>();
  return r;
}

void require_schema(const json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw std::invalid_argument("unsupported schema_version");
}

// --- pipeline stages ---------------------------------------------------------

void finish(Certificate& c, bool partial) {
  c.not_certified = kNotCertified;
  if (!all_pass(c.checks))
    c.verdict = Verdict::kFail;
  else
    c.verdict = partial ? Verdict::kPartial : Verdict::kPass;
}

void record_construction(Certificate& c, Recorder& rec, const ConstructionInstance& inst) {
  const auto& pair = inst.pair;
  ConstructionRecord r;
  r.g = inst.g.invariant_factors();
  r.h1 = inst.h1.invariant_factors();
  r.h2 = inst.h2.invariant_factors();
  r.q1 = inst.q1.invariant_factors();
  r.q2 = inst.q2.invariant_factors();
  r.h1_index = inst.h1_index;
  r.h2_index = inst.h2_index;
  r.witness_prime = inst.witness_prime;
  c.construction = r;

  const Integer deg = Integer(pair.n_b) * pair.m_a;
  const Integer order = Integer(pair.n_a) * pair.m_b * pair.n_c * pair.m_d;
  rec.add("construction", "H1 not isomorphic to H2", !are_isomorphic(inst.h1, inst.h2),
          inst.h1.to_string() + " vs " + inst.h2.to_string());
  rec.add("construction", "G/H1 = G/H2 cyclic of order n_B m_A",
          inst.q1 == inst.q2 && inst.q1.is_cyclic() && inst.q1.order() == deg,
          "n_B m_A = " + deg.get_str());
  rec.add("construction", "|H1| = |H2| = n_A m_B n_C m_D",
          inst.h1.order() == order && inst.h2.order() == order, "order " + order.get_str());
  const Integer p(inst.witness_prime);
  rec.add("construction", "Sylow subgroups at the witness prime differ",
          inst.witness_prime != 0 && inst.h1.sylow(p).is_cyclic() && !inst.h2.sylow(p).is_cyclic(),
          "p = " + std::to_string(inst.witness_prime));
}

void record_genus(Certificate& c, Recorder& rec, const ConstructionInstance& inst) {
  const auto t = genus_table(inst);
  c.genus = GenusRecord{t.genus_x,  t.genus_s1, t.genus_s2, t.genus_total,
                        t.euler_x,  t.euler_s1, t.euler_s2, t.euler_total};
  const auto& pair = inst.pair;
  rec.add("genus", "genus(S~) = nm + 1", t.genus_total == pair.n * pair.m + 1,
          std::to_string(t.genus_total));
  rec.add("genus", "genus(S_i) = n_B m_A + 1",
          t.genus_s1 == pair.n_b * pair.m_a + 1 && t.genus_s2 == t.genus_s1,
          std::to_string(t.genus_s1));
  rec.add("genus", "chi(S~) = |H_i| chi(S_i)",
          t.euler_total == inst.h1.order() * t.euler_s1 && t.euler_total == inst.h2.order() * t.euler_s2,
          t.euler_total.get_str());
}

ConstructionCovers record_covers(Certificate& c, Recorder& rec, const ConstructionInstance& inst) {
  const ConstructionCovers covers = construction_covers(inst);
  CoversRecord r;
  r.covers = {cover_record("phi1", covers.phi1), cover_record("phi2", covers.phi2),
              cover_record("phi_full", covers.phi_full)};
  r.phi1_phi2_equivalent = covers_equivalent(covers.phi1, covers.phi2);
  r.tau = tau_matrix();
  c.covers = r;

  rec.add("covers", "phi1, phi2, phi_full connected",
          is_connected_cover(covers.phi1) && is_connected_cover(covers.phi2) &&
              is_connected_cover(covers.phi_full));
  rec.add("covers", "phi1 and phi2 not equivalent", !r.phi1_phi2_equivalent,
          "kernel lattices differ");
  rec.add_all("covers", swap_certificate(covers));
  rec.add("covers", "cover genera agree with the genus table",
          r.covers[0].genus == c.genus->genus_s1 && r.covers[1].genus == c.genus->genus_s2 &&
              r.covers[2].genus == c.genus->genus_total);
  return covers;
}

bool record_dynamics(Certificate& c, Recorder& rec, const TorusMap& m, std::size_t depth) {
  DynamicsRecord r;
  r.matrix = m.matrix();
  r.anosov = is_anosov(m);
  if (!rec.add("dynamics", "matrix is Anosov", r.anosov, "trace " + m.trace().get_str())) {
    c.dynamics = r;
    return false;
  }
  const auto dil = dilatation(m);
  r.dilatation = dil.value;
  r.discriminant = dil.discriminant;
  r.traces = trace_table(m, depth);
  r.k_fix = min_power_two_fixed(m);
  r.fixed_point_count = fixed_point_count(m, r.k_fix);
  const auto lattice = fixed_point_lattice(m, r.k_fix);
  bool points_ok = lattice.size() == r.fixed_point_count;
  if (r.fixed_point_count <= kFixedPointListCap) {
    const IntMatrix p = m.matrix().pow(r.k_fix);
    for (const auto& x : fixed_points(m, r.k_fix)) {
      const Rational y0 = Rational(p(0, 0)) * x[0] + Rational(p(0, 1)) * x[1] - x[0];
      const Rational y1 = Rational(p(1, 0)) * x[0] + Rational(p(1, 1)) * x[1] - x[1];
      points_ok = points_ok && y0.get_den() == 1 && y1.get_den() == 1;
      r.fixed_points.push_back({x[0].get_str(), x[1].get_str()});
    }
    points_ok = points_ok && Integer(static_cast<unsigned long>(r.fixed_points.size())) == r.fixed_point_count;
  }
  rec.add("dynamics", "fixed points of M^k_fix match |2 - tr(M^k_fix)|", points_ok,
          "k_fix = " + std::to_string(r.k_fix) + ", count " + r.fixed_point_count.get_str());
  c.dynamics = r;
  return true;
}

LiftCertificate record_lifting(Certificate& c, Recorder& rec, const ConstructionCovers& covers,
                               const TorusMap& m) {
  const LiftCertificate cert = certificate_power(covers, m);
  const IntMatrix& f = cert.lifted.matrix4;
  c.lifting = LiftingRecord{cert.lifted.word.to_string(), f,           cert.k_lift_phi1,
                            cert.k_lift_phi2,             cert.k_lift_full, cert.k_total};
  rec.add("lifting", "lift is symplectic", is_symplectic(f));
  const IntMatrix tau = tau_matrix();
  rec.add("lifting", "lift commutes with tau", tau * f == f * tau);
  bool divisible = true;
  for (const auto& x : polynomial_remainder(characteristic_polynomial(f),
                                            characteristic_polynomial(m.matrix())))
    divisible = divisible && x == 0;
  rec.add("lifting", "char poly of M divides char poly of the lift", divisible);
  rec.add_all("lifting", cert.checks);
  rec.add_all("conjugacy", conjugacy_certificate(covers, f, cert.k_total));
  return cert;
}

void record_manifold(Certificate& c, Recorder& rec, const ConstructionInstance& inst,
                     const TorusMap& m, const LiftCertificate& lift) {
  const auto base = mapping_torus_h1(m.matrix());
  const auto conj = conjugate_monodromy_h1_equal(lift.lifted.matrix4, lift.k_total);
  const auto ladder = cover_ladder(inst);
  ManifoldRecord r;
  r.base_h1 = base.to_string();
  r.h1_free_rank = base.h1_free_rank;
  r.h1_torsion = base.h1_torsion.invariant_factors();
  r.det_shifted = base.det_shifted;
  r.lifted_h1 = conj.h1.to_string();
  r.deg_tilde_over_m1 = ladder.deg_tilde_over_m1;
  r.deg_tilde_over_m2 = ladder.deg_tilde_over_m2;
  r.deg_mi_over_n = ladder.deg_mi_over_n;
  r.deg_tilde_over_n = ladder.deg_tilde_over_n;
  r.fiber_genus_tilde = ladder.fiber_genus_tilde;
  r.fiber_genus_mi = ladder.fiber_genus_mi;
  r.fiber_genus_n = ladder.fiber_genus_n;
  c.manifold = r;

  rec.add("manifold", "H1 of mapping tori of F^k and tau F^k tau^-1 agree", conj.h1_isomorphic,
          "k = " + std::to_string(lift.k_total));
  rec.add("manifold", "degrees multiply along M~ -> M_i -> N", ladder.degrees_multiply,
          ladder.deg_tilde_over_m1.get_str() + " * " + std::to_string(ladder.deg_mi_over_n) +
              " = " + std::to_string(ladder.deg_tilde_over_n));
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kPartial: return "PARTIAL";
  }
  return "FAIL";
}

Certificate run_verify(const VerifyInput& input) {
  Certificate c;
  c.input = input;
  Recorder rec(c.checks);

  const auto adm = check_admissible(input.n, input.m, input.a, input.b);
  c.admissibility.admissible = adm.admissible();
  c.admissibility.detail = adm.detail;
  if (adm.failed) c.admissibility.failed_clause = clause_name(*adm.failed);
  if (adm.pair) {
    const auto& p = *adm.pair;
    c.admissibility.n_a = p.n_a;
    c.admissibility.n_b = p.n_b;
    c.admissibility.n_c = p.n_c;
    c.admissibility.m_a = p.m_a;
    c.admissibility.m_b = p.m_b;
    c.admissibility.m_d = p.m_d;
    c.admissibility.ratio = p.ratio;
    c.admissibility.c = p.c;
    c.admissibility.d = p.d;
  }
  if (!rec.add("admissibility", "(n, m, A, B) admissible", adm.admissible(), adm.detail)) {
    finish(c, false);
    return c;
  }

  std::optional<ConstructionInstance> inst;
  ConstructionCovers covers;
  try {
    inst = build_instance(*adm.pair);
    record_construction(c, rec, *inst);
    record_genus(c, rec, *inst);
    covers = record_covers(c, rec, *inst);
  } catch (const ConstructionError& e) {
    rec.add("construction", "construction invariants", false, e.what());
    finish(c, false);
    return c;
  }

  if (!input.matrix) {
    finish(c, true);
    return c;
  }
  const TorusMap m(*input.matrix);
  if (!record_dynamics(c, rec, m, input.k)) {
    finish(c, false);
    return c;
  }
  const auto lift = record_lifting(c, rec, covers, m);
  record_manifold(c, rec, *inst, m, lift);
  finish(c, false);
  return c;
}

FamilyCertificate run_family(const PrimeSet& primes, const std::vector<TorusMap>& matrices,
                             std::size_t depth) {
  const auto rep = family_certificate(primes, matrices, depth);
  FamilyCertificate c;
  c.primes = primes;
  for (const auto& mtx : matrices) {
    c.matrices.push_back(mtx.matrix());
    c.trace_tables.push_back(trace_table(mtx, depth));
  }
  c.k = depth;
  c.n = rep.n;
  c.m = rep.m;
  for (const auto& s : rep.splittings)
    c.splittings.push_back({s.pair.a, s.pair.b, s.kernel_phi1, s.kernel_phi2,
                            s.ladder.covering_group_1.invariant_factors(),
                            s.ladder.covering_group_2.invariant_factors(), s.ladder.fiber_genus_tilde,
                            s.ladder.fiber_genus_mi});
  Recorder rec(c.checks);
  rec.add_all("family", rep.checks);
  c.verdict = all_pass(c.checks) ? Verdict::kPass : Verdict::kFail;
  return c;
}

json to_json_value(const Certificate& c) {
  json checks = checks_json(c.checks);
  return {{"schema_version", c.schema_version},
          {"toolkit_version", c.toolkit_version},
          {"input", input_json(c.input)},
          {"admissibility", admissibility_json(c.admissibility)},
          {"construction", optional_json(c.construction, construction_json)},
          {"genus", optional_json(c.genus, genus_json)},
          {"covers", optional_json(c.covers, covers_json)},
          {"dynamics", optional_json(c.dynamics, dynamics_json)},
          {"lifting", optional_json(c.lifting, lifting_json)},
          {"manifold", optional_json(c.manifold, manifold_json)},
          {"checks", checks},
          {"not_certified", c.not_certified},
          {"verdict", verdict_name(c.verdict)}};
}

Certificate certificate_from_json(const json& j) {
  require_schema(j);
  Certificate c;
  c.toolkit_version = j.at("toolkit_version").get<std::string>();
  c.input = input_from(j.at("input"));
  c.admissibility = admissibility_from(j.at("admissibility"));
  c.construction = optional_from<ConstructionRecord>(j, "construction", construction_from);
  c.genus = optional_from<GenusRecord>(j, "genus", genus_from);
  c.covers = optional_from<CoversRecord>(j, "covers", covers_from);
  c.dynamics = optional_from<DynamicsRecord>(j, "dynamics", dynamics_from);
  c.lifting = optional_from<LiftingRecord>(j, "lifting", lifting_from);
  c.manifold = optional_from<ManifoldRecord>(j, "manifold", manifold_from);
  c.checks = checks_from(j.at("checks"));
  c.not_certified = j.at("not_certified").get<std::vector<std::string>>();
  c.verdict = verdict_from(j.at("verdict").get<std::string>());
  return c;
}

json to_json_value(const FamilyCertificate& c) {
  json matrices = json::array();
  for (const auto& mtx : c.matrices) matrices.push_back(matrix_json(mtx));
  json tables = json::array();
  for (const auto& t : c.trace_tables) tables.push_back(ints_json(t));
  json splittings = json::array();
  for (const auto& s : c.splittings)
    splittings.push_back({{"A", primes_json(s.a)},
                          {"B", primes_json(s.b)},
                          {"kernel_phi1", matrix_json(s.kernel_phi1)},
                          {"kernel_phi2", matrix_json(s.kernel_phi2)},
                          {"H1", ints_json(s.h1)},
                          {"H2", ints_json(s.h2)},
                          {"genus_tilde", s.genus_tilde},
                          {"genus_Mi", s.genus_mi}});
  return {{"schema_version", c.schema_version},
          {"toolkit_version", c.toolkit_version},
          {"primes", primes_json(c.primes)},
          {"matrices", matrices},
          {"K", c.k},
          {"n", c.n},
          {"m", c.m},
          {"splittings", splittings},
          {"trace_tables", tables},
          {"checks", checks_json(c.checks)},
          {"verdict", verdict_name(c.verdict)}};
}

FamilyCertificate family_from_json(const json& j) {
  require_schema(j);
  FamilyCertificate c;
  c.toolkit_version = j.at("toolkit_version").get<std::string>();
  c.primes = primes_from(j.at("primes"));
  for (const auto& mtx : j.at("matrices")) c.matrices.push_back(matrix_from(mtx));
  c.k = j.at("K").get<std::size_t>();
  c.n = j.at("n").get<std::uint64_t>();
  c.m = j.at("m").get<std::uint64_t>();
  for (const auto& s : j.at("splittings"))
    c.splittings.push_back({primes_from(s.at("A")), primes_from(s.at("B")),
                            matrix_from(s.at("kernel_phi1")), matrix_from(s.at("kernel_phi2")),
                            ints_from(s.at("H1")), ints_from(s.at("H2")),
                            s.at("genus_tilde").get<std::uint64_t>(),
                            s.at("genus_Mi").get<std::uint64_t>()});
  for (const auto& t : j.at("trace_tables")) c.trace_tables.push_back(ints_from(t));
  c.checks = checks_from(j.at("checks"));
  c.verdict = verdict_from(j.at("verdict").get<std::string>());
  return c;
}

json enumeration_json(const std::vector<AdmissiblePair>& pairs) {
  json out = json::array();
  for (const auto& p : pairs) {
    const auto inst = build_instance(p);
    out.push_back({{"n", p.n},
                   {"m", p.m},
                   {"A", primes_json(p.a)},
                   {"B", primes_json(p.b)},
                   {"C", primes_json(p.c)},
                   {"D", primes_json(p.d)},
                   {"n_A", p.n_a},
                   {"n_B", p.n_b},
                   {"n_C", p.n_c},
                   {"m_A", p.m_a},
                   {"m_B", p.m_b},
                   {"m_D", p.m_d},
                   {"ratio", p.ratio},
                   {"H1", ints_json(inst.h1.invariant_factors())},
                   {"H2", ints_json(inst.h2.invariant_factors())},
                   {"quotient_order", inst.quotient_order()},
                   {"witness_prime", inst.witness_prime}});
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// --- text --------------------------------------------------------------------

namespace {

void row(std::ostringstream& os, const std::string& key, const std::string& value) {
  os << std::left << std::setw(12) << key << value << '\n';
}

void check_lines(std::ostringstream& os, const std::vector<CheckRecord>& checks) {
  for (const auto& c : checks) {
    os << std::left << std::setw(16) << ("[" + status_name(c.status) + "]") << c.section << ": "
       << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << '\n';
  }
}

}  // namespace

std::string render_text(const Certificate& c) {
  std::ostringstream os;
  const auto& in = c.input;
  std::string input = "n=" + std::to_string(in.n) + " m=" + std::to_string(in.m) +
                      " A=" + in.a.to_string() + " B=" + in.b.to_string();
  if (in.matrix) input += " matrix=" + to_string(*in.matrix);
  input += " K=" + std::to_string(in.k);
  row(os, "liftcert", c.toolkit_version);
  row(os, "input", input);
  if (c.construction) {
    const auto& r = *c.construction;
    row(os, "G", group_string(r.g));
    row(os, "H1", group_string(r.h1));
    row(os, "H2", group_string(r.h2));
    row(os, "G/H1", group_string(r.q1));
    row(os, "G/H2", group_string(r.q2));
    row(os, "witness", "p = " + std::to_string(r.witness_prime));
  }
  if (c.genus) {
    const auto& g = *c.genus;
    row(os, "genus", "S~ = " + std::to_string(g.genus_total) + ", S1 = " + std::to_string(g.genus_s1) +
                         ", S2 = " + std::to_string(g.genus_s2) + ", X = " + std::to_string(g.genus_x));
  }
  if (c.dynamics && c.dynamics->anosov) {
    std::ostringstream d;
    d << std::fixed << std::setprecision(6) << c.dynamics->dilatation;
    row(os, "dilatation", d.str());
    row(os, "k_fix", std::to_string(c.dynamics->k_fix) + " (" +
                         c.dynamics->fixed_point_count.get_str() + " fixed points)");
  }
  if (c.lifting) {
    const auto& l = *c.lifting;
    row(os, "word", l.word);
    row(os, "lift", to_string(l.matrix4));
    row(os, "k_lift", "phi1 " + std::to_string(l.k_lift_phi1) + ", phi2 " +
                          std::to_string(l.k_lift_phi2) + ", phi_full " +
                          std::to_string(l.k_lift_full));
    row(os, "k", std::to_string(l.k_total));
  }
  if (c.manifold) row(os, "H1(N)", c.manifold->base_h1);
  os << '\n';
  check_lines(os, c.checks);
  for (const auto& claim : c.not_certified) os << std::left << std::setw(16) << "[NOT-CERTIFIED]" << claim << '\n';
  os << '\n';
  row(os, "verdict", verdict_name(c.verdict));
  return os.str();
}

std::string render_text(const FamilyCertificate& c) {
  std::ostringstream os;
  row(os, "liftcert", c.toolkit_version);
  row(os, "primes", c.primes.to_string());
  row(os, "(n, m)", "(" + std::to_string(c.n) + ", " + std::to_string(c.m) + ")");
  for (const auto& s : c.splittings)
    row(os, "splitting", "A=" + s.a.to_string() + " B=" + s.b.to_string() + "  H1 " +
                             group_string(s.h1) + "  H2 " + group_string(s.h2) + "  genus(S~) " +
                             std::to_string(s.genus_tilde) + "  genus(S_i) " +
                             std::to_string(s.genus_mi));
  for (std::size_t i = 0; i < c.matrices.size(); ++i) {
    std::string t;
    for (const auto& x : c.trace_tables[i]) t += (t.empty() ? "" : ",") + x.get_str();
    row(os, "traces", to_string(c.matrices[i]) + "  [" + t + "]");
  }
  os << '\n';
  check_lines(os, c.checks);
  os << '\n';
  row(os, "verdict", verdict_name(c.verdict));
  return os.str();
}

std::string render_enumeration(std::uint64_t n, std::uint64_t m,
                               const std::vector<AdmissiblePair>& pairs) {
  std::ostringstream os;
  os << "admissible splittings of (" << n << ", " << m << "): " << pairs.size() << '\n';
  for (const auto& p : pairs) {
    const auto inst = build_instance(p);
    os << "A=" << std::left << std::setw(12) << p.a.to_string() << " B=" << std::setw(12)
       << p.b.to_string() << " ratio " << std::setw(6) << p.ratio << " H1 " << inst.h1.to_string()
       << "  H2 " << inst.h2.to_string() << "  n_B m_A " << inst.quotient_order() << '\n';
  }
  return os.str();
}

}  // namespace liftcert

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "liftcert/arithmetic.hpp"
#include "liftcert/int_matrix.hpp"
#include "liftcert/threemanifold.hpp"
#include "liftcert/torus.hpp"

namespace liftcert {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolkitVersion = "0.1.0";

using Factors = std::vector<Integer>;

enum class Status : std::uint8_t { kPass, kFail };

struct CheckRecord {
  std::string section;
  std::string name;
  Status status = Status::kFail;
  std::string detail;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct VerifyInput {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  PrimeSet a;
  PrimeSet b;
  std::optional<IntMatrix> matrix;
  std::size_t k = 10;

  friend bool operator==(const VerifyInput&, const VerifyInput&) = default;
};

struct AdmissibilityRecord {
  bool admissible = false;
  std::string failed_clause;
  std::string detail;
  std::uint64_t n_a = 0, n_b = 0, n_c = 0, m_a = 0, m_b = 0, m_d = 0, ratio = 0;
  PrimeSet c;
  PrimeSet d;

  friend bool operator==(const AdmissibilityRecord&, const AdmissibilityRecord&) = default;
};

struct ConstructionRecord {
  Factors g, h1, h2, q1, q2;
  Integer h1_index, h2_index;
  std::uint64_t witness_prime = 0;

  friend bool operator==(const ConstructionRecord&, const ConstructionRecord&) = default;
};

struct GenusRecord {
  std::uint64_t genus_x = 2, genus_s1 = 0, genus_s2 = 0, genus_total = 0;
  Integer euler_x, euler_s1, euler_s2, euler_total;

  friend bool operator==(const GenusRecord&, const GenusRecord&) = default;
};

struct CoverRecord {
  std::string name;
  Factors orders;
  std::vector<std::vector<Integer>> images;
  IntMatrix kernel;
  Integer degree;
  Integer genus;

  friend bool operator==(const CoverRecord&, const CoverRecord&) = default;
};

struct CoversRecord {
  std::vector<CoverRecord> covers;
  bool phi1_phi2_equivalent = false;
  IntMatrix tau;

  friend bool operator==(const CoversRecord&, const CoversRecord&) = default;
};

struct DynamicsRecord {
  IntMatrix matrix;
  bool anosov = false;
  double dilatation = 0.0;
  Integer discriminant;
  std::vector<Integer> traces;
  unsigned k_fix = 0;
  Integer fixed_point_count;
  /// Fixed points of M^k_fix as "p/q" strings, up to a small cap.
  std::vector<std::array<std::string, 2>> fixed_points;

  friend bool operator==(const DynamicsRecord&, const DynamicsRecord&) = default;
};

struct LiftingRecord {
  std::string word;
  IntMatrix matrix4;
  std::uint64_t k_lift_phi1 = 0, k_lift_phi2 = 0, k_lift_full = 0, k_total = 0;

  friend bool operator==(const LiftingRecord&, const LiftingRecord&) = default;
};

struct ManifoldRecord {
  std::string base_h1;
  std::size_t h1_free_rank = 0;
  Factors h1_torsion;
  Integer det_shifted;
  std::string lifted_h1;
  Integer deg_tilde_over_m1, deg_tilde_over_m2;
  std::uint64_t deg_mi_over_n = 0, deg_tilde_over_n = 0;
  std::uint64_t fiber_genus_tilde = 0, fiber_genus_mi = 0, fiber_genus_n = 2;

  friend bool operator==(const ManifoldRecord&, const ManifoldRecord&) = default;
};

enum class Verdict : std::uint8_t { kPass, kFail, kPartial };

struct Certificate {
  int schema_version = kSchemaVersion;
  std::string toolkit_version = kToolkitVersion;
  VerifyInput input;
  AdmissibilityRecord admissibility;
  std::optional<ConstructionRecord> construction;
  std::optional<GenusRecord> genus;
  std::optional<CoversRecord> covers;
  std::optional<DynamicsRecord> dynamics;
  std::optional<LiftingRecord> lifting;
  std::optional<ManifoldRecord> manifold;
  std::vector<CheckRecord> checks;
  std::vector<std::string> not_certified;
  Verdict verdict = Verdict::kFail;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Runs the whole pipeline. Never throws on mathematical failure; a failing
/// stage is recorded as a FAIL check and later stages are skipped.
Certificate run_verify(const VerifyInput& input);

struct FamilyCertificate {
  int schema_version = kSchemaVersion;
  std::string toolkit_version = kToolkitVersion;
  PrimeSet primes;
  std::vector<IntMatrix> matrices;
  std::size_t k = 10;
  std::uint64_t n = 0, m = 0;
  struct Splitting {
    PrimeSet a, b;
    IntMatrix kernel_phi1, kernel_phi2;
    Factors h1, h2;
    std::uint64_t genus_tilde = 0, genus_mi = 0;

    friend bool operator==(const Splitting&, const Splitting&) = default;
  };
  std::vector<Splitting> splittings;
  std::vector<std::vector<Integer>> trace_tables;
  std::vector<CheckRecord> checks;
  Verdict verdict = Verdict::kFail;

  friend bool operator==(const FamilyCertificate&, const FamilyCertificate&) = default;
};

FamilyCertificate run_family(const PrimeSet& primes, const std::vector<TorusMap>& matrices,
                             std::size_t depth);

std::string verdict_name(Verdict v);

nlohmann::json to_json_value(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::json to_json_value(const FamilyCertificate& c);
FamilyCertificate family_from_json(const nlohmann::json& j);
nlohmann::json enumeration_json(const std::vector<AdmissiblePair>& pairs);

/// Stable serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const nlohmann::json& j);

std::string render_text(const Certificate& c);
std::string render_text(const FamilyCertificate& c);
std::string render_enumeration(std::uint64_t n, std::uint64_t m,
                               const std::vector<AdmissiblePair>& pairs);

}  // namespace liftcert

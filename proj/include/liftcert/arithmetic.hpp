#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace liftcert {

bool is_prime(std::uint64_t n);

/// Sorted set of distinct primes.
class PrimeSet {
 public:
  PrimeSet() = default;
  /// Sorts and validates; throws std::invalid_argument on a non-prime or duplicate.
  explicit PrimeSet(std::vector<std::uint64_t> primes);
  PrimeSet(std::initializer_list<std::uint64_t> primes);

  const std::vector<std::uint64_t>& primes() const { return primes_; }
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }
  bool contains(std::uint64_t p) const;

  PrimeSet set_union(const PrimeSet& other) const;
  PrimeSet set_intersection(const PrimeSet& other) const;
  PrimeSet set_difference(const PrimeSet& other) const;
  bool subset_of(const PrimeSet& other) const;

  /// "{2,3}" ("{}" when empty).
  std::string to_string() const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
  friend auto operator<=>(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<std::uint64_t> primes_;
};

/// Primes dividing n, by trial division. Throws on n == 0.
PrimeSet prime_support(std::uint64_t n);

/// The divisor of n carrying exactly the primes of `part` that divide n.
std::uint64_t p_part(std::uint64_t n, const PrimeSet& part);

/// (n, m, A, B) with all derived prime parts. Only check_admissible builds these.
struct AdmissiblePair {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  PrimeSet a;
  PrimeSet b;
  PrimeSet c;  // Pi(n) \ (A u B)
  PrimeSet d;  // Pi(m) \ (A u B)
  std::uint64_t n_a = 1, n_b = 1, n_c = 1;
  std::uint64_t m_a = 1, m_b = 1, m_d = 1;
  std::uint64_t ratio = 0;  // (n_A m_B) / (m_A n_B)

  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

enum class AdmissibilityClause {
  kDisjoint,
  kNonempty,
  kSupportContainment,
  kIntegrality,
  kRatioGreaterThanOne,
};

std::string clause_name(AdmissibilityClause clause);

struct AdmissibilityResult {
  std::optional<AdmissiblePair> pair;
  std::optional<AdmissibilityClause> failed;  // first failing clause, in definition order
  std::string detail;

  bool admissible() const { return pair.has_value(); }
};

/// Throws std::invalid_argument when n < 2 or m < 2; a failed clause is a value.
AdmissibilityResult check_admissible(std::uint64_t n, std::uint64_t m, const PrimeSet& a,
                                     const PrimeSet& b);

/// All admissible (A, B) over subsets of Pi(n) n Pi(m), ordered by (A, B)
/// compared as sorted prime lists.
std::vector<AdmissiblePair> enumerate_admissible(std::uint64_t n, std::uint64_t m);

struct ChoiceFamily {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<AdmissiblePair> pairs;  // ({p_l}, {}) for each prime, in order
};

/// n = prod p^2, m = prod p, with one admissible splitting per prime.
ChoiceFamily k_choice_family(const PrimeSet& primes);

/// Overflow-checked product; throws std::overflow_error.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

}  // namespace liftcert

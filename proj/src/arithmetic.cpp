#include "liftcert/arithmetic.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace liftcert {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  if (std::adjacent_find(primes_.begin(), primes_.end()) != primes_.end())
    throw std::invalid_argument("PrimeSet: duplicate prime");
  for (auto p : primes_)
    if (!is_prime(p)) throw std::invalid_argument("PrimeSet: " + std::to_string(p) + " is not prime");
}

PrimeSet::PrimeSet(std::initializer_list<std::uint64_t> primes)
    : PrimeSet(std::vector<std::uint64_t>(primes)) {}

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

PrimeSet PrimeSet::set_union(const PrimeSet& other) const {
  PrimeSet out;
  std::set_union(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                 std::back_inserter(out.primes_));
  return out;
}

PrimeSet PrimeSet::set_intersection(const PrimeSet& other) const {
  PrimeSet out;
  std::set_intersection(primes_.begin(), primes_.end(), other.primes_.begin(),
                        other.primes_.end(), std::back_inserter(out.primes_));
  return out;
}

PrimeSet PrimeSet::set_difference(const PrimeSet& other) const {
  PrimeSet out;
  std::set_difference(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                      std::back_inserter(out.primes_));
  return out;
}

bool PrimeSet::subset_of(const PrimeSet& other) const {
  return std::includes(other.primes_.begin(), other.primes_.end(), primes_.begin(), primes_.end());
}

std::string PrimeSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < primes_.size(); ++i) os << (i ? "," : "") << primes_[i];
  os << '}';
  return os.str();
}

PrimeSet prime_support(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("prime_support: n must be positive");
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return PrimeSet(std::move(out));
}

std::uint64_t p_part(std::uint64_t n, const PrimeSet& part) {
  if (n == 0) throw std::invalid_argument("p_part: n must be positive");
  std::uint64_t out = 1;
  for (auto p : part.primes())
    while (n % p == 0) {
      n /= p;
      out *= p;
    }
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in product");
  return r;
}

std::string clause_name(AdmissibilityClause clause) {
  switch (clause) {
    case AdmissibilityClause::kDisjoint: return "disjointness";
    case AdmissibilityClause::kNonempty: return "nonemptiness";
    case AdmissibilityClause::kSupportContainment: return "support_containment";
    case AdmissibilityClause::kIntegrality: return "integrality";
    case AdmissibilityClause::kRatioGreaterThanOne: return "ratio_greater_than_one";
  }
  return "unknown";
}

AdmissibilityResult check_admissible(std::uint64_t n, std::uint64_t m, const PrimeSet& a,
                                     const PrimeSet& b) {
  if (n < 2 || m < 2) throw std::invalid_argument("check_admissible: n and m must be >= 2");
  auto reject = [](AdmissibilityClause c, std::string detail) {
    return AdmissibilityResult{std::nullopt, c, std::move(detail)};
  };
  if (!a.set_intersection(b).empty())
    return reject(AdmissibilityClause::kDisjoint, "A and B share " + a.set_intersection(b).to_string());
  const PrimeSet ab = a.set_union(b);
  if (ab.empty()) return reject(AdmissibilityClause::kNonempty, "A and B are both empty");
  const PrimeSet pn = prime_support(n);
  const PrimeSet pm = prime_support(m);
  const PrimeSet common = pn.set_intersection(pm);
  if (!ab.subset_of(common))
    return reject(AdmissibilityClause::kSupportContainment,
                  ab.set_difference(common).to_string() + " not contained in Pi(n) n Pi(m) = " +
                      common.to_string());

  AdmissiblePair pair;
  pair.n = n;
  pair.m = m;
  pair.a = a;
  pair.b = b;
  pair.c = pn.set_difference(ab);
  pair.d = pm.set_difference(ab);
  pair.n_a = p_part(n, a);
  pair.n_b = p_part(n, b);
  pair.n_c = p_part(n, pair.c);
  pair.m_a = p_part(m, a);
  pair.m_b = p_part(m, b);
  pair.m_d = p_part(m, pair.d);

  const std::uint64_t num = checked_mul(pair.n_a, pair.m_b);
  const std::uint64_t den = checked_mul(pair.m_a, pair.n_b);
  if (num % den != 0)
    return reject(AdmissibilityClause::kIntegrality,
                  std::to_string(num) + "/" + std::to_string(den) + " is not an integer");
  pair.ratio = num / den;
  if (pair.ratio <= 1)
    return reject(AdmissibilityClause::kRatioGreaterThanOne,
                  "ratio " + std::to_string(pair.ratio) + " is not > 1");
  return {std::move(pair), std::nullopt, {}};
}

std::vector<AdmissiblePair> enumerate_admissible(std::uint64_t n, std::uint64_t m) {
  if (n < 2 || m < 2) throw std::invalid_argument("enumerate_admissible: n and m must be >= 2");
  const auto common = prime_support(n).set_intersection(prime_support(m)).primes();
  const std::size_t k = common.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 3;

  std::vector<AdmissiblePair> out;
  // Each common prime goes to A, to B, or to neither.
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::uint64_t> av, bv;
    std::size_t c = code;
    for (std::size_t i = 0; i < k; ++i, c /= 3) {
      if (c % 3 == 1) av.push_back(common[i]);
      if (c % 3 == 2) bv.push_back(common[i]);
    }
    auto result = check_admissible(n, m, PrimeSet(std::move(av)), PrimeSet(std::move(bv)));
    if (result.admissible()) out.push_back(std::move(*result.pair));
  }
  std::sort(out.begin(), out.end(), [](const AdmissiblePair& x, const AdmissiblePair& y) {
    if (x.a != y.a) return x.a.primes() < y.a.primes();
    return x.b.primes() < y.b.primes();
  });
  return out;
}

ChoiceFamily k_choice_family(const PrimeSet& primes) {
  if (primes.empty()) throw std::invalid_argument("k_choice_family: need at least one prime");
  ChoiceFamily fam;
  fam.m = 1;
  for (auto p : primes.primes()) fam.m = checked_mul(fam.m, p);
  fam.n = checked_mul(fam.m, fam.m);
  for (auto p : primes.primes()) {
    auto result = check_admissible(fam.n, fam.m, PrimeSet{p}, PrimeSet{});
    if (!result.admissible())
      throw std::logic_error("k_choice_family: ({" + std::to_string(p) + "}, {}) rejected: " +
                             result.detail);
    fam.pairs.push_back(std::move(*result.pair));
  }
  return fam;
}

}  // namespace liftcert

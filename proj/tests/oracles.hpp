#pragma once

// Brute-force reference computations used only by the tests. None of these
// touch the Smith/Hermite code paths they are compared against.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <iterator>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Elem = std::pair<std::int64_t, std::int64_t>;

// Closure of the generators inside Z/n x Z/m by breadth-first search.
inline std::set<Elem> generated_subgroup(std::int64_t n, std::int64_t m,
                                         const std::vector<Elem>& gens) {
  std::set<Elem> seen{{0, 0}};
  std::vector<Elem> frontier{{0, 0}};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (const auto& [x, y] : frontier)
      for (const auto& [gx, gy] : gens) {
        Elem e{(x + gx) % n, (y + gy) % m};
        if (seen.insert(e).second) next.push_back(e);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline std::int64_t element_order(const Elem& e, std::int64_t n, std::int64_t m) {
  const std::int64_t ox = n / std::gcd(n, e.first);
  const std::int64_t oy = m / std::gcd(m, e.second);
  return std::lcm(ox, oy);
}

// Invariant factors from the element-order census: for each prime p the
// counts #{x : p^j x = 0} = p^{s_j} give the multiset of p-exponents.
inline std::vector<std::int64_t> classify(const std::set<Elem>& group, std::int64_t n,
                                          std::int64_t m) {
  std::map<std::int64_t, std::int64_t> order_count;
  for (const auto& e : group) ++order_count[element_order(e, n, m)];
  const auto size = static_cast<std::int64_t>(group.size());

  std::vector<std::int64_t> primes;
  {
    std::int64_t s = size;
    for (std::int64_t p = 2; p * p <= s; ++p)
      if (s % p == 0) {
        primes.push_back(p);
        while (s % p == 0) s /= p;
      }
    if (s > 1) primes.push_back(s);
  }

  // exponents[p] = descending list of e_i
  std::vector<std::vector<std::int64_t>> per_prime_powers;
  for (auto p : primes) {
    auto killed_by = [&](std::int64_t q) {
      std::int64_t c = 0;
      for (const auto& [ord, cnt] : order_count)
        if (q % ord == 0) c += cnt;
      return c;
    };
    auto log_p = [&](std::int64_t v) {
      std::int64_t e = 0;
      while (v > 1) {
        v /= p;
        ++e;
      }
      return e;
    };
    std::vector<std::int64_t> s{0};
    std::int64_t q = 1;
    while (true) {
      q *= p;
      const std::int64_t sj = log_p(killed_by(q));
      if (sj == s.back()) break;
      s.push_back(sj);
    }
    // number of cyclic factors with exponent >= j is s_j - s_{j-1}
    std::vector<std::int64_t> powers;
    const std::size_t top = s.size() - 1;
    for (std::size_t j = top; j >= 1; --j) {
      const std::int64_t at_least_j = s[j] - s[j - 1];
      const std::int64_t at_least_j1 = (j + 1 <= top) ? s[j + 1] - s[j] : 0;
      std::int64_t pe = 1;
      for (std::size_t t = 0; t < j; ++t) pe *= p;
      for (std::int64_t c = 0; c < at_least_j - at_least_j1; ++c) powers.push_back(pe);
    }
    std::sort(powers.rbegin(), powers.rend());
    per_prime_powers.push_back(powers);
  }
  std::size_t width = 0;
  for (const auto& v : per_prime_powers) width = std::max(width, v.size());
  std::vector<std::int64_t> factors(width, 1);
  // largest prime powers go into the last invariant factor
  for (const auto& v : per_prime_powers)
    for (std::size_t i = 0; i < v.size(); ++i) factors[width - 1 - i] *= v[i];
  return factors;
}

inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= n; ++p) {
    if (n % p) continue;
    bool prime = true;
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (prime) out.push_back(p);
  }
  return out;
}

inline std::int64_t part(std::int64_t n, const std::vector<std::int64_t>& ps) {
  std::int64_t r = 1;
  for (auto p : ps) {
    std::int64_t pk = 1;
    while (n % (pk * p) == 0) pk *= p;
    r *= pk;
  }
  return r;
}

struct Splitting {
  std::vector<std::int64_t> a, b;
  bool operator==(const Splitting&) const = default;
};

// Every disjoint (A, B) with A u B inside the common primes, tested
// directly against the definition.
inline std::vector<Splitting> admissible_splittings(std::int64_t n, std::int64_t m) {
  auto pn = prime_divisors(n), pm = prime_divisors(m);
  std::vector<std::int64_t> common;
  std::set_intersection(pn.begin(), pn.end(), pm.begin(), pm.end(), std::back_inserter(common));
  std::vector<Splitting> out;
  const std::size_t k = common.size();
  for (std::uint32_t amask = 0; amask < (1u << k); ++amask)
    for (std::uint32_t bmask = 0; bmask < (1u << k); ++bmask) {
      if (amask & bmask) continue;
      if ((amask | bmask) == 0) continue;
      Splitting s;
      for (std::size_t i = 0; i < k; ++i) {
        if (amask >> i & 1) s.a.push_back(common[i]);
        if (bmask >> i & 1) s.b.push_back(common[i]);
      }
      const std::int64_t num = part(n, s.a) * part(m, s.b);
      const std::int64_t den = part(m, s.a) * part(n, s.b);
      if (num % den == 0 && num / den > 1) out.push_back(s);
    }
  std::sort(out.begin(), out.end(), [](const Splitting& x, const Splitting& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  return out;
}

using Mat2 = std::array<std::int64_t, 4>;

inline Mat2 mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

// Traces of M^1..M^K by repeated multiplication (small entries only).
inline std::vector<std::int64_t> traces_by_powering(const Mat2& m, std::size_t k) {
  std::vector<std::int64_t> out;
  Mat2 p = m;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(p[0] + p[3]);
    p = mul(p, m);
  }
  return out;
}

// Fixed points of x -> P x on R^2/Z^2 counted on the grid (1/D) Z^2, which
// contains them all when D = |det(P - I)|.
inline std::int64_t grid_fixed_point_count(const Mat2& p) {
  const std::int64_t a = p[0] - 1, b = p[1], c = p[2], d = p[3] - 1;
  const std::int64_t det = std::llabs(a * d - b * c);
  std::int64_t count = 0;
  for (std::int64_t i = 0; i < det; ++i)
    for (std::int64_t j = 0; j < det; ++j)
      if ((a * i + b * j) % det == 0 && (c * i + d * j) % det == 0) ++count;
  return count;
}

}  // namespace oracle

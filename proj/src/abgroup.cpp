#include "liftcert/abgroup.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "liftcert/arithmetic.hpp"
#include "liftcert/normal_form.hpp"

namespace liftcert {

FiniteAbelianGroup FiniteAbelianGroup::from_invariant_factors(std::vector<Integer> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2)
      throw std::invalid_argument("invariant factors must be >= 2, got " + factors[i].get_str());
    if (i > 0 && !mpz_divisible_p(factors[i].get_mpz_t(), factors[i - 1].get_mpz_t()))
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
  FiniteAbelianGroup g;
  g.factors_ = std::move(factors);
  return g;
}

FiniteAbelianGroup FiniteAbelianGroup::from_smith_diagonal(const std::vector<Integer>& diagonal) {
  std::vector<Integer> factors;
  for (const auto& d : diagonal)
    if (d > 1) factors.push_back(d);
  return from_invariant_factors(std::move(factors));
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_product(const std::vector<Integer>& orders) {
  for (const auto& o : orders)
    if (o < 1) throw std::invalid_argument("cyclic orders must be >= 1");
  return from_smith_diagonal(smith_normal_form(IntMatrix::diagonal(orders)).invariants());
}

Integer FiniteAbelianGroup::order() const {
  Integer o = 1;
  for (const auto& d : factors_) o *= d;
  return o;
}

Integer FiniteAbelianGroup::exponent() const { return factors_.empty() ? Integer(1) : factors_.back(); }

std::map<Integer, std::vector<Integer>> FiniteAbelianGroup::primary_decomposition() const {
  std::map<Integer, std::vector<Integer>> out;
  for (const auto& d : factors_) {
    if (!d.fits_ulong_p())
      throw std::domain_error("primary_decomposition: factor too large to factor by trial division");
    const PrimeSet support = prime_support(d.get_ui());
    for (std::uint64_t p : support.primes()) {
      Integer pp = 1;
      Integer rest = d;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        rest /= p;
        pp *= p;
      }
      out[Integer(p)].push_back(pp);
    }
  }
  for (auto& [p, powers] : out) std::sort(powers.begin(), powers.end());
  return out;
}

FiniteAbelianGroup FiniteAbelianGroup::sylow(const Integer& p) const {
  std::vector<Integer> parts;
  for (const auto& d : factors_) {
    Integer pp = 1;
    Integer rest = d;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      pp *= p;
    }
    parts.push_back(pp);
  }
  return from_smith_diagonal(parts);
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " x ";
    os << "Z/" << factors_[i].get_str();
  }
  return os.str();
}

bool are_isomorphic(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h) { return g == h; }

SubgroupPresentation SubgroupPresentation::make(std::vector<Integer> ambient,
                                                std::vector<std::vector<Integer>> generators) {
  for (const auto& o : ambient)
    if (o < 1) throw std::invalid_argument("ambient orders must be >= 1");
  for (auto& g : generators) {
    if (g.size() != ambient.size())
      throw std::invalid_argument("generator length does not match ambient rank");
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = mod_nonneg(g[i], ambient[i]);
  }
  return {std::move(ambient), std::move(generators)};
}

Integer SubgroupPresentation::ambient_order() const {
  Integer o = 1;
  for (const auto& a : ambient) o *= a;
  return o;
}

namespace {

IntMatrix relation_matrix(const SubgroupPresentation& s) {
  std::vector<std::vector<Integer>> cols = s.generators;
  for (std::size_t i = 0; i < s.ambient.size(); ++i) {
    std::vector<Integer> e(s.ambient.size(), Integer(0));
    e[i] = s.ambient[i];
    cols.push_back(std::move(e));
  }
  return IntMatrix::from_columns(s.ambient.size(), cols);
}

}  // namespace

IntMatrix subgroup_lattice(const SubgroupPresentation& s) {
  return hermite_normal_form(relation_matrix(s));
}

SubgroupStructure subgroup_from_generators(const SubgroupPresentation& s) {
  const std::size_t r = s.ambient.size();
  if (r == 0) return {FiniteAbelianGroup{}, Integer(1)};
  // basis is square lower-triangular: the ambient relations force full rank.
  IntMatrix basis = subgroup_lattice(s);
  if (basis.cols() != r) throw std::logic_error("subgroup lattice is not of full rank");

  Integer index = 1;
  for (std::size_t i = 0; i < r; ++i) index *= basis(i, i);

  // Express the ambient relations diag(o) in the lattice basis; the subgroup
  // is lattice / diag(o) Z^r, i.e. the cokernel of those coordinates.
  IntMatrix coords(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      Integer rhs = (i == j) ? s.ambient[j] : Integer(0);
      for (std::size_t k = 0; k < i; ++k) rhs -= basis(i, k) * coords(k, j);
      if (!mpz_divisible_p(rhs.get_mpz_t(), basis(i, i).get_mpz_t()))
        throw std::logic_error("ambient relation outside subgroup lattice");
      Integer q;
      mpz_divexact(q.get_mpz_t(), rhs.get_mpz_t(), basis(i, i).get_mpz_t());
      coords(i, j) = q;
    }
  }
  auto group = FiniteAbelianGroup::from_smith_diagonal(smith_normal_form(coords).invariants());
  return {std::move(group), index};
}

FiniteAbelianGroup quotient_by_subgroup(const SubgroupPresentation& s) {
  return cokernel(relation_matrix(s)).torsion;
}

Cokernel cokernel(const IntMatrix& m) {
  auto diag = smith_normal_form(m).invariants();
  std::size_t nonzero = 0;
  for (const auto& d : diag)
    if (d != 0) ++nonzero;
  return {m.rows() - nonzero, FiniteAbelianGroup::from_smith_diagonal(diag)};
}

}  // namespace liftcert

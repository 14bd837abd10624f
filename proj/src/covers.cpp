#include "liftcert/covers.hpp"

#include <stdexcept>

#include "liftcert/normal_form.hpp"

namespace liftcert {

CoverSpec CoverSpec::make(std::uint32_t base_genus, std::vector<Integer> orders,
                          std::vector<std::vector<Integer>> images) {
  if (images.size() != 2 * static_cast<std::size_t>(base_genus))
    throw std::invalid_argument("CoverSpec: need one image per basis class");
  for (const auto& o : orders)
    if (o < 1) throw std::invalid_argument("CoverSpec: cyclic orders must be >= 1");
  for (auto& img : images) {
    if (img.size() != orders.size())
      throw std::invalid_argument("CoverSpec: image length does not match target rank");
    for (std::size_t k = 0; k < img.size(); ++k) img[k] = mod_nonneg(img[k], orders[k]);
  }
  return {base_genus, std::move(orders), std::move(images)};
}

IntMatrix CoverSpec::as_matrix() const {
  return IntMatrix::from_columns(orders.size(), images);
}

IntMatrix symplectic_form(std::uint32_t genus) {
  IntMatrix j(2 * genus, 2 * genus);
  for (std::size_t h = 0; h < genus; ++h) {
    j(2 * h, 2 * h + 1) = 1;
    j(2 * h + 1, 2 * h) = -1;
  }
  return j;
}

bool is_symplectic(const IntMatrix& f) {
  if (!f.is_square() || f.rows() % 2 != 0) return false;
  const IntMatrix j = symplectic_form(static_cast<std::uint32_t>(f.rows() / 2));
  return f.transpose() * j * f == j;
}

IntMatrix tau_matrix() {
  return {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
}

CoverSpec compose(const CoverSpec& spec, const IntMatrix& f) {
  const std::size_t dim = 2 * static_cast<std::size_t>(spec.base_genus);
  if (f.rows() != dim || f.cols() != dim)
    throw std::invalid_argument("compose: matrix does not act on the base homology");
  std::vector<std::vector<Integer>> images(dim, std::vector<Integer>(spec.orders.size(), Integer(0)));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if (f(j, i) == 0) continue;
      for (std::size_t k = 0; k < spec.orders.size(); ++k) images[i][k] += f(j, i) * spec.images[j][k];
    }
  return CoverSpec::make(spec.base_genus, spec.orders, std::move(images));
}

Integer image_order(const CoverSpec& spec) {
  return subgroup_from_generators(SubgroupPresentation::make(spec.orders, spec.images)).group.order();
}

bool is_connected_cover(const CoverSpec& spec) { return image_order(spec) == spec.target().order(); }

IntMatrix kernel_lattice(const CoverSpec& spec) { return kernel_mod(spec.as_matrix(), spec.orders); }

bool covers_equivalent(const CoverSpec& s1, const CoverSpec& s2) {
  if (s1.base_genus != s2.base_genus)
    throw std::invalid_argument("covers_equivalent: different base surfaces");
  return kernel_lattice(s1) == kernel_lattice(s2);
}

Integer cover_genus(const CoverSpec& spec) {
  if (!is_connected_cover(spec)) throw std::invalid_argument("cover_genus: cover is not connected");
  return image_order(spec) * (spec.base_genus - 1) + 1;
}

namespace {

std::vector<Integer> zero(std::size_t k) { return std::vector<Integer>(k, Integer(0)); }

// Kernel of Z^2 -> Z/r0 x Z/r1 (coordinatewise reduction) must equal the
// preimage lattice of H inside Z^2.
void require_quotient_kernel(const SubgroupPresentation& h, const std::vector<Integer>& reduced,
                             const char* name) {
  IntMatrix reduction = IntMatrix::identity(2);
  if (kernel_mod(reduction, reduced) != subgroup_lattice(h))
    throw ConstructionError(std::string("quotient map kernel differs from ") + name);
}

}  // namespace

ConstructionCovers construction_covers(const ConstructionInstance& inst) {
  const Integer n(inst.pair.n), m(inst.pair.m), nb(inst.pair.n_b), ma(inst.pair.m_a);
  auto spec_on = [&](const Integer& o0, const Integer& o1) {
    // a1 -> (1,0), a2 -> (0,1); b-classes -> 0.
    return CoverSpec::make(2, {o0, o1},
                           {{Integer(1), Integer(0)}, zero(2), {Integer(0), Integer(1)}, zero(2)});
  };
  ConstructionCovers covers{spec_on(nb, ma), spec_on(ma, nb), spec_on(n, m)};

  require_quotient_kernel(inst.h1_pres, {nb, ma}, "H1");
  require_quotient_kernel(inst.h2_pres, {ma, nb}, "H2");
  if (covers.phi1.target() != inst.q1 || covers.phi2.target() != inst.q2)
    throw ConstructionError("cover targets differ from the computed quotients");
  return covers;
}

std::vector<Check> swap_certificate(const ConstructionCovers& covers) {
  std::vector<Check> checks;
  const IntMatrix tau = tau_matrix();
  const CoverSpec twisted = compose(covers.phi1, tau);

  // Factor swap Z/n_B x Z/m_A -> Z/m_A x Z/n_B.
  std::vector<std::vector<Integer>> swapped;
  for (const auto& img : twisted.images) swapped.push_back({img[1], img[0]});
  const CoverSpec literal = CoverSpec::make(twisted.base_genus, {twisted.orders[1], twisted.orders[0]},
                                            std::move(swapped));
  checks.push_back({"phi2 = swap o phi1 o tau", literal == covers.phi2,
                    "homomorphism equality after the target factor swap"});
  checks.push_back({"ker phi2 = ker(phi1 o tau)",
                    kernel_lattice(twisted) == kernel_lattice(covers.phi2),
                    "tau_* exchanges the two cover subgroups"});
  checks.push_back({"tau^2 = I", tau * tau == IntMatrix::identity(4), ""});
  checks.push_back({"tau symplectic", is_symplectic(tau), ""});
  return checks;
}

}  // namespace liftcert

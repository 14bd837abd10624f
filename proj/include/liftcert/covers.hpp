#pragma once

#include <cstdint>
#include <vector>

#include "liftcert/abgroup.hpp"
#include "liftcert/check.hpp"
#include "liftcert/construction.hpp"
#include "liftcert/int_matrix.hpp"

namespace liftcert {

/// A regular abelian cover of the closed genus-g surface, given by the images
/// of the ordered symplectic basis (a1, b1, a2, b2, ...) in the target
/// Z/orders[0] x Z/orders[1] x ... . Element coordinates are kept reduced.
///
/// Covers of this kind factor through first homology, so the classifying
/// map on H_1 determines the cover up to equivalence.
struct CoverSpec {
  std::uint32_t base_genus = 2;
  std::vector<Integer> orders;
  std::vector<std::vector<Integer>> images;

  static CoverSpec make(std::uint32_t base_genus, std::vector<Integer> orders,
                        std::vector<std::vector<Integer>> images);

  FiniteAbelianGroup target() const { return FiniteAbelianGroup::from_cyclic_product(orders); }
  /// Target coordinates x basis, i.e. column i is the image of basis vector i.
  IntMatrix as_matrix() const;

  friend bool operator==(const CoverSpec&, const CoverSpec&) = default;
};

/// Basis indices of the genus-2 symplectic basis.
enum BasisIndex : std::size_t { kA1 = 0, kB1 = 1, kA2 = 2, kB2 = 3 };

/// Gram matrix of the intersection form: <a_i, b_i> = 1, <b_i, a_i> = -1.
IntMatrix symplectic_form(std::uint32_t genus = 2);
bool is_symplectic(const IntMatrix& f);

/// The handle swap (a1, b1) <-> (a2, b2): order 2, symplectic.
IntMatrix tau_matrix();

/// spec o f, for f acting on column vectors of basis coordinates.
CoverSpec compose(const CoverSpec& spec, const IntMatrix& f);

/// Size of the subgroup generated by the images (the cover degree).
Integer image_order(const CoverSpec& spec);
bool is_connected_cover(const CoverSpec& spec);
/// HNF basis of the kernel sublattice of Z^{2g}.
IntMatrix kernel_lattice(const CoverSpec& spec);
/// Unbased equivalence: equal kernel lattices.
bool covers_equivalent(const CoverSpec& s1, const CoverSpec& s2);
/// degree * (g - 1) + 1. Throws std::invalid_argument for a disconnected spec.
Integer cover_genus(const CoverSpec& spec);

struct ConstructionCovers {
  CoverSpec phi1;      // X <- S1, through G -> G/H1 = Z/n_B x Z/m_A
  CoverSpec phi2;      // X <- S2, through G -> G/H2 = Z/m_A x Z/n_B
  CoverSpec phi_full;  // X <- S~, a1 -> (1,0), a2 -> (0,1) in Z/n x Z/m
};

/// The three covers of an instance. The b-classes bound in the handlebody
/// and map to zero. Throws ConstructionError if a quotient map does not have
/// kernel exactly H_i.
ConstructionCovers construction_covers(const ConstructionInstance& inst);

/// phi2 vs phi1 o tau (literally, through the factor swap of the targets, and
/// as kernels), tau^2 = I, tau symplectic.
std::vector<Check> swap_certificate(const ConstructionCovers& covers);

}  // namespace liftcert

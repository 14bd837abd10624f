#pragma once

#include <vector>

#include "liftcert/int_matrix.hpp"

namespace liftcert {

struct SmithDecomposition {
  IntMatrix left;      // U, unimodular, rows x rows
  IntMatrix diagonal;  // D = U * M * V
  IntMatrix right;     // V, unimodular, cols x cols

  /// Diagonal entries d_0 | d_1 | ... (length min(rows, cols)), all >= 0.
  std::vector<Integer> invariants() const;
};

/// Smith normal form by unimodular row and column operations.
///
/// The pivot at each stage is the nonzero entry of least absolute value in
/// the remaining block, ties broken by row-major position, so the transforms
/// are a deterministic function of the input.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Column-style Hermite normal form of the lattice spanned by the columns of
/// `m`. The result has one column per basis vector (zero columns dropped);
/// pivot rows strictly increase, pivots are positive, and every entry to the
/// left of a pivot lies in [0, pivot). Equal lattices give equal output.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Basis (as HNF columns) of {v in Z^cols : m * v = 0 (mod moduli)}, where
/// row i of `m` is read modulo moduli[i]. A modulus of 0 means an exact
/// equation over Z.
IntMatrix kernel_mod(const IntMatrix& m, const std::vector<Integer>& moduli);

}  // namespace liftcert

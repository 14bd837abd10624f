#include "liftcert/normal_form.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace liftcert {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Least |a(i,j)| over the block i, j >= t; row-major ties.
std::optional<Position> smallest_pivot(const IntMatrix& a, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs_value(a(i, j));
      if (!best || v < best_abs) {
        best = Position{i, j};
        best_abs = v;
      }
    }
  return best;
}

Integer truncated_quotient(const Integer& num, const Integer& den) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer floor_quotient(const Integer& num, const Integer& den) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

std::vector<Integer> SmithDecomposition::invariants() const {
  const std::size_t k = std::min(diagonal.rows(), diagonal.cols());
  std::vector<Integer> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = diagonal(i, i);
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
    a.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    bool settled = false;
    while (!settled) {
      auto pivot = smallest_pivot(a, t);
      if (!pivot) return {std::move(u), std::move(a), std::move(v)};
      a.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      a.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);

      bool cleared = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        row_add(i, t, -truncated_quotient(a(i, t), a(t, t)));
        if (a(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        col_add(j, t, -truncated_quotient(a(t, j), a(t, t)));
        if (a(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      // Divisibility: fold an offending row into row t and go again.
      settled = true;
      for (std::size_t i = t + 1; i < rows && settled; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            row_add(t, i, Integer(1));
            settled = false;
            break;
          }
        }
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t pc = 0;
  for (std::size_t i = 0; i < rows && pc < cols; ++i) {
    while (true) {
      std::optional<std::size_t> best;
      Integer best_abs;
      for (std::size_t j = pc; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        Integer v = abs_value(a(i, j));
        if (!best || v < best_abs) {
          best = j;
          best_abs = v;
        }
      }
      if (!best) break;
      a.swap_cols(pc, *best);
      bool others_zero = true;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        a.add_col_multiple(j, pc, -truncated_quotient(a(i, j), a(i, pc)));
        if (a(i, j) != 0) others_zero = false;
      }
      if (others_zero) break;
    }
    if (a(i, pc) == 0) continue;
    if (a(i, pc) < 0) a.negate_col(pc);
    for (std::size_t j = 0; j < pc; ++j)
      a.add_col_multiple(j, pc, -floor_quotient(a(i, j), a(i, pc)));
    ++pc;
  }
  IntMatrix out(rows, pc);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < pc; ++j) out(i, j) = a(i, j);
  return out;
}

IntMatrix kernel_mod(const IntMatrix& m, const std::vector<Integer>& moduli) {
  if (moduli.size() != m.rows())
    throw std::invalid_argument("kernel_mod: one modulus per row required");
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  // Column span of [[m, diag(moduli)], [I, 0]] meets {top = 0} exactly in
  // the kernel, carried in the bottom block.
  IntMatrix aug(r + c, c + r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) aug(i, j) = m(i, j);
    aug(i, c + i) = moduli[i];
  }
  for (std::size_t j = 0; j < c; ++j) aug(r + j, j) = 1;

  IntMatrix h = hermite_normal_form(aug);
  std::vector<std::vector<Integer>> kernel_cols;
  for (std::size_t j = 0; j < h.cols(); ++j) {
    bool top_zero = true;
    for (std::size_t i = 0; i < r; ++i)
      if (h(i, j) != 0) {
        top_zero = false;
        break;
      }
    if (!top_zero) continue;
    std::vector<Integer> col(c);
    for (std::size_t i = 0; i < c; ++i) col[i] = h(r + i, j);
    kernel_cols.push_back(std::move(col));
  }
  if (kernel_cols.empty()) return IntMatrix(c, 0);
  return hermite_normal_form(IntMatrix::from_columns(c, kernel_cols));
}

}  // namespace liftcert

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using QVec = std::vector<Rat>;

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const QVec& a, const QVec& b);
Rat dot(const IntVec& a, const QVec& b);

/// gcd of the entries (0 for the zero vector).
Int content(const IntVec& v);

/// v divided by its content; the zero vector is returned unchanged.
IntVec primitive(const IntVec& v);

bool is_zero(const IntVec& v);
IntVec negated(const IntVec& v);
bool lex_less(const IntVec& a, const IntVec& b);

/// Dense row-major matrix over arbitrary-precision integers.
/// All arithmetic is exact; there is no overflow and no rounding.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  /// Build from a list of rows, all of length `cols`.
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  std::vector<IntVec> row_list() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVec operator*(const IntVec& x) const;
  bool operator==(const IntMatrix& rhs) const = default;

  bool is_zero() const;
  std::string to_string() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  /// row[dst] += q * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);
  /// col[dst] += q * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

/// Smith normal form u * a * v = s with u, v unimodular and s diagonal,
/// diagonal entries positive and each dividing the next.  The inverses of
/// the transforms are tracked alongside (they fall out of the same
/// elementary operations and several lattice routines want them).
struct SmithDecomposition {
  IntMatrix u, s, v;
  IntMatrix u_inv, v_inv;
  std::vector<Int> invariant_factors;  // the nonzero diagonal, in chain order
};

/// Smith normal form with magnitude-minimizing pivot selection.
SmithDecomposition snf(const IntMatrix& a);

/// Column-style Hermite normal form h = a * transform (transform unimodular).
/// Canonical form: pivot rows strictly increase column by column, pivots are
/// positive, entries right of a pivot in its row are zero, entries left of it
/// are reduced into [0, pivot); zero columns trail.
struct HermiteForm {
  IntMatrix h;
  IntMatrix transform;
};

HermiteForm hnf(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Finitely generated abelian group in invariant-factor form.
/// Canonical: unit factors dropped, torsion entries >= 2 in a divisibility
/// chain.  Equality is structural.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const AbelianGroup&) const = default;
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
};

/// Basis of the full integer kernel {w : a*w = 0} (a saturated lattice),
/// returned as the canonical Hermite basis.  Empty for a trivial kernel.
std::vector<IntVec> kernel_basis(const IntMatrix& a);

/// Cokernel of a : Z^cols -> Z^rows, i.e. Z^rows modulo the column image.
AbelianGroup cokernel(const IntMatrix& a);

/// Basis of span_Q(vectors) ∩ Z^n, the saturation of the generated lattice.
std::vector<IntVec> saturate(const std::vector<IntVec>& vectors,
                             std::size_t ambient_rank);

/// [Z^n : L] for the lattice L generated by the vectors; nullopt when L has
/// rank below n (the index is infinite).
std::optional<Int> lattice_index(const std::vector<IntVec>& vectors,
                                 std::size_t ambient_rank);

/// Canonical Hermite basis of the lattice generated by the given vectors.
std::vector<IntVec> lattice_canonical_basis(const std::vector<IntVec>& vectors,
                                            std::size_t ambient_rank);

bool lattice_equal(const std::vector<IntVec>& a, const std::vector<IntVec>& b,
                   std::size_t ambient_rank);

/// Some x with a*x = rhs, or nullopt when no integer solution exists.
std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& rhs);

/// x with <w, x> = content(w) (extended gcd across the entries).
IntVec gcd_combination(const IntVec& w);

}  // namespace toric

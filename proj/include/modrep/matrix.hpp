#pragma once

// Dense exact linear algebra over a FieldCtx.
//
// Convention used throughout the project: module elements are row vectors,
// and a matrix M acts on the right, v -> v * M.  Subspaces are row spaces
// held in reduced row echelon form, which makes equality of subspaces plain
// equality of their stored bases.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modrep/field.hpp"

namespace modrep {

class MatrixFF {
 public:
  /// Zero matrix of the given shape.
  MatrixFF(FieldCtx ctx, std::size_t rows, std::size_t cols);

  static MatrixFF identity(const FieldCtx& ctx, std::size_t n);
  /// 1 x n row vector from integer residues.
  static MatrixFF row_vector(const FieldCtx& ctx,
                             const std::vector<std::int64_t>& v);
  /// Matrix from integer residues, row major.
  static MatrixFF from_ints(const FieldCtx& ctx,
                            const std::vector<std::vector<std::int64_t>>& v);

  const FieldCtx& ctx() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const FieldElement& v);
  void set_int(std::size_t i, std::size_t j, std::int64_t v);

  bool is_zero() const;

  MatrixFF operator*(const MatrixFF& o) const;
  MatrixFF operator+(const MatrixFF& o) const;
  MatrixFF operator-(const MatrixFF& o) const;
  friend bool operator==(const MatrixFF& a, const MatrixFF& b);
  friend bool operator!=(const MatrixFF& a, const MatrixFF& b) {
    return !(a == b);
  }

  MatrixFF transpose() const;
  MatrixFF kron(const MatrixFF& o) const;
  FieldElement trace() const;
  MatrixFF scaled(const FieldElement& c) const;
  MatrixFF pow(std::uint64_t e) const;
  std::optional<MatrixFF> inverse() const;

  /// Row i as a 1 x cols matrix.
  MatrixFF row_slice(std::size_t i) const;

  std::string to_string() const;

  // Limb-level view used by the elimination routines; entry (i, j) occupies
  // m consecutive limbs starting here.
  std::uint32_t* limbs(std::size_t i, std::size_t j) {
    return a_.data() + (i * cols_ + j) * ctx_.m();
  }
  const std::uint32_t* limbs(std::size_t i, std::size_t j) const {
    return a_.data() + (i * cols_ + j) * ctx_.m();
  }

 private:
  FieldCtx ctx_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> a_;  // rows * cols * m limbs, row major
};

/// Stack vertically / horizontally (shapes must be compatible).
MatrixFF vstack(const MatrixFF& a, const MatrixFF& b);
MatrixFF hstack(const MatrixFF& a, const MatrixFF& b);

FieldElement det(const MatrixFF& a);

struct RrefResult {
  MatrixFF rref;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form by Gauss-Jordan elimination; exact, no pivots
/// lost since every nonzero field element is invertible.
RrefResult rref(const MatrixFF& a);

/// A row space of F_{p^m}^ambient with a canonical reduced-echelon basis.
/// Two Subspace values are equal as sets iff they compare equal.
class Subspace {
 public:
  /// Zero subspace.
  Subspace(FieldCtx ctx, std::size_t ambient);
  /// Row span of the given matrix (rows need not be independent).
  static Subspace from_rows(const MatrixFF& rows);

  const FieldCtx& ctx() const { return ctx_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  /// dim x ambient, reduced echelon, no zero rows.
  const MatrixFF& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

  bool contains(const MatrixFF& row_vec) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

 private:
  FieldCtx ctx_;
  std::size_t ambient_;
  MatrixFF basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
/// Zassenhaus intersection.
Subspace intersect(const Subspace& u, const Subspace& v);

/// Right kernel { x : A x^T = 0 }, presented as a Subspace of row vectors of
/// length cols(A).
Subspace kernel(const MatrixFF& a);

/// One solution x (row vector) of A x^T = b^T, if any; b is 1 x rows(A).
std::optional<MatrixFF> solve(const MatrixFF& a, const MatrixFF& b);

/// Projection/section pair realizing ambient / U.  projection is
/// ambient x q and section is q x ambient with section * projection = I_q;
/// quotient coordinates of v are v * projection.
struct QuotientMap {
  MatrixFF projection;
  MatrixFF section;
};

QuotientMap quotient_basis(std::size_t ambient_dim, const Subspace& u);

}  // namespace modrep

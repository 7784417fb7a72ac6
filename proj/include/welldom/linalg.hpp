#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace welldom {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// "num/den" with den > 0, always including the denominator.
std::string to_string(const Rational& q);
/// Accepts "a", "a/b", with optional sign. Throws DomainError.
Rational parse_rational(std::string_view text);

/// Rectangular matrix of exact rationals, stored by rows.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t cols = 0) : cols_(cols) {}
  RationalMatrix(std::size_t cols, std::vector<RationalVector> rows);

  std::size_t cols() const { return cols_; }
  std::size_t rows() const { return rows_.size(); }
  const RationalVector& row(std::size_t i) const { return rows_[i]; }
  const std::vector<RationalVector>& data() const { return rows_; }
  void add_row(RationalVector row);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t cols_;
  std::vector<RationalVector> rows_;
};

struct RrefResult {
  RationalMatrix matrix;  // zero rows removed
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with leftmost pivots. Canonical for the row space.
RrefResult rref(const RationalMatrix& m);

/// Subspace of Q^ambient, held as the RREF of a spanning set. Two bases are
/// the same subspace exactly when their canonical matrices are equal.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient = 0) : basis_(ambient) {}
  /// Row span of `spanning`.
  static SubspaceBasis span_of(const RationalMatrix& spanning);
  static SubspaceBasis full(std::size_t ambient);
  /// span{(1, 1, ..., 1)}
  static SubspaceBasis constants(std::size_t ambient);

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dimension() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// True iff x lies in the subspace (exact residual test).
  bool contains(std::span<const Rational> x) const;

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  RationalMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {x : m x = 0}
SubspaceBasis nullspace(const RationalMatrix& m);

/// Throw DomainError on ambient dimension mismatch.
bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b);
/// b ⊆ a
bool subspace_contains(const SubspaceBasis& a, const SubspaceBasis& b);

/// Direct sum of subspaces living on disjoint coordinate blocks. `blocks[i]`
/// lists the ambient coordinates of `parts[i]`.
SubspaceBasis direct_sum(std::size_t ambient, std::span<const SubspaceBasis> parts,
                         std::span<const std::vector<int>> blocks);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Incrementally maintained row space in reduced echelon form. Rows that are
/// already in the span are dropped on insertion.
class RowSpace {
 public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  /// Returns true when the row increased the rank.
  bool add(RationalVector row);
  bool contains(RationalVector row) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  RationalMatrix matrix() const;

 private:
  void reduce(RationalVector& row) const;

  std::size_t cols_;
  std::vector<RationalVector> rows_;  // each row has pivot 1 at pivots_[i], zero at other pivots
  std::vector<std::size_t> pivots_;
};

}  // namespace welldom

#include "welldom/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "welldom/errors.hpp"

namespace welldom {
namespace {

void check_length(const RationalVector& row, std::size_t cols) {
  if (row.size() != cols) {
    throw DomainError("row of length " + std::to_string(row.size()) + " in a matrix with " +
                      std::to_string(cols) + " columns");
  }
}

void check_ambient(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DomainError("subspaces live in different ambient dimensions (" +
                      std::to_string(a.ambient_dim()) + " vs " + std::to_string(b.ambient_dim()) +
                      ")");
  }
}

}  // namespace

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw DomainError("not a rational number: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

RationalMatrix::RationalMatrix(std::size_t cols, std::vector<RationalVector> rows)
    : cols_(cols), rows_(std::move(rows)) {
  for (const auto& r : rows_) check_length(r, cols_);
}

void RationalMatrix::add_row(RationalVector row) {
  check_length(row, cols_);
  rows_.push_back(std::move(row));
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DomainError("dot product of vectors with different lengths");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

RrefResult rref(const RationalMatrix& m) {
  std::vector<RationalVector> rows = m.data();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
    std::size_t found = rank;
    while (found < rows.size() && rows[found][col] == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[rank], rows[found]);
    Rational lead = rows[rank][col];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational factor = rows[r][col];
      for (std::size_t c = col; c < m.cols(); ++c) rows[r][c] -= factor * rows[rank][c];
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return {RationalMatrix(m.cols(), std::move(rows)), std::move(pivots)};
}

SubspaceBasis SubspaceBasis::span_of(const RationalMatrix& spanning) {
  RrefResult r = rref(spanning);
  SubspaceBasis out(spanning.cols());
  out.basis_ = std::move(r.matrix);
  out.pivots_ = std::move(r.pivots);
  return out;
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient) {
  RationalMatrix id(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    RationalVector row(ambient, 0);
    row[i] = 1;
    id.add_row(std::move(row));
  }
  return span_of(id);
}

SubspaceBasis SubspaceBasis::constants(std::size_t ambient) {
  RationalMatrix m(ambient);
  if (ambient > 0) m.add_row(RationalVector(ambient, 1));
  return span_of(m);
}

bool SubspaceBasis::contains(std::span<const Rational> x) const {
  if (x.size() != ambient_dim()) throw DomainError("vector length does not match ambient dimension");
  // In RREF the only candidate combination uses x's entries at the pivots.
  RationalVector residual(x.begin(), x.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Rational factor = residual[pivots_[i]];
    if (factor == 0) continue;
    const RationalVector& row = basis_.row(i);
    for (std::size_t c = 0; c < residual.size(); ++c) residual[c] -= factor * row[c];
  }
  return std::all_of(residual.begin(), residual.end(), [](const Rational& q) { return q == 0; });
}

SubspaceBasis nullspace(const RationalMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  RationalMatrix spanning(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(m.cols(), 0);
    x[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = -r.matrix.row(i)[free];
    spanning.add_row(std::move(x));
  }
  return SubspaceBasis::span_of(spanning);
}

bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
  check_ambient(a, b);
  return a == b;
}

bool subspace_contains(const SubspaceBasis& a, const SubspaceBasis& b) {
  check_ambient(a, b);
  for (const auto& row : b.basis().data()) {
    if (!a.contains(row)) return false;
  }
  return true;
}

SubspaceBasis direct_sum(std::size_t ambient, std::span<const SubspaceBasis> parts,
                         std::span<const std::vector<int>> blocks) {
  if (parts.size() != blocks.size()) throw DomainError("direct sum: parts and blocks differ in count");
  RationalMatrix spanning(ambient);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].ambient_dim() != blocks[p].size()) {
      throw DomainError("direct sum: block size does not match part dimension");
    }
    for (const auto& row : parts[p].basis().data()) {
      RationalVector x(ambient, 0);
      for (std::size_t i = 0; i < row.size(); ++i) x[blocks[p][i]] = row[i];
      spanning.add_row(std::move(x));
    }
  }
  return SubspaceBasis::span_of(spanning);
}

void RowSpace::reduce(RationalVector& row) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational factor = row[pivots_[i]];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) row[c] -= factor * rows_[i][c];
  }
}

bool RowSpace::add(RationalVector row) {
  check_length(row, cols_);
  reduce(row);
  auto lead = std::find_if(row.begin(), row.end(), [](const Rational& q) { return q != 0; });
  if (lead == row.end()) return false;
  std::size_t col = static_cast<std::size_t>(lead - row.begin());
  Rational scale = *lead;
  for (auto& x : row) x /= scale;
  for (auto& existing : rows_) {
    Rational factor = existing[col];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) existing[c] -= factor * row[c];
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(col);
  return true;
}

bool RowSpace::contains(RationalVector row) const {
  check_length(row, cols_);
  reduce(row);
  return std::all_of(row.begin(), row.end(), [](const Rational& q) { return q == 0; });
}

RationalMatrix RowSpace::matrix() const { return RationalMatrix(cols_, rows_); }

}  // namespace welldom

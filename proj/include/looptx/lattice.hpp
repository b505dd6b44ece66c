#pragma once

// Sublattices of the hoop lattice Z^n with chosen bases ("levels"), exact
// membership solving through column Hermite normal form, and the integer
// refinement matrices between nested levels.
//
// Intermediate arithmetic runs on arbitrary-precision integers; results are
// narrowed to int64 with an overflow check.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "looptx/graph.hpp"

namespace looptx {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors, each of length `rows`.
  static IntMatrix from_columns(std::size_t rows, const std::vector<HoopVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  HoopVector column(std::size_t c) const;
  std::vector<HoopVector> columns() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Checked int64 products.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
HoopVector operator*(const IntMatrix& a, const HoopVector& v);
IntMatrix transpose(const IntMatrix& a);

/// Column Hermite normal form H = A U with U unimodular. Nonzero columns come
/// first; column j has its positive pivot in row pivot_rows[j], zeros above
/// it, and entries left of each pivot reduced into [0, pivot).
class ColumnHermiteForm {
 public:
  explicit ColumnHermiteForm(const IntMatrix& a);

  std::size_t rank() const { return pivot_rows_.size(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// The nonzero columns of H, narrowed to int64.
  std::vector<HoopVector> basis() const;

  /// Integer x with A x = target, or nullopt when target is not in the
  /// column lattice. Requires full column rank, otherwise x is not unique and
  /// ArgumentError is thrown.
  std::optional<HoopVector> solve(const HoopVector& target) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<BigInt>> h_;  // column-major
  std::vector<std::vector<BigInt>> u_;  // column-major, cols_ x cols_
  std::vector<std::size_t> pivot_rows_;
};

/// Exact solve of basis * x = target. Throws ArgumentError when the basis is
/// rank deficient.
std::optional<HoopVector> hnf_solve(const IntMatrix& basis, const HoopVector& target);

/// A finitely generated sublattice of Z^ambient with an ordered independent
/// basis. Basis order is part of the value: it fixes the torus coordinates.
class Level {
 public:
  Level() = default;
  /// Throws ArgumentError on length mismatch or dependent vectors.
  Level(std::size_t ambient, std::vector<HoopVector> basis);

  static Level full(std::size_t ambient);
  static Level trivial(std::size_t ambient) { return Level(ambient, {}); }

  std::size_t ambient() const { return ambient_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<HoopVector>& basis() const { return basis_; }
  IntMatrix basis_matrix() const { return IntMatrix::from_columns(ambient_, basis_); }

  /// Coordinates of an ambient lattice point in this basis, if it belongs.
  std::optional<HoopVector> coordinates(const HoopVector& point) const;

  friend bool operator==(const Level& a, const Level& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<HoopVector> basis_;
};

/// Same Level but with the canonical Hermite basis of its lattice.
Level canonical(const Level& level);
bool same_lattice(const Level& a, const Level& b);

/// K with fine_basis * K = coarse_basis: column s holds the exponents of
/// coarse generator s in the fine generators.
struct RefinementMatrix {
  IntMatrix entries;

  friend bool operator==(const RefinementMatrix&, const RefinementMatrix&) = default;
};

/// nullopt when coarse is not a sublattice of fine. Throws ArgumentError on
/// an ambient mismatch.
std::optional<RefinementMatrix> refinement_matrix(const Level& coarse, const Level& fine);

/// Smallest level containing both, in canonical Hermite basis.
Level join_levels(const Level& a, const Level& b);

/// Full column rank over the rationals.
bool is_independent(const std::vector<HoopVector>& vectors);

}  // namespace looptx

#include "looptx/lattice.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "looptx/checked.hpp"
#include "looptx/errors.hpp"

namespace looptx {

namespace {

using BigColumn = std::vector<BigInt>;

std::int64_t narrow(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("lattice value does not fit in int64");
  }
  return v.convert_to<std::int64_t>();
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// col_j -= q * col_k
void axpy(BigColumn& target, const BigColumn& source, const BigInt& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < target.size(); ++i) target[i] -= q * source[i];
}

void negate(BigColumn& c) {
  for (BigInt& v : c) v = -v;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<HoopVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) {
      throw ArgumentError("column " + std::to_string(c) + " has length " +
                          std::to_string(columns[c].size()) + ", expected " +
                          std::to_string(rows));
    }
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

HoopVector IntMatrix::column(std::size_t c) const {
  HoopVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<HoopVector> IntMatrix::columns() const {
  std::vector<HoopVector> cols;
  cols.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) cols.push_back(column(c));
  return cols;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ArgumentError("matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc = checked_add(acc, checked_mul(a(i, k), b(k, j)));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

HoopVector operator*(const IntMatrix& a, const HoopVector& v) {
  if (a.cols() != v.size()) throw ArgumentError("matrix-vector shape mismatch");
  HoopVector out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) acc = checked_add(acc, checked_mul(a(i, k), v[k]));
    out[i] = acc;
  }
  return out;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

ColumnHermiteForm::ColumnHermiteForm(const IntMatrix& a)
    : rows_(a.rows()), cols_(a.cols()), h_(a.cols(), BigColumn(a.rows())),
      u_(a.cols(), BigColumn(a.cols())) {
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t r = 0; r < rows_; ++r) h_[c][r] = a(r, c);
    u_[c][c] = 1;
  }

  std::size_t pivot_col = 0;
  for (std::size_t row = 0; row < rows_ && pivot_col < cols_; ++row) {
    // Euclid on the columns: repeatedly take the smallest nonzero entry in
    // this row as pivot and reduce the others by it.
    while (true) {
      std::size_t best = cols_;
      for (std::size_t j = pivot_col; j < cols_; ++j) {
        if (h_[j][row] == 0) continue;
        if (best == cols_ || abs(h_[j][row]) < abs(h_[best][row])) best = j;
      }
      if (best == cols_) break;
      std::swap(h_[pivot_col], h_[best]);
      std::swap(u_[pivot_col], u_[best]);
      bool done = true;
      for (std::size_t j = pivot_col + 1; j < cols_; ++j) {
        if (h_[j][row] == 0) continue;
        BigInt q = h_[j][row] / h_[pivot_col][row];
        axpy(h_[j], h_[pivot_col], q);
        axpy(u_[j], u_[pivot_col], q);
        if (h_[j][row] != 0) done = false;
      }
      if (done) break;
    }
    if (h_[pivot_col][row] == 0) continue;
    if (h_[pivot_col][row] < 0) {
      negate(h_[pivot_col]);
      negate(u_[pivot_col]);
    }
    const BigInt& pivot = h_[pivot_col][row];
    for (std::size_t k = 0; k < pivot_col; ++k) {
      BigInt q = floor_div(h_[k][row], pivot);
      axpy(h_[k], h_[pivot_col], q);
      axpy(u_[k], u_[pivot_col], q);
    }
    pivot_rows_.push_back(row);
    ++pivot_col;
  }
}

std::vector<HoopVector> ColumnHermiteForm::basis() const {
  std::vector<HoopVector> out;
  out.reserve(rank());
  for (std::size_t c = 0; c < rank(); ++c) {
    HoopVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = narrow(h_[c][r]);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<HoopVector> ColumnHermiteForm::solve(const HoopVector& target) const {
  if (rank() != cols_) throw ArgumentError("basis is rank deficient; solution is not unique");
  if (target.size() != rows_) throw ArgumentError("target has the wrong length");

  BigColumn residual(target.begin(), target.end());
  BigColumn y(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    const std::size_t p = pivot_rows_[j];
    // Rows above this pivot are already settled; any leftover there means no solution.
    const std::size_t previous = j == 0 ? 0 : pivot_rows_[j - 1] + 1;
    for (std::size_t r = previous; r < p; ++r) {
      if (residual[r] != 0) return std::nullopt;
    }
    if (residual[p] % h_[j][p] != 0) return std::nullopt;
    y[j] = residual[p] / h_[j][p];
    axpy(residual, h_[j], y[j]);
  }
  for (const BigInt& r : residual) {
    if (r != 0) return std::nullopt;
  }

  HoopVector x(cols_);
  for (std::size_t i = 0; i < cols_; ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += u_[j][i] * y[j];
    x[i] = narrow(acc);
  }
  return x;
}

std::optional<HoopVector> hnf_solve(const IntMatrix& basis, const HoopVector& target) {
  return ColumnHermiteForm(basis).solve(target);
}

Level::Level(std::size_t ambient, std::vector<HoopVector> basis)
    : ambient_(ambient), basis_(std::move(basis)) {
  for (const HoopVector& v : basis_) {
    if (v.size() != ambient_) {
      throw ArgumentError("level basis vector has length " + std::to_string(v.size()) +
                          ", ambient is " + std::to_string(ambient_));
    }
  }
  if (!is_independent(basis_)) throw ArgumentError("level basis is not independent");
}

Level Level::full(std::size_t ambient) {
  return Level(ambient, IntMatrix::identity(ambient).columns());
}

std::optional<HoopVector> Level::coordinates(const HoopVector& point) const {
  return ColumnHermiteForm(basis_matrix()).solve(point);
}

Level canonical(const Level& level) {
  return Level(level.ambient(), ColumnHermiteForm(level.basis_matrix()).basis());
}

bool same_lattice(const Level& a, const Level& b) {
  return a.ambient() == b.ambient() && canonical(a).basis() == canonical(b).basis();
}

std::optional<RefinementMatrix> refinement_matrix(const Level& coarse, const Level& fine) {
  if (coarse.ambient() != fine.ambient()) {
    throw ArgumentError("levels live in different ambient lattices");
  }
  ColumnHermiteForm form(fine.basis_matrix());
  IntMatrix k(fine.size(), coarse.size());
  for (std::size_t s = 0; s < coarse.size(); ++s) {
    std::optional<HoopVector> x = form.solve(coarse.basis()[s]);
    if (!x) return std::nullopt;
    for (std::size_t r = 0; r < fine.size(); ++r) k(r, s) = (*x)[r];
  }
  return RefinementMatrix{std::move(k)};
}

Level join_levels(const Level& a, const Level& b) {
  if (a.ambient() != b.ambient()) throw ArgumentError("levels live in different ambient lattices");
  std::vector<HoopVector> stacked = a.basis();
  stacked.insert(stacked.end(), b.basis().begin(), b.basis().end());
  return Level(a.ambient(),
               ColumnHermiteForm(IntMatrix::from_columns(a.ambient(), stacked)).basis());
}

bool is_independent(const std::vector<HoopVector>& vectors) {
  if (vectors.empty()) return true;
  const std::size_t n = vectors.front().size();
  return ColumnHermiteForm(IntMatrix::from_columns(n, vectors)).rank() == vectors.size();
}

}  // namespace looptx

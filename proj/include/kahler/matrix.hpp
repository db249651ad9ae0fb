#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace kahler {

/// Dense row-major matrix of exact values.
template <class T>
class Grid {
 public:
  Grid(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Submatrix on the given rows and columns, in the given order.
  Grid submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    std::vector<T> picked;
    picked.reserve(rows.size() * cols.size());
    for (std::size_t r : rows) {
      for (std::size_t c : cols) picked.push_back((*this)(r, c));
    }
    return Grid(rows.size(), cols.size(), std::move(picked));
  }

  template <class F>
  auto map(F&& f) const -> Grid<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> mapped;
    mapped.reserve(data_.size());
    for (const auto& v : data_) mapped.push_back(f(v));
    return Grid<U>(rows_, cols_, std::move(mapped));
  }

  Grid(std::size_t rows, std::size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("grid data size mismatch");
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

/// Determinant of a square matrix by Laplace expansion along successive rows,
/// memoized on the set of columns still available. Uses O(2^t * t) ring
/// operations and no division, so it works over any commutative ring.
/// `zero` and `one` supply the ring's identities. Limited to t <= 24.
template <class T>
T cofactor_determinant(const Grid<T>& m, const T& zero, const T& one) {
  const std::size_t t = m.rows();
  if (m.cols() != t) throw std::invalid_argument("determinant of a non-square matrix");
  if (t == 0) return one;
  if (t > 24) throw std::invalid_argument("cofactor expansion limited to 24x24");
  // minors[mask] = det of rows (t - popcount(mask) .. t-1) x columns in mask
  std::vector<T> minors(std::size_t{1} << t, zero);
  minors[0] = one;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << t); ++mask) {
    const std::size_t k = static_cast<std::size_t>(std::popcount(mask));
    const std::size_t row = t - k;
    T acc = zero;
    int sign = 1;
    for (std::size_t c = 0; c < t; ++c) {
      if (!(mask & (std::uint32_t{1} << c))) continue;
      const T& entry = m(row, c);
      const std::uint32_t rest = mask & ~(std::uint32_t{1} << c);
      if (!(entry == zero) && !(minors[rest] == zero)) {
        if (sign > 0) acc += entry * minors[rest];
        else acc -= entry * minors[rest];
      }
      sign = -sign;
    }
    minors[mask] = std::move(acc);
  }
  return minors.back();
}

}  // namespace kahler

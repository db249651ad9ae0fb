#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kahler {

/// Exponent vector (a_1, ..., a_s). Used both as a monomial exponent and as
/// the label of a basis element (d x)^alpha of the differentials module.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t s) : exps_(s, 0) {}
  MultiIndex(std::initializer_list<std::uint32_t> exps);
  explicit MultiIndex(std::vector<std::uint32_t> exps);

  static MultiIndex unit(std::size_t s, std::size_t i);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }
  bool is_zero() const noexcept { return degree_ == 0; }

  void set(std::size_t i, std::uint32_t value);

  /// Componentwise a_i <= b_i.
  bool divides(const MultiIndex& other) const;
  /// Componentwise sum.
  MultiIndex operator+(const MultiIndex& other) const;
  /// Componentwise difference; requires other.divides(*this).
  MultiIndex operator-(const MultiIndex& other) const;

  friend MultiIndex lcm(const MultiIndex& a, const MultiIndex& b);
  friend bool coprime(const MultiIndex& a, const MultiIndex& b);

  /// Structural lexicographic comparison of the exponent vectors; used only
  /// for associative containers, never as a monomial order.
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.exps_ <=> b.exps_; }
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.exps_ == b.exps_; }

  /// "(a1,a2,...)"
  std::string to_string() const;

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Graded reverse lexicographic comparison with x_1 > x_2 > ... > x_s.
/// Returns <0, 0, >0 when a is smaller, equal, larger than b.
int grevlex_compare(const MultiIndex& a, const MultiIndex& b) noexcept;

/// Labeling convention for rows and columns of the Jacobian matrices.
///
/// GradedRevLex (default): ascending total degree; within a degree, alpha
/// precedes alpha' iff the rightmost nonzero entry of alpha - alpha' is
/// negative. For s = 2 this lists x1, x2, x1^2, x1x2, x2^2, ...
///
/// GradedLex: ascending total degree; within a degree, lexicographically
/// descending (x1^2, x1x2, x1x3, ..., x2^2, ...).
enum class ColumnOrder { GradedRevLex, GradedLex };

ColumnOrder parse_column_order(const std::string& name);
std::string to_string(ColumnOrder order);

/// Strict total order on indices of equal length.
bool column_precedes(const MultiIndex& a, const MultiIndex& b,
                     ColumnOrder order = ColumnOrder::GradedRevLex) noexcept;

struct ColumnLess {
  ColumnOrder order = ColumnOrder::GradedRevLex;
  bool operator()(const MultiIndex& a, const MultiIndex& b) const noexcept {
    return column_precedes(a, b, order);
  }
};

/// All alpha of length s with lo <= |alpha| <= hi, sorted by `order`.
std::vector<MultiIndex> enumerate_indices(std::size_t s, std::uint32_t lo, std::uint32_t hi,
                                          ColumnOrder order = ColumnOrder::GradedRevLex);

mpz_class binomial(unsigned long n, unsigned long k);

/// prod_i binom(gamma_i, alpha_i) over the integers; zero unless alpha <= gamma.
mpz_class multi_binomial(const MultiIndex& gamma, const MultiIndex& alpha);

}  // namespace kahler

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "kahler/matrix.hpp"
#include "kahler/polynomial.hpp"

namespace kahler {

/// Dimension constants of the order-n presentation for r generators in s
/// variables: N = C(s+n, s), M = C(s+n-1, s), L = C(s-1+n, s-1).
/// The free module has rank N-1 and each generator contributes M rows.
struct DimensionSet {
  std::uint32_t s = 0;
  std::uint32_t n = 0;
  std::uint32_t r = 0;
  std::uint64_t N = 0;
  std::uint64_t M = 0;
  std::uint64_t L = 0;

  static DimensionSet make(std::uint32_t s, std::uint32_t n, std::uint32_t r = 1);

  std::uint64_t free_rank() const noexcept { return N - 1; }
  std::uint64_t row_count() const noexcept { return static_cast<std::uint64_t>(r) * M; }
};

/// Element of the free module A^{N-1} with basis (d x)^alpha, 1 <= |alpha| <= n.
/// Components are stored sparsely; zero components are never kept.
class ModuleVector {
 public:
  ModuleVector(RingPtr ring, std::uint32_t n);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  std::uint32_t order() const noexcept { return n_; }

  /// Component at alpha (zero polynomial when absent).
  Polynomial component(const MultiIndex& alpha) const;
  /// Throws DegreeRange when alpha is not a valid basis label.
  void set(const MultiIndex& alpha, Polynomial value);
  void add(const MultiIndex& alpha, const Polynomial& value);

  const std::map<MultiIndex, Polynomial>& components() const noexcept { return comps_; }
  bool is_zero() const noexcept { return comps_.empty(); }

  ModuleVector& operator+=(const ModuleVector& rhs);
  ModuleVector& operator-=(const ModuleVector& rhs);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const Polynomial& c, const ModuleVector& v);

  friend bool operator==(const ModuleVector& a, const ModuleVector& b);

  /// "(1,1):3*x2;(0,2):-2*x1", components listed in column order.
  std::string to_string(ColumnOrder order = ColumnOrder::GradedRevLex) const;

 private:
  void require_ambient(const ModuleVector& rhs) const;
  void check_label(const MultiIndex& alpha) const;

  RingPtr ring_;
  std::uint32_t n_;
  std::map<MultiIndex, Polynomial> comps_;
};

/// Parses "alpha:poly" pairs separated by ';', e.g. "(1,1):3*x2;(0,2):-2*x1".
/// Repeated labels are summed.
ModuleVector parse_module_vector(std::string_view text, const RingPtr& ring, std::uint32_t n);

/// Basis vector x^0 * (d x)^alpha scaled by `coeff`.
ModuleVector basis_vector(const RingPtr& ring, std::uint32_t n, const MultiIndex& alpha, const Polynomial& coeff);

struct RowLabel {
  std::size_t generator;  // 0-based index into the generator list
  MultiIndex beta;
  bool operator==(const RowLabel&) const = default;
};

/// Order-n Jacobian matrix of an ideal <f_1, ..., f_r>: row (i, beta) holds
/// the coefficients of (d x)^beta * d(f_i) in the basis (d x)^alpha.
class JacobianMatrix {
 public:
  JacobianMatrix(std::vector<Polynomial> generators, DimensionSet dims, ColumnOrder order,
                 std::vector<RowLabel> row_labels, std::vector<MultiIndex> col_labels, Grid<Polynomial> entries);

  const DimensionSet& dims() const noexcept { return dims_; }
  ColumnOrder column_order() const noexcept { return order_; }
  const RingPtr& ring_ptr() const noexcept { return generators_.front().ring_ptr(); }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const std::vector<RowLabel>& row_labels() const noexcept { return rows_; }
  const std::vector<MultiIndex>& col_labels() const noexcept { return cols_; }
  const Grid<Polynomial>& entries() const noexcept { return entries_; }

  std::size_t rows() const noexcept { return entries_.rows(); }
  std::size_t cols() const noexcept { return entries_.cols(); }
  const Polynomial& entry(std::size_t row, std::size_t col) const { return entries_(row, col); }

  std::size_t column_index(const MultiIndex& alpha) const;
  std::size_t row_index(std::size_t generator, const MultiIndex& beta) const;
  /// Row as a module element (this is F_beta^i).
  ModuleVector row_vector(std::size_t row) const;

 private:
  std::vector<Polynomial> generators_;
  DimensionSet dims_;
  ColumnOrder order_;
  std::vector<RowLabel> rows_;
  std::vector<MultiIndex> cols_;
  Grid<Polynomial> entries_;
};

/// F_beta = (d x)^beta d(f): component alpha is hasse(f, alpha - beta) when
/// beta <= alpha componentwise and alpha != beta, zero otherwise.
/// Throws DegreeRange unless |beta| <= n - 1.
ModuleVector build_f_beta(const Polynomial& f, const MultiIndex& beta, std::uint32_t n);

/// Rows are F_beta^i with generators outer (input order) and beta inner in
/// column order; columns are the alpha with 1 <= |alpha| <= n.
/// Throws EmptyIdeal, MixedRing, DegreeRange (n = 0).
JacobianMatrix build_jacobian(const std::vector<Polynomial>& generators, std::uint32_t n,
                              ColumnOrder order = ColumnOrder::GradedRevLex);

struct Pivot {
  std::size_t row;
  std::size_t col;
};

struct EchelonReport {
  bool echelon = false;
  std::size_t pivot_var = 0;
  std::vector<Pivot> pivots;
  std::string failure;  // empty when echelon
};

/// Checks that row beta has hasse(f, e_v) != 0 at column beta + e_v and zeros
/// at every column preceding it. Throws MultiGenerator if r > 1.
EchelonReport check_echelon(const JacobianMatrix& jac, std::size_t pivot_var);

/// True iff entries depend only on alpha - beta within each generator block.
bool diagonal_invariance(const JacobianMatrix& jac);

}  // namespace kahler

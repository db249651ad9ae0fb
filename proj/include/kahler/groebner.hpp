#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kahler/polynomial.hpp"

namespace kahler {

/// Term c * x^mono * e_pos of a free module A^rank.
struct ModuleTerm {
  std::size_t pos;
  MultiIndex mono;
  FieldElement coeff;
};

/// Position-over-term order: a smaller position index ranks higher; within
/// a position, monomials compare by grevlex. Returns <0, 0, >0.
int module_compare(std::size_t pos_a, const MultiIndex& a, std::size_t pos_b, const MultiIndex& b) noexcept;

/// Sparse element of A^rank, terms kept in strictly decreasing module order.
class FreeVector {
 public:
  FreeVector(RingPtr ring, std::size_t rank);

  static FreeVector from_components(RingPtr ring, const std::vector<Polynomial>& components);
  /// Terms must already be in strictly decreasing module order.
  static FreeVector from_sorted_terms(RingPtr ring, std::size_t rank, std::vector<ModuleTerm> terms);
  /// c * e_pos
  static FreeVector unit(RingPtr ring, std::size_t rank, std::size_t pos, const Polynomial& c);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<ModuleTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const ModuleTerm& leading() const;
  /// Largest total degree of any term; -1 when zero.
  int degree() const noexcept;
  /// Removes and returns the leading term.
  ModuleTerm pop_leading();

  Polynomial component(std::size_t pos) const;
  std::vector<Polynomial> components() const;

  /// this += c * x^shift * other
  void add_scaled(const FreeVector& other, const MultiIndex& shift, const FieldElement& c);
  FreeVector& operator*=(const FieldElement& c);
  FreeVector& operator+=(const FreeVector& other);
  FreeVector& operator-=(const FreeVector& other);
  friend FreeVector operator*(const Polynomial& p, const FreeVector& v);

  friend bool operator==(const FreeVector& a, const FreeVector& b);

  /// "[p_0, p_1, ...]"
  std::string to_string() const;

 private:
  void require_ambient(const FreeVector& other) const;

  RingPtr ring_;
  std::size_t rank_;
  std::vector<ModuleTerm> terms_;
};

/// Limits on a Buchberger run. A step is one elementary reduction (one
/// leading-term cancellation, in S-pair reduction or in normal forms).
struct GroebnerBudget {
  std::uint32_t max_degree = 40;
  std::uint64_t max_steps = 1'000'000;

  /// Defaults overridden by KAHLER_DEGREE_BUDGET and KAHLER_STEP_BUDGET.
  static GroebnerBudget from_env();
};

struct GroebnerStats {
  std::uint64_t steps = 0;
  std::uint64_t pairs_considered = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t chain_skips = 0;
  std::uint32_t max_degree_seen = 0;
};

/// Reduced Groebner basis of a submodule of A^rank. When built with cofactor
/// tracking, cofactors[k] expresses elements[k] in the input generators:
/// elements[k] = sum_i cofactors[k].component(i) * input[i].
struct GroebnerBasis {
  RingPtr ring;
  std::size_t rank = 0;
  std::vector<FreeVector> elements;
  std::optional<std::vector<FreeVector>> cofactors;
  std::size_t input_count = 0;
  bool reduced = false;
  GroebnerStats stats;
};

struct BuchbergerOptions {
  GroebnerBudget budget;
  bool track_cofactors = false;
};

/// Buchberger's algorithm with the normal selection strategy (lowest lcm
/// degree, ties by creation order) and Buchberger's chain criterion; the
/// product criterion is used only for rank 1. Returns the reduced basis with
/// monic leading coefficients. Throws ResourceLimit, AmbientMismatch.
GroebnerBasis buchberger(const std::vector<FreeVector>& gens, const BuchbergerOptions& options = {});

struct NormalFormResult {
  FreeVector remainder;
  /// v - remainder = sum_i quotient_in_inputs.component(i) * input[i]
  /// (present only when the basis tracks cofactors).
  std::optional<FreeVector> quotient_in_inputs;
  std::uint64_t steps = 0;
};

/// Full reduction of v modulo the basis. Throws AmbientMismatch, and
/// ResourceLimit when `step_budget` is exhausted.
NormalFormResult normal_form(const FreeVector& v, const GroebnerBasis& gb,
                             std::uint64_t step_budget = GroebnerBudget{}.max_steps);

struct MembershipResult {
  bool member = false;
  /// When member: v = sum_i cofactors.component(i) * gens[i], re-verified.
  std::optional<FreeVector> cofactors;
  bool certificate_verified = false;
  GroebnerStats stats;
  std::size_t basis_size = 0;
};

/// Decides v in <gens>. With `want_certificate`, a positive answer carries
/// explicit cofactors that are checked by direct polynomial arithmetic.
MembershipResult module_membership(const FreeVector& v, const std::vector<FreeVector>& gens,
                                   bool want_certificate = false, const GroebnerBudget& budget = {});

/// sum_i coeffs.component(i) * gens[i]
FreeVector combine(const FreeVector& coeffs, const std::vector<FreeVector>& gens);

/// Ideal helpers (rank-1 modules).
GroebnerBasis ideal_groebner(const std::vector<Polynomial>& gens, const GroebnerBudget& budget = {});
std::vector<Polynomial> basis_polynomials(const GroebnerBasis& gb);
bool ideal_membership(const Polynomial& h, const std::vector<Polynomial>& gens, const GroebnerBudget& budget = {});

}  // namespace kahler

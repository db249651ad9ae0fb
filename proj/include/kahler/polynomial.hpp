#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "kahler/multi_index.hpp"
#include "kahler/scalars.hpp"

namespace kahler {

/// Ambient ring k[x_1, ..., x_s]. Variable i is positional; names are only
/// used for parsing and printing.
struct Ring {
  std::vector<std::string> names;
  FieldSpec field;

  std::size_t num_vars() const noexcept { return names.size(); }
  bool operator==(const Ring&) const = default;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, FieldSpec field = FieldSpec::rationals());
/// Ring with variables x1, ..., xs.
RingPtr make_ring(std::size_t s, FieldSpec field = FieldSpec::rationals());

/// Throws MixedRing unless both pointers describe the same ring.
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Sparse polynomial with exact coefficients. Terms are stored in strictly
/// decreasing grevlex order and never carry a zero coefficient, so equality
/// is structural.
class Polynomial {
 public:
  struct Term {
    MultiIndex exponent;
    FieldElement coeff;
  };

  /// Zero polynomial of the ring with no variables over the rationals; a
  /// placeholder for default-constructed aggregates.
  Polynomial();
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const FieldElement& c);
  static Polynomial constant(RingPtr ring, long long c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial monomial(RingPtr ring, MultiIndex exponent, FieldElement coeff);
  /// Sorts, merges equal exponents and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  FieldSpec field() const noexcept { return ring_->field; }
  std::size_t num_vars() const noexcept { return ring_->num_vars(); }

  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  /// Highest exponent of variable i; -1 for the zero polynomial.
  int degree_in(std::size_t i) const noexcept;

  const Term& leading_term() const;
  FieldElement coefficient(const MultiIndex& exponent) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const FieldElement& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const FieldElement& c) { return a *= c; }
  friend Polynomial operator*(const FieldElement& c, Polynomial a) { return a *= c; }

  /// this * c * x^shift
  Polynomial mul_term(const MultiIndex& shift, const FieldElement& c) const;

  /// Ring homomorphism x_i -> point[i].
  FieldElement evaluate(std::span<const FieldElement> point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Human-readable form, e.g. "3*x1^2 - 2*x2 + 1/2". Parsing it back yields
  /// the same polynomial.
  std::string to_string() const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Divided (Hasse) derivative: sum over terms c*x^gamma with gamma >= alpha of
/// c * prod_i binom(gamma_i, alpha_i) * x^(gamma - alpha), the binomials taken
/// in Z and then mapped into the coefficient field. In characteristic 0 this
/// is (1/alpha!) d^alpha f / dx^alpha; in characteristic p it is the
/// coefficient of t^alpha in f(x + t).
Polynomial hasse_derivative(const Polynomial& f, const MultiIndex& alpha);

/// Brute-force Taylor expansion: expands f(x + t) - f(x) in the doubled ring
/// k[x, t] by plain polynomial multiplication and returns, for every
/// 1 <= |alpha| <= n with a nonzero coefficient, the coefficient of t^alpha.
std::map<MultiIndex, Polynomial> taylor_shift_oracle(const Polynomial& f, unsigned n);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Multivariate division by a single polynomial under grevlex. The remainder
/// is the canonical normal form modulo the principal ideal <divisor>.
DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor);

/// Exact quotient; throws std::logic_error if the division leaves a remainder.
Polynomial exact_quotient(const Polynomial& dividend, const Polynomial& divisor);

/// f(x + shift), computed by substituting x_i -> x_i + shift_i.
Polynomial translate(const Polynomial& f, std::span<const FieldElement> shift);

/// Renames variables: x_i in f becomes x_{perm[i]} in the result.
Polynomial permute_variables(const Polynomial& f, std::span<const std::size_t> perm);

/// Drops every term of total degree greater than `max_degree`.
Polynomial truncate(const Polynomial& f, unsigned max_degree);

}  // namespace kahler

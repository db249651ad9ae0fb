#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace kahler {

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws InvalidCharacteristic unless p is prime (p < 2^63).
  static FieldSpec prime(std::uint64_t p);
  /// 0 selects the rationals, anything else must be prime.
  static FieldSpec with_characteristic(std::uint64_t p);

  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class FieldElement;
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/// Exact element of a FieldSpec. Rationals are kept reduced with positive
/// denominator; residues are kept in [0, p).
class FieldElement {
 public:
  FieldElement() = default;  // rational zero

  static FieldElement zero(FieldSpec field);
  static FieldElement one(FieldSpec field);
  static FieldElement from_integer(long long value, FieldSpec field);
  static FieldElement from_integer(const mpz_class& value, FieldSpec field);
  /// Throws DivisionByZero when the denominator vanishes in the field.
  static FieldElement from_rational(const mpq_class& value, FieldSpec field);

  FieldSpec field() const noexcept;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Valid only in characteristic 0.
  const mpq_class& rational() const;
  /// Valid only in characteristic p.
  std::uint64_t residue() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);
  FieldElement inverse() const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Canonical decimal form: "a", "-a", "a/b" (rationals) or the residue.
  std::string to_string() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
    bool operator==(const Residue&) const = default;
  };
  explicit FieldElement(Residue r) : value_(r) {}
  explicit FieldElement(mpq_class q) : value_(std::move(q)) {}

  void require_same_field(const FieldElement& rhs) const;

  std::variant<mpq_class, Residue> value_;
};

/// Parses the literal syntax "a", "-a", "a/b" (b > 0) into `field`.
/// Throws ParseError(InvalidLiteral) on malformed text or a denominator that
/// vanishes in the field.
FieldElement parse_literal(std::string_view text, FieldSpec field);

}  // namespace kahler

#include "kahler/scalars.hpp"

#include <cctype>

#include "kahler/errors.hpp"

namespace kahler {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::InvalidLiteral: return "InvalidLiteral";
    case ErrorCode::Usage: return "Usage";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedFieldSpec: return "MixedFieldSpec";
    case ErrorCode::InvalidCharacteristic: return "InvalidCharacteristic";
    case ErrorCode::MixedRing: return "MixedRing";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegreeRange: return "DegreeRange";
    case ErrorCode::EmptyIdeal: return "EmptyIdeal";
    case ErrorCode::MultiGenerator: return "MultiGenerator";
    case ErrorCode::ZeroModulus: return "ZeroModulus";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::PointOffHypersurface: return "PointOffHypersurface";
    case ErrorCode::AllPartialsZero: return "AllPartialsZero";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 reduce_mpz(const mpz_class& v, u64 p) {
  mpz_class r;
  mpz_class modulus;
  mpz_import(modulus.get_mpz_t(), 1, -1, sizeof(u64), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
  u64 out = 0;
  if (r != 0) mpz_export(&out, nullptr, -1, sizeof(u64), 0, 0, r.get_mpz_t());
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int twos = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++twos;
  }
  // Deterministic witness set for all 64-bit n.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < twos; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (u64{1} << 63) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidCharacteristic,
                "characteristic " + std::to_string(p) + " is not a supported prime");
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::with_characteristic(std::uint64_t p) {
  return p == 0 ? rationals() : prime(p);
}

std::string FieldSpec::to_string() const {
  return p_ == 0 ? std::string("QQ") : "GF(" + std::to_string(p_) + ")";
}

FieldElement FieldElement::zero(FieldSpec field) { return from_integer(0, field); }

FieldElement FieldElement::one(FieldSpec field) { return from_integer(1, field); }

FieldElement FieldElement::from_integer(long long value, FieldSpec field) {
  if (field.is_rational()) return FieldElement(mpq_class(static_cast<long>(value)));
  const u64 p = field.characteristic();
  const u64 mag = value < 0 ? static_cast<u64>(-(value + 1)) + 1 : static_cast<u64>(value);
  u64 r = mag % p;
  if (value < 0 && r != 0) r = p - r;
  return FieldElement(Residue{r, p});
}

FieldElement FieldElement::from_integer(const mpz_class& value, FieldSpec field) {
  if (field.is_rational()) return FieldElement(mpq_class(value));
  return FieldElement(Residue{reduce_mpz(value, field.characteristic()), field.characteristic()});
}

FieldElement FieldElement::from_rational(const mpq_class& value, FieldSpec field) {
  if (field.is_rational()) {
    mpq_class q(value);
    q.canonicalize();
    return FieldElement(std::move(q));
  }
  FieldElement num = from_integer(value.get_num(), field);
  FieldElement den = from_integer(value.get_den(), field);
  return num / den;
}

FieldSpec FieldElement::field() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return FieldSpec(r->modulus);
  return FieldSpec::rationals();
}

bool FieldElement::is_zero() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElement::is_one() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& FieldElement::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(ErrorCode::MixedFieldSpec, "residue requested as a rational");
}

std::uint64_t FieldElement::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw Error(ErrorCode::MixedFieldSpec, "rational requested as a residue");
}

void FieldElement::require_same_field(const FieldElement& rhs) const {
  if (value_.index() != rhs.value_.index()) {
    throw Error(ErrorCode::MixedFieldSpec, "field elements from different fields");
  }
  if (const auto* r = std::get_if<Residue>(&value_)) {
    if (r->modulus != std::get<Residue>(rhs.value_).modulus) {
      throw Error(ErrorCode::MixedFieldSpec, "field elements from different prime fields");
    }
  }
}

FieldElement FieldElement::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return FieldElement(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  return FieldElement(mpq_class(-std::get<mpq_class>(value_)));
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const u64 b = std::get<Residue>(rhs.value_).value;
    r->value = r->value >= r->modulus - b ? r->value - (r->modulus - b) : r->value + b;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const u64 b = std::get<Residue>(rhs.value_).value;
    r->value = r->value >= b ? r->value - b : r->value + (r->modulus - b);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = mul_mod(r->value, std::get<Residue>(rhs.value_).value, r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return FieldElement(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
  }
  return FieldElement(mpq_class(1 / std::get<mpq_class>(value_)));
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (std::holds_alternative<Residue>(value_)) return *this *= rhs.inverse();
  std::get<mpq_class>(value_) /= std::get<mpq_class>(rhs.value_);
  return *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (const auto* r = std::get_if<FieldElement::Residue>(&a.value_)) {
    return *r == std::get<FieldElement::Residue>(b.value_);
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string FieldElement::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

FieldElement parse_literal(std::string_view text, FieldSpec field) {
  auto fail = [&](std::size_t pos, const std::string& why) -> FieldElement {
    throw ParseError(ErrorCode::InvalidLiteral, "invalid literal '" + std::string(text) + "': " + why,
                     pos);
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  const std::size_t num_end = digits(i);
  if (num_end == i) return fail(i, "expected digits");
  mpz_class num(std::string(text.substr(i, num_end - i)), 10);
  mpz_class den = 1;
  std::size_t pos = num_end;
  if (pos < text.size() && text[pos] == '/') {
    const std::size_t den_end = digits(pos + 1);
    if (den_end == pos + 1) return fail(pos + 1, "expected denominator digits");
    den = mpz_class(std::string(text.substr(pos + 1, den_end - pos - 1)), 10);
    if (den == 0) return fail(pos + 1, "zero denominator");
    pos = den_end;
  }
  if (pos != text.size()) return fail(pos, "trailing characters");
  if (negative) num = -num;
  if (!field.is_rational() && reduce_mpz(den, field.characteristic()) == 0) {
    return fail(0, "denominator vanishes in " + field.to_string());
  }
  return FieldElement::from_rational(mpq_class(num, den), field);
}

}  // namespace kahler

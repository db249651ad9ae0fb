#include "kahler/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "kahler/errors.hpp"

namespace kahler {

RingPtr make_ring(std::vector<std::string> names, FieldSpec field) {
  return std::make_shared<const Ring>(Ring{std::move(names), field});
}

RingPtr make_ring(std::size_t s, FieldSpec field) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= s; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(std::move(names), field);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw Error(ErrorCode::MixedRing, "polynomials from different rings");
}

namespace {

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) {
  return grevlex_compare(a.exponent, b.exponent) > 0;
}

bool is_negative(const FieldElement& c) {
  return c.field().is_rational() && sgn(c.rational()) < 0;
}

// Merges b*sign into a; both sorted descending.
std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a,
                                    std::span<const Polynomial::Term> b, bool negate) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size()) cmp = -1;
    else if (j == b.size()) cmp = 1;
    else cmp = grevlex_compare(a[i].exponent, b[j].exponent);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(negate ? Polynomial::Term{b[j].exponent, -b[j].coeff} : b[j]);
      ++j;
    } else {
      FieldElement c = negate ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial() {
  static const RingPtr empty = make_ring(std::vector<std::string>{}, FieldSpec::rationals());
  ring_ = empty;
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("null ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
  return monomial(ring, MultiIndex(ring->num_vars()), c);
}

Polynomial Polynomial::constant(RingPtr ring, long long c) {
  const FieldSpec field = ring->field;
  return constant(std::move(ring), FieldElement::from_integer(c, field));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  const std::size_t s = ring->num_vars();
  const FieldSpec field = ring->field;
  return monomial(std::move(ring), MultiIndex::unit(s, i), FieldElement::one(field));
}

Polynomial Polynomial::monomial(RingPtr ring, MultiIndex exponent, FieldElement coeff) {
  if (exponent.size() != ring->num_vars()) {
    throw Error(ErrorCode::DimensionMismatch, "exponent length does not match the ring");
  }
  if (!(coeff.field() == ring->field)) throw Error(ErrorCode::MixedFieldSpec, "coefficient field mismatch");
  Polynomial p(std::move(ring));
  if (!coeff.is_zero()) p.terms_.push_back({std::move(exponent), std::move(coeff)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.exponent.size() != ring->num_vars()) {
      throw Error(ErrorCode::DimensionMismatch, "exponent length does not match the ring");
    }
    if (!(t.coeff.field() == ring->field)) throw Error(ErrorCode::MixedFieldSpec, "coefficient field mismatch");
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponent == t.exponent) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

int Polynomial::degree() const noexcept {
  // grevlex is degree-compatible, so the leading term has maximal degree
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().exponent.degree());
}

int Polynomial::degree_in(std::size_t i) const noexcept {
  int best = -1;
  for (const auto& t : terms_) best = std::max(best, static_cast<int>(t.exponent[i]));
  return best;
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return terms_.front();
}

FieldElement Polynomial::coefficient(const MultiIndex& exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent, [](const Term& t, const MultiIndex& e) {
    return grevlex_compare(t.exponent, e) > 0;
  });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return FieldElement::zero(field());
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_ring(ring_, rhs.ring_);
  terms_ = merge(terms_, rhs.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_ring(ring_, rhs.ring_);
  terms_ = merge(terms_, rhs.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].exponent, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].exponent, a.terms_[0].coeff);
  std::vector<Polynomial::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) products.push_back({ta.exponent + tb.exponent, ta.coeff * tb.coeff});
  }
  return Polynomial::from_terms(a.ring_, std::move(products));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const FieldElement& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::mul_term(const MultiIndex& shift, const FieldElement& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // multiplying by a monomial preserves grevlex order
  for (const auto& t : terms_) out.push_back({t.exponent + shift, t.coeff * c});
  return Polynomial(ring_, std::move(out));
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != num_vars()) {
    throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(point.size()) +
                                                  " coordinates, ring has " + std::to_string(num_vars()));
  }
  FieldElement sum = FieldElement::zero(field());
  for (const auto& t : terms_) {
    FieldElement v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (std::uint32_t e = 0; e < t.exponent[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].exponent == b.terms_[i].exponent) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = is_negative(t.coeff);
    const FieldElement magnitude = negative ? -t.coeff : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.exponent.size(); ++i) {
      if (t.exponent[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += ring_->names[i];
      if (t.exponent[i] > 1) mono += '^' + std::to_string(t.exponent[i]);
    }
    if (mono.empty()) {
      out += magnitude.to_string();
    } else if (magnitude.is_one()) {
      out += mono;
    } else {
      out += magnitude.to_string() + '*' + mono;
    }
  }
  return out;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(base.ring_ptr(), 1);
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent) b *= b;
  }
  return result;
}

Polynomial hasse_derivative(const Polynomial& f, const MultiIndex& alpha) {
  if (alpha.size() != f.num_vars()) throw Error(ErrorCode::DimensionMismatch, "multi-index length mismatch");
  std::vector<Polynomial::Term> out;
  for (const auto& t : f.terms()) {
    if (!alpha.divides(t.exponent)) continue;
    FieldElement c = t.coeff * FieldElement::from_integer(multi_binomial(t.exponent, alpha), f.field());
    if (!c.is_zero()) out.push_back({t.exponent - alpha, std::move(c)});
  }
  return Polynomial::from_terms(f.ring_ptr(), std::move(out));
}

std::map<MultiIndex, Polynomial> taylor_shift_oracle(const Polynomial& f, unsigned n) {
  const std::size_t s = f.num_vars();
  std::vector<std::string> names = f.ring().names;
  for (std::size_t i = 0; i < s; ++i) names.push_back("t" + std::to_string(i + 1));
  RingPtr doubled = make_ring(std::move(names), f.field());

  auto lift = [&](const MultiIndex& e) {
    std::vector<std::uint32_t> v(2 * s, 0);
    for (std::size_t i = 0; i < s; ++i) v[i] = e[i];
    return MultiIndex(std::move(v));
  };

  // f(x + t) by direct substitution, one factor at a time
  std::vector<Polynomial> shifted_vars;
  for (std::size_t i = 0; i < s; ++i) {
    shifted_vars.push_back(Polynomial::variable(doubled, i) + Polynomial::variable(doubled, s + i));
  }
  Polynomial shifted(doubled);
  Polynomial unshifted(doubled);
  for (const auto& t : f.terms()) {
    Polynomial product = Polynomial::constant(doubled, t.coeff);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::uint32_t e = 0; e < t.exponent[i]; ++e) product *= shifted_vars[i];
    }
    shifted += product;
    unshifted += Polynomial::monomial(doubled, lift(t.exponent), t.coeff);
  }
  const Polynomial difference = shifted - unshifted;

  std::map<MultiIndex, std::vector<Polynomial::Term>> grouped;
  for (const auto& t : difference.terms()) {
    std::vector<std::uint32_t> tpart(s), xpart(s);
    for (std::size_t i = 0; i < s; ++i) {
      xpart[i] = t.exponent[i];
      tpart[i] = t.exponent[s + i];
    }
    MultiIndex alpha(std::move(tpart));
    if (alpha.degree() == 0 || alpha.degree() > n) continue;
    grouped[alpha].push_back({MultiIndex(std::move(xpart)), t.coeff});
  }
  std::map<MultiIndex, Polynomial> out;
  for (auto& [alpha, terms] : grouped) {
    Polynomial c = Polynomial::from_terms(f.ring_ptr(), std::move(terms));
    if (!c.is_zero()) out.emplace(alpha, std::move(c));
  }
  return out;
}

DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor) {
  require_same_ring(dividend.ring_ptr(), divisor.ring_ptr());
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const auto& lead = divisor.leading_term();
  const FieldElement lead_inv = lead.coeff.inverse();
  std::vector<Polynomial::Term> quotient;
  std::vector<Polynomial::Term> remainder;
  Polynomial p = dividend;
  while (!p.is_zero()) {
    const auto& top = p.leading_term();
    if (lead.exponent.divides(top.exponent)) {
      MultiIndex shift = top.exponent - lead.exponent;
      FieldElement c = top.coeff * lead_inv;
      p -= divisor.mul_term(shift, c);
      quotient.push_back({std::move(shift), std::move(c)});
    } else {
      remainder.push_back(top);
      p -= Polynomial::monomial(p.ring_ptr(), top.exponent, top.coeff);
    }
  }
  return {Polynomial::from_terms(dividend.ring_ptr(), std::move(quotient)),
          Polynomial::from_terms(dividend.ring_ptr(), std::move(remainder))};
}

Polynomial exact_quotient(const Polynomial& dividend, const Polynomial& divisor) {
  auto [q, r] = divide(dividend, divisor);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division: remainder " + r.to_string());
  return q;
}

Polynomial translate(const Polynomial& f, std::span<const FieldElement> shift) {
  const std::size_t s = f.num_vars();
  if (shift.size() != s) throw Error(ErrorCode::DimensionMismatch, "shift length does not match the ring");
  std::vector<std::vector<Polynomial>> powers(s);
  for (std::size_t i = 0; i < s; ++i) {
    const Polynomial linear = Polynomial::variable(f.ring_ptr(), i) + Polynomial::constant(f.ring_ptr(), shift[i]);
    powers[i].push_back(Polynomial::constant(f.ring_ptr(), 1));
    const int top = f.degree_in(i);
    for (int e = 1; e <= top; ++e) powers[i].push_back(powers[i].back() * linear);
  }
  Polynomial out(f.ring_ptr());
  for (const auto& t : f.terms()) {
    Polynomial product = Polynomial::constant(f.ring_ptr(), t.coeff);
    for (std::size_t i = 0; i < s; ++i) {
      if (t.exponent[i]) product *= powers[i][t.exponent[i]];
    }
    out += product;
  }
  return out;
}

Polynomial permute_variables(const Polynomial& f, std::span<const std::size_t> perm) {
  const std::size_t s = f.num_vars();
  if (perm.size() != s) throw Error(ErrorCode::DimensionMismatch, "permutation length does not match the ring");
  std::vector<Polynomial::Term> out;
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(s, 0);
    for (std::size_t i = 0; i < s; ++i) e[perm[i]] = t.exponent[i];
    out.push_back({MultiIndex(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(f.ring_ptr(), std::move(out));
}

Polynomial truncate(const Polynomial& f, unsigned max_degree) {
  std::vector<Polynomial::Term> out;
  for (const auto& t : f.terms()) {
    if (t.exponent.degree() <= max_degree) out.push_back(t);
  }
  return Polynomial::from_terms(f.ring_ptr(), std::move(out));
}

}  // namespace kahler

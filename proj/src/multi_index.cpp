#include "kahler/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kahler/errors.hpp"

namespace kahler {

MultiIndex::MultiIndex(std::initializer_list<std::uint32_t> exps) : exps_(exps) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

MultiIndex::MultiIndex(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

MultiIndex MultiIndex::unit(std::size_t s, std::size_t i) {
  MultiIndex e(s);
  e.set(i, 1);
  return e;
}

void MultiIndex::set(std::size_t i, std::uint32_t value) {
  degree_ = degree_ - exps_.at(i) + value;
  exps_[i] = value;
}

bool MultiIndex::divides(const MultiIndex& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.size() != size()) throw Error(ErrorCode::DimensionMismatch, "multi-index length mismatch");
  MultiIndex out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  out.degree_ += other.degree_;
  return out;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (other.size() != size() || !other.divides(*this)) {
    throw Error(ErrorCode::DimensionMismatch,
                "cannot subtract " + other.to_string() + " from " + to_string());
  }
  MultiIndex out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= other.exps_[i];
  out.degree_ -= other.degree_;
  return out;
}

MultiIndex lcm(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out(a);
  out.degree_ = 0;
  for (std::size_t i = 0; i < out.exps_.size(); ++i) {
    out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  return out;
}

bool coprime(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  }
  return true;
}

std::string MultiIndex::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(exps_[i]);
  }
  return out + ")";
}

int grevlex_compare(const MultiIndex& a, const MultiIndex& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

ColumnOrder parse_column_order(const std::string& name) {
  if (name == "grevlex") return ColumnOrder::GradedRevLex;
  if (name == "grlex") return ColumnOrder::GradedLex;
  throw Error(ErrorCode::Usage, "unknown column order '" + name + "' (expected grevlex or grlex)");
}

std::string to_string(ColumnOrder order) {
  return order == ColumnOrder::GradedRevLex ? "grevlex" : "grlex";
}

bool column_precedes(const MultiIndex& a, const MultiIndex& b, ColumnOrder order) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (order == ColumnOrder::GradedRevLex) return grevlex_compare(a, b) > 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {

void compositions(std::size_t s, std::uint32_t degree, std::size_t pos, std::vector<std::uint32_t>& cur,
                  std::vector<MultiIndex>& out) {
  if (pos + 1 == s) {
    cur[pos] = degree;
    out.emplace_back(cur);
    return;
  }
  for (std::uint32_t e = 0; e <= degree; ++e) {
    cur[pos] = e;
    compositions(s, degree - e, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> enumerate_indices(std::size_t s, std::uint32_t lo, std::uint32_t hi,
                                          ColumnOrder order) {
  std::vector<MultiIndex> out;
  if (s == 0 || lo > hi) return out;
  std::vector<std::uint32_t> cur(s, 0);
  for (std::uint32_t d = lo; d <= hi; ++d) compositions(s, d, 0, cur, out);
  std::sort(out.begin(), out.end(), ColumnLess{order});
  return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class multi_binomial(const MultiIndex& gamma, const MultiIndex& alpha) {
  mpz_class out = 1;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (alpha[i] > gamma[i]) return 0;
    if (alpha[i] != 0) out *= binomial(gamma[i], alpha[i]);
  }
  return out;
}

}  // namespace kahler

#include "kahler/jacobian.hpp"

#include <algorithm>
#include <cctype>

#include "kahler/errors.hpp"
#include "kahler/parser.hpp"

namespace kahler {

DimensionSet DimensionSet::make(std::uint32_t s, std::uint32_t n, std::uint32_t r) {
  DimensionSet d;
  d.s = s;
  d.n = n;
  d.r = r;
  d.N = binomial(s + n, s).get_ui();
  d.M = binomial(s + n - 1, s).get_ui();
  d.L = s == 0 ? 0 : binomial(s - 1 + n, s - 1).get_ui();
  return d;
}

// --- ModuleVector -----------------------------------------------------------

ModuleVector::ModuleVector(RingPtr ring, std::uint32_t n) : ring_(std::move(ring)), n_(n) {}

void ModuleVector::check_label(const MultiIndex& alpha) const {
  if (alpha.size() != ring_->num_vars() || alpha.degree() < 1 || alpha.degree() > n_) {
    throw Error(ErrorCode::DegreeRange, "basis label " + alpha.to_string() + " outside 1 <= |alpha| <= " +
                                            std::to_string(n_));
  }
}

void ModuleVector::require_ambient(const ModuleVector& rhs) const {
  require_same_ring(ring_, rhs.ring_);
  if (n_ != rhs.n_) throw Error(ErrorCode::AmbientMismatch, "module elements of different orders");
}

Polynomial ModuleVector::component(const MultiIndex& alpha) const {
  auto it = comps_.find(alpha);
  return it == comps_.end() ? Polynomial(ring_) : it->second;
}

void ModuleVector::set(const MultiIndex& alpha, Polynomial value) {
  check_label(alpha);
  require_same_ring(ring_, value.ring_ptr());
  if (value.is_zero()) {
    comps_.erase(alpha);
  } else {
    comps_.insert_or_assign(alpha, std::move(value));
  }
}

void ModuleVector::add(const MultiIndex& alpha, const Polynomial& value) {
  set(alpha, component(alpha) + value);
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& rhs) {
  require_ambient(rhs);
  for (const auto& [alpha, c] : rhs.comps_) add(alpha, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& rhs) {
  require_ambient(rhs);
  for (const auto& [alpha, c] : rhs.comps_) add(alpha, -c);
  return *this;
}

ModuleVector operator*(const Polynomial& c, const ModuleVector& v) {
  require_same_ring(c.ring_ptr(), v.ring_);
  ModuleVector out(v.ring_, v.n_);
  for (const auto& [alpha, comp] : v.comps_) out.set(alpha, c * comp);
  return out;
}

bool operator==(const ModuleVector& a, const ModuleVector& b) {
  if (a.n_ != b.n_) return false;
  if (a.comps_.size() != b.comps_.size()) return false;
  auto it = b.comps_.begin();
  for (const auto& [alpha, c] : a.comps_) {
    if (!(alpha == it->first) || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

std::string ModuleVector::to_string(ColumnOrder order) const {
  if (comps_.empty()) return "0";
  std::vector<MultiIndex> labels;
  for (const auto& [alpha, c] : comps_) labels.push_back(alpha);
  std::sort(labels.begin(), labels.end(), ColumnLess{order});
  std::string out;
  for (const auto& alpha : labels) {
    if (!out.empty()) out += ';';
    out += alpha.to_string() + ':' + comps_.at(alpha).to_string();
  }
  return out;
}

ModuleVector parse_module_vector(std::string_view text, const RingPtr& ring, std::uint32_t n) {
  ModuleVector out(ring, n);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError(ErrorCode::SyntaxError, "empty module element", pos);
  if (text.substr(pos) == "0") return out;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') throw ParseError(ErrorCode::SyntaxError, "expected '(' starting a label", pos);
    ++pos;
    std::vector<std::uint32_t> exps;
    while (true) {
      skip_ws();
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos || pos - start > 6) throw ParseError(ErrorCode::SyntaxError, "expected an exponent", start);
      exps.push_back(static_cast<std::uint32_t>(std::stoul(std::string(text.substr(start, pos - start)))));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError(ErrorCode::SyntaxError, "expected ',' or ')' in label", pos);
    }
    if (exps.size() != ring->num_vars()) {
      throw ParseError(ErrorCode::SyntaxError,
                       "label has " + std::to_string(exps.size()) + " entries, expected " +
                           std::to_string(ring->num_vars()),
                       pos);
    }
    skip_ws();
    if (pos >= text.size() || text[pos] != ':') throw ParseError(ErrorCode::SyntaxError, "expected ':' after label", pos);
    ++pos;
    const std::size_t end = std::min(text.find(';', pos), text.size());
    Polynomial value(ring);
    try {
      value = parse_polynomial(text.substr(pos, end - pos), ring);
    } catch (const ParseError& e) {
      throw ParseError(e.code(), e.what(), pos + e.position());
    }
    MultiIndex alpha(std::move(exps));
    if (alpha.degree() < 1 || alpha.degree() > n) {
      throw ParseError(ErrorCode::SyntaxError, "label " + alpha.to_string() + " outside 1 <= |alpha| <= " + std::to_string(n),
                       pos);
    }
    out.add(alpha, value);
    pos = end;
    if (pos < text.size()) ++pos;  // ';'
  }
  return out;
}

ModuleVector basis_vector(const RingPtr& ring, std::uint32_t n, const MultiIndex& alpha, const Polynomial& coeff) {
  ModuleVector out(ring, n);
  out.set(alpha, coeff);
  return out;
}

// --- JacobianMatrix ---------------------------------------------------------

JacobianMatrix::JacobianMatrix(std::vector<Polynomial> generators, DimensionSet dims, ColumnOrder order,
                               std::vector<RowLabel> row_labels, std::vector<MultiIndex> col_labels,
                               Grid<Polynomial> entries)
    : generators_(std::move(generators)),
      dims_(dims),
      order_(order),
      rows_(std::move(row_labels)),
      cols_(std::move(col_labels)),
      entries_(std::move(entries)) {}

std::size_t JacobianMatrix::column_index(const MultiIndex& alpha) const {
  auto it = std::lower_bound(cols_.begin(), cols_.end(), alpha, ColumnLess{order_});
  if (it == cols_.end() || !(*it == alpha)) {
    throw Error(ErrorCode::DegreeRange, "no column labeled " + alpha.to_string());
  }
  return static_cast<std::size_t>(it - cols_.begin());
}

std::size_t JacobianMatrix::row_index(std::size_t generator, const MultiIndex& beta) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].generator == generator && rows_[i].beta == beta) return i;
  }
  throw Error(ErrorCode::DegreeRange, "no row labeled (" + std::to_string(generator) + ", " + beta.to_string() + ")");
}

ModuleVector JacobianMatrix::row_vector(std::size_t row) const {
  ModuleVector out(ring_ptr(), dims_.n);
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    if (!entries_(row, c).is_zero()) out.set(cols_[c], entries_(row, c));
  }
  return out;
}

namespace {

// Convention (*): the coefficient vanishes unless beta <= alpha and alpha != beta.
Polynomial shifted_coefficient(const Polynomial& f, const MultiIndex& beta, const MultiIndex& alpha) {
  if (alpha == beta || !beta.divides(alpha)) return Polynomial(f.ring_ptr());
  return hasse_derivative(f, alpha - beta);
}

}  // namespace

ModuleVector build_f_beta(const Polynomial& f, const MultiIndex& beta, std::uint32_t n) {
  if (beta.size() != f.num_vars()) throw Error(ErrorCode::DimensionMismatch, "beta length does not match the ring");
  if (n == 0 || beta.degree() >= n) {
    throw Error(ErrorCode::DegreeRange, "F_beta needs |beta| <= n - 1, got |beta| = " + std::to_string(beta.degree()) +
                                            ", n = " + std::to_string(n));
  }
  ModuleVector out(f.ring_ptr(), n);
  for (const auto& alpha : enumerate_indices(f.num_vars(), beta.degree() + 1, n)) {
    Polynomial c = shifted_coefficient(f, beta, alpha);
    if (!c.is_zero()) out.set(alpha, std::move(c));
  }
  return out;
}

JacobianMatrix build_jacobian(const std::vector<Polynomial>& generators, std::uint32_t n, ColumnOrder order) {
  if (generators.empty()) throw Error(ErrorCode::EmptyIdeal, "no generators given");
  if (n == 0) throw Error(ErrorCode::DegreeRange, "order n must be at least 1");
  const RingPtr& ring = generators.front().ring_ptr();
  for (const auto& g : generators) require_same_ring(ring, g.ring_ptr());
  const auto s = static_cast<std::uint32_t>(ring->num_vars());
  const DimensionSet dims = DimensionSet::make(s, n, static_cast<std::uint32_t>(generators.size()));

  std::vector<MultiIndex> cols = enumerate_indices(s, 1, n, order);
  const std::vector<MultiIndex> betas = enumerate_indices(s, 0, n - 1, order);
  std::vector<RowLabel> rows;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (const auto& beta : betas) rows.push_back({i, beta});
  }

  // Entries depend only on gamma = alpha - beta; cache hasse(f_i, gamma).
  Grid<Polynomial> entries(rows.size(), cols.size(), Polynomial(ring));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::map<MultiIndex, Polynomial> cache;
    for (const auto& gamma : enumerate_indices(s, 1, n, order)) cache.emplace(gamma, hasse_derivative(generators[i], gamma));
    for (std::size_t b = 0; b < betas.size(); ++b) {
      const std::size_t row = i * betas.size() + b;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const MultiIndex& alpha = cols[c];
        if (alpha == betas[b] || !betas[b].divides(alpha)) continue;
        entries(row, c) = cache.at(alpha - betas[b]);
      }
    }
  }
  return JacobianMatrix(generators, dims, order, std::move(rows), std::move(cols), std::move(entries));
}

EchelonReport check_echelon(const JacobianMatrix& jac, std::size_t pivot_var) {
  if (jac.dims().r != 1) throw Error(ErrorCode::MultiGenerator, "echelon check needs a single generator");
  const std::size_t s = jac.dims().s;
  if (pivot_var >= s) throw Error(ErrorCode::DimensionMismatch, "pivot variable out of range");
  EchelonReport report;
  report.pivot_var = pivot_var;
  const Polynomial expected = hasse_derivative(jac.generators().front(), MultiIndex::unit(s, pivot_var));
  if (expected.is_zero()) {
    report.failure = "pivot partial derivative is zero";
    return report;
  }
  const MultiIndex step = MultiIndex::unit(s, pivot_var);
  std::size_t last_col = 0;
  for (std::size_t row = 0; row < jac.rows(); ++row) {
    const MultiIndex target = jac.row_labels()[row].beta + step;
    const std::size_t col = jac.column_index(target);
    if (!(jac.entry(row, col) == expected)) {
      report.failure = "row " + std::to_string(row) + ": entry at " + target.to_string() + " is not the pivot";
      report.pivots.clear();
      return report;
    }
    for (std::size_t c = 0; c < col; ++c) {
      if (!jac.entry(row, c).is_zero()) {
        report.failure = "row " + std::to_string(row) + ": nonzero entry before the pivot at column " +
                         jac.col_labels()[c].to_string();
        report.pivots.clear();
        return report;
      }
    }
    if (row > 0 && col <= last_col) {
      report.failure = "row " + std::to_string(row) + ": pivot does not move right";
      report.pivots.clear();
      return report;
    }
    last_col = col;
    report.pivots.push_back({row, col});
  }
  report.echelon = true;
  return report;
}

bool diagonal_invariance(const JacobianMatrix& jac) {
  // gamma = alpha - beta (or a marker for the conventionally-zero cells) -> first entry seen
  std::map<std::pair<std::size_t, MultiIndex>, const Polynomial*> seen;
  for (std::size_t row = 0; row < jac.rows(); ++row) {
    const auto& label = jac.row_labels()[row];
    for (std::size_t c = 0; c < jac.cols(); ++c) {
      const MultiIndex& alpha = jac.col_labels()[c];
      if (!label.beta.divides(alpha)) {
        if (!jac.entry(row, c).is_zero()) return false;
        continue;
      }
      auto key = std::make_pair(label.generator, alpha - label.beta);
      auto [it, inserted] = seen.emplace(key, &jac.entry(row, c));
      if (!inserted && !(*it->second == jac.entry(row, c))) return false;
    }
  }
  return true;
}

}  // namespace kahler

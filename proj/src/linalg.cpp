#include "kahler/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

#include "kahler/errors.hpp"

namespace kahler {

namespace {

constexpr std::size_t kCofactorLimit = 12;
constexpr std::size_t kMinorsLimit = 6;

Polynomial reduce_mod(const Polynomial& p, const Polynomial& f) { return divide(p, f).remainder; }

// Pivot preference: lowest total degree, then fewest terms, then lowest row.
auto pivot_key(const Polynomial& p, std::size_t row) {
  return std::make_tuple(p.degree(), p.num_terms(), row);
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

EvaluatedMatrix evaluate_matrix(const Grid<Polynomial>& m, std::span<const FieldElement> point) {
  Grid<FieldElement> values = m.map([&](const Polynomial& p) { return p.evaluate(point); });
  return {std::move(values), std::vector<FieldElement>(point.begin(), point.end())};
}

FieldElement gaussian_determinant(Grid<FieldElement> m) {
  const std::size_t t = m.rows();
  if (m.cols() != t) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  if (t == 0) return FieldElement::one(FieldSpec::rationals());
  const FieldSpec field = m(0, 0).field();
  FieldElement det = FieldElement::one(field);
  for (std::size_t c = 0; c < t; ++c) {
    std::size_t p = c;
    while (p < t && m(p, c).is_zero()) ++p;
    if (p == t) return FieldElement::zero(field);
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    const FieldElement inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < t; ++i) {
      if (m(i, c).is_zero()) continue;
      const FieldElement factor = m(i, c) * inv;
      for (std::size_t j = c; j < t; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

RankCertificate rank_over_field(const Grid<FieldElement>& m, const RingPtr& ring) {
  Grid<FieldElement> w = m;
  std::vector<std::size_t> perm(w.rows());
  std::iota(perm.begin(), perm.end(), 0);
  RankCertificate cert{0, {}, {}, Polynomial::constant(ring, 1)};
  std::size_t k = 0;
  for (std::size_t c = 0; c < w.cols() && k < w.rows(); ++c) {
    std::size_t p = k;
    while (p < w.rows() && w(p, c).is_zero()) ++p;
    if (p == w.rows()) continue;
    w.swap_rows(k, p);
    std::swap(perm[k], perm[p]);
    const FieldElement inv = w(k, c).inverse();
    for (std::size_t i = k + 1; i < w.rows(); ++i) {
      if (w(i, c).is_zero()) continue;
      const FieldElement factor = w(i, c) * inv;
      for (std::size_t j = c; j < w.cols(); ++j) w(i, j) -= factor * w(k, j);
    }
    cert.rows.push_back(perm[k]);
    cert.cols.push_back(c);
    ++k;
  }
  cert.rank = k;
  cert.rows = sorted(std::move(cert.rows));
  if (k > 0) cert.det = Polynomial::constant(ring, gaussian_determinant(m.submatrix(cert.rows, cert.cols)));
  return cert;
}

RankCertificate rank_at_point(const JacobianMatrix& jac, std::span<const FieldElement> point) {
  if (point.size() != jac.dims().s) {
    throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(point.size()) + " coordinates, expected " +
                                                  std::to_string(jac.dims().s));
  }
  for (const auto& v : point) {
    if (!(v.field() == jac.ring_ptr()->field)) throw Error(ErrorCode::MixedFieldSpec, "point over a different field");
  }
  return rank_over_field(evaluate_matrix(jac.entries(), point).values, jac.ring_ptr());
}

Polynomial bareiss_determinant(Grid<Polynomial> m) {
  const std::size_t t = m.rows();
  if (m.cols() != t) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  if (t == 0) throw Error(ErrorCode::DimensionMismatch, "determinant of an empty matrix needs a ring");
  const RingPtr ring = m(0, 0).ring_ptr();
  Polynomial prev = Polynomial::constant(ring, 1);
  bool negate = false;
  for (std::size_t k = 0; k < t; ++k) {
    std::size_t p = k;
    while (p < t && m(p, k).is_zero()) ++p;
    if (p == t) return Polynomial(ring);
    if (p != k) {
      m.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < t; ++i) {
      for (std::size_t j = k + 1; j < t; ++j) {
        m(i, j) = exact_quotient(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = Polynomial(ring);
    }
    prev = m(k, k);
  }
  return negate ? -m(t - 1, t - 1) : m(t - 1, t - 1);
}

Polynomial determinant(const Grid<Polynomial>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  if (m.rows() == 0) throw Error(ErrorCode::DimensionMismatch, "determinant of an empty matrix needs a ring");
  if (m.rows() <= kCofactorLimit) {
    const RingPtr& ring = m(0, 0).ring_ptr();
    return cofactor_determinant(m, Polynomial(ring), Polynomial::constant(ring, 1));
  }
  return bareiss_determinant(m);
}

RankCertificate rank_generic_A(const Grid<Polynomial>& m) {
  if (m.rows() == 0 || m.cols() == 0) throw Error(ErrorCode::DimensionMismatch, "empty matrix");
  const RingPtr ring = m(0, 0).ring_ptr();
  Grid<Polynomial> w = m;
  std::vector<std::size_t> perm(w.rows());
  std::iota(perm.begin(), perm.end(), 0);
  RankCertificate cert{0, {}, {}, Polynomial::constant(ring, 1)};
  Polynomial prev = Polynomial::constant(ring, 1);
  std::size_t k = 0;
  for (std::size_t c = 0; c < w.cols() && k < w.rows(); ++c) {
    std::optional<std::size_t> best;
    for (std::size_t i = k; i < w.rows(); ++i) {
      if (w(i, c).is_zero()) continue;
      if (!best || pivot_key(w(i, c), i) < pivot_key(w(*best, c), *best)) best = i;
    }
    if (!best) continue;
    w.swap_rows(k, *best);
    std::swap(perm[k], perm[*best]);
    for (std::size_t i = k + 1; i < w.rows(); ++i) {
      for (std::size_t j = c + 1; j < w.cols(); ++j) {
        Polynomial numer = w(k, c) * w(i, j) - w(i, c) * w(k, j);
        w(i, j) = prev.is_constant() ? numer * prev.leading_term().coeff.inverse() : exact_quotient(numer, prev);
      }
      w(i, c) = Polynomial(ring);
    }
    prev = w(k, c);
    cert.rows.push_back(perm[k]);
    cert.cols.push_back(c);
    ++k;
  }
  cert.rank = k;
  cert.rows = sorted(std::move(cert.rows));
  if (k > 0) cert.det = determinant(m.submatrix(cert.rows, cert.cols));
  return cert;
}

RankCertificate rank_generic_B(const Grid<Polynomial>& m, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroModulus, "modulus f is zero");
  if (m.rows() == 0 || m.cols() == 0) throw Error(ErrorCode::DimensionMismatch, "empty matrix");
  const RingPtr ring = f.ring_ptr();
  Grid<Polynomial> w = m.map([&](const Polynomial& p) {
    require_same_ring(ring, p.ring_ptr());
    return reduce_mod(p, f);
  });
  std::vector<std::size_t> perm(w.rows());
  std::iota(perm.begin(), perm.end(), 0);
  RankCertificate cert{0, {}, {}, Polynomial::constant(ring, 1)};
  std::size_t k = 0;
  for (std::size_t c = 0; c < w.cols() && k < w.rows(); ++c) {
    std::optional<std::size_t> best;
    for (std::size_t i = k; i < w.rows(); ++i) {
      if (w(i, c).is_zero()) continue;
      if (!best || pivot_key(w(i, c), i) < pivot_key(w(*best, c), *best)) best = i;
    }
    if (!best) continue;
    w.swap_rows(k, *best);
    std::swap(perm[k], perm[*best]);
    for (std::size_t i = k + 1; i < w.rows(); ++i) {
      if (w(i, c).is_zero()) continue;
      for (std::size_t j = c + 1; j < w.cols(); ++j) {
        w(i, j) = reduce_mod(w(k, c) * w(i, j) - w(i, c) * w(k, j), f);
      }
      w(i, c) = Polynomial(ring);
    }
    cert.rows.push_back(perm[k]);
    cert.cols.push_back(c);
    ++k;
  }
  cert.rank = k;
  cert.rows = sorted(std::move(cert.rows));
  if (k > 0) cert.det = determinant(m.submatrix(cert.rows, cert.cols));
  return cert;
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::size_t start,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit, bool& stop) {
  if (stop) return;
  if (cur.size() == k) {
    stop = visit(cur);
    return;
  }
  for (std::size_t i = start; i < n && !stop; ++i) {
    cur.push_back(i);
    for_each_subset(n, k, cur, i + 1, visit, stop);
    cur.pop_back();
  }
}

}  // namespace

std::size_t rank_by_minors(const Grid<Polynomial>& m) {
  if (m.rows() > kMinorsLimit || m.cols() > kMinorsLimit) {
    throw Error(ErrorCode::ResourceLimit, "minor enumeration is capped at " + std::to_string(kMinorsLimit) + "x" +
                                              std::to_string(kMinorsLimit));
  }
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const RingPtr& ring = m(0, 0).ring_ptr();
  const Polynomial zero(ring);
  const Polynomial one = Polynomial::constant(ring, 1);
  for (std::size_t t = std::min(m.rows(), m.cols()); t > 0; --t) {
    bool found = false;
    std::vector<std::size_t> rows;
    bool stop_rows = false;
    for_each_subset(m.rows(), t, rows, 0, [&](const std::vector<std::size_t>& rs) {
      std::vector<std::size_t> cols;
      bool stop_cols = false;
      for_each_subset(m.cols(), t, cols, 0, [&](const std::vector<std::size_t>& cs) {
        found = !cofactor_determinant(m.submatrix(rs, cs), zero, one).is_zero();
        return found;
      }, stop_cols);
      return found;
    }, stop_rows);
    if (found) return t;
  }
  return 0;
}

bool verify_certificate(const Grid<Polynomial>& m, const RankCertificate& cert, const std::optional<Polynomial>& modulus) {
  if (cert.rows.size() != cert.rank || cert.cols.size() != cert.rank) return false;
  if (cert.rank == 0) return true;
  for (std::size_t r : cert.rows) {
    if (r >= m.rows()) return false;
  }
  for (std::size_t c : cert.cols) {
    if (c >= m.cols()) return false;
  }
  const Grid<Polynomial> minor = m.submatrix(cert.rows, cert.cols);
  const RingPtr& ring = minor(0, 0).ring_ptr();
  const Polynomial det = cert.rank <= kCofactorLimit
                             ? cofactor_determinant(minor, Polynomial(ring), Polynomial::constant(ring, 1))
                             : bareiss_determinant(minor);
  if (!(det == cert.det) || det.is_zero()) return false;
  if (modulus && reduce_mod(det, *modulus).is_zero()) return false;
  return true;
}

std::vector<std::vector<FieldElement>> kernel_basis(const Grid<FieldElement>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<FieldElement>> out;
  if (cols == 0) return out;
  const FieldSpec field = rows ? m(0, 0).field() : FieldSpec::rationals();
  Grid<FieldElement> w = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < rows; ++c) {
    std::size_t p = k;
    while (p < rows && w(p, c).is_zero()) ++p;
    if (p == rows) continue;
    w.swap_rows(k, p);
    const FieldElement inv = w(k, c).inverse();
    for (std::size_t j = c; j < cols; ++j) w(k, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == k || w(i, c).is_zero()) continue;
      const FieldElement factor = w(i, c);
      for (std::size_t j = c; j < cols; ++j) w(i, j) -= factor * w(k, j);
    }
    pivot_cols.push_back(c);
    ++k;
  }
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<FieldElement> v(cols, FieldElement::zero(field));
    v[free] = FieldElement::one(field);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -w(i, free);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace kahler

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kahler/jacobian.hpp"
#include "kahler/matrix.hpp"
#include "kahler/polynomial.hpp"

namespace kahler {

/// Rank together with a witness: the rank x rank minor on `rows` x `cols`
/// has determinant `det`, which is nonzero in the ring the rank refers to
/// (the field, Frac(A), or Frac(A/<f>) where it is additionally not
/// divisible by f).
struct RankCertificate {
  std::size_t rank = 0;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Polynomial det;
};

/// Matrix evaluated at a rational point, with the point it came from.
struct EvaluatedMatrix {
  Grid<FieldElement> values;
  std::vector<FieldElement> point;
};

EvaluatedMatrix evaluate_matrix(const Grid<Polynomial>& m, std::span<const FieldElement> point);

/// Exact rank over the coefficient field by Gaussian elimination.
/// `ring` gives the ring in which the witness determinant is reported.
RankCertificate rank_over_field(const Grid<FieldElement>& m, const RingPtr& ring);

/// Rank of Jac mod the maximal ideal of `point`. Throws DimensionMismatch.
RankCertificate rank_at_point(const JacobianMatrix& jac, std::span<const FieldElement> point);

/// Rank over Frac(A) by fraction-free (Bareiss) elimination.
RankCertificate rank_generic_A(const Grid<Polynomial>& m);

/// Rank over Frac(A/<f>) for f irreducible. An entry is a usable pivot iff
/// its remainder modulo f is nonzero; entries are kept as remainders modulo
/// f. Throws ZeroModulus if f = 0.
RankCertificate rank_generic_B(const Grid<Polynomial>& m, const Polynomial& f);

/// Determinant by fraction-free elimination (an independent route from the
/// cofactor expansion).
Polynomial bareiss_determinant(Grid<Polynomial> m);
FieldElement gaussian_determinant(Grid<FieldElement> m);

/// Determinant of a polynomial matrix: cofactor expansion up to 12x12,
/// fraction-free elimination beyond.
Polynomial determinant(const Grid<Polynomial>& m);

/// Rank by exhaustive minor enumeration. Throws ResourceLimit for matrices
/// with more than 6 rows or columns.
std::size_t rank_by_minors(const Grid<Polynomial>& m);

/// Recomputes the witness determinant with cofactor expansion (or
/// elimination beyond 12x12) and checks it matches and is nonzero; with
/// `modulus`, also checks it is not divisible by the modulus.
bool verify_certificate(const Grid<Polynomial>& m, const RankCertificate& cert,
                        const std::optional<Polynomial>& modulus = std::nullopt);

/// Kernel basis of a matrix over the field (right null space), used when
/// building test fixtures and local computations.
std::vector<std::vector<FieldElement>> kernel_basis(const Grid<FieldElement>& m);

}  // namespace kahler

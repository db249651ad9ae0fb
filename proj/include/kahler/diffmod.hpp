#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kahler/groebner.hpp"
#include "kahler/jacobian.hpp"
#include "kahler/linalg.hpp"

namespace kahler {

/// Element of A^{N-1} as a FreeVector whose positions are the column labels.
FreeVector to_free_vector(const ModuleVector& v, const std::vector<MultiIndex>& cols);
ModuleVector from_free_vector(const FreeVector& v, const std::vector<MultiIndex>& cols, std::uint32_t n);

/// Generators of the image of Jac_n(J)^T lifted to A^{N-1}: the rows
/// F_beta^i (in row order) followed by f_j * e_alpha for every j and alpha.
std::vector<ModuleVector> lifted_relations(const JacobianMatrix& jac);

struct PresentationReport {
  DimensionSet dims;
  std::uint64_t free_rank = 0;       // N - 1
  std::uint64_t relation_rows = 0;   // M
  std::uint64_t quotient_lifts = 0;  // N - 1
  std::size_t generic_rank_A = 0;
  std::size_t generic_rank_B = 0;
  RankCertificate certificate_B;
  bool certificate_verified = false;
  std::uint64_t fiber_dimension = 0;  // L - 1
};

struct HypersurfacePresentation {
  Polynomial f;
  std::uint32_t n;
  JacobianMatrix jac;
  std::vector<ModuleVector> relation_generators;
  PresentationReport report;
};

/// Presentation B^M -> B^{N-1} -> Omega -> 0 of the order-n differentials of
/// B = A/<f>. Throws ConstantPolynomial, DegreeRange.
HypersurfacePresentation presentation(const Polynomial& f, std::uint32_t n,
                                      ColumnOrder order = ColumnOrder::GradedRevLex);

struct SmoothnessVerdict {
  std::vector<FieldElement> point;
  bool on_hypersurface = true;
  std::size_t rank = 0;
  std::uint64_t M = 0;
  bool smooth = false;
  RankCertificate certificate;
  std::vector<std::string> warnings;
};

/// Order-n Jacobian criterion at a rational point: SMOOTH iff the evaluated
/// Jac_n has rank M. Throws PointOffHypersurface, DimensionMismatch.
SmoothnessVerdict smoothness(const Polynomial& f, std::uint32_t n, const std::vector<FieldElement>& point);

struct JetDimensionReport {
  std::vector<FieldElement> point;
  std::uint32_t n = 0;
  std::uint64_t jet_dim = 0;    // dim_k m/m^{n+1}
  std::uint64_t threshold = 0;  // L - 1
  bool regular = false;
  std::vector<std::string> warnings;
};

/// dim_k m/m^{n+1} of B localized at the point, by linear algebra on the
/// monomials of degree <= n after translating the point to the origin.
/// Throws PointOffHypersurface, DimensionMismatch.
JetDimensionReport jet_dimension(const Polynomial& f, std::uint32_t n, const std::vector<FieldElement>& point);

struct PdCertificate {
  std::size_t pivot_var = 0;  // 0-based
  EchelonReport echelon;      // for f with x_1 and x_{pivot_var+1} swapped
  RankCertificate witness;    // indices into the original Jac_n(f)
  std::vector<RowLabel> witness_row_labels;
  std::vector<MultiIndex> witness_col_labels;
  std::uint64_t M = 0;
  bool verified = false;
};

/// Evidence that Jac_n(f)^T : B^M -> B^{N-1} is injective: an M x M minor
/// whose determinant is not divisible by f. Throws AllPartialsZero,
/// ConstantPolynomial.
PdCertificate pd_certificate(const Polynomial& f, std::uint32_t n, ColumnOrder order = ColumnOrder::GradedRevLex);

enum class TorsionKind { TorsionWitness, AnnihilatorZero, ClassIsZero, NotAnnihilated };
std::string to_string(TorsionKind kind);

struct TorsionVerdict {
  ModuleVector m;
  Polynomial h;
  bool h_nonzero_in_B = false;
  std::optional<bool> m_in_image;
  std::optional<bool> hm_in_image;
  TorsionKind verdict = TorsionKind::NotAnnihilated;
  /// h*m = sum_i hm_cofactors[i] * generators[i] over the lifted relations.
  std::optional<std::vector<Polynomial>> hm_cofactors;
  bool certificate_verified = false;
  std::size_t generator_count = 0;
  std::size_t basis_size = 0;
  GroebnerStats stats;
};

/// Decides whether [m] is a torsion class of Omega^(n) annihilated by h, with
/// the relation module generated by every F_beta^i and f_j * e_alpha.
/// Throws AmbientMismatch, ResourceLimit.
TorsionVerdict torsion_check(const std::vector<Polynomial>& gens, std::uint32_t n, const ModuleVector& m,
                             const Polynomial& h, const GroebnerBudget& budget = {},
                             ColumnOrder order = ColumnOrder::GradedRevLex);

struct MembershipReport {
  bool member = false;
  std::optional<std::vector<Polynomial>> cofactors;
  bool certificate_verified = false;
  std::size_t generator_count = 0;
  std::size_t basis_size = 0;
  GroebnerStats stats;
};

/// v in the image of Jac_n(J)^T over B (lifted to A^{N-1}).
MembershipReport image_membership(const std::vector<Polynomial>& gens, std::uint32_t n, const ModuleVector& v,
                                  const GroebnerBudget& budget = {}, ColumnOrder order = ColumnOrder::GradedRevLex);

/// Nonempty when the translated polynomial has no terms of degree <= n.
std::vector<std::string> point_warnings(const Polynomial& f, std::uint32_t n, const std::vector<FieldElement>& point);

}  // namespace kahler

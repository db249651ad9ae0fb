#include "kahler/diffmod.hpp"

#include <algorithm>
#include <numeric>

#include "kahler/errors.hpp"

namespace kahler {

FreeVector to_free_vector(const ModuleVector& v, const std::vector<MultiIndex>& cols) {
  std::vector<Polynomial> comps(cols.size(), Polynomial(v.ring_ptr()));
  for (const auto& [alpha, value] : v.components()) {
    const auto it = std::find(cols.begin(), cols.end(), alpha);
    if (it == cols.end()) throw Error(ErrorCode::AmbientMismatch, "label " + alpha.to_string() + " is not a column");
    comps[static_cast<std::size_t>(it - cols.begin())] = value;
  }
  return FreeVector::from_components(v.ring_ptr(), comps);
}

ModuleVector from_free_vector(const FreeVector& v, const std::vector<MultiIndex>& cols, std::uint32_t n) {
  if (v.rank() != cols.size()) throw Error(ErrorCode::AmbientMismatch, "rank differs from the column count");
  ModuleVector out(v.ring_ptr(), n);
  const auto comps = v.components();
  for (std::size_t i = 0; i < cols.size(); ++i) out.set(cols[i], comps[i]);
  return out;
}

std::vector<ModuleVector> lifted_relations(const JacobianMatrix& jac) {
  std::vector<ModuleVector> out;
  for (std::size_t row = 0; row < jac.rows(); ++row) out.push_back(jac.row_vector(row));
  for (const auto& f : jac.generators()) {
    for (const auto& alpha : jac.col_labels()) out.push_back(basis_vector(jac.ring_ptr(), jac.dims().n, alpha, f));
  }
  return out;
}

namespace {

void require_nonconstant(const Polynomial& f) {
  if (f.is_constant()) throw Error(ErrorCode::ConstantPolynomial, "f must be nonconstant");
}

void require_on_hypersurface(const Polynomial& f, const std::vector<FieldElement>& point) {
  if (point.size() != f.num_vars()) {
    throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(point.size()) + " coordinates, expected " +
                                                  std::to_string(f.num_vars()));
  }
  for (const auto& v : point) {
    if (!(v.field() == f.field())) throw Error(ErrorCode::MixedFieldSpec, "point over a different field");
  }
  const FieldElement value = f.evaluate(point);
  if (!value.is_zero()) {
    throw Error(ErrorCode::PointOffHypersurface, "f does not vanish at the point (value " + value.to_string() + ")");
  }
}

std::vector<Polynomial> as_polynomials(const FreeVector& v) { return v.components(); }

}  // namespace

std::vector<std::string> point_warnings(const Polynomial& f, std::uint32_t n, const std::vector<FieldElement>& point) {
  std::vector<std::string> out;
  if (truncate(translate(f, point), n).is_zero()) {
    out.push_back("f has no terms of degree <= " + std::to_string(n) +
                  " at this point; f may fail to be reduced there (irreducibility is not checked)");
  }
  return out;
}

HypersurfacePresentation presentation(const Polynomial& f, std::uint32_t n, ColumnOrder order) {
  require_nonconstant(f);
  JacobianMatrix jac = build_jacobian({f}, n, order);
  PresentationReport report;
  report.dims = jac.dims();
  report.free_rank = jac.dims().free_rank();
  report.relation_rows = jac.dims().M;
  report.quotient_lifts = jac.dims().free_rank();
  report.fiber_dimension = jac.dims().L - 1;
  report.generic_rank_A = rank_generic_A(jac.entries()).rank;
  report.certificate_B = rank_generic_B(jac.entries(), f);
  report.generic_rank_B = report.certificate_B.rank;
  report.certificate_verified = verify_certificate(jac.entries(), report.certificate_B, f);
  std::vector<ModuleVector> rels = lifted_relations(jac);
  return {f, n, std::move(jac), std::move(rels), std::move(report)};
}

SmoothnessVerdict smoothness(const Polynomial& f, std::uint32_t n, const std::vector<FieldElement>& point) {
  require_on_hypersurface(f, point);
  const JacobianMatrix jac = build_jacobian({f}, n);
  SmoothnessVerdict v;
  v.point = point;
  v.M = jac.dims().M;
  v.certificate = rank_at_point(jac, point);
  v.rank = v.certificate.rank;
  v.smooth = v.rank == v.M;
  v.warnings = point_warnings(f, n, point);
  return v;
}

JetDimensionReport jet_dimension(const Polynomial& f, std::uint32_t n, const std::vector<FieldElement>& point) {
  require_on_hypersurface(f, point);
  if (n == 0) throw Error(ErrorCode::DegreeRange, "order n must be at least 1");
  const std::size_t s = f.num_vars();
  const Polynomial shifted = translate(f, point);
  const std::vector<MultiIndex> monomials = enumerate_indices(s, 0, n);
  const FieldSpec field = f.field();
  // rows: coefficient vectors of x^gamma * f~ truncated above degree n
  std::vector<FieldElement> flat;
  std::size_t rows = 0;
  for (const auto& gamma : monomials) {
    const Polynomial product =
        truncate(shifted.mul_term(gamma, FieldElement::one(field)), n);
    if (product.is_zero()) continue;
    for (const auto& mono : monomials) flat.push_back(product.coefficient(mono));
    ++rows;
  }
  std::size_t rank = 0;
  if (rows > 0) {
    Grid<FieldElement> span(rows, monomials.size(), std::move(flat));
    rank = rank_over_field(span, f.ring_ptr()).rank;
  }
  const DimensionSet dims = DimensionSet::make(static_cast<std::uint32_t>(s), n);
  JetDimensionReport r;
  r.point = point;
  r.n = n;
  r.jet_dim = monomials.size() - rank - 1;
  r.threshold = dims.L - 1;
  r.regular = r.jet_dim == r.threshold;
  r.warnings = point_warnings(f, n, point);
  return r;
}

PdCertificate pd_certificate(const Polynomial& f, std::uint32_t n, ColumnOrder order) {
  require_nonconstant(f);
  const std::size_t s = f.num_vars();
  std::optional<std::size_t> var;
  for (std::size_t i = 0; i < s && !var; ++i) {
    if (!hasse_derivative(f, MultiIndex::unit(s, i)).is_zero()) var = i;
  }
  if (!var) {
    throw Error(ErrorCode::AllPartialsZero,
                "every first partial derivative of f vanishes (f is a p-th power in characteristic " +
                    std::to_string(f.field().characteristic()) + ")");
  }
  std::vector<std::size_t> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[*var]);
  const Polynomial g = permute_variables(f, perm);
  const JacobianMatrix jac_g = build_jacobian({g}, n, order);
  const JacobianMatrix jac_f = build_jacobian({f}, n, order);

  PdCertificate cert;
  cert.pivot_var = *var;
  cert.M = jac_f.dims().M;
  cert.echelon = check_echelon(jac_g, 0);
  const RankCertificate local = rank_generic_B(jac_g.entries(), g);

  auto swap_label = [&](const MultiIndex& a) {
    std::vector<std::uint32_t> e(a.exponents().begin(), a.exponents().end());
    std::swap(e[0], e[*var]);
    return MultiIndex(std::move(e));
  };
  RankCertificate mapped;
  mapped.rank = local.rank;
  for (std::size_t r : local.rows) {
    const RowLabel& lab = jac_g.row_labels()[r];
    mapped.rows.push_back(jac_f.row_index(lab.generator, swap_label(lab.beta)));
  }
  for (std::size_t c : local.cols) mapped.cols.push_back(jac_f.column_index(swap_label(jac_g.col_labels()[c])));
  std::sort(mapped.rows.begin(), mapped.rows.end());
  std::sort(mapped.cols.begin(), mapped.cols.end());
  mapped.det = mapped.rank > 0 ? determinant(jac_f.entries().submatrix(mapped.rows, mapped.cols))
                               : Polynomial::constant(f.ring_ptr(), 1);
  for (std::size_t r : mapped.rows) cert.witness_row_labels.push_back(jac_f.row_labels()[r]);
  for (std::size_t c : mapped.cols) cert.witness_col_labels.push_back(jac_f.col_labels()[c]);
  cert.verified = cert.echelon.echelon && mapped.rank == cert.M && verify_certificate(jac_f.entries(), mapped, f);
  cert.witness = std::move(mapped);
  return cert;
}

std::string to_string(TorsionKind kind) {
  switch (kind) {
    case TorsionKind::TorsionWitness: return "TORSION_WITNESS";
    case TorsionKind::AnnihilatorZero: return "ANNIHILATOR_ZERO";
    case TorsionKind::ClassIsZero: return "CLASS_IS_ZERO";
    case TorsionKind::NotAnnihilated: return "NOT_ANNIHILATED";
  }
  return "UNKNOWN";
}

namespace {

struct LiftedSystem {
  JacobianMatrix jac;
  std::vector<FreeVector> gens;
};

LiftedSystem lift(const std::vector<Polynomial>& gens, std::uint32_t n, ColumnOrder order) {
  JacobianMatrix jac = build_jacobian(gens, n, order);
  std::vector<FreeVector> vs;
  for (const auto& rel : lifted_relations(jac)) vs.push_back(to_free_vector(rel, jac.col_labels()));
  return {std::move(jac), std::move(vs)};
}

void require_ambient(const ModuleVector& v, const JacobianMatrix& jac) {
  require_same_ring(v.ring_ptr(), jac.ring_ptr());
  if (v.order() != jac.dims().n) {
    throw Error(ErrorCode::AmbientMismatch, "element of order " + std::to_string(v.order()) + " against order " +
                                                std::to_string(jac.dims().n));
  }
}

}  // namespace

TorsionVerdict torsion_check(const std::vector<Polynomial>& gens, std::uint32_t n, const ModuleVector& m,
                             const Polynomial& h, const GroebnerBudget& budget, ColumnOrder order) {
  LiftedSystem sys = lift(gens, n, order);
  require_ambient(m, sys.jac);
  require_same_ring(h.ring_ptr(), sys.jac.ring_ptr());
  TorsionVerdict out{m, h, false, std::nullopt, std::nullopt, TorsionKind::NotAnnihilated, std::nullopt, false, 0, 0, {}};
  out.generator_count = sys.gens.size();
  out.h_nonzero_in_B = !ideal_membership(h, gens, budget);
  if (!out.h_nonzero_in_B) {
    out.verdict = TorsionKind::AnnihilatorZero;
    return out;
  }
  const GroebnerBasis gb = buchberger(sys.gens, {budget, true});
  out.basis_size = gb.elements.size();
  out.stats = gb.stats;
  const FreeVector mv = to_free_vector(m, sys.jac.col_labels());
  out.m_in_image = normal_form(mv, gb, budget.max_steps).remainder.is_zero();
  const FreeVector hm = h * mv;
  NormalFormResult nf = normal_form(hm, gb, budget.max_steps);
  out.hm_in_image = nf.remainder.is_zero();
  if (*out.hm_in_image) {
    out.certificate_verified = combine(*nf.quotient_in_inputs, sys.gens) == hm;
    out.hm_cofactors = as_polynomials(*nf.quotient_in_inputs);
  }
  if (*out.m_in_image) {
    out.verdict = TorsionKind::ClassIsZero;
  } else if (!*out.hm_in_image) {
    out.verdict = TorsionKind::NotAnnihilated;
  } else {
    out.verdict = TorsionKind::TorsionWitness;
  }
  return out;
}

MembershipReport image_membership(const std::vector<Polynomial>& gens, std::uint32_t n, const ModuleVector& v,
                                  const GroebnerBudget& budget, ColumnOrder order) {
  LiftedSystem sys = lift(gens, n, order);
  require_ambient(v, sys.jac);
  MembershipResult res = module_membership(to_free_vector(v, sys.jac.col_labels()), sys.gens, true, budget);
  MembershipReport out;
  out.member = res.member;
  out.certificate_verified = res.certificate_verified;
  if (res.cofactors) out.cofactors = as_polynomials(*res.cofactors);
  out.generator_count = sys.gens.size();
  out.basis_size = res.basis_size;
  out.stats = res.stats;
  return out;
}

}  // namespace kahler

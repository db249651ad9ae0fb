#include "kahler/report.hpp"

#include <algorithm>
#include <sstream>

namespace kahler {

using nlohmann::json;

json indices_json(const MultiIndex& a) {
  json out = json::array();
  for (auto e : a.exponents()) out.push_back(e);
  return out;
}

json point_json(const std::vector<FieldElement>& point) {
  json out = json::array();
  for (const auto& v : point) out.push_back(v.to_string());
  return out;
}

std::string label_string(const RowLabel& label) {
  return "f" + std::to_string(label.generator + 1) + " " + label.beta.to_string();
}

json matrix_json(const JacobianMatrix& jac) {
  json rows = json::array();
  for (const auto& r : jac.row_labels()) rows.push_back(json::array({r.generator + 1, indices_json(r.beta)}));
  json cols = json::array();
  for (const auto& c : jac.col_labels()) cols.push_back(indices_json(c));
  json entries = json::array();
  for (std::size_t i = 0; i < jac.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < jac.cols(); ++j) row.push_back(jac.entry(i, j).to_string());
    entries.push_back(std::move(row));
  }
  const DimensionSet& d = jac.dims();
  return {{"s", d.s}, {"n", d.n}, {"r", d.r}, {"column_order", to_string(jac.column_order())},
          {"row_labels", rows}, {"col_labels", cols}, {"entries", entries}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string matrix_csv(const JacobianMatrix& jac) {
  std::ostringstream out;
  out << "row";
  for (const auto& c : jac.col_labels()) out << ',' << csv_field(c.to_string());
  out << '\n';
  for (std::size_t i = 0; i < jac.rows(); ++i) {
    out << csv_field(label_string(jac.row_labels()[i]));
    for (std::size_t j = 0; j < jac.cols(); ++j) out << ',' << csv_field(jac.entry(i, j).to_string());
    out << '\n';
  }
  return out.str();
}

std::string matrix_pretty(const JacobianMatrix& jac) {
  const std::size_t cols = jac.cols() + 1;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (const auto& c : jac.col_labels()) header.push_back(c.to_string());
  cells.push_back(std::move(header));
  for (std::size_t i = 0; i < jac.rows(); ++i) {
    std::vector<std::string> row{label_string(jac.row_labels()[i])};
    for (std::size_t j = 0; j < jac.cols(); ++j) row.push_back(jac.entry(i, j).to_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(cols, 0);
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < cols; ++j) width[j] = std::max(width[j], row[j].size());
  }
  std::ostringstream out;
  const DimensionSet& d = jac.dims();
  out << "Jac_" << d.n << ": " << jac.rows() << " x " << jac.cols() << " (s=" << d.s << ", r=" << d.r << ", N=" << d.N
      << ", M=" << d.M << ", L=" << d.L << ")\n";
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j < cols; ++j) {
      if (j) line += "  ";
      line += std::string(width[j] - row[j].size(), ' ') + row[j];
    }
    out << line << '\n';
  }
  return out.str();
}

json certificate_json(const RankCertificate& cert) {
  return {{"rank", cert.rank},
          {"witness_rows", cert.rows},
          {"witness_cols", cert.cols},
          {"witness_det", cert.det.to_string()}};
}

json presentation_json(const HypersurfacePresentation& pres) {
  const PresentationReport& r = pres.report;
  return {{"f", pres.f.to_string()},
          {"n", pres.n},
          {"s", r.dims.s},
          {"N", r.dims.N},
          {"M", r.dims.M},
          {"L", r.dims.L},
          {"free_rank", r.free_rank},
          {"relation_rows", r.relation_rows},
          {"quotient_lifts", r.quotient_lifts},
          {"generic_rank_A", r.generic_rank_A},
          {"generic_rank_B", r.generic_rank_B},
          {"fiber_dimension", r.fiber_dimension},
          {"injective", r.generic_rank_B == r.relation_rows},
          {"certificate_B", certificate_json(r.certificate_B)},
          {"certificate_verified", r.certificate_verified}};
}

json smoothness_json(const SmoothnessVerdict& v) {
  return {{"point", point_json(v.point)},
          {"on_hypersurface", v.on_hypersurface},
          {"rank", v.rank},
          {"M", v.M},
          {"verdict", v.smooth ? "SMOOTH" : "SINGULAR"},
          {"certificate", certificate_json(v.certificate)},
          {"warnings", v.warnings}};
}

json jet_json(const JetDimensionReport& r) {
  return {{"point", point_json(r.point)}, {"n", r.n},           {"jet_dim", r.jet_dim},
          {"threshold", r.threshold},    {"regular", r.regular}, {"warnings", r.warnings}};
}

json pd_json(const PdCertificate& c) {
  json pivots = json::array();
  for (const auto& p : c.echelon.pivots) pivots.push_back(json::array({p.row, p.col}));
  json rows = json::array();
  for (const auto& r : c.witness_row_labels) rows.push_back(json::array({r.generator + 1, indices_json(r.beta)}));
  json cols = json::array();
  for (const auto& a : c.witness_col_labels) cols.push_back(indices_json(a));
  return {{"pivot_var", c.pivot_var + 1},
          {"M", c.M},
          {"echelon", c.echelon.echelon},
          {"echelon_failure", c.echelon.failure},
          {"pivots", pivots},
          {"witness", certificate_json(c.witness)},
          {"witness_row_labels", rows},
          {"witness_col_labels", cols},
          {"verified", c.verified}};
}

json stats_json(const GroebnerStats& s) {
  return {{"steps", s.steps},
          {"pairs_considered", s.pairs_considered},
          {"pairs_reduced", s.pairs_reduced},
          {"chain_skips", s.chain_skips},
          {"max_degree", s.max_degree_seen}};
}

namespace {

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json cofactor_json(const std::optional<std::vector<Polynomial>>& cofs) {
  if (!cofs) return nullptr;
  json out = json::array();
  for (std::size_t i = 0; i < cofs->size(); ++i) {
    if ((*cofs)[i].is_zero()) continue;
    out.push_back({{"relation", i}, {"coefficient", (*cofs)[i].to_string()}});
  }
  return out;
}

}  // namespace

json torsion_json(const TorsionVerdict& v, ColumnOrder order) {
  return {{"verdict", to_string(v.verdict)},
          {"element", v.m.to_string(order)},
          {"annihilator", v.h.to_string()},
          {"h_nonzero_in_B", v.h_nonzero_in_B},
          {"hm_in_image", optional_bool(v.hm_in_image)},
          {"m_in_image", optional_bool(v.m_in_image)},
          {"generator_count", v.generator_count},
          {"basis_size", v.basis_size},
          {"groebner", stats_json(v.stats)},
          {"hm_certificate", cofactor_json(v.hm_cofactors)},
          {"certificate_verified", v.certificate_verified}};
}

json membership_json(const MembershipReport& r, const ModuleVector& v, ColumnOrder order) {
  return {{"member", r.member},
          {"element", v.to_string(order)},
          {"generator_count", r.generator_count},
          {"basis_size", r.basis_size},
          {"groebner", stats_json(r.stats)},
          {"certificate", cofactor_json(r.cofactors)},
          {"certificate_verified", r.certificate_verified}};
}

}  // namespace kahler

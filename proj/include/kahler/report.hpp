#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "kahler/diffmod.hpp"

namespace kahler {

// Generator indices are reported 1-based; matrix row and column indices are
// 0-based positions in the rendered matrix.

nlohmann::json indices_json(const MultiIndex& a);
nlohmann::json point_json(const std::vector<FieldElement>& point);

nlohmann::json matrix_json(const JacobianMatrix& jac);
std::string matrix_csv(const JacobianMatrix& jac);
std::string matrix_pretty(const JacobianMatrix& jac);

nlohmann::json certificate_json(const RankCertificate& cert);
nlohmann::json presentation_json(const HypersurfacePresentation& pres);
nlohmann::json smoothness_json(const SmoothnessVerdict& v);
nlohmann::json jet_json(const JetDimensionReport& r);
nlohmann::json pd_json(const PdCertificate& c);
nlohmann::json stats_json(const GroebnerStats& s);
nlohmann::json torsion_json(const TorsionVerdict& v, ColumnOrder order);
nlohmann::json membership_json(const MembershipReport& r, const ModuleVector& v, ColumnOrder order);

std::string label_string(const RowLabel& label);

}  // namespace kahler

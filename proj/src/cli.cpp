#include "kahler/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "kahler/errors.hpp"
#include "kahler/parser.hpp"
#include "kahler/report.hpp"

namespace kahler {

namespace {

struct JobConfig {
  std::vector<std::string> generators;
  std::uint32_t n = 0;
  std::string vars;
  std::uint64_t characteristic = 0;
  std::string point;
  std::string element;
  std::string annihilator;
  std::string format = "pretty";
  std::string column_order = "grevlex";
  std::uint32_t degree_budget = 0;
  std::uint64_t step_budget = 0;
  bool generic = false;
  bool mod_f = false;
};

// Inputs resolved against a concrete ring.
struct Job {
  RingPtr ring;
  std::vector<Polynomial> gens;
  ColumnOrder order;
  GroebnerBudget budget;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyIdeal:
    case ErrorCode::MultiGenerator:
    case ErrorCode::ZeroModulus:
    case ErrorCode::ConstantPolynomial:
    case ErrorCode::PointOffHypersurface:
    case ErrorCode::AllPartialsZero:
    case ErrorCode::AmbientMismatch:
      return kExitPrecondition;
    case ErrorCode::ResourceLimit:
      return kExitResource;
    default:
      return kExitUsage;
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Job resolve(const JobConfig& cfg) {
  const FieldSpec field = FieldSpec::with_characteristic(cfg.characteristic);
  std::vector<std::string> names;
  if (!cfg.vars.empty()) {
    for (const auto& v : split(cfg.vars, ',')) {
      const std::string name = trim(v);
      if (name.empty()) throw Error(ErrorCode::Usage, "empty variable name in --vars");
      if (std::find(names.begin(), names.end(), name) != names.end()) {
        throw Error(ErrorCode::Usage, "variable " + name + " declared twice");
      }
      names.push_back(name);
    }
  } else {
    std::vector<std::string> texts = cfg.generators;
    texts.push_back(cfg.element);
    texts.push_back(cfg.annihilator);
    names = infer_variables(texts);
    if (names.empty()) names.push_back("x1");
  }
  Job job{make_ring(names, field), {}, parse_column_order(cfg.column_order), GroebnerBudget::from_env()};
  for (const auto& text : cfg.generators) job.gens.push_back(parse_polynomial(text, job.ring));
  if (cfg.degree_budget) job.budget.max_degree = cfg.degree_budget;
  if (cfg.step_budget) job.budget.max_steps = cfg.step_budget;
  return job;
}

std::vector<FieldElement> parse_point(const JobConfig& cfg, const Job& job) {
  if (cfg.point.empty()) throw Error(ErrorCode::Usage, "--point is required");
  std::vector<FieldElement> out;
  for (const auto& part : split(cfg.point, ',')) out.push_back(parse_literal(trim(part), job.ring->field));
  if (out.size() != job.ring->num_vars()) {
    throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(out.size()) + " coordinates, ring has " +
                                                  std::to_string(job.ring->num_vars()) + " variables");
  }
  return out;
}

const Polynomial& single(const Job& job) {
  if (job.gens.size() != 1) throw Error(ErrorCode::MultiGenerator, "this command takes exactly one generator");
  return job.gens.front();
}

ModuleVector parse_element(const JobConfig& cfg, const Job& job) {
  if (cfg.element.empty()) throw Error(ErrorCode::Usage, "--element is required");
  return parse_module_vector(cfg.element, job.ring, cfg.n);
}

void require_format(const JobConfig& cfg, bool csv_ok) {
  if (cfg.format == "pretty" || cfg.format == "json" || (csv_ok && cfg.format == "csv")) return;
  throw Error(ErrorCode::Usage, "format '" + cfg.format + "' is not available for this command");
}

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

void print_certificate(const RankCertificate& c, std::ostream& out) {
  out << "witness_rows=[";
  for (std::size_t i = 0; i < c.rows.size(); ++i) out << (i ? "," : "") << c.rows[i];
  out << "] witness_cols=[";
  for (std::size_t i = 0; i < c.cols.size(); ++i) out << (i ? "," : "") << c.cols[i];
  out << "] witness_det=" << c.det.to_string() << '\n';
}

int cmd_matrix(const JobConfig& cfg, std::ostream& out) {
  require_format(cfg, true);
  const Job job = resolve(cfg);
  const JacobianMatrix jac = build_jacobian(job.gens, cfg.n, job.order);
  if (cfg.format == "json") out << matrix_json(jac).dump(2) << '\n';
  else if (cfg.format == "csv") out << matrix_csv(jac);
  else out << matrix_pretty(jac);
  return kExitOk;
}

int cmd_smooth(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg, false);
  const Job job = resolve(cfg);
  const SmoothnessVerdict v = smoothness(single(job), cfg.n, parse_point(cfg, job));
  print_warnings(v.warnings, err);
  if (cfg.format == "json") {
    out << smoothness_json(v).dump(2) << '\n';
  } else {
    out << (v.smooth ? "SMOOTH" : "SINGULAR") << " rank=" << v.rank << " M=" << v.M << '\n';
  }
  return kExitOk;
}

int cmd_jetdim(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg, false);
  const Job job = resolve(cfg);
  const JetDimensionReport r = jet_dimension(single(job), cfg.n, parse_point(cfg, job));
  print_warnings(r.warnings, err);
  if (cfg.format == "json") {
    out << jet_json(r).dump(2) << '\n';
  } else {
    out << "jet_dim=" << r.jet_dim << " threshold=" << r.threshold << " regular=" << (r.regular ? "true" : "false")
        << '\n';
  }
  return kExitOk;
}

int cmd_presentation(const JobConfig& cfg, std::ostream& out) {
  require_format(cfg, false);
  const Job job = resolve(cfg);
  const HypersurfacePresentation p = presentation(single(job), cfg.n, job.order);
  if (cfg.format == "json") {
    out << presentation_json(p).dump(2) << '\n';
    return kExitOk;
  }
  const PresentationReport& r = p.report;
  out << "0 -> B^" << r.relation_rows << " -> B^" << r.free_rank << " -> Omega^(" << cfg.n << ") -> 0\n"
      << "free_rank=" << r.free_rank << " relation_rows=" << r.relation_rows << " quotient_lifts=" << r.quotient_lifts
      << '\n'
      << "generic_rank_A=" << r.generic_rank_A << " generic_rank_B=" << r.generic_rank_B
      << " fiber_dimension=" << r.fiber_dimension << '\n';
  print_certificate(r.certificate_B, out);
  out << "certificate_verified=" << (r.certificate_verified ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_rank(const JobConfig& cfg, std::ostream& out) {
  require_format(cfg, false);
  const int modes = int(cfg.generic) + int(cfg.mod_f) + int(!cfg.point.empty());
  if (modes != 1) throw Error(ErrorCode::Usage, "choose exactly one of --generic, --mod-f, --point");
  const Job job = resolve(cfg);
  const JacobianMatrix jac = build_jacobian(job.gens, cfg.n, job.order);
  RankCertificate cert;
  std::string over;
  bool verified = false;
  if (cfg.generic) {
    cert = rank_generic_A(jac.entries());
    over = "Frac(A)";
    verified = verify_certificate(jac.entries(), cert);
  } else if (cfg.mod_f) {
    const Polynomial& f = single(job);
    cert = rank_generic_B(jac.entries(), f);
    over = "Frac(A/<f>)";
    verified = verify_certificate(jac.entries(), cert, f);
  } else {
    const auto point = parse_point(cfg, job);
    cert = rank_at_point(jac, point);
    over = "point";
    const EvaluatedMatrix ev = evaluate_matrix(jac.entries(), point);
    verified = verify_certificate(ev.values.map([&](const FieldElement& v) { return Polynomial::constant(job.ring, v); }),
                                  cert);
  }
  if (cert.rank == 0) verified = true;
  if (cfg.format == "json") {
    nlohmann::json j = certificate_json(cert);
    j["over"] = over;
    j["verified"] = verified;
    out << j.dump(2) << '\n';
  } else {
    out << "rank=" << cert.rank << " over " << over << '\n';
    print_certificate(cert, out);
    out << "verified=" << (verified ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int cmd_member(const JobConfig& cfg, std::ostream& out) {
  require_format(cfg, false);
  const Job job = resolve(cfg);
  const ModuleVector v = parse_element(cfg, job);
  const MembershipReport r = image_membership(job.gens, cfg.n, v, job.budget, job.order);
  if (cfg.format == "json") {
    out << membership_json(r, v, job.order).dump(2) << '\n';
  } else {
    out << (r.member ? "IN" : "OUT") << '\n';
    if (r.member) out << "certificate_verified=" << (r.certificate_verified ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int cmd_torsion(const JobConfig& cfg, std::ostream& out) {
  require_format(cfg, false);
  const Job job = resolve(cfg);
  const ModuleVector m = parse_element(cfg, job);
  if (cfg.annihilator.empty()) throw Error(ErrorCode::Usage, "--annihilator is required");
  const Polynomial h = parse_polynomial(cfg.annihilator, job.ring);
  const TorsionVerdict v = torsion_check(job.gens, cfg.n, m, h, job.budget, job.order);
  if (cfg.format == "json") {
    out << torsion_json(v, job.order).dump(2) << '\n';
    return kExitOk;
  }
  auto tri = [](const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "skipped"; };
  out << to_string(v.verdict) << '\n'
      << "h_nonzero_in_B=" << (v.h_nonzero_in_B ? "true" : "false") << " hm_in_image=" << tri(v.hm_in_image)
      << " m_in_image=" << tri(v.m_in_image) << '\n';
  if (v.hm_in_image && *v.hm_in_image) {
    out << "certificate_verified=" << (v.certificate_verified ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int cmd_pd(const JobConfig& cfg, std::ostream& out) {
  require_format(cfg, false);
  const Job job = resolve(cfg);
  const PdCertificate c = pd_certificate(single(job), cfg.n, job.order);
  if (cfg.format == "json") {
    out << pd_json(c).dump(2) << '\n';
    return kExitOk;
  }
  out << "pivot_var=" << job.ring->names[c.pivot_var] << " echelon=" << (c.echelon.echelon ? "true" : "false")
      << " pivots=" << c.echelon.pivots.size() << " M=" << c.M << '\n';
  print_certificate(c.witness, out);
  out << "verified=" << (c.verified ? "true" : "false") << '\n';
  return kExitOk;
}

void add_common(CLI::App* sub, JobConfig& cfg, bool needs_n = true) {
  sub->add_option("-f,--generator", cfg.generators, "generator polynomial (repeatable)")->required();
  auto* n = sub->add_option("-n,--order", cfg.n, "differential order n >= 1")->check(CLI::PositiveNumber);
  if (needs_n) n->required();
  sub->add_option("--vars", cfg.vars, "comma-separated variable names (inferred when omitted)");
  sub->add_option("--char", cfg.characteristic, "characteristic: 0 or a prime");
  sub->add_option("--format", cfg.format, "pretty | json | csv");
  sub->add_option("--column-order", cfg.column_order, "grevlex (default) | grlex");
}

void add_budgets(CLI::App* sub, JobConfig& cfg) {
  sub->add_option("--degree-budget", cfg.degree_budget, "Groebner degree limit")->check(CLI::PositiveNumber);
  sub->add_option("--step-budget", cfg.step_budget, "Groebner reduction-step limit")->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Higher-order Kaehler differentials of polynomial ideals", "kahler"};
  app.require_subcommand(1);
  JobConfig cfg;

  auto* matrix = app.add_subcommand("matrix", "print the order-n Jacobian matrix");
  add_common(matrix, cfg);
  auto* smooth = app.add_subcommand("smooth", "order-n Jacobian criterion at a point");
  add_common(smooth, cfg);
  smooth->add_option("--point", cfg.point, "coordinates a,b,...")->required();
  auto* jetdim = app.add_subcommand("jetdim", "dim m/m^(n+1) at a point");
  add_common(jetdim, cfg);
  jetdim->add_option("--point", cfg.point, "coordinates a,b,...")->required();
  auto* pres = app.add_subcommand("presentation", "presentation of the order-n differentials");
  add_common(pres, cfg);
  auto* rank = app.add_subcommand("rank", "rank of Jac_n with a witness minor");
  add_common(rank, cfg);
  rank->add_flag("--generic", cfg.generic, "rank over Frac(A)");
  rank->add_flag("--mod-f", cfg.mod_f, "rank over Frac(A/<f>)");
  rank->add_option("--point", cfg.point, "rank of the matrix evaluated at a,b,...");
  auto* member = app.add_subcommand("member", "membership in the image of Jac_n^T over B");
  add_common(member, cfg);
  add_budgets(member, cfg);
  member->add_option("--element", cfg.element, "element, e.g. \"(1,1):3*x2;(0,2):-2*x1\"")->required();
  auto* torsion = app.add_subcommand("torsion", "check a torsion witness (m, h)");
  add_common(torsion, cfg);
  add_budgets(torsion, cfg);
  torsion->add_option("--element", cfg.element, "element m")->required();
  torsion->add_option("--annihilator", cfg.annihilator, "annihilator h")->required();
  auto* pd = app.add_subcommand("pd", "injectivity certificate for the presentation");
  add_common(pd, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (matrix->parsed()) return cmd_matrix(cfg, out);
    if (smooth->parsed()) return cmd_smooth(cfg, out, err);
    if (jetdim->parsed()) return cmd_jetdim(cfg, out, err);
    if (pres->parsed()) return cmd_presentation(cfg, out);
    if (rank->parsed()) return cmd_rank(cfg, out);
    if (member->parsed()) return cmd_member(cfg, out);
    if (torsion->parsed()) return cmd_torsion(cfg, out);
    if (pd->parsed()) return cmd_pd(cfg, out);
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace kahler

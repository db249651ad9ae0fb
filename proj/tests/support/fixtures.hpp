#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "kahler/diffmod.hpp"
#include "kahler/parser.hpp"

namespace fixtures {

using namespace kahler;

RingPtr ring(std::size_t s, std::uint64_t p = 0);
Polynomial poly(const std::string& text, const RingPtr& r);
FieldElement num(long long v, const RingPtr& r);
std::vector<FieldElement> point(const std::vector<long long>& coords, const RingPtr& r);

/// x1^3 - x2^2
Polynomial cusp(const RingPtr& r);
/// <x2^2 - x1*x3, x3^2 - x2*x4, x2*x3 - x1*x4>, the affine cone over the twisted cubic.
std::vector<Polynomial> cubic_cone(const RingPtr& r);

/// 3*x2 e_(1,n-1) - 2*x1 e_(0,n)
ModuleVector cusp_witness(const RingPtr& r, std::uint32_t n);
/// -x4 e_(n,0,0,0) + 2*x3 e_(n-1,1,0,0) - x2 e_(n-1,0,1,0)
ModuleVector cone_witness(const RingPtr& r, std::uint32_t n);

/// Golden matrix from tests/golden/<name>.json as polynomial strings.
std::vector<std::vector<std::string>> golden_entries(const std::string& name);
std::string golden_path(const std::string& name);

/// Random polynomial with up to `terms` terms of total degree <= max_degree,
/// coefficients drawn from [-coef, coef].
Polynomial random_poly(std::mt19937_64& rng, const RingPtr& r, unsigned max_degree, unsigned terms, int coef = 5);
/// Irreducible by construction: x1 - c for s = 1, otherwise Eisenstein at the
/// prime x2 over k[x2, ..., xs]: x1^d + x2 * (sum_i r_i x1^i) with r_0 having a
/// nonzero constant term.
Polynomial random_irreducible(std::mt19937_64& rng, const RingPtr& r);
FieldElement random_element(std::mt19937_64& rng, const RingPtr& r, int bound);

/// Plane curve of degree <= 4 through `points_per_curve` random integer
/// points, singular at the first `singular` of them; points are returned
/// with the curve.
struct CurveSample {
  Polynomial f;
  std::vector<std::vector<FieldElement>> points;
};
std::vector<CurveSample> random_plane_curves(std::uint64_t seed, std::size_t curves, std::size_t points_per_curve,
                                             std::size_t singular, const RingPtr& r);

/// Independent membership oracle for graded submodules. Variable i has weight
/// var_weight[i] and position j has weight pos_weight[j]; every generator and
/// v must be homogeneous. Decides v in <gens> by exact linear algebra on the
/// finite-dimensional graded piece containing v.
bool graded_membership(const FreeVector& v, const std::vector<FreeVector>& gens, const std::vector<int>& var_weight,
                       const std::vector<int>& pos_weight);

/// Coefficients of t^gamma, 1 <= |gamma| <= max_order, in f(x + t) expanded
/// in a doubled polynomial ring; zero coefficients are omitted.
std::map<MultiIndex, Polynomial> taylor_coefficients(const Polynomial& f, unsigned max_order);

/// Right null space of a field matrix given by rows, by textbook RREF.
std::vector<std::vector<FieldElement>> nullspace(std::vector<std::vector<FieldElement>> rows, std::size_t cols,
                                                 const FieldElement& zero);

/// Rank of a field matrix by textbook elimination (no pivot heuristics).
std::size_t plain_rank(std::vector<std::vector<FieldElement>> rows);

/// Ring map x1 -> t^2, x2 -> t^3 into k[t] (for comparing with the
/// parametrised display of the cusp).
Polynomial cusp_parametrise(const Polynomial& p, const RingPtr& t_ring);

}  // namespace fixtures

#include "fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

#ifndef KAHLER_GOLDEN_DIR
#error "KAHLER_GOLDEN_DIR must be defined"
#endif

namespace fixtures {

RingPtr ring(std::size_t s, std::uint64_t p) { return make_ring(s, FieldSpec::with_characteristic(p)); }

Polynomial poly(const std::string& text, const RingPtr& r) { return parse_polynomial(text, r); }

FieldElement num(long long v, const RingPtr& r) { return FieldElement::from_integer(v, r->field); }

std::vector<FieldElement> point(const std::vector<long long>& coords, const RingPtr& r) {
  std::vector<FieldElement> out;
  for (auto c : coords) out.push_back(num(c, r));
  return out;
}

Polynomial cusp(const RingPtr& r) { return poly("x1^3 - x2^2", r); }

std::vector<Polynomial> cubic_cone(const RingPtr& r) {
  return {poly("x2^2 - x1*x3", r), poly("x3^2 - x2*x4", r), poly("x2*x3 - x1*x4", r)};
}

ModuleVector cusp_witness(const RingPtr& r, std::uint32_t n) {
  ModuleVector m(r, n);
  m.set(MultiIndex{1, n - 1}, poly("3*x2", r));
  m.set(MultiIndex{0, n}, poly("-2*x1", r));
  return m;
}

ModuleVector cone_witness(const RingPtr& r, std::uint32_t n) {
  ModuleVector m(r, n);
  m.set(MultiIndex{n, 0, 0, 0}, poly("-x4", r));
  m.add(MultiIndex{n - 1, 1, 0, 0}, poly("2*x3", r));
  m.add(MultiIndex{n - 1, 0, 1, 0}, poly("-x2", r));
  return m;
}

std::string golden_path(const std::string& name) { return std::string(KAHLER_GOLDEN_DIR) + "/" + name; }

std::vector<std::vector<std::string>> golden_entries(const std::string& name) {
  std::ifstream in(golden_path(name + ".json"));
  if (!in) throw std::runtime_error("missing golden file " + name);
  const auto doc = nlohmann::json::parse(in);
  return doc.at("entries").get<std::vector<std::vector<std::string>>>();
}

FieldElement random_element(std::mt19937_64& rng, const RingPtr& r, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  return FieldElement::from_integer(d(rng), r->field);
}

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& r, unsigned max_degree, unsigned terms, int coef) {
  const auto monos = enumerate_indices(r->num_vars(), 0, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::vector<Polynomial::Term> ts;
  for (unsigned i = 0; i < terms; ++i) ts.push_back({monos[pick(rng)], random_element(rng, r, coef)});
  return Polynomial::from_terms(r, std::move(ts));
}

Polynomial random_irreducible(std::mt19937_64& rng, const RingPtr& r) {
  const std::size_t s = r->num_vars();
  const Polynomial x1 = Polynomial::variable(r, 0);
  if (s == 1) return x1 - Polynomial::constant(r, random_element(rng, r, 5));
  std::uniform_int_distribution<std::uint32_t> deg(1, 3);
  const std::uint32_t d = deg(rng);
  // random polynomial of degree <= 1 free of x1
  const auto tail = [&] {
    std::vector<Polynomial::Term> ts;
    for (std::size_t v = 1; v < s; ++v) ts.push_back({MultiIndex::unit(s, v), random_element(rng, r, 3)});
    return Polynomial::from_terms(r, std::move(ts));
  };
  FieldElement c = random_element(rng, r, 5);
  if (c.is_zero()) c = FieldElement::one(r->field);
  Polynomial sum = tail() + Polynomial::constant(r, c);
  for (std::uint32_t i = 1; i < d; ++i) sum += tail() * pow(x1, i);
  return pow(x1, d) + Polynomial::variable(r, 1) * sum;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<FieldElement>>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const FieldElement inv = rows[r][c].inverse();
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const FieldElement factor = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<FieldElement>> nullspace(std::vector<std::vector<FieldElement>> rows, std::size_t cols,
                                                 const FieldElement& zero) {
  const auto pivots = rref(rows);
  std::vector<std::vector<FieldElement>> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<FieldElement> v(cols, zero);
    v[free] = FieldElement::one(zero.field());
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t plain_rank(std::vector<std::vector<FieldElement>> rows) { return rref(rows).size(); }

std::vector<CurveSample> random_plane_curves(std::uint64_t seed, std::size_t curves, std::size_t points_per_curve,
                                             std::size_t singular, const RingPtr& r) {
  std::mt19937_64 rng(seed);
  const auto monos = enumerate_indices(2, 0, 4);
  std::vector<CurveSample> out;
  while (out.size() < curves) {
    std::set<std::pair<long long, long long>> seen;
    std::vector<std::vector<FieldElement>> pts;
    std::uniform_int_distribution<long long> coord(-3, 3);
    while (pts.size() < points_per_curve) {
      const auto pr = std::make_pair(coord(rng), coord(rng));
      if (!seen.insert(pr).second) continue;
      pts.push_back(point({pr.first, pr.second}, r));
    }
    // linear conditions on the coefficient vector
    std::vector<std::vector<FieldElement>> conds;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      std::vector<FieldElement> row;
      for (const auto& m : monos) row.push_back(Polynomial::monomial(r, m, num(1, r)).evaluate(pts[k]));
      conds.push_back(std::move(row));
      if (k >= singular) continue;
      for (std::size_t v = 0; v < 2; ++v) {
        std::vector<FieldElement> drow;
        for (const auto& m : monos) {
          drow.push_back(hasse_derivative(Polynomial::monomial(r, m, num(1, r)), MultiIndex::unit(2, v)).evaluate(pts[k]));
        }
        conds.push_back(std::move(drow));
      }
    }
    auto red = conds;
    const auto pivots = rref(red);
    std::vector<Polynomial::Term> terms;
    // random combination of the kernel basis: free coefficients random, pivots solved
    std::vector<FieldElement> coeffs(monos.size(), num(0, r));
    for (std::size_t c = 0; c < monos.size(); ++c) {
      if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) coeffs[c] = random_element(rng, r, 4);
    }
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      FieldElement acc = num(0, r);
      for (std::size_t c = pivots[i] + 1; c < monos.size(); ++c) acc -= red[i][c] * coeffs[c];
      coeffs[pivots[i]] = acc;
    }
    for (std::size_t c = 0; c < monos.size(); ++c) terms.push_back({monos[c], coeffs[c]});
    Polynomial f = Polynomial::from_terms(r, std::move(terms));
    if (f.degree() < 2) continue;
    out.push_back({std::move(f), std::move(pts)});
  }
  return out;
}

bool graded_membership(const FreeVector& v, const std::vector<FreeVector>& gens, const std::vector<int>& var_weight,
                       const std::vector<int>& pos_weight) {
  auto weight = [&](const ModuleTerm& t) {
    int w = pos_weight.at(t.pos);
    for (std::size_t i = 0; i < t.mono.size(); ++i) w += var_weight.at(i) * static_cast<int>(t.mono[i]);
    return w;
  };
  auto homogeneous_degree = [&](const FreeVector& g) {
    const int d = weight(g.leading());
    for (const auto& t : g.terms()) {
      if (weight(t) != d) throw std::logic_error("oracle input is not homogeneous");
    }
    return d;
  };
  if (v.is_zero()) return true;
  const int target = homogeneous_degree(v);
  const std::size_t s = v.ring_ptr()->num_vars();
  int min_w = *std::min_element(var_weight.begin(), var_weight.end());
  const auto monos = enumerate_indices(s, 0, static_cast<std::uint32_t>(std::max(0, target) / min_w + 1));
  std::vector<FreeVector> products;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const int d = homogeneous_degree(g);
    for (const auto& m : monos) {
      int w = 0;
      for (std::size_t i = 0; i < s; ++i) w += var_weight[i] * static_cast<int>(m[i]);
      if (d + w != target) continue;
      FreeVector p(g.ring_ptr(), g.rank());
      p.add_scaled(g, m, FieldElement::one(g.ring_ptr()->field));
      products.push_back(std::move(p));
    }
  }
  // coordinates indexed by (pos, monomial)
  std::map<std::pair<std::size_t, MultiIndex>, std::size_t> coord;
  auto index_of = [&](const ModuleTerm& t) {
    const auto key = std::make_pair(t.pos, t.mono);
    const auto it = coord.find(key);
    if (it != coord.end()) return it->second;
    const std::size_t idx = coord.size();
    coord.emplace(key, idx);
    return idx;
  };
  for (const auto& p : products) {
    for (const auto& t : p.terms()) index_of(t);
  }
  for (const auto& t : v.terms()) index_of(t);
  const FieldElement zero = FieldElement::zero(v.ring_ptr()->field);
  auto dense = [&](const FreeVector& p) {
    std::vector<FieldElement> row(coord.size(), zero);
    for (const auto& t : p.terms()) row[coord.at({t.pos, t.mono})] = t.coeff;
    return row;
  };
  std::vector<std::vector<FieldElement>> rows;
  for (const auto& p : products) rows.push_back(dense(p));
  const std::size_t base = plain_rank(rows);
  rows.push_back(dense(v));
  return plain_rank(rows) == base;
}

std::map<MultiIndex, Polynomial> taylor_coefficients(const Polynomial& f, unsigned max_order) {
  const RingPtr& r = f.ring_ptr();
  const std::size_t s = r->num_vars();
  std::vector<std::string> names = r->names;
  for (std::size_t i = 0; i < s; ++i) names.push_back("t_" + std::to_string(i + 1));
  const RingPtr big = make_ring(names, r->field);
  Polynomial shifted(big);
  for (const auto& term : f.terms()) {
    Polynomial prod = Polynomial::constant(big, term.coeff);
    for (std::size_t i = 0; i < s; ++i) {
      prod = prod * pow(Polynomial::variable(big, i) + Polynomial::variable(big, s + i), term.exponent[i]);
    }
    shifted += prod;
  }
  std::map<MultiIndex, std::vector<Polynomial::Term>> split;
  for (const auto& term : shifted.terms()) {
    std::vector<std::uint32_t> x(s), t(s);
    for (std::size_t i = 0; i < s; ++i) {
      x[i] = term.exponent[i];
      t[i] = term.exponent[s + i];
    }
    const MultiIndex gamma(t);
    if (gamma.degree() == 0 || gamma.degree() > max_order) continue;
    split[gamma].push_back({MultiIndex(x), term.coeff});
  }
  std::map<MultiIndex, Polynomial> out;
  for (auto& [gamma, terms] : split) out.emplace(gamma, Polynomial::from_terms(r, std::move(terms)));
  return out;
}

Polynomial cusp_parametrise(const Polynomial& p, const RingPtr& t_ring) {
  std::vector<Polynomial::Term> terms;
  for (const auto& t : p.terms()) {
    terms.push_back({MultiIndex{2 * t.exponent[0] + 3 * t.exponent[1]}, t.coeff});
  }
  return Polynomial::from_terms(t_ring, std::move(terms));
}

}  // namespace fixtures

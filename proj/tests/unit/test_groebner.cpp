#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "kahler/errors.hpp"

using namespace kahler;
using fixtures::poly;

namespace {

FreeVector vec(const std::vector<std::string>& comps, const RingPtr& r) {
  std::vector<Polynomial> ps;
  for (const auto& c : comps) ps.push_back(poly(c, r));
  return FreeVector::from_components(r, ps);
}

std::vector<Polynomial> polys(const std::vector<std::string>& texts, const RingPtr& r) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(poly(t, r));
  return out;
}

FreeVector as_vector(const Polynomial& p) { return FreeVector::from_components(p.ring_ptr(), {p}); }

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("the maximal ideal of the origin") {
    const RingPtr r = fixtures::ring(2);
    const GroebnerBasis gb = ideal_groebner(polys({"x1", "x2"}, r));
    CHECK(gb.reduced);
    CHECK(basis_polynomials(gb) == polys({"x1", "x2"}, r));
    CHECK(ideal_membership(poly("x1*x2 + x2^2", r), polys({"x1", "x2"}, r)));
    CHECK_FALSE(ideal_membership(poly("1", r), polys({"x1", "x2"}, r)));
    CHECK_FALSE(ideal_membership(poly("x1 + 3", r), polys({"x1", "x2"}, r)));
  }

  TEST_CASE("principal ideals") {
    const RingPtr r = fixtures::ring(2);
    const Polynomial f = fixtures::cusp(r);
    CHECK(basis_polynomials(ideal_groebner({f})) == std::vector<Polynomial>{f});
    CHECK(basis_polynomials(ideal_groebner({poly("2*x1 - 4", r)})) == polys({"x1 - 2"}, r));
    CHECK(ideal_membership(f * poly("x1 + x2^5", r), {f}));
    CHECK_FALSE(ideal_membership(poly("27*x1^6", r), {f}));
    // x1^3 = x2^2 in B, so x1^6 - x2^4 lies in <f>
    CHECK(ideal_membership(poly("x1^6 - x2^4", r), {f}));
  }

  TEST_CASE("a small ideal by hand") {
    // x2 * (x1^2 + x2) - x1 * (x1*x2) = x2^2 is the only new element
    const RingPtr r = fixtures::ring(2);
    const GroebnerBasis gb = ideal_groebner(polys({"x1^2 + x2", "x1*x2"}, r));
    CHECK(basis_polynomials(gb) == polys({"x1^2 + x2", "x1*x2", "x2^2"}, r));
    CHECK(ideal_membership(poly("x2^2", r), polys({"x1^2 + x2", "x1*x2"}, r)));
    CHECK_FALSE(ideal_membership(poly("x2", r), polys({"x1^2 + x2", "x1*x2"}, r)));
  }

  TEST_CASE("a submodule of A^2") {
    const RingPtr r = fixtures::ring(2);
    const std::vector<FreeVector> gens{vec({"x1", "x2"}, r), vec({"0", "x1^2"}, r)};
    const MembershipResult in = module_membership(vec({"x1^2", "x1*x2"}, r), gens, true);
    CHECK(in.member);
    CHECK(in.certificate_verified);
    REQUIRE(in.cofactors);
    CHECK(combine(*in.cofactors, gens) == vec({"x1^2", "x1*x2"}, r));
    const MembershipResult both = module_membership(vec({"x1^2", "x1*x2 + x1^3"}, r), gens, true);
    CHECK(both.member);
    CHECK(both.certificate_verified);
    // a*x1 = 0 forces a = 0, and x2 is not a multiple of x1^2
    CHECK_FALSE(module_membership(vec({"0", "x2"}, r), gens).member);
    CHECK_FALSE(module_membership(vec({"x1", "0"}, r), gens).member);
    CHECK(module_membership(vec({"0", "0"}, r), gens).member);
  }

  TEST_CASE("normal forms") {
    const RingPtr r = fixtures::ring(2);
    const std::vector<FreeVector> gens{vec({"x1", "x2"}, r), vec({"0", "x1^2"}, r)};
    BuchbergerOptions opts;
    opts.track_cofactors = true;
    const GroebnerBasis gb = buchberger(gens, opts);
    REQUIRE(gb.cofactors);
    for (std::size_t k = 0; k < gb.elements.size(); ++k) {
      CHECK(combine((*gb.cofactors)[k], gens) == gb.elements[k]);
      CHECK(normal_form(gb.elements[k], gb).remainder.is_zero());
    }
    const FreeVector v = vec({"x1^3 + x2", "x1*x2^2 + 1"}, r);
    const NormalFormResult nf = normal_form(v, gb);
    CHECK(normal_form(nf.remainder, gb).remainder == nf.remainder);
    REQUIRE(nf.quotient_in_inputs);
    FreeVector diff = v;
    diff -= nf.remainder;
    CHECK(combine(*nf.quotient_in_inputs, gens) == diff);
    // no term of the remainder is divisible by a leading term
    for (const auto& t : nf.remainder.terms()) {
      for (const auto& g : gb.elements) {
        const ModuleTerm& lt = g.leading();
        CHECK_FALSE((lt.pos == t.pos && lt.mono.divides(t.mono)));
      }
    }
  }

  TEST_CASE("determinism") {
    const RingPtr r = fixtures::ring(3);
    const std::vector<FreeVector> gens{vec({"x1*x2 - x3", "x2^2"}, r), vec({"x3^2", "x1 - x2"}, r),
                                       vec({"x1^2", "x2*x3 + 1"}, r)};
    const GroebnerBasis a = buchberger(gens);
    const GroebnerBasis b = buchberger(gens);
    CHECK(a.elements == b.elements);
    CHECK(a.stats.steps == b.stats.steps);
    CHECK(a.stats.pairs_considered == b.stats.pairs_considered);
  }

  TEST_CASE("budgets and ambient checks") {
    const RingPtr r = fixtures::ring(3);
    GroebnerBudget tiny;
    tiny.max_steps = 1;
    try {
      (void)ideal_groebner(polys({"x1^2 - x2*x3", "x2^2 - x1*x3", "x3^2 - x1*x2"}, r), tiny);
      FAIL("expected ResourceLimit");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ResourceLimit);
    }
    GroebnerBudget low;
    low.max_degree = 2;
    try {
      (void)ideal_groebner(polys({"x1^3 - x2^2", "x1*x2^2 - x3"}, r), low);
      FAIL("expected ResourceLimit");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ResourceLimit);
    }
    try {
      (void)buchberger({vec({"x1"}, r), vec({"x1", "x2"}, r)});
      FAIL("expected AmbientMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::AmbientMismatch);
    }
    const GroebnerBasis gb = ideal_groebner(polys({"x1"}, r));
    CHECK_THROWS_AS(normal_form(vec({"x1", "x2"}, r), gb), Error);
  }

  TEST_CASE("ideal membership agrees with the graded span oracle") {
    // homogeneous ideals in three variables: membership of a form of degree d
    // reduces to a span question on the degree-d piece
    std::mt19937_64 rng(5);
    for (std::uint64_t p : {0ULL, 2ULL, 3ULL, 5ULL}) {
      const RingPtr r = fixtures::ring(3, p);
      const auto forms = [&](std::uint32_t d, unsigned terms) {
        const auto monos = enumerate_indices(3, d, d);
        std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
        std::vector<Polynomial::Term> ts;
        for (unsigned i = 0; i < terms; ++i) ts.push_back({monos[pick(rng)], fixtures::random_element(rng, r, 3)});
        return Polynomial::from_terms(r, std::move(ts));
      };
      for (int trial = 0; trial < 10; ++trial) {
        const std::vector<Polynomial> gens{forms(2, 3), forms(2, 3), forms(3, 2)};
        std::vector<FreeVector> gv;
        for (const auto& g : gens) gv.push_back(as_vector(g));
        Polynomial target = forms(4, 4);
        if (trial % 2 == 0) target = forms(2, 2) * gens[0] + forms(1, 2) * gens[2] - forms(2, 2) * gens[1];
        const bool oracle = fixtures::graded_membership(as_vector(target), gv, {1, 1, 1}, {0});
        CAPTURE(p);
        CAPTURE(target.to_string());
        CHECK(ideal_membership(target, gens) == oracle);
      }
    }
  }

  TEST_CASE("a reduced basis is a fixed point") {
    std::mt19937_64 rng(17);
    for (std::uint64_t p : {0ULL, 2ULL, 3ULL, 5ULL}) {
      const RingPtr r = fixtures::ring(3, p);
      for (int trial = 0; trial < 8; ++trial) {
        std::vector<FreeVector> gens;
        for (int g = 0; g < 3; ++g) {
          gens.push_back(FreeVector::from_components(
              r, {fixtures::random_poly(rng, r, 2, 2), fixtures::random_poly(rng, r, 2, 2)}));
        }
        const GroebnerBasis gb = buchberger(gens);
        const GroebnerBasis again = buchberger(gb.elements);
        CAPTURE(p);
        CHECK(again.elements == gb.elements);
        for (const auto& g : gens) CHECK(normal_form(g, gb).remainder.is_zero());
      }
    }
  }
}

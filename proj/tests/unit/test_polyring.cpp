#include "doctest.h"
#include "fixtures.hpp"
#include "kahler/errors.hpp"

using namespace kahler;
using fixtures::num;
using fixtures::poly;

namespace {

std::vector<std::string> labels(const std::vector<MultiIndex>& v) {
  std::vector<std::string> out;
  for (const auto& a : v) out.push_back(a.to_string());
  return out;
}

ErrorCode parse_error_code(const std::string& text, const RingPtr& r) {
  try {
    (void)parse_polynomial(text, r);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for " << text);
  return ErrorCode::Usage;
}

}  // namespace

TEST_SUITE("polyring") {
  TEST_CASE("parsing the cusp") {
    const RingPtr r = fixtures::ring(2);
    const Polynomial f = poly("x1^3 - x2^2", r);
    REQUIRE(f.num_terms() == 2);
    CHECK(f.coefficient(MultiIndex{3, 0}) == num(1, r));
    CHECK(f.coefficient(MultiIndex{0, 2}) == num(-1, r));
    CHECK(f.to_string() == "x1^3 - x2^2");
  }

  TEST_CASE("zero and cone generators") {
    const RingPtr r2 = fixtures::ring(2);
    CHECK(poly("0", r2).is_zero());
    CHECK(poly("0", r2).num_terms() == 0);
    const RingPtr r4 = fixtures::ring(4);
    const Polynomial f1 = poly("x2^2 - x1*x3", r4);
    REQUIRE(f1.num_terms() == 2);
    CHECK(f1.coefficient(MultiIndex{0, 2, 0, 0}) == num(1, r4));
    CHECK(f1.coefficient(MultiIndex{1, 0, 1, 0}) == num(-1, r4));
  }

  TEST_CASE("grammar details") {
    const RingPtr r = fixtures::ring(2);
    CHECK(poly("-x1 + 2", r) == poly("2 - x1", r));
    CHECK(poly("(x1 + x2)^2", r) == poly("x1^2 + 2*x1*x2 + x2^2", r));
    CHECK(poly("1/2*x1 - 3/4", r).to_string() == "1/2*x1 - 3/4");
    CHECK(poly("  x1 *  x2  ", r) == poly("x1*x2", r));
    CHECK(poly("x1^0", r) == poly("1", r));
    CHECK(poly("-(x1 - x2)", r) == poly("x2 - x1", r));
  }

  TEST_CASE("parser errors carry positions") {
    const RingPtr r = fixtures::ring(2);
    CHECK(parse_error_code("x1 x2", r) == ErrorCode::SyntaxError);
    CHECK(parse_error_code("x1 +", r) == ErrorCode::SyntaxError);
    CHECK(parse_error_code("(x1", r) == ErrorCode::SyntaxError);
    CHECK(parse_error_code("x1^", r) == ErrorCode::SyntaxError);
    CHECK(parse_error_code("2x1", r) == ErrorCode::SyntaxError);
    CHECK(parse_error_code("y + 1", r) == ErrorCode::UnknownVariable);
    CHECK(parse_error_code("1/0*x1", r) == ErrorCode::InvalidLiteral);
    try {
      (void)parse_polynomial("x1 + * x2", r);
      FAIL("expected a syntax error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 5);
    }
  }

  TEST_CASE("ring arithmetic and evaluation") {
    const RingPtr r = fixtures::ring(2);
    const Polynomial f = fixtures::cusp(r);
    CHECK(f.evaluate(fixtures::point({1, 1}, r)).is_zero());
    CHECK(f.evaluate(fixtures::point({0, 0}, r)).is_zero());
    CHECK(f.evaluate(fixtures::point({4, 8}, r)).is_zero());
    CHECK(f.evaluate(fixtures::point({2, 1}, r)) == num(7, r));
    CHECK(poly("x1 + x2", r) * poly("x1 - x2", r) == poly("x1^2 - x2^2", r));
    CHECK(f.degree() == 3);
    CHECK(poly("0", r).degree() == -1);
    CHECK_THROWS_AS(f.evaluate(fixtures::point({1}, r)), Error);
    const RingPtr other = fixtures::ring(3);
    try {
      (void)(f + poly("x3", other));
      FAIL("expected MixedRing");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MixedRing);
    }
  }

  TEST_CASE("hasse derivative examples") {
    const RingPtr r = fixtures::ring(2);
    const Polynomial f = fixtures::cusp(r);
    CHECK(hasse_derivative(f, MultiIndex{2, 0}) == poly("3*x1", r));
    CHECK(hasse_derivative(f, MultiIndex{0, 0}) == f);
    CHECK(hasse_derivative(f, MultiIndex{1, 0}) == poly("3*x1^2", r));
    CHECK(hasse_derivative(f, MultiIndex{0, 2}) == poly("-1", r));
    CHECK(hasse_derivative(f, MultiIndex{1, 1}).is_zero());

    const RingPtr r2 = make_ring(std::vector<std::string>{"x"}, FieldSpec::prime(2));
    const Polynomial x4 = poly("x^4", r2);
    CHECK(hasse_derivative(x4, MultiIndex{2}).is_zero());
    // oracle: the t^2 coefficient of (x + t)^4 - x^4 over F_2
    const auto taylor = taylor_shift_oracle(x4, 2);
    CHECK(taylor.find(MultiIndex{2}) == taylor.end());
    CHECK(hasse_derivative(x4, MultiIndex{1}).is_zero());
    CHECK(hasse_derivative(x4, MultiIndex{4}) == poly("1", r2));
  }

  TEST_CASE("taylor oracle examples") {
    const RingPtr r = fixtures::ring(2);
    const auto t = taylor_shift_oracle(fixtures::cusp(r), 2);
    CHECK(t.size() == 4);
    CHECK(t.at(MultiIndex{1, 0}) == poly("3*x1^2", r));
    CHECK(t.at(MultiIndex{0, 1}) == poly("-2*x2", r));
    CHECK(t.at(MultiIndex{2, 0}) == poly("3*x1", r));
    CHECK(t.at(MultiIndex{0, 2}) == poly("-1", r));
    CHECK(t.find(MultiIndex{1, 1}) == t.end());
    CHECK(taylor_shift_oracle(poly("7", r), 3).empty());
    const auto u = taylor_shift_oracle(poly("x1*x2", r), 2);
    CHECK(u.size() == 3);
    CHECK(u.at(MultiIndex{1, 0}) == poly("x2", r));
    CHECK(u.at(MultiIndex{0, 1}) == poly("x1", r));
    CHECK(u.at(MultiIndex{1, 1}) == poly("1", r));
  }

  TEST_CASE("column order enumeration") {
    CHECK(labels(enumerate_indices(2, 1, 2)) ==
          std::vector<std::string>{"(1,0)", "(0,1)", "(2,0)", "(1,1)", "(0,2)"});
    CHECK(labels(enumerate_indices(2, 0, 0)) == std::vector<std::string>{"(0,0)"});
    const auto s4 = enumerate_indices(4, 1, 2);
    REQUIRE(s4.size() == 14);
    const auto all = labels(s4);
    const std::vector<std::string> block(all.begin() + 4, all.end());
    CHECK(block == std::vector<std::string>{"(2,0,0,0)", "(1,1,0,0)", "(0,2,0,0)", "(1,0,1,0)", "(0,1,1,0)",
                                            "(0,0,2,0)", "(1,0,0,1)", "(0,1,0,1)", "(0,0,1,1)", "(0,0,0,2)"});
    const auto lex = enumerate_indices(3, 2, 2, ColumnOrder::GradedLex);
    CHECK(labels(lex) == std::vector<std::string>{"(2,0,0)", "(1,1,0)", "(1,0,1)", "(0,2,0)", "(0,1,1)", "(0,0,2)"});
    CHECK(parse_column_order("grlex") == ColumnOrder::GradedLex);
    CHECK_THROWS_AS(parse_column_order("lex"), Error);
  }

  TEST_CASE("index counts match N-1 and M") {
    for (std::uint32_t s = 1; s <= 5; ++s) {
      for (std::uint32_t n = 1; n <= 4; ++n) {
        const auto d = DimensionSet::make(s, n);
        CHECK(enumerate_indices(s, 1, n).size() == d.N - 1);
        CHECK(enumerate_indices(s, 0, n - 1).size() == d.M);
      }
    }
  }

  TEST_CASE("round trip on a golden corpus") {
    const RingPtr r = fixtures::ring(4);
    for (const char* text : {"x1^3 - x2^2", "x2^2 - x1*x3", "-1/2*x1*x2^3 + 7/3*x4 - 5", "(x1 + 2*x2)^3 - x3*x4",
                             "0", "-1", "x4^10 + x1^10", "3*x1^2*x2 - 2/9*x2*x3^2 + x3"}) {
      CAPTURE(text);
      const Polynomial once = poly(text, r);
      CHECK(poly(once.to_string(), r) == once);
    }
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
      const RingPtr rp = fixtures::ring(3, p);
      const Polynomial once = poly("-x1^2 + 4*x2*x3 + 7", rp);
      CHECK(poly(once.to_string(), rp) == once);
    }
  }

  TEST_CASE("variable inference") {
    CHECK(infer_variables({"x1^3 - x2^2"}) == std::vector<std::string>{"x1", "x2"});
    CHECK(infer_variables({"x3 - x1"}) == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(infer_variables({"y^2 - x^3"}) == std::vector<std::string>{"x", "y"});
    CHECK(collect_identifiers("(1,1):3*x2;(0,2):-2*x1") == std::vector<std::string>{"x2", "x1"});
  }

  TEST_CASE("division, translation, permutation, truncation") {
    const RingPtr r = fixtures::ring(2);
    const Polynomial f = fixtures::cusp(r);
    const auto dr = divide(poly("27*x1^6", r), f);
    CHECK(!dr.remainder.is_zero());
    CHECK(dr.quotient * f + dr.remainder == poly("27*x1^6", r));
    CHECK(divide(f * poly("x1 + x2", r), f).remainder.is_zero());
    CHECK(exact_quotient(f * poly("x1 - 3", r), f) == poly("x1 - 3", r));
    CHECK_THROWS(exact_quotient(poly("x1", r), f));
    CHECK(translate(f, fixtures::point({1, 1}, r)) == poly("x1^3 + 3*x1^2 + 3*x1 - x2^2 - 2*x2", r));
    const std::vector<std::size_t> swap{1, 0};
    CHECK(permute_variables(f, swap) == poly("x2^3 - x1^2", r));
    CHECK(truncate(poly("x1^3 + x1*x2 + x2 + 1", r), 2) == poly("x1*x2 + x2 + 1", r));
  }
}

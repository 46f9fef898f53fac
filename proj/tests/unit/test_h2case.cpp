#include <doctest.h>

#include "qhpp/errors.hpp"
#include "qhpp/h2case.hpp"

using namespace qhpp;

namespace {

PolySystem sys(const std::string& p, const std::string& q) { return {parse_poly(p), parse_poly(q)}; }

}  // namespace

TEST_CASE("case labels count projective directions") {
  // G = x Q - y P with three, two and one real directions.
  CHECK(h2_case(sys("x^2", "y^2")).label == "(i)");
  CHECK(h2_case(sys("x^2 + y^2", "x*y + y^2")).label == "(ii)");
  auto one = h2_case(sys("x^2 + y^2", "x*y"));
  CHECK(one.label == "(iii)");
  CHECK(one.directions == 1);
  auto c14 = h2_case(sys("2*y^5 + 3*x*y^3 + 4*x^2*y", "-3*y^4 - 4*x*y^2 - 5*x^2"));
  CHECK(c14.family == "X_011");
  CHECK(c14.label == "(iii)");
  CHECK(c14.directions == 1);
}

TEST_CASE("normal form coefficients at u0 = 0") {
  // P = c20 x^2 + c11 xy + c02 y^2, Q = d20 x^2 + d11 xy + d02 y^2 with d20 = 0.
  auto c = h2_case(sys("2*x^2 + 3*x*y + 5*y^2", "7*x*y + 11*y^2"));
  REQUIRE(c.normal_form.alpha11.exact);
  CHECK(*c.normal_form.alpha11.exact == 2);
  CHECK(*c.normal_form.alpha12.exact == 3);
  CHECK(*c.normal_form.alpha22.exact == 5);
  CHECK(*c.normal_form.beta12.exact == 7);
  CHECK(*c.normal_form.beta22.exact == 11);
  CHECK(c.infinity_branch == "unique");
}

TEST_CASE("fulfils branch and the type of I1") {
  // alpha22 = 0: (2 a12 - b22) b22 decides saddle or node.
  auto saddle = h2_case(sys("x^2 + 2*x*y", "x*y + y^2"));
  CHECK(saddle.infinity_branch == "fulfils");
  CHECK(saddle.i1_type == "saddle");
  auto node = h2_case(sys("x^2 + x*y", "x*y + 3*y^2"));
  CHECK(node.infinity_branch == "fulfils");
  CHECK(node.i1_type == "node");
  auto none = h2_case(sys("x^2 + x*y", "x*y + 2*y^2"));
  CHECK(none.i1_type == "none");
}

TEST_CASE("degenerate quadratic targets") {
  CHECK_THROWS_AS(h2_case(sys("x^2 + x*y", "x*y")), CommonFactorError);
  CHECK_THROWS_AS(h2_case(sys("x^3", "y^3")), PreconditionError);
}

TEST_CASE("distinct codes per case") {
  auto codes = h2_case_codes();
  CHECK(codes.at("(i)").size() == 5);
  CHECK(codes.at("(ii)").size() == 4);
  CHECK(codes.at("(iii)").size() == 2);
  // Figure sets of the classification: at least 3, 2 and 2 codes.
  CHECK(codes.at("(i)").size() >= 3);
  CHECK(codes.at("(ii)").size() >= 2);
  CHECK(codes.at("(iii)").size() >= 2);
}

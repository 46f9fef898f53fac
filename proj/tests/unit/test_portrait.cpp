#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qhpp/portrait.hpp"
#include "support.hpp"

using namespace qhpp;

namespace {

PolySystem sys(const std::string& p, const std::string& q) { return {parse_poly(p), parse_poly(q)}; }

int winding(const PolySystem& s) {
  const int steps = 4000;
  double total = 0.0, prev = 0.0;
  for (int i = 0; i <= steps; ++i) {
    double th = 2 * std::numbers::pi * i / steps;
    double a = std::atan2(s.q.eval(std::cos(th), std::sin(th)), s.p.eval(std::cos(th), std::sin(th)));
    if (i > 0) total += std::remainder(a - prev, 2 * std::numbers::pi);
    prev = a;
  }
  return static_cast<int>(std::lround(total / (2 * std::numbers::pi)));
}

}  // namespace

TEST_CASE("x' = x^3, y' = y^3 has eight parabolic sectors") {
  auto code = portrait_of(sys("x^3", "y^3"));
  CHECK(code.origin_kind == "sectors");
  CHECK(code.rays.size() == 8);
  CHECK(code.count(SectorType::Parabolic) == 8);
  CHECK(code.count(SectorType::Hyperbolic) == 0);
  CHECK(code.count(SectorType::Elliptic) == 0);
  CHECK(code.index == 1);
}

TEST_CASE("center code") {
  auto code = portrait_of(sys("-y^3", "x^3"));
  CHECK(code.origin_kind == "center");
  CHECK(code.rays.empty());
  CHECK(code.index == 1);
  CHECK(code.key() == "O[center] I[none]");
}

TEST_CASE("linear saddle and node") {
  auto saddle = portrait_of(sys("x", "-y"));
  CHECK(saddle.index == -1);
  CHECK(saddle.count(SectorType::Hyperbolic) == 4);
  CHECK(portrait_of(sys("x", "2*y")).index == 1);
}

TEST_CASE("index agrees with the winding number") {
  std::mt19937 rng(53);
  for (int k = 0; k < 30; ++k) {
    int n = 2 + k % 2;
    std::vector<Rat> roots;
    for (int i = 0; i <= n; ++i) roots.push_back(testing::ratio(2 * i - 1 - k % 3, 1 + k % 2));
    PolySystem s = testing::homogeneous_with_roots(n, roots, rng);
    auto code = portrait_of(s);
    CHECK(code.index == winding(s));
    // Bendixson: e - h = 2 (index - 1).
    CHECK(code.count(SectorType::Elliptic) - code.count(SectorType::Hyperbolic) == 2 * (code.index - 1));
  }
}

TEST_CASE("canonical key is invariant under mirror images and time reversal") {
  std::mt19937 rng(59);
  for (int k = 0; k < 15; ++k) {
    PolySystem s = testing::homogeneous_with_roots(3, {Rat(-2), Rat(-1, 3), Rat(1), Rat(4)}, rng);
    auto key = portrait_of(s).key();
    PolySystem reversed{-s.p, -s.q};
    PolySystem mirrored{s.p.linear_substitute(Rat(1), Rat(0), Rat(0), Rat(-1)),
                        -s.q.linear_substitute(Rat(1), Rat(0), Rat(0), Rat(-1))};
    CHECK(portrait_of(reversed).key() == key);
    CHECK(portrait_of(mirrored).key() == key);
    CHECK(portrait_of(s.swap_xy()).key() == key);
  }
}

TEST_CASE("quasi-homogeneous codes close under the weight symmetry") {
  std::mt19937 rng(61);
  for (auto& e : quintic_catalog()) {
    PolySystem s = testing::random_member(e, rng);
    auto code = portrait_of(s);
    CHECK_MESSAGE(code.plane == "quasi-homogeneous", e.name);
    int e_ = code.count(SectorType::Elliptic), h = code.count(SectorType::Hyperbolic);
    CHECK_MESSAGE(e_ - h == 2 * (code.index - 1), e.name);
    CHECK(code.symmetry.kind == symmetry_type(e.weight).kind);
  }
}

TEST_CASE("infinity ring of x' = x^3, y' = y^3") {
  auto ring = infinity_ring(sys("x^3", "y^3"));
  CHECK_FALSE(ring.fulfils);
  CHECK(ring.points.size() == 8);
  CHECK(infinity_ring(sys("x^2", "x*y")).fulfils);
}

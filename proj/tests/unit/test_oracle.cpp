#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qhpp/errors.hpp"
#include "qhpp/oracle.hpp"

using namespace qhpp;

namespace {

PolySystem sys(const std::string& p, const std::string& q) { return {parse_poly(p), parse_poly(q)}; }

}  // namespace

TEST_CASE("window parsing") {
  Window w = parse_window("-2:3,-0.5:0.5");
  CHECK(w.xmin == -2);
  CHECK(w.xmax == 3);
  CHECK(w.ymin == -0.5);
  CHECK(w.ymax == 0.5);
  CHECK_THROWS_AS(parse_window("1:0,0:1"), BadWindowError);
  CHECK_THROWS_AS(parse_window("0:1,1:1"), BadWindowError);
  CHECK_THROWS_AS(parse_window("0:1"), BadWindowError);
  CHECK_THROWS_AS(parse_window("a:1,0:1"), BadWindowError);
}

TEST_CASE("center orbit stays on the level set") {
  PolySystem s = sys("-y^3", "x^3");
  IntegrateOptions opt;
  opt.tmax = 50;
  opt.stop_on_return = true;
  auto t = integrate(s, {1, 0}, {-2, 2, -2, 2}, opt);
  CHECK(t.termination == Termination::ReturnedToStart);
  double drift = 0;
  for (auto& p : t.samples) drift = std::max(drift, std::abs(std::pow(p.x, 4) + std::pow(p.y, 4) - 1));
  CHECK(drift < 1e-6);
  auto& last = t.samples.back();
  CHECK(std::hypot(last.x - 1, last.y) < 1e-4);
}

TEST_CASE("x' = x^3, y' = y^3 escapes monotonically") {
  IntegrateOptions opt;
  auto t = integrate(sys("x^3", "y^3"), {0.1, 0.2}, {-1, 1, -1, 1}, opt);
  CHECK(t.termination == Termination::EscapedWindow);
  for (std::size_t i = 1; i < t.samples.size(); ++i) {
    CHECK(t.samples[i].x >= t.samples[i - 1].x);
    CHECK(t.samples[i].y >= t.samples[i - 1].y);
    CHECK(t.samples[i].t > t.samples[i - 1].t);
  }
}

TEST_CASE("equilibrium start") {
  auto t = integrate(sys("x^3", "y^3"), {0, 0}, {-1, 1, -1, 1}, IntegrateOptions{});
  CHECK(t.samples.size() == 1);
}

TEST_CASE("tolerance range") {
  IntegrateOptions opt;
  opt.tol = 1e-2;
  CHECK_THROWS(integrate(sys("x", "y"), {0.1, 0.1}, {-1, 1, -1, 1}, opt));
  opt.tol = 1e-13;
  CHECK_THROWS(integrate(sys("x", "y"), {0.1, 0.1}, {-1, 1, -1, 1}, opt));
}

TEST_CASE("backward integration runs in negative time") {
  IntegrateOptions opt;
  opt.direction = -1;
  auto t = integrate(sys("x", "y"), {0.5, 0.5}, {-1, 1, -1, 1}, opt);
  CHECK(t.termination == Termination::ApproachedOrigin);
  CHECK(t.samples.back().t < 0);
}

TEST_CASE("sector probes on x' = x^3, y' = y^3") {
  PolySystem s = sys("x^3", "y^3");
  auto r = sector_probe(s, 0.0, 0.05);
  CHECK(r.ray == "leave");
  REQUIRE(r.local_type);
  CHECK(*r.local_type == LocalType::Saddle);
  auto d = sector_probe(s, std::numbers::pi / 4, 0.05);
  CHECK(d.ray == "leave");
  REQUIRE(d.local_type);
  CHECK(*d.local_type == LocalType::Node);
}

TEST_CASE("probes on a center pass by") {
  PolySystem s = sys("-y^3", "x^3");
  for (double a : {0.0, 0.7, 2.0}) CHECK(sector_probe(s, a, 0.05).ray == "pass");
}

TEST_CASE("streamlines and exports") {
  PolySystem s = sys("-y^3", "x^3");
  Window w{-1, 1, -1, 1};
  CHECK(streamlines(s, w, 0, 1e-8).empty());
  CHECK(to_csv({}) == "t,x,y\n");
  auto ts = streamlines(s, w, 4, 1e-8);
  CHECK(ts.size() == 4);
  std::string csv = to_csv(ts);
  CHECK(csv.rfind("t,x,y\n", 0) == 0);
  std::size_t blanks = 0;
  for (std::size_t i = 1; i < csv.size(); ++i) blanks += csv[i] == '\n' && csv[i - 1] == '\n';
  CHECK(blanks == 3);
  std::string svg = to_svg(ts, w);
  CHECK(svg.find("viewBox=\"-1 -1 2 2\"") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(to_csv(streamlines(s, w, 4, 1e-8)) == csv);
  CHECK_THROWS(streamlines(s, w, 10001, 1e-8));
}

TEST_CASE("mirror-symmetric field gives a mirror-symmetric streamline set") {
  // x' = y^2 - x, y' = x y is invariant under (x, y) -> (x, -y).
  PolySystem s = sys("y^2 - x", "x*y");
  Window w{-1, 1, -1, 1};
  auto ts = streamlines(s, w, 9, 1e-10, 5.0);
  REQUIRE(ts.size() == 9);
  IntegrateOptions fw;
  fw.tmax = 5.0;
  for (auto& t : ts) {
    // The trajectory of the reflected seed is the reflected trajectory.
    Point seed{t.samples.front().x, t.samples.front().y};
    auto own = integrate(s, seed, w, fw);
    auto img = integrate(s, reflect(seed, SymmetryKind::XAxis), w, fw);
    CHECK(hausdorff(reflect(own, SymmetryKind::XAxis), img) < 1e-6);
  }
}

TEST_CASE("hausdorff distance") {
  Trajectory a{{{0, 0, 0}, {1, 1, 0}}, Termination::MaxTime};
  Trajectory b{{{0, 0, 0.5}, {1, 1, 0.5}}, Termination::MaxTime};
  CHECK(hausdorff(a, b) == doctest::Approx(0.5));
  CHECK(hausdorff(a, a) == 0.0);
}

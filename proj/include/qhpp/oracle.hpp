#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhpp/homoganalysis.hpp"
#include "qhpp/homogenize.hpp"
#include "qhpp/polyparse.hpp"

namespace qhpp {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Window {
  double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;
  bool contains(const Point& p) const { return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax; }
  std::string to_string() const;
};

// "xmin:xmax,ymin:ymax"; throws BadWindowError.
Window parse_window(const std::string& text);

enum class Termination { MaxTime, EscapedWindow, ApproachedOrigin, StepUnderflow, MaxSteps, ReturnedToStart };
std::string to_string(Termination t);

struct Sample {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
};

struct Trajectory {
  std::vector<Sample> samples;
  Termination termination = Termination::MaxTime;
};

// Double-precision copy of a system for fast evaluation.
class FastField {
 public:
  explicit FastField(const PolySystem& s);
  Point operator()(const Point& p) const;

 private:
  struct Term {
    int i, j;
    double c;
  };
  std::vector<Term> p_, q_;
};

struct IntegrateOptions {
  double tol = 1e-10;
  double abs_tol = 0.0;           // 0: same as tol
  double tmax = 100.0;
  int direction = 1;             // +1 forward, -1 backward in time
  long max_steps = 200000;
  double max_step = 0.0;         // 0: unbounded
  double origin_radius = 1e-8;   // approached-origin cutoff
  bool stop_on_return = false;   // stop after one turn around a closed orbit
};

// Dormand-Prince 5(4) with local error control; deterministic.
Trajectory integrate(const PolySystem& s, const Point& start, const Window& w, const IntegrateOptions& opt);
Trajectory integrate(const FastField& f, const Point& start, const Window& w, const IntegrateOptions& opt);

// Behaviour of orbits near the ray at `angle`.
struct ProbeResult {
  double angle = 0.0;
  double radius = 0.0;
  std::string ray;     // "approach", "leave", "pass", "inconclusive"
  int side_ccw = 0;    // +1 neighbours converge to the ray towards the origin, -1 they sweep away
  int side_cw = 0;
  std::optional<LocalType> local_type;  // inferred blow-up type; empty if inconclusive or "pass"
  std::string note;
};

ProbeResult sector_probe(const PolySystem& s, double angle, double radius, double tol = 1e-10);

// Probe result compared with a DirectionReport; re-probes at radius 0.01 when inconclusive.
struct ProbeAgreement {
  ProbeResult probe;
  bool agrees = false;
  bool inconclusive = false;
};
ProbeAgreement probe_direction(const PolySystem& s, const DirectionReport& d, double radius, double tol);

// n seeds on a uniform grid, each integrated forward and backward within the window.
std::vector<Trajectory> streamlines(const PolySystem& s, const Window& w, int n, double tol, double tmax = 20.0);

std::string to_csv(const std::vector<Trajectory>& ts);
std::string to_svg(const std::vector<Trajectory>& ts, const Window& w);

// Symmetric Hausdorff distance between the polylines through the samples.
double hausdorff(const Trajectory& a, const Trajectory& b);

// Image of a trajectory under the mirror of a symmetry kind.
Trajectory reflect(const Trajectory& t, SymmetryKind k);
Point reflect(const Point& p, SymmetryKind k);

}  // namespace qhpp

#include "qhpp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <regex>
#include <sstream>

#include "qhpp/errors.hpp"

namespace qhpp {

std::string Window::to_string() const {
  std::ostringstream os;
  os << xmin << ":" << xmax << "," << ymin << ":" << ymax;
  return os.str();
}

Window parse_window(const std::string& text) {
  static const std::regex re(R"(^\s*([^:,\s]+)\s*:\s*([^:,\s]+)\s*,\s*([^:,\s]+)\s*:\s*([^:,\s]+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw BadWindowError("window must look like xmin:xmax,ymin:ymax");
  double v[4];
  for (int k = 0; k < 4; ++k) {
    std::size_t used = 0;
    std::string tok = m[k + 1].str();
    try {
      v[k] = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw BadWindowError("not a number in window: " + tok);
    }
    if (used != tok.size() || !std::isfinite(v[k])) throw BadWindowError("not a number in window: " + tok);
  }
  if (!(v[0] < v[1]) || !(v[2] < v[3])) throw BadWindowError("window is empty or degenerate");
  return {v[0], v[1], v[2], v[3]};
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::MaxTime: return "max-time";
    case Termination::EscapedWindow: return "escaped-window";
    case Termination::ApproachedOrigin: return "approached-origin";
    case Termination::StepUnderflow: return "step-underflow";
    case Termination::MaxSteps: return "max-steps";
    case Termination::ReturnedToStart: return "returned-to-start";
  }
  return "?";
}

FastField::FastField(const PolySystem& s) {
  for (auto& [e, c] : s.p.terms()) p_.push_back({e.first, e.second, to_double(c)});
  for (auto& [e, c] : s.q.terms()) q_.push_back({e.first, e.second, to_double(c)});
}

namespace {

double ipow(double b, int e) {
  double r = 1.0;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(double c, Point a) { return {c * a.x, c * a.y}; }
double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point a) { return std::hypot(a.x, a.y); }

// Cubic Hermite interpolant on [0, 1] of a step of length h.
Point hermite(Point y0, Point f0, Point y1, Point f1, double h, double s) {
  double h00 = 2 * s * s * s - 3 * s * s + 1, h10 = s * s * s - 2 * s * s + s;
  double h01 = -2 * s * s * s + 3 * s * s, h11 = s * s * s - s * s;
  return h00 * y0 + (h10 * h) * f0 + h01 * y1 + (h11 * h) * f1;
}

}  // namespace

Point FastField::operator()(const Point& p) const {
  Point v;
  for (auto& t : p_) v.x += t.c * ipow(p.x, t.i) * ipow(p.y, t.j);
  for (auto& t : q_) v.y += t.c * ipow(p.x, t.i) * ipow(p.y, t.j);
  return v;
}

Trajectory integrate(const PolySystem& s, const Point& start, const Window& w, const IntegrateOptions& opt) {
  return integrate(FastField(s), start, w, opt);
}

Trajectory integrate(const FastField& field, const Point& start, const Window& w, const IntegrateOptions& opt) {
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;

  if (!(opt.tol >= 1e-12 && opt.tol <= 1e-3)) throw PreconditionError("tol must lie in [1e-12, 1e-3]");
  const double dir = opt.direction >= 0 ? 1.0 : -1.0;
  auto f = [&](Point p) { return dir * field(p); };

  Trajectory tr;
  Point y = start;
  double t = 0.0;
  tr.samples.push_back({0.0, y.x, y.y});
  if (norm(y) < opt.origin_radius) {
    tr.termination = Termination::ApproachedOrigin;
    return tr;
  }
  if (!w.contains(y)) {
    tr.termination = Termination::EscapedWindow;
    return tr;
  }
  Point k1 = f(y);
  if (k1.x == 0.0 && k1.y == 0.0) {
    tr.termination = Termination::MaxTime;
    return tr;
  }
  const double tol = opt.tol;
  const double atol = opt.abs_tol > 0 ? opt.abs_tol : tol;
  auto scale = [&](double a, double b) { return atol + tol * std::max(std::abs(a), std::abs(b)); };
  double h;
  {
    double d0 = std::hypot(y.x / scale(y.x, 0), y.y / scale(y.y, 0));
    double d1 = std::hypot(k1.x / scale(y.x, 0), k1.y / scale(y.y, 0));
    h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h = std::min(h, opt.tmax);
    if (opt.max_step > 0) h = std::min(h, opt.max_step);
  }
  const Point p0 = start, v0 = k1;
  bool left_start = false;
  double far = 0.0;

  for (long step = 0;; ++step) {
    if (step >= opt.max_steps) {
      tr.termination = Termination::MaxSteps;
      return tr;
    }
    if (t >= opt.tmax) {
      tr.termination = Termination::MaxTime;
      return tr;
    }
    h = std::min(h, opt.tmax - t);
    if (h < 16 * std::numeric_limits<double>::epsilon() * std::max(1.0, t)) {
      tr.termination = Termination::StepUnderflow;
      return tr;
    }
    Point k2 = f(y + (h * a21) * k1);
    Point k3 = f(y + h * (a31 * k1 + a32 * k2));
    Point k4 = f(y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    Point k5 = f(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    Point k6 = f(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    Point y1 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    Point k7 = f(y1);
    Point e = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    double ex = e.x / scale(y.x, y1.x), ey = e.y / scale(y.y, y1.y);
    double err = std::sqrt((ex * ex + ey * ey) / 2);
    if (!std::isfinite(err) || !std::isfinite(y1.x) || !std::isfinite(y1.y)) {
      h *= 0.2;
      continue;
    }
    if (err > 1.0) {
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
      continue;
    }
    // Accepted step from (t, y) to (t + h, y1).
    if (!w.contains(y1)) {
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        (w.contains(hermite(y, k1, y1, k7, h, mid)) ? lo : hi) = mid;
      }
      Point pe = hermite(y, k1, y1, k7, h, lo);
      tr.samples.push_back({dir * (t + lo * h), pe.x, pe.y});
      tr.termination = Termination::EscapedWindow;
      return tr;
    }
    if (opt.stop_on_return) {
      double g0 = dot(y - p0, v0), g1 = dot(y1 - p0, v0);
      far = std::max(far, norm(y1 - p0));
      if (g1 < 0) left_start = true;
      if (left_start && g0 < 0 && g1 >= 0 && norm(y1 - p0) < 0.1 * far) {
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 60; ++it) {
          double mid = 0.5 * (lo + hi);
          (dot(hermite(y, k1, y1, k7, h, mid) - p0, v0) < 0 ? lo : hi) = mid;
        }
        Point pe = hermite(y, k1, y1, k7, h, hi);
        tr.samples.push_back({dir * (t + hi * h), pe.x, pe.y});
        tr.termination = Termination::ReturnedToStart;
        return tr;
      }
    }
    t += h;
    y = y1;
    k1 = k7;
    tr.samples.push_back({dir * t, y.x, y.y});
    if (norm(y) < opt.origin_radius) {
      tr.termination = Termination::ApproachedOrigin;
      return tr;
    }
    double fac = err == 0.0 ? 5.0 : std::min(5.0, std::max(0.2, 0.9 * std::pow(err, -0.2)));
    h *= fac;
    if (opt.max_step > 0) h = std::min(h, opt.max_step);
  }
}

namespace {

struct SideOutcome {
  int verdict = 0;  // +1 converge, -1 diverge, 0 inconclusive
  std::string note;
};

// Follow a seed towards the origin (time direction sigma) and watch its angle to the ray.
SideOutcome follow_side(const FastField& f, double theta0, double r0, double delta, int sigma, double tol) {
  Point seed{r0 * std::cos(theta0 + delta), r0 * std::sin(theta0 + delta)};
  const double r_end = r0 * 1e-6;
  IntegrateOptions opt;
  opt.tol = tol;
  opt.abs_tol = tol * r_end;
  opt.origin_radius = r_end / 2;
  opt.tmax = 1e300;
  opt.direction = sigma;
  opt.max_steps = 200000;
  Window big{-4 * r0, 4 * r0, -4 * r0, 4 * r0};
  double phi = delta;
  const double d0 = std::abs(delta);
  Trajectory tr = integrate(f, seed, big, opt);
  SideOutcome out;
  double prev = theta0 + delta;
  for (std::size_t k = 1; k < tr.samples.size(); ++k) {
    const Sample& s = tr.samples[k];
    double th = std::atan2(s.y, s.x);
    double d = std::remainder(th - prev, 2 * std::numbers::pi);
    prev += d;
    phi = prev - theta0;
    double r = std::hypot(s.x, s.y);
    if (std::abs(phi) >= 5 * d0) {
      out.verdict = -1;
      return out;
    }
    // Close enough to the ray that rounding decides the side.
    if (std::abs(phi) < 1e-3 * d0) {
      out.verdict = 1;
      return out;
    }
    if (r <= r_end) break;
    if (r > 3 * r0) {
      out.verdict = -1;
      return out;
    }
  }
  if (tr.termination == Termination::StepUnderflow) {
    out.note = "step-underflow";
    return out;
  }
  if (std::abs(phi) < 0.9 * d0)
    out.verdict = 1;
  else if (std::abs(phi) > 1.1 * d0)
    out.verdict = -1;
  else
    out.note = "angle change below threshold";
  return out;
}

}  // namespace

ProbeResult sector_probe(const PolySystem& s, double angle, double radius, double tol) {
  FastField f(s);
  ProbeResult res;
  res.angle = angle;
  res.radius = radius;
  Point e{std::cos(angle), std::sin(angle)};
  Point seed = radius * e;
  Point v = f(seed);
  double rdot = dot(v, e);
  int sigma = rdot > 0 ? -1 : 1;  // time direction moving towards the origin
  // The ray is invariant only when the field is radial on it.
  double speed = std::hypot(v.x, v.y);
  if (speed == 0.0) {
    res.ray = "inconclusive";
    res.note = "equilibrium on the ray";
    return res;
  }
  if (std::abs(cross(e, v)) > 1e-9 * speed) {
    res.ray = "pass";
    return res;
  }
  res.ray = rdot > 0 ? "leave" : "approach";
  const double delta = 0.02;
  SideOutcome ccw = follow_side(f, angle, radius, delta, sigma, tol);
  SideOutcome cw = follow_side(f, angle, radius, -delta, sigma, tol);
  res.side_ccw = ccw.verdict;
  res.side_cw = cw.verdict;
  res.note = ccw.note.empty() ? cw.note : ccw.note;
  if (ccw.verdict == 0 || cw.verdict == 0) return res;
  if (ccw.verdict > 0 && cw.verdict > 0)
    res.local_type = LocalType::Node;
  else if (ccw.verdict < 0 && cw.verdict < 0)
    res.local_type = LocalType::Saddle;
  else
    res.local_type = LocalType::SaddleNode;
  return res;
}

ProbeAgreement probe_direction(const PolySystem& s, const DirectionReport& d, double radius, double tol) {
  ProbeAgreement a;
  for (double r : {radius, 0.01}) {
    a.probe = sector_probe(s, d.angle(), r, tol);
    a.inconclusive = !a.probe.local_type.has_value() || a.probe.ray == "inconclusive";
    if (!a.inconclusive) break;
  }
  if (a.inconclusive) return a;
  bool flow_ok = (a.probe.ray == "leave") == (d.flow_sign == FlowSign::Outgoing);
  a.agrees = flow_ok && *a.probe.local_type == d.local_type_blowup;
  return a;
}

std::vector<Trajectory> streamlines(const PolySystem& s, const Window& w, int n, double tol, double tmax) {
  if (n < 0 || n > 10000) throw PreconditionError("streamline count must lie in [0, 10000]");
  std::vector<Trajectory> out;
  if (n == 0) return out;
  FastField f(s);
  int k = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  double wx = w.xmax - w.xmin, wy = w.ymax - w.ymin;
  IntegrateOptions opt;
  opt.tol = tol;
  opt.tmax = tmax;
  opt.max_steps = 20000;
  opt.max_step = std::hypot(wx, wy) / 200;
  for (int idx = 0; idx < n; ++idx) {
    int i = idx % k, j = idx / k;
    Point seed{w.xmin + (i + 0.5) * wx / k, w.ymin + (j + 0.5) * wy / k};
    opt.direction = -1;
    Trajectory back = integrate(f, seed, w, opt);
    opt.direction = 1;
    Trajectory fwd = integrate(f, seed, w, opt);
    Trajectory tr;
    tr.samples.assign(back.samples.rbegin(), back.samples.rend());
    tr.samples.insert(tr.samples.end(), fwd.samples.begin() + 1, fwd.samples.end());
    tr.termination = fwd.termination;
    out.push_back(std::move(tr));
  }
  return out;
}

std::string to_csv(const std::vector<Trajectory>& ts) {
  std::string out = "t,x,y\n";
  char buf[96];
  for (std::size_t k = 0; k < ts.size(); ++k) {
    if (k > 0) out += "\n";
    for (auto& s : ts[k].samples) {
      std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g\n", s.t, s.x, s.y);
      out += buf;
    }
  }
  return out;
}

std::string to_svg(const std::vector<Trajectory>& ts, const Window& w) {
  char buf[128];
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  std::snprintf(buf, sizeof buf, "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.10g %.10g %.10g %.10g\">\n",
                w.xmin, w.ymin, w.xmax - w.xmin, w.ymax - w.ymin);
  out += buf;
  // Flip y so that the picture reads in the usual orientation.
  std::snprintf(buf, sizeof buf, "<g transform=\"matrix(1 0 0 -1 0 %.10g)\">\n", w.ymin + w.ymax);
  out += buf;
  for (auto& t : ts) {
    out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\" points=\"";
    for (std::size_t k = 0; k < t.samples.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%s%.8g,%.8g", k ? " " : "", t.samples[k].x, t.samples[k].y);
      out += buf;
    }
    out += "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

namespace {

double point_segment(Point p, Point a, Point b) {
  Point ab = b - a;
  double l2 = dot(ab, ab);
  double s = l2 > 0 ? std::clamp(dot(p - a, ab) / l2, 0.0, 1.0) : 0.0;
  return norm(p - (a + s * ab));
}

double directed(const Trajectory& a, const Trajectory& b) {
  double worst = 0.0;
  for (auto& s : a.samples) {
    Point p{s.x, s.y};
    double best = std::numeric_limits<double>::infinity();
    if (b.samples.size() == 1) best = norm(p - Point{b.samples[0].x, b.samples[0].y});
    for (std::size_t k = 0; k + 1 < b.samples.size(); ++k)
      best = std::min(best, point_segment(p, {b.samples[k].x, b.samples[k].y}, {b.samples[k + 1].x, b.samples[k + 1].y}));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

double hausdorff(const Trajectory& a, const Trajectory& b) {
  if (a.samples.empty() || b.samples.empty()) return std::numeric_limits<double>::infinity();
  return std::max(directed(a, b), directed(b, a));
}

Point reflect(const Point& p, SymmetryKind k) {
  switch (k) {
    case SymmetryKind::XAxis: return {p.x, -p.y};
    case SymmetryKind::YAxis: return {-p.x, p.y};
    case SymmetryKind::Origin: return {-p.x, -p.y};
    case SymmetryKind::None: return p;
  }
  return p;
}

Trajectory reflect(const Trajectory& t, SymmetryKind k) {
  Trajectory r = t;
  for (auto& s : r.samples) {
    Point p = reflect(Point{s.x, s.y}, k);
    s.x = p.x;
    s.y = p.y;
  }
  return r;
}

}  // namespace qhpp

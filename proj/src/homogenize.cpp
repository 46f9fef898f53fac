#include "qhpp/homogenize.hpp"

#include <algorithm>
#include <cmath>

#include "qhpp/errors.hpp"

namespace qhpp {

std::string to_string(Chart c) {
  switch (c) {
    case Chart::FullPlane: return "full-plane";
    case Chart::XPositive: return "x>0";
    case Chart::YPositive: return "y>0";
  }
  return "?";
}

std::string to_string(SymmetryKind k) {
  switch (k) {
    case SymmetryKind::None: return "none";
    case SymmetryKind::XAxis: return "x-axis";
    case SymmetryKind::YAxis: return "y-axis";
    case SymmetryKind::Origin: return "origin";
  }
  return "?";
}

std::string to_string(TargetClass c) {
  switch (c) {
    case TargetClass::H3: return "H3";
    case TargetClass::H2: return "H2";
    case TargetClass::H1: return "H1";
    case TargetClass::H0: return "H0";
    case TargetClass::Other: return "other";
  }
  return "?";
}

std::string Symmetry::to_string() const {
  return qhpp::to_string(kind) + (time_reversed ? " (time reversed)" : "");
}

std::string RatMonomial::to_string(const std::string& x, const std::string& y) const {
  std::string out;
  if (a != 0) out += x + "^(" + qhpp::to_string(a) + ")";
  if (b != 0) {
    if (!out.empty()) out += "*";
    out += y + "^(" + qhpp::to_string(b) + ")";
  }
  return out.empty() ? "1" : out;
}

namespace {

int pow_sign(int s, const Rat& e) {
  if (s > 0) return 1;
  return e.get_num() % 2 == 0 ? 1 : -1;
}

bool odd_den(const Rat& e) { return e.get_den() % 2 != 0; }

}  // namespace

std::optional<int> TransformRecord::time_sign(int sx, int sy) const {
  if (chart == Chart::XPositive && sx < 0) return std::nullopt;
  if (chart == Chart::YPositive && sy < 0) return std::nullopt;
  if ((sx < 0 && !odd_den(time_factor.a)) || (sy < 0 && !odd_den(time_factor.b))) return std::nullopt;
  return pow_sign(sx, time_factor.a) * pow_sign(sy, time_factor.b);
}

Symmetry symmetry_type(const WeightVector& w) {
  bool e1 = w.s1 % 2 == 0, e2 = w.s2 % 2 == 0;
  if (e1 && e2) throw InternalError("both weight exponents even: weight vector not minimal");
  Symmetry s;
  s.kind = e1 ? SymmetryKind::XAxis : (e2 ? SymmetryKind::YAxis : SymmetryKind::Origin);
  s.time_reversed = (w.d - 1) % 2 != 0;
  return s;
}

namespace {

struct Working {
  PolySystem sys;
  long s1, s2, d;
  bool swapped;
};

Working working_frame(const PolySystem& s, const WeightVector& w) {
  auto fam = weight_vectors(s);
  if (!fam) throw NotQuasiHomogeneousError("system is not quasi-homogeneous");
  if (!(fam->vectors.front() == w)) throw PreconditionError("weight vector is not the minimal one");
  if (!coprime_check(s).coprime) throw CommonFactorError("system has a common factor", coprime_check(s).factor.to_string());
  Working wk{s, w.s1, w.s2, w.d, false};
  if (w.s1 < w.s2) {
    wk.sys = s.swap_xy();
    std::swap(wk.s1, wk.s2);
    wk.swapped = true;
  }
  return wk;
}

struct FracTerm {
  Rat ex, ey, c;
};

PolySystem shift_to_poly(const std::vector<FracTerm>& tp, const std::vector<FracTerm>& tq, const Rat& ax,
                         const Rat& ay) {
  PolySystem out;
  auto emit = [&](const std::vector<FracTerm>& ts, BiPoly& into) {
    for (const auto& t : ts) {
      Rat ex = t.ex + ax, ey = t.ey + ay;
      if (ex.get_den() != 1 || ey.get_den() != 1 || ex < 0 || ey < 0)
        throw InternalError("time rescaling left a non-polynomial term");
      into.add_term(static_cast<int>(ex.get_num().get_si()), static_cast<int>(ey.get_num().get_si()), t.c);
    }
  };
  emit(tp, out.p);
  emit(tq, out.q);
  return out;
}

HomogSystem finish(PolySystem sys) {
  HomogSystem h;
  if (!sys.p.is_zero() && !sys.p.is_homogeneous()) throw InternalError("target x-component not homogeneous");
  if (!sys.q.is_zero() && !sys.q.is_homogeneous()) throw InternalError("target y-component not homogeneous");
  if (!sys.p.is_zero() && !sys.q.is_zero() && sys.p.degree() != sys.q.degree())
    throw InternalError("target components of different degree");
  h.degree = sys.degree();
  h.sys = std::move(sys);
  h.target_class = target_class(h).cls;
  return h;
}

std::pair<HomogSystem, TransformRecord> identity_transform(const PolySystem& s, const WeightVector& w) {
  TransformRecord t;
  t.path = "identity";
  t.beta = 1;
  t.symmetry = symmetry_type(w);
  return {finish(s), t};
}

}  // namespace

std::pair<HomogSystem, TransformRecord> homogenize_lcm(const PolySystem& s, const WeightVector& w) {
  Working wk = working_frame(s, w);
  if (wk.s1 == wk.s2) return identity_transform(s, w);
  long s1 = wk.s1, s2 = wk.s2;
  std::vector<FracTerm> tp, tq;
  for (const auto& [e, c] : wk.sys.p.terms())
    tp.push_back({Rat(s1 * (e.first - 1) + 1), Rat(s2 * e.second), c / Rat(s1)});
  for (const auto& [e, c] : wk.sys.q.terms())
    tq.push_back({Rat(s1 * e.first), Rat(s2 * (e.second - 1) + 1), c / Rat(s2)});
  Rat minx(0), miny(0);
  for (const auto* ts : {&tp, &tq})
    for (const auto& t : *ts) {
      minx = std::min(minx, t.ex);
      miny = std::min(miny, t.ey);
    }
  TransformRecord rec;
  rec.path = "lcm";
  rec.beta = s1 * s2;
  rec.s1 = s1;
  rec.s2 = s2;
  rec.expo_x = Rat(1, s1);
  rec.expo_y = Rat(1, s2);
  rec.time_factor = {-minx, -miny};
  rec.chart = s1 % 2 == 0 ? Chart::XPositive : (s2 % 2 == 0 ? Chart::YPositive : Chart::FullPlane);
  rec.swap_xy = wk.swapped;
  rec.symmetry = symmetry_type(w);
  return {finish(shift_to_poly(tp, tq, -minx, -miny)), rec};
}

std::pair<HomogSystem, TransformRecord> homogenize_min(const PolySystem& s, const WeightVector& w) {
  Working wk = working_frame(s, w);
  if (wk.s1 == wk.s2) return identity_transform(s, w);
  long s1 = wk.s1, s2 = wk.s2;
  std::vector<FracTerm> tp, tq;
  for (const auto& [e, c] : wk.sys.p.terms())
    tp.push_back({Rat(s2 - 1 + e.first, s2), Rat(e.second, s1), c * Rat(s2)});
  for (const auto& [e, c] : wk.sys.q.terms())
    tq.push_back({Rat(e.first, s2), Rat(s1 - 1 + e.second, s1), c * Rat(s1)});
  for (auto* ts : {&tp, &tq})
    for (auto& t : *ts) {
      t.ex.canonicalize();
      t.ey.canonicalize();
    }
  Rat minx = tp.empty() ? tq.front().ex : tp.front().ex;
  Rat miny = tp.empty() ? tq.front().ey : tp.front().ey;
  for (const auto* ts : {&tp, &tq})
    for (const auto& t : *ts) {
      minx = std::min(minx, t.ex);
      miny = std::min(miny, t.ey);
    }
  TransformRecord rec;
  rec.path = "min";
  rec.beta = 1;
  rec.s1 = s1;
  rec.s2 = s2;
  rec.expo_x = Rat(s2);
  rec.expo_y = Rat(s1);
  rec.time_factor = {-minx, -miny};
  rec.chart = s2 % 2 == 0 ? Chart::XPositive : (s1 % 2 == 0 ? Chart::YPositive : Chart::FullPlane);
  rec.swap_xy = wk.swapped;
  rec.symmetry = symmetry_type(w);
  return {finish(shift_to_poly(tp, tq, -minx, -miny)), rec};
}

namespace {

// f(x^kx, y^ky)
BiPoly power_substitute(const BiPoly& f, long kx, long ky) {
  BiPoly out;
  for (const auto& [e, c] : f.terms())
    out.add_term(static_cast<int>(e.first * kx), static_cast<int>(e.second * ky), c);
  return out;
}

BiPoly mono(long i, long j) { return BiPoly::monomial(static_cast<int>(i), static_cast<int>(j), Rat(1)); }

long to_l(const Rat& r) {
  if (r.get_den() != 1) throw InternalError("expected an integer exponent");
  return r.get_num().get_si();
}

}  // namespace

bool verify_conjugacy(const PolySystem& source, const HomogSystem& target, const TransformRecord& t) {
  if (t.path == "identity") return target.sys == source;
  PolySystem src = t.swap_xy ? source.swap_xy() : source;
  const long s1 = t.s1, s2 = t.s2;
  if (t.path == "min") {
    long ax = to_l(t.time_factor.a * s2), ay = to_l(t.time_factor.b * s1);
    BiPoly lhs_mul = mono(std::max(0L, ax), std::max(0L, ay));
    BiPoly rhs_mul = mono(std::max(0L, -ax), std::max(0L, -ay));
    BiPoly lp = Rat(s2) * mono(s2 - 1, 0) * src.p * lhs_mul;
    BiPoly rp = power_substitute(target.sys.p, s2, s1) * rhs_mul;
    BiPoly lq = Rat(s1) * mono(0, s1 - 1) * src.q * lhs_mul;
    BiPoly rq = power_substitute(target.sys.q, s2, s1) * rhs_mul;
    return lp == rp && lq == rq;
  }
  if (t.path == "lcm") {
    long A = to_l(t.time_factor.a), B = to_l(t.time_factor.b);
    BiPoly lp = Rat(s1) * mono(s1 - 1, 0) * target.sys.p;
    BiPoly rp = mono(A, B) * power_substitute(src.p, s1, s2);
    BiPoly lq = Rat(s2) * mono(0, s2 - 1) * target.sys.q;
    BiPoly rq = mono(A, B) * power_substitute(src.q, s1, s2);
    return lp == rp && lq == rq;
  }
  return false;
}

int predicted_lcm_degree(const PolySystem& s, const WeightVector& w) {
  long big = std::max(w.s1, w.s2), small = std::min(w.s1, w.s2);
  if (w.s1 == w.s2) return static_cast<int>(w.d);
  if (w.d == 1) return static_cast<int>(w.d + big - 1);
  QhStructure st = decompose(s, w);
  bool boundary = false;
  for (const auto& b : st.parts) {
    if (b.k == 0 || b.q.is_zero()) continue;
    int s1k = b.k * st.varsigma0, k1k = b.k * st.kappa0;
    if (st.p == st.n + 1 - s1k - k1k) boundary = true;
  }
  long deg = w.d;
  if (st.p == 0) deg += big - 1;
  if (boundary) deg += small - 1;
  return static_cast<int>(deg);
}

TargetClassReport target_class(const HomogSystem& h) {
  TargetClassReport r;
  const BiPoly& P = h.sys.p;
  const BiPoly& Q = h.sys.q;
  auto put = [&](const std::string& name, const Rat& v) { r.coefficients[name] = v; };
  auto c = [&](int i, int j) { return P.coeff(i, j); };
  auto d = [&](int i, int j) { return Q.coeff(i, j); };
  switch (h.degree) {
    case 3: {
      r.cls = TargetClass::H3;
      put("c12", c(1, 2));
      put("c21", c(2, 1));
      put("c30", c(3, 0));
      put("d03", d(0, 3));
      put("d12", d(1, 2));
      put("d21", d(2, 1));
      if (c(0, 3) != 0) {
        r.failing = "c03";
      } else if (d(3, 0) != 0) {
        r.failing = "d30";
      } else if (c(3, 0) == 0) {
        r.failing = "c30";
      } else if (d(0, 3) == 0) {
        r.failing = "d03";
      } else {
        r.satisfied = true;
        r.branch = "c30*d03 != 0";
      }
      break;
    }
    case 2: {
      r.cls = TargetClass::H2;
      for (auto [i, j] : {Exp{0, 2}, Exp{1, 1}, Exp{2, 0}}) {
        put(coeff_name('c', {i, j}), c(i, j));
        put(coeff_name('d', {i, j}), d(i, j));
      }
      if (c(0, 2) != 0 && d(2, 0) != 0) {
        r.satisfied = true;
        r.branch = "c02*d20 != 0";
      } else if (c(0, 2) == 0 && d(2, 0) == 0) {
        if (c(2, 0) == 0)
          r.failing = "c20";
        else if (d(0, 2) == 0)
          r.failing = "d02";
        else {
          r.satisfied = true;
          r.branch = "c02 = d20 = 0, c20*d02 != 0";
        }
      } else {
        r.failing = c(0, 2) == 0 ? "c02" : "d20";
      }
      break;
    }
    case 1: {
      r.cls = TargetClass::H1;
      Rat c01 = c(0, 1), c10 = c(1, 0), d01 = d(0, 1), d10 = d(1, 0);
      put("c01", c01);
      put("c10", c10);
      put("d01", d01);
      put("d10", d10);
      if (c01 != 0 && d10 != 0) {
        r.satisfied = true;
        r.branch = "c01*d10 != 0";
      } else if (d10 == 0 && c01 != 0) {
        if (c10 == 0)
          r.failing = "c10";
        else if (d01 == 0)
          r.failing = "d01";
        else {
          r.satisfied = true;
          r.branch = "d10 = 0, c01*c10*d01 != 0";
        }
      } else if (c01 == 0 && d10 != 0) {
        if (c10 == 0)
          r.failing = "c10";
        else if (d01 == 0)
          r.failing = "d01";
        else {
          r.satisfied = true;
          r.branch = "c01 = 0, c10*d01*d10 != 0";
        }
      } else {
        r.failing = "c01";
      }
      break;
    }
    case 0: {
      r.cls = TargetClass::H0;
      put("c0", c(0, 0));
      put("d0", d(0, 0));
      if (c(0, 0) == 0)
        r.failing = "c0";
      else if (d(0, 0) == 0)
        r.failing = "d0";
      else {
        r.satisfied = true;
        r.branch = "c0*d0 != 0";
      }
      break;
    }
    default:
      r.cls = TargetClass::Other;
      r.failing = "degree";
  }
  return r;
}

double AlgCoord::approx() const {
  if (exact) return exact->get_d();
  return sign * std::pow(radicand.get_d(), 1.0 / static_cast<double>(index));
}

std::string AlgCoord::to_string() const {
  if (exact) return qhpp::to_string(*exact);
  std::string body = "(" + qhpp::to_string(radicand) + ")^(1/" + std::to_string(index) + ")";
  return sign < 0 ? "-" + body : body;
}

namespace {

std::optional<Int> exact_root(const Int& v, long k) {
  Int r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(k)) != 0) return r;
  return std::nullopt;
}

// v^(1/k) for a target coordinate; the caller checks the sign domain.
AlgCoord root_coord(const Rat& v, long k) {
  AlgCoord c;
  c.sign = sgn(v);
  c.radicand = abs(v);
  c.index = k;
  if (k == 1) {
    c.exact = v;
    return c;
  }
  auto n = exact_root(c.radicand.get_num(), k);
  auto d = exact_root(c.radicand.get_den(), k);
  if (n && d) {
    Rat e(*n, *d);
    e.canonicalize();
    c.exact = c.sign < 0 ? Rat(-e) : e;
  }
  return c;
}

AlgCoord invert(const Rat& v, const Rat& expo, bool must_be_positive, const char* axis) {
  if (expo == 1) return root_coord(v, 1);
  if (v == 0) throw PreconditionError(std::string("point on the chart boundary ") + axis + " = 0 is not invertible");
  if (must_be_positive && v < 0) throw PreconditionError(std::string("point outside the chart (") + axis + " < 0)");
  if (expo.get_num() == 1) {
    // Forward map x~ = x^(1/k): x = x~^k.
    long k = expo.get_den().get_si();
    AlgCoord c;
    c.exact = rat_pow(v, static_cast<unsigned>(k));
    c.sign = sgn(*c.exact);
    c.radicand = abs(*c.exact);
    c.index = 1;
    return c;
  }
  long k = expo.get_num().get_si();
  if (v < 0 && k % 2 == 0) throw PreconditionError(std::string("point outside the chart (") + axis + " < 0)");
  return root_coord(v, k);
}

AlgCoord negate(AlgCoord c) {
  c.sign = -c.sign;
  if (c.exact) c.exact = -*c.exact;
  return c;
}

}  // namespace

std::vector<PullbackPoint> pullback_point(const TransformRecord& t, const Rat& X, const Rat& Y) {
  if (t.path == "identity") return {{root_coord(X, 1), root_coord(Y, 1), "primary"}};
  AlgCoord wx = invert(X, t.expo_x, t.chart == Chart::XPositive, "x");
  AlgCoord wy = invert(Y, t.expo_y, t.chart == Chart::YPositive, "y");
  PullbackPoint primary = t.swap_xy ? PullbackPoint{wy, wx, "primary"} : PullbackPoint{wx, wy, "primary"};
  std::vector<PullbackPoint> out{primary};
  switch (t.symmetry.kind) {
    case SymmetryKind::XAxis: out.push_back({primary.x, negate(primary.y), "x-axis mirror"}); break;
    case SymmetryKind::YAxis: out.push_back({negate(primary.x), primary.y, "y-axis mirror"}); break;
    case SymmetryKind::Origin: out.push_back({negate(primary.x), negate(primary.y), "origin mirror"}); break;
    case SymmetryKind::None: break;
  }
  return out;
}

}  // namespace qhpp

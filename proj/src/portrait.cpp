#include "qhpp/portrait.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qhpp/errors.hpp"

namespace qhpp {

std::string to_string(SectorType s) {
  switch (s) {
    case SectorType::Hyperbolic: return "hyperbolic";
    case SectorType::Parabolic: return "parabolic";
    case SectorType::Elliptic: return "elliptic";
  }
  return "?";
}

namespace {

constexpr double kPi = std::numbers::pi;

double norm_angle(double a) {
  double r = std::fmod(a, 2 * kPi);
  if (r < 0) r += 2 * kPi;
  if (r >= 2 * kPi - 1e-15) r = 0.0;
  return r;
}

// Ray of the homogeneous system plus the signs needed for gluing.
struct TRay {
  Ray ray;
  int h = 0;        // sign of H~ on the ray (flow)
  int g_left = 0;   // sign of G~ just before the ray (ccw order)
  int g_right = 0;  // just after
  int sx = 0;       // sign of x on the ray
  int sy = 0;
  std::string inf_type;
  std::string inf_stability;
};

std::string flip_stability(const std::string& s) {
  if (s == "stable") return "unstable";
  if (s == "unstable") return "stable";
  return s;
}

// Rays in ccw order starting just after theta = -pi/2: x>0 rays by ascending slope, the
// upper vertical, x<0 rays, the lower vertical.
std::vector<TRay> target_rays(const CharPolys& cp, const std::vector<DirectionReport>& reports) {
  const int e = (cp.n + 1) % 2 == 0 ? 1 : -1;
  const bool flip = cp.n % 2 == 0;
  std::vector<TRay> right, left, top, bottom;
  for (const auto& d : reports) {
    TRay a;
    a.ray.local_type = d.local_type_blowup;
    a.ray.orbits = d.orbit_count_origin;
    a.ray.multiplicity = d.multiplicity;
    a.inf_type = to_string(d.infinity_type);
    a.inf_stability = d.infinity_stability;
    a.h = d.p_sign;
    a.g_left = d.g_left;
    a.g_right = d.g_right;
    TRay b = a;
    b.h = e * d.p_sign;
    b.g_left = e * d.g_left;
    b.g_right = e * d.g_right;
    if (flip) b.inf_stability = flip_stability(a.inf_stability);
    if (d.vertical) {
      a.sx = b.sx = 0;
      a.sy = 1;
      b.sy = -1;
      a.ray.angle = kPi / 2;
      b.ray.angle = 3 * kPi / 2;
      a.ray.direction = "x = 0, y > 0";
      b.ray.direction = "x = 0, y < 0";
      top.push_back(a);
      bottom.push_back(b);
    } else {
      AlgebraicRoot r = *d.root;
      int su = r.sign_of(UniPoly::var());
      a.sx = 1;
      a.sy = su;
      b.sx = -1;
      b.sy = -su;
      double th = d.angle();
      a.ray.angle = norm_angle(th);
      b.ray.angle = norm_angle(th + kPi);
      std::string u0 = d.root->to_string();
      a.ray.direction = "y = u0*x, x > 0, u0 = " + u0;
      b.ray.direction = "y = u0*x, x < 0, u0 = " + u0;
      right.push_back(a);
      left.push_back(b);
    }
  }
  std::vector<TRay> out;
  for (auto* part : {&right, &top, &left, &bottom})
    for (auto& r : *part) {
      r.ray.flow = r.h > 0 ? FlowSign::Outgoing : FlowSign::Incoming;
      out.push_back(r);
    }
  return out;
}

SectorType sector_between(const TRay& a, const TRay& b) {
  int g = a.g_right;
  if (g != b.g_left || g == 0) throw InternalError("sector gluing: inconsistent sign of G between adjacent rays");
  bool left_in = a.h * g > 0;
  bool right_in = b.h * g < 0;
  if (left_in && right_in) return SectorType::Elliptic;
  if (!left_in && !right_in) return SectorType::Hyperbolic;
  return SectorType::Parabolic;
}

int index_from_sectors(const std::vector<SectorType>& s) {
  int e = 0, h = 0;
  for (auto t : s) {
    if (t == SectorType::Elliptic) ++e;
    if (t == SectorType::Hyperbolic) ++h;
  }
  if ((e - h) % 2 != 0) throw InternalError("odd number of elliptic minus hyperbolic sectors");
  return 1 + (e - h) / 2;
}

int infinity_index(const std::string& type) {
  if (type == "node") return 1;
  if (type == "saddle") return -1;
  return 0;
}

// Rotate parallel ray/sector arrays so that the smallest angle comes first.
void rotate_to_min(std::vector<Ray>& rays, std::vector<SectorType>& sectors) {
  if (rays.empty()) return;
  std::size_t k = 0;
  for (std::size_t i = 1; i < rays.size(); ++i)
    if (rays[i].angle < rays[k].angle) k = i;
  std::rotate(rays.begin(), rays.begin() + static_cast<long>(k), rays.end());
  std::rotate(sectors.begin(), sectors.begin() + static_cast<long>(k), sectors.end());
}

void rotate_points(std::vector<InfinityPoint>& pts) {
  if (pts.empty()) return;
  auto it = std::min_element(pts.begin(), pts.end(),
                             [](const InfinityPoint& a, const InfinityPoint& b) { return a.angle < b.angle; });
  std::rotate(pts.begin(), it, pts.end());
}

}  // namespace

int PortraitCode::count(SectorType s) const { return static_cast<int>(std::count(sectors.begin(), sectors.end(), s)); }

namespace {

std::string min_cyclic(std::vector<std::vector<std::string>> variants, std::size_t step) {
  std::string best;
  bool first = true;
  for (auto& v : variants) {
    for (std::size_t r = 0; r < v.size() || r == 0; r += step) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[(i + r) % v.size()];
      }
      if (first || s < best) {
        best = s;
        first = false;
      }
      if (v.empty()) break;
    }
  }
  return best;
}

std::string sector_letter(SectorType s) {
  switch (s) {
    case SectorType::Hyperbolic: return "h";
    case SectorType::Parabolic: return "p";
    case SectorType::Elliptic: return "e";
  }
  return "?";
}

}  // namespace

std::string PortraitCode::origin_key() const {
  if (origin_kind != "sectors") return origin_kind;
  std::vector<std::vector<std::string>> variants;
  for (int flip = 0; flip < 2; ++flip) {
    std::vector<std::string> fwd;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      bool out = (rays[i].flow == FlowSign::Outgoing) != (flip == 1);
      fwd.push_back(out ? "o" : "i");
      fwd.push_back(sector_letter(sectors[i]));
    }
    variants.push_back(fwd);
    // Reflection: ray r0 s_{k-1} r_{k-1} ... s0.
    std::vector<std::string> rev;
    std::size_t k = rays.size();
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t ri = (k - i) % k;
      bool out = (rays[ri].flow == FlowSign::Outgoing) != (flip == 1);
      rev.push_back(out ? "o" : "i");
      rev.push_back(sector_letter(sectors[(2 * k - i - 1) % k]));
    }
    variants.push_back(rev);
  }
  return min_cyclic(variants, 2);
}

std::string PortraitCode::infinity_key() const {
  if (infinity.fulfils) return "fulfils";
  if (infinity.points.empty()) return "none";
  std::vector<std::vector<std::string>> variants;
  for (int flip = 0; flip < 2; ++flip) {
    std::vector<std::string> fwd;
    for (const auto& p : infinity.points) {
      std::string t = p.type == "saddle" ? "S" : p.type == "node" ? "N" : p.type == "saddle-node" ? "SN" : "D";
      if (p.type == "node") {
        bool st = p.stability == "stable";
        if (flip) st = !st;
        t += st ? "s" : "u";
      }
      fwd.push_back(t);
    }
    std::vector<std::string> rev(fwd.rbegin(), fwd.rend());
    variants.push_back(fwd);
    variants.push_back(rev);
  }
  return min_cyclic(variants, 1);
}

std::string PortraitCode::key() const { return "O[" + origin_key() + "] I[" + infinity_key() + "]"; }

PortraitCode homogeneous_portrait(const HomogSystem& h, const std::vector<DirectionReport>& reports) {
  CharPolys cp = char_polys(h);
  PortraitCode code;
  code.plane = "homogeneous";
  if (cp.radial) {
    // Coprime and radial forces degree 1: x' = a x, y' = a y.
    code.origin_kind = "star-node";
    code.origin_detail = sgn(h.sys.p.coeff(1, 0)) > 0 ? "unstable star node" : "stable star node";
    code.index = 1;
    code.infinity.fulfils = true;
    code.infinity.note = "every point of the equator is singular";
    return code;
  }
  if (reports.empty()) {
    CenterResult c = center_test(h);
    code.index = 1;
    code.infinity.note = "no singular points at infinity; the equator is a periodic orbit";
    if (c.verdict == CenterVerdict::NotCenter) {
      code.origin_kind = "focus";
      int gs = sgn(cp.g_u.coeff(0));
      double I = c.integral.value_or(center_integral(cp));
      code.origin_detail = I * gs > 0 ? "unstable focus" : "stable focus";
    } else {
      code.origin_kind = "center";
      code.origin_detail = c.verdict == CenterVerdict::GlobalCenter ? "global center" : "global center (numerical)";
      if (c.verdict == CenterVerdict::NumericallyCenterUnverified)
        code.warnings.push_back("center decided by quadrature only");
    }
    return code;
  }
  std::vector<TRay> tr = target_rays(cp, reports);
  std::vector<Ray> rays;
  std::vector<SectorType> sectors;
  int inf_sum = 0;
  for (std::size_t i = 0; i < tr.size(); ++i) {
    rays.push_back(tr[i].ray);
    sectors.push_back(sector_between(tr[i], tr[(i + 1) % tr.size()]));
    InfinityPoint p;
    p.angle = tr[i].ray.angle;
    p.direction = tr[i].ray.direction;
    p.type = tr[i].inf_type;
    p.stability = tr[i].inf_stability;
    code.infinity.points.push_back(p);
    inf_sum += infinity_index(p.type);
  }
  code.index = index_from_sectors(sectors);
  if (2 * code.index + inf_sum != 2)
    throw InternalError("index identity violated: 2*" + std::to_string(code.index) + " + " + std::to_string(inf_sum) +
                        " != 2");
  rotate_to_min(rays, sectors);
  rotate_points(code.infinity.points);
  code.rays = std::move(rays);
  code.sectors = std::move(sectors);
  return code;
}

InfinityRing infinity_ring(const PolySystem& s) {
  InfinityRing ring;
  int n = s.degree();
  BiPoly pn = s.p.homogeneous_part(n), qn = s.q.homogeneous_part(n);
  BiPoly g = BiPoly::var_x() * qn - BiPoly::var_y() * pn;
  if (g.is_zero()) {
    ring.fulfils = true;
    ring.note = "every point of the equator is singular";
    return ring;
  }
  const bool flip = n % 2 == 0;
  UniPoly gu = g.at_x1(), gv = g.at_y1(), pu = pn.at_x1(), qv = qn.at_y1();
  std::vector<InfinityPoint> right, left, top, bottom;
  auto classify = [&](int psign, int m, int gm, bool vertical) {
    InfinityPoint p;
    if (psign == 0) {
      p.type = "degenerate";
      return p;
    }
    if (m % 2 == 0) {
      p.type = "saddle-node";
      return p;
    }
    // Chart flow: u' = G(1,u), z' = -z P(1,u); for the vertical: v' = -G(v,1), z' = -z Q(v,1).
    int along = vertical ? -gm : gm;
    bool saddle = along * (-psign) < 0;
    p.type = saddle ? "saddle" : "node";
    if (!saddle) p.stability = along < 0 ? "stable" : "unstable";
    return p;
  };
  if (!gu.is_zero()) {
    for (auto r : real_roots(gu)) {
      int ps = r.sign_of(pu);
      auto [gl, gr] = r.side_signs(gu);
      (void)gl;
      InfinityPoint a = classify(ps, r.multiplicity(), gr, false);
      InfinityPoint b = a;
      if (flip) b.stability = flip_stability(a.stability);
      double th = std::atan(r.approx());
      a.angle = norm_angle(th);
      b.angle = norm_angle(th + kPi);
      a.direction = "y = u0*x, x > 0, u0 = " + r.to_string();
      b.direction = "y = u0*x, x < 0, u0 = " + r.to_string();
      right.push_back(a);
      left.push_back(b);
    }
  }
  if (gv.coeff(0) == 0) {
    int m = root_multiplicity(gv, Rat(0));
    InfinityPoint a = classify(sgn(qv.coeff(0)), m, sgn(gv.coeff(m)), true);
    InfinityPoint b = a;
    if (flip) b.stability = flip_stability(a.stability);
    a.angle = kPi / 2;
    b.angle = 3 * kPi / 2;
    a.direction = "x = 0, y > 0";
    b.direction = "x = 0, y < 0";
    top.push_back(a);
    bottom.push_back(b);
  }
  for (auto* part : {&right, &top, &left, &bottom})
    for (auto& p : *part) ring.points.push_back(p);
  rotate_points(ring.points);
  return ring;
}

namespace {

// Direction of the flow along an invariant half-axis of the working source system:
// +1 outgoing, -1 incoming, 0 when the half-axis is not invariant.
int axis_flow(const PolySystem& s, int sx, int sy) {
  if (sy == 0) {
    UniPoly along = s.p.at_y0(), across = s.q.at_y0();
    if (!across.is_zero() || along.is_zero()) return 0;
    int k = 0;
    while (along.coeff(k) == 0) ++k;
    int c = sgn(along.coeff(k));
    int xdot = sx > 0 ? c : c * (k % 2 == 0 ? 1 : -1);
    return xdot * sx;
  }
  UniPoly along = s.q.at_x0(), across = s.p.at_x0();
  if (!across.is_zero() || along.is_zero()) return 0;
  int k = 0;
  while (along.coeff(k) == 0) ++k;
  int c = sgn(along.coeff(k));
  int ydot = sy > 0 ? c : c * (k % 2 == 0 ? 1 : -1);
  return ydot * sy;
}

struct SRay {
  Ray ray;
  int sx = 0, sy = 0;
};

}  // namespace

PortraitCode pullback_portrait(const PortraitCode& target, const HomogSystem& h, const TransformRecord& t,
                               const PolySystem& source) {
  PortraitCode code;
  code.plane = "quasi-homogeneous";
  code.symmetry = t.symmetry;
  code.infinity = infinity_ring(source);
  code.warnings = target.warnings;
  if (t.path == "identity") {
    code.origin_kind = target.origin_kind;
    code.origin_detail = target.origin_detail;
    code.rays = target.rays;
    code.sectors = target.sectors;
    code.index = target.index;
    code.plane = "homogeneous";
    code.infinity = target.infinity;
    return code;
  }
  if (t.path != "min") throw PreconditionError("portrait pullback needs the homogenize_min transform");
  PolySystem work = t.swap_xy ? source.swap_xy() : source;
  CharPolys cp = char_polys(h);
  const bool fold = t.chart != Chart::FullPlane;

  if (cp.radial) {
    code.origin_kind = "star-node";
    code.origin_detail = target.origin_detail;
    code.index = 1;
    return code;
  }
  std::vector<DirectionReport> reports = classify_all(cp);
  if (reports.empty()) {
    code.index = 1;
    if (fold) {
      code.origin_kind = "center";
      code.origin_detail = "center (reversible under the axis mirror)";
    } else {
      code.origin_kind = target.origin_kind;
      code.origin_detail = target.origin_detail;
    }
    return code;
  }
  std::vector<TRay> tr = target_rays(cp, reports);
  const std::size_t N = tr.size();

  auto flow_of = [&](int sx, int sy, int target_h) {
    if (sx == 0 || sy == 0) {
      int f = axis_flow(work, sx, sy);
      if (f != 0) return f;
      // Fall back to an adjacent open quadrant of the chart.
      for (int a : {1, -1}) {
        int qx = sx == 0 ? a : sx, qy = sy == 0 ? a : sy;
        if (auto ts = t.time_sign(qx, qy)) return target_h * *ts;
      }
      code.warnings.push_back("flow along an axis ray could not be transferred; kept the target direction");
      return target_h;
    }
    auto ts = t.time_sign(sx, sy);
    if (!ts) throw InternalError("ray outside the chart domain");
    return target_h * *ts;
  };

  std::vector<SRay> seq;
  std::vector<SectorType> sectors;
  if (!fold) {
    for (std::size_t i = 0; i < N; ++i) {
      SRay s{tr[i].ray, tr[i].sx, tr[i].sy};
      s.ray.flow = flow_of(tr[i].sx, tr[i].sy, tr[i].h) > 0 ? FlowSign::Outgoing : FlowSign::Incoming;
      seq.push_back(s);
      sectors.push_back(sector_between(tr[i], tr[(i + 1) % N]));
    }
  } else {
    const bool xpos = t.chart == Chart::XPositive;
    auto kept = [&](const TRay& r) { return xpos ? r.sx >= 0 : r.sy >= 0; };
    auto on_fold = [&](const TRay& r) { return xpos ? r.sx == 0 : r.sy == 0; };
    // Start of the contiguous kept arc.
    std::size_t start = N;
    bool all_kept = std::all_of(tr.begin(), tr.end(), kept);
    for (std::size_t i = 0; i < N; ++i) {
      const TRay& r = tr[i];
      if (!kept(r)) continue;
      if (all_kept) {
        bool at_a0 = xpos ? (r.sx == 0 && r.sy < 0) : (r.sy == 0 && r.sx > 0);
        if (at_a0) start = i;
      } else if (!kept(tr[(i + N - 1) % N])) {
        start = i;
      }
    }
    if (start == N) throw InternalError("fold pullback: no start of the kept arc");
    std::vector<std::size_t> K;
    for (std::size_t j = 0; j < N; ++j) {
      std::size_t i = (start + j) % N;
      if (!kept(tr[i])) break;
      K.push_back(i);
    }
    const std::size_t m = K.size() - 1;
    std::vector<SectorType> S;
    for (std::size_t j = 0; j + 1 < K.size(); ++j) S.push_back(sector_between(tr[K[j]], tr[K[j + 1]]));
    auto merged_top = [&](const TRay& r) { return r.h * r.g_right > 0 ? SectorType::Elliptic : SectorType::Hyperbolic; };
    auto merged_bottom = [&](const TRay& r) { return r.h * r.g_left < 0 ? SectorType::Elliptic : SectorType::Hyperbolic; };
    const int mirror_flow = t.symmetry.time_reversed ? -1 : 1;

    for (std::size_t j = 0; j <= m; ++j) {
      const TRay& r = tr[K[j]];
      SRay s{r.ray, r.sx, r.sy};
      s.ray.flow = flow_of(r.sx, r.sy, r.h) > 0 ? FlowSign::Outgoing : FlowSign::Incoming;
      seq.push_back(s);
      if (j < m) sectors.push_back(S[j]);
    }
    const bool top_fold = on_fold(tr[K[m]]);
    const bool bottom_fold = on_fold(tr[K[0]]);
    // Sector leaving the last kept ray across the top of the fold.
    sectors.push_back(top_fold ? S[m - 1] : merged_top(tr[K[m]]));
    std::vector<std::size_t> interior;
    for (std::size_t j = 0; j <= m; ++j)
      if (!on_fold(tr[K[j]])) interior.push_back(j);
    for (std::size_t q = interior.size(); q-- > 0;) {
      std::size_t j = interior[q];
      const SRay& orig = seq[j];
      SRay s = orig;
      s.ray.angle = norm_angle(xpos ? kPi - orig.ray.angle : -orig.ray.angle);
      s.ray.direction = "mirror of " + orig.ray.direction;
      int f = orig.ray.flow == FlowSign::Outgoing ? 1 : -1;
      s.ray.flow = f * mirror_flow > 0 ? FlowSign::Outgoing : FlowSign::Incoming;
      if (xpos)
        s.sx = -orig.sx;
      else
        s.sy = -orig.sy;
      seq.push_back(s);
      if (q > 0) sectors.push_back(S[interior[q - 1]]);
    }
    if (!interior.empty()) {
      // Closing sector back to the first kept ray.
      sectors.push_back(bottom_fold ? S[0] : merged_bottom(tr[K[0]]));
    }
    if (sectors.size() != seq.size()) {
      // Only the two fold rays: the last push covered both halves.
      while (sectors.size() < seq.size()) sectors.push_back(S[0]);
      sectors.resize(seq.size());
    }
  }

  std::vector<Ray> rays;
  for (const auto& s : seq) rays.push_back(s.ray);
  if (t.swap_xy) {
    for (auto& r : rays) r.angle = norm_angle(kPi / 2 - r.angle);
    // The reflection reverses the cyclic order: sector i (ray i -> i+1) becomes (ray i+1 -> ray i).
    std::vector<Ray> rr(rays.rbegin(), rays.rend());
    std::vector<SectorType> ss;
    const std::size_t k = rays.size();
    for (std::size_t i = 0; i < k; ++i) ss.push_back(sectors[(2 * k - i - 2) % k]);
    rays = std::move(rr);
    sectors = std::move(ss);
  }
  code.index = index_from_sectors(sectors);
  rotate_to_min(rays, sectors);
  code.rays = std::move(rays);
  code.sectors = std::move(sectors);
  return code;
}

PortraitCode assemble_portrait(const HomogSystem& h, const std::vector<DirectionReport>& reports,
                               const TransformRecord& t, const std::optional<PolySystem>& source) {
  PortraitCode hc = homogeneous_portrait(h, reports);
  hc.symmetry = t.symmetry;
  if (t.path == "identity" || !source) return hc;
  return pullback_portrait(hc, h, t, *source);
}

PortraitCode portrait_of(const PolySystem& s) {
  auto fam = weight_vectors(s);
  if (!fam) throw NotQuasiHomogeneousError("system is not quasi-homogeneous");
  const WeightVector& w = fam->vectors.front();
  auto [h, t] = homogenize_min(s, w);
  auto reports = classify_all(char_polys(h));
  return assemble_portrait(h, reports, t, s);
}

}  // namespace qhpp

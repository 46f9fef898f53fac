#include "qhpp/report.hpp"

#include <cstdio>
#include <numbers>

#include "qhpp/errors.hpp"
#include "qhpp/qhcore.hpp"

namespace qhpp {

Json to_json(const Rat& r) { return qhpp::to_string(r); }

Json to_json(const AlgebraicRoot& r) {
  Json j;
  j["polynomial"] = r.poly().primitive_integer().to_string("u");
  j["interval"] = Json::array({qhpp::to_string(r.lo()), qhpp::to_string(r.hi())});
  j["exact"] = r.exact() ? Json(qhpp::to_string(*r.exact())) : Json(nullptr);
  j["multiplicity"] = r.multiplicity();
  return j;
}

Json to_json(const WeightVector& w) { return Json{{"s1", w.s1}, {"s2", w.s2}, {"d", w.d}}; }

Json to_json(const TransformRecord& t) {
  Json j;
  j["path"] = t.path;
  j["beta"] = t.beta;
  j["s1"] = t.s1;
  j["s2"] = t.s2;
  j["x_exponent"] = to_json(t.expo_x);
  j["y_exponent"] = to_json(t.expo_y);
  j["time_factor"] = Json{{"x", to_json(t.time_factor.a)},
                          {"y", to_json(t.time_factor.b)},
                          {"text", t.time_factor.to_string("x~", "y~")}};
  j["chart"] = to_string(t.chart);
  j["swap_xy"] = t.swap_xy;
  j["symmetry"] = Json{{"kind", to_string(t.symmetry.kind)}, {"time_reversed", t.symmetry.time_reversed}};
  return j;
}

Json to_json(const HomogSystem& h) {
  return Json{{"p", h.sys.p.to_string()},
              {"q", h.sys.q.to_string()},
              {"degree", h.degree},
              {"class", to_string(h.target_class)}};
}

Json to_json(const DirectionReport& d) {
  Json j;
  j["vertical"] = d.vertical;
  j["root"] = d.root ? to_json(*d.root) : Json(nullptr);
  j["multiplicity"] = d.multiplicity;
  j["blowup_type"] = to_string(d.local_type_blowup);
  j["orbits_at_origin"] = to_string(d.orbit_count_origin);
  j["flow"] = to_string(d.flow_sign);
  j["infinity_type"] = to_string(d.infinity_type);
  j["infinity_stability"] = d.infinity_stability;
  j["p_sign"] = d.p_sign;
  j["g_left"] = d.g_left;
  j["g_right"] = d.g_right;
  j["side_note"] = d.side_note;
  return j;
}

Json to_json(const CenterResult& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["method"] = c.method;
  j["reason"] = c.reason;
  j["integral"] = c.integral ? Json(*c.integral) : Json(nullptr);
  j["exact"] = c.exact;
  return j;
}

Json to_json(const PortraitCode& p) {
  Json j;
  j["plane"] = p.plane;
  j["origin_kind"] = p.origin_kind;
  j["origin_detail"] = p.origin_detail;
  Json rays = Json::array();
  for (auto& r : p.rays)
    rays.push_back(Json{{"direction", r.direction},
                        {"flow", to_string(r.flow)},
                        {"local_type", to_string(r.local_type)},
                        {"orbits", to_string(r.orbits)},
                        {"multiplicity", r.multiplicity}});
  j["rays"] = rays;
  Json sec = Json::array();
  for (auto s : p.sectors) sec.push_back(to_string(s));
  j["sectors"] = sec;
  j["sector_counts"] = Json{{"hyperbolic", p.count(SectorType::Hyperbolic)},
                            {"parabolic", p.count(SectorType::Parabolic)},
                            {"elliptic", p.count(SectorType::Elliptic)}};
  j["index"] = p.index;
  Json pts = Json::array();
  for (auto& q : p.infinity.points)
    pts.push_back(Json{{"direction", q.direction}, {"type", q.type}, {"stability", q.stability}});
  j["infinity"] = Json{{"fulfils", p.infinity.fulfils}, {"note", p.infinity.note}, {"points", pts}};
  j["symmetry"] = Json{{"kind", to_string(p.symmetry.kind)}, {"time_reversed", p.symmetry.time_reversed}};
  j["key"] = p.key();
  j["figure_label"] = p.figure_label ? Json(*p.figure_label) : Json(nullptr);
  return j;
}

Json to_json(const H3Signature& s) {
  Json j;
  j["c12"] = to_json(s.c12);
  j["c21"] = to_json(s.c21);
  j["c30"] = to_json(s.c30);
  j["d12"] = to_json(s.d12);
  j["d21"] = to_json(s.d21);
  j["delta"] = to_json(s.delta);
  j["root_case"] = to_string(s.root_case);
  j["sub_case"] = s.sub_case;
  j["regime"] = to_string(s.regime);
  j["normalized_regime"] = to_string(s.normalized_regime);
  j["u_plus"] = s.u_plus ? to_json(*s.u_plus) : Json(nullptr);
  j["u_minus"] = s.u_minus ? to_json(*s.u_minus) : Json(nullptr);
  j["u1"] = s.u1 ? to_json(*s.u1) : Json(nullptr);
  j["reflected"] = s.reflected;
  j["signs"] = Json{{"p_plus", s.p_plus}, {"p_minus", s.p_minus}, {"gp_plus", s.gp_plus},
                    {"gp_minus", s.gp_minus}, {"p1", s.p1},         {"g1", s.g1},
                    {"g0", s.g0},         {"g0_order", s.g0_order}, {"p0", s.p0}};
  j["iy_type"] = s.iy_type;
  return j;
}

namespace {

Json coeff_json(const NormalCoeff& c) {
  return Json{{"sign", c.sign}, {"exact", c.exact ? Json(qhpp::to_string(*c.exact)) : Json(nullptr)}};
}

}  // namespace

Json to_json(const H2Case& c) {
  Json j;
  j["case"] = c.label;
  j["directions"] = c.directions;
  j["finite_roots"] = c.finite_roots;
  const H2NormalForm& nf = c.normal_form;
  j["normal_form"] = Json{{"direction", nf.direction},   {"alpha11", coeff_json(nf.alpha11)},
                          {"alpha12", coeff_json(nf.alpha12)}, {"alpha22", coeff_json(nf.alpha22)},
                          {"beta12", coeff_json(nf.beta12)},   {"beta22", coeff_json(nf.beta22)}};
  j["infinity_branch"] = c.infinity_branch;
  j["i1_type"] = c.i1_type.empty() ? Json(nullptr) : Json(c.i1_type);
  return j;
}

Json to_json(const QhStructure& q) {
  Json j;
  j["family"] = q.family;
  j["d_one"] = q.d_one;
  j["swapped"] = q.swapped;
  j["n"] = q.n;
  j["p"] = q.p;
  j["varsigma"] = q.varsigma;
  j["kappa"] = q.kappa;
  j["s"] = q.s;
  j["varsigma0"] = q.varsigma0;
  j["kappa0"] = q.kappa0;
  Json parts = Json::array();
  for (auto& b : q.parts)
    parts.push_back(
        Json{{"k", b.k}, {"degree", b.degree}, {"role", b.role}, {"p", b.p.to_string()}, {"q", b.q.to_string()}});
  j["parts"] = parts;
  return j;
}

namespace {

Json input_json(const PolySystem& s) {
  return Json{{"p", s.p.to_string()}, {"q", s.q.to_string()}, {"degree", s.degree()}};
}

Json target_class_json(const TargetClassReport& r) {
  Json co = Json::object();
  for (auto& [k, v] : r.coefficients) co[k] = to_json(v);
  return Json{{"class", to_string(r.cls)},
              {"satisfied", r.satisfied},
              {"failing", r.failing},
              {"branch", r.branch},
              {"coefficients", co}};
}

bool is_homogeneous_system(const PolySystem& s) {
  return s.p.is_homogeneous() && s.q.is_homogeneous() && s.p.degree() == s.q.degree();
}

}  // namespace

AnalysisReport analyze(const PolySystem& s, const AnalyzeOptions& opt) {
  AnalysisReport rep;
  Json& j = rep.json;
  j["schema"] = "qhpp.analysis/1";
  j["input"] = input_json(s);
  std::vector<std::string> warnings;
  auto finish = [&](int status) {
    j["warnings"] = warnings;
    rep.status = status;
    return rep;
  };

  require_nonzero(s);
  auto fam = weight_vectors(s);
  j["quasi_homogeneous"] = fam.has_value();
  if (!fam) {
    warnings.push_back("no positive integer weight vector");
    PolySystem top{s.p.homogeneous_part(s.degree()), s.q.homogeneous_part(s.degree())};
    try {
      PortraitCode tmp;
      tmp.infinity = infinity_ring(s);
      Json inf = to_json(tmp)["infinity"];
      j["top_degree_part"] = Json{{"p", top.p.to_string()}, {"q", top.q.to_string()}, {"infinity", inf}};
    } catch (const std::exception& e) {
      warnings.push_back(std::string("top-degree analysis failed: ") + e.what());
    }
    return finish(3);
  }

  const WeightVector& w = fam->vectors.front();
  Json wj;
  wj["minimal"] = to_json(w);
  wj["generator"] = fam->generator;
  wj["two_parameter"] = fam->two_parameter;
  Json samples = Json::array();
  for (auto& v : fam->vectors) samples.push_back(to_json(v));
  wj["vectors"] = samples;
  wj["minimality_audit"] = minimality_audit(w, s);
  j["weights"] = wj;

  CoprimeResult cr = coprime_check(s);
  if (!cr.coprime) {
    j["common_factor"] = cr.factor.to_string();
    warnings.push_back("P and Q share the factor " + cr.factor.to_string());
    return finish(4);
  }

  const bool homog = is_homogeneous_system(s);
  std::optional<QhStructure> qs;
  if (!homog) qs = decompose(s, w);
  j["structure"] = qs ? to_json(*qs) : Json(nullptr);

  HomogSystem target;
  TransformRecord rec;
  Json tj;
  if (!homog) {
    auto [hl, tl] = homogenize_lcm(s, w);
    Json lj = to_json(tl);
    lj["target"] = to_json(hl);
    lj["predicted_degree"] = predicted_lcm_degree(s, w);
    lj["conjugacy_verified"] = verify_conjugacy(s, hl, tl);
    tj["lcm"] = lj;
  }
  std::tie(target, rec) = homogenize_min(s, w);
  Json mj = to_json(rec);
  mj["target"] = to_json(target);
  mj["conjugacy_verified"] = verify_conjugacy(s, target, rec);
  tj["min"] = mj;
  j["transforms"] = tj;
  if (!homog) {
    try {
      j["target_class"] = target_class_json(target_class(target));
    } catch (const std::exception& e) {
      j["target_class"] = nullptr;
      warnings.push_back(std::string("target class: ") + e.what());
    }
  } else {
    j["target_class"] = nullptr;
  }

  CharPolys cp;
  try {
    cp = char_polys(target);
  } catch (const CommonFactorError& e) {
    j["common_factor"] = e.factor();
    warnings.push_back(e.what());
    return finish(4);
  }
  j["characteristic"] = Json{{"g", cp.g.to_string()}, {"h", cp.h.to_string()}, {"g_u", cp.g_u.to_string("u")},
                             {"radial", cp.radial}};
  std::vector<DirectionReport> reports = cp.radial ? std::vector<DirectionReport>{} : classify_all(cp);
  Json dj = Json::array();
  for (auto& d : reports) dj.push_back(to_json(d));
  j["directions"] = dj;
  if (target.degree >= 2) {
    CenterResult cr = center_test(target, opt.tol);
    j["center"] = to_json(cr);
  } else {
    j["center"] = nullptr;
  }

  PortraitCode code = assemble_portrait(target, reports, rec, s);
  for (auto& wmsg : code.warnings) warnings.push_back(wmsg);

  Json famj = nullptr;
  std::string family = qs ? qs->family : "";
  if (family == "X_111") {
    try {
      H3Signature sig = x111_signature(s);
      Json xj = to_json(sig);
      if (sig.regime != sig.normalized_regime)
        warnings.push_back("a14 regime " + to_string(sig.regime) + " differs from the b05-normalised regime " +
                           to_string(sig.normalized_regime));
      try {
        X111Label lab = x111_label(sig);
        code.figure_label = lab.to_string();
        xj["label"] = lab.to_string();
      } catch (const NoRowMatchedError& e) {
        xj["label"] = nullptr;
        warnings.push_back(std::string("no table row matched: ") + e.what());
      }
      famj = Json{{"name", family}, {"x111", xj}};
    } catch (const std::exception& e) {
      warnings.push_back(std::string("X_111 analysis: ") + e.what());
    }
  } else if (family == "X_011" || family == "X_113" || family == "X_131") {
    try {
      H2Case c = h2_case(s);
      code.figure_label = "case " + c.label;
      famj = Json{{"name", family}, {"h2", to_json(c)}};
    } catch (const std::exception& e) {
      warnings.push_back(std::string("H2 analysis: ") + e.what());
    }
  } else if (!family.empty()) {
    famj = Json{{"name", family}};
  }
  j["family"] = famj;
  j["portrait"] = to_json(code);

  if (opt.oracle && target.degree >= 2) {
    Json probes = Json::array();
    int agree = 0, inconclusive = 0, total = static_cast<int>(reports.size());
    for (auto& d : reports) {
      ProbeAgreement a = probe_direction(target.sys, d, opt.radius, opt.tol);
      if (a.agrees) ++agree;
      if (a.inconclusive) ++inconclusive;
      Json pj;
      pj["direction"] = d.vertical ? "vertical" : "u0 = " + d.root->to_string();
      pj["expected"] = to_string(d.local_type_blowup);
      pj["observed"] = a.probe.local_type ? Json(to_string(*a.probe.local_type)) : Json(nullptr);
      pj["ray"] = a.probe.ray;
      pj["radius"] = a.probe.radius;
      pj["agrees"] = a.agrees;
      pj["inconclusive"] = a.inconclusive;
      probes.push_back(pj);
      if (!a.agrees && !a.inconclusive) warnings.push_back("oracle disagrees at " + pj["direction"].get<std::string>());
    }
    // Without characteristic directions every ray should be passed by.
    if (reports.empty()) {
      for (int k = 0; k < 8; ++k) {
        double angle = k * std::numbers::pi / 4;
        ProbeResult r = sector_probe(target.sys, angle, opt.radius, opt.tol);
        bool ok = r.ray == "pass";
        bool inc = r.ray == "inconclusive";
        agree += ok;
        inconclusive += inc;
        ++total;
        char buf[32];
        std::snprintf(buf, sizeof buf, "angle %d*pi/4", k);
        probes.push_back(Json{{"direction", buf},  {"expected", "pass"}, {"observed", r.ray}, {"ray", r.ray},
                              {"radius", r.radius}, {"agrees", ok},       {"inconclusive", inc}});
        if (!ok && !inc) warnings.push_back(std::string("oracle disagrees at ") + buf);
      }
    }
    j["oracle"] = Json{{"ran", true},        {"plane", "target"},   {"tol", opt.tol},
                       {"radius", opt.radius}, {"agreements", agree}, {"inconclusive", inconclusive},
                       {"total", total},       {"probes", probes}};
  } else {
    j["oracle"] = Json{{"ran", false}};
  }
  return finish(0);
}

Json catalog_json(int degree) {
  if (degree != 5) throw PreconditionError("only degree 5 is supported");
  Json fams = Json::array();
  for (auto& e : quintic_catalog()) {
    Json f;
    f["name"] = e.name;
    f["p"] = e.p;
    f["varsigma"] = e.varsigma;
    f["kappa"] = e.kappa;
    f["weight"] = to_json(e.weight);
    Json pn = Json::array(), qn = Json::array();
    for (auto& x : e.p_support) pn.push_back(coeff_name('a', x));
    for (auto& x : e.q_support) qn.push_back(coeff_name('b', x));
    f["p_coefficients"] = pn;
    f["q_coefficients"] = qn;
    f["nonvanishing"] = e.nonvanishing;
    fams.push_back(f);
  }
  return Json{{"schema", "qhpp.catalog/1"}, {"degree", degree}, {"count", fams.size()}, {"families", fams}};
}

Json census_json(bool greater, bool less, bool equal) {
  X111Census c = x111_census();
  Json j;
  j["schema"] = "qhpp.census/1";
  Json counts = Json::object();
  int total = 0;
  if (greater) counts["a14>1"] = c.greater, total += c.greater;
  if (less) counts["a14<1"] = c.less, total += c.less;
  if (equal) counts["a14=1"] = c.equal, total += c.equal;
  counts["total"] = total;
  j["counts"] = counts;
  Json labels = Json::object();
  for (auto& [k, v] : c.labels) {
    bool keep = (k == to_string(A14Regime::Greater) && greater) || (k == to_string(A14Regime::Less) && less) ||
                (k == to_string(A14Regime::Equal) && equal);
    if (keep) labels[k] = v;
  }
  j["labels"] = labels;
  j["unmatched_sign_tuples"] = c.unmatched;
  return j;
}

}  // namespace qhpp

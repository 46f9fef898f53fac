#include "qhpp/h2case.hpp"

#include <algorithm>
#include <set>

#include "qhpp/errors.hpp"
#include "qhpp/qhcore.hpp"

namespace qhpp {

std::string NormalCoeff::to_string() const {
  if (exact) return qhpp::to_string(*exact);
  return (sign > 0 ? "+" : sign < 0 ? "-" : "0") + std::string("~") + std::to_string(approx);
}

namespace {

NormalCoeff eval_at(const UniPoly& f, const AlgebraicRoot& u0) {
  NormalCoeff c;
  if (u0.exact() || f.degree() <= 0) {
    Rat v = u0.exact() ? f.eval(*u0.exact()) : f.coeff(0);
    c.exact = v;
    c.sign = sign(v);
    c.approx = to_double(v);
    return c;
  }
  AlgebraicRoot r = u0;
  c.sign = r.sign_of(f);
  c.approx = f.eval(r.approx());
  if (c.sign == 0) c.approx = 0.0;
  return c;
}

UniPoly lin(const Rat& a, const Rat& b) { return UniPoly(std::vector<Rat>{a, b}); }

// Coefficients of the system moved so that direction (1, u0) becomes the x1-axis,
// as polynomials in u0: x = x1, y = u0 x1 + y1.
H2NormalForm normal_form(const PolySystem& s, const AlgebraicRoot& u0, const std::string& dir) {
  Rat c20 = s.p.coeff(2, 0), c11 = s.p.coeff(1, 1), c02 = s.p.coeff(0, 2);
  Rat d20 = s.q.coeff(2, 0), d11 = s.q.coeff(1, 1), d02 = s.q.coeff(0, 2);
  UniPoly a11(std::vector<Rat>{c20, c11, c02});
  UniPoly a12 = lin(c11, 2 * c02);
  UniPoly a22{c02};
  UniPoly b12 = lin(d11, 2 * d02) - UniPoly::var() * lin(c11, 2 * c02);
  UniPoly b22 = lin(d02, -c02);
  H2NormalForm nf;
  nf.direction = dir;
  nf.alpha11 = eval_at(a11, u0);
  nf.alpha12 = eval_at(a12, u0);
  nf.alpha22 = eval_at(a22, u0);
  nf.beta12 = eval_at(b12, u0);
  nf.beta22 = eval_at(b22, u0);
  return nf;
}

}  // namespace

H2Case h2_case(const PolySystem& q) {
  require_nonzero(q);
  H2Case out;
  HomogSystem h;
  if (q.p.is_homogeneous() && q.q.is_homogeneous() && q.p.degree() == q.q.degree()) {
    h.sys = q;
    h.degree = q.degree();
  } else {
    auto fam = weight_vectors(q);
    if (!fam) throw NotQuasiHomogeneousError("system is not quasi-homogeneous");
    out.family = decompose(q, fam->vectors.front()).family;
    h = homogenize_min(q, fam->vectors.front()).first;
  }
  if (h.degree != 2) throw PreconditionError("system does not reduce to a quadratic homogeneous target");
  CharPolys cp = char_polys(h);  // rejects the common-factor case a22 = b22 = 0

  std::vector<AlgebraicRoot> roots = real_roots(cp.g_u);
  bool vertical = sign(cp.g_v.coeff(0)) == 0;
  out.finite_roots = static_cast<int>(roots.size());
  out.directions = out.finite_roots + (vertical ? 1 : 0);
  out.label = out.directions >= 3 ? "(i)" : out.directions == 2 ? "(ii)" : "(iii)";

  if (roots.empty()) {
    AlgebraicRoot zero = AlgebraicRoot::rational(UniPoly::var(), Rat(0), 1);
    out.normal_form = normal_form(h.sys.swap_xy(), zero, "vertical");
  } else {
    auto it = std::find_if(roots.begin(), roots.end(), [](const AlgebraicRoot& r) { return r.is_rational(); });
    const AlgebraicRoot& u0 = it != roots.end() ? *it : roots.front();
    out.normal_form = normal_form(h.sys, u0, "u0 = " + u0.to_string());
  }

  const H2NormalForm& nf = out.normal_form;
  if (nf.alpha22.sign != 0) {
    out.infinity_branch = "unique";
  } else {
    out.infinity_branch = "fulfils";
    if (nf.beta22.sign == 0) throw CommonFactorError("a22 = b22 = 0: common factor", "x1");
    // a22 = 0 forces a rational direction, so a12 and b22 are exact here.
    Rat a12 = nf.alpha12.exact.value_or(Rat(0)), b22 = nf.beta22.exact.value_or(Rat(0));
    int s = sign((2 * a12 - b22) * b22);
    out.i1_type = s > 0 ? "saddle" : s < 0 ? "node" : "none";
  }
  out.portrait = portrait_of(q);
  return out;
}

std::map<std::string, std::vector<std::string>> h2_case_codes() {
  // X_011 members x' = c02 y^5 + c11 x y^3 + c20 x^2 y, y' = (d02 y^4 + d11 x y^2 + d20 x^2)/2
  // reduce to the quadratic target with exactly these coefficients.
  const int vals[] = {-2, -1, 0, 1, 2};
  const int nz[] = {-2, -1, 1, 2};
  std::map<std::string, std::set<std::string>> seen;
  auto entry = catalog_entry("X_011");
  for (int c02 : {-1, 1})
    for (int d20 : nz)
      for (int c11 : vals)
        for (int c20 : vals)
          for (int d11 : vals)
            for (int d02 : vals) {
              PolySystem s = entry->instance({Rat(c02), Rat(c11), Rat(c20)},
                                             {Rat(d02, 2), Rat(d11, 2), Rat(d20, 2)});
              try {
                H2Case c = h2_case(s);
                seen[c.label].insert(c.portrait.key());
              } catch (const std::exception&) {
              }
            }
  std::map<std::string, std::vector<std::string>> out;
  for (auto& [k, v] : seen) out[k] = {v.begin(), v.end()};
  return out;
}

}  // namespace qhpp

#include "qhpp/homoganalysis.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <numbers>
#include <unsupported/Eigen/Polynomials>

#include "qhpp/errors.hpp"

namespace qhpp {

std::string to_string(LocalType t) {
  switch (t) {
    case LocalType::Saddle: return "saddle";
    case LocalType::Node: return "node";
    case LocalType::SaddleNode: return "saddle-node";
  }
  return "?";
}

std::string to_string(OrbitCount c) { return c == OrbitCount::One ? "one" : "infinitely-many"; }
std::string to_string(FlowSign f) { return f == FlowSign::Outgoing ? "outgoing" : "incoming"; }

std::string to_string(CenterVerdict v) {
  switch (v) {
    case CenterVerdict::GlobalCenter: return "global-center";
    case CenterVerdict::NotCenter: return "not-center";
    case CenterVerdict::NumericallyCenterUnverified: return "numerically-center, unverified";
  }
  return "?";
}

double DirectionReport::angle() const {
  if (vertical) return std::numbers::pi / 2;
  return std::atan(root->approx());
}

CharPolys char_polys(const PolySystem& s) {
  CoprimeResult cr = coprime_check(s);
  if (!cr.coprime) throw CommonFactorError("P_n and Q_n share a common factor", cr.factor.to_string());
  CharPolys cp;
  cp.n = s.degree();
  cp.p = s.p;
  cp.q = s.q;
  BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
  cp.g = x * s.q - y * s.p;
  cp.h = y * s.q + x * s.p;
  cp.g_u = cp.g.at_x1();
  cp.g_v = cp.g.at_y1();
  cp.p_u = s.p.at_x1();
  cp.q_v = s.q.at_y1();
  cp.radial = cp.g.is_zero();
  return cp;
}

CharPolys char_polys(const HomogSystem& h) { return char_polys(h.sys); }

namespace {

LocalType opposite(LocalType t) {
  if (t == LocalType::Saddle) return LocalType::Node;
  if (t == LocalType::Node) return LocalType::Saddle;
  return t;
}

}  // namespace

DirectionReport classify_direction(const CharPolys& cp, const AlgebraicRoot& u0) {
  AlgebraicRoot r = u0;
  if (r.sign_of(cp.g_u) != 0) throw PreconditionError("u0 is not a root of G(1,u)");
  DirectionReport d;
  d.multiplicity = r.multiplicity();
  d.p_sign = r.sign_of(cp.p_u);
  if (d.p_sign == 0) throw CommonFactorError("P_n(1,u0) = 0 at a root of G(1,u)", "y - u0*x");
  auto [gl, gr] = r.side_signs(cp.g_u);
  d.g_left = gl;
  d.g_right = gr;
  // Sign of G^(m)(1,u0) is the sign just right of the root.
  if (d.multiplicity % 2 == 1) {
    d.local_type_blowup = d.p_sign * gr < 0 ? LocalType::Saddle : LocalType::Node;
    d.infinity_type = opposite(d.local_type_blowup);
    if (d.infinity_type == LocalType::Node) d.infinity_stability = gr < 0 ? "stable" : "unstable";
  } else {
    d.local_type_blowup = LocalType::SaddleNode;
    d.infinity_type = LocalType::SaddleNode;
    d.side_note = gr * d.p_sign > 0 ? "parabolic side: u > u0" : "parabolic side: u < u0";
  }
  d.orbit_count_origin = d.local_type_blowup == LocalType::Saddle ? OrbitCount::One : OrbitCount::InfinitelyMany;
  d.flow_sign = d.p_sign > 0 ? FlowSign::Outgoing : FlowSign::Incoming;
  r.refine_to(Rat(1, 1000000));
  d.root = r;
  return d;
}

std::optional<DirectionReport> classify_vertical(const CharPolys& cp) {
  if (cp.radial) return std::nullopt;
  if (cp.g_v.coeff(0) != 0) return std::nullopt;
  DirectionReport d;
  d.vertical = true;
  d.multiplicity = root_multiplicity(cp.g_v, Rat(0));
  d.p_sign = sgn(cp.q_v.coeff(0));
  if (d.p_sign == 0) throw CommonFactorError("P_n and Q_n both vanish on the y-axis", "x");
  int sm = sgn(cp.g_v.coeff(d.multiplicity));
  int m = d.multiplicity;
  // In theta order: left of pi/2 is v = cot(theta) > 0, right is v < 0.
  d.g_left = sm;
  d.g_right = m % 2 == 0 ? sm : -sm;
  // v-chart blow-up: v' = -G(v,1), y' = y Q(v,1).
  if (m % 2 == 1) {
    d.local_type_blowup = d.p_sign * (-sm) < 0 ? LocalType::Saddle : LocalType::Node;
    d.infinity_type = opposite(d.local_type_blowup);
    if (d.infinity_type == LocalType::Node) d.infinity_stability = sm > 0 ? "stable" : "unstable";
  } else {
    d.local_type_blowup = LocalType::SaddleNode;
    d.infinity_type = LocalType::SaddleNode;
    d.side_note = (-sm) * d.p_sign > 0 ? "parabolic side: x > 0" : "parabolic side: x < 0";
  }
  d.orbit_count_origin = d.local_type_blowup == LocalType::Saddle ? OrbitCount::One : OrbitCount::InfinitelyMany;
  d.flow_sign = d.p_sign > 0 ? FlowSign::Outgoing : FlowSign::Incoming;
  return d;
}

std::vector<DirectionReport> classify_all(const CharPolys& cp) {
  std::vector<DirectionReport> out;
  if (cp.radial) return out;
  if (!cp.g_u.is_zero())
    for (const auto& r : real_roots(cp.g_u)) out.push_back(classify_direction(cp, r));
  if (auto v = classify_vertical(cp)) out.push_back(*v);
  return out;
}

double center_integral(const CharPolys& cp) {
  struct Term {
    int i, j;
    double c;
  };
  auto terms = [](const BiPoly& p) {
    std::vector<Term> out;
    for (auto& [e, c] : p.terms()) out.push_back({e.first, e.second, c.get_d()});
    return out;
  };
  auto eval = [](const std::vector<Term>& ts, double x, double y) {
    double v = 0.0;
    for (auto& t : ts) v += t.c * std::pow(x, t.i) * std::pow(y, t.j);
    return v;
  };
  const auto h = terms(cp.h), g = terms(cp.g);
  auto f = [&](double th) {
    double c = std::cos(th), s = std::sin(th);
    return eval(h, c, s) / eval(g, c, s);
  };
  double err = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -std::numbers::pi / 2,
                                                                       std::numbers::pi / 2, 10, 1e-12, &err);
}

namespace {

// s with s*a = 1 mod m (a, m coprime).
UniPoly inverse_mod(const UniPoly& a, const UniPoly& m) {
  UniPoly r0 = m, r1 = a % m, s0, s1(Rat(1));
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    UniPoly s2 = s0 - q * s1;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
  }
  if (r1.is_zero()) throw InternalError("inverse_mod: not coprime");
  return (s1 * Rat(1 / r1.lead())) % m;
}

bool is_rational_square(const Rat& v) {
  if (v < 0) return false;
  return mpz_perfect_square_p(v.get_num_mpz_t()) && mpz_perfect_square_p(v.get_den_mpz_t());
}

Rat rational_sqrt(const Rat& v) {
  Int n, d;
  mpz_sqrt(n.get_mpz_t(), v.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v.get_den_mpz_t());
  Rat r(n, d);
  r.canonicalize();
  return r;
}

struct QuadPiece {
  Rat b, c;   // u^2 + b u + c
  Rat coeff;  // contribution = coeff * pi / sqrt(D)
  Rat D;
};

// Exact PV integral over irreducible rational quadratic factors; nullopt when not applicable.
std::optional<std::pair<bool, double>> partial_fraction_integral(const CharPolys& cp) {
  const UniPoly& g = cp.g_u;
  if (g.degree() < 2 || g.degree() % 2 != 0) return std::nullopt;
  if (gcd(g, g.derivative()).degree() > 0) return std::nullopt;
  UniPoly gi = g.primitive_integer();
  Int a = gi.lead().get_num();
  Eigen::VectorXd coeffs(gi.degree() + 1);
  for (int k = 0; k <= gi.degree(); ++k) coeffs[k] = gi.coeff(k).get_d();
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
  solver.compute(coeffs);
  std::vector<QuadPiece> pieces;
  UniPoly rest = g;
  for (int k = 0; k < solver.roots().size(); ++k) {
    std::complex<double> z = solver.roots()[k];
    if (z.imag() <= 0) continue;
    auto round_to = [&](double v) {
      double scaled = v * a.get_d();
      if (!std::isfinite(scaled) || std::fabs(scaled) > 1e15) return std::optional<Rat>();
      Rat r(Int(static_cast<long>(std::llround(scaled))), a);
      r.canonicalize();
      return std::optional<Rat>(r);
    };
    auto b = round_to(-2 * z.real());
    auto c = round_to(std::norm(z));
    if (!b || !c) return std::nullopt;
    UniPoly q(std::vector<Rat>{*c, *b, Rat(1)});
    auto [quot, rem] = divmod(rest, q);
    if (!rem.is_zero()) return std::nullopt;
    rest = quot;
    pieces.push_back({*b, *c, Rat(0), *c - *b * *b / 4});
  }
  if (rest.degree() != 0) return std::nullopt;
  for (auto& pc : pieces) {
    UniPoly q(std::vector<Rat>{pc.c, pc.b, Rat(1)});
    UniPoly gk = g / q;
    UniPoly num = (cp.p_u * inverse_mod(gk, q)) % q;
    Rat A = num.coeff(1), B = num.coeff(0);
    pc.coeff = B - A * pc.b / 2;
  }
  // Group by square class of D; distinct classes are linearly independent over Q.
  std::vector<bool> used(pieces.size(), false);
  bool all_zero = true;
  double value = 0.0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (used[i]) continue;
    Rat sum(0);
    for (std::size_t j = i; j < pieces.size(); ++j) {
      if (used[j]) continue;
      Rat ratio = pieces[j].D / pieces[i].D;
      if (!is_rational_square(ratio)) continue;
      used[j] = true;
      sum += pieces[j].coeff / rational_sqrt(ratio);
    }
    if (sum != 0) all_zero = false;
    value += sum.get_d() * std::numbers::pi / std::sqrt(pieces[i].D.get_d());
  }
  return std::make_pair(all_zero, value);
}

}  // namespace

CenterResult center_test(const HomogSystem& h, double tol) {
  CenterResult r;
  CharPolys cp = char_polys(h);
  if (cp.n % 2 == 0) {
    r.verdict = CenterVerdict::NotCenter;
    r.method = "parity";
    r.reason = "even degree";
    return r;
  }
  if (cp.radial) {
    r.method = "real-direction";
    r.reason = "every direction is characteristic";
    return r;
  }
  if (cp.g_v.coeff(0) == 0) {
    r.method = "real-direction";
    r.reason = "the y-axis is an invariant line";
    return r;
  }
  if (SturmSequence(squarefree_part(cp.g_u)).count_all() > 0) {
    r.method = "real-direction";
    r.reason = "G(1,u) has a real root";
    return r;
  }
  // P/G odd in u integrates to zero.
  if (cp.p_u * cp.g_u.reflect() == -(cp.p_u.reflect() * cp.g_u)) {
    r.verdict = CenterVerdict::GlobalCenter;
    r.method = "odd-symmetry";
    r.reason = "P(1,u)/G(1,u) is odd";
    r.integral = 0.0;
    return r;
  }
  if (auto pf = partial_fraction_integral(cp)) {
    r.method = "partial-fractions";
    r.integral = pf->second;
    r.verdict = pf->first ? CenterVerdict::GlobalCenter : CenterVerdict::NotCenter;
    r.reason = pf->first ? "integral vanishes exactly" : "integral is nonzero";
    return r;
  }
  double I = center_integral(cp);
  r.method = "quadrature";
  r.integral = I;
  r.exact = false;
  if (std::fabs(I) < tol) {
    r.verdict = CenterVerdict::NumericallyCenterUnverified;
    r.reason = "integral below tolerance";
  } else {
    r.verdict = CenterVerdict::NotCenter;
    r.reason = "integral is nonzero";
  }
  return r;
}

std::string linear_type(const HomogSystem& h) {
  const BiPoly& P = h.sys.p;
  const BiPoly& Q = h.sys.q;
  if (h.degree == 0) return "regular (constant field)";
  if (h.degree != 1) return "";
  Rat a = P.coeff(1, 0), b = P.coeff(0, 1), c = Q.coeff(1, 0), d = Q.coeff(0, 1);
  Rat T = a + d, D = a * d - b * c, disc = T * T - 4 * D;
  if (D < 0) return "saddle";
  if (D == 0) return "degenerate (line of equilibria)";
  std::string stab = T < 0 ? "stable " : "unstable ";
  if (disc > 0) return stab + "node";
  if (disc == 0) return stab + (b == 0 && c == 0 ? "star node" : "degenerate node");
  if (T == 0) return "center";
  return stab + "focus";
}

}  // namespace qhpp

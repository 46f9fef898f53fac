#include "qhpp/x111.hpp"

#include <set>
#include <sstream>

#include "qhpp/errors.hpp"

namespace qhpp {

std::string to_string(A14Regime r) {
  switch (r) {
    case A14Regime::Greater: return "a14>1";
    case A14Regime::Less: return "a14<1";
    case A14Regime::Equal: return "a14=1";
  }
  return "?";
}

std::string to_string(RootCase c) {
  switch (c) {
    case RootCase::Three: return "three-roots";
    case RootCase::Two: return "two-roots";
    case RootCase::One: return "one-root";
  }
  return "?";
}

namespace {

A14Regime regime_of(const Rat& v) {
  if (v > 1) return A14Regime::Greater;
  if (v < 1) return A14Regime::Less;
  return A14Regime::Equal;
}

UniPoly poly3(const Rat& a0, const Rat& a1, const Rat& a2, const Rat& a3) {
  return UniPoly(std::vector<Rat>{a0, a1, a2, a3});
}

}  // namespace

std::string H3Signature::to_string() const {
  std::ostringstream os;
  os << qhpp::to_string(root_case);
  if (!sub_case.empty()) os << "/" << sub_case;
  os << " delta=" << qhpp::to_string(delta) << " " << qhpp::to_string(regime);
  if (root_case == RootCase::Three)
    os << " P(u+)=" << p_plus << " P(u-)=" << p_minus << " G'(u+)=" << gp_plus << " G'(u-)=" << gp_minus;
  if (root_case == RootCase::Two) os << " P(u1)=" << p1 << " G(u1)=" << g1 << (reflected ? " reflected" : "");
  if (root_case == RootCase::One) os << " G^(" << g0_order << ")(0)=" << g0;
  os << " P(0)=" << p0;
  return os.str();
}

H3Signature h3_signature(const Rat& c12, const Rat& c21, const Rat& c30, const Rat& d12, const Rat& d21,
                         A14Regime regime) {
  if (c30 == 0) throw PreconditionError("c30 must be nonzero");
  if (d21 == c30 && c12 == 1 && d12 == c21)
    throw CommonFactorError("P3 and Q3 share a common factor (d21 = c30, c12 = 1, d12 = c21)", "y*(y+...)");
  H3Signature s;
  s.c12 = c12;
  s.c21 = c21;
  s.c30 = c30;
  s.d12 = d12;
  s.d21 = d21;
  s.regime = regime;
  s.normalized_regime = regime_of(2 * c12);
  s.delta = (d12 - c21) * (d12 - c21) - 4 * (1 - c12) * (d21 - c30);
  s.p0 = sgn(c30);
  UniPoly P(std::vector<Rat>{c30, c21, c12});
  UniPoly G = poly3(Rat(0), d21 - c30, d12 - c21, 1 - c12);
  UniPoly G1 = G.derivative(), G2 = G1.derivative(), G3 = G2.derivative();

  if (c12 > 1)
    s.iy_type = "saddle";
  else if (c12 < 1)
    s.iy_type = "stable node";
  else if (d12 != c21)
    s.iy_type = "saddle-node";
  else
    s.iy_type = d21 < c30 ? "saddle" : "stable node";

  if (c12 != 1 && d21 != c30 && s.delta > 0) {
    s.root_case = RootCase::Three;
    UniPoly q(std::vector<Rat>{d21 - c30, d12 - c21, 1 - c12});
    auto roots = real_roots(q);
    if (roots.size() != 2) throw InternalError("expected two roots of the quadratic factor");
    // u+ carries +sqrt(delta): the larger root when 1 - c12 > 0.
    bool up_is_large = 1 - c12 > 0;
    s.u_plus = up_is_large ? roots[1] : roots[0];
    s.u_minus = up_is_large ? roots[0] : roots[1];
    s.p_plus = s.u_plus->sign_of(P);
    s.p_minus = s.u_minus->sign_of(P);
    s.gp_plus = s.u_plus->sign_of(G1);
    s.gp_minus = s.u_minus->sign_of(G1);
    return s;
  }
  Rat u1;
  if (d21 == c30 && (d12 - c21) * (c12 - 1) != 0) {
    s.sub_case = "u11";
    u1 = (d12 - c21) / (c12 - 1);
  } else if (c12 == 1 && (c30 - d21) * (d12 - c21) != 0) {
    s.sub_case = "u12";
    u1 = (c30 - d21) / (d12 - c21);
  } else if (s.delta == 0 && c21 != d12) {
    s.sub_case = "u13";
    u1 = (c21 - d12) / (2 * (1 - c12));
  }
  if (!s.sub_case.empty()) {
    s.root_case = RootCase::Two;
    s.u1 = AlgebraicRoot::rational(G, u1, s.sub_case == "u13" ? 2 : 1);
    s.p1 = sgn(P.eval(u1));
    s.g1 = s.sub_case == "u13" ? sgn(G2.eval(u1)) : sgn(G1.eval(u1));
    // x -> -x maps u1 to -u1, keeps P3 and G3' signs and flips G3''.
    if (u1 < 0) {
      s.reflected = true;
      if (s.sub_case == "u13") s.g1 = -s.g1;
    }
    return s;
  }
  s.root_case = RootCase::One;
  if (d21 == c30) {
    s.sub_case = "C33";
    if (G2.eval(Rat(0)) != 0) {
      s.g0_order = 2;
      s.g0 = sgn(G2.eval(Rat(0)));
    } else {
      s.g0_order = 3;
      s.g0 = sgn(G3.eval(Rat(0)));
    }
  } else {
    s.sub_case = c12 == 1 ? "C32" : "C31";
    s.g0_order = 1;
    s.g0 = sgn(G1.eval(Rat(0)));
  }
  return s;
}

H3Signature x111_signature(const PolySystem& q) {
  static const std::set<Exp> psup{{1, 4}, {2, 2}, {3, 0}};
  static const std::set<Exp> qsup{{0, 5}, {1, 3}, {2, 1}};
  for (const auto& [e, c] : q.p.terms())
    if (!psup.count(e)) throw PreconditionError("not an X_111 member: x-component has x^i*y^j outside the family");
  for (const auto& [e, c] : q.q.terms())
    if (!qsup.count(e)) throw PreconditionError("not an X_111 member: y-component has x^i*y^j outside the family");
  Rat a14 = q.p.coeff(1, 4), a22 = q.p.coeff(2, 2), a30 = q.p.coeff(3, 0);
  Rat b05 = q.q.coeff(0, 5), b13 = q.q.coeff(1, 3), b21 = q.q.coeff(2, 1);
  if (a30 == 0 || b05 == 0) throw PreconditionError("not an X_111 member: a30*b05 = 0");
  H3Signature s = h3_signature(a14 / (2 * b05), a22 / (2 * b05), a30 / (2 * b05), b13 / b05, b21 / b05,
                               regime_of(a14));
  s.a14 = a14;
  s.a22 = a22;
  s.a30 = a30;
  s.b05 = b05;
  s.b13 = b13;
  s.b21 = b21;
  s.normalized_regime = regime_of(a14 / b05);
  return s;
}

std::string X111Label::to_string() const {
  std::string s = "Table " + std::to_string(table) + " / Figure (" + figure + ")";
  if (regime == A14Regime::Equal) s += " / infinity fulfils singularities";
  return s;
}

namespace {

// "++", "--" or "+-" for a pair of signs.
std::string pair_pattern(int a, int b) {
  if (a > 0 && b > 0) return "++";
  if (a < 0 && b < 0) return "--";
  return "+-";
}

std::optional<std::string> table1(const H3Signature& s) {
  if (s.root_case == RootCase::Three) {
    std::string P = pair_pattern(s.p_plus, s.p_minus);
    std::string G = s.gp_plus * s.gp_minus > 0 ? pair_pattern(s.gp_plus, s.gp_minus) : "mix";
    if (P == "++" && G != "mix" && s.p0 > 0) return "I";
    static const std::map<std::tuple<std::string, std::string, int>, std::string> rows{
        {{"--", "++", 1}, "II"},    {{"++", "++", -1}, "III.1"}, {{"+-", "--", 1}, "III.2"},
        {{"--", "--", -1}, "III.3"}, {{"++", "--", -1}, "IV.1"}, {{"+-", "++", 1}, "IV.2"},
        {{"--", "++", -1}, "IV.3"}, {{"+-", "++", -1}, "V.1"},  {{"+-", "--", -1}, "V.2"}};
    auto it = rows.find({P, G, s.p0});
    if (it == rows.end()) return std::nullopt;
    return it->second;
  }
  if (s.root_case == RootCase::Two) {
    if (s.p1 > 0 && s.p0 > 0) return "I";
    static const std::map<std::tuple<std::string, int, int, int>, std::string> rows{
        {{"u11", -1, -1, 1}, "III.2"},  {{"u12", -1, -1, 1}, "III.2"},  {{"u11", -1, 1, 1}, "IV.2"},
        {{"u11", 1, 1, -1}, "VI.1"},    {{"u12", -1, -1, -1}, "VI.2"},  {{"u13", -1, 1, 1}, "VI.3"},
        {{"u13", -1, -1, 1}, "VI.4"},   {{"u11", 1, -1, -1}, "VI.5"},   {{"u12", -1, 1, -1}, "VI.6"},
        {{"u12", 1, -1, -1}, "VII.1"},  {{"u13", 1, 1, -1}, "VII.1"},   {{"u12", -1, 1, 1}, "VII.2"},
        {{"u11", -1, 1, -1}, "VII.3"},  {{"u13", -1, 1, -1}, "VII.3"},  {{"u12", 1, 1, -1}, "VIII.1"},
        {{"u13", 1, -1, -1}, "VIII.1"}, {{"u11", -1, -1, -1}, "VIII.2"}, {{"u13", -1, -1, -1}, "VIII.2"}};
    auto it = rows.find({s.sub_case, s.p1, s.g1, s.p0});
    if (it == rows.end()) return std::nullopt;
    return it->second;
  }
  if (s.p0 > 0) return "I";
  if (s.sub_case == "C33" && s.g0_order == 2) return "XI";
  return s.g0 > 0 ? "IX" : "X";
}

std::optional<std::string> table2(const H3Signature& s) {
  if (s.root_case == RootCase::Three) {
    if (!(s.gp_plus > 0 && s.gp_minus > 0)) return std::nullopt;
    std::string P = pair_pattern(s.p_plus, s.p_minus);
    static const std::map<std::pair<std::string, int>, std::string> rows{
        {{"++", 1}, "I"}, {{"--", 1}, "II"}, {{"++", -1}, "III"}, {{"--", -1}, "IV.1"}, {{"+-", 1}, "IV.2"}, {{"+-", -1}, "V"}};
    return rows.at({P, s.p0});
  }
  if (s.root_case == RootCase::Two) {
    static const std::map<std::tuple<std::string, int, int, int>, std::string> rows{
        {{"u11", 1, 1, 1}, "VI"},     {{"u13", 1, 1, 1}, "VI"},       {{"u11", 1, 1, -1}, "VII.1"},
        {{"u13", -1, 1, 1}, "VII.2"}, {{"u11", -1, 1, 1}, "VIII.1"},  {{"u11", -1, 1, -1}, "VIII.2"},
        {{"u13", -1, 1, -1}, "VIII.2"}, {{"u13", 1, 1, -1}, "VIII.3"}};
    auto it = rows.find({s.sub_case, s.p1, s.g1, s.p0});
    if (it == rows.end()) return std::nullopt;
    return it->second;
  }
  if (s.sub_case == "C32") return std::nullopt;
  if (s.sub_case == "C33" && s.g0_order != 3) return std::nullopt;
  if (s.g0 <= 0) return std::nullopt;
  return s.p0 < 0 ? "IX" : "X";
}

}  // namespace

X111Label x111_label(const H3Signature& sig) {
  X111Label l;
  l.regime = sig.regime;
  std::optional<std::string> fig;
  if (sig.regime == A14Regime::Greater) {
    l.table = 1;
    fig = table1(sig);
  } else {
    l.table = 2;
    fig = table2(sig);
  }
  if (!fig)
    throw NoRowMatchedError("no row of Table " + std::to_string(l.table) + " matches the sign tuple " + sig.to_string());
  l.figure = *fig;
  return l;
}

X111Census x111_census() {
  X111Census c;
  std::map<A14Regime, std::set<std::string>> seen;
  // Instances are built from prescribed roots of G3(1,u)/u, one construction per root case.
  const std::vector<Rat> c12s{Rat(-2), Rat(-1, 2), Rat(1, 4), Rat(3, 4), Rat(1), Rat(3, 2), Rat(2), Rat(3)};
  const std::vector<Rat> roots{Rat(-2), Rat(-1), Rat(-1, 2), Rat(1, 2), Rat(1), Rat(2), Rat(3)};
  const std::vector<Rat> c21s{Rat(-4), Rat(-1), Rat(0), Rat(1), Rat(4)};
  const std::vector<Rat> c30s{Rat(-1), Rat(1)};
  auto visit = [&](A14Regime regime, const Rat& c12, const Rat& c21, const Rat& c30, const Rat& d12, const Rat& d21) {
    if (d21 == c30 && c12 == 1 && d12 == c21) return;
    H3Signature s = h3_signature(c12, c21, c30, d12, d21, regime);
    try {
      seen[regime].insert(x111_label(s).to_string());
    } catch (const NoRowMatchedError&) {
      ++c.unmatched;
    }
  };
  for (A14Regime regime : {A14Regime::Greater, A14Regime::Less, A14Regime::Equal}) {
    for (const Rat& c12 : c12s) {
      // Table 2 describes the case c12 < 1.
      if (regime != A14Regime::Greater && c12 >= 1) continue;
      const Rat a = 1 - c12;
      for (const Rat& c21 : c21s)
        for (const Rat& c30 : c30s) {
          auto put = [&](const Rat& lin, const Rat& con) { visit(regime, c12, c21, c30, c21 + lin, c30 + con); };
          if (a != 0) {
            for (std::size_t i = 0; i < roots.size(); ++i) {
              for (std::size_t j = i + 1; j < roots.size(); ++j)
                put(-a * (roots[i] + roots[j]), a * roots[i] * roots[j]);  // three roots
              put(-a * roots[i], Rat(0));                                    // u11
              put(-2 * a * roots[i], a * roots[i] * roots[i]);              // u13
              put(-2 * a * roots[i], a * (roots[i] * roots[i] + 1));        // C31
            }
            put(Rat(0), Rat(0));  // C33, triple root
          } else {
            for (const Rat& k : {Rat(-1), Rat(1)}) {
              for (const Rat& u1 : roots) put(k, -k * u1);  // u12
              put(Rat(0), k);                               // C32
              put(k, Rat(0));                               // C33, double root
            }
          }
        }
    }
  }
  c.greater = static_cast<int>(seen[A14Regime::Greater].size());
  c.less = static_cast<int>(seen[A14Regime::Less].size());
  c.equal = static_cast<int>(seen[A14Regime::Equal].size());
  c.total = c.greater + c.less + c.equal;
  for (auto& [r, labels] : seen) c.labels[to_string(r)] = std::vector<std::string>(labels.begin(), labels.end());
  return c;
}

}  // namespace qhpp

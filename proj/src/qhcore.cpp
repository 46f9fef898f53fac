#include "qhpp/qhcore.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qhpp/errors.hpp"

namespace qhpp {

std::string WeightVector::to_string() const {
  return "(" + std::to_string(s1) + ", " + std::to_string(s2) + ", " + std::to_string(d) + ")";
}

bool is_weight_vector(const PolySystem& s, long s1, long s2, long d) {
  if (s1 <= 0 || s2 <= 0 || d <= 0) return false;
  for (const auto& [e, c] : s.p.terms())
    if (e.first * s1 + e.second * s2 != s1 + d - 1) return false;
  for (const auto& [e, c] : s.q.terms())
    if (e.first * s1 + e.second * s2 != s2 + d - 1) return false;
  return true;
}

std::optional<WeightFamily> weight_vectors(const PolySystem& s) {
  require_nonzero(s);
  // Each monomial contributes a*s1 + b*s2 = d - 1.
  std::set<std::pair<long, long>> cons;
  for (const auto& [e, c] : s.p.terms()) cons.emplace(e.first - 1, e.second);
  for (const auto& [e, c] : s.q.terms()) cons.emplace(e.first, e.second - 1);

  WeightFamily fam;
  auto [a0, b0] = *cons.begin();
  if (cons.size() == 1) {
    if (a0 < 0 || b0 < 0) return std::nullopt;
    fam.two_parameter = true;
    fam.vectors.push_back({1, 1, a0 + b0 + 1, true});
    fam.vectors.push_back({2, 2, 2 * (a0 + b0) + 1, false});
    fam.vectors.push_back({3, 3, 3 * (a0 + b0) + 1, false});
    fam.generator = "(s1, s2, " + std::to_string(a0) + "*s1 + " + std::to_string(b0) +
                    "*s2 + 1) for all s1, s2 >= 1";
    return fam;
  }

  long da = 0, db = 0;
  for (const auto& [a, b] : cons) {
    if (a != a0 || b != b0) {
      da = a - a0;
      db = b - b0;
      break;
    }
  }
  // s1*da + s2*db = 0 needs opposite strict signs.
  if (!((da > 0 && db < 0) || (da < 0 && db > 0))) return std::nullopt;
  long g = std::gcd(std::labs(da), std::labs(db));
  long s1 = std::labs(db) / g, s2 = std::labs(da) / g;
  for (const auto& [a, b] : cons)
    if ((a - a0) * s1 + (b - b0) * s2 != 0) return std::nullopt;
  long e0 = a0 * s1 + b0 * s2;
  if (e0 < 0) return std::nullopt;
  for (long r = 1; r <= 3; ++r) fam.vectors.push_back({r * s1, r * s2, r * e0 + 1, r == 1});
  fam.generator = "r*(" + std::to_string(s1) + ", " + std::to_string(s2) + ", " + std::to_string(e0) +
                  ") + (0, 0, 1) for r >= 1";
  return fam;
}

bool minimality_audit(const WeightVector& w, const PolySystem& s) {
  long r = std::gcd(w.s1, w.s2);
  if (r <= 1) return true;
  if ((w.d - 1) % r != 0) return true;
  return !is_weight_vector(s, w.s1 / r, w.s2 / r, (w.d - 1) / r + 1);
}

PolySystem QhStructure::reassemble() const {
  PolySystem out;
  for (const auto& b : parts) {
    out.p += b.p;
    out.q += b.q;
  }
  return out;
}

namespace {

std::string family_name(int p, int vs, int ka) {
  if (p < 10 && vs < 10 && ka < 10)
    return "X_" + std::to_string(p) + std::to_string(vs) + std::to_string(ka);
  return "X_{" + std::to_string(p) + "," + std::to_string(vs) + "," + std::to_string(ka) + "}";
}

}  // namespace

QhStructure decompose(const PolySystem& s, const WeightVector& w) {
  auto fam = weight_vectors(s);
  if (!fam) throw NotQuasiHomogeneousError("system is not quasi-homogeneous");
  if (!(fam->vectors.front() == w)) throw PreconditionError("decompose requires the minimal weight vector");
  if (w.s1 == w.s2) throw PreconditionError("decompose requires a non-homogeneous system");

  QhStructure st;
  PolySystem sys = s;
  long s1 = w.s1, s2 = w.s2;
  if (s1 < s2) {
    sys = s.swap_xy();
    std::swap(s1, s2);
    st.swapped = true;
  }
  st.n = sys.degree();

  if (w.d == 1) {
    st.d_one = true;
    st.family = "X_1";
    st.p = 0;
    QhBlock top{0, st.n, "top", BiPoly::monomial(0, st.n, sys.p.coeff(0, st.n)), BiPoly()};
    QhBlock lin{1, 1, "linear", BiPoly::monomial(1, 0, sys.p.coeff(1, 0)), BiPoly::monomial(0, 1, sys.q.coeff(0, 1))};
    st.parts = {top, lin};
    if (!(st.reassemble() == sys)) throw InternalError("d = 1 system outside the special form");
    return st;
  }

  // Group monomials by their P-form x-exponent: P x^i y^j -> i, Q x^i y^j -> i + 1.
  std::map<int, QhBlock> slots;
  for (const auto& [e, c] : sys.p.terms()) slots[e.first].p.add_term(e.first, e.second, c);
  for (const auto& [e, c] : sys.q.terms()) slots[e.first + 1].q.add_term(e.first, e.second, c);
  st.p = slots.begin()->first;
  st.kappa0 = static_cast<int>(s2);
  st.varsigma0 = static_cast<int>(s1 - s2);
  int kmin = 0;
  for (auto& [i, blk] : slots) {
    if ((i - st.p) % st.kappa0 != 0) throw InternalError("slot off the weight lattice");
    blk.k = (i - st.p) / st.kappa0;
    blk.degree = st.n - blk.k * st.varsigma0;
    blk.role = blk.k == 0 ? "top" : "extra";
    if (blk.k > 0 && kmin == 0) kmin = blk.k;
    st.parts.push_back(blk);
  }
  if (kmin == 0) throw InternalError("non-homogeneous system with a single block");
  for (auto& b : st.parts)
    if (b.k == kmin) b.role = "leading";
  st.s = kmin;
  st.varsigma = kmin * st.varsigma0;
  st.kappa = kmin * st.kappa0;
  st.family = family_name(st.p, st.varsigma0, st.kappa0);
  return st;
}

std::string coeff_name(char letter, const Exp& e) {
  std::string out(1, letter);
  if (e.first < 10 && e.second < 10) return out + std::to_string(e.first) + std::to_string(e.second);
  return out + "_{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

PolySystem CatalogEntry::instance(const std::vector<Rat>& pc, const std::vector<Rat>& qc) const {
  if (pc.size() != p_support.size() || qc.size() != q_support.size())
    throw PreconditionError("coefficient count does not match the family support");
  PolySystem s;
  for (std::size_t k = 0; k < pc.size(); ++k) s.p.add_term(p_support[k].first, p_support[k].second, pc[k]);
  for (std::size_t k = 0; k < qc.size(); ++k) s.q.add_term(q_support[k].first, q_support[k].second, qc[k]);
  return s;
}

namespace {

constexpr int kCatalogDegree = 5;

bool admissible(const PolySystem& s, const WeightVector& want) {
  if (s.p.is_zero() || s.q.is_zero()) return false;
  if (s.degree() != kCatalogDegree) return false;
  if (s.p.is_homogeneous() && s.q.is_homogeneous() && s.p.degree() == s.q.degree()) return false;
  if (!coprime_check(s).coprime) return false;
  auto fam = weight_vectors(s);
  return fam && fam->vectors.front() == want;
}

void fill_conditions(CatalogEntry& e) {
  std::vector<Rat> primes;
  const int pr[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int v : pr) primes.emplace_back(v);
  std::vector<Rat> pc(primes.begin(), primes.begin() + static_cast<long>(e.p_support.size()));
  std::vector<Rat> qc(primes.begin() + static_cast<long>(e.p_support.size()),
                      primes.begin() + static_cast<long>(e.p_support.size() + e.q_support.size()));
  for (std::size_t k = 0; k < pc.size(); ++k) {
    auto z = pc;
    z[k] = 0;
    if (!admissible(e.instance(z, qc), e.weight)) e.nonvanishing.push_back(coeff_name('a', e.p_support[k]));
  }
  for (std::size_t k = 0; k < qc.size(); ++k) {
    auto z = qc;
    z[k] = 0;
    if (!admissible(e.instance(pc, z), e.weight)) e.nonvanishing.push_back(coeff_name('b', e.q_support[k]));
  }
  std::sort(e.nonvanishing.begin(), e.nonvanishing.end());
}

std::vector<CatalogEntry> build_catalog() {
  const int n = kCatalogDegree;
  std::vector<CatalogEntry> out;
  for (int p = 0; p <= n - 1; ++p) {
    for (int vs = 1; vs <= n - p; ++vs) {
      for (int ka = 1; ka <= n - p - vs + 1; ++ka) {
        if (std::gcd(vs, ka) != 1) continue;
        CatalogEntry e;
        e.name = family_name(p, vs, ka);
        e.p = p;
        e.varsigma = vs;
        e.kappa = ka;
        for (int k = 0; n - k * vs >= 0; ++k) {
          int i = p + k * ka, j = n - k * vs - p - k * ka;
          if (i >= 0 && j >= 0) e.p_support.push_back({i, j});
          if (i - 1 >= 0 && j + 1 >= 0) e.q_support.push_back({i - 1, j + 1});
        }
        long d = 1 + static_cast<long>(p - 1) * vs + static_cast<long>(n - 1) * ka;
        if (d < 2) continue;
        e.weight = {vs + ka, ka, d, true};
        std::vector<Rat> pc, qc;
        int prime_idx = 0;
        const int pr[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
        for (std::size_t k = 0; k < e.p_support.size(); ++k) pc.emplace_back(pr[prime_idx++]);
        for (std::size_t k = 0; k < e.q_support.size(); ++k) qc.emplace_back(pr[prime_idx++]);
        if (!admissible(e.instance(pc, qc), e.weight)) continue;
        fill_conditions(e);
        out.push_back(std::move(e));
      }
    }
  }
  CatalogEntry x1;
  x1.name = "X_1";
  x1.weight = {n, 1, 1, true};
  x1.p_support = {{0, n}, {1, 0}};
  x1.q_support = {{0, 1}};
  x1.nonvanishing = {"a05", "a10", "b01"};
  out.push_back(std::move(x1));
  return out;
}

}  // namespace

std::vector<CatalogEntry> quintic_catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

std::optional<CatalogEntry> catalog_entry(const std::string& name) {
  for (auto& e : quintic_catalog())
    if (e.name == name) return e;
  return std::nullopt;
}

}  // namespace qhpp

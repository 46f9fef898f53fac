#include "qhpp/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhpp {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const Rat& c) {
  if (c != 0) c_.push_back(c);
}

UniPoly UniPoly::monomial(int k, const Rat& c) {
  if (c == 0) return {};
  std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
  v[static_cast<std::size_t>(k)] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::var() { return monomial(1, Rat(1)); }

UniPoly UniPoly::from_roots(const std::vector<Rat>& roots) {
  UniPoly out(Rat(1));
  for (const auto& r : roots) out = out * UniPoly(std::vector<Rat>{-r, Rat(1)});
  return out;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
  return c_[static_cast<std::size_t>(k)];
}

const Rat& UniPoly::lead() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Rat UniPoly::eval(const Rat& u) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

double UniPoly::eval(double u) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + it->get_d();
  return acc;
}

int UniPoly::sign_at(const Rat& u) const { return sgn(eval(u)); }

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return {};
  return *this * Rat(1 / lead());
}

UniPoly UniPoly::primitive_integer() const {
  if (c_.empty()) return {};
  Int den = 1;
  for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Rat> out;
  out.reserve(c_.size());
  Int g = 0;
  for (const auto& c : c_) {
    Rat v = c * den;
    out.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  if (sgn(lead()) < 0) g = -g;
  for (auto& v : out) v /= g;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::reflect() const {
  std::vector<Rat> v = c_;
  for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rat& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rat a = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    bool unit = a == 1;
    if (k == 0) {
      out += qhpp::to_string(a);
    } else {
      if (!unit) out += qhpp::to_string(a) + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rat> r = a.coeffs();
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rat(0));
  const auto& bc = b.coeffs();
  Rat inv = 1 / b.lead();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rat f = r[static_cast<std::size_t>(k + b.degree())] * inv;
    q[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) r[static_cast<std::size_t>(k) + j] -= f * bc[j];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive_integer();
  }
  return x.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  std::vector<std::pair<UniPoly, int>> out;
  if (f.degree() < 1) return out;
  UniPoly fp = f.derivative();
  UniPoly a = gcd(f, fp);
  UniPoly b = f / a;
  UniPoly c = fp / a;
  UniPoly d = c - b.derivative();
  int k = 1;
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g.monic(), k);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++k;
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.degree() < 1) return f.is_zero() ? f : UniPoly(Rat(1));
  return (f / gcd(f, f.derivative())).monic();
}

int root_multiplicity(const UniPoly& f, const Rat& r) {
  if (f.is_zero()) throw std::domain_error("multiplicity in zero polynomial");
  int m = 0;
  UniPoly g = f;
  UniPoly lin(std::vector<Rat>{-r, Rat(1)});
  while (g.degree() >= 1 && g.eval(r) == 0) {
    g = g / lin;
    ++m;
  }
  return m;
}

SturmSequence::SturmSequence(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("Sturm sequence of zero polynomial");
  seq_.push_back(f);
  if (f.degree() < 1) return;
  seq_.push_back(f.derivative());
  while (true) {
    UniPoly r = seq_[seq_.size() - 2] % seq_.back();
    if (r.is_zero()) break;
    // Positive rescaling keeps the sign pattern intact.
    UniPoly p = r.primitive_integer();
    if (sgn(p.lead()) != sgn(r.lead())) p = -p;
    seq_.push_back(-p);
  }
}

namespace {
int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}
}  // namespace

int SturmSequence::variations_at(const Rat& x) const {
  std::vector<int> s;
  s.reserve(seq_.size());
  for (const auto& p : seq_) s.push_back(p.sign_at(x));
  return count_variations(s);
}

int SturmSequence::variations_at_pos_inf() const {
  std::vector<int> s;
  for (const auto& p : seq_) s.push_back(sgn(p.lead()));
  return count_variations(s);
}

int SturmSequence::variations_at_neg_inf() const {
  std::vector<int> s;
  for (const auto& p : seq_) s.push_back(p.degree() % 2 == 0 ? sgn(p.lead()) : -sgn(p.lead()));
  return count_variations(s);
}

int SturmSequence::count(const Rat& a, const Rat& b) const {
  if (!(a < b)) return 0;
  return variations_at(a) - variations_at(b);
}

int SturmSequence::count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

Rat cauchy_bound(const UniPoly& f) {
  if (f.degree() < 1) return Rat(1);
  Rat m(0);
  for (int k = 0; k < f.degree(); ++k) {
    Rat v = abs(f.coeff(k) / f.lead());
    if (v > m) m = v;
  }
  return m + 1;
}

}  // namespace qhpp

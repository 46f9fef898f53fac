#include "qhpp/bipoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qhpp/unipoly.hpp"

namespace qhpp {

namespace {

// Graded lex with x > y.
bool grlex_less(const Exp& a, const Exp& b) {
  int da = a.first + a.second, db = b.first + b.second;
  if (da != db) return da < db;
  return a.first < b.first;
}

}  // namespace

BiPoly::BiPoly(const Rat& c) {
  if (c != 0) terms_[{0, 0}] = c;
}

BiPoly BiPoly::monomial(int i, int j, const Rat& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  BiPoly p;
  if (c != 0) p.terms_[{i, j}] = c;
  return p;
}

BiPoly BiPoly::var_x() { return monomial(1, 0, Rat(1)); }
BiPoly BiPoly::var_y() { return monomial(0, 1, Rat(1)); }

int BiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

bool BiPoly::is_homogeneous() const {
  int d = degree();
  for (const auto& [e, c] : terms_)
    if (e.first + e.second != d) return false;
  return true;
}

bool BiPoly::is_constant() const { return degree() <= 0; }

Rat BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rat(0) : it->second;
}

void BiPoly::add_term(int i, int j, const Rat& c) {
  if (c == 0) return;
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  auto [it, inserted] = terms_.emplace(Exp{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Exp BiPoly::leading_exp() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  Exp best = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    if (grlex_less(best, e)) best = e;
  return best;
}

Rat BiPoly::leading_coeff() const { return terms_.at(leading_exp()); }

BiPoly BiPoly::homogeneous_part(int k) const {
  BiPoly out;
  for (const auto& [e, c] : terms_)
    if (e.first + e.second == k) out.terms_.emplace(e, c);
  return out;
}

BiPoly BiPoly::swap_xy() const {
  BiPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exp{e.second, e.first}, c);
  return out;
}

BiPoly BiPoly::diff_x() const {
  BiPoly out;
  for (const auto& [e, c] : terms_)
    if (e.first > 0) out.add_term(e.first - 1, e.second, c * e.first);
  return out;
}

BiPoly BiPoly::diff_y() const {
  BiPoly out;
  for (const auto& [e, c] : terms_)
    if (e.second > 0) out.add_term(e.first, e.second - 1, c * e.second);
  return out;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly out(Rat(1));
  BiPoly b = *this;
  while (e) {
    if (e & 1u) out = out * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return out;
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
  Rat acc(0);
  for (const auto& [e, c] : terms_)
    acc += c * rat_pow(x, static_cast<unsigned>(e.first)) * rat_pow(y, static_cast<unsigned>(e.second));
  return acc;
}

double BiPoly::eval(double x, double y) const {
  double acc = 0.0;
  for (const auto& [e, c] : terms_) acc += c.get_d() * std::pow(x, e.first) * std::pow(y, e.second);
  return acc;
}

UniPoly BiPoly::at_x1() const {
  std::vector<Rat> v(static_cast<std::size_t>(std::max(degree_y(), 0)) + 1, Rat(0));
  for (const auto& [e, c] : terms_) v[static_cast<std::size_t>(e.second)] += c;
  return UniPoly(std::move(v));
}

UniPoly BiPoly::at_y1() const {
  std::vector<Rat> v(static_cast<std::size_t>(std::max(degree_x(), 0)) + 1, Rat(0));
  for (const auto& [e, c] : terms_) v[static_cast<std::size_t>(e.first)] += c;
  return UniPoly(std::move(v));
}

UniPoly BiPoly::at_y0() const {
  std::vector<Rat> v(static_cast<std::size_t>(std::max(degree_x(), 0)) + 1, Rat(0));
  for (const auto& [e, c] : terms_)
    if (e.second == 0) v[static_cast<std::size_t>(e.first)] += c;
  return UniPoly(std::move(v));
}

UniPoly BiPoly::at_x0() const {
  std::vector<Rat> v(static_cast<std::size_t>(std::max(degree_y(), 0)) + 1, Rat(0));
  for (const auto& [e, c] : terms_)
    if (e.first == 0) v[static_cast<std::size_t>(e.second)] += c;
  return UniPoly(std::move(v));
}

BiPoly BiPoly::linear_substitute(const Rat& a, const Rat& b, const Rat& c, const Rat& e) const {
  BiPoly X = monomial(1, 0, a) + monomial(0, 1, b);
  BiPoly Y = monomial(1, 0, c) + monomial(0, 1, e);
  BiPoly out;
  for (const auto& [ex, co] : terms_)
    out += co * (X.pow(static_cast<unsigned>(ex.first)) * Y.pow(static_cast<unsigned>(ex.second)));
  return out;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exp, Rat>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& l, const auto& r) { return grlex_less(r.first, l.first); });
  std::string out;
  for (const auto& [e, c] : sorted) {
    Rat a = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string mono;
    if (e.first > 0) mono += e.first == 1 ? "x" : "x^" + std::to_string(e.first);
    if (e.second > 0) {
      if (!mono.empty()) mono += "*";
      mono += e.second == 1 ? "y" : "y^" + std::to_string(e.second);
    }
    if (mono.empty())
      out += qhpp::to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += qhpp::to_string(a) + "*" + mono;
  }
  return out;
}

std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  BiPoly r = a, q;
  Exp lb = b.leading_exp();
  Rat cb = b.leading_coeff();
  while (!r.is_zero()) {
    Exp lr = r.leading_exp();
    if (lr.first < lb.first || lr.second < lb.second) return std::nullopt;
    BiPoly t = BiPoly::monomial(lr.first - lb.first, lr.second - lb.second, r.leading_coeff() / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

BiPoly make_monic(const BiPoly& a) {
  if (a.is_zero()) return a;
  return a * Rat(1 / a.leading_coeff());
}

namespace {

// Polynomial in y with coefficients in Q[x]; index = power of y.
using YPoly = std::vector<UniPoly>;

YPoly to_ypoly(const BiPoly& f) {
  YPoly out(static_cast<std::size_t>(std::max(f.degree_y(), 0)) + 1);
  std::vector<std::vector<Rat>> dense(out.size());
  for (const auto& [e, c] : f.terms()) {
    auto& row = dense[static_cast<std::size_t>(e.second)];
    if (row.size() <= static_cast<std::size_t>(e.first)) row.resize(static_cast<std::size_t>(e.first) + 1, Rat(0));
    row[static_cast<std::size_t>(e.first)] = c;
  }
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = UniPoly(std::move(dense[j]));
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

BiPoly from_ypoly(const YPoly& f) {
  BiPoly out;
  for (std::size_t j = 0; j < f.size(); ++j)
    for (int i = 0; i <= f[j].degree(); ++i) out.add_term(i, static_cast<int>(j), f[j].coeff(i));
  return out;
}

void trim(YPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

UniPoly content(const YPoly& f) {
  UniPoly g;
  for (const auto& c : f) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

YPoly divide_content(const YPoly& f, const UniPoly& c) {
  YPoly out;
  out.reserve(f.size());
  for (const auto& v : f) out.push_back(v / c);
  return out;
}

// lc(b)^k * a reduced modulo b in y.
YPoly pseudo_remainder(YPoly a, const YPoly& b) {
  const UniPoly& lb = b.back();
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int da = static_cast<int>(a.size()) - 1;
    UniPoly la = a.back();
    for (auto& v : a) v = v * lb;
    for (int k = 0; k <= db; ++k) a[static_cast<std::size_t>(k + da - db)] -= la * b[static_cast<std::size_t>(k)];
    trim(a);
  }
  return a;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  YPoly pa = to_ypoly(a), pb = to_ypoly(b);
  UniPoly ca = content(pa), cb = content(pb);
  UniPoly cg = gcd(ca, cb);
  pa = divide_content(pa, ca);
  pb = divide_content(pb, cb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (!pb.empty()) {
    YPoly r = pseudo_remainder(pa, pb);
    pa = std::move(pb);
    if (r.empty()) {
      pb.clear();
      break;
    }
    pb = divide_content(r, content(r));
  }
  BiPoly g = pa.size() <= 1 ? BiPoly(Rat(1)) : from_ypoly(pa);
  BiPoly c;
  for (int i = 0; i <= cg.degree(); ++i) c.add_term(i, 0, cg.coeff(i));
  return make_monic(g * c);
}

}  // namespace qhpp

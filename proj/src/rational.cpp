#include "qhpp/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qhpp {

int sign(const Rat& r) { return sgn(r); }
int sign(const Int& z) { return sgn(z); }

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {
bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}
}  // namespace

Rat parse_rat(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("not a rational: " + text);
  Int n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  Rat r(n, d);
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

Rat rat_pow(const Rat& base, unsigned e) {
  Rat out(1);
  Rat b = base;
  while (e) {
    if (e & 1u) out *= b;
    b *= b;
    e >>= 1u;
  }
  return out;
}

double to_double(const Rat& r) { return r.get_d(); }

long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
  return z.get_si();
}

}  // namespace qhpp

#include "qhpp/polyparse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "qhpp/errors.hpp"

namespace qhpp {

namespace {

constexpr int kMaxExponent = 512;

class ExprParser {
 public:
  ExprParser(const std::string& src, int line, int col0) : s_(src), line_(line), col0_(col0) {}

  BiPoly parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    BiPoly r = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + s_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col0_ + static_cast<int>(pos_));
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  BiPoly expr() {
    BiPoly acc = term();
    while (true) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      BiPoly t = term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
  }

  BiPoly term() {
    BiPoly acc = unary();
    while (true) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc = acc * unary();
    }
  }

  BiPoly unary() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  BiPoly power() {
    BiPoly base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a non-negative integer");
    Int e(digits());
    if (e > kMaxExponent) fail("exponent too large");
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  BiPoly primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      if (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
        fail("unknown identifier");
      return c == 'x' ? BiPoly::var_x() : BiPoly::var_y();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      Int num(digits());
      if (peek() == '.' || peek() == 'e' || peek() == 'E') {
        pos_ = start;
        fail("non-rational literal (use a/b)");
      }
      Int den = 1;
      std::size_t save = pos_;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("'/' must join two integer literals");
        den = Int(digits());
        if (peek() == '.' || peek() == 'e' || peek() == 'E') fail("non-rational literal (use a/b)");
        if (den == 0) fail("zero denominator");
      } else {
        pos_ = save;
      }
      Rat r(num, den);
      r.canonicalize();
      return BiPoly(r);
    }
    if (c == '.') fail("non-rational literal (use a/b)");
    if (at_end()) fail("unexpected end of expression");
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_;
  int col0_;
};

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

void require_nonzero(const PolySystem& s) {
  if (s.p.is_zero() || s.q.is_zero()) throw ZeroSystemError("P*Q vanishes identically");
}

BiPoly parse_poly(const std::string& text) { return ExprParser(text, 1, 1).parse(); }

PolySystem parse_system(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool have_x = false, have_y = false;
  PolySystem s;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    auto eq = raw.find('=');
    if (eq == std::string::npos) throw ParseError("expected `dx/dt = ...` or `dy/dt = ...`", lineno, 1);
    std::string lhs = strip(raw.substr(0, eq));
    std::string compact;
    for (char c : lhs)
      if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    bool is_x = compact == "dx/dt", is_y = compact == "dy/dt";
    if (!is_x && !is_y) {
      auto col = raw.find_first_not_of(" \t");
      throw ParseError("left-hand side must be dx/dt or dy/dt", lineno, static_cast<int>(col) + 1);
    }
    if ((is_x && have_x) || (is_y && have_y)) throw ParseError("duplicate assignment", lineno, 1);
    BiPoly rhs = ExprParser(raw.substr(eq + 1), lineno, static_cast<int>(eq) + 2).parse();
    if (is_x) {
      s.p = rhs;
      have_x = true;
    } else {
      s.q = rhs;
      have_y = true;
    }
  }
  if (!have_x) throw ParseError("missing dx/dt assignment", lineno + 1, 1);
  if (!have_y) throw ParseError("missing dy/dt assignment", lineno + 1, 1);
  require_nonzero(s);
  return s;
}

std::string print_system(const PolySystem& s) {
  return "dx/dt = " + s.p.to_string() + "\ndy/dt = " + s.q.to_string() + "\n";
}

CoprimeResult coprime_check(const PolySystem& s) {
  BiPoly g = gcd(s.p, s.q);
  CoprimeResult r;
  r.coprime = g.degree() <= 0;
  r.factor = r.coprime ? BiPoly(Rat(1)) : g;
  return r;
}

Rat eval_poly(const BiPoly& f, const Rat& x, const Rat& y) { return f.eval(x, y); }

}  // namespace qhpp

#include "qhpp/roots.hpp"

#include <algorithm>
#include <functional>

#include "qhpp/errors.hpp"

namespace qhpp {

namespace {
constexpr int kRefineCap = 256;
}

AlgebraicRoot::AlgebraicRoot(UniPoly poly, Rat lo, Rat hi, int multiplicity)
    : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)), mult_(multiplicity) {
  sign_lo_ = poly_.sign_at(lo_);
  if (sign_lo_ == 0 || poly_.sign_at(hi_) != -sign_lo_)
    throw InternalError("AlgebraicRoot: interval does not bracket a simple root");
}

AlgebraicRoot AlgebraicRoot::rational(UniPoly poly, const Rat& value, int multiplicity) {
  // Bypass the bracketing check: the interval is degenerate.
  AlgebraicRoot r(UniPoly(std::vector<Rat>{-value, Rat(1)}), value - 1, value + 1, multiplicity);
  r.poly_ = std::move(poly);
  r.lo_ = value;
  r.hi_ = value;
  r.exact_ = value;
  r.sign_lo_ = 0;
  return r;
}

void AlgebraicRoot::refine() {
  if (exact_) return;
  Rat mid = midpoint();
  int s = poly_.sign_at(mid);
  if (s == 0) {
    lo_ = hi_ = mid;
    exact_ = mid;
  } else if (s == sign_lo_) {
    lo_ = mid;
  } else {
    hi_ = mid;
  }
}

void AlgebraicRoot::refine_to(const Rat& width) {
  while (!exact_ && hi_ - lo_ > width) refine();
}

double AlgebraicRoot::approx() const {
  if (exact_) return exact_->get_d();
  AlgebraicRoot c = *this;
  Rat scale = std::max(abs(lo_), abs(hi_));
  if (scale < 1) scale = 1;
  Rat width = scale / Rat(Int(1) << 60);
  c.refine_to(width);
  return c.midpoint().get_d();
}

int AlgebraicRoot::sign_of(const UniPoly& g) {
  if (g.is_zero()) return 0;
  if (exact_) return g.sign_at(*exact_);
  UniPoly h = gcd(g, poly_);
  if (h.degree() >= 1 && h.sign_at(lo_) * h.sign_at(hi_) < 0) return 0;
  UniPoly gs = squarefree_part(g);
  if (gs.degree() < 1) return g.sign_at(lo_);
  SturmSequence st(gs);
  for (int it = 0; it <= kRefineCap; ++it) {
    if (exact_) return g.sign_at(*exact_);
    if (gs.sign_at(lo_) != 0 && gs.sign_at(hi_) != 0 && st.count(lo_, hi_) == 0) return g.sign_at(lo_);
    refine();
  }
  throw InternalError("sign refinement did not terminate");
}

std::pair<int, int> AlgebraicRoot::side_signs(const UniPoly& g) {
  if (g.is_zero()) return {0, 0};
  int s = sign_of(g);
  if (s != 0) return {s, s};
  UniPoly gs = squarefree_part(g);
  SturmSequence st(gs);
  if (exact_) {
    Rat r = *exact_;
    Rat d(1);
    for (int it = 0; it <= kRefineCap; ++it) {
      if (gs.sign_at(r - d) != 0 && gs.sign_at(r + d) != 0 && st.count(r - d, r + d) == 1)
        return {g.sign_at(r - d), g.sign_at(r + d)};
      d /= 2;
    }
    throw InternalError("side sign refinement did not terminate");
  }
  for (int it = 0; it <= kRefineCap; ++it) {
    if (exact_) return side_signs(g);
    if (gs.sign_at(lo_) != 0 && gs.sign_at(hi_) != 0 && st.count(lo_, hi_) == 1)
      return {g.sign_at(lo_), g.sign_at(hi_)};
    refine();
  }
  throw InternalError("side sign refinement did not terminate");
}

std::string AlgebraicRoot::to_string() const {
  if (exact_) return qhpp::to_string(*exact_);
  return "root of " + poly_.to_string() + " in (" + qhpp::to_string(lo_) + ", " + qhpp::to_string(hi_) + ")";
}

namespace {

void isolate(const UniPoly& f, int mult, std::vector<AlgebraicRoot>& out) {
  SturmSequence st(f);
  Int lead_int = f.primitive_integer().lead().get_num();
  Rat bound = cauchy_bound(f);

  std::function<void(Rat, Rat)> single = [&](Rat lo, Rat hi) {
    if (f.sign_at(hi) == 0) {
      out.push_back(AlgebraicRoot::rational(f, hi, mult));
      return;
    }
    Rat limit = Rat(1, 2) / Rat(lead_int);
    while (f.sign_at(lo) == 0 || hi - lo >= limit) {
      Rat mid = (lo + hi) / 2;
      if (f.sign_at(mid) == 0) {
        if (st.count(lo, mid) == 1) {
          out.push_back(AlgebraicRoot::rational(f, mid, mult));
          return;
        }
        lo = mid;
      } else if (st.count(lo, mid) == 1) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    Rat mid = (lo + hi) / 2;
    Rat scaled = mid * lead_int;
    Int n;
    mpz_fdiv_q(n.get_mpz_t(), Rat(scaled + Rat(1, 2)).get_num_mpz_t(), Rat(scaled + Rat(1, 2)).get_den_mpz_t());
    Rat cand(n, lead_int);
    cand.canonicalize();
    if (lo < cand && cand < hi && f.sign_at(cand) == 0) {
      out.push_back(AlgebraicRoot::rational(f, cand, mult));
      return;
    }
    out.emplace_back(f, lo, hi, mult);
  };

  std::function<void(Rat, Rat)> split = [&](Rat lo, Rat hi) {
    int n = st.count(lo, hi);
    if (n == 0) return;
    if (n == 1) {
      single(lo, hi);
      return;
    }
    Rat mid = (lo + hi) / 2;
    split(lo, mid);
    split(mid, hi);
  };

  split(-bound, bound);
}

}  // namespace

std::vector<AlgebraicRoot> real_roots(const UniPoly& f) {
  if (f.is_zero()) throw PreconditionError("real_roots of the zero polynomial");
  std::vector<AlgebraicRoot> out;
  for (const auto& [fk, k] : squarefree_decomposition(f)) isolate(fk, k, out);
  std::sort(out.begin(), out.end(), [](const AlgebraicRoot& a, const AlgebraicRoot& b) {
    AlgebraicRoot x = a, y = b;
    return compare_roots(x, y) < 0;
  });
  return out;
}

int compare_roots(AlgebraicRoot& a, AlgebraicRoot& b) {
  for (int it = 0; it < 4 * kRefineCap; ++it) {
    if (a.is_rational() && b.is_rational()) return *a.exact() < *b.exact() ? -1 : (*a.exact() == *b.exact() ? 0 : 1);
    if (a.hi() <= b.lo()) return -1;
    if (b.hi() <= a.lo()) return 1;
    a.refine();
    b.refine();
  }
  throw InternalError("root comparison did not terminate");
}

int compare_root(AlgebraicRoot& a, const Rat& r) {
  AlgebraicRoot b = AlgebraicRoot::rational(UniPoly(std::vector<Rat>{-r, Rat(1)}), r, 1);
  return compare_roots(a, b);
}

}  // namespace qhpp

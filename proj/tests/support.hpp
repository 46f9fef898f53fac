// Shared generators for the unit and acceptance tests.
#pragma once

#include <random>
#include <vector>

#include "qhpp/homoganalysis.hpp"
#include "qhpp/qhcore.hpp"

namespace qhpp::testing {

// p/q in lowest terms.
inline Rat ratio(long p, long q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

// Nonzero rational p/q with |p| <= 9, 1 <= q <= 4.
inline Rat random_nonzero(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 4), sgn(0, 1);
  Rat r(num(rng) * (sgn(rng) ? 1 : -1), den(rng));
  r.canonicalize();
  return r;
}

// A member of a catalog family with random nonzero coefficients and coprime components.
inline PolySystem random_member(const CatalogEntry& e, std::mt19937& rng) {
  for (;;) {
    std::vector<Rat> pc, qc;
    for (std::size_t k = 0; k < e.p_support.size(); ++k) pc.push_back(random_nonzero(rng));
    for (std::size_t k = 0; k < e.q_support.size(); ++k) qc.push_back(random_nonzero(rng));
    PolySystem s = e.instance(pc, qc);
    if (coprime_check(s).coprime) return s;
  }
}

// Homogeneous system of degree n whose G(1,u) has exactly the given simple rational roots
// (n + 1 of them, so the vertical direction is not characteristic). P is random.
inline PolySystem homogeneous_with_roots(int n, const std::vector<Rat>& roots, std::mt19937& rng) {
  for (;;) {
    BiPoly p;
    for (int i = 0; i <= n; ++i) p.add_term(i, n - i, random_nonzero(rng));
    // G(1,u) = -p_{0n} * prod (u - r) makes G + yP divisible by x.
    UniPoly gu = UniPoly::from_roots(roots) * (-p.coeff(0, n));
    BiPoly g;
    for (int k = 0; k <= gu.degree(); ++k) g.add_term(n + 1 - k, k, gu.coeff(k));
    auto q = divide_exact(g + BiPoly::var_y() * p, BiPoly::var_x());
    if (!q) continue;
    PolySystem s{p, *q};
    if (!coprime_check(s).coprime) continue;
    return s;
  }
}

}  // namespace qhpp::testing

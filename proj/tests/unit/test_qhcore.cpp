#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "qhpp/errors.hpp"
#include "qhpp/qhcore.hpp"
#include "support.hpp"

using namespace qhpp;

namespace {

// Reference table: family -> minimal weight vector.
const std::map<std::string, WeightVector> kReferenceWeights{
    {"X_011", {2, 1, 4}},   {"X_012", {3, 2, 8}},  {"X_014", {5, 4, 16}}, {"X_015", {6, 5, 20}},
    {"X_021", {3, 1, 3}},   {"X_023", {5, 3, 11}}, {"X_032", {5, 2, 6}},  {"X_111", {2, 1, 5}},
    {"X_113", {4, 3, 13}},  {"X_114", {5, 4, 17}}, {"X_123", {5, 3, 13}}, {"X_131", {4, 1, 5}},
    {"X_132", {5, 2, 9}},   {"X_141", {5, 1, 5}},  {"X_1", {5, 1, 1}}};

}  // namespace

TEST_CASE("weight vectors of the worked examples") {
  auto w14 = weight_vectors(parse_system("dx/dt = y^5 + x*y^3 + x^2*y\ndy/dt = y^4 + x*y^2 + x^2"));
  REQUIRE(w14);
  CHECK(w14->vectors.front() == WeightVector{2, 1, 4});
  CHECK(w14->vectors.front().minimal);
  auto w114 = weight_vectors(parse_system("dx/dt = x*y^4\ndy/dt = y^5 + x^4"));
  REQUIRE(w114);
  CHECK(w114->vectors.front() == WeightVector{5, 4, 17});
  auto wh = weight_vectors(parse_system("dx/dt = x^3\ndy/dt = y^3"));
  REQUIRE(wh);
  CHECK(wh->vectors.front() == WeightVector{1, 1, 3});
  CHECK_FALSE(weight_vectors(parse_system("dx/dt = y + x^2\ndy/dt = x + y^3")).has_value());
}

TEST_CASE("minimality audit") {
  PolySystem s = parse_system("dx/dt = y^5 + x*y^3 + x^2*y\ndy/dt = y^4 + x*y^2 + x^2");
  CHECK(minimality_audit({2, 1, 4}, s));
  CHECK(is_weight_vector(s, 4, 2, 7));
  CHECK_FALSE(minimality_audit({4, 2, 7}, s));
  CHECK(minimality_audit({1, 1, 3}, parse_system("dx/dt = x^3\ndy/dt = y^3")));
}

TEST_CASE("scaled weight vectors stay weight vectors") {
  std::mt19937 rng(5);
  for (auto& e : quintic_catalog()) {
    PolySystem s = testing::random_member(e, rng);
    auto w = weight_vectors(s)->vectors.front();
    for (long r = 1; r <= 3; ++r) CHECK(is_weight_vector(s, r * w.s1, r * w.s2, r * (w.d - 1) + 1));
  }
}

TEST_CASE("catalog matches the reference weight table") {
  auto cat = quintic_catalog();
  REQUIRE(cat.size() == 15);
  std::set<std::string> names;
  for (auto& e : cat) {
    names.insert(e.name);
    REQUIRE(kReferenceWeights.count(e.name));
    CHECK(e.weight == kReferenceWeights.at(e.name));
  }
  CHECK(names.size() == 15);
  auto x023 = catalog_entry("X_023");
  REQUIRE(x023);
  std::set<std::string> nv(x023->nonvanishing.begin(), x023->nonvanishing.end());
  CHECK(nv == std::set<std::string>{"a05", "a30", "b21"});
  // Reference supports.
  auto x012 = catalog_entry("X_012");
  CHECK(x012->p_support == std::vector<Exp>{{0, 5}, {2, 2}});
  CHECK(x012->q_support == std::vector<Exp>{{1, 3}, {3, 0}});
  auto x131 = catalog_entry("X_131");
  CHECK(std::set<Exp>(x131->p_support.begin(), x131->p_support.end()) == std::set<Exp>{{1, 4}, {2, 0}});
  CHECK(std::set<Exp>(x131->q_support.begin(), x131->q_support.end()) == std::set<Exp>{{0, 5}, {1, 1}});
}

TEST_CASE("random members: minimal weights are coprime with an odd entry") {
  std::mt19937 rng(17);
  auto cat = quintic_catalog();
  for (int k = 0; k < 150; ++k) {
    const CatalogEntry& e = cat[k % cat.size()];
    PolySystem s = testing::random_member(e, rng);
    auto w = weight_vectors(s)->vectors.front();
    CHECK(std::gcd(w.s1, w.s2) == 1);
    CHECK((w.s1 % 2 == 1 || w.s2 % 2 == 1));
    CHECK(w == e.weight);
  }
}

TEST_CASE("decomposition of the examples") {
  std::mt19937 rng(23);
  PolySystem s14 = testing::random_member(*catalog_entry("X_011"), rng);
  QhStructure q = decompose(s14, weight_vectors(s14)->vectors.front());
  CHECK(q.family == "X_011");
  CHECK(q.p == 0);
  CHECK(q.varsigma == 1);
  CHECK(q.kappa == 1);
  std::set<int> degrees;
  for (auto& b : q.parts) degrees.insert(b.degree);
  CHECK(degrees == std::set<int>{2, 3, 4, 5});
  CHECK(q.reassemble() == (q.swapped ? s14.swap_xy() : s14));

  PolySystem s114 = testing::random_member(*catalog_entry("X_114"), rng);
  QhStructure q114 = decompose(s114, weight_vectors(s114)->vectors.front());
  CHECK(q114.p == 1);
  CHECK(q114.varsigma == 1);
  CHECK(q114.kappa == 4);

  PolySystem x1 = parse_system("dx/dt = y^5 + x\ndy/dt = y");
  QhStructure q1 = decompose(x1, weight_vectors(x1)->vectors.front());
  CHECK(q1.d_one);
  CHECK(q1.family == "X_1");
}

TEST_CASE("decompose then reassemble over the catalog") {
  std::mt19937 rng(29);
  for (auto& e : quintic_catalog()) {
    PolySystem s = testing::random_member(e, rng);
    QhStructure q = decompose(s, weight_vectors(s)->vectors.front());
    CHECK(q.family == e.name);
    CHECK(q.reassemble() == (q.swapped ? s.swap_xy() : s));
    auto w = e.weight;
    for (auto& b : q.parts) {
      PolySystem part = q.swapped ? PolySystem{b.p, b.q}.swap_xy() : PolySystem{b.p, b.q};
      if (part.p.is_zero() && part.q.is_zero()) continue;
      for (auto& [ex, c] : part.p.terms()) CHECK(ex.first * w.s1 + ex.second * w.s2 == w.s1 + w.d - 1);
      for (auto& [ex, c] : part.q.terms()) CHECK(ex.first * w.s1 + ex.second * w.s2 == w.s2 + w.d - 1);
    }
  }
}

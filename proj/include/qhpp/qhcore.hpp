#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhpp/polyparse.hpp"

namespace qhpp {

struct WeightVector {
  long s1 = 1;
  long s2 = 1;
  long d = 1;
  bool minimal = false;

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.s1 == b.s1 && a.s2 == b.s2 && a.d == b.d;
  }
  std::string to_string() const;
};

struct WeightFamily {
  std::vector<WeightVector> vectors;  // minimal first, then sample multiples
  std::string generator;              // description of the full solution set
  bool two_parameter = false;         // one constraint only: s1, s2 free
};

// Does w satisfy the weighted scaling law for s?
bool is_weight_vector(const PolySystem& s, long s1, long s2, long d);

// nullopt when no positive integer solution exists.
std::optional<WeightFamily> weight_vectors(const PolySystem& s);

bool minimality_audit(const WeightVector& w, const PolySystem& s);

// One homogeneous block of the decomposition: degree n - k*varsigma0.
struct QhBlock {
  int k = 0;
  int degree = 0;
  std::string role;  // "top", "leading", "extra"
  BiPoly p;
  BiPoly q;
};

struct QhStructure {
  bool d_one = false;  // d = 1 special form
  bool swapped = false;
  int n = 0;
  int p = 0;
  int varsigma = 0;
  int kappa = 0;
  int s = 1;
  int varsigma0 = 0;  // primitive step
  int kappa0 = 0;
  std::string family;  // e.g. "X_011", "X_1"
  std::vector<QhBlock> parts;

  PolySystem reassemble() const;  // in the (possibly swapped) working coordinates
};

// Requires the minimal weight vector of a non-homogeneous system.
QhStructure decompose(const PolySystem& s, const WeightVector& w);

struct CatalogEntry {
  std::string name;
  int p = 0;
  int varsigma = 0;
  int kappa = 0;
  WeightVector weight;
  std::vector<Exp> p_support;
  std::vector<Exp> q_support;
  std::vector<std::string> nonvanishing;  // coefficient names, e.g. "a05", "b20"

  PolySystem instance(const std::vector<Rat>& p_coeffs, const std::vector<Rat>& q_coeffs) const;
};

// Coefficient names a_ij / b_ij as in "a05".
std::string coeff_name(char letter, const Exp& e);

std::vector<CatalogEntry> quintic_catalog();
std::optional<CatalogEntry> catalog_entry(const std::string& name);

}  // namespace qhpp

#pragma once

#include <gmpxx.h>

#include <string>

namespace qhpp {

using Int = mpz_class;
using Rat = mpq_class;

int sign(const Rat& r);
int sign(const Int& z);

// "p/q" or "p"; zero prints as "0".
std::string to_string(const Rat& r);

// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Rat parse_rat(const std::string& s);

Rat rat_pow(const Rat& base, unsigned e);
double to_double(const Rat& r);

long to_long(const Int& z);

}  // namespace qhpp

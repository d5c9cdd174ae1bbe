#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace dynamo {

// Exact arithmetic for every bound formula. Desk-scale instances keep all
// numerators well inside 64 bits.
using Rational = boost::rational<long long>;

long long ipow(long long base, int exp);
long long binomial(int n, int k);

long long floor_of(const Rational& q);
long long ceil_of(const Rational& q);

// "96" when integral, "13/2" otherwise.
std::string to_string(const Rational& q);

}  // namespace dynamo

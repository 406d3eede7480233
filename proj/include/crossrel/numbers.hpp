#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace crossrel {

// Exact integer/rational arithmetic. Cut counts can reach C(m, m/2) and the
// regime bounds are published as exact rationals, so everything that feeds a
// bound stays integral until the final decimal rendering.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// C(n, k) as an exact integer; 0 when k is out of range.
BigInt binomial(int n, int k);

double to_double(const BigInt& v);
double to_double(const BigRat& v);

// "a/b" (or plain "a" for integers); used by reports so values stay exact.
std::string to_string(const BigRat& v);

}  // namespace crossrel

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace excount {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);

// C(n, k) as an exact integer; 0 for k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

// Natural log of a positive big integer, accurate to double precision
// even when the value itself overflows double.
double log_big(const BigInt& v);

double to_double(const BigInt& v);
double to_double(const BigRat& v);

// "p/q" in lowest terms ("p" when q == 1).
std::string rat_string(const BigRat& v);

// Shortest round-trip decimal representation.
std::string double_string(double x);

}  // namespace excount

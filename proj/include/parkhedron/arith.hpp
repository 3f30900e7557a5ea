#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace parkhedron {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int k);
BigInt binomial(int n, int k);
BigInt ipow(const BigInt& base, int exponent);

/// Möbius function. Throws std::domain_error for k < 1.
int mobius(std::int64_t k);

/// Positive divisors of k in increasing order. Throws std::domain_error for k < 1.
std::vector<std::int64_t> divisors(std::int64_t k);

/// gcd of all entries; 0 for an empty list.
int gcd_all(std::span<const int> parts);

BigInt catalan(int k);

}  // namespace parkhedron

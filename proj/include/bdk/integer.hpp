#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace bdk {

// Every value in the calculator is exact; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// gcd of the entries; 0 for the zero (or empty) vector.
Int content(const std::vector<Int>& x);

// p-adic valuation v_p(n) for n > 0.
long valuation(Int n, const Int& p);

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Factorisation of n >= 1 as ascending (prime, exponent) pairs.
// Throws if a prime factor does not fit in 64 bits.
std::vector<std::pair<std::uint64_t, long>> factorize(const Int& n);

long long gcd_ll(long long a, long long b);

} // namespace bdk

#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace chromhom {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

BigInt factorial(int n);

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(int n, int k);

/// Narrowing conversion that throws std::overflow_error if the value does not fit.
std::int64_t to_int64(const BigInt& v);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace chromhom

#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace combtri {

// Every count in the library is exact.
using BigInt = boost::multiprecision::cpp_int;

std::string to_decimal(const BigInt& value);
BigInt from_decimal(const std::string& text);

// C(a, b), taken as zero when b < 0 or a < b.
BigInt binomial(long long a, long long b);

BigInt factorial(long long n);

// (j_1 + ... + j_N)! / (j_1! ... j_N!); zero if any part is negative.
BigInt multinomial(const std::vector<long long>& parts);

BigInt pow(const BigInt& base, unsigned exponent);

}  // namespace combtri

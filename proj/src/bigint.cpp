#include "combtri/bigint.hpp"

#include <stdexcept>
#include <vector>

namespace combtri {

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt from_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (text[0] == '-') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("malformed integer literal: " + text);
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw std::invalid_argument("malformed integer literal: " + text);
    }
  }
  return BigInt(text);
}

BigInt binomial(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

BigInt factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt result = 1;
  for (long long i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt multinomial(const std::vector<long long>& parts) {
  long long total = 0;
  for (long long p : parts) {
    if (p < 0) return 0;
    total += p;
  }
  BigInt result = factorial(total);
  for (long long p : parts) result /= factorial(p);
  return result;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace combtri

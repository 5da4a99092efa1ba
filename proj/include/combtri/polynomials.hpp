#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "combtri/bigint.hpp"
#include "combtri/core.hpp"

namespace combtri {

// Dense polynomial over the integers; coefficient i multiplies x^i. Trailing
// zeros are trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial constant(const BigInt& c) { return IntPolynomial({c}); }
  static IntPolynomial monomial(const BigInt& c, std::size_t power);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long long degree() const noexcept { return static_cast<long long>(coeffs_.size()) - 1; }

  // [x^k]; zero for k < 0 or k past the degree.
  BigInt coefficient(long long k) const;
  BigInt evaluate(const BigInt& x) const;
  BigInt coefficient_sum() const { return evaluate(1); }

  IntPolynomial& operator+=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial pow(unsigned exponent) const;

  // "1 + 3x + x^2"
  std::string to_string() const;
  nlohmann::json to_json() const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Memoized (1,t)-bonacci polynomials f_n(x) = f_{n-1}(x) + x f_{n-t}(x) + [n=0]
// and numbers f_n = f_n(1). Not safe for concurrent mutation; keep one table
// per task.
class BonacciTable {
 public:
  explicit BonacciTable(int t);

  int t() const noexcept { return t_; }
  const IntPolynomial& poly(long long n);
  const BigInt& number(long long n);

 private:
  int t_;
  std::vector<IntPolynomial> polys_;
  std::vector<BigInt> numbers_;
  IntPolynomial zero_poly_;
  BigInt zero_number_ = 0;
};

IntPolynomial bonacci_poly(int t, long long n);
BigInt bonacci_number(int t, long long n);

// [x^k] f_j^{m-r} f_{j+1}^r, which counts (mj + r - (t-1)k)-tile tilings
// using k combs.
BigInt entry_via_poly(const CombSpec& spec, long long j, long long r, long long k);

// f_j^{m-r} f_{j+1}^r: the sum of the (mj+r)-th (1,t-1)-antidiagonal.
BigInt antidiagonal_sum_closed(const CombSpec& spec, long long j, long long r);

// Whole triangle assembled from entry_via_poly.
Triangle triangle_via_poly(const CombSpec& spec, TriangleKind kind, int rows);

// Restricted-subset counts of {1..n} from the shifted polynomial product
// [x^k] f_{j+t-1}^{m-r} f_{j+t}^r with n = mj + r, and their total over k.
BigInt subset_count_via_poly(const CombSpec& spec, long long n, long long k);
BigInt subset_total_via_poly(const CombSpec& spec, long long n);

}  // namespace combtri

#include "combtri/polynomials.hpp"

#include <sstream>
#include <stdexcept>

namespace combtri {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t power) {
  std::vector<BigInt> coeffs(power + 1, 0);
  coeffs[power] = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(long long k) const {
  if (k < 0 || k >= static_cast<long long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << mag;
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

nlohmann::json IntPolynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : coeffs_) arr.push_back(to_decimal(c));
  return arr;
}

BonacciTable::BonacciTable(int t) : t_(t) {
  if (t < 2) throw std::invalid_argument("(1,t)-bonacci requires t >= 2");
}

const IntPolynomial& BonacciTable::poly(long long n) {
  if (n < 0) return zero_poly_;
  const IntPolynomial x_poly = IntPolynomial::monomial(1, 1);
  while (static_cast<long long>(polys_.size()) <= n) {
    const long long i = static_cast<long long>(polys_.size());
    IntPolynomial next = i == 0 ? IntPolynomial::constant(1) : polys_.back();
    if (i - t_ >= 0) next += x_poly * polys_[static_cast<std::size_t>(i - t_)];
    polys_.push_back(std::move(next));
  }
  return polys_[static_cast<std::size_t>(n)];
}

const BigInt& BonacciTable::number(long long n) {
  if (n < 0) return zero_number_;
  while (static_cast<long long>(numbers_.size()) <= n) {
    const long long i = static_cast<long long>(numbers_.size());
    BigInt next = i == 0 ? BigInt(1) : numbers_.back();
    if (i - t_ >= 0) next += numbers_[static_cast<std::size_t>(i - t_)];
    numbers_.push_back(std::move(next));
  }
  return numbers_[static_cast<std::size_t>(n)];
}

IntPolynomial bonacci_poly(int t, long long n) {
  BonacciTable table(t);
  return table.poly(n);
}

BigInt bonacci_number(int t, long long n) {
  BonacciTable table(t);
  return table.number(n);
}

namespace {

void check_jr(const CombSpec& spec, long long j, long long r) {
  if (j < 0) throw std::invalid_argument("j must be >= 0");
  if (r < 0 || r >= spec.m()) throw std::invalid_argument("r must lie in 0..m-1");
}

// f_a^{m-r} f_{a+1}^r; an exponent of zero contributes the empty product.
IntPolynomial power_product(BonacciTable& table, const CombSpec& spec, long long a, long long r) {
  IntPolynomial result = table.poly(a).pow(static_cast<unsigned>(spec.m() - r));
  if (r > 0) result = result * table.poly(a + 1).pow(static_cast<unsigned>(r));
  return result;
}

BigInt power_product_number(BonacciTable& table, const CombSpec& spec, long long a, long long r) {
  BigInt result = pow(table.number(a), static_cast<unsigned>(spec.m() - r));
  if (r > 0) result *= pow(table.number(a + 1), static_cast<unsigned>(r));
  return result;
}

}  // namespace

BigInt entry_via_poly(const CombSpec& spec, long long j, long long r, long long k) {
  check_jr(spec, j, r);
  if (k < 0) return 0;
  BonacciTable table(spec.t());
  return power_product(table, spec, j, r).coefficient(k);
}

BigInt antidiagonal_sum_closed(const CombSpec& spec, long long j, long long r) {
  check_jr(spec, j, r);
  BonacciTable table(spec.t());
  return power_product_number(table, spec, j, r);
}

Triangle triangle_via_poly(const CombSpec& spec, TriangleKind kind, int rows) {
  if (rows < 0) throw std::invalid_argument("row count must be nonnegative");
  BonacciTable table(spec.t());
  Triangle::Rows out(static_cast<std::size_t>(rows));
  for (int n = 0; n < rows; ++n) {
    for (int k = 0; k <= n; ++k) {
      // Board length carrying this entry.
      const long long board =
          kind == TriangleKind::TileIndexed ? tile_to_board_index(spec, n, k).n : n;
      const long long tiles = board_to_tile_index(spec, board, k).n;
      BigInt value = 0;
      if (tiles >= k) {
        const long long j = board / spec.m();
        const long long r = board % spec.m();
        value = power_product(table, spec, j, r).coefficient(k);
      }
      out[static_cast<std::size_t>(n)].push_back(std::move(value));
    }
  }
  return Triangle(spec, kind, std::move(out));
}

BigInt subset_count_via_poly(const CombSpec& spec, long long n, long long k) {
  if (n < 0) throw std::invalid_argument("subset universe size must be nonnegative");
  if (k < 0) return 0;
  BonacciTable table(spec.t());
  return power_product(table, spec, n / spec.m() + spec.t() - 1, n % spec.m()).coefficient(k);
}

BigInt subset_total_via_poly(const CombSpec& spec, long long n) {
  if (n < 0) throw std::invalid_argument("subset universe size must be nonnegative");
  BonacciTable table(spec.t());
  return power_product_number(table, spec, n / spec.m() + spec.t() - 1, n % spec.m());
}

}  // namespace combtri

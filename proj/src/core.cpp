#include "combtri/core.hpp"

#include <sstream>
#include <stdexcept>

namespace combtri {

CombSpec::CombSpec(int m, int t) : m_(m), t_(t) {
  if (m < 1) throw std::invalid_argument("comb gap parameter m must be >= 1");
  if (t < 2) throw std::invalid_argument("comb tooth count t must be >= 2");
}

std::string CombSpec::label() const {
  return "(m=" + std::to_string(m_) + ",t=" + std::to_string(t_) + ")";
}

std::string_view to_string(TriangleKind kind) {
  return kind == TriangleKind::TileIndexed ? "tile" : "board";
}

TriangleKind parse_triangle_kind(std::string_view text) {
  if (text == "tile") return TriangleKind::TileIndexed;
  if (text == "board") return TriangleKind::BoardIndexed;
  throw std::invalid_argument("unknown triangle kind: " + std::string(text));
}

std::vector<int> comb_cells(const CombSpec& spec, int pos) {
  if (pos < 1) throw std::invalid_argument("cell indices are 1-based");
  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(spec.t()));
  for (int i = 0; i < spec.t(); ++i) cells.push_back(pos + i * spec.m());
  return cells;
}

IndexPair board_to_tile_index(const CombSpec& spec, long long n_board, long long k) {
  return {n_board - static_cast<long long>(spec.t() - 1) * k, k};
}

IndexPair tile_to_board_index(const CombSpec& spec, long long n_tiles, long long k) {
  return {n_tiles + static_cast<long long>(spec.t() - 1) * k, k};
}

long long max_combs(const CombSpec& spec, long long J, long long R) {
  const long long m = spec.m();
  const long long t = spec.t();
  if (R < 0 || R >= m) throw std::invalid_argument("board remainder R must lie in 0..m-1");
  if (J < 0) throw std::invalid_argument("board quotient J must be >= 0");
  const long long rem = J % t;
  if (rem < t - 1) return m * (J - rem) / t;
  return m * (J - t + 1) / t + R;
}

Triangle::Triangle(CombSpec spec, TriangleKind kind, Rows rows)
    : spec_(spec), kind_(kind), rows_(std::move(rows)) {
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (rows_[n].size() != n + 1) {
      throw std::invalid_argument("triangle row " + std::to_string(n) + " must hold " +
                                  std::to_string(n + 1) + " entries");
    }
    for (const auto& v : rows_[n]) {
      if (v < 0) throw std::invalid_argument("triangle entries must be nonnegative");
    }
  }
  if (!rows_.empty() && rows_[0][0] != 1) {
    throw std::invalid_argument("triangle entry (0,0) must be 1");
  }
}

BigInt Triangle::at(long long n, long long k) const {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n >= static_cast<long long>(rows_.size())) {
    throw std::out_of_range("triangle row " + std::to_string(n) + " not materialized");
  }
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt Triangle::row_sum(std::size_t n) const {
  BigInt total = 0;
  for (const auto& v : rows_.at(n)) total += v;
  return total;
}

BigInt Triangle::antidiagonal_sum(long long n, long long mu) const {
  BigInt total = 0;
  for (long long k = 0; n - mu * k >= k; ++k) total += at(n - mu * k, k);
  return total;
}

std::string Triangle::to_csv() const {
  std::ostringstream out;
  for (const auto& row : rows_) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out << ',';
      out << row[k];
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json Triangle::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : rows_) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(to_decimal(v));
    rows.push_back(std::move(r));
  }
  return {{"m", spec_.m()}, {"t", spec_.t()}, {"kind", to_string(kind_)}, {"rows", rows}};
}

Triangle Triangle::from_json(const nlohmann::json& doc) {
  CombSpec spec(doc.at("m").get<int>(), doc.at("t").get<int>());
  auto kind = parse_triangle_kind(doc.at("kind").get<std::string>());
  Rows rows;
  for (const auto& r : doc.at("rows")) {
    std::vector<BigInt> row;
    for (const auto& v : r) row.push_back(from_decimal(v.get<std::string>()));
    rows.push_back(std::move(row));
  }
  return Triangle(spec, kind, std::move(rows));
}

}  // namespace combtri

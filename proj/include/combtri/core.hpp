#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "combtri/bigint.hpp"

namespace combtri {

// A square / (1,m-1;t)-comb tiling family. The comb has t unit teeth, each
// separated from the next by a gap of m-1 cells.
class CombSpec {
 public:
  CombSpec(int m, int t);

  int m() const noexcept { return m_; }
  int t() const noexcept { return t_; }

  // Cells spanned from the first tooth to the last one.
  int extent() const noexcept { return (t_ - 1) * m_ + 1; }

  std::string label() const;

  auto operator<=>(const CombSpec&) const = default;

 private:
  int m_;
  int t_;
};

enum class TriangleKind {
  TileIndexed,   // (n,k): n-tile tilings using k combs
  BoardIndexed,  // (n,k): tilings of an n-board using k combs
};

std::string_view to_string(TriangleKind kind);
TriangleKind parse_triangle_kind(std::string_view text);

struct IndexPair {
  long long n;
  long long k;
  auto operator<=>(const IndexPair&) const = default;
};

// Cells covered by a comb whose leftmost tooth sits on `pos` (1-based).
std::vector<int> comb_cells(const CombSpec& spec, int pos);

// A tiling of an n-board with k combs has n - (t-1)k tiles.
IndexPair board_to_tile_index(const CombSpec& spec, long long n_board, long long k);
IndexPair tile_to_board_index(const CombSpec& spec, long long n_tiles, long long k);

// Largest number of combs in a tiling of an (mJ+R)-board, 0 <= R < m.
long long max_combs(const CombSpec& spec, long long J, long long R);

// Dense lower-triangular table: row n holds entries for k = 0..n.
class Triangle {
 public:
  using Rows = std::vector<std::vector<BigInt>>;

  Triangle(CombSpec spec, TriangleKind kind, Rows rows);

  const CombSpec& spec() const noexcept { return spec_; }
  TriangleKind kind() const noexcept { return kind_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  const Rows& rows() const noexcept { return rows_; }
  const std::vector<BigInt>& row(std::size_t n) const { return rows_.at(n); }

  // Implicit zeros for n < 0, k < 0 and k > n; throws std::out_of_range for
  // n >= row_count().
  BigInt at(long long n, long long k) const;
  bool in_range(long long n) const noexcept {
    return n < static_cast<long long>(rows_.size());
  }

  BigInt row_sum(std::size_t n) const;

  // Sum of the n-th (1,mu)-antidiagonal: entries (n - mu*k, k).
  BigInt antidiagonal_sum(long long n, long long mu) const;

  std::string to_csv() const;
  nlohmann::json to_json() const;
  static Triangle from_json(const nlohmann::json& doc);

  bool operator==(const Triangle& other) const = default;

 private:
  CombSpec spec_;
  TriangleKind kind_;
  Rows rows_;
};

}  // namespace combtri

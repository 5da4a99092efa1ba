#pragma once

// Brute-force ground truth. Everything here works by explicit enumeration of
// tile placements or subsets, never by transfer matrices or recurrences, so
// that the faster engines can be checked against it.

#include <compare>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "combtri/bigint.hpp"
#include "combtri/core.hpp"

namespace combtri::oracle {

struct Limits {
  int max_board_cells = 26;      // materialized tiling enumeration
  int max_count_cells = 34;      // counting-only board enumeration
  int max_tile_rows = 22;        // tile-indexed triangle rows
  int max_subset_universe = 24;  // restricted subsets of {1..n}
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TileKind { Square, Comb };

struct Placement {
  TileKind kind;
  int leftmost;  // 1-based cell of the square, or of the comb's first tooth
  auto operator<=>(const Placement&) const = default;
};

// A complete tiling of a board. Placements are kept sorted by leftmost cell,
// which is also the order in which a left-to-right fill lays them down.
class Tiling {
 public:
  // Throws std::invalid_argument if the placements overlap, leave a hole or
  // run off the board.
  Tiling(CombSpec spec, int board_len, std::vector<Placement> placements);

  const CombSpec& spec() const noexcept { return spec_; }
  int board_len() const noexcept { return board_len_; }
  const std::vector<Placement>& placements() const noexcept { return placements_; }

  int tile_count() const noexcept { return static_cast<int>(placements_.size()); }
  int comb_count() const noexcept;
  int square_count() const noexcept { return tile_count() - comb_count(); }

  nlohmann::json to_json() const;

  bool operator==(const Tiling&) const = default;

 private:
  CombSpec spec_;
  int board_len_;
  std::vector<Placement> placements_;
};

// A k-subset of {1..n} in which no two members differ by m, 2m, ..., (t-1)m.
class RestrictedSubset {
 public:
  RestrictedSubset(const CombSpec& spec, int n, std::vector<int> members);

  int universe() const noexcept { return n_; }
  const std::vector<int>& members() const noexcept { return members_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }

  nlohmann::json to_json() const { return members_; }

  bool operator==(const RestrictedSubset&) const = default;

 private:
  int n_;
  std::vector<int> members_;
};

std::vector<Tiling> enumerate_tilings(const CombSpec& spec, int board_len,
                                      const Limits& limits = {});

// counts[k] = number of tilings of the board that use k combs.
std::vector<BigInt> count_board_tilings(const CombSpec& spec, int board_len,
                                        const Limits& limits = {});

// Tilings of a board of exactly `squares + t*combs` cells with the given
// tile multiset.
BigInt count_tilings_with(const CombSpec& spec, int squares, int combs);

// Both routes for TileIndexed are computed and cross-checked; a disagreement
// throws std::logic_error.
Triangle build_triangle(const CombSpec& spec, TriangleKind kind, int rows,
                        const Limits& limits = {});

std::vector<RestrictedSubset> enumerate_restricted_subsets(const CombSpec& spec, int n,
                                                           int k,
                                                           const Limits& limits = {});

// S(n,k) by enumeration. For n < 0 the only admissible subset is the empty
// one, so S(n<0, 0) = 1 and S(n<0, k>0) = 0.
BigInt count_restricted_subsets(const CombSpec& spec, int n, int k,
                                const Limits& limits = {});

// Each member i becomes a comb with its first tooth on cell i of an
// (n+(t-1)m)-board; the rest is filled with squares.
Tiling subset_to_tiling(const CombSpec& spec, const RestrictedSubset& subset);
RestrictedSubset tiling_to_subset(const Tiling& tiling);

// Splits an (mj+r)-board by residue class mod m into r boards of length j+1
// followed by m-r boards of length j. Each comb lands on a single sub-board as
// a t-omino; the parts are tilings for CombSpec(1, t).
std::vector<Tiling> split_board(const Tiling& tiling);
Tiling join_boards(const CombSpec& spec, const std::vector<Tiling>& parts);

}  // namespace combtri::oracle

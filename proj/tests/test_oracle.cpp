#include <doctest.h>

#include <random>
#include <set>

#include "brute.hpp"
#include "combtri/oracle.hpp"
#include "figure_data.hpp"

using namespace combtri;
using namespace combtri::oracle;

TEST_SUITE("oracle") {
  TEST_CASE("enumerate tilings examples") {
    const CombSpec spec(2, 3);
    const auto empty = enumerate_tilings(spec, 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].tile_count() == 0);

    const auto five = enumerate_tilings(spec, 5);
    REQUIRE(five.size() == 2);
    int with_comb = 0;
    for (const auto& t : five) {
      if (t.comb_count() == 1) {
        ++with_comb;
        CHECK(t.square_count() == 2);
      }
    }
    CHECK(with_comb == 1);

    int two_combs = 0;
    for (const auto& t : enumerate_tilings(spec, 9)) two_combs += t.comb_count() == 2;
    CHECK(two_combs == 6);
  }

  TEST_CASE("tilings are distinct and cover the board") {
    for (int m = 1; m <= 3; ++m) {
      for (int t = 2; t <= 4; ++t) {
        const CombSpec spec(m, t);
        for (int len = 0; len <= 12; ++len) {
          const auto all = enumerate_tilings(spec, len);
          std::set<std::vector<Placement>> seen;
          for (const auto& tiling : all) {
            CHECK(seen.insert(tiling.placements()).second);
            CHECK(tiling.square_count() + t * tiling.comb_count() == len);
          }
        }
      }
    }
  }

  TEST_CASE("counts agree with independent brute force") {
    for (int m = 1; m <= 4; ++m) {
      for (int t = 2; t <= 5; ++t) {
        for (int len = 0; len <= 18; ++len) {
          const auto expected = testbrute::board_counts(m, t, len);
          const auto actual = count_board_tilings(CombSpec(m, t), len);
          for (std::size_t k = 0; k < std::max(expected.size(), actual.size()); ++k) {
            const std::uint64_t e = k < expected.size() ? expected[k] : 0;
            const BigInt a = k < actual.size() ? actual[k] : BigInt(0);
            INFO("m=" << m << " t=" << t << " len=" << len << " k=" << k);
            CHECK(a == e);
          }
        }
      }
    }
  }

  TEST_CASE("tile multiset counts") {
    // Pascal for t-ominoes.
    CHECK(count_tilings_with(CombSpec(1, 3), 2, 2) == 6);
    CHECK(count_tilings_with(CombSpec(2, 3), 3, 2) == 6);
    CHECK(count_tilings_with(CombSpec(2, 3), 0, 1) == 0);
  }

  TEST_CASE("build triangle examples") {
    const auto tri = build_triangle(CombSpec(2, 3), TriangleKind::TileIndexed, 14);
    CHECK(tri.at(6, 3) == 8);
    CHECK(tri.at(13, 6) == 876);
    CHECK(build_triangle(CombSpec(3, 3), TriangleKind::TileIndexed, 10).at(9, 5) == 29);
    CHECK(build_triangle(CombSpec(1, 3), TriangleKind::TileIndexed, 5).at(4, 2) == 6);
  }

  TEST_CASE("figure tables") {
    for (const auto& fig : testdata::figure_tables()) {
      const auto tri = build_triangle(CombSpec(fig.m, fig.t), TriangleKind::TileIndexed,
                                      static_cast<int>(fig.rows.size()));
      for (std::size_t n = 0; n < fig.rows.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
          INFO(fig.name << " n=" << n << " k=" << k);
          CHECK(tri.row(n)[k] == fig.rows[n][k]);
        }
      }
    }
  }

  TEST_CASE("board and tile triangles are related by reindexing") {
    for (int m = 1; m <= 4; ++m) {
      for (int t = 2; t <= 5; ++t) {
        const CombSpec spec(m, t);
        const auto board = build_triangle(spec, TriangleKind::BoardIndexed, 21);
        const auto tile = build_triangle(spec, TriangleKind::TileIndexed, 21);
        for (long long n = 0; n <= 20; ++n) {
          for (long long k = 0; k <= n; ++k) {
            const auto idx = board_to_tile_index(spec, n, k);
            CHECK(board.at(n, k) == tile.at(idx.n, idx.k));
          }
        }
      }
    }
  }

  TEST_CASE("limits reject rather than truncate") {
    Limits small;
    small.max_board_cells = 8;
    small.max_tile_rows = 5;
    small.max_subset_universe = 6;
    CHECK_THROWS_AS(enumerate_tilings(CombSpec(2, 3), 9, small), LimitExceeded);
    CHECK_THROWS_AS(build_triangle(CombSpec(2, 3), TriangleKind::TileIndexed, 6, small), LimitExceeded);
    CHECK_THROWS_AS(enumerate_restricted_subsets(CombSpec(2, 3), 7, 1, small), LimitExceeded);
  }

  TEST_CASE("restricted subsets examples") {
    const CombSpec spec(2, 3);
    const auto two = enumerate_restricted_subsets(spec, 5, 2);
    std::set<std::vector<int>> got;
    for (const auto& s : two) got.insert(s.members());
    CHECK(got == std::set<std::vector<int>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 4}, {2, 5}});
    CHECK(count_restricted_subsets(spec, 5, 1) == 5);
    CHECK(count_restricted_subsets(CombSpec(3, 4), 0, 0) == 1);
    CHECK(count_restricted_subsets(spec, -2, 0) == 1);
    CHECK(count_restricted_subsets(spec, -2, 1) == 0);
    CHECK_THROWS(RestrictedSubset(spec, 5, {1, 3}));
  }

  TEST_CASE("restricted subset counts against bitmask sweep") {
    for (int m = 1; m <= 4; ++m) {
      for (int t = 2; t <= 5; ++t) {
        for (int n = 0; n <= 12; ++n) {
          for (int k = 0; k <= n; ++k) {
            CHECK(count_restricted_subsets(CombSpec(m, t), n, k) == testbrute::restricted_subsets(m, t, n, k));
          }
        }
      }
    }
  }

  TEST_CASE("subset to tiling example") {
    const CombSpec spec(2, 3);
    const auto tiling = subset_to_tiling(spec, RestrictedSubset(spec, 5, {1, 4}));
    CHECK(tiling.board_len() == 9);
    std::vector<int> squares;
    std::vector<int> combs;
    for (const auto& p : tiling.placements()) (p.kind == TileKind::Square ? squares : combs).push_back(p.leftmost);
    CHECK(combs == std::vector<int>{1, 4});
    CHECK(squares == std::vector<int>{2, 7, 9});
    const auto plain = subset_to_tiling(spec, RestrictedSubset(spec, 5, {}));
    CHECK(plain.comb_count() == 0);
    CHECK(plain.board_len() == 9);
  }

  TEST_CASE("subset bijection round trips") {
    for (int m = 1; m <= 3; ++m) {
      for (int t = 2; t <= 4; ++t) {
        const CombSpec spec(m, t);
        for (int n = 0; n <= 9; ++n) {
          const int len = n + (t - 1) * m;
          const auto board = count_board_tilings(spec, len);
          for (int k = 0; k <= n; ++k) {
            const auto subsets = enumerate_restricted_subsets(spec, n, k);
            for (const auto& s : subsets) CHECK(tiling_to_subset(subset_to_tiling(spec, s)) == s);
            const BigInt b = static_cast<std::size_t>(k) < board.size() ? board[static_cast<std::size_t>(k)] : BigInt(0);
            CHECK(b == static_cast<long long>(subsets.size()));
          }
          for (const auto& tiling : enumerate_tilings(spec, len)) {
            CHECK(subset_to_tiling(spec, tiling_to_subset(tiling)) == tiling);
          }
        }
      }
    }
  }

  TEST_CASE("split board example") {
    const CombSpec spec(2, 3);
    std::vector<Placement> pl{{TileKind::Comb, 1}};
    for (int c : {2, 4, 6, 7, 8, 9}) pl.push_back({TileKind::Square, c});
    std::sort(pl.begin(), pl.end(), [](const Placement& a, const Placement& b) { return a.leftmost < b.leftmost; });
    const Tiling tiling(spec, 9, pl);
    const auto parts = split_board(tiling);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].board_len() == 5);
    CHECK(parts[1].board_len() == 4);
    CHECK(parts[0].comb_count() == 1);
    CHECK(parts[0].placements().front() == Placement{TileKind::Comb, 1});
    CHECK(parts[1].comb_count() == 0);
    CHECK(join_boards(spec, parts) == tiling);
  }

  TEST_CASE("split board round trip on random tilings") {
    std::mt19937 rng(2024);
    for (int m = 1; m <= 4; ++m) {
      for (int t = 2; t <= 5; ++t) {
        const CombSpec spec(m, t);
        const int len = 10 + static_cast<int>(rng() % 9);
        auto all = enumerate_tilings(spec, len);
        std::shuffle(all.begin(), all.end(), rng);
        if (all.size() > 40) all.erase(all.begin() + 40, all.end());
        for (const auto& tiling : all) {
          const auto parts = split_board(tiling);
          REQUIRE(parts.size() == static_cast<std::size_t>(m));
          int combs = 0;
          for (std::size_t i = 0; i < parts.size(); ++i) {
            CHECK(parts[i].spec() == CombSpec(1, t));
            CHECK(parts[i].board_len() == len / m + (static_cast<int>(i) < len % m ? 1 : 0));
            combs += parts[i].comb_count();
          }
          CHECK(combs == tiling.comb_count());
          CHECK(join_boards(spec, parts) == tiling);
        }
      }
    }
  }

  TEST_CASE("tiling json") {
    const Tiling tiling(CombSpec(2, 3), 5, {{TileKind::Comb, 1}, {TileKind::Square, 2}, {TileKind::Square, 4}});
    const auto doc = tiling.to_json();
    CHECK(doc["board_len"] == 5);
    CHECK(doc["placements"][0]["tile"] == "C");
    CHECK(doc["placements"][2]["cell"] == 4);
    CHECK_THROWS(Tiling(CombSpec(2, 3), 5, {{TileKind::Comb, 1}, {TileKind::Square, 3}}));
    CHECK_THROWS(Tiling(CombSpec(2, 3), 4, {{TileKind::Comb, 1}}));
  }
}

#include <doctest.h>

#include <algorithm>
#include <set>

#include "brute.hpp"
#include "combtri/digraph.hpp"

using namespace combtri;

namespace {

using LK = std::pair<long long, long long>;

std::multiset<LK> lengths(const std::vector<Cycle>& cycles) {
  std::multiset<LK> out;
  for (const auto& c : cycles) out.insert({c.L, c.K});
  return out;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("digraph") {
  TEST_CASE("(2,3) digraph") {
    const auto dg = build_digraph(CombSpec(2, 3));
    CHECK(dg.nodes() == std::vector<std::string>{"0", "0101", "01"});
    CHECK(dg.arc_count() == 6);
    const int z = dg.find_node("0");
    const int a = dg.find_node("0101");
    const int b = dg.find_node("01");
    CHECK(dg.step(z, ArcLabel::S) == z);
    CHECK(dg.step(z, ArcLabel::C) == a);
    CHECK(dg.step(a, ArcLabel::S) == b);
    CHECK(dg.step(a, ArcLabel::C) == z);
    CHECK(dg.step(b, ArcLabel::S) == z);
    CHECK(dg.step(b, ArcLabel::C) == b);
    CHECK(dg.find_node("0111") == -1);
  }

  TEST_CASE("t-omino digraph is a single node") {
    const auto dg = build_digraph(CombSpec(1, 4));
    CHECK(dg.node_count() == 1);
    CHECK(dg.arc_count() == 2);
    CHECK(dg.step(0, ArcLabel::S) == 0);
    CHECK(dg.step(0, ArcLabel::C) == 0);
  }

  TEST_CASE("errant loop node in (2,5)") {
    const auto dg = build_digraph(CombSpec(2, 5));
    const int node = dg.find_node("0101");
    REQUIRE(node >= 0);
    CHECK(dg.step(node, ArcLabel::C) == node);
  }

  TEST_CASE("structure of (2,3)") {
    const auto cs = analyze_structure(build_digraph(CombSpec(2, 3)));
    REQUIRE(cs.common_node);
    CHECK(*cs.common_node == "01");
    CHECK_FALSE(cs.errant);
    REQUIRE(cs.inner_cycles.size() == 1);
    CHECK(cs.inner_cycles[0].labels == "C");
    CHECK(lengths(cs.inner_cycles) == std::multiset<LK>{{1, 1}});
    CHECK(lengths(cs.outer_cycles) == std::multiset<LK>{{1, 0}, {2, 2}});
    REQUIRE(cs.common_circuits.size() == 1);
    CHECK(cs.common_circuits[0].labels == "CSS");
    CHECK(lengths(cs.common_circuits) == std::multiset<LK>{{3, 1}});
  }

  TEST_CASE("structure of (4,2)") {
    const auto cs = analyze_structure(build_digraph(CombSpec(4, 2)));
    REQUIRE(cs.common_node);
    CHECK(*cs.common_node == "001");
    CHECK(lengths(cs.inner_cycles) == std::multiset<LK>{{2, 1}, {3, 2}, {4, 4}});
    CHECK(cs.outer_cycles.size() == 5);
    CHECK(lengths(cs.common_circuits) ==
          std::multiset<LK>{{4, 1}, {5, 2}, {5, 3}, {6, 4}, {7, 4}, {8, 5}, {8, 6}, {9, 7}});
  }

  TEST_CASE("structure of (2,4)") {
    const auto cs = analyze_structure(build_digraph(CombSpec(2, 4)));
    CHECK(cs.common_node);
    CHECK_FALSE(cs.errant);
  }

  TEST_CASE("pseudo-common structure of (2,5)") {
    const auto cs = analyze_structure(build_digraph(CombSpec(2, 5)));
    CHECK_FALSE(cs.common_node);
    REQUIRE(cs.errant);
    CHECK(cs.errant->node == "0101");
    CHECK(cs.errant->L0 == 1);
    CHECK(cs.errant->K0 == 1);
    REQUIRE(cs.pseudo_common);
    CHECK(*cs.pseudo_common == "010101");
    REQUIRE(cs.inner_cycles.size() == 3);
    std::multiset<std::pair<LK, bool>> inner;
    for (const auto& c : cs.inner_cycles) inner.insert({{c.L, c.K}, c.plain});
    // The errant loop itself passes through E, so it is not plain.
    CHECK(inner == std::multiset<std::pair<LK, bool>>{{{1, 1}, false}, {{2, 2}, true}, {{3, 1}, false}});
    for (const auto& c : cs.outer_cycles) CHECK(c.plain);
    std::multiset<std::pair<std::string, bool>> circuits;
    for (const auto& c : cs.common_circuits) circuits.insert({c.labels, c.plain});
    CHECK(circuits == std::multiset<std::pair<std::string, bool>>{{"CSCS", true}, {"CSSSS", false}});
  }

  TEST_CASE("(3,3) has no recognised structure") {
    CHECK_THROWS_AS(analyze_structure(build_digraph(CombSpec(3, 3))), UnsupportedStructure);
  }

  TEST_CASE("m = 1 structure") {
    const auto cs = analyze_structure(build_digraph(CombSpec(1, 3)));
    CHECK(cs.inner_cycles.empty());
    CHECK_FALSE(cs.common_node);
    CHECK(lengths(cs.outer_cycles) == std::multiset<LK>{{1, 0}, {1, 1}});
  }

  TEST_CASE("cycle limit") {
    AnalysisLimits tiny;
    tiny.max_cycles = 3;
    CHECK_THROWS_AS(analyze_structure(build_digraph(CombSpec(4, 2)), tiny), CycleLimitExceeded);
  }

  TEST_CASE("digraph size and node shape") {
    for (int m = 1; m <= 6; ++m) {
      for (int t = 2; t <= 6; ++t) {
        if (m * t > 24) continue;
        const auto dg = build_digraph(CombSpec(m, t));
        CHECK(dg.arc_count() == 2 * dg.node_count());
        CHECK(dg.nodes().front() == "0");
        for (const auto& node : dg.nodes()) CHECK(node.size() <= static_cast<std::size_t>((t - 1) * m));
      }
    }
  }

  TEST_CASE("every node is on a closed walk through 0") {
    for (int m = 1; m <= 4; ++m) {
      for (int t = 2; t <= 5; ++t) {
        const auto dg = build_digraph(CombSpec(m, t));
        const std::size_t n = dg.node_count();
        std::vector<char> fwd(n, 0);
        std::vector<char> back(n, 0);
        fwd[0] = back[0] = 1;
        for (std::size_t pass = 0; pass < n; ++pass) {
          for (const auto& arc : dg.arcs()) {
            if (fwd[static_cast<std::size_t>(arc.from)]) fwd[static_cast<std::size_t>(arc.to)] = 1;
            if (back[static_cast<std::size_t>(arc.to)]) back[static_cast<std::size_t>(arc.from)] = 1;
          }
        }
        for (std::size_t i = 0; i < n; ++i) CHECK((fwd[i] && back[i]));
      }
    }
  }

  TEST_CASE("metatiles of (2,3)") {
    const auto dg = build_digraph(CombSpec(2, 3));
    CHECK(enumerate_metatiles(dg, 5) == std::vector<std::string>{"S", "CC", "CSS", "CSCS", "CSCCS"});
    CHECK(enumerate_metatiles(build_digraph(CombSpec(1, 3)), 3) == std::vector<std::string>{"C", "S"});
    CHECK(compress_labels("CSCCS") == "CSC^2S");
    CHECK(compress_labels("CSSSS") == "CS^4");
    CHECK_THROWS(enumerate_metatiles(dg, 0));
  }

  TEST_CASE("metatile counts agree with path counting") {
    for (int m = 1; m <= 4; ++m) {
      for (int t = 2; t <= 5; ++t) {
        const auto dg = build_digraph(CombSpec(m, t));
        const auto tiles = enumerate_metatiles(dg, 9);
        const auto counts = metatile_counts(dg, 9);
        for (int len = 1; len <= 9; ++len) {
          const auto n = std::count_if(tiles.begin(), tiles.end(),
                                       [&](const std::string& s) { return static_cast<int>(s.size()) == len; });
          CHECK(counts[static_cast<std::size_t>(len)] == static_cast<long long>(n));
        }
        for (const auto& s : tiles) {
          CHECK(is_metatile(CombSpec(m, t), s));
          CHECK(replay_labels(CombSpec(m, t), s).tile_count() == static_cast<int>(s.size()));
        }
      }
    }
  }

  TEST_CASE("metatile sequences concatenate to every tiling") {
    // Tilings of each board length split uniquely into metatiles, so the
    // counts of metatile sequences reproduce the board counts.
    for (int m = 1; m <= 3; ++m) {
      for (int t = 2; t <= 4; ++t) {
        const CombSpec spec(m, t);
        const auto tiles = enumerate_metatiles(build_digraph(spec), 14);
        std::vector<std::uint64_t> by_cells(15, 0);
        by_cells[0] = 1;
        for (int len = 1; len <= 14; ++len) {
          for (const auto& s : tiles) {
            const int cells = replay_labels(spec, s).board_len();
            if (cells <= len) by_cells[static_cast<std::size_t>(len)] += by_cells[static_cast<std::size_t>(len - cells)];
          }
        }
        for (int len = 0; len <= 14; ++len) {
          std::uint64_t total = 0;
          for (auto c : testbrute::board_counts(m, t, len)) total += c;
          CHECK(by_cells[static_cast<std::size_t>(len)] == total);
        }
      }
    }
  }

  TEST_CASE("replay rejects bad words") {
    CHECK_THROWS(replay_labels(CombSpec(2, 3), "C"));
    CHECK_FALSE(is_metatile(CombSpec(2, 3), "SS"));
    CHECK_FALSE(is_metatile(CombSpec(2, 3), "CSSS"));
  }

  TEST_CASE("finite metatile families") {
    for (int m = 1; m <= 4; ++m) {
      for (int t = 2; t <= 5; ++t) {
        const bool finite = m == 1 || (m == 2 && t == 2);
        CHECK(has_finite_metatiles(build_digraph(CombSpec(m, t))) == finite);
      }
    }
  }

  TEST_CASE("dot export") {
    const auto dot = export_dot(build_digraph(CombSpec(2, 3)));
    CHECK(dot.rfind("digraph \"comb_m2_t3\" {", 0) == 0);
    CHECK(count_of(dot, "->") == 6);
    CHECK(count_of(dot, "\"0101\" -> \"01\" [label=\"S\"]") == 1);
    const auto tiny = export_dot(build_digraph(CombSpec(1, 2)));
    CHECK(count_of(tiny, "\"0\" -> \"0\"") == 2);
    CHECK(export_dot(build_digraph(CombSpec(2, 3))) == dot);
  }

  TEST_CASE("json export") {
    const auto dg = build_digraph(CombSpec(2, 5));
    const auto doc = digraph_to_json(dg);
    CHECK(doc["nodes"].size() == dg.node_count());
    const auto sj = structure_to_json(analyze_structure(dg));
    CHECK(sj["pseudo_common"] == "010101");
    CHECK(sj["errant"]["node"] == "0101");
    CHECK(sj["common_node"].is_null());
  }
}

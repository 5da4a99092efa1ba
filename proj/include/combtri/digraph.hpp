#pragma once

// Metatile digraph: nodes are partial-metatile occupancy states, arcs add one
// tile at the first empty cell.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "combtri/core.hpp"
#include "combtri/oracle.hpp"

namespace combtri {

enum class ArcLabel { S, C };

char to_char(ArcLabel label);

struct Arc {
  int from;
  int to;
  ArcLabel label;
  int cell_weight;  // 1 for S, t for C
  int comb_weight;  // 0 for S, 1 for C
};

class MetatileDigraph {
 public:
  const CombSpec& spec() const noexcept { return spec_; }
  // Node 0 is the gapless state "0"; the rest follow in discovery order.
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  // Arc indices leaving a node, S before C.
  const std::vector<int>& out_arcs(int node) const { return out_.at(static_cast<std::size_t>(node)); }

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  // -1 when absent.
  int find_node(const std::string& name) const;
  // Successor of a node along a label, or -1.
  int step(int node, ArcLabel label) const;

  friend MetatileDigraph build_digraph(const CombSpec& spec);

 private:
  explicit MetatileDigraph(CombSpec spec) : spec_(spec) {}
  CombSpec spec_;
  std::vector<std::string> nodes_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
};

MetatileDigraph build_digraph(const CombSpec& spec);

// A simple cycle or a common circuit, stored as arc indices.
struct Cycle {
  std::vector<int> arcs;
  std::vector<std::string> nodes;  // source node of each arc
  std::string labels;              // "CSS"
  long long L;                     // tiles
  long long K;                     // combs
  bool plain;                      // avoids the errant-loop node
};

struct ErrantLoop {
  std::string node;
  int arc;
  long long L0;
  long long K0;
};

struct CycleStructure {
  CombSpec spec;
  std::vector<Cycle> inner_cycles;
  std::vector<Cycle> outer_cycles;
  std::optional<std::string> common_node;
  std::optional<ErrantLoop> errant;
  std::optional<std::string> pseudo_common;
  std::vector<Cycle> common_circuits;
};

// Neither a common node nor the errant-loop pattern.
class UnsupportedStructure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple-cycle enumeration gave up.
class CycleLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AnalysisLimits {
  std::size_t max_cycles = 100000;
};

CycleStructure analyze_structure(const MetatileDigraph& dg, const AnalysisLimits& limits = {});

// True when no cycle avoids node 0, i.e. there are only finitely many
// metatiles.
bool has_finite_metatiles(const MetatileDigraph& dg);

// Label strings of first-return walks 0 -> 0 with at most max_tiles arcs,
// ordered by length then lexicographically ('C' < 'S').
std::vector<std::string> enumerate_metatiles(const MetatileDigraph& dg, int max_tiles);

// counts[n] = number of metatiles with n tiles, by path counting.
std::vector<BigInt> metatile_counts(const MetatileDigraph& dg, int max_tiles);

// Lays tiles at the first empty cell in label order on an explicit board.
// Throws std::invalid_argument on a tooth collision or if a gap remains.
oracle::Tiling replay_labels(const CombSpec& spec, const std::string& labels);

// Replays cleanly and no proper prefix is already gapless.
bool is_metatile(const CombSpec& spec, const std::string& labels);

// "CSCCS" -> "CSC^2S"
std::string compress_labels(const std::string& labels);

std::string export_dot(const MetatileDigraph& dg);
nlohmann::json digraph_to_json(const MetatileDigraph& dg);
nlohmann::json structure_to_json(const CycleStructure& cs);

}  // namespace combtri

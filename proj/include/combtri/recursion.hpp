#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "combtri/core.hpp"
#include "combtri/digraph.hpp"

namespace combtri {

enum class Metric { Tiles, Cells };

std::string_view to_string(Metric metric);
Metric parse_metric(std::string_view text);

// coeff * [n == n0][k == k0]
struct DeltaTerm {
  long long n0;
  std::optional<long long> k0;
  long long coeff;
  bool operator==(const DeltaTerm&) const = default;
};

// coeff * B(n - dn, k - dk)
struct ShiftTerm {
  long long dn;
  std::optional<long long> dk;
  long long coeff;
  bool operator==(const ShiftTerm&) const = default;
};

// B(n,k) = sum of deltas + sum of coeff * B(n-dn, k-dk), with B = 0 for
// n < 0, k < 0 and k > n. Terms are kept collected and sorted.
class RecursionRelation {
 public:
  // Throws std::invalid_argument when a term's k component does not match
  // tracks_k, or a shift has dn <= 0 or dk < 0.
  RecursionRelation(CombSpec spec, Metric metric, bool tracks_k, std::vector<DeltaTerm> deltas,
                    std::vector<ShiftTerm> shifts);

  const CombSpec& spec() const noexcept { return spec_; }
  Metric metric() const noexcept { return metric_; }
  bool tracks_k() const noexcept { return tracks_k_; }
  const std::vector<DeltaTerm>& deltas() const noexcept { return deltas_; }
  const std::vector<ShiftTerm>& shifts() const noexcept { return shifts_; }

  // "B(n,k) = δ(0,0) - δ(1,1) + B(n-1,k) + ..."; A instead of B in the
  // cells metric.
  std::string to_text() const;
  nlohmann::json to_json() const;

  bool operator==(const RecursionRelation&) const = default;

 private:
  CombSpec spec_;
  Metric metric_;
  bool tracks_k_;
  std::vector<DeltaTerm> deltas_;
  std::vector<ShiftTerm> shifts_;
};

// Common-node or pseudo-common-node synthesis. Throws UnsupportedStructure
// when neither theorem's hypothesis holds exactly.
RecursionRelation synthesize(const CycleStructure& structure, Metric metric, bool tracks_k);

// True when synthesize would succeed.
bool synthesis_supported(const CycleStructure& structure);

RecursionRelation project_row_sum(const RecursionRelation& rel);

// Rows 0..rows-1 of a k-tracking relation. No sign or shape checks.
Triangle::Rows evaluate_rows(const RecursionRelation& rel, int rows);
// As above, wrapped as a tile-indexed (tiles) or board-indexed (cells) triangle.
Triangle evaluate_triangle(const RecursionRelation& rel, int rows);
// Terms 0..count-1 of a relation without k.
std::vector<BigInt> evaluate_sequence(const RecursionRelation& rel, int count);

// Closed walks 0 -> 0 by total weight (arcs in the tiles metric, cells
// otherwise), split by comb count.
Triangle walk_triangle(const MetatileDigraph& dg, Metric metric, int rows);
std::vector<BigInt> walk_sequence(const MetatileDigraph& dg, Metric metric, int count);

// Both sides of the multinomial lemma for (j_0, ..., j_N), N >= 2, all j > 0.
struct MultinomialSides {
  BigInt lhs;
  BigInt rhs;
};
MultinomialSides multinomial_sides(const std::vector<long long>& j_values);
bool multinomial_check(const std::vector<long long>& j_values);

}  // namespace combtri

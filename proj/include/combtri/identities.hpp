#pragma once

// Named numeric checks of the triangle identities. Every check evaluates both
// sides with exact integers over a parameter grid and records each mismatch.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "combtri/core.hpp"
#include "combtri/recursion.hpp"

namespace combtri {

// Specs with 1 <= m <= max_m, 2 <= t <= max_t; row and board indices up to
// max_n.
struct Grid {
  int max_m;
  int max_t;
  int max_n;
  nlohmann::json to_json() const;
};

enum class Profile { Quick, Full };

Profile parse_profile(std::string_view text);
Grid profile_grid(Profile profile);

struct CaseFailure {
  nlohmann::json params;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string name;
  Grid grid;
  long long cases_run = 0;
  std::vector<CaseFailure> failures;
  std::vector<std::string> notes;

  bool passed() const noexcept { return failures.empty() && cases_run > 0; }
  nlohmann::json to_json() const;
};

struct SuiteOptions {
  // Stand-in for the maximum-comb formula; lets tests inject a fault.
  std::function<long long(const CombSpec&, long long J, long long R)> max_combs;
};

// Registered check names in suite order.
std::vector<std::string> check_names();

// Throws std::invalid_argument for an unknown name or a grid beyond
// m <= 6, t <= 6, n <= 22.
CheckReport run_check(const std::string& name, const Grid& grid, const SuiteOptions& options = {});

std::vector<CheckReport> run_suite(Profile profile, const SuiteOptions& options = {});
std::vector<CheckReport> run_suite(const Grid& grid, const SuiteOptions& options = {});

nlohmann::json reports_to_json(const std::vector<CheckReport>& reports);
std::string reports_to_text(const std::vector<CheckReport>& reports);

// Relations as printed for the four worked families, transcribed term by
// term. Names: rr23 rr24 rr42 rr25 (tiles, with k), B23..B25 (tiles, row
// sums) and A23..A25 (cells, antidiagonal sums).
struct PrintedRelation {
  std::string name;
  RecursionRelation relation;
};
const std::vector<PrintedRelation>& printed_relations();
const RecursionRelation& printed_relation(const std::string& name);

// Terms present in one relation but not the other, e.g. "δ(2): printed -1,
// synthesized 0". Empty when equal.
std::vector<std::string> relation_diff(const RecursionRelation& printed,
                                       const RecursionRelation& synthesized);

}  // namespace combtri

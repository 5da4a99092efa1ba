// Acceptance run: one PASS/FAIL line per criterion. Counts are exact
// (tolerance 0); runtime bounds are wall-clock seconds.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "combtri/digraph.hpp"
#include "combtri/identities.hpp"
#include "combtri/oracle.hpp"
#include "combtri/polynomials.hpp"
#include "combtri/recursion.hpp"
#include "figure_data.hpp"

using namespace combtri;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

constexpr double kFigureSeconds = 10.0;
constexpr double kSuiteSeconds = 120.0;

RecursionRelation synth(const CombSpec& spec, Metric metric, bool tracks_k) {
  return synthesize(analyze_structure(build_digraph(spec)), metric, tracks_k);
}

std::string where(const std::string& who, std::size_t n, std::size_t k) {
  return who + " differs at (" + std::to_string(n) + "," + std::to_string(k) + ")";
}

void compare_figure(Outcome& out, const testdata::FigureTable& fig, const Triangle& tri, const std::string& who) {
  for (std::size_t n = 0; n < fig.rows.size(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      if (tri.at(static_cast<long long>(n), static_cast<long long>(k)) != fig.rows[n][k]) {
        out.fail(std::string(fig.name) + " " + where(who, n, k));
        return;
      }
    }
  }
}

Outcome figures() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& fig : testdata::figure_tables()) {
    const CombSpec spec(fig.m, fig.t);
    const int rows = static_cast<int>(fig.rows.size());
    compare_figure(out, fig, oracle::build_triangle(spec, TriangleKind::TileIndexed, rows), "oracle");
    compare_figure(out, fig, triangle_via_poly(spec, TriangleKind::TileIndexed, rows), "poly");
    compare_figure(out, fig, walk_triangle(build_digraph(spec), Metric::Tiles, rows), "walk");
    if (!(fig.m == 3 && fig.t == 3)) {
      compare_figure(out, fig, evaluate_triangle(synth(spec, Metric::Tiles, true), rows), "recursion");
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream s;
  s << secs << " s";
  if (secs >= kFigureSeconds) out.fail("took " + s.str());
  if (out.ok) out.detail = "4 tables x 14 rows, 3-4 engines each, " + s.str();
  return out;
}

Outcome synthesis_exact() {
  Outcome out;
  int matched = 0;
  for (const auto& p : printed_relations()) {
    const auto& rel = p.relation;
    const auto got = synth(rel.spec(), rel.metric(), rel.tracks_k());
    if (got == rel) {
      ++matched;
      continue;
    }
    std::string diff;
    for (const auto& d : relation_diff(rel, got)) diff += (diff.empty() ? "" : "; ") + d;
    out.fail(p.name + ": " + diff);
  }
  const std::string tally = std::to_string(matched) + "/" + std::to_string(printed_relations().size()) + " match";
  out.detail = out.ok ? tally : tally + "; " + out.detail;
  return out;
}

std::vector<BigInt> row_sums(const CombSpec& spec, TriangleKind kind, int count) {
  const auto tri = oracle::build_triangle(spec, kind, count);
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < tri.row_count(); ++i) out.push_back(tri.row_sum(i));
  return out;
}

Outcome prefixes() {
  struct Listing {
    const char* name;
    int m;
    int t;
    TriangleKind kind;
    std::vector<long long> values;
  };
  const auto T = TriangleKind::TileIndexed;
  const auto B = TriangleKind::BoardIndexed;
  const std::vector<Listing> listings = {
      {"A011782", 2, 3, T, {1, 1, 2, 4, 8, 16, 32, 64, 128, 256}},
      {"A099163", 2, 4, T, {1, 1, 2, 3, 7, 12, 27, 49, 106, 199, 419}},
      {"(4,2) row sums", 4, 2, T, {1, 1, 1, 1, 5, 12, 21, 34, 70, 155, 318, 610}},
      {"A005578", 2, 5, T, {1, 1, 2, 3, 6, 11, 22, 43, 86, 171, 342, 683}},
      {"A224809", 2, 3, B, {1, 1, 1, 1, 1, 2, 4, 6, 9, 12, 16, 24, 36, 54, 81, 117}},
      {"A224808", 2, 4, B, {1, 1, 1, 1, 1, 1, 1, 2, 4, 6, 9, 12, 16, 20, 25, 35}},
      {"(4,2) antidiagonal sums", 4, 2, B, {1, 1, 1, 1, 1, 2, 4, 8, 16, 24, 36, 54, 81, 135, 225}},
      {"A224811", 2, 5, B, {1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36, 48, 64}},
  };
  Outcome out;
  for (const auto& l : listings) {
    const CombSpec spec(l.m, l.t);
    const int count = static_cast<int>(l.values.size());
    const auto sums = row_sums(spec, l.kind, count);
    const Metric metric = l.kind == T ? Metric::Tiles : Metric::Cells;
    const auto walked = walk_sequence(build_digraph(spec), metric, count);
    for (int i = 0; i < count; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      if (sums[idx] != l.values[idx] || walked[idx] != l.values[idx]) {
        out.fail(std::string(l.name) + " term " + std::to_string(i));
        break;
      }
    }
  }
  if (out.ok) out.detail = "8 listings, oracle and walk";
  return out;
}

Outcome generating_function() {
  const IntPolynomial num(std::vector<BigInt>{1, -1, 0, -1});
  const IntPolynomial den = IntPolynomial(std::vector<BigInt>{1, -2}) * IntPolynomial(std::vector<BigInt>{1, 0, -1}) *
                            IntPolynomial(std::vector<BigInt>{1, 0, 2, 1, 1});
  const int count = 12;
  std::vector<BigInt> series;
  for (int n = 0; n < count; ++n) {
    BigInt acc = num.coefficient(n);
    for (int i = 1; i <= n; ++i) acc -= den.coefficient(i) * series[static_cast<std::size_t>(n - i)];
    series.push_back(acc);
  }
  const auto sums = row_sums(CombSpec(4, 2), TriangleKind::TileIndexed, count);
  Outcome out;
  for (int n = 0; n < count; ++n) {
    if (series[static_cast<std::size_t>(n)] != sums[static_cast<std::size_t>(n)]) {
      out.fail("term " + std::to_string(n));
      return out;
    }
  }
  out.detail = "12 terms";
  return out;
}

Outcome bijections() {
  oracle::Limits limits;
  limits.max_board_cells = 32;
  limits.max_count_cells = 40;
  Outcome out;
  long long subsets_checked = 0;
  long long tilings_checked = 0;
  for (int m = 1; m <= 4; ++m) {
    for (int t = 2; t <= 5; ++t) {
      const CombSpec spec(m, t);
      const CombSpec omino(1, t);
      for (int n = 0; n <= 14; ++n) {
        const int len = n + (t - 1) * m;
        const auto board = oracle::count_board_tilings(spec, len, limits);
        for (int k = 0; k <= n; ++k) {
          const auto subsets = oracle::enumerate_restricted_subsets(spec, n, k, limits);
          for (const auto& s : subsets) {
            ++subsets_checked;
            if (oracle::tiling_to_subset(oracle::subset_to_tiling(spec, s)) != s) out.fail(spec.label() + " subset round trip");
          }
          const BigInt expect = static_cast<std::size_t>(k) < board.size() ? board[static_cast<std::size_t>(k)] : BigInt(0);
          if (expect != static_cast<long long>(subsets.size())) out.fail(spec.label() + " count n=" + std::to_string(n));
        }
        const auto tilings = oracle::enumerate_tilings(spec, len, limits);
        for (const auto& tiling : tilings) {
          ++tilings_checked;
          if (oracle::subset_to_tiling(spec, oracle::tiling_to_subset(tiling)) != tiling) {
            out.fail(spec.label() + " tiling round trip");
          }
          if (oracle::join_boards(spec, oracle::split_board(tiling)) != tiling) out.fail(spec.label() + " split round trip");
        }
        // Convolution of the residue-class board counts.
        const int j = len / m;
        const int r = len % m;
        std::vector<BigInt> conv{1};
        for (int c = 0; c < m; ++c) {
          const auto part = oracle::count_board_tilings(omino, c < r ? j + 1 : j, limits);
          std::vector<BigInt> next(conv.size() + part.size() - 1, 0);
          for (std::size_t a = 0; a < conv.size(); ++a) {
            for (std::size_t b = 0; b < part.size(); ++b) next[a + b] += conv[a] * part[b];
          }
          conv = std::move(next);
        }
        while (conv.size() > 1 && conv.back() == 0) conv.pop_back();
        auto direct = board;
        while (direct.size() > 1 && direct.back() == 0) direct.pop_back();
        if (conv != direct) out.fail(spec.label() + " convolution at board " + std::to_string(len));
      }
    }
  }
  if (out.ok) {
    out.detail = std::to_string(subsets_checked) + " subsets, " + std::to_string(tilings_checked) + " tilings";
  }
  return out;
}

Outcome identity_suite() {
  const auto start = std::chrono::steady_clock::now();
  const auto reports = run_suite(Profile::Full);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome out;
  std::size_t failures = 0;
  for (const auto& r : reports) {
    if (!r.passed()) {
      failures += r.failures.size();
      out.fail(r.name + " has " + std::to_string(r.failures.size()) + " failing cases");
    }
  }
  std::ostringstream s;
  s << reports.size() << " checks, " << failures << " failing cases, " << secs << " s";
  if (secs >= kSuiteSeconds) out.fail("took " + s.str());
  out.detail = out.ok ? s.str() : out.detail + "; " + s.str();
  return out;
}

Outcome pascal() {
  Outcome out;
  for (int t = 2; t <= 5; ++t) {
    const auto tri = oracle::build_triangle(CombSpec(1, t), TriangleKind::TileIndexed, 17);
    for (long long n = 0; n <= 16; ++n) {
      for (long long k = 0; k <= n; ++k) {
        if (tri.at(n, k) != binomial(n, k)) out.fail("t=" + std::to_string(t) + " " + where("entry", n, k));
      }
    }
  }
  if (out.ok) out.detail = "t 2..5, n <= 16";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 figure reproduction", figures},
      {"2 recursion synthesis exactness", synthesis_exact},
      {"3 sequence prefixes", prefixes},
      {"4 generating function", generating_function},
      {"5 bijection suites", bijections},
      {"6 identity suite (full)", identity_suite},
      {"7 Pascal degeneration", pascal},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail << '\n';
    if (!o.ok) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

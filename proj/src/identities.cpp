#include "combtri/identities.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "combtri/digraph.hpp"
#include "combtri/oracle.hpp"
#include "combtri/polynomials.hpp"

namespace combtri {

nlohmann::json Grid::to_json() const {
  return {{"max_m", max_m}, {"max_t", max_t}, {"max_n", max_n}};
}

Profile parse_profile(std::string_view text) {
  if (text == "quick") return Profile::Quick;
  if (text == "full") return Profile::Full;
  throw std::invalid_argument("unknown profile: " + std::string(text));
}

Grid profile_grid(Profile profile) {
  return profile == Profile::Quick ? Grid{3, 4, 14} : Grid{4, 5, 20};
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : failures) {
    fails.push_back({{"params", f.params}, {"expected", f.expected}, {"actual", f.actual}});
  }
  return {{"check", name},       {"grid", grid.to_json()}, {"cases_run", cases_run},
          {"passed", passed()},  {"failures", fails},      {"notes", notes}};
}

nlohmann::json reports_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  return arr;
}

std::string reports_to_text(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases_run
        << " failures=" << r.failures.size() << '\n';
    const std::size_t shown = std::min<std::size_t>(r.failures.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) {
      const auto& f = r.failures[i];
      out << "  " << f.params.dump() << " expected " << f.expected << " actual " << f.actual
          << '\n';
    }
    if (r.failures.size() > shown) out << "  ... " << r.failures.size() - shown << " more\n";
    for (const auto& note : r.notes) out << "  note: " << note << '\n';
    if (!r.passed()) ++failed;
  }
  out << (failed == 0 ? "all " + std::to_string(reports.size()) + " checks passed"
                      : std::to_string(failed) + " of " + std::to_string(reports.size()) +
                            " checks failed")
      << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Printed relations

namespace {

RecursionRelation rel2(int m, int t, std::vector<DeltaTerm> d, std::vector<ShiftTerm> s) {
  return RecursionRelation(CombSpec(m, t), Metric::Tiles, true, std::move(d), std::move(s));
}

RecursionRelation rel1(int m, int t, Metric metric, std::vector<std::pair<long long, long long>> d,
                       std::vector<std::pair<long long, long long>> s) {
  std::vector<DeltaTerm> deltas;
  for (auto [n, c] : d) deltas.push_back({n, std::nullopt, c});
  std::vector<ShiftTerm> shifts;
  for (auto [n, c] : s) shifts.push_back({n, std::nullopt, c});
  return RecursionRelation(CombSpec(m, t), metric, false, std::move(deltas), std::move(shifts));
}

std::vector<PrintedRelation> make_printed() {
  const Metric T = Metric::Tiles;
  const Metric C = Metric::Cells;
  std::vector<PrintedRelation> out;
  out.push_back({"rr23", rel2(2, 3, {{0, 0, 1}, {1, 1, -1}},
                              {{1, 0, 1}, {1, 1, 1}, {2, 1, -1}, {2, 2, 1}, {3, 1, 1}, {3, 3, -1}})});
  out.push_back({"rr24", rel2(2, 4, {{0, 0, 1}, {2, 1, -1}, {2, 2, -1}},
                              {{1, 0, 1},
                               {2, 1, 1},
                               {2, 2, 2},
                               {3, 1, -1},
                               {3, 2, -1},
                               {4, 1, 1},
                               {4, 2, 1},
                               {4, 3, -1},
                               {4, 4, -1}})});
  out.push_back({"rr42", rel2(4, 2, {{0, 0, 1}, {2, 1, -1}, {3, 2, -1}, {4, 4, -1}},
                              {{1, 0, 1},  {2, 1, 1},  {3, 1, -1}, {3, 2, 1},  {4, 1, 1},
                               {4, 3, 1},  {4, 4, 2},  {5, 2, 1},  {5, 3, 2},  {5, 4, -1},
                               {6, 3, -1}, {6, 5, -1}, {7, 4, -1}, {7, 5, -1}, {7, 6, -1},
                               {8, 7, -1}, {8, 8, -1}})});
  out.push_back({"rr25", rel2(2, 5, {{0, 0, 1}, {1, 1, -1}, {2, 2, -1}, {3, 3, 1}, {3, 1, -1}},
                              {{1, 0, 1},
                               {1, 1, 1},
                               {2, 1, -1},
                               {2, 2, 2},
                               {3, 1, 1},
                               {3, 2, -1},
                               {3, 3, -2},
                               {4, 1, -1},
                               {4, 2, 1},
                               {4, 3, 1},
                               {4, 4, -1},
                               {5, 1, 1},
                               {5, 3, -2},
                               {5, 5, 1}})});
  out.push_back({"B23", rel1(2, 3, T, {{0, 1}, {1, -1}, {2, -1}}, {{1, 2}})});
  out.push_back({"B24", rel1(2, 4, T, {{0, 1}, {2, -2}}, {{1, 1}, {2, 3}, {3, -2}})});
  out.push_back({"B42", rel1(4, 2, T, {{0, 1}, {2, -1}, {3, -1}, {4, -1}},
                             {{1, 1}, {2, 1}, {4, 4}, {5, 2}, {6, -2}, {7, -3}, {8, -2}})});
  out.push_back({"B25", rel1(2, 5, T, {{0, 1}, {1, -1}, {2, -1}}, {{1, 2}, {2, 1}, {3, -2}})});
  out.push_back({"A23", rel1(2, 3, C, {{0, 1}, {3, -1}},
                             {{1, 1}, {3, 1}, {4, -1}, {5, 1}, {6, 1}, {9, -1}})});
  out.push_back({"A24", rel1(2, 4, C, {{0, 1}, {5, -1}, {8, -1}},
                             {{1, 1},
                              {5, 1},
                              {6, -1},
                              {7, 1},
                              {8, 2},
                              {9, -1},
                              {10, 1},
                              {13, -1},
                              {16, -1}})});
  out.push_back({"A42", rel1(4, 2, C, {{0, 1}, {3, -1}, {5, -1}, {8, -1}},
                             {{1, 1},
                              {3, 1},
                              {4, -1},
                              {5, 2},
                              {7, 2},
                              {8, 4},
                              {9, -2},
                              {11, -2},
                              {12, -1},
                              {13, -1},
                              {15, -1},
                              {16, -1}})});
  out.push_back({"A25", rel1(2, 5, C, {{0, 1}, {5, -1}, {7, -1}, {10, -1}, {15, 1}},
                             {{1, 1},
                              {5, 1},
                              {6, -1},
                              {7, 1},
                              {8, -1},
                              {9, 1},
                              {10, 2},
                              {11, -1},
                              {12, 1},
                              {15, -2},
                              {16, 1},
                              {17, -2},
                              {20, -1},
                              {25, 1}})});
  return out;
}

std::string term_key(long long n, const std::optional<long long>& k) {
  return "(" + std::to_string(n) + (k ? "," + std::to_string(*k) : std::string()) + ")";
}

}  // namespace

const std::vector<PrintedRelation>& printed_relations() {
  static const std::vector<PrintedRelation> table = make_printed();
  return table;
}

const RecursionRelation& printed_relation(const std::string& name) {
  for (const auto& p : printed_relations()) {
    if (p.name == name) return p.relation;
  }
  throw std::invalid_argument("no printed relation named " + name);
}

std::vector<std::string> relation_diff(const RecursionRelation& printed,
                                       const RecursionRelation& synthesized) {
  std::vector<std::string> out;
  if (printed.spec() != synthesized.spec() || printed.metric() != synthesized.metric() ||
      printed.tracks_k() != synthesized.tracks_k()) {
    out.push_back("relations differ in spec, metric or k tracking");
    return out;
  }
  const char name = printed.metric() == Metric::Tiles ? 'B' : 'A';
  auto compare = [&](const std::map<std::string, long long>& a,
                     const std::map<std::string, long long>& b) {
    std::map<std::string, std::pair<long long, long long>> merged;
    for (const auto& [key, c] : a) merged[key].first = c;
    for (const auto& [key, c] : b) merged[key].second = c;
    for (const auto& [key, cs] : merged) {
      if (cs.first != cs.second) {
        out.push_back(key + ": printed " + std::to_string(cs.first) + ", synthesized " +
                      std::to_string(cs.second));
      }
    }
  };
  std::map<std::string, long long> pd;
  std::map<std::string, long long> sd;
  for (const auto& d : printed.deltas()) pd["δ" + term_key(d.n0, d.k0)] = d.coeff;
  for (const auto& d : synthesized.deltas()) sd["δ" + term_key(d.n0, d.k0)] = d.coeff;
  compare(pd, sd);
  std::map<std::string, long long> ps;
  std::map<std::string, long long> ss;
  for (const auto& s : printed.shifts()) ps[std::string(1, name) + "-" + term_key(s.dn, s.dk)] = s.coeff;
  for (const auto& s : synthesized.shifts()) ss[std::string(1, name) + "-" + term_key(s.dn, s.dk)] = s.coeff;
  compare(ps, ss);
  return out;
}

// ---------------------------------------------------------------------------
// Checks

namespace {

constexpr int kGridMaxM = 6;
constexpr int kGridMaxT = 6;
constexpr int kGridMaxN = 22;

class Context {
 public:
  Context(const Grid& grid, const SuiteOptions& options) : grid_(grid), options_(options) {
    if (grid.max_m < 1 || grid.max_t < 2 || grid.max_n < 0) {
      throw std::invalid_argument("grid needs max_m >= 1, max_t >= 2, max_n >= 0");
    }
    if (grid.max_m > kGridMaxM || grid.max_t > kGridMaxT || grid.max_n > kGridMaxN) {
      throw std::invalid_argument("grid exceeds desk-scale limits m <= 6, t <= 6, n <= 22");
    }
    limits_.max_tile_rows = kGridMaxN + 1;
    limits_.max_board_cells = 32;
    limits_.max_count_cells = 40;
  }

  const Grid& grid() const { return grid_; }
  const oracle::Limits& limits() const { return limits_; }

  std::vector<CombSpec> specs() const {
    std::vector<CombSpec> out;
    for (int m = 1; m <= grid_.max_m; ++m) {
      for (int t = 2; t <= grid_.max_t; ++t) out.emplace_back(m, t);
    }
    return out;
  }

  long long max_combs(const CombSpec& spec, long long J, long long R) const {
    return options_.max_combs ? options_.max_combs(spec, J, R) : combtri::max_combs(spec, J, R);
  }

  const Triangle& tile(const CombSpec& spec) { return cached(tile_, spec, TriangleKind::TileIndexed); }
  const Triangle& board(const CombSpec& spec) { return cached(board_, spec, TriangleKind::BoardIndexed); }

  // S(n, k) for every k, by enumeration; the n < 0 convention included.
  const std::vector<BigInt>& subsets(const CombSpec& spec, int n) {
    auto key = std::make_pair(spec, n);
    auto it = subsets_.find(key);
    if (it != subsets_.end()) return it->second;
    std::vector<BigInt> counts;
    const int kmax = std::max(n, 0);
    for (int k = 0; k <= kmax; ++k) counts.push_back(oracle::count_restricted_subsets(spec, n, k, limits_));
    return subsets_.emplace(key, std::move(counts)).first->second;
  }

  BigInt subset_count(const CombSpec& spec, int n, int k) {
    if (k < 0) return 0;
    const auto& counts = subsets(spec, n);
    return k < static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(k)] : BigInt(0);
  }

 private:
  const Triangle& cached(std::map<CombSpec, Triangle>& cache, const CombSpec& spec, TriangleKind kind) {
    auto it = cache.find(spec);
    if (it == cache.end()) {
      it = cache.emplace(spec, oracle::build_triangle(spec, kind, grid_.max_n + 1, limits_)).first;
    }
    return it->second;
  }

  Grid grid_;
  SuiteOptions options_;
  oracle::Limits limits_;
  std::map<CombSpec, Triangle> tile_;
  std::map<CombSpec, Triangle> board_;
  std::map<std::pair<CombSpec, int>, std::vector<BigInt>> subsets_;
};

nlohmann::json spec_params(const CombSpec& spec) { return {{"m", spec.m()}, {"t", spec.t()}}; }

void expect(CheckReport& rep, nlohmann::json params, const BigInt& expected, const BigInt& actual) {
  ++rep.cases_run;
  if (expected != actual) rep.failures.push_back({std::move(params), to_decimal(expected), to_decimal(actual)});
}

void expect_true(CheckReport& rep, nlohmann::json params, bool ok, const std::string& what) {
  ++rep.cases_run;
  if (!ok) rep.failures.push_back({std::move(params), what, "violated"});
}

nlohmann::json with(nlohmann::json base, std::initializer_list<std::pair<const char*, long long>> more) {
  for (const auto& [key, v] : more) base[key] = v;
  return base;
}

BigInt pow_big(const BigInt& b, long long e) { return pow(b, static_cast<unsigned>(e)); }

// Tile-indexed entries from the oracle; indices past the materialized rows
// are skipped by callers.
bool in_rows(const Context& ctx, long long n) { return n <= ctx.grid().max_n; }

void check_ch_eq_chb(Context& ctx, CheckReport& rep) {
  for (const auto& spec : ctx.specs()) {
    const Triangle& board = ctx.board(spec);
    const Triangle& tile = ctx.tile(spec);
    for (long long n = 0; n <= ctx.grid().max_n; ++n) {
      for (long long k = 0; k <= n; ++k) {
        const auto idx = board_to_tile_index(spec, n, k);
        expect(rep, with(spec_params(spec), {{"n", n}, {"k", k}}), tile.at(idx.n, idx.k), board.at(n, k));
      }
    }
  }
}

void check_adiag_sum(Context& ctx, CheckReport& rep) {
  for (const auto& spec : ctx.specs()) {
    const Triangle& tile = ctx.tile(spec);
    for (long long j = 0; spec.m() * j <= ctx.grid().max_n; ++j) {
      for (long long r = 0; r < spec.m() && spec.m() * j + r <= ctx.grid().max_n; ++r) {
        expect(rep, with(spec_params(spec), {{"j", j}, {"r", r}}), antidiagonal_sum_closed(spec, j, r),
               tile.antidiagonal_sum(spec.m() * j + r, spec.t() - 1));
      }
    }
  }
}

void check_col0(Context& ctx, CheckReport& rep) {
  for (const auto& spec : ctx.specs()) {
    const Triangle& tile = ctx.tile(spec);
    for (long long n = 0; n <= ctx.grid().max_n; ++n) {
      expect(rep, with(spec_params(spec), {{"n", n}}), 1, tile.at(n, 0));
    }
  }
}

void check_diag(Context& ctx, CheckReport& rep) {
  for (const auto& spec : ctx.specs()) {
    const Triangle& tile = ctx.tile(spec);
    for (long long n = 0; n <= ctx.grid().max_n; ++n) {
      expect(rep, with(spec_params(spec), {{"n", n}}), n % spec.m() == 0 ? 1 : 0, tile.at(n, n));
    }
  }
}

void check_col1(Context& ctx, CheckReport& rep) {
  for (const auto& spec : ctx.specs()) {
    const Triangle& tile = ctx.tile(spec);
    const long long filled = static_cast<long long>(spec.m() - 1) * (spec.t() - 1);
    for (long long n = 1; n <= ctx.grid().max_n; ++n) {
      expect(rep, with(spec_params(spec), {{"n", n}}), n < filled + 1 ? 0 : n - filled, tile.at(n, 1));
    }
  }
}

void check_zeros(Context& ctx, CheckReport& rep) {
  for (const auto& spec : ctx.specs()) {
    const long long m = spec.m();
    const long long t = spec.t();
    // Maximum comb count against the largest nonzero board entry.
    const Triangle& board = ctx.board(spec);
    for (long long len = 0; len <= ctx.grid().max_n; ++len) {
      long long largest = 0;
      for (long long k = 0; k <= len; ++k) {
        if (board.at(len, k) != 0) largest = k;
      }
      expect(rep, with(spec_params(spec), {{"J", len / m}, {"R", len % m}}), largest,
             ctx.max_combs(spec, len / m, len % m));
    }
    if (m < 2) continue;
    const Triangle& tile = ctx.tile(spec);
    for (long long j = 1; m * j - 1 <= ctx.grid().max_n + (t - 2) * (m - 1); ++j) {
      for (long long p = 1; p <= m - 1; ++p) {
        for (long long r = 1 - (t - 2) * p; r <= p; ++r) {
          const long long n = m * j - r;
          if (n < 0 || !in_rows(ctx, n)) continue;
          expect(rep, with(spec_params(spec), {{"j", j}, {"p", p}, {"r", r}}), 0, tile.at(n, m * j - p));
        }
      }
    }
  }
}

void check_vert_boundary(Context& ctx, CheckReport& rep) {
  for (const auto& spec : ctx.specs()) {
    const long long m = spec.m();
    const Triangle& tile = ctx.tile(spec);
    for (long long j = 1; m * (j - 1) <= ctx.grid().max_n; ++j) {
      for (long long s = 0; s <= spec.t() - 2; ++s) {
        for (long long r = 0; r <= m; ++r) {
          const long long n = m * (j + s - 1) + r;
          if (!in_rows(ctx, n)) continue;
          const auto params = with(spec_params(spec), {{"j", j}, {"s", s}, {"r", r}});
          const BigInt actual = tile.at(n, m * (j - 1));
          const BigInt binom_form =
              pow_big(binomial(j + s - 1, s), m - r) * pow_big(binomial(j + s, s + 1), r);
          expect(rep, params, binom_form, actual);
          if (s == 0) {
            expect(rep, params, pow_big(j, r), actual);
          } else {
            // (j(j+1)...(j+s-1)/s!)^m ((j+s)/(s+1))^r, cross-multiplied.
            BigInt rising = 1;
            for (long long i = 0; i < s; ++i) rising *= j + i;
            const BigInt lhs = pow_big(rising, m) * pow_big(j + s, r);
            const BigInt rhs = actual * pow_big(factorial(s), m) * pow_big(s + 1, r);
            expect(rep, params, lhs, rhs);
          }
        }
      }
    }
  }
}

void check_ray_boundary(Context& ctx, CheckReport& rep) {
  for (const auto& spec : ctx.specs()) {
    const long long m = spec.m();
    const long long t = spec.t();
    const Triangle& tile = ctx.tile(spec);
    for (long long j = 1; m * j <= ctx.grid().max_n; ++j) {
      for (long long p = 0; p <= m; ++p) {
        const long long n = m * j + (t - 2) * p;
        if (!in_rows(ctx, n)) continue;
        expect(rep, with(spec_params(spec), {{"j", j}, {"p", p}}),
               pow_big(binomial(j + t - 2, t - 1), p), tile.at(n, m * j - p));
      }
    }
  }
}

void check_one_square_block(Context& ctx, CheckReport& rep) {
  for (const auto& spec : ctx.specs()) {
    const long long m = spec.m();
    const long long t = spec.t();
    const Triangle& tile = ctx.tile(spec);
    for (long long j = 1; m * j + t - 1 <= ctx.grid().max_n; ++j) {
      expect(rep, with(spec_params(spec), {{"j", j}}), m * binomial(j + t - 1, t),
             tile.at(m * j + t - 1, m * j - 1));
    }
  }
}

void check_two_square_block(Context& ctx, CheckReport& rep) {
  long long branch[3] = {0, 0, 0};
  for (const auto& spec : ctx.specs()) {
    const long long m = spec.m();
    const long long t = spec.t();
    const Triangle& tile = ctx.tile(spec);
    for (long long j = 1; m * j + 2 * (t - 1) <= ctx.grid().max_n; ++j) {
      if (m * j < 2) continue;
      BigInt expected;
      if (j == 1) {
        expected = binomial(m, 2);
        ++branch[0];
      } else if (m > 1) {
        expected = m * binomial(j + 2 * (t - 1), 2 * t) +
                   binomial(m, 2) * pow_big(binomial(j + t - 1, t), 2);
        ++branch[1];
      } else {
        expected = binomial(j + 2 * (t - 1), 2 * t);
        ++branch[2];
      }
      expect(rep, with(spec_params(spec), {{"j", j}}), expected, tile.at(m * j + 2 * (t - 1), m * j - 2));
    }
  }
  const char* names[3] = {"j=1,m>1", "m,j>1", "m=1,j>1"};
  for (int b = 0; b < 3; ++b) {
    rep.notes.push_back(std::string("branch ") + names[b] + ": " + std::to_string(branch[b]) + " cases");
    expect_true(rep, {{"branch", names[b]}}, branch[b] > 0, "branch exercised");
  }
}

void compositions(int s, std::vector<int>& parts, std::vector<std::vector<int>>& out) {
  if (s == 0) {
    out.push_back(parts);
    return;
  }
  for (int first = 1; first <= s; ++first) {
    parts.push_back(first);
    compositions(s - first, parts, out);
    parts.pop_back();
  }
}

void check_composition(Context& ctx, CheckReport& rep) {
  for (int s = 1; s <= 5; ++s) {
    std::vector<std::vector<int>> comps;
    std::vector<int> scratch;
    compositions(s, scratch, comps);
    for (const auto& spec : ctx.specs()) {
      const long long m = spec.m();
      const long long t = spec.t();
      const Triangle& tile = ctx.tile(spec);
      for (long long j = 1; m * j + s * (t - 1) <= ctx.grid().max_n; ++j) {
        if (m * j < s) continue;
        BigInt expected = 0;
        for (const auto& c : comps) {
          BigInt term = binomial(m, static_cast<long long>(c.size()));
          for (int r : c) term *= binomial(j + r * (t - 1), r * t);
          expected += term;
        }
        expect(rep, with(spec_params(spec), {{"s", s}, {"j", j}}), expected,
               tile.at(m * j + s * (t - 1), m * j - s));
      }
    }
  }
}

void check_pascal_region(Context& ctx, CheckReport& rep) {
  long long probes = 0;
  long long probe_fail = 0;
  std::optional<nlohmann::json> first_fail;
  for (const auto& spec : ctx.specs()) {
    const Triangle& tile = ctx.tile(spec);
    const long long bound = static_cast<long long>(spec.m() - 1) * (spec.t() - 1);
    for (long long n = 1; n <= ctx.grid().max_n; ++n) {
      for (long long k = 0; k <= n; ++k) {
        const BigInt lhs = tile.at(n, k);
        const BigInt rhs = tile.at(n - 1, k) + tile.at(n - 1, k - 1);
        if (n > bound * k) {
          expect(rep, with(spec_params(spec), {{"n", n}, {"k", k}}), rhs, lhs);
        } else if (n == bound * k && k >= 1) {
          ++probes;
          if (lhs != rhs) {
            ++probe_fail;
            if (!first_fail) first_fail = with(spec_params(spec), {{"n", n}, {"k", k}});
          }
        }
      }
    }
  }
  std::string note = "boundary n=(m-1)(t-1)k probed " + std::to_string(probes) + " times, recurrence fails in " +
                     std::to_string(probe_fail);
  if (first_fail) note += ", first at " + first_fail->dump();
  rep.notes.push_back(note);
}

void check_subset_recurrence(Context& ctx, CheckReport& rep) {
  long long probes = 0;
  long long probe_fail = 0;
  const int max_universe = std::min(ctx.grid().max_n, ctx.limits().max_subset_universe);
  for (const auto& spec : ctx.specs()) {
    const long long m = spec.m();
    const long long t = spec.t();
    for (int N = 0; N <= max_universe; ++N) {
      for (int k = 1; k <= N + 1; ++k) {
        const long long bound = m * (t - 1) * (k - 1);
        if (N < bound) continue;
        const BigInt lhs = ctx.subset_count(spec, N, k);
        const BigInt rhs = ctx.subset_count(spec, N - 1, k) + ctx.subset_count(spec, N - static_cast<int>(t), k - 1);
        if (N > bound) {
          expect(rep, with(spec_params(spec), {{"N", N}, {"k", k}}), rhs, lhs);
        } else {
          ++probes;
          if (lhs != rhs) ++probe_fail;
        }
      }
    }
  }
  rep.notes.push_back("non-strict boundary N=m(t-1)(k-1) probed " + std::to_string(probes) +
                      " times, recurrence fails in " + std::to_string(probe_fail));
  rep.notes.push_back("S(n<0,0)=1 and S(n<0,k>0)=0");
}

std::optional<RecursionRelation> synthesized_like(const RecursionRelation& printed, std::string& why) {
  try {
    const auto cs = analyze_structure(build_digraph(printed.spec()));
    return synthesize(cs, printed.metric(), printed.tracks_k());
  } catch (const std::exception& e) {
    why = e.what();
    return std::nullopt;
  }
}

void compare_printed(CheckReport& rep, const PrintedRelation& p) {
  std::string why;
  const auto synth = synthesized_like(p.relation, why);
  ++rep.cases_run;
  if (!synth) {
    rep.failures.push_back({{{"relation", p.name}}, p.relation.to_text(), "synthesis failed: " + why});
    return;
  }
  if (*synth != p.relation) {
    rep.failures.push_back({{{"relation", p.name}}, p.relation.to_text(), synth->to_text()});
    for (const auto& d : relation_diff(p.relation, *synth)) rep.notes.push_back(p.name + " " + d);
  }
}

void check_rr_exact(Context&, CheckReport& rep) {
  for (const auto& p : printed_relations()) {
    if (p.relation.tracks_k()) compare_printed(rep, p);
  }
}

void check_sums_exact(Context& ctx, CheckReport& rep) {
  for (const auto& p : printed_relations()) {
    if (p.relation.tracks_k()) continue;
    compare_printed(rep, p);
    // The printed form, evaluated, against oracle totals.
    const CombSpec spec = p.relation.spec();
    const int count = ctx.grid().max_n + 1;
    const auto values = evaluate_sequence(p.relation, count);
    const Triangle& tri = p.relation.metric() == Metric::Tiles ? ctx.tile(spec) : ctx.board(spec);
    long long first_bad = -1;
    for (int n = 0; n < count; ++n) {
      const BigInt truth = tri.row_sum(static_cast<std::size_t>(n));
      expect(rep, {{"relation", p.name}, {"n", n}}, truth, values[static_cast<std::size_t>(n)]);
      if (first_bad < 0 && truth != values[static_cast<std::size_t>(n)]) first_bad = n;
    }
    if (first_bad >= 0) {
      rep.notes.push_back(p.name + " as printed departs from the oracle totals from n=" +
                          std::to_string(first_bad));
    }
  }
}

void check_gf_42(Context& ctx, CheckReport& rep) {
  const CombSpec spec(4, 2);
  const IntPolynomial num({1, -1, 0, -1});
  const IntPolynomial den = IntPolynomial({1, -2}) * IntPolynomial({1, 0, -1}) * IntPolynomial({1, 0, 2, 1, 1});
  const int count = std::max(12, ctx.grid().max_n + 1);
  std::vector<BigInt> series;
  for (int n = 0; n < count; ++n) {
    BigInt acc = num.coefficient(n);
    for (int i = 1; i <= n; ++i) acc -= den.coefficient(i) * series[static_cast<std::size_t>(n - i)];
    series.push_back(acc);  // constant term of the denominator is 1
  }
  const int rows = std::min(count, kGridMaxN + 1);
  oracle::Limits limits = ctx.limits();
  const Triangle tile = oracle::build_triangle(spec, TriangleKind::TileIndexed, rows, limits);
  for (int n = 0; n < rows; ++n) {
    expect(rep, {{"n", n}}, series[static_cast<std::size_t>(n)], tile.row_sum(static_cast<std::size_t>(n)));
  }
}

void check_multinom(Context&, CheckReport& rep) {
  for (int N = 2; N <= 3; ++N) {
    std::vector<long long> j(static_cast<std::size_t>(N) + 1, 1);
    while (true) {
      const auto sides = multinomial_sides(j);
      expect(rep, {{"j", j}}, sides.lhs, sides.rhs);
      std::size_t i = 0;
      while (i < j.size() && j[i] == 5) j[i++] = 1;
      if (i == j.size()) break;
      ++j[i];
    }
  }
}

void check_sumcoeff(Context&, CheckReport& rep) {
  for (int t = 2; t <= 6; ++t) {
    BonacciTable table(t);
    for (long long n = -1; n <= 30; ++n) {
      expect(rep, {{"t", t}, {"n", n}}, table.number(n), table.poly(n).coefficient_sum());
    }
  }
}

void check_poly_coeff(Context& ctx, CheckReport& rep) {
  for (int t = 2; t <= ctx.grid().max_t; ++t) {
    BonacciTable table(t);
    for (int n = 0; n <= ctx.grid().max_n; ++n) {
      const auto counts = oracle::count_board_tilings(CombSpec(1, t), n, ctx.limits());
      for (int k = 0; k <= n; ++k) {
        expect(rep, {{"t", t}, {"n", n}, {"k", k}}, counts[static_cast<std::size_t>(k)],
               table.poly(n).coefficient(k));
      }
    }
  }
}

void check_tpoly(Context& ctx, CheckReport& rep) {
  for (const auto& spec : ctx.specs()) {
    const long long m = spec.m();
    const long long t = spec.t();
    const Triangle& tile = ctx.tile(spec);
    BonacciTable table(static_cast<int>(t));
    for (long long j = 0; j <= 7; ++j) {
      for (long long r = 0; r < m; ++r) {
        IntPolynomial prod = table.poly(j).pow(static_cast<unsigned>(m - r));
        if (r > 0) prod = prod * table.poly(j + 1).pow(static_cast<unsigned>(r));
        for (long long k = 0; k <= (m * j + r) / t + 1; ++k) {
          const long long n = m * j + r - (t - 1) * k;
          if (n < 0 || !in_rows(ctx, n)) continue;
          const auto params = with(spec_params(spec), {{"j", j}, {"r", r}, {"k", k}});
          expect(rep, params, prod.coefficient(k), tile.at(n, k));
          if (j <= 3) expect(rep, params, entry_via_poly(spec, j, r, k), tile.at(n, k));
        }
      }
    }
  }
}

void check_s_corollaries(Context& ctx, CheckReport& rep) {
  const int max_universe = std::min(ctx.grid().max_n, ctx.limits().max_subset_universe);
  for (const auto& spec : ctx.specs()) {
    const long long m = spec.m();
    const long long t = spec.t();
    const Triangle& tile = ctx.tile(spec);
    const Triangle& board = ctx.board(spec);
    for (int n = 0; n <= max_universe; ++n) {
      const auto& counts = ctx.subsets(spec, n);
      BigInt total = 0;
      for (int k = 0; k <= n; ++k) {
        const BigInt s = counts[static_cast<std::size_t>(k)];
        total += s;
        const auto params = with(spec_params(spec), {{"n", n}, {"k", k}});
        expect(rep, params, subset_count_via_poly(spec, n, k), s);
        const long long tile_n = n + (t - 1) * (m - k);
        if (n >= 1 && tile_n >= 0 && in_rows(ctx, tile_n)) expect(rep, params, tile.at(tile_n, k), s);
        const long long board_n = n + (t - 1) * m;
        if (in_rows(ctx, board_n)) expect(rep, params, board.at(board_n, k), s);
      }
      expect(rep, with(spec_params(spec), {{"n", n}}), subset_total_via_poly(spec, n), total);
    }
    // Antidiagonal sums count subsets of {1..n-(t-1)m}.
    for (long long n = 1; n <= ctx.grid().max_n; ++n) {
      const long long u = n - (t - 1) * m;
      if (u > max_universe) continue;
      BigInt total = 0;
      for (int k = 0; k <= std::max<long long>(u, 0); ++k) total += ctx.subset_count(spec, static_cast<int>(u), k);
      expect(rep, with(spec_params(spec), {{"antidiagonal", n}}), total, tile.antidiagonal_sum(n, t - 1));
    }
  }
}

void check_subset_bijection(Context& ctx, CheckReport& rep) {
  const int max_universe = std::min(ctx.grid().max_n, 14);
  rep.notes.push_back("universes n <= " + std::to_string(max_universe));
  for (const auto& spec : ctx.specs()) {
    for (int n = 0; n <= max_universe; ++n) {
      const int len = n + (spec.t() - 1) * spec.m();
      const auto board_counts = oracle::count_board_tilings(spec, len, ctx.limits());
      for (int k = 0; k <= n; ++k) {
        const auto subsets = oracle::enumerate_restricted_subsets(spec, n, k, ctx.limits());
        const auto params = with(spec_params(spec), {{"n", n}, {"k", k}});
        for (const auto& s : subsets) {
          bool ok = false;
          try {
            const oracle::Tiling tiling = oracle::subset_to_tiling(spec, s);
            ok = tiling.board_len() == len && tiling.comb_count() == k && oracle::tiling_to_subset(tiling) == s;
          } catch (const std::exception&) {
            ok = false;
          }
          expect_true(rep, with(params, {{"subset_size", s.size()}}), ok, "subset round trip");
        }
        const BigInt boards = k < static_cast<int>(board_counts.size()) ? board_counts[static_cast<std::size_t>(k)] : BigInt(0);
        expect(rep, params, boards, BigInt(subsets.size()));
      }
      for (const auto& tiling : oracle::enumerate_tilings(spec, len, ctx.limits())) {
        bool ok = false;
        try {
          ok = oracle::subset_to_tiling(spec, oracle::tiling_to_subset(tiling)) == tiling;
        } catch (const std::exception&) {
          ok = false;
        }
        expect_true(rep, with(spec_params(spec), {{"board", len}}), ok, "tiling round trip");
      }
    }
  }
}

void check_split_board(Context& ctx, CheckReport& rep) {
  const int max_len = std::min(ctx.grid().max_n, ctx.limits().max_board_cells);
  for (const auto& spec : ctx.specs()) {
    const oracle::Limits& limits = ctx.limits();
    const CombSpec omino(1, spec.t());
    for (int len = 0; len <= max_len; ++len) {
      const int j = len / spec.m();
      const int r = len % spec.m();
      const auto params = with(spec_params(spec), {{"board", len}});
      for (const auto& tiling : oracle::enumerate_tilings(spec, len, limits)) {
        bool ok = false;
        try {
          const auto parts = oracle::split_board(tiling);
          int combs = 0;
          bool shapes = parts.size() == static_cast<std::size_t>(spec.m());
          for (std::size_t i = 0; shapes && i < parts.size(); ++i) {
            shapes = parts[i].board_len() == (static_cast<int>(i) < r ? j + 1 : j);
            combs += parts[i].comb_count();
          }
          ok = shapes && combs == tiling.comb_count() && oracle::join_boards(spec, parts) == tiling;
        } catch (const std::exception&) {
          ok = false;
        }
        expect_true(rep, params, ok, "split round trip");
      }
      // Convolution of sub-board counts.
      const auto longer = oracle::count_board_tilings(omino, j + 1, limits);
      const auto shorter = oracle::count_board_tilings(omino, j, limits);
      std::vector<BigInt> conv{1};
      auto fold = [&](const std::vector<BigInt>& part) {
        std::vector<BigInt> next(conv.size() + part.size() - 1, 0);
        for (std::size_t a = 0; a < conv.size(); ++a) {
          for (std::size_t b = 0; b < part.size(); ++b) next[a + b] += conv[a] * part[b];
        }
        conv = std::move(next);
      };
      for (int i = 0; i < r; ++i) fold(longer);
      for (int i = r; i < spec.m(); ++i) fold(shorter);
      const auto direct = oracle::count_board_tilings(spec, len, limits);
      const std::size_t width = std::max(conv.size(), direct.size());
      for (std::size_t k = 0; k < width; ++k) {
        const BigInt a = k < conv.size() ? conv[k] : BigInt(0);
        const BigInt b = k < direct.size() ? direct[k] : BigInt(0);
        expect(rep, with(params, {{"k", static_cast<long long>(k)}}), a, b);
      }
    }
  }
}

void check_triangles_equal(CheckReport& rep, const nlohmann::json& params, const Triangle& expected,
                           const Triangle& actual) {
  for (std::size_t n = 0; n < expected.row_count(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      expect(rep, with(params, {{"n", static_cast<long long>(n)}, {"k", static_cast<long long>(k)}}),
             expected.row(n)[k], actual.at(static_cast<long long>(n), static_cast<long long>(k)));
    }
  }
}

void check_recursion_eval(Context& ctx, CheckReport& rep) {
  const int rows = ctx.grid().max_n + 1;
  for (const auto& spec : ctx.specs()) {
    std::optional<CycleStructure> cs;
    try {
      cs = analyze_structure(build_digraph(spec));
    } catch (const std::exception& e) {
      rep.notes.push_back(spec.label() + " skipped: " + e.what());
      continue;
    }
    if (!synthesis_supported(*cs)) {
      rep.notes.push_back(spec.label() + " skipped: outside both synthesis theorems");
      continue;
    }
    for (Metric metric : {Metric::Tiles, Metric::Cells}) {
      const auto rel = synthesize(*cs, metric, true);
      const Triangle& truth = metric == Metric::Tiles ? ctx.tile(spec) : ctx.board(spec);
      auto params = spec_params(spec);
      params["metric"] = to_string(metric);
      const Triangle eval = evaluate_triangle(rel, rows);
      check_triangles_equal(rep, params, truth, eval);
      const auto sums = evaluate_sequence(project_row_sum(rel), rows);
      const auto direct = evaluate_sequence(synthesize(*cs, metric, false), rows);
      for (int n = 0; n < rows; ++n) {
        expect(rep, with(params, {{"row_sum", n}}), eval.row_sum(static_cast<std::size_t>(n)),
               sums[static_cast<std::size_t>(n)]);
        expect(rep, with(params, {{"row_sum", n}}), sums[static_cast<std::size_t>(n)],
               direct[static_cast<std::size_t>(n)]);
      }
    }
  }
}

void check_walk_count(Context& ctx, CheckReport& rep) {
  const int rows = ctx.grid().max_n + 1;
  for (const auto& spec : ctx.specs()) {
    const auto dg = build_digraph(spec);
    for (Metric metric : {Metric::Tiles, Metric::Cells}) {
      auto params = spec_params(spec);
      params["metric"] = to_string(metric);
      const Triangle& truth = metric == Metric::Tiles ? ctx.tile(spec) : ctx.board(spec);
      check_triangles_equal(rep, params, truth, walk_triangle(dg, metric, rows));
      const auto seq = walk_sequence(dg, metric, rows);
      for (int n = 0; n < rows; ++n) {
        expect(rep, with(params, {{"row_sum", n}}), truth.row_sum(static_cast<std::size_t>(n)),
               seq[static_cast<std::size_t>(n)]);
      }
    }
  }
}

void check_metatiles(Context& ctx, CheckReport& rep) {
  const int max_tiles = std::min(ctx.grid().max_n, 10);
  for (const auto& spec : ctx.specs()) {
    const auto dg = build_digraph(spec);
    const auto params = spec_params(spec);
    for (const auto& node : dg.nodes()) {
      const bool shape = node == "0" || (node.front() == '0' && node.back() == '1' &&
                                         node.size() <= static_cast<std::size_t>((spec.t() - 1) * spec.m()));
      expect_true(rep, with(params, {}), shape, "node " + node + " well formed");
    }
    const auto labels = enumerate_metatiles(dg, max_tiles);
    std::vector<BigInt> by_len(static_cast<std::size_t>(max_tiles) + 1, 0);
    for (const auto& l : labels) {
      by_len[l.size()] += 1;
      bool ok = is_metatile(spec, l);
      if (ok) {
        try {
          ok = replay_labels(spec, l).tile_count() == static_cast<int>(l.size());
        } catch (const std::exception&) {
          ok = false;
        }
      }
      expect_true(rep, params, ok, "metatile " + l + " replays");
    }
    const auto counts = metatile_counts(dg, max_tiles);
    for (int n = 0; n <= max_tiles; ++n) {
      expect(rep, with(params, {{"tiles", n}}), counts[static_cast<std::size_t>(n)],
             by_len[static_cast<std::size_t>(n)]);
    }
    const bool finite_expected = spec.m() == 1 || (spec.m() == 2 && spec.t() == 2);
    expect_true(rep, params, has_finite_metatiles(dg) == finite_expected,
                finite_expected ? "finitely many metatiles" : "infinitely many metatiles");
  }
}

using CheckFn = void (*)(Context&, CheckReport&);

struct Entry {
  const char* name;
  CheckFn fn;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"ch_eq_chb", check_ch_eq_chb},
      {"adiag_sum", check_adiag_sum},
      {"col0", check_col0},
      {"diag", check_diag},
      {"col1", check_col1},
      {"zeros", check_zeros},
      {"vert_boundary", check_vert_boundary},
      {"ray_boundary", check_ray_boundary},
      {"one_square_block", check_one_square_block},
      {"two_square_block", check_two_square_block},
      {"composition", check_composition},
      {"pascal_region", check_pascal_region},
      {"subset_recurrence", check_subset_recurrence},
      {"rr_exact", check_rr_exact},
      {"sums_exact", check_sums_exact},
      {"gf_42", check_gf_42},
      {"multinom", check_multinom},
      {"sumcoeff", check_sumcoeff},
      {"poly_coeff", check_poly_coeff},
      {"tpoly", check_tpoly},
      {"s_corollaries", check_s_corollaries},
      {"subset_bijection", check_subset_bijection},
      {"split_board", check_split_board},
      {"recursion_eval", check_recursion_eval},
      {"walk_count", check_walk_count},
      {"metatiles", check_metatiles},
  };
  return entries;
}

CheckReport run_entry(const Entry& entry, Context& ctx) {
  CheckReport rep;
  rep.name = entry.name;
  rep.grid = ctx.grid();
  entry.fn(ctx, rep);
  return rep;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& e : registry()) out.emplace_back(e.name);
  return out;
}

CheckReport run_check(const std::string& name, const Grid& grid, const SuiteOptions& options) {
  for (const auto& e : registry()) {
    if (name == e.name) {
      Context ctx(grid, options);
      return run_entry(e, ctx);
    }
  }
  throw std::invalid_argument("unknown check: " + name);
}

std::vector<CheckReport> run_suite(const Grid& grid, const SuiteOptions& options) {
  Context ctx(grid, options);
  std::vector<CheckReport> out;
  for (const auto& e : registry()) out.push_back(run_entry(e, ctx));
  return out;
}

std::vector<CheckReport> run_suite(Profile profile, const SuiteOptions& options) {
  return run_suite(profile_grid(profile), options);
}

}  // namespace combtri

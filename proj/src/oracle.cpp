#include "combtri/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace combtri::oracle {

namespace {

void require_limit(bool ok, const std::string& what) {
  if (!ok) throw LimitExceeded(what);
}

// Occupancy of a board during a left-to-right fill. Cell 0 is unused.
class Board {
 public:
  explicit Board(int cells) : occ_(static_cast<std::size_t>(cells) + 2, 0) {}

  int size() const { return static_cast<int>(occ_.size()) - 2; }
  bool free(int cell) const { return cell <= size() && !occ_[static_cast<std::size_t>(cell)]; }
  void set(int cell, bool v) { occ_[static_cast<std::size_t>(cell)] = v ? 1 : 0; }

  int next_free(int from) const {
    while (from <= size() && occ_[static_cast<std::size_t>(from)]) ++from;
    return from;
  }

  bool comb_fits(const CombSpec& spec, int pos) const {
    for (int i = 0; i < spec.t(); ++i) {
      if (!free(pos + i * spec.m())) return false;
    }
    return true;
  }

  void put_comb(const CombSpec& spec, int pos, bool v) {
    for (int i = 0; i < spec.t(); ++i) set(pos + i * spec.m(), v);
  }

 private:
  std::vector<char> occ_;
};

void enumerate_rec(const CombSpec& spec, Board& board, int first_free,
                   std::vector<Placement>& current, std::vector<Tiling>& out) {
  if (first_free > board.size()) {
    out.emplace_back(spec, board.size(), current);
    return;
  }
  board.set(first_free, true);
  current.push_back({TileKind::Square, first_free});
  enumerate_rec(spec, board, board.next_free(first_free + 1), current, out);
  current.pop_back();
  board.set(first_free, false);

  if (board.comb_fits(spec, first_free)) {
    board.put_comb(spec, first_free, true);
    current.push_back({TileKind::Comb, first_free});
    enumerate_rec(spec, board, board.next_free(first_free + 1), current, out);
    current.pop_back();
    board.put_comb(spec, first_free, false);
  }
}

void count_rec(const CombSpec& spec, Board& board, int first_free, int combs,
               std::vector<std::uint64_t>& counts) {
  if (first_free > board.size()) {
    ++counts[static_cast<std::size_t>(combs)];
    return;
  }
  board.set(first_free, true);
  count_rec(spec, board, board.next_free(first_free + 1), combs, counts);
  board.set(first_free, false);
  if (board.comb_fits(spec, first_free)) {
    board.put_comb(spec, first_free, true);
    count_rec(spec, board, board.next_free(first_free + 1), combs + 1, counts);
    board.put_comb(spec, first_free, false);
  }
}

std::uint64_t quota_rec(const CombSpec& spec, Board& board, int first_free, int squares_left,
                        int combs_left) {
  if (first_free > board.size()) return 1;
  std::uint64_t total = 0;
  if (squares_left > 0) {
    board.set(first_free, true);
    total += quota_rec(spec, board, board.next_free(first_free + 1), squares_left - 1,
                       combs_left);
    board.set(first_free, false);
  }
  if (combs_left > 0 && board.comb_fits(spec, first_free)) {
    board.put_comb(spec, first_free, true);
    total += quota_rec(spec, board, board.next_free(first_free + 1), squares_left,
                       combs_left - 1);
    board.put_comb(spec, first_free, false);
  }
  return total;
}

// Lays tiles down on an unbounded board, recording (tiles, combs) every time
// the occupied cells form a gapless prefix.
struct TileCountWalk {
  const CombSpec& spec;
  int max_tiles;
  Board board;
  int occupied = 0;
  int last_occupied = 0;
  std::vector<std::vector<std::uint64_t>> counts;

  TileCountWalk(const CombSpec& s, int tiles)
      : spec(s),
        max_tiles(tiles),
        board(tiles * s.t() + s.extent() + 1),
        counts(static_cast<std::size_t>(tiles) + 1) {
    for (int n = 0; n <= tiles; ++n) counts[static_cast<std::size_t>(n)].assign(n + 1, 0);
  }

  void run(int first_free, int tiles, int combs) {
    if (occupied == last_occupied) {
      ++counts[static_cast<std::size_t>(tiles)][static_cast<std::size_t>(combs)];
    }
    if (tiles == max_tiles) return;
    // A tile fills at most t of the holes left of the last occupied cell.
    if (last_occupied - occupied > spec.t() * (max_tiles - tiles)) return;

    const int saved_last = last_occupied;
    board.set(first_free, true);
    ++occupied;
    last_occupied = std::max(last_occupied, first_free);
    run(board.next_free(first_free + 1), tiles + 1, combs);
    board.set(first_free, false);
    --occupied;
    last_occupied = saved_last;

    if (board.comb_fits(spec, first_free)) {
      board.put_comb(spec, first_free, true);
      occupied += spec.t();
      last_occupied = std::max(last_occupied, first_free + (spec.t() - 1) * spec.m());
      run(board.next_free(first_free + 1), tiles + 1, combs + 1);
      board.put_comb(spec, first_free, false);
      occupied -= spec.t();
      last_occupied = saved_last;
    }
  }
};

bool differ_by_forbidden(const CombSpec& spec, int a, int b) {
  const int d = a > b ? a - b : b - a;
  return d % spec.m() == 0 && d / spec.m() >= 1 && d / spec.m() <= spec.t() - 1;
}

template <typename Visit>
void subsets_rec(const CombSpec& spec, int n, int k, int next, std::vector<int>& current,
                 Visit&& visit) {
  if (static_cast<int>(current.size()) == k) {
    visit(current);
    return;
  }
  const int needed = k - static_cast<int>(current.size());
  for (int x = next; x <= n - needed + 1; ++x) {
    bool ok = true;
    for (int y : current) {
      if (differ_by_forbidden(spec, x, y)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    current.push_back(x);
    subsets_rec(spec, n, k, x + 1, current, visit);
    current.pop_back();
  }
}

}  // namespace

Tiling::Tiling(CombSpec spec, int board_len, std::vector<Placement> placements)
    : spec_(spec), board_len_(board_len), placements_(std::move(placements)) {
  if (board_len < 0) throw std::invalid_argument("board length must be nonnegative");
  std::sort(placements_.begin(), placements_.end(),
            [](const Placement& a, const Placement& b) { return a.leftmost < b.leftmost; });
  std::vector<char> covered(static_cast<std::size_t>(board_len) + 1, 0);
  auto cover = [&](int cell) {
    if (cell < 1 || cell > board_len) {
      throw std::invalid_argument("tile runs off the board at cell " + std::to_string(cell));
    }
    if (covered[static_cast<std::size_t>(cell)]) {
      throw std::invalid_argument("tiles overlap at cell " + std::to_string(cell));
    }
    covered[static_cast<std::size_t>(cell)] = 1;
  };
  for (const auto& p : placements_) {
    if (p.leftmost < 1) throw std::invalid_argument("cell indices are 1-based");
    if (p.kind == TileKind::Square) {
      cover(p.leftmost);
    } else {
      for (int c : comb_cells(spec_, p.leftmost)) cover(c);
    }
  }
  for (int c = 1; c <= board_len; ++c) {
    if (!covered[static_cast<std::size_t>(c)]) {
      throw std::invalid_argument("cell " + std::to_string(c) + " left uncovered");
    }
  }
}

int Tiling::comb_count() const noexcept {
  return static_cast<int>(std::count_if(placements_.begin(), placements_.end(),
                                        [](const Placement& p) { return p.kind == TileKind::Comb; }));
}

nlohmann::json Tiling::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& p : placements_) {
    list.push_back({{"tile", p.kind == TileKind::Square ? "S" : "C"}, {"cell", p.leftmost}});
  }
  return {{"m", spec_.m()}, {"t", spec_.t()}, {"board_len", board_len_}, {"placements", list}};
}

RestrictedSubset::RestrictedSubset(const CombSpec& spec, int n, std::vector<int> members)
    : n_(n), members_(std::move(members)) {
  if (n < 0) throw std::invalid_argument("subset universe size must be nonnegative");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 1 || members_[i] > n) {
      throw std::invalid_argument("subset member outside 1.." + std::to_string(n));
    }
    if (i > 0 && members_[i] <= members_[i - 1]) {
      throw std::invalid_argument("subset members must be strictly increasing");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (differ_by_forbidden(spec, members_[i], members_[j])) {
        throw std::invalid_argument("members " + std::to_string(members_[j]) + " and " +
                                    std::to_string(members_[i]) +
                                    " differ by a forbidden multiple of m");
      }
    }
  }
}

std::vector<Tiling> enumerate_tilings(const CombSpec& spec, int board_len, const Limits& limits) {
  if (board_len < 0) throw std::invalid_argument("board length must be nonnegative");
  require_limit(board_len <= limits.max_board_cells,
                "board length " + std::to_string(board_len) + " exceeds enumeration limit " +
                    std::to_string(limits.max_board_cells));
  std::vector<Tiling> out;
  Board board(board_len);
  std::vector<Placement> current;
  enumerate_rec(spec, board, 1, current, out);
  return out;
}

std::vector<BigInt> count_board_tilings(const CombSpec& spec, int board_len,
                                        const Limits& limits) {
  if (board_len < 0) throw std::invalid_argument("board length must be nonnegative");
  require_limit(board_len <= limits.max_count_cells,
                "board length " + std::to_string(board_len) + " exceeds counting limit " +
                    std::to_string(limits.max_count_cells));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(board_len) + 1, 0);
  Board board(board_len);
  count_rec(spec, board, 1, 0, counts);
  return {counts.begin(), counts.end()};
}

BigInt count_tilings_with(const CombSpec& spec, int squares, int combs) {
  if (squares < 0 || combs < 0) return 0;
  Board board(squares + combs * spec.t());
  return quota_rec(spec, board, 1, squares, combs);
}

Triangle build_triangle(const CombSpec& spec, TriangleKind kind, int rows, const Limits& limits) {
  if (rows < 0) throw std::invalid_argument("row count must be nonnegative");
  Triangle::Rows out(static_cast<std::size_t>(rows));
  if (kind == TriangleKind::BoardIndexed) {
    require_limit(rows - 1 <= limits.max_count_cells,
                  "board-indexed rows exceed counting limit " +
                      std::to_string(limits.max_count_cells));
    for (int n = 0; n < rows; ++n) out[static_cast<std::size_t>(n)] = count_board_tilings(spec, n, limits);
    return Triangle(spec, kind, std::move(out));
  }

  require_limit(rows <= limits.max_tile_rows,
                "tile-indexed rows exceed limit " + std::to_string(limits.max_tile_rows));
  if (rows == 0) return Triangle(spec, kind, std::move(out));
  TileCountWalk walk(spec, rows - 1);
  walk.run(1, 0, 0);
  for (int n = 0; n < rows; ++n) {
    auto& row = out[static_cast<std::size_t>(n)];
    for (int k = 0; k <= n; ++k) {
      const BigInt direct = walk.counts[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
      // The k combs and n-k squares fill a board of n + (t-1)k cells.
      const auto board = tile_to_board_index(spec, n, k);
      const BigInt via_board = count_tilings_with(spec, static_cast<int>(board.n - spec.t() * k),
                                                  static_cast<int>(k));
      if (direct != via_board) {
        throw std::logic_error("tile-indexed entry (" + std::to_string(n) + "," +
                               std::to_string(k) + ") disagrees between enumeration routes");
      }
      row.push_back(direct);
    }
  }
  return Triangle(spec, kind, std::move(out));
}

std::vector<RestrictedSubset> enumerate_restricted_subsets(const CombSpec& spec, int n, int k,
                                                           const Limits& limits) {
  if (n < 0 || k < 0) throw std::invalid_argument("subset parameters must be nonnegative");
  require_limit(n <= limits.max_subset_universe,
                "subset universe " + std::to_string(n) + " exceeds limit " +
                    std::to_string(limits.max_subset_universe));
  std::vector<RestrictedSubset> out;
  std::vector<int> current;
  subsets_rec(spec, n, k, 1, current,
              [&](const std::vector<int>& members) { out.emplace_back(spec, n, members); });
  return out;
}

BigInt count_restricted_subsets(const CombSpec& spec, int n, int k, const Limits& limits) {
  if (k < 0) return 0;
  if (n < 0) return k == 0 ? 1 : 0;
  require_limit(n <= limits.max_subset_universe,
                "subset universe " + std::to_string(n) + " exceeds limit " +
                    std::to_string(limits.max_subset_universe));
  std::uint64_t count = 0;
  std::vector<int> current;
  subsets_rec(spec, n, k, 1, current, [&](const std::vector<int>&) { ++count; });
  return count;
}

Tiling subset_to_tiling(const CombSpec& spec, const RestrictedSubset& subset) {
  const int board_len = subset.universe() + (spec.t() - 1) * spec.m();
  std::vector<char> covered(static_cast<std::size_t>(board_len) + 1, 0);
  std::vector<Placement> placements;
  for (int i : subset.members()) {
    for (int c : comb_cells(spec, i)) {
      if (covered[static_cast<std::size_t>(c)]) {
        throw std::logic_error("combs for subset members overlap at cell " + std::to_string(c));
      }
      covered[static_cast<std::size_t>(c)] = 1;
    }
    placements.push_back({TileKind::Comb, i});
  }
  for (int c = 1; c <= board_len; ++c) {
    if (!covered[static_cast<std::size_t>(c)]) placements.push_back({TileKind::Square, c});
  }
  return Tiling(spec, board_len, std::move(placements));
}

RestrictedSubset tiling_to_subset(const Tiling& tiling) {
  const auto& spec = tiling.spec();
  const int n = tiling.board_len() - (spec.t() - 1) * spec.m();
  if (n < 0) throw std::invalid_argument("board too short to come from a subset");
  std::vector<int> members;
  for (const auto& p : tiling.placements()) {
    if (p.kind == TileKind::Comb) members.push_back(p.leftmost);
  }
  return RestrictedSubset(spec, n, std::move(members));
}

std::vector<Tiling> split_board(const Tiling& tiling) {
  const auto& spec = tiling.spec();
  const int m = spec.m();
  const int j = tiling.board_len() / m;
  const int r = tiling.board_len() % m;
  std::vector<std::vector<Placement>> parts(static_cast<std::size_t>(m));
  for (const auto& p : tiling.placements()) {
    const int residue = (p.leftmost - 1) % m;
    const int position = (p.leftmost - 1) / m + 1;
    parts[static_cast<std::size_t>(residue)].push_back({p.kind, position});
  }
  const CombSpec omino(1, spec.t());
  std::vector<Tiling> out;
  out.reserve(parts.size());
  for (int c = 0; c < m; ++c) {
    out.emplace_back(omino, c < r ? j + 1 : j, std::move(parts[static_cast<std::size_t>(c)]));
  }
  return out;
}

Tiling join_boards(const CombSpec& spec, const std::vector<Tiling>& parts) {
  const int m = spec.m();
  if (static_cast<int>(parts.size()) != m) {
    throw std::invalid_argument("expected " + std::to_string(m) + " sub-boards");
  }
  int total = 0;
  for (const auto& part : parts) {
    if (part.spec() != CombSpec(1, spec.t())) {
      throw std::invalid_argument("sub-boards must be square/t-omino tilings");
    }
    total += part.board_len();
  }
  const int j = total / m;
  const int r = total % m;
  std::vector<Placement> placements;
  for (int c = 0; c < m; ++c) {
    const auto& part = parts[static_cast<std::size_t>(c)];
    if (part.board_len() != (c < r ? j + 1 : j)) {
      throw std::invalid_argument("sub-board lengths do not form an (mj+r) split");
    }
    for (const auto& p : part.placements()) {
      placements.push_back({p.kind, (p.leftmost - 1) * m + c + 1});
    }
  }
  return Tiling(spec, total, std::move(placements));
}

}  // namespace combtri::oracle

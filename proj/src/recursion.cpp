#include "combtri/recursion.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace combtri {

std::string_view to_string(Metric metric) { return metric == Metric::Tiles ? "tiles" : "cells"; }

Metric parse_metric(std::string_view text) {
  if (text == "tiles") return Metric::Tiles;
  if (text == "cells") return Metric::Cells;
  throw std::invalid_argument("unknown metric: " + std::string(text));
}

namespace {

using Key = std::pair<long long, long long>;  // k component is -1 when absent

long long key_k(const std::optional<long long>& k) { return k ? *k : -1; }
std::optional<long long> from_key_k(long long k) {
  return k < 0 ? std::nullopt : std::optional<long long>(k);
}

}  // namespace

RecursionRelation::RecursionRelation(CombSpec spec, Metric metric, bool tracks_k,
                                     std::vector<DeltaTerm> deltas, std::vector<ShiftTerm> shifts)
    : spec_(spec), metric_(metric), tracks_k_(tracks_k) {
  std::map<Key, long long> d;
  std::map<Key, long long> s;
  for (const auto& term : deltas) {
    if (term.k0.has_value() != tracks_k) throw std::invalid_argument("delta term k mismatch");
    d[{term.n0, key_k(term.k0)}] += term.coeff;
  }
  for (const auto& term : shifts) {
    if (term.dk.has_value() != tracks_k) throw std::invalid_argument("shift term k mismatch");
    if (term.dn <= 0) throw std::invalid_argument("shift terms need dn > 0");
    if (term.dk && *term.dk < 0) throw std::invalid_argument("shift terms need dk >= 0");
    s[{term.dn, key_k(term.dk)}] += term.coeff;
  }
  for (const auto& [key, c] : d) {
    if (c != 0) deltas_.push_back({key.first, from_key_k(key.second), c});
  }
  for (const auto& [key, c] : s) {
    if (c != 0) shifts_.push_back({key.first, from_key_k(key.second), c});
  }
}

namespace {

void append_term(std::ostringstream& out, bool& first, long long coeff, const std::string& body) {
  const long long mag = coeff < 0 ? -coeff : coeff;
  if (first) {
    if (coeff < 0) out << '-';
  } else {
    out << (coeff < 0 ? " - " : " + ");
  }
  first = false;
  if (mag != 1) out << mag;
  out << body;
}

std::string offset(char var, long long d) {
  if (d == 0) return std::string(1, var);
  return std::string(1, var) + "-" + std::to_string(d);
}

}  // namespace

std::string RecursionRelation::to_text() const {
  const char name = metric_ == Metric::Tiles ? 'B' : 'A';
  std::ostringstream out;
  out << name << (tracks_k_ ? "(n,k)" : "(n)") << " =";
  std::ostringstream rhs;
  bool first = true;
  for (const auto& term : deltas_) {
    std::string body = "δ(" + std::to_string(term.n0);
    if (term.k0) body += "," + std::to_string(*term.k0);
    append_term(rhs, first, term.coeff, body + ")");
  }
  for (const auto& term : shifts_) {
    std::string body = std::string(1, name) + "(" + offset('n', term.dn);
    if (term.dk) body += "," + offset('k', *term.dk);
    append_term(rhs, first, term.coeff, body + ")");
  }
  out << ' ' << (first ? "0" : rhs.str());
  return out.str();
}

nlohmann::json RecursionRelation::to_json() const {
  nlohmann::json deltas = nlohmann::json::array();
  for (const auto& term : deltas_) {
    nlohmann::json j = {{"n", term.n0}, {"coeff", term.coeff}};
    if (term.k0) j["k"] = *term.k0;
    deltas.push_back(j);
  }
  nlohmann::json shifts = nlohmann::json::array();
  for (const auto& term : shifts_) {
    nlohmann::json j = {{"dn", term.dn}, {"coeff", term.coeff}};
    if (term.dk) j["dk"] = *term.dk;
    shifts.push_back(j);
  }
  return {{"m", spec_.m()},      {"t", spec_.t()},       {"metric", to_string(metric_)},
          {"tracks_k", tracks_k_}, {"deltas", deltas}, {"shifts", shifts}};
}

namespace {

struct Len {
  long long L;
  long long K;
};

Len length_of(const Cycle& c, Metric metric, int t) {
  return {metric == Metric::Cells ? c.L + (t - 1) * c.K : c.L, c.K};
}

Len operator+(Len a, Len b) { return {a.L + b.L, a.K + b.K}; }

// Collects (n,k) terms; k dropped later when not tracked.
struct Builder {
  std::vector<DeltaTerm> deltas;
  std::vector<ShiftTerm> shifts;
  void delta(Len at, long long c) { deltas.push_back({at.L, at.K, c}); }
  void shift(Len by, long long c) { shifts.push_back({by.L, by.K, c}); }
};

const Cycle* errant_cycle(const CycleStructure& cs) {
  for (const auto& c : cs.inner_cycles) {
    if (c.arcs.size() == 1 && c.arcs.front() == cs.errant->arc) return &c;
  }
  return nullptr;
}

bool pcn_hypothesis(const CycleStructure& cs) {
  if (!cs.errant || !cs.pseudo_common || cs.inner_cycles.size() != 3) return false;
  if (!errant_cycle(cs)) return false;
  int plain = 0;
  int non_plain = 0;
  for (const auto& c : cs.inner_cycles) {
    if (c.arcs.size() == 1 && c.arcs.front() == cs.errant->arc) continue;
    (c.plain ? plain : non_plain)++;
  }
  if (plain != 1 || non_plain != 1) return false;
  return std::all_of(cs.outer_cycles.begin(), cs.outer_cycles.end(),
                     [](const Cycle& c) { return c.plain; });
}

}  // namespace

bool synthesis_supported(const CycleStructure& structure) {
  return !structure.errant || pcn_hypothesis(structure);
}

RecursionRelation synthesize(const CycleStructure& cs, Metric metric, bool tracks_k) {
  const int t = cs.spec.t();
  Builder b;
  b.delta({0, 0}, 1);
  if (!cs.errant) {
    std::vector<Len> inner;
    for (const auto& c : cs.inner_cycles) inner.push_back(length_of(c, metric, t));
    for (Len r : inner) {
      b.shift(r, 1);
      b.delta(r, -1);
    }
    for (const auto& c : cs.outer_cycles) {
      const Len o = length_of(c, metric, t);
      b.shift(o, 1);
      for (Len r : inner) b.shift(o + r, -1);
    }
    for (const auto& c : cs.common_circuits) b.shift(length_of(c, metric, t), 1);
  } else {
    if (!pcn_hypothesis(cs)) {
      throw UnsupportedStructure("errant-loop digraph for " + cs.spec.label() +
                                 " lies outside the three-inner-cycle pattern");
    }
    const Cycle* loop = errant_cycle(cs);
    const Cycle* plain = nullptr;
    const Cycle* non_plain = nullptr;
    for (const auto& c : cs.inner_cycles) {
      if (&c == loop) continue;
      (c.plain ? plain : non_plain) = &c;
    }
    const Len l0 = length_of(*loop, metric, t);
    const Len l1 = length_of(*plain, metric, t);
    const Len l2 = length_of(*non_plain, metric, t);
    for (Len r : {l0, l1, l2}) {
      b.shift(r, 1);
      b.delta(r, -1);
    }
    b.delta(l0 + l1, 1);
    b.shift(l0 + l1, -1);
    for (const auto& c : cs.outer_cycles) {
      const Len o = length_of(c, metric, t);
      b.shift(o, 1);
      b.shift(o + l0 + l1, 1);
      for (Len r : {l0, l1, l2}) b.shift(o + r, -1);
    }
    for (const auto& c : cs.common_circuits) {
      const Len pc = length_of(c, metric, t);
      b.shift(pc, 1);
      if (c.plain) b.shift(pc + l0, -1);
    }
  }
  if (!tracks_k) {
    for (auto& d : b.deltas) d.k0.reset();
    for (auto& s : b.shifts) s.dk.reset();
  }
  return RecursionRelation(cs.spec, metric, tracks_k, std::move(b.deltas), std::move(b.shifts));
}

RecursionRelation project_row_sum(const RecursionRelation& rel) {
  if (!rel.tracks_k()) throw std::invalid_argument("relation is already a row-sum relation");
  std::vector<DeltaTerm> deltas = rel.deltas();
  std::vector<ShiftTerm> shifts = rel.shifts();
  for (auto& d : deltas) d.k0.reset();
  for (auto& s : shifts) s.dk.reset();
  return RecursionRelation(rel.spec(), rel.metric(), false, std::move(deltas), std::move(shifts));
}

Triangle::Rows evaluate_rows(const RecursionRelation& rel, int rows) {
  if (!rel.tracks_k()) throw std::invalid_argument("evaluate_rows needs a k-tracking relation");
  if (rows < 0) throw std::invalid_argument("row count must be nonnegative");
  Triangle::Rows out(static_cast<std::size_t>(rows));
  auto get = [&](long long n, long long k) -> BigInt {
    if (n < 0 || k < 0 || k > n) return 0;
    return out[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  };
  for (long long n = 0; n < rows; ++n) {
    auto& row = out[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& d : rel.deltas()) {
      if (d.n0 == n && *d.k0 >= 0 && *d.k0 <= n) row[static_cast<std::size_t>(*d.k0)] += d.coeff;
    }
    for (long long k = 0; k <= n; ++k) {
      BigInt acc = 0;
      for (const auto& s : rel.shifts()) acc += s.coeff * get(n - s.dn, k - *s.dk);
      row[static_cast<std::size_t>(k)] += acc;
    }
  }
  return out;
}

Triangle evaluate_triangle(const RecursionRelation& rel, int rows) {
  const TriangleKind kind =
      rel.metric() == Metric::Tiles ? TriangleKind::TileIndexed : TriangleKind::BoardIndexed;
  return Triangle(rel.spec(), kind, evaluate_rows(rel, rows));
}

std::vector<BigInt> evaluate_sequence(const RecursionRelation& rel, int count) {
  if (rel.tracks_k()) throw std::invalid_argument("evaluate_sequence needs a relation without k");
  if (count < 0) throw std::invalid_argument("term count must be nonnegative");
  std::vector<BigInt> out;
  for (long long n = 0; n < count; ++n) {
    BigInt acc = 0;
    for (const auto& d : rel.deltas()) {
      if (d.n0 == n) acc += d.coeff;
    }
    for (const auto& s : rel.shifts()) {
      if (n - s.dn >= 0) acc += s.coeff * out[static_cast<std::size_t>(n - s.dn)];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

Triangle walk_triangle(const MetatileDigraph& dg, Metric metric, int rows) {
  if (rows < 0) throw std::invalid_argument("row count must be nonnegative");
  const std::size_t nodes = dg.node_count();
  const std::size_t R = static_cast<std::size_t>(rows);
  // ways[w][node][k]: walks from 0 of weight w ending at node with k combs.
  // k never exceeds w.
  std::vector<std::vector<std::vector<BigInt>>> ways(R);
  for (std::size_t w = 0; w < R; ++w) ways[w].assign(nodes, std::vector<BigInt>(w + 1, 0));
  if (rows > 0) ways[0][0][0] = 1;
  for (std::size_t w = 0; w < R; ++w) {
    for (const Arc& arc : dg.arcs()) {
      const std::size_t step =
          metric == Metric::Tiles ? 1 : static_cast<std::size_t>(arc.cell_weight);
      if (w + step >= R) continue;
      const auto& src = ways[w][static_cast<std::size_t>(arc.from)];
      auto& dst = ways[w + step][static_cast<std::size_t>(arc.to)];
      for (std::size_t k = 0; k < src.size(); ++k) {
        if (src[k] != 0) dst[k + static_cast<std::size_t>(arc.comb_weight)] += src[k];
      }
    }
  }
  Triangle::Rows out(R);
  for (std::size_t n = 0; n < R; ++n) {
    out[n].assign(ways[n][0].begin(), ways[n][0].begin() + static_cast<long>(n) + 1);
  }
  const TriangleKind kind =
      metric == Metric::Tiles ? TriangleKind::TileIndexed : TriangleKind::BoardIndexed;
  return Triangle(dg.spec(), kind, std::move(out));
}

std::vector<BigInt> walk_sequence(const MetatileDigraph& dg, Metric metric, int count) {
  if (count < 0) throw std::invalid_argument("term count must be nonnegative");
  const std::size_t nodes = dg.node_count();
  const std::size_t N = static_cast<std::size_t>(count);
  std::vector<std::vector<BigInt>> ways(N, std::vector<BigInt>(nodes, 0));
  if (count > 0) ways[0][0] = 1;
  for (std::size_t w = 0; w < N; ++w) {
    for (const Arc& arc : dg.arcs()) {
      const std::size_t step =
          metric == Metric::Tiles ? 1 : static_cast<std::size_t>(arc.cell_weight);
      if (w + step >= N) continue;
      const BigInt& src = ways[w][static_cast<std::size_t>(arc.from)];
      if (src != 0) ways[w + step][static_cast<std::size_t>(arc.to)] += src;
    }
  }
  std::vector<BigInt> out;
  for (std::size_t n = 0; n < N; ++n) out.push_back(ways[n][0]);
  return out;
}

MultinomialSides multinomial_sides(const std::vector<long long>& j) {
  if (j.size() < 3) throw std::invalid_argument("multinomial lemma needs j_0..j_N with N >= 2");
  for (long long v : j) {
    if (v <= 0) throw std::invalid_argument("multinomial lemma needs positive j values");
  }
  const std::size_t N = j.size() - 1;
  const long long j0 = j[0];
  const long long jN = j[N];
  const std::vector<long long> parts(j.begin() + 1, j.end());
  auto reduced = [&](std::size_t r) {
    std::vector<long long> p = parts;
    p[r - 1] -= 1;
    return multinomial(p);
  };
  const BigInt full = multinomial(parts);
  const BigInt lhs = full * binomial(j0 + jN - 1, j0);
  BigInt rhs = 0;
  const BigInt bracket = binomial(j0 + jN - 1, j0) - binomial(j0 + jN - 2, j0 - 1);
  for (std::size_t r = 1; r <= N - 1; ++r) rhs += reduced(r) * bracket;
  rhs += full * binomial(j0 + jN - 2, j0 - 1);
  rhs += reduced(N) * binomial(j0 + jN - 2, j0);
  return {lhs, rhs};
}

bool multinomial_check(const std::vector<long long>& j_values) {
  const auto sides = multinomial_sides(j_values);
  return sides.lhs == sides.rhs;
}

}  // namespace combtri

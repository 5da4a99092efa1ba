#include "combtri/digraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace combtri {

char to_char(ArcLabel label) { return label == ArcLabel::S ? 'S' : 'C'; }

namespace {

// state[0] is always the first empty cell.
std::optional<std::string> advance(const CombSpec& spec, const std::string& state,
                                   ArcLabel label) {
  std::string occ = state;
  if (label == ArcLabel::S) {
    occ[0] = '1';
  } else {
    const std::size_t need = static_cast<std::size_t>(spec.extent());
    if (occ.size() < need) occ.resize(need, '0');
    for (int i = 0; i < spec.t(); ++i) {
      char& cell = occ[static_cast<std::size_t>(i * spec.m())];
      if (cell == '1') return std::nullopt;
      cell = '1';
    }
  }
  const std::size_t first = occ.find('0');
  if (first == std::string::npos) return std::string("0");
  const std::size_t last = occ.find_last_of('1');
  if (last == std::string::npos || last < first) return std::string("0");
  return occ.substr(first, last - first + 1);
}

}  // namespace

int MetatileDigraph::find_node(const std::string& name) const {
  auto it = std::find(nodes_.begin(), nodes_.end(), name);
  return it == nodes_.end() ? -1 : static_cast<int>(it - nodes_.begin());
}

int MetatileDigraph::step(int node, ArcLabel label) const {
  for (int a : out_arcs(node)) {
    if (arcs_[static_cast<std::size_t>(a)].label == label) return arcs_[static_cast<std::size_t>(a)].to;
  }
  return -1;
}

MetatileDigraph build_digraph(const CombSpec& spec) {
  MetatileDigraph dg(spec);
  std::map<std::string, int> index;
  std::deque<int> queue;
  auto intern = [&](const std::string& name) {
    auto [it, fresh] = index.emplace(name, static_cast<int>(dg.nodes_.size()));
    if (fresh) {
      dg.nodes_.push_back(name);
      dg.out_.emplace_back();
      queue.push_back(it->second);
    }
    return it->second;
  };
  intern("0");
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (ArcLabel label : {ArcLabel::S, ArcLabel::C}) {
      // Copy: intern may reallocate nodes_.
      const std::string state = dg.nodes_[static_cast<std::size_t>(u)];
      auto next = advance(spec, state, label);
      if (!next) continue;
      const int v = intern(*next);
      const bool comb = label == ArcLabel::C;
      dg.out_[static_cast<std::size_t>(u)].push_back(static_cast<int>(dg.arcs_.size()));
      dg.arcs_.push_back({u, v, label, comb ? spec.t() : 1, comb ? 1 : 0});
    }
  }
  return dg;
}

namespace {

Cycle make_cycle(const MetatileDigraph& dg, std::vector<int> arcs) {
  Cycle c{std::move(arcs), {}, {}, 0, 0, true};
  for (int a : c.arcs) {
    const Arc& arc = dg.arcs()[static_cast<std::size_t>(a)];
    c.nodes.push_back(dg.nodes()[static_cast<std::size_t>(arc.from)]);
    c.labels.push_back(to_char(arc.label));
    c.L += 1;
    c.K += arc.comb_weight;
  }
  return c;
}

bool visits(const Cycle& c, const std::string& node) {
  return std::find(c.nodes.begin(), c.nodes.end(), node) != c.nodes.end();
}

// Each simple cycle once, rooted at its lowest-index node. Parallel arcs give
// distinct cycles.
std::vector<std::vector<int>> simple_cycles(const MetatileDigraph& dg, std::size_t cap) {
  std::vector<std::vector<int>> found;
  const int n = static_cast<int>(dg.node_count());
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::vector<int> path;
  std::function<void(int, int)> dfs = [&](int root, int u) {
    for (int a : dg.out_arcs(u)) {
      const int v = dg.arcs()[static_cast<std::size_t>(a)].to;
      if (v == root) {
        path.push_back(a);
        found.push_back(path);
        path.pop_back();
        if (found.size() > cap) {
          throw CycleLimitExceeded("more than " + std::to_string(cap) + " simple cycles");
        }
      } else if (v > root && !on_path[static_cast<std::size_t>(v)]) {
        on_path[static_cast<std::size_t>(v)] = 1;
        path.push_back(a);
        dfs(root, v);
        path.pop_back();
        on_path[static_cast<std::size_t>(v)] = 0;
      }
    }
  };
  for (int root = 0; root < n; ++root) {
    on_path[static_cast<std::size_t>(root)] = 1;
    dfs(root, root);
    on_path[static_cast<std::size_t>(root)] = 0;
  }
  return found;
}

// Simple paths src -> dst that touch dst only at the end.
std::vector<std::vector<int>> simple_paths(const MetatileDigraph& dg, int src, int dst,
                                           std::size_t cap) {
  std::vector<std::vector<int>> found;
  std::vector<char> seen(dg.node_count(), 0);
  std::vector<int> path;
  std::function<void(int)> dfs = [&](int u) {
    for (int a : dg.out_arcs(u)) {
      const int v = dg.arcs()[static_cast<std::size_t>(a)].to;
      if (v == dst) {
        path.push_back(a);
        found.push_back(path);
        path.pop_back();
        if (found.size() > cap) {
          throw CycleLimitExceeded("more than " + std::to_string(cap) + " simple paths");
        }
      } else if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        path.push_back(a);
        dfs(v);
        path.pop_back();
        seen[static_cast<std::size_t>(v)] = 0;
      }
    }
  };
  seen[static_cast<std::size_t>(src)] = 1;
  dfs(src);
  return found;
}

// First node in discovery order, other than 0 and `exclude`, on every cycle.
std::optional<std::string> first_common(const MetatileDigraph& dg,
                                        const std::vector<const Cycle*>& cycles,
                                        const std::string& exclude) {
  for (std::size_t i = 1; i < dg.node_count(); ++i) {
    const std::string& node = dg.nodes()[i];
    if (node == exclude) continue;
    if (std::all_of(cycles.begin(), cycles.end(), [&](const Cycle* c) { return visits(*c, node); })) {
      return node;
    }
  }
  return std::nullopt;
}

}  // namespace

CycleStructure analyze_structure(const MetatileDigraph& dg, const AnalysisLimits& limits) {
  CycleStructure cs{dg.spec(), {}, {}, std::nullopt, std::nullopt, std::nullopt, {}};
  std::vector<Cycle> all;
  for (auto& arcs : simple_cycles(dg, limits.max_cycles)) all.push_back(make_cycle(dg, std::move(arcs)));

  std::vector<const Cycle*> inner;
  for (const auto& c : all) {
    if (!visits(c, "0")) inner.push_back(&c);
  }

  std::optional<std::string> hub = first_common(dg, inner, "0");
  std::string errant_node;
  if (hub || inner.empty()) {
    cs.common_node = hub;
  } else {
    for (const Cycle* loop : inner) {
      if (loop->arcs.size() != 1) continue;
      std::vector<const Cycle*> rest;
      for (const Cycle* c : inner) {
        if (c != loop) rest.push_back(c);
      }
      auto p = first_common(dg, rest, loop->nodes.front());
      if (!p) continue;
      errant_node = loop->nodes.front();
      cs.errant = ErrantLoop{errant_node, loop->arcs.front(), loop->L, loop->K};
      cs.pseudo_common = p;
      hub = p;
      break;
    }
    if (!cs.errant) {
      throw UnsupportedStructure("digraph for " + dg.spec().label() +
                                 " has neither a common node nor an errant loop");
    }
  }

  auto mark = [&](Cycle c) {
    c.plain = errant_node.empty() || !visits(c, errant_node);
    return c;
  };
  for (const Cycle* c : inner) cs.inner_cycles.push_back(mark(*c));
  for (const auto& c : all) {
    if (visits(c, "0") && (!hub || !visits(c, *hub))) cs.outer_cycles.push_back(mark(c));
  }
  if (hub) {
    const int p = dg.find_node(*hub);
    std::set<std::vector<int>> seen;
    for (const auto& in : simple_paths(dg, 0, p, limits.max_cycles)) {
      for (const auto& out : simple_paths(dg, p, 0, limits.max_cycles)) {
        std::vector<int> arcs = in;
        arcs.insert(arcs.end(), out.begin(), out.end());
        if (!seen.insert(arcs).second) continue;
        cs.common_circuits.push_back(mark(make_cycle(dg, std::move(arcs))));
        if (cs.common_circuits.size() > limits.max_cycles) {
          throw CycleLimitExceeded("more than " + std::to_string(limits.max_cycles) +
                                   " common circuits");
        }
      }
    }
  }
  return cs;
}

bool has_finite_metatiles(const MetatileDigraph& dg) {
  // Iterative three-colour DFS over the graph with node 0 deleted.
  const std::size_t n = dg.node_count();
  std::vector<char> colour(n, 0);
  for (std::size_t s = 1; s < n; ++s) {
    if (colour[s]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(s), 0}};
    colour[s] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      const auto& outs = dg.out_arcs(u);
      if (next == outs.size()) {
        colour[static_cast<std::size_t>(u)] = 2;
        stack.pop_back();
        continue;
      }
      const int v = dg.arcs()[static_cast<std::size_t>(outs[next++])].to;
      if (v == 0) continue;
      if (colour[static_cast<std::size_t>(v)] == 1) return false;
      if (colour[static_cast<std::size_t>(v)] == 0) {
        colour[static_cast<std::size_t>(v)] = 1;
        stack.push_back({v, 0});
      }
    }
  }
  return true;
}

std::vector<std::string> enumerate_metatiles(const MetatileDigraph& dg, int max_tiles) {
  if (max_tiles < 1) throw std::invalid_argument("max_tiles must be >= 1");
  std::vector<std::string> out;
  std::string labels;
  std::function<void(int)> walk = [&](int u) {
    if (static_cast<int>(labels.size()) == max_tiles) return;
    for (int a : dg.out_arcs(u)) {
      const Arc& arc = dg.arcs()[static_cast<std::size_t>(a)];
      labels.push_back(to_char(arc.label));
      if (arc.to == 0) {
        out.push_back(labels);
      } else {
        walk(arc.to);
      }
      labels.pop_back();
    }
  };
  walk(0);
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<BigInt> metatile_counts(const MetatileDigraph& dg, int max_tiles) {
  if (max_tiles < 0) throw std::invalid_argument("max_tiles must be >= 0");
  std::vector<BigInt> counts(static_cast<std::size_t>(max_tiles) + 1, 0);
  std::vector<BigInt> ways(dg.node_count(), 0);
  ways[0] = 1;
  for (int d = 1; d <= max_tiles; ++d) {
    std::vector<BigInt> next(dg.node_count(), 0);
    for (const Arc& arc : dg.arcs()) {
      const BigInt& w = ways[static_cast<std::size_t>(arc.from)];
      if (w == 0) continue;
      if (arc.to == 0) {
        counts[static_cast<std::size_t>(d)] += w;
      } else {
        next[static_cast<std::size_t>(arc.to)] += w;
      }
    }
    ways = std::move(next);
  }
  return counts;
}

namespace {

// Gapless after each tile, or nullopt on collision.
std::optional<std::vector<bool>> replay_prefixes(const CombSpec& spec, const std::string& labels,
                                                 std::vector<oracle::Placement>* placements,
                                                 int* used_cells) {
  std::vector<char> occ;
  std::vector<bool> gapless;
  std::size_t first = 0;
  for (char c : labels) {
    if (c != 'S' && c != 'C') throw std::invalid_argument("labels must be S or C");
    const bool comb = c == 'C';
    const std::size_t span = comb ? static_cast<std::size_t>(spec.extent()) : 1;
    if (occ.size() < first + span) occ.resize(first + span, 0);
    if (comb) {
      for (int i = 0; i < spec.t(); ++i) {
        char& cell = occ[first + static_cast<std::size_t>(i * spec.m())];
        if (cell) return std::nullopt;
        cell = 1;
      }
    } else {
      occ[first] = 1;
    }
    if (placements) {
      placements->push_back(
          {comb ? oracle::TileKind::Comb : oracle::TileKind::Square, static_cast<int>(first) + 1});
    }
    while (first < occ.size() && occ[first]) ++first;
    gapless.push_back(first == occ.size());
  }
  if (used_cells) *used_cells = static_cast<int>(occ.size());
  return gapless;
}

}  // namespace

oracle::Tiling replay_labels(const CombSpec& spec, const std::string& labels) {
  std::vector<oracle::Placement> placements;
  int cells = 0;
  auto gapless = replay_prefixes(spec, labels, &placements, &cells);
  if (!gapless) throw std::invalid_argument("labels " + labels + " collide");
  if (!gapless->empty() && !gapless->back()) throw std::invalid_argument("labels " + labels + " leave a gap");
  return oracle::Tiling(spec, cells, std::move(placements));
}

bool is_metatile(const CombSpec& spec, const std::string& labels) {
  if (labels.empty()) return false;
  auto gapless = replay_prefixes(spec, labels, nullptr, nullptr);
  if (!gapless || !gapless->back()) return false;
  return std::find(gapless->begin(), gapless->end() - 1, true) == gapless->end() - 1;
}

std::string compress_labels(const std::string& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size();) {
    std::size_t j = i;
    while (j < labels.size() && labels[j] == labels[i]) ++j;
    out.push_back(labels[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string export_dot(const MetatileDigraph& dg) {
  std::ostringstream out;
  out << "digraph \"comb_m" << dg.spec().m() << "_t" << dg.spec().t() << "\" {\n";
  for (const auto& node : dg.nodes()) out << "  \"" << node << "\";\n";
  for (const Arc& arc : dg.arcs()) {
    out << "  \"" << dg.nodes()[static_cast<std::size_t>(arc.from)] << "\" -> \""
        << dg.nodes()[static_cast<std::size_t>(arc.to)] << "\" [label=\"" << to_char(arc.label)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json digraph_to_json(const MetatileDigraph& dg) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const Arc& arc : dg.arcs()) {
    arcs.push_back({{"from", dg.nodes()[static_cast<std::size_t>(arc.from)]},
                    {"to", dg.nodes()[static_cast<std::size_t>(arc.to)]},
                    {"label", std::string(1, to_char(arc.label))},
                    {"cells", arc.cell_weight},
                    {"combs", arc.comb_weight}});
  }
  return {{"m", dg.spec().m()}, {"t", dg.spec().t()}, {"nodes", dg.nodes()}, {"arcs", arcs}};
}

namespace {

nlohmann::json cycles_json(const std::vector<Cycle>& cycles) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cycles) {
    arr.push_back({{"labels", c.labels},
                   {"nodes", c.nodes},
                   {"L", c.L},
                   {"K", c.K},
                   {"plain", c.plain}});
  }
  return arr;
}

template <class T>
nlohmann::json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json structure_to_json(const CycleStructure& cs) {
  nlohmann::json errant = nullptr;
  if (cs.errant) {
    errant = {{"node", cs.errant->node}, {"L0", cs.errant->L0}, {"K0", cs.errant->K0}};
  }
  return {{"m", cs.spec.m()},
          {"t", cs.spec.t()},
          {"common_node", opt_json(cs.common_node)},
          {"pseudo_common", opt_json(cs.pseudo_common)},
          {"errant", errant},
          {"inner_cycles", cycles_json(cs.inner_cycles)},
          {"outer_cycles", cycles_json(cs.outer_cycles)},
          {"common_circuits", cycles_json(cs.common_circuits)}};
}

}  // namespace combtri

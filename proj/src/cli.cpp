#include "combtri/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "combtri/core.hpp"
#include "combtri/digraph.hpp"
#include "combtri/identities.hpp"
#include "combtri/oracle.hpp"
#include "combtri/polynomials.hpp"
#include "combtri/recursion.hpp"

namespace combtri::cli {
namespace {

// Raised for requests that parse but cannot be served as asked.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int m = 0;
  int t = 0;
  int rows = 14;
  int n = 14;
  std::optional<int> k;
  int max_tiles = 6;
  bool count = false;
  bool row_sum = false;
  std::string kind = "tile";
  std::string metric = "tiles";
  std::string format;
  std::string profile = "quick";
  std::string method;
  std::vector<std::string> checks;
};

std::optional<CycleStructure> try_structure(const CombSpec& spec) {
  try {
    return analyze_structure(build_digraph(spec));
  } catch (const CycleLimitExceeded&) {
    return std::nullopt;
  } catch (const UnsupportedStructure&) {
    return std::nullopt;
  }
}

// Chosen engine, with the default resolved.
std::string resolve_method(const Options& opt, const CombSpec& spec,
                           std::optional<CycleStructure>& structure) {
  if (opt.method.empty() || opt.method == "recursion") {
    structure = try_structure(spec);
    const bool ok = structure && synthesis_supported(*structure);
    if (ok) return "recursion";
    if (opt.method == "recursion") {
      throw Unsupported("unsupported structure: no recursion synthesized for " + spec.label());
    }
    return "walk";
  }
  return opt.method;
}

std::string format_or(const Options& opt, const char* fallback) {
  return opt.format.empty() ? fallback : opt.format;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                    const char* command) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError(std::string(command) + " does not support --format " + format);
}

Triangle compute_triangle(const Options& opt, const CombSpec& spec, TriangleKind kind,
                          std::string& method) {
  std::optional<CycleStructure> structure;
  method = resolve_method(opt, spec, structure);
  const Metric metric = kind == TriangleKind::TileIndexed ? Metric::Tiles : Metric::Cells;
  if (method == "oracle") return oracle::build_triangle(spec, kind, opt.rows);
  if (method == "poly") return triangle_via_poly(spec, kind, opt.rows);
  if (method == "walk") return walk_triangle(build_digraph(spec), metric, opt.rows);
  return evaluate_triangle(synthesize(*structure, metric, true), opt.rows);
}

std::vector<BigInt> compute_sums(const Options& opt, const CombSpec& spec, std::string& method) {
  std::optional<CycleStructure> structure;
  method = resolve_method(opt, spec, structure);
  const Metric metric = parse_metric(opt.metric);
  const TriangleKind kind = metric == Metric::Tiles ? TriangleKind::TileIndexed : TriangleKind::BoardIndexed;
  if (method == "walk") return walk_sequence(build_digraph(spec), metric, opt.n);
  if (method == "recursion") return evaluate_sequence(synthesize(*structure, metric, false), opt.n);
  const Triangle tri = method == "oracle" ? oracle::build_triangle(spec, kind, opt.n)
                                          : triangle_via_poly(spec, kind, opt.n);
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < tri.row_count(); ++i) out.push_back(tri.row_sum(i));
  return out;
}

int cmd_triangle(const Options& opt, std::ostream& out) {
  const CombSpec spec(opt.m, opt.t);
  const std::string format = format_or(opt, "csv");
  require_format(format, {"csv", "json", "text"}, "triangle");
  if (opt.rows < 1) throw UsageError("--rows must be at least 1");
  std::string method;
  const Triangle tri = compute_triangle(opt, spec, parse_triangle_kind(opt.kind), method);
  if (format == "csv") {
    out << tri.to_csv();
  } else if (format == "json") {
    auto doc = tri.to_json();
    doc["method"] = method;
    out << doc.dump(2) << '\n';
  } else {
    for (std::size_t n = 0; n < tri.row_count(); ++n) {
      const auto& row = tri.row(n);
      for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
      out << '\n';
    }
  }
  return kExitOk;
}

int cmd_sums(const Options& opt, std::ostream& out) {
  const CombSpec spec(opt.m, opt.t);
  const std::string format = format_or(opt, "bfile");
  require_format(format, {"bfile", "json", "text"}, "sums");
  if (opt.n < 1) throw UsageError("--n must be at least 1");
  std::string method;
  const auto values = compute_sums(opt, spec, method);
  if (format == "bfile") {
    for (std::size_t i = 0; i < values.size(); ++i) out << i << ' ' << values[i] << '\n';
  } else if (format == "json") {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : values) vals.push_back(to_decimal(v));
    nlohmann::json doc = {{"m", spec.m()}, {"t", spec.t()}, {"metric", opt.metric}, {"method", method},
                          {"values", vals}};
    out << doc.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
    out << '\n';
  }
  return kExitOk;
}

std::string subset_text(const oracle::RestrictedSubset& s) {
  std::string text = "{";
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    if (i) text += ',';
    text += std::to_string(s.members()[i]);
  }
  return text + "}";
}

int cmd_subsets(const Options& opt, std::ostream& out) {
  const CombSpec spec(opt.m, opt.t);
  const std::string format = format_or(opt, "text");
  require_format(format, {"text", "json"}, "subsets");
  if (opt.n < 0) throw UsageError("--n must be nonnegative");
  std::vector<int> ks;
  if (opt.k) {
    ks.push_back(*opt.k);
  } else {
    for (int k = 0; k <= opt.n; ++k) ks.push_back(k);
  }
  nlohmann::json doc = {{"m", spec.m()}, {"t", spec.t()}, {"n", opt.n}};
  if (opt.count) {
    nlohmann::json counts = nlohmann::json::object();
    for (int k : ks) {
      const BigInt c = oracle::count_restricted_subsets(spec, opt.n, k);
      if (!opt.k && c == 0) continue;
      counts[std::to_string(k)] = to_decimal(c);
      if (format == "text") out << (opt.k ? "" : std::to_string(k) + " ") << c << '\n';
    }
    doc["counts"] = counts;
  } else {
    nlohmann::json list = nlohmann::json::array();
    for (int k : ks) {
      for (const auto& s : oracle::enumerate_restricted_subsets(spec, opt.n, k)) {
        list.push_back(s.to_json());
        if (format == "text") out << subset_text(s) << '\n';
      }
    }
    doc["subsets"] = list;
  }
  if (format == "json") out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_digraph(const Options& opt, std::ostream& out) {
  const CombSpec spec(opt.m, opt.t);
  const std::string format = format_or(opt, "dot");
  require_format(format, {"dot", "json"}, "digraph");
  const auto dg = build_digraph(spec);
  if (format == "dot") {
    out << export_dot(dg);
    return kExitOk;
  }
  nlohmann::json doc = {{"digraph", digraph_to_json(dg)}};
  try {
    doc["structure"] = structure_to_json(analyze_structure(dg));
  } catch (const std::exception& e) {
    doc["structure_error"] = e.what();
  }
  doc["finite_metatiles"] = has_finite_metatiles(dg);
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_metatiles(const Options& opt, std::ostream& out) {
  const CombSpec spec(opt.m, opt.t);
  const std::string format = format_or(opt, "text");
  require_format(format, {"text", "json"}, "metatiles");
  if (opt.max_tiles < 1) throw UsageError("--max-tiles must be at least 1");
  const auto dg = build_digraph(spec);
  const auto tiles = enumerate_metatiles(dg, opt.max_tiles);
  if (format == "text") {
    for (const auto& l : tiles) out << compress_labels(l) << '\n';
    return kExitOk;
  }
  nlohmann::json list = nlohmann::json::array();
  for (const auto& l : tiles) list.push_back({{"labels", l}, {"compressed", compress_labels(l)}});
  nlohmann::json doc = {{"m", spec.m()}, {"t", spec.t()}, {"max_tiles", opt.max_tiles},
                        {"finite", has_finite_metatiles(dg)}, {"metatiles", list}};
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_recursion(const Options& opt, std::ostream& out) {
  const CombSpec spec(opt.m, opt.t);
  const std::string format = format_or(opt, "text");
  require_format(format, {"text", "json"}, "recursion");
  const auto structure = try_structure(spec);
  if (!structure || !synthesis_supported(*structure)) {
    throw Unsupported("unsupported structure: " + spec.label() +
                      " has neither a common node nor an errant loop with a pseudo-common node");
  }
  const auto rel = synthesize(*structure, parse_metric(opt.metric), !opt.row_sum);
  if (format == "text") {
    out << rel.to_text() << '\n';
  } else {
    out << rel.to_json().dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const std::string format = format_or(opt, "text");
  require_format(format, {"text", "json"}, "verify");
  const Grid grid = profile_grid(parse_profile(opt.profile));
  std::vector<CheckReport> reports;
  if (opt.checks.empty()) {
    reports = run_suite(grid);
  } else {
    const auto names = check_names();
    for (const auto& c : opt.checks) {
      if (std::find(names.begin(), names.end(), c) == names.end()) throw UsageError("unknown check: " + c);
      reports.push_back(run_check(c, grid));
    }
  }
  if (format == "text") {
    out << reports_to_text(reports);
  } else {
    out << reports_to_json(reports).dump(2) << '\n';
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });
  return ok ? kExitOk : kExitFailure;
}

void add_spec(CLI::App* sub, Options& opt) {
  sub->add_option("--m", opt.m, "comb gap parameter (gaps have width m-1)")->required();
  sub->add_option("--t", opt.t, "teeth per comb")->required();
}

void add_method(CLI::App* sub, Options& opt) {
  sub->add_option("--method", opt.method, "engine; default recursion when supported, else walk")
      ->check(CLI::IsMember({"oracle", "poly", "recursion", "walk"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Comb tiling triangles, digraphs and recursions"};
  app.require_subcommand(1);

  auto* tri = app.add_subcommand("triangle", "print a triangle of tiling counts");
  add_spec(tri, opt);
  tri->add_option("--rows", opt.rows, "number of rows");
  tri->add_option("--kind", opt.kind)->check(CLI::IsMember({"tile", "board"}));
  tri->add_option("--format", opt.format, "csv|json|text");
  add_method(tri, opt);

  auto* sums = app.add_subcommand("sums", "row sums (tiles) or antidiagonal sums (cells)");
  add_spec(sums, opt);
  sums->add_option("--n", opt.n, "number of terms");
  sums->add_option("--metric", opt.metric)->check(CLI::IsMember({"tiles", "cells"}));
  sums->add_option("--format", opt.format, "bfile|json|text");
  add_method(sums, opt);

  auto* subs = app.add_subcommand("subsets", "list or count restricted subsets of {1..n}");
  add_spec(subs, opt);
  subs->add_option("--n", opt.n, "universe size")->required();
  subs->add_option("--k", opt.k, "subset size");
  subs->add_flag("--count", opt.count, "print counts instead of members");
  subs->add_option("--format", opt.format, "text|json");

  auto* dig = app.add_subcommand("digraph", "metatile digraph");
  add_spec(dig, opt);
  dig->add_option("--format", opt.format, "dot|json");

  auto* meta = app.add_subcommand("metatiles", "metatiles up to a tile count");
  add_spec(meta, opt);
  meta->add_option("--max-tiles", opt.max_tiles, "largest tile count");
  meta->add_option("--format", opt.format, "text|json");

  auto* rec = app.add_subcommand("recursion", "synthesized recursion relation");
  add_spec(rec, opt);
  rec->add_option("--metric", opt.metric)->check(CLI::IsMember({"tiles", "cells"}));
  rec->add_flag("--row-sum", opt.row_sum, "drop k (row or antidiagonal sums)");
  rec->add_option("--format", opt.format, "text|json");

  auto* ver = app.add_subcommand("verify", "run the identity suite");
  ver->add_option("--profile", opt.profile)->check(CLI::IsMember({"quick", "full"}));
  ver->add_option("--check", opt.checks, "run only the named checks");
  ver->add_option("--format", opt.format, "text|json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (tri->parsed()) return cmd_triangle(opt, out);
    if (sums->parsed()) return cmd_sums(opt, out);
    if (subs->parsed()) return cmd_subsets(opt, out);
    if (dig->parsed()) return cmd_digraph(opt, out);
    if (meta->parsed()) return cmd_metatiles(opt, out);
    if (rec->parsed()) return cmd_recursion(opt, out);
    return cmd_verify(opt, out);
  } catch (const Unsupported& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const oracle::LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace combtri::cli

#include <algorithm>
#include <map>

#include "report.hpp"
#include "ukd/counting.hpp"
#include "ukd/determinacy.hpp"
#include "ukd/overlap_graph.hpp"
#include "ukd/path_scheme.hpp"
#include "ukd/posets.hpp"
#include "ukd/prohibitions.hpp"
#include "ukd/rational_gf.hpp"

namespace ukd::cli {

namespace {

constexpr int kCrossCheckMaxN = 14;

template <typename T>
std::string str(T v) {
  return std::to_string(v);
}

std::string join(std::span<const int> values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

ParsedPermutation parse(const Options& o) {
  return parse_permutation(o.permutation);
}

int require_n(const Options& o, const char* command) {
  if (!o.n) throw InvalidInput(std::string(command) + " needs --n");
  if (*o.n < 0) throw InvalidInput("--n must be non-negative");
  return *o.n;
}

void require_k(int k, int lowest) {
  if (k < lowest) throw InvalidInput("--k must be at least " + std::to_string(lowest));
}

TransferVariant variant_or(const Options& o, TransferVariant fallback) {
  if (o.variant.empty()) return fallback;
  return o.variant == "arc" ? TransferVariant::kArcLabeled : TransferVariant::kNodeBased;
}

Json pair_list(const std::vector<std::pair<int, int>>& pairs) {
  Json out = Json::array();
  for (auto [u, v] : pairs) out.push_back({u, v});
  return out;
}

Json big_list(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

}  // namespace

Report cmd_check(const Options& o) {
  require_k(o.k, 1);
  const auto [p, notation] = parse(o);
  Report r;
  r.command = "check";
  r.parameters = {{"permutation", to_string(p, notation)}, {"k", o.k}};
  const bool ukd = is_uniquely_determined(p, o.k);
  const int ir = ir_index(p);
  r.result["ukd"] = ukd;
  r.csv_header = {"ukd", "ir", "x", "position_x", "position_next"};
  if (const auto v = contains_prohibition(p, o.k)) {
    r.result["witness"] = {{"x", v->x}, {"positions", {v->position_x, v->position_next}}};
    r.csv_rows.push_back({"false", str(ir), str(v->x), str(v->position_x), str(v->position_next)});
    r.plain.push_back(to_string(p, notation) + " is not uniquely " + str(o.k) + "-determined: d(" +
                      str(v->x) + "," + str(v->x + 1) + ") = " +
                      str(std::abs(v->position_x - v->position_next)));
  } else {
    r.csv_rows.push_back({"true", str(ir), "", "", ""});
    r.plain.push_back(to_string(p, notation) + " is uniquely " + str(o.k) + "-determined");
  }
  r.result["ir"] = ir;
  r.plain.push_back("ir index: " + str(ir));
  return r;
}

Report cmd_path(const Options& o) {
  require_k(o.k, 1);
  const auto [p, notation] = parse(o);
  Report r;
  r.command = "path";
  r.parameters = {{"permutation", to_string(p, notation)}, {"k", o.k}};
  const auto path = window_path(p, o.k);
  Json nodes = Json::array();
  r.csv_header = {"step", "node"};
  for (std::size_t i = 0; i < path.nodes.size(); ++i) {
    nodes.push_back(to_string(path.nodes[i], notation));
    r.csv_rows.push_back({str(i), to_string(path.nodes[i], notation)});
  }
  r.result["nodes"] = nodes;
  r.result["arcs"] = path.arc_count();
  std::string line;
  for (const auto& node : nodes) line += (line.empty() ? "" : " -> ") + node.get<std::string>();
  r.plain.push_back(line);
  if (is_uniquely_determined(p, o.k)) {
    const auto h = phi(p, o.k);
    r.result["hamiltonian_path"] = h;
    r.plain.push_back("Hamiltonian path of G_{" + str(o.k) + "," + str(p.size()) + "}: " + join(h, ' '));
  } else {
    r.result["hamiltonian_path"] = nullptr;
  }
  return r;
}

Report cmd_count(const Options& o) {
  require_k(o.k, 1);
  const int n = require_n(o, "count");
  Report r;
  r.command = "count";
  r.parameters = {{"k", o.k}, {"n", n}, {"method", o.method}};
  BigInt value;
  std::string method;
  if (o.method == "brute") {
    value = count_exhaustive(o.k, n, o.budget_n);
    method = "brute";
  } else if (o.method == "hamiltonian") {
    value = count_bruteforce(o.k, n);
    method = "hamiltonian";
  } else if (o.method == "transfer") {
    const auto variant = variant_or(o, TransferVariant::kNodeBased);
    r.parameters["variant"] = std::string(to_string(variant));
    value = count_via_transfer(o.k, n, variant, o.budget_nodes);
    method = "transfer";
  } else {
    method = "hamiltonian";
    if (o.k >= 2 && n >= 2 * o.k - 1) {
      try {
        value = count_via_transfer(o.k, n, variant_or(o, TransferVariant::kNodeBased), o.budget_nodes);
        method = "transfer";
      } catch (const ResourceLimit&) {
      }
    }
    if (method == "hamiltonian") {
      value = count_bruteforce(o.k, n);
    } else if (n <= kCrossCheckMaxN) {
      const BigInt check = count_bruteforce(o.k, n);
      if (check != value) {
        throw ConsistencyError("transfer gives " + value.get_str() + " but the Hamiltonian DP gives " +
                               check.get_str());
      }
    }
  }
  r.method = method;
  r.result["count"] = value.get_str();
  r.csv_header = {"k", "n", "method", "count"};
  r.csv_rows.push_back({str(o.k), str(n), method, value.get_str()});
  r.plain.push_back(value.get_str());
  return r;
}

Report cmd_series(const Options& o) {
  require_k(o.k, 1);
  const int n_max = require_n(o, "series");
  Report r;
  r.command = "series";
  r.parameters = {{"k", o.k}, {"n", n_max}};
  SeriesOptions options;
  options.node_max_candidates = o.budget_nodes;
  options.arc_max_candidates = o.budget_nodes;
  const auto table = series(o.k, n_max, options);
  r.method = table.transfer_variants.empty() ? "hamiltonian" : "transfer";
  Json engines = Json::array();
  for (auto v : table.transfer_variants) engines.push_back(std::string(to_string(v)));
  r.result["k"] = o.k;
  r.result["counts"] = big_list(table.counts);
  r.result["transfer_variants"] = engines;
  r.csv_header = {"n", "count"};
  for (std::size_t n = 0; n < table.counts.size(); ++n) {
    r.csv_rows.push_back({str(n), table.counts[n].get_str()});
    r.plain.push_back("A(" + str(o.k) + "," + str(n) + ") = " + table.counts[n].get_str());
  }
  return r;
}

Report cmd_gf(const Options& o) {
  require_k(o.k, 1);
  const int n_max = o.n.value_or(24);
  if (n_max < 0) throw InvalidInput("--n must be non-negative");
  Report r;
  r.command = "gf";
  r.parameters = {{"k", o.k}, {"n", n_max}, {"degree_bound", o.degree_bound}};
  SeriesOptions options;
  options.node_max_candidates = o.budget_nodes;
  options.arc_max_candidates = o.budget_nodes;
  const auto table = series(o.k, n_max, options);
  r.method = table.transfer_variants.empty() ? "hamiltonian" : "transfer";
  const auto gf = fit_rational_gf(table.counts, o.degree_bound);
  r.result["numerator"] = big_list(gf.numerator);
  r.result["denominator"] = big_list(gf.denominator);
  r.csv_header = {"power", "numerator", "denominator"};
  const std::size_t width = std::max(gf.numerator.size(), gf.denominator.size());
  for (std::size_t i = 0; i < width; ++i) {
    r.csv_rows.push_back({str(i), i < gf.numerator.size() ? gf.numerator[i].get_str() : "0",
                          i < gf.denominator.size() ? gf.denominator[i].get_str() : "0"});
  }
  r.plain.push_back("(" + to_string(gf.numerator) + ") / (" + to_string(gf.denominator) + ")");
  return r;
}

Report cmd_prohibitions(const Options& o) {
  Report r;
  r.command = "prohibitions";
  r.parameters = {{"k", o.k}};
  r.method = "brute";
  const auto l = generate_prohibitions(o.k);
  Json patterns = Json::array();
  r.csv_header = {"length", "pattern"};
  for (const auto& p : l.patterns()) {
    patterns.push_back(to_string(p));
    r.csv_rows.push_back({str(p.size()), to_string(p)});
    r.plain.push_back(to_string(p));
  }
  Json by_length = Json::object();
  for (auto [length, count] : l.by_length()) by_length[str(length)] = count;
  r.result["k"] = o.k;
  r.result["patterns"] = patterns;
  r.result["by_length"] = by_length;
  return r;
}

Report cmd_graph(const Options& o) {
  require_k(o.k, 1);
  Report r;
  r.command = "graph";
  r.parameters = {{"k", o.k}, {"pruned", o.pruned}};
  OverlapGraph g;
  if (o.pruned) {
    const auto variant = variant_or(o, TransferVariant::kArcLabeled);
    r.parameters["variant"] = std::string(to_string(variant));
    g = build_transfer_graph(o.k, variant, o.budget_nodes);
  } else {
    g = o.budget_nodes ? build_overlap_graph(o.k, {}, o.budget_nodes) : build_overlap_graph(o.k);
  }
  const std::size_t scc = strongly_connected_components(g);
  r.result["pattern_length"] = g.pattern_length();
  r.result["labelled"] = g.labelled();
  r.result["nodes"] = g.node_count();
  r.result["arcs"] = g.arc_count();
  r.result["scc"] = scc;
  r.csv_header = {"pattern_length", "labelled", "nodes", "arcs", "scc"};
  r.csv_rows.push_back({str(g.pattern_length()), g.labelled() ? "true" : "false", str(g.node_count()),
                        str(g.arc_count()), str(scc)});
  r.plain.push_back("P_" + str(g.pattern_length()) + ": " + str(g.node_count()) + " nodes, " +
                    str(g.arc_count()) + " arcs, " + str(scc) + " strongly connected components");
  if (o.dot) r.dot = export_dot(g);
  return r;
}

Report cmd_poset(const Options& o) {
  require_k(o.k, 1);
  const auto [p, notation] = parse(o);
  Report r;
  r.command = "poset";
  r.parameters = {{"permutation", to_string(p, notation)}, {"k", o.k}};
  const auto w = poset_from_permutation(p, o.k);
  const auto covers = w.cover_relations();
  const auto incomparable = incomparable_pairs(w);
  const BigInt extensions = count_linear_extensions(w);
  r.result["n"] = p.size();
  r.result["cover_relations"] = pair_list(covers);
  r.result["incomparable_pairs"] = pair_list(incomparable);
  r.result["linear_extensions"] = extensions.get_str();
  r.csv_header = {"relation", "u", "v"};
  for (auto [u, v] : covers) r.csv_rows.push_back({"cover", str(u), str(v)});
  for (auto [u, v] : incomparable) r.csv_rows.push_back({"incomparable", str(u), str(v)});
  std::string line;
  for (auto [u, v] : incomparable) line += " (" + str(u) + "," + str(v) + ")";
  r.plain.push_back(str(incomparable.size()) + " incomparable pairs:" + line);
  r.plain.push_back(extensions.get_str() + " linear extensions");
  if (o.dot) r.dot = export_hasse_dot(w);
  return r;
}

Report cmd_classify(const Options& o) {
  require_k(o.k, 1);
  const int n = require_n(o, "classify");
  if (n < o.k) throw InvalidInput("classify needs n >= k");
  if (n > o.budget_n) {
    throw ResourceLimit("walk classification for n=" + str(n) + " exceeds --budget-n " + str(o.budget_n));
  }
  Report r;
  r.command = "classify";
  r.parameters = {{"k", o.k}, {"n", n}};
  const auto g = o.budget_nodes ? build_overlap_graph(o.k, {}, o.budget_nodes) : build_overlap_graph(o.k);
  std::map<BigInt, std::uint64_t> sizes;
  std::uint64_t walks = 0;
  std::uint64_t unrealizable = 0;
  BigInt covered = 0;
  Json examples = Json::array();
  auto cursor = enumerate_paths(g, n - o.k);
  while (auto walk = cursor.next()) {
    const auto path = to_window_path(g, *walk);
    const BigInt m = realization_count(path);
    ++walks;
    ++sizes[m];
    covered += m;
    if (m == 0) {
      ++unrealizable;
      if (examples.size() < 5) {
        Json nodes = Json::array();
        for (const auto& node : path.nodes) nodes.push_back(to_string(node));
        examples.push_back(nodes);
      }
    }
  }
  Json histogram = Json::object();
  r.csv_header = {"realizations", "walks"};
  for (const auto& [m, count] : sizes) {
    histogram[m.get_str()] = count;
    r.csv_rows.push_back({m.get_str(), str(count)});
  }
  r.result["walks"] = walks;
  r.result["unrealizable"] = unrealizable;
  r.result["permutations_covered"] = covered.get_str();
  r.result["by_realizations"] = histogram;
  r.result["unrealizable_examples"] = examples;
  r.plain.push_back(str(walks) + " walks in P_" + str(o.k) + " with " + str(n - o.k) + " arcs, " +
                    str(unrealizable) + " unrealizable, covering " + covered.get_str() +
                    " permutations");
  return r;
}

Report cmd_crucial(const Options& o) {
  require_k(o.k, 1);
  const int max_n = o.max_n.value_or(9);
  Report r;
  r.command = "crucial";
  r.parameters = {{"k", o.k}, {"max_n", max_n}};
  r.method = "hamiltonian";
  r.csv_header = {"k", "n", "crucial"};
  Json found = nullptr;
  for (int n = 0; n <= max_n; ++n) {
    const auto c = find_crucial(o.k, n, o.budget_n);
    r.csv_rows.push_back({str(o.k), str(n), c ? to_string(*c) : ""});
    if (c && found.is_null()) found = to_string(*c);
  }
  r.result["crucial"] = found;
  r.result["searched_up_to"] = max_n;
  r.plain.push_back(found.is_null() ? "none found" : "crucial: " + found.get<std::string>());
  return r;
}

Report cmd_ir_dist(const Options& o) {
  const int n = require_n(o, "ir-dist");
  Report r;
  r.command = "ir-dist";
  r.parameters = {{"n", n}};
  r.method = "brute";
  const auto hist = ir_distribution(n, o.budget_n);
  Json counts = Json::object();
  r.csv_header = {"ir", "count"};
  for (auto [ir, count] : hist.counts) {
    counts[str(ir)] = count;
    r.csv_rows.push_back({str(ir), str(count)});
    r.plain.push_back("ir " + str(ir) + ": " + str(count));
  }
  r.result["n"] = n;
  r.result["counts"] = counts;
  return r;
}

Report cmd_m_dist(const Options& o) {
  require_k(o.k, 1);
  const int n = require_n(o, "m-dist");
  Report r;
  r.command = "m-dist";
  r.parameters = {{"n", n}, {"k", o.k}};
  r.method = "brute";
  const auto dist = m_distribution(n, o.k, o.budget_n);
  Json counts = Json::object();
  r.csv_header = {"m", "count"};
  for (auto [m, count] : dist) {
    counts[str(m)] = count;
    r.csv_rows.push_back({str(m), str(count)});
    r.plain.push_back("m " + str(m) + ": " + str(count));
  }
  r.result["n"] = n;
  r.result["k"] = o.k;
  r.result["counts"] = counts;
  return r;
}

Report cmd_realize(const Options& o) {
  require_k(o.k, 1);
  const auto [p, notation] = parse(o);
  Report r;
  r.command = "realize";
  r.parameters = {{"permutation", to_string(p, notation)}, {"k", o.k}};
  const auto members = realize_path(window_path(p, o.k));
  Json listed = Json::array();
  r.csv_header = {"permutation"};
  for (const auto& q : members) {
    listed.push_back(to_string(q, notation));
    r.csv_rows.push_back({to_string(q, notation)});
    r.plain.push_back(to_string(q, notation));
  }
  r.result["m"] = members.size();
  r.result["permutations"] = listed;
  return r;
}

}  // namespace ukd::cli

#include "chroma/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "chroma/version.hpp"

namespace chroma {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string located(const std::string& message, int line, int column) {
  if (line <= 0) return message;
  std::ostringstream out;
  out << "line " << line << ", column " << column << ": " << message;
  return out.str();
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(located(message, line, column)), line_(line), column_(column) {}

namespace {

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column);
  }
}

const json& member(const json& obj, const char* key, const std::string& ctx) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(ctx + ": missing field '" + key + "'");
  return *it;
}

int as_int(const json& value, const std::string& ctx) {
  if (!value.is_number_integer()) fail(ctx + ": expected an integer");
  const auto wide = value.get<long long>();
  if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max()) {
    fail(ctx + ": integer out of range");
  }
  return static_cast<int>(wide);
}

std::string as_string(const json& value, const std::string& ctx) {
  if (!value.is_string()) fail(ctx + ": expected a string");
  return value.get<std::string>();
}

LabeledEdge as_edge_triple(const json& value, const std::string& ctx) {
  if (!value.is_array() || value.size() != 3) fail(ctx + ": expected [u, v, color]");
  LabeledEdge edge;
  edge.u = as_int(value[0], ctx);
  edge.v = as_int(value[1], ctx);
  edge.color = as_string(value[2], ctx);
  return edge;
}

// Graph fields shared by instance documents and the instance embedded in
// partition documents.
EdgeColoredGraph parse_graph_fields(const json& obj, const std::string& ctx) {
  const int n = as_int(member(obj, "n", ctx), ctx + ".n");
  const json& colors = member(obj, "colors", ctx);
  if (!colors.is_array()) fail(ctx + ".colors: expected an array");
  std::vector<std::string> labels;
  labels.reserve(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i) {
    std::ostringstream item;
    item << ctx << ".colors[" << i << "]";
    labels.push_back(as_string(colors[i], item.str()));
  }
  const json& edges = member(obj, "edges", ctx);
  if (!edges.is_array()) fail(ctx + ".edges: expected an array");
  std::vector<LabeledEdge> parsed;
  parsed.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::ostringstream item;
    item << ctx << ".edges[" << i << "]";
    parsed.push_back(as_edge_triple(edges[i], item.str()));
  }
  try {
    return EdgeColoredGraph(n, std::move(labels), parsed);
  } catch (const std::invalid_argument& e) {
    fail(ctx + ": " + e.what());
  }
}

// {"label": count} object to a dense vector over the color universe.
std::vector<int> parse_bounds_map(const json& obj, const EdgeColoredGraph& graph,
                                  const std::string& ctx, int default_value) {
  if (!obj.is_object()) fail(ctx + ": expected an object mapping color to count");
  std::vector<int> dense(graph.color_count(), default_value);
  for (const auto& [key, value] : obj.items()) {
    ColorId id = -1;
    try {
      id = graph.color_id(key);
    } catch (const std::invalid_argument&) {
      fail(ctx + ": unknown color '" + key + "'");
    }
    const int count = as_int(value, ctx + "." + key);
    if (count < 0) fail(ctx + "." + key + ": must be non-negative");
    dense[id] = count;
  }
  return dense;
}

// (u, v) pair to edge index, order-insensitive
class EdgeLookup {
 public:
  explicit EdgeLookup(const EdgeColoredGraph& graph) : graph_(graph) {
    const int n = graph.vertex_count();
    table_.assign(static_cast<std::size_t>(n) * n, -1);
    for (EdgeIndex i = 0; i < graph.edge_count(); ++i) {
      const Edge& e = graph.edge(i);
      table_[static_cast<std::size_t>(e.u) * n + e.v] = i;
      table_[static_cast<std::size_t>(e.v) * n + e.u] = i;
    }
  }

  EdgeIndex find(VertexId u, VertexId v) const {
    const int n = graph_.vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) return -1;
    return table_[static_cast<std::size_t>(u) * n + v];
  }

 private:
  const EdgeColoredGraph& graph_;
  std::vector<EdgeIndex> table_;
};

EdgeIndex resolve_edge(const EdgeLookup& lookup, const EdgeColoredGraph& host,
                       const LabeledEdge& edge, const std::string& ctx) {
  const EdgeIndex idx = lookup.find(edge.u, edge.v);
  if (idx < 0) {
    std::ostringstream msg;
    msg << ctx << ": edge {" << edge.u << ", " << edge.v << "} not in the instance";
    fail(msg.str());
  }
  if (host.color_label(host.edge(idx).color) != edge.color) {
    std::ostringstream msg;
    msg << ctx << ": edge {" << edge.u << ", " << edge.v << "} has color '"
        << host.color_label(host.edge(idx).color) << "' in the instance, got '" << edge.color
        << "'";
    fail(msg.str());
  }
  return idx;
}

void require_schema_version(const json& doc, const std::string& ctx) {
  const json& version = member(doc, "schema_version", ctx);
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
    fail(ctx + ": unsupported schema_version");
  }
}

// ---------------------------------------------------------------------------
// serialization building blocks

ordered_json edge_triple(const EdgeColoredGraph& graph, EdgeIndex idx) {
  const Edge& e = graph.edge(idx);
  return ordered_json::array({e.u, e.v, graph.color_label(e.color)});
}

ordered_json histogram_object(const EdgeColoredGraph& graph, const ColorHistogram& hist) {
  ordered_json obj = ordered_json::object();
  for (ColorId c = 0; c < graph.color_count(); ++c) obj[graph.color_label(c)] = hist[c];
  return obj;
}

ordered_json bounds_object(const EdgeColoredGraph& graph, const std::vector<int>& values) {
  ordered_json obj = ordered_json::object();
  for (ColorId c = 0; c < graph.color_count(); ++c) obj[graph.color_label(c)] = values[c];
  return obj;
}

ordered_json forest_object(const ColoredForest& forest) {
  const EdgeColoredGraph& host = forest.host();
  ordered_json edges = ordered_json::array();
  for (EdgeIndex idx : forest.edge_indices()) edges.push_back(edge_triple(host, idx));
  ordered_json obj = ordered_json::object();
  obj["edges"] = std::move(edges);
  obj["components"] = forest.components();
  obj["histogram"] = histogram_object(host, forest.histogram());
  return obj;
}

ordered_json instance_object(const EdgeColoredGraph& graph,
                             const std::optional<std::vector<int>>& g,
                             const std::optional<std::vector<int>>& f, std::optional<int> m,
                             std::optional<std::uint64_t> seed) {
  ordered_json obj = ordered_json::object();
  obj["schema_version"] = kSchemaVersion;
  obj["n"] = graph.vertex_count();
  obj["colors"] = graph.color_labels();
  ordered_json edges = ordered_json::array();
  for (EdgeIndex i = 0; i < graph.edge_count(); ++i) edges.push_back(edge_triple(graph, i));
  obj["edges"] = std::move(edges);
  if (g) obj["g"] = bounds_object(graph, *g);
  if (f) obj["f"] = bounds_object(graph, *f);
  if (m) obj["m"] = *m;
  if (seed) obj["seed"] = *seed;
  return obj;
}

ordered_json result_envelope(const std::string& command) {
  ordered_json obj = ordered_json::object();
  obj["schema_version"] = kSchemaVersion;
  obj["tool"] = "chroma";
  obj["version"] = kToolVersion;
  obj["command"] = command;
  return obj;
}

std::string dump_document(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string rational_string(const Rational& r) {
  std::ostringstream out;
  out << r.numerator() << "/" << r.denominator();
  return out.str();
}

ordered_json distribution_object(const EdgeColoredGraph& graph, const ColorDistribution& dist) {
  ordered_json obj = ordered_json::object();
  for (ColorId c = 0; c < graph.color_count(); ++c) {
    obj[graph.color_label(c)] = rational_string(dist.probabilities[c]);
  }
  return obj;
}

// fixed edge palette for DOT output, cycled by color or tree id
constexpr std::array<const char*, 12> kDotPalette = {
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
    "#f781bf", "#17becf", "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3"};

std::string dot_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

void dot_header(std::ostringstream& out, const EdgeColoredGraph& graph) {
  out << "graph chroma {\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (VertexId v = 0; v < graph.vertex_count(); ++v) out << "  " << v << ";\n";
}

}  // namespace

// ---------------------------------------------------------------------------
// parsing

ParsedInstance parse_instance(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("instance: expected a JSON object");
  require_schema_version(doc, "instance");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    static constexpr std::array<const char*, 8> known = {"schema_version", "n", "colors",
                                                         "edges", "g", "f", "m", "seed"};
    if (std::find_if(known.begin(), known.end(),
                     [&key = key](const char* k) { return key == k; }) == known.end()) {
      fail("instance: unknown field '" + key + "'");
    }
  }
  EdgeColoredGraph graph = parse_graph_fields(doc, "instance");

  ParsedInstance instance{std::move(graph), std::nullopt, std::nullopt, std::nullopt,
                          std::nullopt};
  if (const auto it = doc.find("g"); it != doc.end()) {
    instance.g = parse_bounds_map(*it, instance.graph, "g", 0);
  }
  if (const auto it = doc.find("f"); it != doc.end()) {
    instance.f = parse_bounds_map(*it, instance.graph, "f", 0);
  }
  if (const auto it = doc.find("m"); it != doc.end()) {
    instance.m = as_int(*it, "m");
  }
  if (const auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_unsigned()) fail("seed: expected a non-negative integer");
    instance.seed = it->get<std::uint64_t>();
  }
  return instance;
}

std::string serialize_instance(const EdgeColoredGraph& graph,
                               const std::optional<std::vector<int>>& g,
                               const std::optional<std::vector<int>>& f, std::optional<int> m,
                               std::optional<std::uint64_t> seed) {
  return dump_document(instance_object(graph, g, f, m, seed));
}

std::string serialize_check_result(const EdgeColoredGraph& graph, const FeasibilityVerdict& verdict,
                                   int m) {
  ordered_json doc = result_envelope("check");
  doc["m"] = m;
  doc["feasible"] = verdict.feasible;
  if (verdict.certificate) {
    ordered_json cert = ordered_json::object();
    ordered_json colors = ordered_json::array();
    for (ColorId c : verdict.certificate->colors.members()) {
      colors.push_back(graph.color_label(c));
    }
    cert["colors"] = std::move(colors);
    cert["omega"] = verdict.certificate->omega;
    cert["f_bound"] = verdict.certificate->f_bound;
    cert["g_bound"] = verdict.certificate->g_bound;
    doc["certificate"] = std::move(cert);
  } else {
    doc["certificate"] = nullptr;
  }
  return dump_document(doc);
}

std::string serialize_forest_result(const std::string& command, const EdgeColoredGraph& graph,
                                    const std::optional<ColoredForest>& forest, int m) {
  (void)graph;
  ordered_json doc = result_envelope(command);
  doc["m"] = m;
  doc["feasible"] = forest.has_value();
  doc["forest"] = forest ? forest_object(*forest) : ordered_json(nullptr);
  return dump_document(doc);
}

std::string serialize_similar_tree_result(const EdgeColoredGraph& graph, const ColoredForest& tree,
                                          const SimilarityBounds& bounds,
                                          const ColorDistribution& distribution) {
  ordered_json doc = result_envelope("similar-tree");
  doc["distribution"] = distribution_object(graph, distribution);
  doc["lower"] = bounds_object(graph, bounds.lower);
  doc["upper"] = bounds_object(graph, bounds.upper);
  doc["forest"] = forest_object(tree);
  return dump_document(doc);
}

std::string serialize_exact_tree_result(const EdgeColoredGraph& graph, const ExactTreeResult& result,
                                        const ColorDistribution& distribution) {
  ordered_json doc = result_envelope("exact-tree");
  doc["distribution"] = distribution_object(graph, distribution);
  doc["representable"] = result.representable();
  doc["offending_color"] =
      result.representable() ? ordered_json(nullptr)
                             : ordered_json(graph.color_label(result.offending_color));
  doc["forest"] = result.tree ? forest_object(*result.tree) : ordered_json(nullptr);
  return dump_document(doc);
}

std::string serialize_partition_result(const EdgeColoredGraph& graph, const SearchReport& report,
                                       const SearchOptions& options_used) {
  ordered_json doc = result_envelope("partition");
  doc["mode"] = options_used.mode == SearchMode::Exact ? "exact" : "heuristic";
  doc["seed"] = options_used.seed;
  doc["workers"] = options_used.workers;
  doc["budget"] = options_used.node_budget;
  switch (report.outcome) {
    case SearchOutcome::Found:
      doc["outcome"] = "found";
      break;
    case SearchOutcome::Exhausted:
      doc["outcome"] = "exhausted";
      break;
    case SearchOutcome::BudgetExceeded:
      doc["outcome"] = "budget-exceeded";
      break;
  }
  doc["nodes_explored"] = report.nodes_explored;
  doc["instance"] = instance_object(graph, std::nullopt, std::nullopt, std::nullopt, std::nullopt);
  if (report.partition) {
    ordered_json trees = ordered_json::array();
    for (const auto& tree : report.partition->trees) {
      ordered_json edges = ordered_json::array();
      for (EdgeIndex idx : tree) edges.push_back(edge_triple(graph, idx));
      trees.push_back(std::move(edges));
    }
    doc["trees"] = std::move(trees);
  } else {
    doc["trees"] = nullptr;
  }
  return dump_document(doc);
}

std::string serialize_verify_result(const PartitionCheck& check) {
  ordered_json doc = result_envelope("verify");
  doc["valid"] = check.ok;
  doc["violation"] = check.ok ? ordered_json(nullptr) : ordered_json(check.violation);
  return dump_document(doc);
}

std::string serialize_oracle_diff_result(int m, bool checker_feasible, bool builder_found,
                                         bool oracle_exists, bool oracle_condition) {
  ordered_json doc = result_envelope("oracle-diff");
  doc["m"] = m;
  doc["checker_feasible"] = checker_feasible;
  doc["builder_found"] = builder_found;
  doc["oracle_exists"] = oracle_exists;
  doc["oracle_condition"] = oracle_condition;
  doc["agree"] = checker_feasible == builder_found && builder_found == oracle_exists &&
                 oracle_exists == oracle_condition;
  return dump_document(doc);
}

ParsedCheckResult parse_check_result(const std::string& text, const EdgeColoredGraph& host) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("check result: expected a JSON object");
  require_schema_version(doc, "check result");
  ParsedCheckResult result;
  result.m = as_int(member(doc, "m", "check result"), "m");
  const json& feasible = member(doc, "feasible", "check result");
  if (!feasible.is_boolean()) fail("feasible: expected a boolean");
  result.verdict.feasible = feasible.get<bool>();
  const json& cert = member(doc, "certificate", "check result");
  if (!cert.is_null()) {
    ViolationCertificate parsed;
    const json& colors = member(cert, "colors", "certificate");
    if (!colors.is_array()) fail("certificate.colors: expected an array");
    std::vector<ColorId> ids;
    for (std::size_t i = 0; i < colors.size(); ++i) {
      std::ostringstream ctx;
      ctx << "certificate.colors[" << i << "]";
      const std::string label = as_string(colors[i], ctx.str());
      try {
        ids.push_back(host.color_id(label));
      } catch (const std::invalid_argument&) {
        fail(ctx.str() + ": unknown color '" + label + "'");
      }
    }
    parsed.colors = ColorSet(std::move(ids));
    parsed.omega = as_int(member(cert, "omega", "certificate"), "certificate.omega");
    parsed.f_bound = as_int(member(cert, "f_bound", "certificate"), "certificate.f_bound");
    parsed.g_bound = as_int(member(cert, "g_bound", "certificate"), "certificate.g_bound");
    result.verdict.certificate = std::move(parsed);
  }
  return result;
}

std::optional<ColoredForest> parse_forest_result(const std::string& text,
                                                 const EdgeColoredGraph& host) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("forest result: expected a JSON object");
  require_schema_version(doc, "forest result");
  const json& forest = member(doc, "forest", "forest result");
  if (forest.is_null()) return std::nullopt;
  const json& edges = member(forest, "edges", "forest");
  if (!edges.is_array()) fail("forest.edges: expected an array");
  EdgeLookup lookup(host);
  std::vector<EdgeIndex> indices;
  indices.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::ostringstream ctx;
    ctx << "forest.edges[" << i << "]";
    const LabeledEdge edge = as_edge_triple(edges[i], ctx.str());
    indices.push_back(resolve_edge(lookup, host, edge, ctx.str()));
  }
  try {
    return ColoredForest(host, std::move(indices));
  } catch (const std::invalid_argument& e) {
    fail(std::string("forest: ") + e.what());
  }
}

ParsedPartitionDocument parse_partition_document(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("partition document: expected a JSON object");
  require_schema_version(doc, "partition document");
  const json& instance = member(doc, "instance", "partition document");
  if (!instance.is_object()) fail("instance: expected a JSON object");
  EdgeColoredGraph graph = parse_graph_fields(instance, "instance");

  const json& trees = member(doc, "trees", "partition document");
  if (trees.is_null()) fail("partition document has no trees to verify");
  if (!trees.is_array()) fail("trees: expected an array");
  EdgeLookup lookup(graph);
  std::vector<std::vector<EdgeIndex>> parsed_trees;
  parsed_trees.reserve(trees.size());
  for (std::size_t t = 0; t < trees.size(); ++t) {
    const json& tree = trees[t];
    std::ostringstream tree_ctx;
    tree_ctx << "trees[" << t << "]";
    if (!tree.is_array()) fail(tree_ctx.str() + ": expected an array");
    std::vector<EdgeIndex> indices;
    indices.reserve(tree.size());
    for (std::size_t i = 0; i < tree.size(); ++i) {
      std::ostringstream ctx;
      ctx << "trees[" << t << "][" << i << "]";
      const LabeledEdge edge = as_edge_triple(tree[i], ctx.str());
      indices.push_back(resolve_edge(lookup, graph, edge, ctx.str()));
    }
    parsed_trees.push_back(std::move(indices));
  }
  return {std::move(graph), std::move(parsed_trees)};
}

// ---------------------------------------------------------------------------
// DOT export

std::string to_dot(const EdgeColoredGraph& graph) {
  std::ostringstream out;
  dot_header(out, graph);
  for (EdgeIndex i = 0; i < graph.edge_count(); ++i) {
    const Edge& e = graph.edge(i);
    out << "  " << e.u << " -- " << e.v << " [label=\"" << dot_escape(graph.color_label(e.color))
        << "\", color=\"" << kDotPalette[e.color % kDotPalette.size()] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const ColoredForest& forest) {
  const EdgeColoredGraph& graph = forest.host();
  std::ostringstream out;
  dot_header(out, graph);
  for (EdgeIndex i = 0; i < graph.edge_count(); ++i) {
    const Edge& e = graph.edge(i);
    out << "  " << e.u << " -- " << e.v;
    if (forest.contains(i)) {
      out << " [label=\"" << dot_escape(graph.color_label(e.color)) << "\", color=\""
          << kDotPalette[e.color % kDotPalette.size()] << "\", penwidth=2]";
    } else {
      out << " [color=\"#bbbbbb\", style=dotted]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const EdgeColoredGraph& graph, const TreePartition& partition) {
  std::vector<int> owner(graph.edge_count(), -1);
  for (std::size_t t = 0; t < partition.trees.size(); ++t) {
    for (EdgeIndex idx : partition.trees[t]) {
      if (idx >= 0 && idx < graph.edge_count()) owner[idx] = static_cast<int>(t);
    }
  }
  std::ostringstream out;
  dot_header(out, graph);
  for (EdgeIndex i = 0; i < graph.edge_count(); ++i) {
    const Edge& e = graph.edge(i);
    out << "  " << e.u << " -- " << e.v << " [label=\"" << dot_escape(graph.color_label(e.color))
        << "\"";
    if (owner[i] >= 0) {
      out << ", tree=" << owner[i] << ", color=\"" << kDotPalette[owner[i] % kDotPalette.size()]
          << "\"";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// files

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("error while reading '" + path + "'");
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("error while writing '" + path + "'");
}

void write_instance_file(const std::string& path, const EdgeColoredGraph& graph) {
  write_text_file(path, serialize_instance(graph));
}

}  // namespace chroma

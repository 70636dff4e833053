#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chroma/colored_graph.hpp"
#include "chroma/construction.hpp"
#include "chroma/distribution.hpp"
#include "chroma/feasibility.hpp"
#include "chroma/partition_search.hpp"

namespace chroma {

inline constexpr const char* kSchemaVersion = "1";

// Input document failure, with a 1-based location when the underlying JSON
// was malformed (0 when the text parsed but the content was rejected).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message, int line = 0, int column = 0);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_ = 0;
  int column_ = 0;
};

// An instance document: graph plus whatever optional bounds and parameters
// the document carried. Bounds are densified over the color universe; in a
// present map, colors not mentioned get 0. A missing g means all zeros, a
// missing f means no cap (|E| per color).
struct ParsedInstance {
  EdgeColoredGraph graph;
  std::optional<std::vector<int>> g;
  std::optional<std::vector<int>> f;
  std::optional<int> m;
  std::optional<std::uint64_t> seed;
};

ParsedInstance parse_instance(const std::string& text);

std::string serialize_instance(const EdgeColoredGraph& graph,
                               const std::optional<std::vector<int>>& g = std::nullopt,
                               const std::optional<std::vector<int>>& f = std::nullopt,
                               std::optional<int> m = std::nullopt,
                               std::optional<std::uint64_t> seed = std::nullopt);

// Result documents, one per CLI command. All share the envelope
// {schema_version, tool, version, command}; all are two-space indented
// with keys in fixed order and a trailing newline, so identical inputs
// produce byte-identical output.
std::string serialize_check_result(const EdgeColoredGraph& graph, const FeasibilityVerdict& verdict,
                                   int m);
std::string serialize_forest_result(const std::string& command, const EdgeColoredGraph& graph,
                                    const std::optional<ColoredForest>& forest, int m);
std::string serialize_similar_tree_result(const EdgeColoredGraph& graph, const ColoredForest& tree,
                                          const SimilarityBounds& bounds,
                                          const ColorDistribution& distribution);
std::string serialize_exact_tree_result(const EdgeColoredGraph& graph, const ExactTreeResult& result,
                                        const ColorDistribution& distribution);
std::string serialize_partition_result(const EdgeColoredGraph& graph, const SearchReport& report,
                                       const SearchOptions& options_used);
std::string serialize_verify_result(const PartitionCheck& check);
std::string serialize_oracle_diff_result(int m, bool checker_feasible, bool builder_found,
                                         bool oracle_exists, bool oracle_condition);

struct ParsedCheckResult {
  int m = 1;
  FeasibilityVerdict verdict;
};

// Inverses of the serializers above, for the document shapes that carry
// domain objects. Edge triples are resolved against `host`, which must be
// the instance the document was produced from.
ParsedCheckResult parse_check_result(const std::string& text, const EdgeColoredGraph& host);
std::optional<ColoredForest> parse_forest_result(const std::string& text,
                                                 const EdgeColoredGraph& host);

struct ParsedPartitionDocument {
  EdgeColoredGraph graph;
  std::vector<std::vector<EdgeIndex>> trees;
};

// Reads the embedded instance and claimed trees of a partition document.
// Throws ParseError when the document has no trees to verify.
ParsedPartitionDocument parse_partition_document(const std::string& text);

// DOT/Graphviz exports. Edges carry their color label; forests draw
// non-forest host edges dotted gray; partitions color edges by tree.
std::string to_dot(const EdgeColoredGraph& graph);
std::string to_dot(const ColoredForest& forest);
std::string to_dot(const EdgeColoredGraph& graph, const TreePartition& partition);

// Whole-file helpers; both throw std::runtime_error on IO failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
void write_instance_file(const std::string& path, const EdgeColoredGraph& graph);

}  // namespace chroma

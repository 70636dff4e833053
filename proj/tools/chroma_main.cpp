// chroma: decide, build, and verify color-bounded spanning forests of
// edge-colored graphs, plus distribution-similar spanning trees and
// partitions of complete graphs into such trees.
//
// Exit codes: 0 positive result (feasible / found / valid / representable),
// 1 negative result, 2 usage, IO, parse, or precondition errors, 70
// internal invariant failures.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chroma/colored_graph.hpp"
#include "chroma/construction.hpp"
#include "chroma/distribution.hpp"
#include "chroma/feasibility.hpp"
#include "chroma/io.hpp"
#include "chroma/oracle.hpp"
#include "chroma/partition_search.hpp"

namespace {

std::string read_stdin() {
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return buffer.str();
}

std::string load_text(const std::string& path) {
  if (path.empty() || path == "-") return read_stdin();
  return chroma::read_text_file(path);
}

chroma::ParsedInstance load_instance(const std::string& path) {
  return chroma::parse_instance(load_text(path));
}

chroma::ColorBounds resolve_bounds(const chroma::ParsedInstance& instance) {
  const int colors = instance.graph.color_count();
  chroma::ColorBounds bounds;
  bounds.g = instance.g ? *instance.g : std::vector<int>(colors, 0);
  bounds.f = instance.f ? *instance.f : std::vector<int>(colors, instance.graph.edge_count());
  return bounds;
}

// precedence: --m flag, then the document, then 1
int resolve_m(const chroma::ParsedInstance& instance, int flag_m) {
  if (flag_m >= 0) return flag_m;
  if (instance.m) return *instance.m;
  return 1;
}

long long budget_from_environment() {
  const char* raw = std::getenv("CHROMA_BUDGET_NODES");
  if (raw == nullptr || *raw == '\0') return -1;
  char* end = nullptr;
  const long long value = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || value <= 0) {
    throw std::invalid_argument("CHROMA_BUDGET_NODES must be a positive integer");
  }
  return value;
}

int run_check(const std::string& file, int flag_m, const std::string& format) {
  const chroma::ParsedInstance instance = load_instance(file);
  const int m = resolve_m(instance, flag_m);
  const auto verdict = chroma::check_gf_spanning_forest(instance.graph, resolve_bounds(instance), m);
  if (format == "dot") {
    std::cout << chroma::to_dot(instance.graph);
  } else {
    std::cout << chroma::serialize_check_result(instance.graph, verdict, m);
  }
  return verdict.feasible ? 0 : 1;
}

int run_build(const std::string& file, int flag_m, const std::string& format) {
  const chroma::ParsedInstance instance = load_instance(file);
  const int m = resolve_m(instance, flag_m);
  const auto forest = chroma::build_gf_spanning_forest(instance.graph, resolve_bounds(instance), m);
  if (format == "dot") {
    if (!forest) {
      std::cerr << "infeasible: no forest to draw\n";
      return 1;
    }
    std::cout << chroma::to_dot(*forest);
  } else {
    std::cout << chroma::serialize_forest_result("build", instance.graph, forest, m);
  }
  return forest ? 0 : 1;
}

int run_gg_forest(const std::string& file, const std::string& format) {
  const chroma::ParsedInstance instance = load_instance(file);
  const std::vector<int> g =
      instance.g ? *instance.g : std::vector<int>(instance.graph.color_count(), 0);
  const auto forest = chroma::build_gg_forest(instance.graph, g);
  if (format == "dot") {
    if (!forest) {
      std::cerr << "infeasible: no forest to draw\n";
      return 1;
    }
    std::cout << chroma::to_dot(*forest);
  } else {
    const int m = instance.graph.vertex_count() -
                  static_cast<int>(chroma::ColorBounds{g, g}.g_total());
    std::cout << chroma::serialize_forest_result("gg-forest", instance.graph, forest, m);
  }
  return forest ? 0 : 1;
}

int run_similar_tree(const std::string& file, const std::string& format) {
  const chroma::ParsedInstance instance = load_instance(file);
  const auto bounds = chroma::similarity_bounds(instance.graph);
  const auto tree = chroma::build_similar_tree(instance.graph);
  if (format == "dot") {
    std::cout << chroma::to_dot(tree);
  } else {
    std::cout << chroma::serialize_similar_tree_result(instance.graph, tree, bounds,
                                                       chroma::color_distribution(instance.graph));
  }
  return 0;
}

int run_exact_tree(const std::string& file, const std::string& format) {
  const chroma::ParsedInstance instance = load_instance(file);
  const auto result = chroma::exact_distribution_tree(instance.graph);
  if (format == "dot") {
    if (!result.tree) {
      std::cerr << "not representable: no tree to draw\n";
      return 1;
    }
    std::cout << chroma::to_dot(*result.tree);
  } else {
    std::cout << chroma::serialize_exact_tree_result(instance.graph, result,
                                                     chroma::color_distribution(instance.graph));
  }
  return result.representable() ? 0 : 1;
}

int run_partition(const std::string& file, const std::string& mode, long long flag_budget,
                  std::uint64_t seed, int workers, const std::string& artifact,
                  const std::string& format) {
  const chroma::ParsedInstance instance = load_instance(file);
  chroma::SearchOptions options;
  options.mode = mode == "heuristic" ? chroma::SearchMode::Heuristic : chroma::SearchMode::Exact;
  options.seed = seed;
  options.workers = workers;
  options.artifact_path = artifact;
  if (flag_budget > 0) {
    options.node_budget = flag_budget;
  } else {
    const long long env_budget = budget_from_environment();
    options.node_budget = env_budget > 0 ? env_budget
                          : options.mode == chroma::SearchMode::Exact
                              ? chroma::kDefaultExactBudget
                              : chroma::kDefaultHeuristicBudget;
  }

  const chroma::SearchReport report = chroma::partition_similar_trees(instance.graph, options);
  std::cerr << "nodes explored: " << report.nodes_explored << ", elapsed: "
            << report.elapsed.count() << " ms\n";
  if (report.outcome == chroma::SearchOutcome::Exhausted && !artifact.empty()) {
    std::cerr << "search space exhausted; instance written to " << artifact << "\n";
  }
  if (format == "dot") {
    if (!report.partition) {
      std::cerr << "no partition to draw\n";
      return 1;
    }
    std::cout << chroma::to_dot(instance.graph, *report.partition);
  } else {
    std::cout << chroma::serialize_partition_result(instance.graph, report, options);
  }
  return report.outcome == chroma::SearchOutcome::Found ? 0 : 1;
}

int run_verify(const std::string& file) {
  const chroma::ParsedPartitionDocument doc = chroma::parse_partition_document(load_text(file));
  const chroma::TreePartition partition{&doc.graph, doc.trees};
  const chroma::PartitionCheck check = chroma::verify_partition(doc.graph, partition);
  std::cout << chroma::serialize_verify_result(check);
  return check.ok ? 0 : 1;
}

int run_gen(int order, int palette, std::uint64_t seed, const std::string& profile,
            const std::string& format) {
  chroma::ColoringProfile parsed = chroma::ColoringProfile::Uniform;
  if (profile == "skewed") parsed = chroma::ColoringProfile::Skewed;
  if (profile == "proper-ish") parsed = chroma::ColoringProfile::ProperIsh;
  const auto graph = chroma::random_complete_coloring(order, palette, seed, parsed);
  if (format == "dot") {
    std::cout << chroma::to_dot(graph);
  } else {
    std::cout << chroma::serialize_instance(graph, std::nullopt, std::nullopt, std::nullopt, seed);
  }
  return 0;
}

int run_oracle_diff(const std::string& file, int flag_m) {
  const chroma::ParsedInstance instance = load_instance(file);
  const int m = resolve_m(instance, flag_m);
  const chroma::ColorBounds bounds = resolve_bounds(instance);
  const bool checker = chroma::check_gf_spanning_forest(instance.graph, bounds, m).feasible;
  const bool builder = chroma::build_gf_spanning_forest(instance.graph, bounds, m).has_value();
  const bool oracle_exists = chroma::brute_force_gf_exists(instance.graph, bounds, m);
  const bool oracle_condition = chroma::brute_force_condition(instance.graph, bounds, m);
  std::cout << chroma::serialize_oracle_diff_result(m, checker, builder, oracle_exists,
                                                    oracle_condition);
  const bool agree =
      checker == builder && builder == oracle_exists && oracle_exists == oracle_condition;
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"color-bounded spanning forests of edge-colored graphs"};
  app.require_subcommand(1);

  std::string file;
  int flag_m = -1;
  std::string format = "json";
  std::string mode = "exact";
  long long flag_budget = -1;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string artifact = "counterexample.json";
  int order = 0;
  int palette = 0;
  std::string profile = "uniform";

  const auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "instance document, '-' or absent for stdin");
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "dot"}))
        ->capture_default_str();
  };

  auto* check = app.add_subcommand("check", "decide whether a bounded spanning forest exists");
  add_file(check);
  add_format(check);
  check->add_option("--m", flag_m, "required component count (overrides the document)");

  auto* build = app.add_subcommand("build", "construct a bounded spanning forest");
  add_file(build);
  add_format(build);
  build->add_option("--m", flag_m, "required component count (overrides the document)");

  auto* gg = app.add_subcommand("gg-forest", "construct a forest with exact per-color counts");
  add_file(gg);
  add_format(gg);

  auto* similar = app.add_subcommand("similar-tree",
                                     "spanning tree tracking the host color distribution");
  add_file(similar);
  add_format(similar);

  auto* exact = app.add_subcommand("exact-tree",
                                   "spanning tree with exactly the host color distribution");
  add_file(exact);
  add_format(exact);

  auto* partition = app.add_subcommand("partition",
                                       "partition a complete graph into distribution-similar "
                                       "spanning trees");
  add_file(partition);
  add_format(partition);
  partition->add_option("--mode", mode, "search strategy")
      ->check(CLI::IsMember({"exact", "heuristic"}))
      ->capture_default_str();
  partition->add_option("--budget", flag_budget,
                        "node budget (default: CHROMA_BUDGET_NODES or the mode default)");
  partition->add_option("--seed", seed, "random seed for heuristic restarts")
      ->capture_default_str();
  partition->add_option("--workers", workers, "parallel workers")->capture_default_str();
  partition->add_option("--artifact", artifact,
                        "where to write instances whose search space was exhausted")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "verify a partition document");
  add_file(verify);

  auto* gen = app.add_subcommand("gen", "generate a random complete colored instance");
  gen->add_option("--order", order, "vertex count (even, at least 6)")->required();
  gen->add_option("--colors", palette, "number of colors")->required();
  gen->add_option("--seed", seed, "random seed")->capture_default_str();
  gen->add_option("--profile", profile, "coloring profile")
      ->check(CLI::IsMember({"uniform", "skewed", "proper-ish"}))
      ->capture_default_str();
  add_format(gen);

  auto* diff = app.add_subcommand("oracle-diff",
                                  "compare checker, builder, and brute-force oracles");
  add_file(diff);
  diff->add_option("--m", flag_m, "required component count (overrides the document)");

  int exit_code = 0;
  check->callback([&] { exit_code = run_check(file, flag_m, format); });
  build->callback([&] { exit_code = run_build(file, flag_m, format); });
  gg->callback([&] { exit_code = run_gg_forest(file, format); });
  similar->callback([&] { exit_code = run_similar_tree(file, format); });
  exact->callback([&] { exit_code = run_exact_tree(file, format); });
  partition->callback([&] {
    exit_code = run_partition(file, mode, flag_budget, seed, workers, artifact, format);
  });
  verify->callback([&] { exit_code = run_verify(file); });
  gen->callback([&] { exit_code = run_gen(order, palette, seed, profile, format); });
  diff->callback([&] { exit_code = run_oracle_diff(file, flag_m); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "welldom/graph.hpp"

namespace welldom {

struct GeneratorConfig {
  int max_n = 10;
  int min_n = 1;
  std::vector<int> forbidden_cycles;
  std::uint64_t seed = 1;
  int count = 100;
  /// Emit connected graphs only.
  bool connected = false;
};

/// Deterministic stream of random graphs without the forbidden cycle lengths.
/// Each graph comes from one of: sparse G(n, p) with rejection, a random
/// tree, a tree with triangles hung on some edges, a partition into small
/// cliques around simplicial centers (family F, mostly), or a tree grown by
/// chords that keep the forbidden lengths absent. Every emitted graph is re-checked
/// with contains_cycle_of_length.
class FamilyGenerator {
 public:
  static constexpr int kRejectionBudget = 20000;
  /// G(n, p) draws per graph before falling back to a structured generator.
  static constexpr int kSparseAttempts = 500;

  /// Throws DomainError on an invalid configuration.
  explicit FamilyGenerator(GeneratorConfig config);

  /// Throws ResourceError when no generator yields an admissible graph
  /// within the rejection budget.
  Graph next();
  /// The full stream of `count` graphs.
  std::vector<Graph> generate();

  const GeneratorConfig& config() const { return config_; }

 private:
  int uniform(int lo, int hi);
  bool acceptable(const Graph& g) const;
  std::optional<Graph> sparse_random(int n);
  Graph random_tree(int n);
  Graph tree_with_triangles(int n);
  Graph simplicial_partition(int n);
  Graph grown(int n);

  GeneratorConfig config_;
  std::mt19937_64 rng_;
};

/// Convenience wrapper: FamilyGenerator(cfg).generate().
std::vector<Graph> generate_family(const GeneratorConfig& config);

}  // namespace welldom

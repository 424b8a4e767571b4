#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sym_matrix.hpp"

namespace rcd {

// Simple undirected graph: dense 0/1 adjacency, zero diagonal, no self loops.
class Graph {
 public:
  explicit Graph(Matrix adjacency);

  int num_nodes() const { return static_cast<int>(adj_.rows()); }
  int64_t num_edges() const;
  const Matrix& adjacency() const { return adj_; }
  bool has_edge(int i, int j) const { return adj_(i, j) != 0.0; }
  std::vector<int> degrees() const;

 private:
  Matrix adj_;
};

enum class OutlierKind { none, dense_clique, random_attach, hub, paper_mix };

struct OutlierSpec {
  int count = 0;
  OutlierKind kind = OutlierKind::none;
  double clique_density = 0.7;      // dense_clique / paper_mix: density of the
                                    // outlier-outlier block W
  double attach_probability = 0.0;  // random_attach: Bernoulli parameter shared
                                    // by every outlier column of Z
  int hub_degree = 0;               // hub: expected degree target
};

struct GsbmSpec {
  std::vector<int> cluster_sizes;
  Matrix connectivity;  // r x r symmetric, entries in [0, 1]
  OutlierSpec outliers;
  bool allow_nonpositive_gap = false;  // accept p_minus - q_plus <= 0

  int num_clusters() const { return static_cast<int>(cluster_sizes.size()); }
  int num_inliers() const;
  int min_cluster_size() const;
  int total_nodes() const { return num_inliers() + outliers.count; }
  double p_minus() const;  // min within-group density
  double q_plus() const;   // max cross-group density (0 when r == 1)
  double gap() const { return p_minus() - q_plus(); }
  void validate() const;   // throws std::invalid_argument
};

// Node labels: 1..r for inliers, r+1 for outliers.
struct GroundTruth {
  std::vector<int> labels;
  int num_clusters = 0;

  int size() const { return static_cast<int>(labels.size()); }
  bool is_outlier(int i) const { return labels[i] == num_clusters + 1; }
  int num_inliers() const;
  int num_outliers() const { return size() - num_inliers(); }
};

// Draw a GSBM graph in block order (inlier clusters first, outliers last).
// Deterministic for a fixed seed; every (seed, block, entry) draw comes from
// an independent counter stream.
std::pair<Graph, GroundTruth> generate(const GsbmSpec& spec, uint64_t seed);

// Relabel node i to perm[i] (0-based); adjacency is conjugated accordingly.
std::pair<Graph, GroundTruth> apply_permutation(const Graph& g, const GroundTruth& t,
                                                const std::vector<int>& perm);

struct LoadOptions {
  bool largest_component = false;
  std::string labels_path;  // empty = no labels
};

struct LoadedGraph {
  Graph graph;
  std::vector<std::string> node_ids;  // index -> original id
  std::optional<GroundTruth> truth;
};

// Edge list: one "id id" pair per line, '#' comments, duplicates collapsed,
// self loops dropped, direction ignored. Labels file: "id label" per line.
LoadedGraph load_edge_list(const std::string& path, const LoadOptions& options = {});

}  // namespace rcd

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "gsbm.hpp"

using rcd::Graph;
using rcd::GroundTruth;
using rcd::GsbmSpec;
using rcd::Matrix;
using rcd::OutlierKind;

namespace {

GsbmSpec two_block_spec(int l1, int l2, double p, double q) {
  GsbmSpec spec;
  spec.cluster_sizes = {l1, l2};
  spec.connectivity.resize(2, 2);
  spec.connectivity << p, q, q, p;
  return spec;
}

Matrix path3() {
  Matrix a = Matrix::Zero(3, 3);
  a(0, 1) = a(1, 0) = 1.0;
  a(1, 2) = a(2, 1) = 1.0;
  return a;
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& contents) {
    path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("spec validation") {
  auto spec = two_block_spec(5, 5, 0.5, 0.2);
  CHECK_NOTHROW(spec.validate());
  CHECK(spec.p_minus() == doctest::Approx(0.5));
  CHECK(spec.q_plus() == doctest::Approx(0.2));
  CHECK(spec.gap() == doctest::Approx(0.3));

  auto zero_cluster = spec;
  zero_cluster.cluster_sizes = {5, 0};
  CHECK_THROWS_AS(zero_cluster.validate(), std::invalid_argument);

  auto bad_prob = spec;
  bad_prob.connectivity(0, 0) = 1.5;
  CHECK_THROWS_AS(bad_prob.validate(), std::invalid_argument);

  auto inverted = two_block_spec(5, 5, 0.2, 0.5);  // q > p
  CHECK_THROWS_AS(inverted.validate(), std::invalid_argument);
  inverted.allow_nonpositive_gap = true;
  CHECK_NOTHROW(inverted.validate());
}

TEST_CASE("generate: probability-1 edges give the complete graph") {
  GsbmSpec spec;
  spec.cluster_sizes = {3};
  spec.connectivity = Matrix::Constant(1, 1, 1.0);
  for (uint64_t seed : {0ull, 1ull, 12345ull}) {
    auto [g, t] = rcd::generate(spec, seed);
    CHECK(g.num_nodes() == 3);
    CHECK(g.num_edges() == 3);
    CHECK(t.labels == std::vector<int>{1, 1, 1});
  }
}

TEST_CASE("generate: empirical density over many seeds") {
  // 8 nodes, every pair density 0.5: the mean over 10^4 seeds stays within
  // 3 sigma of 0.5 (sigma for 28 * 10^4 fair coin flips).
  auto spec = two_block_spec(4, 4, 0.5, 0.5);
  spec.allow_nonpositive_gap = true;
  int64_t edges = 0;
  const int trials = 10000;
  for (int s = 0; s < trials; ++s) {
    auto [g, t] = rcd::generate(spec, static_cast<uint64_t>(s));
    edges += g.num_edges();
  }
  const double pairs = 28.0 * trials;
  const double density = edges / pairs;
  const double sigma = std::sqrt(0.25 / pairs);
  CHECK(std::abs(density - 0.5) <= 3.0 * sigma);
}

TEST_CASE("generate: block densities match the connectivity matrix") {
  GsbmSpec spec;
  spec.cluster_sizes = {100, 100};
  spec.connectivity.resize(2, 2);
  spec.connectivity << 0.3, 0.15, 0.15, 0.25;
  auto [g, t] = rcd::generate(spec, 99);
  const Matrix& a = g.adjacency();

  auto block_density = [&](int r0, int r1, int c0, int c1, bool diag_block) {
    double count = 0.0, pairs = 0.0;
    for (int i = r0; i < r1; ++i)
      for (int j = c0; j < c1; ++j) {
        if (diag_block && j <= i) continue;
        count += a(i, j);
        pairs += 1.0;
      }
    return std::make_pair(count / pairs, pairs);
  };

  auto [d00, p00] = block_density(0, 100, 0, 100, true);
  auto [d11, p11] = block_density(100, 200, 100, 200, true);
  auto [d01, p01] = block_density(0, 100, 100, 200, false);
  CHECK(std::abs(d00 - 0.30) <= 3.0 * std::sqrt(0.30 * 0.70 / p00));
  CHECK(std::abs(d11 - 0.25) <= 3.0 * std::sqrt(0.25 * 0.75 / p11));
  CHECK(std::abs(d01 - 0.15) <= 3.0 * std::sqrt(0.15 * 0.85 / p01));
}

TEST_CASE("generate: paper-style outlier mix") {
  auto spec = two_block_spec(500, 500, 0.17, 0.11);
  spec.outliers.count = 30;
  spec.outliers.kind = OutlierKind::paper_mix;
  spec.outliers.clique_density = 0.7;
  auto [g, t] = rcd::generate(spec, 7);
  CHECK(g.num_nodes() == 1030);
  CHECK(t.num_inliers() == 1000);
  CHECK(t.num_outliers() == 30);
  for (int i = 0; i < 1000; ++i) CHECK(!t.is_outlier(i));
  for (int i = 1000; i < 1030; ++i) CHECK(t.is_outlier(i));

  // W block ~ Bernoulli(0.7) over C(30,2) pairs.
  const Matrix& a = g.adjacency();
  double w_edges = 0.0;
  for (int i = 1000; i < 1030; ++i)
    for (int j = i + 1; j < 1030; ++j) w_edges += a(i, j);
  const double w_density = w_edges / 435.0;
  CHECK(std::abs(w_density - 0.7) <= 3.0 * std::sqrt(0.21 / 435.0));

  // Z block mean ~ E[U^2] = 1/3; variance dominated by the 1000 beta draws
  // (var(U^2) = 4/45), plus the Bernoulli noise given beta.
  double z_edges = 0.0;
  for (int i = 0; i < 1000; ++i)
    for (int j = 1000; j < 1030; ++j) z_edges += a(i, j);
  const double z_density = z_edges / (1000.0 * 30.0);
  const double sigma = std::sqrt((4.0 / 45.0) / 1000.0 + (2.0 / 9.0) / 30000.0);
  CHECK(std::abs(z_density - 1.0 / 3.0) <= 3.0 * sigma);
}

TEST_CASE("generate is deterministic per seed") {
  auto spec = two_block_spec(20, 20, 0.6, 0.1);
  spec.outliers.count = 5;
  spec.outliers.kind = OutlierKind::dense_clique;
  auto [g1, t1] = rcd::generate(spec, 1234);
  auto [g2, t2] = rcd::generate(spec, 1234);
  CHECK(g1.adjacency() == g2.adjacency());
  CHECK(t1.labels == t2.labels);
  auto [g3, t3] = rcd::generate(spec, 1235);
  CHECK(g1.adjacency() != g3.adjacency());
}

TEST_CASE("generate: other outlier kinds produce the declared shapes") {
  auto spec = two_block_spec(30, 30, 0.8, 0.1);
  spec.outliers.count = 4;

  spec.outliers.kind = OutlierKind::dense_clique;
  spec.outliers.clique_density = 1.0;
  {
    auto [g, t] = rcd::generate(spec, 5);
    // Outliers form a clique and have no inlier links.
    for (int i = 60; i < 64; ++i)
      for (int j = 60; j < 64; ++j)
        if (i != j) CHECK(g.adjacency()(i, j) == 1.0);
    for (int i = 0; i < 60; ++i)
      for (int j = 60; j < 64; ++j) CHECK(g.adjacency()(i, j) == 0.0);
  }

  spec.outliers.kind = OutlierKind::random_attach;
  spec.outliers.attach_probability = 1.0;
  {
    auto [g, t] = rcd::generate(spec, 5);
    for (int i = 0; i < 60; ++i)
      for (int j = 60; j < 64; ++j) CHECK(g.adjacency()(i, j) == 1.0);
    for (int i = 60; i < 64; ++i)
      for (int j = i + 1; j < 64; ++j) CHECK(g.adjacency()(i, j) == 0.0);
  }

  spec.outliers.kind = OutlierKind::hub;
  spec.outliers.hub_degree = 63;  // connect to everything
  {
    auto [g, t] = rcd::generate(spec, 5);
    auto deg = g.degrees();
    for (int i = 60; i < 64; ++i) CHECK(deg[i] == 63);
  }
}

TEST_CASE("apply_permutation: identity, involution, hand case") {
  Graph g{path3()};
  GroundTruth t{{1, 1, 2}, 2};

  auto [gi, ti] = rcd::apply_permutation(g, t, {0, 1, 2});
  CHECK(gi.adjacency() == g.adjacency());
  CHECK(ti.labels == t.labels);

  auto [gs, ts] = rcd::apply_permutation(g, t, {1, 0, 2});
  auto [gss, tss] = rcd::apply_permutation(gs, ts, {1, 0, 2});
  CHECK(gss.adjacency() == g.adjacency());
  CHECK(tss.labels == t.labels);

  // Nodes 1,2,3 go to positions 3,1,2 (0-based: 0->2, 1->0, 2->1):
  // path 1-2-3 becomes path 3-1-2, i.e. edges (2,0) and (0,1).
  auto [gp, tp] = rcd::apply_permutation(g, t, {2, 0, 1});
  Matrix expected = Matrix::Zero(3, 3);
  expected(2, 0) = expected(0, 2) = 1.0;
  expected(0, 1) = expected(1, 0) = 1.0;
  CHECK(gp.adjacency() == expected);
  CHECK(tp.labels == std::vector<int>{1, 2, 1});

  CHECK_THROWS_AS(rcd::apply_permutation(g, t, {0, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(rcd::apply_permutation(g, t, {0, 1}), std::invalid_argument);
}

TEST_CASE("apply_permutation preserves the degree multiset") {
  auto spec = two_block_spec(10, 10, 0.7, 0.2);
  auto [g, t] = rcd::generate(spec, 3);
  std::vector<int> perm{5,  3,  9,  0,  1,  2,  4,  8,  7,  6,
                        15, 13, 19, 10, 11, 12, 14, 18, 17, 16};
  auto [gp, tp] = rcd::apply_permutation(g, t, perm);
  auto d0 = g.degrees();
  auto d1 = gp.degrees();
  std::sort(d0.begin(), d0.end());
  std::sort(d1.begin(), d1.end());
  CHECK(d0 == d1);
}

TEST_CASE("degrees: fixed cases") {
  Matrix k3 = Matrix::Ones(3, 3) - Matrix::Identity(3, 3);
  CHECK(Graph{k3}.degrees() == std::vector<int>{2, 2, 2});
  CHECK(Graph{Matrix::Zero(4, 4)}.degrees() == std::vector<int>{0, 0, 0, 0});
  CHECK(Graph{path3()}.degrees() == std::vector<int>{1, 2, 1});
}

TEST_CASE("graph invariants rejected at construction") {
  Matrix self_loop = Matrix::Zero(2, 2);
  self_loop(0, 0) = 1.0;
  CHECK_THROWS_AS(Graph{self_loop}, std::invalid_argument);

  Matrix weighted = Matrix::Zero(2, 2);
  weighted(0, 1) = weighted(1, 0) = 0.5;
  CHECK_THROWS_AS(Graph{weighted}, std::invalid_argument);

  Matrix asym = Matrix::Zero(2, 2);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(Graph{asym}, std::invalid_argument);
}

TEST_CASE("load_edge_list: dedup, self loops, comments") {
  TempFile f("rcd_edges_basic.txt", "a b\nb a\na a\n# comment\n\n");
  auto loaded = rcd::load_edge_list(f.path.string());
  CHECK(loaded.graph.num_nodes() == 2);
  CHECK(loaded.graph.num_edges() == 1);
  CHECK(loaded.node_ids == std::vector<std::string>{"a", "b"});
  CHECK(!loaded.truth.has_value());
}

TEST_CASE("load_edge_list: largest component") {
  TempFile f("rcd_edges_comp.txt", "1 2\n2 3\n4 5\n");
  rcd::LoadOptions opt;
  opt.largest_component = true;
  auto loaded = rcd::load_edge_list(f.path.string(), opt);
  CHECK(loaded.graph.num_nodes() == 3);
  CHECK(loaded.graph.num_edges() == 2);
  CHECK(loaded.graph.degrees() == std::vector<int>{1, 2, 1});
  CHECK(loaded.node_ids == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("load_edge_list: labels") {
  TempFile f("rcd_edges_lab.txt", "a b\nb c\nc a\nd e\n");
  TempFile lab("rcd_labels_lab.txt", "a red\nb red\nc blue\nd blue\ne blue\n");
  rcd::LoadOptions opt;
  opt.labels_path = lab.path.string();
  auto loaded = rcd::load_edge_list(f.path.string(), opt);
  REQUIRE(loaded.truth.has_value());
  CHECK(loaded.truth->num_clusters == 2);
  CHECK(loaded.truth->labels == std::vector<int>{1, 1, 2, 2, 2});

  opt.largest_component = true;
  auto restricted = rcd::load_edge_list(f.path.string(), opt);
  REQUIRE(restricted.truth.has_value());
  CHECK(restricted.graph.num_nodes() == 3);
  CHECK(restricted.truth->labels == std::vector<int>{1, 1, 2});
}

TEST_CASE("load_edge_list: errors carry context") {
  TempFile bad("rcd_edges_bad.txt", "a b\nc\n");
  try {
    rcd::load_edge_list(bad.path.string());
    FAIL("expected malformed-line error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  TempFile f("rcd_edges_ok.txt", "a b\n");
  TempFile lab("rcd_labels_unknown.txt", "a x\nz y\n");
  rcd::LoadOptions opt;
  opt.labels_path = lab.path.string();
  CHECK_THROWS_AS(rcd::load_edge_list(f.path.string(), opt), std::runtime_error);

  CHECK_THROWS_AS(rcd::load_edge_list("/nonexistent/rcd_nope.txt"), std::runtime_error);
}

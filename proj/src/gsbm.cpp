#include "gsbm.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "prng.hpp"

namespace rcd {

namespace {

// Stream ids for the counter-based generator. One stream per logical block
// keeps every entry draw independent of generation order.
enum Stream : uint64_t {
  kInlierBlock = 1,
  kOutlierCross = 2,   // Z
  kOutlierBlock = 3,   // W
  kBetaRow = 4,        // per-inlier-row mean for paper_mix
};

}  // namespace

Graph::Graph(Matrix adjacency) : adj_(std::move(adjacency)) {
  const Eigen::Index n = adj_.rows();
  if (n < 1 || adj_.cols() != n)
    throw std::invalid_argument("Graph: adjacency must be square with n >= 1");
  for (Eigen::Index j = 0; j < n; ++j) {
    if (adj_(j, j) != 0.0)
      throw std::invalid_argument("Graph: self loops are not allowed");
    for (Eigen::Index i = j + 1; i < n; ++i) {
      const double v = adj_(i, j);
      if (v != 0.0 && v != 1.0)
        throw std::invalid_argument("Graph: adjacency entries must be 0 or 1");
      if (v != adj_(j, i))
        throw std::invalid_argument("Graph: adjacency must be symmetric");
    }
  }
}

int64_t Graph::num_edges() const {
  return static_cast<int64_t>(adj_.sum()) / 2;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(num_nodes());
  for (int i = 0; i < num_nodes(); ++i)
    d[i] = static_cast<int>(adj_.row(i).sum());
  return d;
}

int GsbmSpec::num_inliers() const {
  int n = 0;
  for (int s : cluster_sizes) n += s;
  return n;
}

int GsbmSpec::min_cluster_size() const {
  return *std::min_element(cluster_sizes.begin(), cluster_sizes.end());
}

double GsbmSpec::p_minus() const {
  double p = 1.0;
  for (int i = 0; i < num_clusters(); ++i) p = std::min(p, connectivity(i, i));
  return p;
}

double GsbmSpec::q_plus() const {
  double q = 0.0;
  for (int i = 0; i < num_clusters(); ++i)
    for (int j = i + 1; j < num_clusters(); ++j) q = std::max(q, connectivity(i, j));
  return q;
}

void GsbmSpec::validate() const {
  const int r = num_clusters();
  if (r < 1) throw std::invalid_argument("GsbmSpec: need at least one cluster");
  for (int s : cluster_sizes)
    if (s < 1) throw std::invalid_argument("GsbmSpec: zero-size cluster");
  if (connectivity.rows() != r || connectivity.cols() != r)
    throw std::invalid_argument("GsbmSpec: connectivity must be r x r");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const double b = connectivity(i, j);
      if (!(b >= 0.0 && b <= 1.0))
        throw std::invalid_argument("GsbmSpec: connectivity entries must be in [0,1]");
      if (connectivity(i, j) != connectivity(j, i))
        throw std::invalid_argument("GsbmSpec: connectivity must be symmetric");
    }
  if (outliers.count < 0) throw std::invalid_argument("GsbmSpec: negative outlier count");
  if (outliers.count > 0 && outliers.kind == OutlierKind::none)
    throw std::invalid_argument("GsbmSpec: outlier count > 0 needs an outlier kind");
  if (!(outliers.clique_density >= 0.0 && outliers.clique_density <= 1.0) ||
      !(outliers.attach_probability >= 0.0 && outliers.attach_probability <= 1.0))
    throw std::invalid_argument("GsbmSpec: outlier probabilities must be in [0,1]");
  if (outliers.hub_degree < 0)
    throw std::invalid_argument("GsbmSpec: negative hub degree");
  if (r > 1 && gap() <= 0.0 && !allow_nonpositive_gap)
    throw std::invalid_argument(
        "GsbmSpec: density gap p- - q+ <= 0; set allow_nonpositive_gap to force");
}

int GroundTruth::num_inliers() const {
  int n = 0;
  for (int l : labels) n += (l <= num_clusters) ? 1 : 0;
  return n;
}

std::pair<Graph, GroundTruth> generate(const GsbmSpec& spec, uint64_t seed) {
  spec.validate();
  const int r = spec.num_clusters();
  const int n = spec.num_inliers();
  const int m = spec.outliers.count;
  const int total = n + m;

  GroundTruth truth;
  truth.num_clusters = r;
  truth.labels.resize(total);
  {
    int pos = 0;
    for (int c = 0; c < r; ++c)
      for (int k = 0; k < spec.cluster_sizes[c]; ++k) truth.labels[pos++] = c + 1;
    for (int k = 0; k < m; ++k) truth.labels[pos++] = r + 1;
  }

  Matrix a = Matrix::Zero(total, total);
  const auto nn = static_cast<uint64_t>(total);
  const CounterRng inlier_rng(seed, kInlierBlock);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double p = spec.connectivity(truth.labels[i] - 1, truth.labels[j] - 1);
      if (inlier_rng.bernoulli(p, static_cast<uint64_t>(i) * nn + j))
        a(i, j) = a(j, i) = 1.0;
    }
  }

  if (m > 0) {
    const CounterRng cross_rng(seed, kOutlierCross);
    const CounterRng w_rng(seed, kOutlierBlock);
    const CounterRng beta_rng(seed, kBetaRow);
    switch (spec.outliers.kind) {
      case OutlierKind::none:
        break;
      case OutlierKind::dense_clique: {
        for (int i = n; i < total; ++i)
          for (int j = i + 1; j < total; ++j)
            if (w_rng.bernoulli(spec.outliers.clique_density,
                                static_cast<uint64_t>(i) * nn + j))
              a(i, j) = a(j, i) = 1.0;
        break;
      }
      case OutlierKind::random_attach: {
        for (int i = 0; i < n; ++i)
          for (int j = n; j < total; ++j)
            if (cross_rng.bernoulli(spec.outliers.attach_probability,
                                    static_cast<uint64_t>(i) * nn + j))
              a(i, j) = a(j, i) = 1.0;
        break;
      }
      case OutlierKind::hub: {
        const double p =
            total > 1 ? std::min(1.0, static_cast<double>(spec.outliers.hub_degree) /
                                          (total - 1))
                      : 0.0;
        for (int i = 0; i < n; ++i)
          for (int j = n; j < total; ++j)
            if (cross_rng.bernoulli(p, static_cast<uint64_t>(i) * nn + j))
              a(i, j) = a(j, i) = 1.0;
        for (int i = n; i < total; ++i)
          for (int j = i + 1; j < total; ++j)
            if (w_rng.bernoulli(p, static_cast<uint64_t>(i) * nn + j))
              a(i, j) = a(j, i) = 1.0;
        break;
      }
      case OutlierKind::paper_mix: {
        // W ~ Bernoulli(clique_density); Z entry (i,j) ~ Bernoulli(beta_i)
        // with beta_i = U_i^2 drawn once per inlier row.
        std::vector<double> beta(n);
        for (int i = 0; i < n; ++i) {
          const double u = beta_rng.uniform01(static_cast<uint64_t>(i));
          beta[i] = u * u;
        }
        for (int i = 0; i < n; ++i)
          for (int j = n; j < total; ++j)
            if (cross_rng.bernoulli(beta[i], static_cast<uint64_t>(i) * nn + j))
              a(i, j) = a(j, i) = 1.0;
        for (int i = n; i < total; ++i)
          for (int j = i + 1; j < total; ++j)
            if (w_rng.bernoulli(spec.outliers.clique_density,
                                static_cast<uint64_t>(i) * nn + j))
              a(i, j) = a(j, i) = 1.0;
        break;
      }
    }
  }

  return {Graph(std::move(a)), std::move(truth)};
}

std::pair<Graph, GroundTruth> apply_permutation(const Graph& g, const GroundTruth& t,
                                                const std::vector<int>& perm) {
  const int n = g.num_nodes();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("apply_permutation: size mismatch");
  std::vector<char> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p])
      throw std::invalid_argument("apply_permutation: perm is not a bijection");
    seen[p] = 1;
  }
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(perm[i], perm[j]) = g.adjacency()(i, j);
  GroundTruth out;
  out.num_clusters = t.num_clusters;
  out.labels.resize(n);
  for (int i = 0; i < n; ++i) out.labels[perm[i]] = t.labels[i];
  return {Graph(std::move(a)), std::move(out)};
}

namespace {

std::vector<int> largest_component_nodes(int n, const std::set<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> comp(n, -1);
  int best_comp = -1, best_size = 0, ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    // BFS
    std::vector<int> queue{s};
    comp[s] = ncomp;
    int size = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      ++size;
      for (int v : adj[u])
        if (comp[v] == -1) {
          comp[v] = ncomp;
          queue.push_back(v);
        }
    }
    if (size > best_size) {
      best_size = size;
      best_comp = ncomp;
    }
    ++ncomp;
  }
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (comp[i] == best_comp) keep.push_back(i);
  return keep;
}

}  // namespace

LoadedGraph load_edge_list(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_edge_list: cannot open " + path);

  std::map<std::string, int> id_to_index;
  std::vector<std::string> ids;
  auto intern = [&](const std::string& id) {
    auto it = id_to_index.find(id);
    if (it != id_to_index.end()) return it->second;
    const int idx = static_cast<int>(ids.size());
    id_to_index.emplace(id, idx);
    ids.push_back(id);
    return idx;
  };

  std::set<std::pair<int, int>> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;  // blank or comment-only line
    if (!(ls >> b) || (ls >> extra))
      throw std::runtime_error("load_edge_list: malformed line " + std::to_string(lineno) +
                               " in " + path);
    const int u = intern(a), v = intern(b);
    if (u == v) continue;  // self loop
    edges.emplace(std::min(u, v), std::max(u, v));
  }

  if (ids.empty()) throw std::runtime_error("load_edge_list: no edges in " + path);

  // Optional labels, resolved against the full id set before any restriction.
  std::map<int, std::string> node_label;
  std::vector<std::string> label_names;  // first-appearance order
  if (!options.labels_path.empty()) {
    std::ifstream lin(options.labels_path);
    if (!lin) throw std::runtime_error("load_edge_list: cannot open " + options.labels_path);
    int lln = 0;
    while (std::getline(lin, line)) {
      ++lln;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string id, lab, extra;
      if (!(ls >> id)) continue;
      if (!(ls >> lab) || (ls >> extra))
        throw std::runtime_error("load_edge_list: malformed label line " +
                                 std::to_string(lln) + " in " + options.labels_path);
      auto it = id_to_index.find(id);
      if (it == id_to_index.end())
        throw std::runtime_error("load_edge_list: label line " + std::to_string(lln) +
                                 " references unknown node '" + id + "'");
      node_label[it->second] = lab;
      if (std::find(label_names.begin(), label_names.end(), lab) == label_names.end())
        label_names.push_back(lab);
    }
  }

  std::vector<int> keep;
  const int n_all = static_cast<int>(ids.size());
  if (options.largest_component) {
    keep = largest_component_nodes(n_all, edges);
  } else {
    keep.resize(n_all);
    for (int i = 0; i < n_all; ++i) keep[i] = i;
  }

  std::vector<int> new_index(n_all, -1);
  for (size_t k = 0; k < keep.size(); ++k) new_index[keep[k]] = static_cast<int>(k);

  const int n = static_cast<int>(keep.size());
  Matrix a = Matrix::Zero(n, n);
  for (auto [u, v] : edges) {
    const int nu = new_index[u], nv = new_index[v];
    if (nu >= 0 && nv >= 0) a(nu, nv) = a(nv, nu) = 1.0;
  }

  LoadedGraph out{Graph(std::move(a)), {}, std::nullopt};
  out.node_ids.resize(n);
  for (int k = 0; k < n; ++k) out.node_ids[k] = ids[keep[k]];

  if (!options.labels_path.empty()) {
    GroundTruth truth;
    truth.num_clusters = static_cast<int>(label_names.size());
    truth.labels.resize(n);
    for (int k = 0; k < n; ++k) {
      auto it = node_label.find(keep[k]);
      if (it == node_label.end())
        throw std::runtime_error("load_edge_list: node '" + ids[keep[k]] + "' has no label");
      const auto pos = std::find(label_names.begin(), label_names.end(), it->second);
      truth.labels[k] = static_cast<int>(pos - label_names.begin()) + 1;
    }
    out.truth = std::move(truth);
  }
  return out;
}

}  // namespace rcd

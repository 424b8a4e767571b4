#pragma once

#include <cstdint>

#include "clustering.hpp"
#include "gsbm.hpp"
#include "sym_matrix.hpp"

namespace rcd {

enum class LaplacianVariant { unnormalized, sym_normalized, random_walk_symmetrized };
enum class SpectralSource { adjacency, laplacian };

// Which end of the spectrum feeds the embedding. top_abs (largest |eigenvalue|)
// is the default; smallest is the classical rule for Laplacians, where the
// bottom eigenvectors carry the component structure.
enum class EigenRule { top_abs, smallest };

struct SpectralConfig {
  SpectralSource source = SpectralSource::laplacian;
  LaplacianVariant variant = LaplacianVariant::unnormalized;
  EigenRule eigen_rule = EigenRule::top_abs;
  int k = 2;
  int replicates = 100;
};

// unnormalized: D - A; sym_normalized: I - D^{-1/2} A D^{-1/2};
// random_walk_symmetrized: symmetrized I - D^{-1} A. Isolated nodes
// contribute zero rows to the normalized variants.
SymMatrix laplacian(const Graph& g, LaplacianVariant variant);

// N x k matrix whose columns are the selected eigenvectors.
Matrix spectral_embedding(const Graph& g, const SpectralConfig& cfg);

// K-means over the rows of an embedding. Depends on the rows only through
// pairwise distances, so it is invariant to eigenvector sign flips.
ClusterAssignment cluster_embedding(const Matrix& rows, int k, int replicates,
                                    uint64_t seed);

ClusterAssignment spectral_cluster(const Graph& g, const SpectralConfig& cfg,
                                   uint64_t seed);

}  // namespace rcd

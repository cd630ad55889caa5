#pragma once

#include "uor/encoder.hpp"

#include <string>
#include <vector>

namespace uor {

struct PcaResult {
    Matrix projected;   // samples x k
    Matrix components;  // features x k, unit columns
    Vector explained_variance;
    std::size_t rank = 0;  // numerical rank of the centered data
};

// Principal components by eigen-decomposition of the covariance. Each
// component's sign is fixed so its largest-magnitude loading is positive.
PcaResult pca(const Matrix& data, std::size_t k);

struct UmapConfig {
    std::size_t n_neighbors = 15;
    std::size_t n_epochs = 200;
    std::size_t negative_samples = 5;
    double learning_rate = 1.0;
    // Curve parameters for min_dist = 0.1, spread = 1.
    double a = 1.577;
    double b = 0.8951;
};

// Seeded 2-D UMAP-style neighbor embedding (exact kNN graph, fuzzy union,
// negative-sampling SGD) initialized from the top two principal components.
Matrix umap_embed(const Matrix& data, const UmapConfig& config, std::uint64_t seed);

struct ReducedRepresentations {
    Matrix intermediate;  // stage-1 PCA output
    Matrix points;        // stage-2 2-D coordinates
    std::vector<int> class_tags;
    std::size_t intermediate_dim = 0;
    std::vector<std::string> warnings;
};

ReducedRepresentations reduce_representations(const RepresentationBatch& batch, std::size_t intermediate_dim = 20,
                                              std::uint64_t seed = 0, const UmapConfig& config = {});

/// Mean silhouette coefficient. Members of singleton classes score 0.
double separability_score(const Matrix& points, const std::vector<int>& tags);

struct GeometrySummary {
    // Mean pairwise cosine inside each poisoned class (tag != 0), averaged over classes.
    double intra_class_cosine = 0.0;
    // Cosine between class centroids, all classes including clean.
    double inter_centroid_cosine_max = 0.0;
    double inter_centroid_cosine_mean = 0.0;
};

GeometrySummary geometry_summary(const RepresentationBatch& batch);

void write_coordinates_csv(const std::string& path, const ReducedRepresentations& reduced);
void write_scatter_svg(const std::string& path, const ReducedRepresentations& reduced, const std::string& title);

}  // namespace uor

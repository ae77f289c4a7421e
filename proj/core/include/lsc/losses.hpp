#ifndef LSC_LOSSES_HPP
#define LSC_LOSSES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lsc/matrix.hpp"
#include "lsc/rootsys.hpp"

namespace lsc {

/// b_s x n_dim matrix of encoder outputs.
using EmbeddingBatch = Matrix;

/// Per-sample class indices, all in [0, n_classes).
using LabelBatch = std::vector<std::int32_t>;

struct LossValue {
    double value = 0.0;
    std::vector<double> per_sample;
};

/// a.b / (|a||b|). Throws degenerate-input on a zero vector.
double cos_sim(std::span<const double> a, std::span<const double> b);

/// Radius penalty exp(max(x - r_c, 0)) - 1: zero inside the class ball,
/// strictly increasing beyond it.
double fd(double x, double r_c);

/// Rows of C selected by label, one per sample. The output allocation is
/// b_s x n_dim regardless of how many classes C holds.
Matrix gather_centers(const CenterMatrix& C, const LabelBatch& labels);

/// Elements allocated by the most recent gather_centers call on this
/// thread. Lets tests pin the center-side memory of a training step.
std::uint64_t gather_last_alloc_elems();

/// Mean cosine distance between embeddings and their gathered centers.
LossValue cos_loss(const EmbeddingBatch& Z, const Matrix& C_b);

/// Analytic d(cos_loss)/dZ, shape b_s x n_dim.
Matrix cos_loss_grad(const EmbeddingBatch& Z, const Matrix& C_b);

/// Sum over samples of fd(|z_j - C[y_j]|, r_{y_j}). Radii default to 1.
LossValue dist_loss(const EmbeddingBatch& Z, const LabelBatch& labels, const CenterMatrix& C);

/// Analytic d(dist_loss)/dZ.
Matrix dist_loss_grad(const EmbeddingBatch& Z, const LabelBatch& labels, const CenterMatrix& C);

/// dist_loss against pre-gathered center rows and per-sample radii; the
/// shape the training loop uses after its single gather.
LossValue dist_loss_gathered(const EmbeddingBatch& Z, const Matrix& C_b,
                             std::span<const double> radii_b);
Matrix dist_loss_grad_gathered(const EmbeddingBatch& Z, const Matrix& C_b,
                               std::span<const double> radii_b);

/// weight_dist * dist_loss + weight_cos * cos_loss.
LossValue combined_loss(const EmbeddingBatch& Z, const LabelBatch& labels, const CenterMatrix& C,
                        double weight_dist, double weight_cos);

Matrix combined_loss_grad(const EmbeddingBatch& Z, const LabelBatch& labels, const CenterMatrix& C,
                          double weight_dist, double weight_cos);

/// argmin over classes of Euclidean distance; ties to the lowest index.
LabelBatch assign_labels_dist(const EmbeddingBatch& Z, const CenterMatrix& C);

/// argmax over classes of cosine similarity; ties to the lowest index.
LabelBatch assign_labels_cos(const EmbeddingBatch& Z, const CenterMatrix& C);

/// Single-row form of assign_labels_cos; also the exactness reference and
/// fallback path of the fast assignment index.
std::int32_t assign_label_cos_row(std::span<const double> z, const CenterMatrix& C);

}  // namespace lsc

#endif  // LSC_LOSSES_HPP

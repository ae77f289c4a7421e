#include "lsc/losses.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lsc {

namespace {

thread_local std::uint64_t g_gather_alloc_elems = 0;

double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += a[k] * b[k];
    return s;
}

double norm(const double* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += a[k] * a[k];
    return std::sqrt(s);
}

void check_labels(const CenterMatrix& C, const LabelBatch& labels) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
        if (labels[j] < 0 || static_cast<std::size_t>(labels[j]) >= C.n_classes)
            throw error(errc::label_range,
                        "label " + std::to_string(labels[j]) + " at position " + std::to_string(j) +
                            " is outside [0, " + std::to_string(C.n_classes) + ")");
    }
}

double euclid(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double diff = a[k] - b[k];
        s += diff * diff;
    }
    return std::sqrt(s);
}

}  // namespace

double cos_sim(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw error(errc::shape_mismatch, "cos_sim: vector lengths differ");
    const double na = norm(a.data(), a.size());
    const double nb = norm(b.data(), b.size());
    if (na == 0.0 || nb == 0.0)
        throw error(errc::degenerate_input, "cos_sim: zero vector");
    return dot(a.data(), b.data(), a.size()) / (na * nb);
}

double fd(double x, double r_c) {
    return std::exp(std::max(x - r_c, 0.0)) - 1.0;
}

Matrix gather_centers(const CenterMatrix& C, const LabelBatch& labels) {
    if (labels.empty())
        throw error(errc::empty_input, "gather_centers: empty label batch");
    check_labels(C, labels);
    Matrix out(labels.size(), C.n_dim);
    g_gather_alloc_elems = static_cast<std::uint64_t>(out.rows) * out.cols;
    for (std::size_t j = 0; j < labels.size(); ++j)
        std::copy_n(C.centers.row(static_cast<std::size_t>(labels[j])), C.n_dim, out.row(j));
    return out;
}

std::uint64_t gather_last_alloc_elems() {
    return g_gather_alloc_elems;
}

LossValue cos_loss(const EmbeddingBatch& Z, const Matrix& C_b) {
    require_same_shape(Z, C_b, "cos_loss");
    if (Z.rows == 0) throw error(errc::empty_input, "cos_loss: empty batch");
    LossValue loss;
    loss.per_sample.resize(Z.rows);
    double total = 0.0;
    for (std::size_t j = 0; j < Z.rows; ++j) {
        loss.per_sample[j] = 1.0 - cos_sim(Z.row_span(j), C_b.row_span(j));
        total += loss.per_sample[j];
    }
    loss.value = total / static_cast<double>(Z.rows);
    return loss;
}

Matrix cos_loss_grad(const EmbeddingBatch& Z, const Matrix& C_b) {
    require_same_shape(Z, C_b, "cos_loss_grad");
    if (Z.rows == 0) throw error(errc::empty_input, "cos_loss_grad: empty batch");
    Matrix grad(Z.rows, Z.cols);
    const double inv_bs = 1.0 / static_cast<double>(Z.rows);
    for (std::size_t j = 0; j < Z.rows; ++j) {
        const double* z = Z.row(j);
        const double* c = C_b.row(j);
        const double nz = norm(z, Z.cols);
        const double nc = norm(c, Z.cols);
        if (nz == 0.0 || nc == 0.0)
            throw error(errc::degenerate_input, "cos_loss_grad: zero vector in row " + std::to_string(j));
        const double zc = dot(z, c, Z.cols);
        const double a = 1.0 / (nz * nc);
        const double b = zc / (nz * nz * nz * nc);
        double* g = grad.row(j);
        for (std::size_t k = 0; k < Z.cols; ++k)
            g[k] = -inv_bs * (c[k] * a - z[k] * b);
    }
    return grad;
}

LossValue dist_loss(const EmbeddingBatch& Z, const LabelBatch& labels, const CenterMatrix& C) {
    if (Z.rows != labels.size())
        throw error(errc::shape_mismatch, "dist_loss: batch and labels disagree");
    if (Z.cols != C.n_dim)
        throw error(errc::shape_mismatch, "dist_loss: embedding dim != center dim");
    check_labels(C, labels);
    LossValue loss;
    loss.per_sample.resize(Z.rows);
    double total = 0.0;
    for (std::size_t j = 0; j < Z.rows; ++j) {
        const std::size_t cls = static_cast<std::size_t>(labels[j]);
        loss.per_sample[j] = fd(euclid(Z.row(j), C.center(cls), Z.cols), C.radius(cls));
        total += loss.per_sample[j];
    }
    loss.value = total;  // Euclidean form is a sum, not a batch mean
    return loss;
}

Matrix dist_loss_grad(const EmbeddingBatch& Z, const LabelBatch& labels, const CenterMatrix& C) {
    if (Z.rows != labels.size())
        throw error(errc::shape_mismatch, "dist_loss_grad: batch and labels disagree");
    if (Z.cols != C.n_dim)
        throw error(errc::shape_mismatch, "dist_loss_grad: embedding dim != center dim");
    check_labels(C, labels);
    Matrix grad(Z.rows, Z.cols);
    for (std::size_t j = 0; j < Z.rows; ++j) {
        const std::size_t cls = static_cast<std::size_t>(labels[j]);
        const double* z = Z.row(j);
        const double* c = C.center(cls);
        const double x = euclid(z, c, Z.cols);
        const double r = C.radius(cls);
        if (x <= r || x == 0.0) continue;  // flat inside the ball
        const double coef = std::exp(x - r) / x;
        double* g = grad.row(j);
        for (std::size_t k = 0; k < Z.cols; ++k) g[k] = coef * (z[k] - c[k]);
    }
    return grad;
}

LossValue dist_loss_gathered(const EmbeddingBatch& Z, const Matrix& C_b,
                             std::span<const double> radii_b) {
    require_same_shape(Z, C_b, "dist_loss_gathered");
    if (radii_b.size() != Z.rows)
        throw error(errc::shape_mismatch, "dist_loss_gathered: radii size != batch size");
    LossValue loss;
    loss.per_sample.resize(Z.rows);
    double total = 0.0;
    for (std::size_t j = 0; j < Z.rows; ++j) {
        loss.per_sample[j] = fd(euclid(Z.row(j), C_b.row(j), Z.cols), radii_b[j]);
        total += loss.per_sample[j];
    }
    loss.value = total;
    return loss;
}

Matrix dist_loss_grad_gathered(const EmbeddingBatch& Z, const Matrix& C_b,
                               std::span<const double> radii_b) {
    require_same_shape(Z, C_b, "dist_loss_grad_gathered");
    if (radii_b.size() != Z.rows)
        throw error(errc::shape_mismatch, "dist_loss_grad_gathered: radii size != batch size");
    Matrix grad(Z.rows, Z.cols);
    for (std::size_t j = 0; j < Z.rows; ++j) {
        const double* z = Z.row(j);
        const double* c = C_b.row(j);
        const double x = euclid(z, c, Z.cols);
        if (x <= radii_b[j] || x == 0.0) continue;
        const double coef = std::exp(x - radii_b[j]) / x;
        double* g = grad.row(j);
        for (std::size_t k = 0; k < Z.cols; ++k) g[k] = coef * (z[k] - c[k]);
    }
    return grad;
}

LossValue combined_loss(const EmbeddingBatch& Z, const LabelBatch& labels, const CenterMatrix& C,
                        double weight_dist, double weight_cos) {
    if (weight_dist < 0.0 || weight_cos < 0.0 || (weight_dist == 0.0 && weight_cos == 0.0))
        throw error(errc::invalid_config, "combined_loss: weights must be >= 0 and not both zero");
    LossValue out;
    out.per_sample.assign(Z.rows, 0.0);
    if (weight_dist > 0.0) {
        LossValue d = dist_loss(Z, labels, C);
        out.value += weight_dist * d.value;
        for (std::size_t j = 0; j < Z.rows; ++j) out.per_sample[j] += weight_dist * d.per_sample[j];
    }
    if (weight_cos > 0.0) {
        LossValue c = cos_loss(Z, gather_centers(C, labels));
        out.value += weight_cos * c.value;
        for (std::size_t j = 0; j < Z.rows; ++j) out.per_sample[j] += weight_cos * c.per_sample[j];
    }
    return out;
}

Matrix combined_loss_grad(const EmbeddingBatch& Z, const LabelBatch& labels, const CenterMatrix& C,
                          double weight_dist, double weight_cos) {
    if (weight_dist < 0.0 || weight_cos < 0.0 || (weight_dist == 0.0 && weight_cos == 0.0))
        throw error(errc::invalid_config, "combined_loss_grad: weights must be >= 0 and not both zero");
    Matrix grad(Z.rows, Z.cols);
    if (weight_dist > 0.0) {
        Matrix gd = dist_loss_grad(Z, labels, C);
        for (std::size_t i = 0; i < grad.data.size(); ++i) grad.data[i] += weight_dist * gd.data[i];
    }
    if (weight_cos > 0.0) {
        Matrix gc = cos_loss_grad(Z, gather_centers(C, labels));
        for (std::size_t i = 0; i < grad.data.size(); ++i) grad.data[i] += weight_cos * gc.data[i];
    }
    return grad;
}

LabelBatch assign_labels_dist(const EmbeddingBatch& Z, const CenterMatrix& C) {
    if (Z.cols != C.n_dim)
        throw error(errc::shape_mismatch, "assign_labels_dist: embedding dim != center dim");
    LabelBatch out(Z.rows);
    for (std::size_t j = 0; j < Z.rows; ++j) {
        const double* z = Z.row(j);
        double best = 0.0;
        std::int32_t best_cls = -1;
        for (std::size_t i = 0; i < C.n_classes; ++i) {
            const double* c = C.center(i);
            double d2 = 0.0;
            for (std::size_t k = 0; k < Z.cols; ++k) {
                const double diff = z[k] - c[k];
                d2 += diff * diff;
            }
            if (best_cls < 0 || d2 < best) {
                best = d2;
                best_cls = static_cast<std::int32_t>(i);
            }
        }
        out[j] = best_cls;
    }
    return out;
}

std::int32_t assign_label_cos_row(std::span<const double> z, const CenterMatrix& C) {
    if (z.size() != C.n_dim)
        throw error(errc::shape_mismatch, "assign_label_cos_row: embedding dim != center dim");
    double best = 0.0;
    std::int32_t best_cls = -1;
    for (std::size_t i = 0; i < C.n_classes; ++i) {
        const double sim = cos_sim(z, std::span<const double>(C.center(i), C.n_dim));
        if (best_cls < 0 || sim > best) {
            best = sim;
            best_cls = static_cast<std::int32_t>(i);
        }
    }
    return best_cls;
}

LabelBatch assign_labels_cos(const EmbeddingBatch& Z, const CenterMatrix& C) {
    LabelBatch out(Z.rows);
    for (std::size_t j = 0; j < Z.rows; ++j) out[j] = assign_label_cos_row(Z.row_span(j), C);
    return out;
}

}  // namespace lsc

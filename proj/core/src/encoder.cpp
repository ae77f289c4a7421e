#include "lsc/encoder.hpp"

#include <cmath>

#include "lsc/rng.hpp"

namespace lsc {

std::uint64_t EncoderParams::param_count() const {
    std::uint64_t n = 0;
    for (std::size_t l = 0; l < weights.size(); ++l)
        n += weights[l].rows * weights[l].cols + biases[l].size();
    return n;
}

EncoderParams init_encoder(const std::vector<std::size_t>& layer_dims, std::uint64_t seed) {
    if (layer_dims.size() < 2)
        throw error(errc::invalid_architecture, "encoder needs at least input and output dims");
    for (std::size_t d : layer_dims)
        if (d == 0) throw error(errc::invalid_architecture, "layer dimensions must be positive");

    EncoderParams p;
    p.layer_dims = layer_dims;
    Rng rng(seed);
    for (std::size_t l = 0; l + 1 < layer_dims.size(); ++l) {
        const std::size_t fan_in = layer_dims[l];
        const std::size_t fan_out = layer_dims[l + 1];
        const double scale = 1.0 / std::sqrt(static_cast<double>(fan_in));
        Matrix w(fan_out, fan_in);
        for (double& v : w.data) v = rng.uniform(-scale, scale);
        p.weights.push_back(std::move(w));
        p.biases.emplace_back(fan_out, 0.0);
    }
    return p;
}

namespace {

// out = X * W^T + b, optionally ReLU-clamped.
Matrix affine(const Matrix& X, const Matrix& W, const std::vector<double>& b, bool relu) {
    Matrix out(X.rows, W.rows);
    for (std::size_t i = 0; i < X.rows; ++i) {
        const double* x = X.row(i);
        double* o = out.row(i);
        for (std::size_t r = 0; r < W.rows; ++r) {
            const double* w = W.row(r);
            double s = b[r];
            for (std::size_t c = 0; c < W.cols; ++c) s += w[c] * x[c];
            o[r] = (relu && s < 0.0) ? 0.0 : s;
        }
    }
    return out;
}

}  // namespace

Matrix forward(const EncoderParams& params, const Matrix& X) {
    if (X.cols != params.input_dim())
        throw error(errc::shape_mismatch, "forward: input dim " + std::to_string(X.cols) +
                                              " != encoder input " + std::to_string(params.input_dim()));
    Matrix h = X;
    for (std::size_t l = 0; l < params.layer_count(); ++l) {
        const bool hidden = l + 1 < params.layer_count();
        h = affine(h, params.weights[l], params.biases[l], hidden);
    }
    return h;
}

Matrix forward_cached(const EncoderParams& params, const Matrix& X, ForwardCache& cache) {
    if (X.cols != params.input_dim())
        throw error(errc::shape_mismatch, "forward: input dim mismatch");
    cache.activations.clear();
    cache.activations.push_back(X);
    for (std::size_t l = 0; l < params.layer_count(); ++l) {
        const bool hidden = l + 1 < params.layer_count();
        cache.activations.push_back(
            affine(cache.activations.back(), params.weights[l], params.biases[l], hidden));
    }
    return cache.activations.back();
}

Gradients backward(const EncoderParams& params, const ForwardCache& cache, const Matrix& dLdZ) {
    const std::size_t layers = params.layer_count();
    if (cache.activations.size() != layers + 1)
        throw error(errc::invalid_state, "backward: cache does not match the encoder");
    require_same_shape(cache.activations.back(), dLdZ, "backward");

    Gradients g;
    g.weights.resize(layers);
    g.biases.resize(layers);

    Matrix delta = dLdZ;  // dL/d(pre-activation) of the current layer
    for (std::size_t l = layers; l-- > 0;) {
        const Matrix& input = cache.activations[l];
        const Matrix& output = cache.activations[l + 1];
        const bool hidden = l + 1 < layers;
        if (hidden) {
            // ReLU: zero gradient where the unit was clamped.
            for (std::size_t i = 0; i < delta.rows; ++i) {
                double* dr = delta.row(i);
                const double* orow = output.row(i);
                for (std::size_t c = 0; c < delta.cols; ++c)
                    if (orow[c] <= 0.0) dr[c] = 0.0;
            }
        }
        Matrix dW(params.weights[l].rows, params.weights[l].cols);
        std::vector<double> db(params.biases[l].size(), 0.0);
        for (std::size_t i = 0; i < delta.rows; ++i) {
            const double* dr = delta.row(i);
            const double* x = input.row(i);
            for (std::size_t r = 0; r < dW.rows; ++r) {
                const double d = dr[r];
                if (d == 0.0) continue;
                double* w = dW.row(r);
                for (std::size_t c = 0; c < dW.cols; ++c) w[c] += d * x[c];
                db[r] += d;
            }
        }
        g.weights[l] = std::move(dW);
        g.biases[l] = std::move(db);
        if (l > 0) {
            // Propagate to the previous layer: delta_prev = delta * W.
            const Matrix& W = params.weights[l];
            Matrix prev(delta.rows, W.cols);
            for (std::size_t i = 0; i < delta.rows; ++i) {
                const double* dr = delta.row(i);
                double* pr = prev.row(i);
                for (std::size_t r = 0; r < W.rows; ++r) {
                    const double d = dr[r];
                    if (d == 0.0) continue;
                    const double* w = W.row(r);
                    for (std::size_t c = 0; c < W.cols; ++c) pr[c] += d * w[c];
                }
            }
            delta = std::move(prev);
        }
    }
    return g;
}

}  // namespace lsc

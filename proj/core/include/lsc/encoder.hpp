#ifndef LSC_ENCODER_HPP
#define LSC_ENCODER_HPP

#include <cstdint>
#include <vector>

#include "lsc/matrix.hpp"

namespace lsc {

/// Feed-forward encoder: affine layers with ReLU on hidden layers and an
/// identity output layer. The parameter count depends on layer_dims only,
/// never on how many classes the paired center matrix holds.
struct EncoderParams {
    std::vector<std::size_t> layer_dims;        // input, hidden..., embedding
    std::vector<Matrix> weights;                // [l]: dims[l+1] x dims[l]
    std::vector<std::vector<double>> biases;    // [l]: dims[l+1]

    std::size_t layer_count() const { return weights.size(); }
    std::size_t input_dim() const { return layer_dims.front(); }
    std::size_t output_dim() const { return layer_dims.back(); }
    std::uint64_t param_count() const;
};

/// Seeded deterministic init: weights uniform in +-1/sqrt(fan_in), biases zero.
EncoderParams init_encoder(const std::vector<std::size_t>& layer_dims, std::uint64_t seed);

/// Post-activation outputs of every layer; activations[0] is the input.
struct ForwardCache {
    std::vector<Matrix> activations;
};

Matrix forward(const EncoderParams& params, const Matrix& X);
Matrix forward_cached(const EncoderParams& params, const Matrix& X, ForwardCache& cache);

struct Gradients {
    std::vector<Matrix> weights;
    std::vector<std::vector<double>> biases;
};

/// Backpropagates dL/d(output) through the cached forward pass.
Gradients backward(const EncoderParams& params, const ForwardCache& cache, const Matrix& dLdZ);

}  // namespace lsc

#endif  // LSC_ENCODER_HPP

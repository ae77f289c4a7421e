#ifndef LSC_TRAINER_HPP
#define LSC_TRAINER_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lsc/dataset.hpp"
#include "lsc/encoder.hpp"
#include "lsc/losses.hpp"
#include "lsc/rng.hpp"
#include "lsc/rootsys.hpp"

namespace lsc {

enum class LossKind { Cos, Dist, Combined };

const char* loss_kind_name(LossKind k);
std::optional<LossKind> loss_kind_from_name(const std::string& s);

struct TrainConfig {
    std::size_t epochs = 0;
    std::size_t batch_size = 32;
    double learning_rate = 1e-4;
    double weight_decay = 1e-5;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_eps = 1e-8;
    LossKind loss = LossKind::Cos;
    double weight_dist = 1.0;  // Combined only
    double weight_cos = 1.0;
    std::uint64_t seed = 0;
    // Mixed-label mode: sample of class y trains toward center perm[y].
    std::optional<std::vector<std::int32_t>> label_permutation;
    // Optional schedule step: from this epoch on, use the new rate.
    std::optional<std::pair<std::size_t, double>> lr_drop;
};

struct EpochStats {
    double loss = 0.0;
    double train_accuracy = 0.0;
};

/// Everything needed to resume training deterministically.
struct TrainState {
    EncoderParams params;
    std::vector<Matrix> m_w, v_w;  // Adam moments, parameter-shaped
    std::vector<std::vector<double>> m_b, v_b;
    std::uint64_t step = 0;
    std::vector<EpochStats> history;
    Rng rng;
    std::uint64_t last_center_gather_elems = 0;  // instrumentation
};

TrainState make_train_state(EncoderParams params, std::uint64_t seed);

/// One AdamW step on a flat parameter block at time step t (1-based).
/// Decoupled decay: theta -= lr * (m_hat / (sqrt(v_hat) + eps) + wd * theta),
/// with the decay term applied only when decay is set (weights, not biases).
void adamw_update(std::span<double> theta, std::span<const double> grad, std::span<double> m,
                  std::span<double> v, const TrainConfig& cfg, double lr, std::uint64_t t,
                  bool decay);

/// Runs cfg.epochs of shuffled mini-batches: forward, gather centers by
/// label, loss, analytic backprop, AdamW with decoupled weight decay.
/// Appends one EpochStats row per epoch. Throws a divergence error (with
/// state rolled back to the last finite epoch) if the loss leaves the
/// finite range.
void train(TrainState& state, const LabeledDataset& ds, const CenterMatrix& C,
           const TrainConfig& cfg);

/// Fraction of samples whose nearest center (by cosine) is their label.
double eval_accuracy(const EncoderParams& params, const LabeledDataset& ds, const CenterMatrix& C);

/// As eval_accuracy but with the Euclidean label rule.
double eval_accuracy_dist(const EncoderParams& params, const LabeledDataset& ds,
                          const CenterMatrix& C);

/// Per-class mean embeddings; the CEembs target configuration.
CenterMatrix extract_mean_embeddings(const EncoderParams& params, const LabeledDataset& ds);

/// Precomputes the teacher's mean embeddings once, then trains a fresh
/// student against them with the cosine loss. The teacher never runs
/// inside the loop.
TrainState distill(const EncoderParams& teacher, const std::vector<std::size_t>& student_dims,
                   const LabeledDataset& ds, const TrainConfig& cfg);

/// Resumes training against extended centers whose leading rows must be
/// bit-identical to the previous ones.
void continual_extend(TrainState& state, const LabeledDataset& combined,
                      const CenterMatrix& previous, const CenterMatrix& extended,
                      const TrainConfig& cfg);

}  // namespace lsc

#endif  // LSC_TRAINER_HPP

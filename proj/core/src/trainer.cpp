#include "lsc/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

namespace lsc {

const char* loss_kind_name(LossKind k) {
    switch (k) {
        case LossKind::Cos: return "cos";
        case LossKind::Dist: return "dist";
        case LossKind::Combined: return "combined";
    }
    return "cos";
}

std::optional<LossKind> loss_kind_from_name(const std::string& s) {
    if (s == "cos") return LossKind::Cos;
    if (s == "dist") return LossKind::Dist;
    if (s == "combined") return LossKind::Combined;
    return std::nullopt;
}

void adamw_update(std::span<double> theta, std::span<const double> grad, std::span<double> m,
                  std::span<double> v, const TrainConfig& cfg, double lr, std::uint64_t t,
                  bool decay) {
    const double bc1 = 1.0 - std::pow(cfg.adam_beta1, static_cast<double>(t));
    const double bc2 = 1.0 - std::pow(cfg.adam_beta2, static_cast<double>(t));
    for (std::size_t i = 0; i < theta.size(); ++i) {
        m[i] = cfg.adam_beta1 * m[i] + (1.0 - cfg.adam_beta1) * grad[i];
        v[i] = cfg.adam_beta2 * v[i] + (1.0 - cfg.adam_beta2) * grad[i] * grad[i];
        const double m_hat = m[i] / bc1;
        const double v_hat = v[i] / bc2;
        double update = m_hat / (std::sqrt(v_hat) + cfg.adam_eps);
        if (decay) update += cfg.weight_decay * theta[i];
        theta[i] -= lr * update;
    }
}

TrainState make_train_state(EncoderParams params, std::uint64_t seed) {
    TrainState st;
    st.rng = Rng(seed);
    for (std::size_t l = 0; l < params.layer_count(); ++l) {
        st.m_w.emplace_back(params.weights[l].rows, params.weights[l].cols);
        st.v_w.emplace_back(params.weights[l].rows, params.weights[l].cols);
        st.m_b.emplace_back(params.biases[l].size(), 0.0);
        st.v_b.emplace_back(params.biases[l].size(), 0.0);
    }
    st.params = std::move(params);
    return st;
}

namespace {

void check_config(const TrainConfig& cfg, const CenterMatrix& C) {
    if (cfg.batch_size < 1) throw error(errc::invalid_config, "batch_size must be >= 1");
    if (cfg.learning_rate <= 0.0) throw error(errc::invalid_config, "learning_rate must be positive");
    if (cfg.weight_decay < 0.0) throw error(errc::invalid_config, "weight_decay must be >= 0");
    if (cfg.label_permutation) {
        const auto& perm = *cfg.label_permutation;
        if (perm.size() != C.n_classes)
            throw error(errc::invalid_config, "label permutation size != n_classes");
        std::vector<bool> seen(perm.size(), false);
        for (std::int32_t p : perm) {
            if (p < 0 || static_cast<std::size_t>(p) >= perm.size() || seen[p])
                throw error(errc::invalid_config, "label permutation is not a permutation");
            seen[p] = true;
        }
    }
}

struct StepResult {
    double loss;
};

StepResult train_step(TrainState& st, const Matrix& X, const LabelBatch& labels,
                      const CenterMatrix& C, const TrainConfig& cfg, double lr) {
    ForwardCache cache;
    const Matrix Z = forward_cached(st.params, X, cache);

    const Matrix C_b = gather_centers(C, labels);
    st.last_center_gather_elems = gather_last_alloc_elems();

    LossValue loss;
    Matrix dLdZ;
    switch (cfg.loss) {
        case LossKind::Cos:
            loss = cos_loss(Z, C_b);
            dLdZ = cos_loss_grad(Z, C_b);
            break;
        case LossKind::Dist: {
            std::vector<double> radii(labels.size());
            for (std::size_t j = 0; j < labels.size(); ++j)
                radii[j] = C.radius(static_cast<std::size_t>(labels[j]));
            loss = dist_loss_gathered(Z, C_b, radii);
            dLdZ = dist_loss_grad_gathered(Z, C_b, radii);
            break;
        }
        case LossKind::Combined: {
            if (cfg.weight_dist < 0.0 || cfg.weight_cos < 0.0 ||
                (cfg.weight_dist == 0.0 && cfg.weight_cos == 0.0))
                throw error(errc::invalid_config, "combined loss weights must be >= 0, not both zero");
            std::vector<double> radii(labels.size());
            for (std::size_t j = 0; j < labels.size(); ++j)
                radii[j] = C.radius(static_cast<std::size_t>(labels[j]));
            const LossValue ld = dist_loss_gathered(Z, C_b, radii);
            const LossValue lc = cos_loss(Z, C_b);
            loss.value = cfg.weight_dist * ld.value + cfg.weight_cos * lc.value;
            const Matrix gd = dist_loss_grad_gathered(Z, C_b, radii);
            const Matrix gc = cos_loss_grad(Z, C_b);
            dLdZ = Matrix(Z.rows, Z.cols);
            for (std::size_t i = 0; i < dLdZ.data.size(); ++i)
                dLdZ.data[i] = cfg.weight_dist * gd.data[i] + cfg.weight_cos * gc.data[i];
            break;
        }
    }

    const Gradients g = backward(st.params, cache, dLdZ);
    ++st.step;
    for (std::size_t l = 0; l < st.params.layer_count(); ++l) {
        adamw_update(st.params.weights[l].data, g.weights[l].data, st.m_w[l].data, st.v_w[l].data,
                     cfg, lr, st.step, /*decay=*/true);
        adamw_update(st.params.biases[l], g.biases[l], st.m_b[l], st.v_b[l], cfg, lr, st.step,
                     /*decay=*/false);
    }
    return {loss.value};
}

LabelBatch effective_labels(const LabeledDataset& ds, const TrainConfig& cfg) {
    LabelBatch labels(ds.labels.begin(), ds.labels.end());
    if (cfg.label_permutation)
        for (auto& y : labels) y = (*cfg.label_permutation)[static_cast<std::size_t>(y)];
    return labels;
}

double accuracy_against(const EncoderParams& params, const LabeledDataset& ds,
                        const CenterMatrix& C, const LabelBatch& targets, bool euclidean) {
    const Matrix Z = forward(params, ds.rows_as_matrix(0, ds.size()));
    const LabelBatch pred = euclidean ? assign_labels_dist(Z, C) : assign_labels_cos(Z, C);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < pred.size(); ++i)
        if (pred[i] == targets[i]) ++hits;
    return static_cast<double>(hits) / static_cast<double>(pred.size());
}

}  // namespace

void train(TrainState& state, const LabeledDataset& ds, const CenterMatrix& C,
           const TrainConfig& cfg) {
    if (ds.size() == 0) throw error(errc::empty_input, "train: empty dataset");
    if (ds.feature_dim != state.params.input_dim())
        throw error(errc::shape_mismatch, "train: dataset feature dim != encoder input dim");
    if (state.params.output_dim() != C.n_dim)
        throw error(errc::shape_mismatch, "train: encoder output dim " +
                                              std::to_string(state.params.output_dim()) +
                                              " != center dim " + std::to_string(C.n_dim));
    check_config(cfg, C);

    const LabelBatch labels = effective_labels(ds, cfg);
    for (std::int32_t y : labels)
        if (y < 0 || static_cast<std::size_t>(y) >= C.n_classes)
            throw error(errc::label_range, "train: label " + std::to_string(y) + " out of range");

    const std::size_t m = ds.size();
    std::vector<std::uint32_t> order(m);
    const bool euclidean_metric = cfg.loss == LossKind::Dist;

    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        // Snapshot so a divergent epoch can be rolled back.
        const EncoderParams params_before = state.params;
        const auto m_w = state.m_w; const auto v_w = state.v_w;
        const auto m_b = state.m_b; const auto v_b = state.v_b;
        const std::uint64_t step_before = state.step;
        const Rng rng_before = state.rng;

        double lr = cfg.learning_rate;
        if (cfg.lr_drop && epoch >= cfg.lr_drop->first) lr = cfg.lr_drop->second;

        for (std::size_t i = 0; i < m; ++i) order[i] = static_cast<std::uint32_t>(i);
        state.rng.shuffle(order);

        double loss_sum = 0.0;
        std::size_t batches = 0;
        bool finite = true;
        for (std::size_t begin = 0; begin < m && finite; begin += cfg.batch_size) {
            const std::size_t end = std::min(begin + cfg.batch_size, m);
            Matrix X(end - begin, ds.feature_dim);
            LabelBatch y(end - begin);
            for (std::size_t i = begin; i < end; ++i) {
                const float* src = ds.row(order[i]);
                double* dst = X.row(i - begin);
                for (std::size_t j = 0; j < ds.feature_dim; ++j) dst[j] = src[j];
                y[i - begin] = labels[order[i]];
            }
            const StepResult r = train_step(state, X, y, C, cfg, lr);
            finite = std::isfinite(r.loss);
            loss_sum += r.loss;
            ++batches;
        }

        if (!finite) {
            state.params = params_before;
            state.m_w = m_w; state.v_w = v_w;
            state.m_b = m_b; state.v_b = v_b;
            state.step = step_before;
            state.rng = rng_before;
            throw error(errc::divergence,
                        "training diverged at epoch " + std::to_string(state.history.size()));
        }

        EpochStats s;
        s.loss = loss_sum / static_cast<double>(batches);
        s.train_accuracy = accuracy_against(state.params, ds, C, labels, euclidean_metric);
        state.history.push_back(s);
    }
}

double eval_accuracy(const EncoderParams& params, const LabeledDataset& ds, const CenterMatrix& C) {
    if (ds.size() == 0) throw error(errc::empty_input, "eval_accuracy: empty dataset");
    for (std::int32_t y : ds.labels)
        if (y < 0 || static_cast<std::size_t>(y) >= C.n_classes)
            throw error(errc::label_range, "eval_accuracy: label " + std::to_string(y) + " out of range");
    LabelBatch targets(ds.labels.begin(), ds.labels.end());
    return accuracy_against(params, ds, C, targets, /*euclidean=*/false);
}

double eval_accuracy_dist(const EncoderParams& params, const LabeledDataset& ds,
                          const CenterMatrix& C) {
    if (ds.size() == 0) throw error(errc::empty_input, "eval_accuracy_dist: empty dataset");
    LabelBatch targets(ds.labels.begin(), ds.labels.end());
    return accuracy_against(params, ds, C, targets, /*euclidean=*/true);
}

CenterMatrix extract_mean_embeddings(const EncoderParams& params, const LabeledDataset& ds) {
    if (ds.size() == 0) throw error(errc::empty_input, "extract_mean_embeddings: empty dataset");
    const std::size_t k = static_cast<std::size_t>(ds.n_classes_present);
    const Matrix Z = forward(params, ds.rows_as_matrix(0, ds.size()));

    CenterMatrix C;
    C.n_classes = k;
    C.n_dim = Z.cols;
    C.centers = Matrix(k, Z.cols);
    C.source = "ceembs";
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const std::size_t cls = static_cast<std::size_t>(ds.labels[i]);
        if (cls >= k) throw error(errc::label_range, "label exceeds declared class count");
        ++counts[cls];
        const double* z = Z.row(i);
        double* c = C.centers.row(cls);
        for (std::size_t j = 0; j < Z.cols; ++j) c[j] += z[j];
    }
    for (std::size_t cls = 0; cls < k; ++cls) {
        if (counts[cls] == 0)
            throw error(errc::missing_class, "class " + std::to_string(cls) + " has no samples");
        double* c = C.centers.row(cls);
        for (std::size_t j = 0; j < Z.cols; ++j) c[j] /= static_cast<double>(counts[cls]);
    }
    return C;
}

TrainState distill(const EncoderParams& teacher, const std::vector<std::size_t>& student_dims,
                   const LabeledDataset& ds, const TrainConfig& cfg) {
    if (student_dims.size() < 2)
        throw error(errc::invalid_architecture, "student needs at least input and output dims");
    if (student_dims.back() != teacher.output_dim())
        throw error(errc::invalid_architecture,
                    "student output dim " + std::to_string(student_dims.back()) +
                        " != teacher output dim " + std::to_string(teacher.output_dim()));
    if (student_dims.front() != teacher.input_dim())
        throw error(errc::invalid_architecture, "student input dim != teacher input dim");

    const CenterMatrix targets = extract_mean_embeddings(teacher, ds);
    TrainState student = make_train_state(init_encoder(student_dims, cfg.seed), cfg.seed);
    TrainConfig student_cfg = cfg;
    student_cfg.loss = LossKind::Cos;  // embedding matching
    train(student, ds, targets, student_cfg);
    return student;
}

void continual_extend(TrainState& state, const LabeledDataset& combined,
                      const CenterMatrix& previous, const CenterMatrix& extended,
                      const TrainConfig& cfg) {
    if (extended.n_dim != previous.n_dim)
        throw error(errc::center_drift, "extended centers change the embedding dimension");
    if (extended.n_classes < previous.n_classes)
        throw error(errc::center_drift, "extended centers drop existing classes");
    const std::size_t prefix = previous.n_classes * previous.n_dim;
    if (std::memcmp(extended.centers.data.data(), previous.centers.data.data(),
                    prefix * sizeof(double)) != 0)
        throw error(errc::center_drift, "extended centers modify existing class rows");
    train(state, combined, extended, cfg);
}

}  // namespace lsc

// lsc: generate center configurations, train encoders against them,
// and assign labels by nearest-center search.
//
// Exit codes: 0 success, 2 parse/file error, 3 configuration error,
// 4 training divergence, 5 capacity/sizing error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lsc/center_io.hpp"
#include "lsc/checkpoint.hpp"
#include "lsc/dataset.hpp"
#include "lsc/fastassign.hpp"
#include "lsc/report.hpp"
#include "lsc/rng.hpp"
#include "lsc/trainer.hpp"

namespace {

using namespace lsc;

int exit_code_for(errc kind) {
    switch (kind) {
        case errc::parse:
        case errc::io:
            return 2;
        case errc::divergence:
            return 4;
        case errc::insufficient_vectors:
        case errc::capacity:
            return 5;
        default:
            return 3;
    }
}

std::vector<std::size_t> parse_dims(const std::string& csv) {
    std::vector<std::size_t> dims;
    if (csv.empty()) return dims;
    std::istringstream is(csv);
    std::string field;
    while (std::getline(is, field, ',')) {
        const long v = std::stol(field);
        if (v <= 0) throw error(errc::invalid_config, "layer widths must be positive");
        dims.push_back(static_cast<std::size_t>(v));
    }
    return dims;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& csv) {
    std::vector<std::uint64_t> out;
    std::istringstream is(csv);
    std::string field;
    while (std::getline(is, field, ',')) out.push_back(std::stoull(field));
    return out;
}

CenterConfiguration truncate_config(const CenterConfiguration& cfg, std::size_t k) {
    CenterConfiguration out = cfg;
    out.vectors = Matrix(k, cfg.ambient_dim);
    std::copy_n(cfg.vectors.data.data(), k * cfg.ambient_dim, out.vectors.data.data());
    return out;
}

std::vector<std::int32_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
    std::vector<std::int32_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::int32_t>(i);
    Rng rng(seed);
    rng.shuffle(perm);
    return perm;
}

void write_metrics(const TrainState& state, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error(errc::io, "cannot open " + path + " for writing");
    out << "epoch,loss,train_accuracy\n";
    char buf[80];
    for (std::size_t e = 0; e < state.history.size(); ++e) {
        std::snprintf(buf, sizeof(buf), "%zu,%.10g,%.9g\n", e + 1, state.history[e].loss,
                      state.history[e].train_accuracy);
        out << buf;
    }
    if (!out) throw error(errc::io, "write failed for " + path);
}

void dump_embeddings(const EncoderParams& params, const LabeledDataset& ds,
                     const std::string& path) {
    const Matrix Z = forward(params, ds.rows_as_matrix(0, ds.size()));
    std::ofstream out(path);
    if (!out) throw error(errc::io, "cannot open " + path + " for writing");
    char buf[40];
    for (std::size_t i = 0; i < Z.rows; ++i) {
        out << ds.labels[i];
        for (std::size_t j = 0; j < Z.cols; ++j) {
            std::snprintf(buf, sizeof(buf), "%.9g", Z.at(i, j));
            out << ',' << buf;
        }
        out << '\n';
    }
}

LabeledDataset merge_datasets(const LabeledDataset& a, const LabeledDataset& b) {
    if (b.size() == 0) return a;
    if (a.feature_dim != b.feature_dim)
        throw error(errc::shape_mismatch, "datasets have different feature dimensions");
    LabeledDataset out = a;
    out.features.insert(out.features.end(), b.features.begin(), b.features.end());
    out.labels.insert(out.labels.end(), b.labels.begin(), b.labels.end());
    out.n_classes_present = std::max(out.n_classes_present, b.n_classes_present);
    return out;
}

// --- subcommand state ----------------------------------------------------

struct GenArgs {
    std::string family = "an";
    std::uint32_t n = 0;
    std::uint64_t min_for = 0;
    std::string projection = "none";
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::uint32_t interpolation = 0;
    std::size_t classes = 0;
    double circle_radius = 5.0;
    double cluster_radius = 1.0;
    std::string out;
};

int run_gen(const GenArgs& a) {
    if (a.family == "rotation2d") {
        if (a.classes == 0)
            throw error(errc::invalid_config, "rotation2d requires --classes");
        const CenterMatrix m = gen_rotation_2d(a.classes, a.circle_radius, a.cluster_radius);
        CenterConfiguration cfg;
        cfg.family = Family::Rotation2D;
        cfg.ambient_dim = 2;
        cfg.vectors = m.centers;
        save_centers(cfg, m.radii, a.out);
        std::printf("wrote %s (%zu vectors, dim 2)\n", a.out.c_str(), m.n_classes);
        return 0;
    }

    std::uint32_t rank = a.n;
    if (a.min_for > 0) rank = min_n_dim(a.min_for, a.interpolation);
    if (rank == 0) throw error(errc::invalid_config, "need --n or --min-for");

    if (a.classes > 0) {
        std::uint64_t cap = an_capacity(rank, a.interpolation);
        if (a.family == "anp") cap /= 2;
        if (a.classes > cap)
            throw error(errc::capacity,
                        "rank " + std::to_string(rank) + " holds " + std::to_string(cap) +
                            " vectors; " + std::to_string(a.classes) + " classes need rank >= " +
                            std::to_string(min_n_dim(a.classes, a.interpolation)));
    }

    CenterConfiguration cfg = gen_an_roots(rank);
    if (a.family == "anp") cfg = positive_subset(cfg);
    else if (a.family == "anr") cfg = shuffle(cfg, a.seed);
    else if (a.family != "an")
        throw error(errc::invalid_config, "unknown family '" + a.family + "'");
    if (a.interpolation > 0) cfg = interpolate(cfg, a.interpolation);

    const auto proj = projection_from_name(a.projection);
    if (!proj) throw error(errc::invalid_config, "unknown projection '" + a.projection + "'");
    if (*proj == Projection::DropLast) cfg = project_drop(cfg);
    else if (*proj == Projection::Isometric) cfg = project_isometric(cfg);

    if (a.classes > 0) cfg = truncate_config(cfg, a.classes);
    save_centers(cfg, std::nullopt, a.out);
    std::printf("wrote %s (%zu vectors, dim %zu)\n", a.out.c_str(), cfg.count(), cfg.ambient_dim);
    return 0;
}

struct BlobArgs {
    std::size_t classes = 10;
    std::size_t dim = 2;
    std::size_t per_class = 50;
    double spread = 0.5;
    std::uint64_t seed = 0;
    bool unique_labels = false;
    bool header = false;
    std::string out;
};

int run_blobs(const BlobArgs& a) {
    LabeledDataset ds = gen_blobs(a.classes, a.dim, a.per_class, a.spread, a.seed);
    if (a.unique_labels) ds = unique_label_expand(ds);
    save_csv(ds, a.out, a.header);
    std::printf("wrote %s (%zu samples, %d classes, dim %zu)\n", a.out.c_str(), ds.size(),
                ds.n_classes_present, ds.feature_dim);
    return 0;
}

struct TrainArgs {
    std::string data, centers, checkpoint, metrics_out, resume, dump_path;
    std::size_t classes = 0;
    std::string loss = "cos";
    std::size_t epochs = 10;
    std::size_t batch = 32;
    double lr = 1e-4;
    double weight_decay = 1e-5;
    double weight_dist = 1.0, weight_cos = 1.0;
    std::uint64_t seed = 0;
    std::string hidden = "64";
    bool permute_labels = false;
    bool header = false;
    long lr_drop_epoch = -1;
    double lr_drop_rate = 1e-5;
};

TrainConfig config_from_args(const TrainArgs& a, std::size_t n_classes) {
    TrainConfig cfg;
    cfg.epochs = a.epochs;
    cfg.batch_size = a.batch;
    cfg.learning_rate = a.lr;
    cfg.weight_decay = a.weight_decay;
    cfg.weight_dist = a.weight_dist;
    cfg.weight_cos = a.weight_cos;
    cfg.seed = a.seed;
    const auto kind = loss_kind_from_name(a.loss);
    if (!kind) throw error(errc::invalid_config, "unknown loss '" + a.loss + "'");
    cfg.loss = *kind;
    if (a.permute_labels) cfg.label_permutation = seeded_permutation(n_classes, a.seed);
    if (a.lr_drop_epoch >= 0)
        cfg.lr_drop = {static_cast<std::size_t>(a.lr_drop_epoch), a.lr_drop_rate};
    return cfg;
}

int run_train(const TrainArgs& a) {
    const LabeledDataset ds = load_csv(a.data, a.header);
    const CenterFile file = load_centers(a.centers);
    const CenterMatrix C = centers_from_file(file, a.classes);
    const TrainConfig cfg = config_from_args(a, C.n_classes);

    TrainState state;
    if (!a.resume.empty()) {
        state = load_checkpoint(a.resume);
        if (state.params.input_dim() != ds.feature_dim)
            throw error(errc::shape_mismatch, "checkpoint input dim != dataset feature dim");
    } else {
        std::vector<std::size_t> dims{ds.feature_dim};
        for (std::size_t h : parse_dims(a.hidden)) dims.push_back(h);
        dims.push_back(C.n_dim);
        state = make_train_state(init_encoder(dims, a.seed), a.seed);
    }
    if (state.params.output_dim() != C.n_dim)
        throw error(errc::shape_mismatch, "encoder output dim " +
                                              std::to_string(state.params.output_dim()) +
                                              " != center dim " + std::to_string(C.n_dim));

    train(state, ds, C, cfg);

    save_checkpoint(state, a.checkpoint);
    if (!a.metrics_out.empty()) write_metrics(state, a.metrics_out);
    if (!a.dump_path.empty()) dump_embeddings(state.params, ds, a.dump_path);
    if (!state.history.empty())
        std::printf("final_loss=%.10g final_accuracy=%.9g\n", state.history.back().loss,
                    state.history.back().train_accuracy);
    else
        std::printf("final_loss=nan final_accuracy=nan\n");
    return 0;
}

struct EvalArgs {
    std::string checkpoint, centers, data, metric = "cos", dump_path;
    std::size_t classes = 0;
    bool header = false;
};

int run_eval(const EvalArgs& a) {
    const TrainState state = load_checkpoint(a.checkpoint);
    const CenterMatrix C = centers_from_file(load_centers(a.centers), a.classes);
    const LabeledDataset ds = load_csv(a.data, a.header);
    double acc;
    if (a.metric == "cos") acc = eval_accuracy(state.params, ds, C);
    else if (a.metric == "dist") acc = eval_accuracy_dist(state.params, ds, C);
    else throw error(errc::invalid_config, "unknown metric '" + a.metric + "'");
    if (!a.dump_path.empty()) dump_embeddings(state.params, ds, a.dump_path);
    std::printf("accuracy %.9g\n", acc);
    return 0;
}

struct AssignArgs {
    std::string checkpoint, centers, input;
    std::size_t classes = 0;
    bool oracle = false;
    bool header = false;
    std::size_t top = 1;
};

int run_assign(const AssignArgs& a) {
    const TrainState state = load_checkpoint(a.checkpoint);
    const CenterFile file = load_centers(a.centers);
    const CenterMatrix C = centers_from_file(file, a.classes);
    const Matrix X = load_feature_csv(a.input, a.header);
    if (X.rows == 0) return 0;  // empty input, empty output
    if (X.cols != state.params.input_dim())
        throw error(errc::shape_mismatch, "input feature dim != encoder input dim");

    const Matrix Z = forward(state.params, X);
    const CenterConfiguration cfg = a.classes == 0
                                        ? file.cfg
                                        : truncate_config(file.cfg, C.n_classes);
    const AssignmentIndex index = build_index(cfg, C);

    std::string line;
    for (std::size_t r = 0; r < Z.rows; ++r) {
        if (a.top > 1) {
            const auto topk = assign_topk(index, Z.row_span(r), a.top);
            line.clear();
            for (std::size_t i = 0; i < topk.size(); ++i) {
                if (i) line += ' ';
                line += std::to_string(topk[i]);
            }
            std::printf("%s\n", line.c_str());
        } else {
            const std::int32_t label = a.oracle ? assign_label_cos_row(Z.row_span(r), C)
                                                : assign_fast(index, Z.row_span(r));
            std::printf("%d\n", label);
        }
    }
    return 0;
}

struct ContinualArgs {
    std::string checkpoint, old_centers, centers, old_data, new_data, checkpoint_out, metrics_out;
    std::size_t epochs = 10;
    std::size_t batch = 32;
    double lr = 1e-4;
    double weight_decay = 1e-5;
    std::string loss = "cos";
    std::uint64_t seed = 0;
    bool header = false;
};

int run_continual(const ContinualArgs& a) {
    TrainState state = load_checkpoint(a.checkpoint);
    const CenterMatrix old_C = centers_from_file(load_centers(a.old_centers));
    const CenterMatrix ext_C = centers_from_file(load_centers(a.centers));
    const LabeledDataset old_ds = load_csv(a.old_data, a.header);
    LabeledDataset new_ds;
    if (!a.new_data.empty()) new_ds = load_csv(a.new_data, a.header);

    const auto kind = loss_kind_from_name(a.loss);
    if (!kind) throw error(errc::invalid_config, "unknown loss '" + a.loss + "'");
    const bool euclidean = *kind == LossKind::Dist;
    auto accuracy = [&](const LabeledDataset& ds, const CenterMatrix& C) {
        return euclidean ? eval_accuracy_dist(state.params, ds, C)
                         : eval_accuracy(state.params, ds, C);
    };

    const double before = accuracy(old_ds, old_C);
    std::printf("old_accuracy_before=%.9g\n", before);

    TrainConfig cfg;
    cfg.epochs = a.epochs;
    cfg.batch_size = a.batch;
    cfg.learning_rate = a.lr;
    cfg.weight_decay = a.weight_decay;
    cfg.loss = *kind;
    cfg.seed = a.seed;
    const LabeledDataset combined = merge_datasets(old_ds, new_ds);
    continual_extend(state, combined, old_C, ext_C, cfg);

    std::printf("old_accuracy_after=%.9g\n", accuracy(old_ds, ext_C));
    if (new_ds.size() > 0) std::printf("new_accuracy_after=%.9g\n", accuracy(new_ds, ext_C));
    if (!a.checkpoint_out.empty()) save_checkpoint(state, a.checkpoint_out);
    if (!a.metrics_out.empty()) write_metrics(state, a.metrics_out);
    return 0;
}

struct DistillArgs {
    std::string teacher, data, checkpoint_out, metrics_out, centers_out;
    std::string student_hidden = "32";
    std::size_t epochs = 50;
    std::size_t batch = 32;
    double lr = 1e-4;
    double weight_decay = 1e-5;
    std::uint64_t seed = 0;
    bool permute_labels = false;
    bool header = false;
};

int run_distill(const DistillArgs& a) {
    const TrainState teacher = load_checkpoint(a.teacher);
    const LabeledDataset ds = load_csv(a.data, a.header);

    std::vector<std::size_t> dims{teacher.params.input_dim()};
    for (std::size_t h : parse_dims(a.student_hidden)) dims.push_back(h);
    dims.push_back(teacher.params.output_dim());

    TrainConfig cfg;
    cfg.epochs = a.epochs;
    cfg.batch_size = a.batch;
    cfg.learning_rate = a.lr;
    cfg.weight_decay = a.weight_decay;
    cfg.seed = a.seed;
    cfg.loss = LossKind::Cos;
    if (a.permute_labels)
        cfg.label_permutation = seeded_permutation(static_cast<std::size_t>(ds.n_classes_present), a.seed);

    const TrainState student = distill(teacher.params, dims, ds, cfg);

    if (!a.centers_out.empty()) {
        const CenterMatrix targets = extract_mean_embeddings(teacher.params, ds);
        CenterConfiguration cfg_out;
        cfg_out.family = Family::CEembs;
        cfg_out.ambient_dim = targets.n_dim;
        cfg_out.vectors = targets.centers;
        save_centers(cfg_out, targets.radii, a.centers_out);
    }
    if (!a.checkpoint_out.empty()) save_checkpoint(student, a.checkpoint_out);
    if (!a.metrics_out.empty()) write_metrics(student, a.metrics_out);
    if (!student.history.empty())
        std::printf("student_final_accuracy=%.9g\n", student.history.back().train_accuracy);
    return 0;
}

struct ReportArgs {
    std::uint64_t n_dim = 384;
    std::uint64_t backbone = 22000000;
    std::string classes_list = "10,1000,100000,1000000";
    std::string csv_out;
};

int run_report(const ReportArgs& a) {
    const ParamReport report = build_param_report(a.n_dim, a.backbone, parse_u64_list(a.classes_list));
    std::fputs(format_param_report(report).c_str(), stdout);
    if (!a.csv_out.empty()) {
        std::ofstream out(a.csv_out);
        if (!out) throw error(errc::io, "cannot open " + a.csv_out + " for writing");
        out << param_report_csv(report);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"latent-space center configurations: generation, training, assignment"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a center configuration file");
    gen->add_option("--family", gen_args.family, "an|anp|anr|rotation2d")->capture_default_str();
    gen->add_option("--n", gen_args.n, "root system rank");
    gen->add_option("--min-for", gen_args.min_for, "size the rank for this many classes");
    gen->add_option("--projection", gen_args.projection, "none|drop|isometric")->capture_default_str();
    gen->add_option("--seed", gen_args.seed, "shuffle seed (anr)");
    gen->add_option("--interpolation", gen_args.interpolation, "interpolation levels (0 or 1)");
    gen->add_option("--classes", gen_args.classes, "truncate to this many vectors");
    gen->add_option("--circle-radius", gen_args.circle_radius, "rotation2d circle radius")
        ->capture_default_str();
    gen->add_option("--cluster-radius", gen_args.cluster_radius, "rotation2d base cluster radius")
        ->capture_default_str();
    gen->add_option("--out", gen_args.out, "output path")->required();

    BlobArgs blob_args;
    auto* blobs = app.add_subcommand("blobs", "generate a synthetic labeled dataset");
    blobs->add_option("--classes", blob_args.classes, "number of classes")->capture_default_str();
    blobs->add_option("--dim", blob_args.dim, "feature dimension")->capture_default_str();
    blobs->add_option("--per-class", blob_args.per_class, "samples per class")->capture_default_str();
    blobs->add_option("--spread", blob_args.spread, "within-class std")->capture_default_str();
    blobs->add_option("--seed", blob_args.seed, "rng seed");
    blobs->add_flag("--unique-labels", blob_args.unique_labels, "relabel every sample uniquely");
    blobs->add_flag("--header", blob_args.header, "write a header row");
    blobs->add_option("--out", blob_args.out, "output CSV path")->required();

    TrainArgs train_args;
    auto* tr = app.add_subcommand("train", "train an encoder against a center file");
    tr->add_option("--data", train_args.data, "dataset CSV")->required();
    tr->add_option("--centers", train_args.centers, "LSC1 center file")->required();
    tr->add_option("--classes", train_args.classes, "use only the first k centers");
    tr->add_option("--loss", train_args.loss, "cos|dist|combined")->capture_default_str();
    tr->add_option("--epochs", train_args.epochs, "epochs")->capture_default_str();
    tr->add_option("--batch", train_args.batch, "batch size")->capture_default_str();
    tr->add_option("--lr", train_args.lr, "learning rate")->capture_default_str();
    tr->add_option("--weight-decay", train_args.weight_decay, "AdamW weight decay")
        ->capture_default_str();
    tr->add_option("--weight-dist", train_args.weight_dist, "combined loss distance weight");
    tr->add_option("--weight-cos", train_args.weight_cos, "combined loss cosine weight");
    tr->add_option("--seed", train_args.seed, "seed for init, shuffling, permutation");
    tr->add_option("--hidden", train_args.hidden, "hidden layer widths, e.g. 64,64")
        ->capture_default_str();
    tr->add_flag("--permute-labels", train_args.permute_labels, "train against permuted centers");
    tr->add_flag("--header", train_args.header, "dataset CSV has a header row");
    tr->add_option("--lr-drop-epoch", train_args.lr_drop_epoch, "epoch to drop the rate at");
    tr->add_option("--lr-drop-rate", train_args.lr_drop_rate, "rate after the drop")
        ->capture_default_str();
    tr->add_option("--resume", train_args.resume, "checkpoint to resume from");
    tr->add_option("--checkpoint", train_args.checkpoint, "checkpoint output path")->required();
    tr->add_option("--metrics-out", train_args.metrics_out, "per-epoch metrics CSV");
    tr->add_option("--dump-embeddings", train_args.dump_path, "write label,e0,... rows");

    EvalArgs eval_args;
    auto* ev = app.add_subcommand("eval", "report accuracy of a checkpoint on a dataset");
    ev->add_option("--checkpoint", eval_args.checkpoint, "checkpoint path")->required();
    ev->add_option("--centers", eval_args.centers, "LSC1 center file")->required();
    ev->add_option("--classes", eval_args.classes, "use only the first k centers");
    ev->add_option("--data", eval_args.data, "dataset CSV")->required();
    ev->add_option("--metric", eval_args.metric, "cos|dist")->capture_default_str();
    ev->add_flag("--header", eval_args.header, "dataset CSV has a header row");
    ev->add_option("--dump-embeddings", eval_args.dump_path, "write label,e0,... rows");

    AssignArgs assign_args;
    auto* as = app.add_subcommand("assign", "label feature rows by nearest center");
    as->add_option("--checkpoint", assign_args.checkpoint, "checkpoint path")->required();
    as->add_option("--centers", assign_args.centers, "LSC1 center file")->required();
    as->add_option("--classes", assign_args.classes, "use only the first k centers");
    as->add_option("--input", assign_args.input, "feature-only CSV")->required();
    as->add_flag("--oracle", assign_args.oracle, "use the brute-force path");
    as->add_flag("--header", assign_args.header, "input CSV has a header row");
    as->add_option("--top", assign_args.top, "print the top-k classes per row");

    ContinualArgs cont_args;
    auto* cont = app.add_subcommand("continual", "resume training with appended classes");
    cont->add_option("--checkpoint", cont_args.checkpoint, "input checkpoint")->required();
    cont->add_option("--old-centers", cont_args.old_centers, "previous center file")->required();
    cont->add_option("--centers", cont_args.centers, "extended center file")->required();
    cont->add_option("--old-data", cont_args.old_data, "previous dataset CSV")->required();
    cont->add_option("--new-data", cont_args.new_data, "new-class dataset CSV");
    cont->add_option("--epochs", cont_args.epochs, "epochs")->capture_default_str();
    cont->add_option("--batch", cont_args.batch, "batch size")->capture_default_str();
    cont->add_option("--lr", cont_args.lr, "learning rate")->capture_default_str();
    cont->add_option("--weight-decay", cont_args.weight_decay, "AdamW weight decay")
        ->capture_default_str();
    cont->add_option("--loss", cont_args.loss, "cos|dist|combined")->capture_default_str();
    cont->add_option("--seed", cont_args.seed, "shuffle seed");
    cont->add_flag("--header", cont_args.header, "dataset CSVs have header rows");
    cont->add_option("--checkpoint-out", cont_args.checkpoint_out, "output checkpoint");
    cont->add_option("--metrics-out", cont_args.metrics_out, "per-epoch metrics CSV");

    DistillArgs distill_args;
    auto* dist = app.add_subcommand("distill", "train a student against teacher mean embeddings");
    dist->add_option("--teacher", distill_args.teacher, "teacher checkpoint")->required();
    dist->add_option("--data", distill_args.data, "dataset CSV")->required();
    dist->add_option("--student-hidden", distill_args.student_hidden, "student hidden widths")
        ->capture_default_str();
    dist->add_option("--epochs", distill_args.epochs, "epochs")->capture_default_str();
    dist->add_option("--batch", distill_args.batch, "batch size")->capture_default_str();
    dist->add_option("--lr", distill_args.lr, "learning rate")->capture_default_str();
    dist->add_option("--weight-decay", distill_args.weight_decay, "AdamW weight decay")
        ->capture_default_str();
    dist->add_option("--seed", distill_args.seed, "seed");
    dist->add_flag("--permute-labels", distill_args.permute_labels, "mix the target labels");
    dist->add_flag("--header", distill_args.header, "dataset CSV has a header row");
    dist->add_option("--checkpoint-out", distill_args.checkpoint_out, "student checkpoint path");
    dist->add_option("--metrics-out", distill_args.metrics_out, "per-epoch metrics CSV");
    dist->add_option("--centers-out", distill_args.centers_out, "write the teacher CEembs centers");

    ReportArgs report_args;
    auto* rep = app.add_subcommand("report-params", "parameter counts: fixed centers vs classifier head");
    rep->add_option("--n-dim", report_args.n_dim, "embedding dimension")->capture_default_str();
    rep->add_option("--backbone-params", report_args.backbone, "backbone parameter count")
        ->capture_default_str();
    rep->add_option("--classes-list", report_args.classes_list, "comma-separated class counts")
        ->capture_default_str();
    rep->add_option("--csv-out", report_args.csv_out, "also write the table as CSV");

    gen->callback([&]() { (void)run_gen(gen_args); });
    blobs->callback([&]() { (void)run_blobs(blob_args); });
    tr->callback([&]() { (void)run_train(train_args); });
    ev->callback([&]() { (void)run_eval(eval_args); });
    as->callback([&]() { (void)run_assign(assign_args); });
    cont->callback([&]() { (void)run_continual(cont_args); });
    dist->callback([&]() { (void)run_distill(distill_args); });
    rep->callback([&]() { (void)run_report(report_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const lsc::error& e) {
        std::fprintf(stderr, "error (%s): %s\n", errc_name(e.kind()), e.what());
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}

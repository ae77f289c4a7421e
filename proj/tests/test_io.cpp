#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "lsc/center_io.hpp"
#include "lsc/checkpoint.hpp"
#include "lsc/trainer.hpp"

using namespace lsc;

namespace {

std::string temp_file(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("LSC1 center file round trip") {
    auto cfg = interpolate(shuffle(gen_an_roots(4), 123), 1);
    const std::string path = temp_file("lsc_test_centers.lsc");
    save_centers(cfg, std::nullopt, path);

    const CenterFile file = load_centers(path);
    CHECK(file.cfg.family == Family::Anr);
    CHECK(file.cfg.rank == 4);
    CHECK(file.cfg.projection == Projection::None);
    CHECK(file.cfg.seed == 123);
    CHECK(file.cfg.interpolation_level == 1);
    CHECK(file.cfg.ambient_dim == 5);
    CHECK(file.cfg.count() == cfg.count());
    REQUIRE(file.cfg.permutation.has_value());
    CHECK(*file.cfg.permutation == *cfg.permutation);

    // payload is float32: loaded values are the float casts of the originals
    for (std::size_t i = 0; i < cfg.vectors.data.size(); ++i)
        CHECK(file.cfg.vectors.data[i] == static_cast<double>(static_cast<float>(cfg.vectors.data[i])));

    // saving what was loaded reproduces the binary payload byte-for-byte
    const std::string path2 = temp_file("lsc_test_centers2.lsc");
    save_centers(file.cfg, std::nullopt, path2);
    CHECK(slurp(path) == slurp(path2));

    std::remove(path.c_str());
    std::remove((path + ".meta").c_str());
    std::remove(path2.c_str());
    std::remove((path2 + ".meta").c_str());
}

TEST_CASE("LSC1 radii sidecar and truncation") {
    const auto rot = gen_rotation_2d(8, 5.0, 1.0);
    CenterConfiguration cfg;
    cfg.family = Family::Rotation2D;
    cfg.ambient_dim = 2;
    cfg.vectors = rot.centers;
    const std::string path = temp_file("lsc_test_rot.lsc");
    save_centers(cfg, rot.radii, path);

    const CenterFile file = load_centers(path);
    REQUIRE(file.radii.has_value());
    CHECK(*file.radii == *rot.radii);  // %.17g round-trips doubles

    const CenterMatrix all = centers_from_file(file);
    CHECK(all.n_classes == 8);
    const CenterMatrix five = centers_from_file(file, 5);
    CHECK(five.n_classes == 5);
    REQUIRE(five.radii.has_value());
    CHECK(five.radii->size() == 5);
    CHECK((*five.radii)[4] == 0.5);

    CHECK_THROWS_AS(centers_from_file(file, 9), error);

    std::remove(path.c_str());
    std::remove((path + ".meta").c_str());
}

TEST_CASE("LSC1 rejects corrupt input") {
    const std::string path = temp_file("lsc_test_bad.lsc");
    std::ofstream(path, std::ios::binary) << "NOPE1234";
    CHECK_THROWS_AS(load_centers(path), error);

    // valid binary but missing sidecar
    CenterConfiguration cfg = gen_an_roots(2);
    save_centers(cfg, std::nullopt, path);
    std::remove((path + ".meta").c_str());
    CHECK_THROWS_AS(load_centers(path), error);

    CHECK_THROWS_AS(load_centers(temp_file("no_such_file.lsc")), error);
    std::remove(path.c_str());
}

TEST_CASE("checkpoint restores bit-identical training continuation") {
    const auto ds = gen_blobs(5, 2, 12, 0.4, 3);
    const auto C = gen_rotation_2d(5, 5.0, 1.0);
    TrainConfig cfg;
    cfg.epochs = 3;
    cfg.learning_rate = 2e-3;
    cfg.loss = LossKind::Cos;
    cfg.seed = 4;

    auto state = make_train_state(init_encoder({2, 12, 2}, 4), 4);
    train(state, ds, C, cfg);

    const std::string path = temp_file("lsc_test_ckpt.bin");
    save_checkpoint(state, path);
    auto loaded = load_checkpoint(path);

    CHECK(loaded.step == state.step);
    CHECK(loaded.params.layer_dims == state.params.layer_dims);
    CHECK(loaded.rng == state.rng);
    REQUIRE(loaded.history.size() == state.history.size());
    for (std::size_t i = 0; i < loaded.history.size(); ++i) {
        CHECK(loaded.history[i].loss == state.history[i].loss);
        CHECK(loaded.history[i].train_accuracy == state.history[i].train_accuracy);
    }
    for (std::size_t l = 0; l < state.params.layer_count(); ++l) {
        CHECK(loaded.params.weights[l].data == state.params.weights[l].data);
        CHECK(loaded.params.biases[l] == state.params.biases[l]);
        CHECK(loaded.m_w[l].data == state.m_w[l].data);
        CHECK(loaded.v_w[l].data == state.v_w[l].data);
        CHECK(loaded.m_b[l] == state.m_b[l]);
        CHECK(loaded.v_b[l] == state.v_b[l]);
    }

    // continue both for three more epochs: identical trajectories
    train(state, ds, C, cfg);
    train(loaded, ds, C, cfg);
    for (std::size_t l = 0; l < state.params.layer_count(); ++l) {
        CHECK(loaded.params.weights[l].data == state.params.weights[l].data);
        CHECK(loaded.params.biases[l] == state.params.biases[l]);
    }

    std::remove(path.c_str());
}

TEST_CASE("checkpoint rejects corrupt files") {
    const std::string path = temp_file("lsc_test_ckpt_bad.bin");
    std::ofstream(path, std::ios::binary) << "garbage";
    CHECK_THROWS_AS(load_checkpoint(path), error);
    CHECK_THROWS_AS(load_checkpoint(temp_file("no_such_ckpt.bin")), error);
    std::remove(path.c_str());
}

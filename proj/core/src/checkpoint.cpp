#include "lsc/checkpoint.hpp"

#include <cstring>
#include <fstream>

namespace lsc {

namespace {

constexpr char kMagic[8] = {'L', 'S', 'C', 'K', 'P', 'T', '0', '1'};

void put_u64(std::ostream& out, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 8);
}

std::uint64_t get_u64(std::istream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

void put_f64(std::ostream& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(out, bits);
}

double get_f64(std::istream& in) {
    const std::uint64_t bits = get_u64(in);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

void put_doubles(std::ostream& out, const std::vector<double>& v) {
    put_u64(out, v.size());
    for (double d : v) put_f64(out, d);
}

std::vector<double> get_doubles(std::istream& in) {
    std::vector<double> v(get_u64(in));
    for (double& d : v) d = get_f64(in);
    return v;
}

}  // namespace

void save_checkpoint(const TrainState& state, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error(errc::io, "cannot open " + path + " for writing");
    out.write(kMagic, 8);
    put_u64(out, 1);  // version

    put_u64(out, state.params.layer_dims.size());
    for (std::size_t d : state.params.layer_dims) put_u64(out, d);
    for (std::size_t l = 0; l < state.params.layer_count(); ++l) {
        put_doubles(out, state.params.weights[l].data);
        put_doubles(out, state.params.biases[l]);
        put_doubles(out, state.m_w[l].data);
        put_doubles(out, state.v_w[l].data);
        put_doubles(out, state.m_b[l]);
        put_doubles(out, state.v_b[l]);
    }
    put_u64(out, state.step);
    put_u64(out, state.history.size());
    for (const EpochStats& s : state.history) {
        put_f64(out, s.loss);
        put_f64(out, s.train_accuracy);
    }
    const std::string rng = state.rng.serialize();
    put_u64(out, rng.size());
    out.write(rng.data(), static_cast<std::streamsize>(rng.size()));
    if (!out) throw error(errc::io, "write failed for " + path);
}

TrainState load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::io, "cannot open " + path);
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kMagic, 8) != 0)
        throw error(errc::parse, path + " is not a checkpoint file");
    const std::uint64_t version = get_u64(in);
    if (version != 1)
        throw error(errc::parse, path + ": unsupported checkpoint version " + std::to_string(version));

    TrainState st;
    st.params.layer_dims.resize(get_u64(in));
    for (std::size_t& d : st.params.layer_dims) d = get_u64(in);
    if (st.params.layer_dims.size() < 2)
        throw error(errc::parse, path + ": corrupt layer dims");
    const std::size_t layers = st.params.layer_dims.size() - 1;
    for (std::size_t l = 0; l < layers; ++l) {
        const std::size_t rows = st.params.layer_dims[l + 1];
        const std::size_t cols = st.params.layer_dims[l];
        Matrix w(rows, cols);
        w.data = get_doubles(in);
        if (w.data.size() != rows * cols) throw error(errc::parse, path + ": corrupt weight blob");
        st.params.weights.push_back(std::move(w));
        st.params.biases.push_back(get_doubles(in));
        Matrix mw(rows, cols), vw(rows, cols);
        mw.data = get_doubles(in);
        vw.data = get_doubles(in);
        st.m_w.push_back(std::move(mw));
        st.v_w.push_back(std::move(vw));
        st.m_b.push_back(get_doubles(in));
        st.v_b.push_back(get_doubles(in));
    }
    st.step = get_u64(in);
    st.history.resize(get_u64(in));
    for (EpochStats& s : st.history) {
        s.loss = get_f64(in);
        s.train_accuracy = get_f64(in);
    }
    std::string rng(get_u64(in), '\0');
    in.read(rng.data(), static_cast<std::streamsize>(rng.size()));
    if (!in) throw error(errc::parse, path + ": truncated checkpoint");
    st.rng = Rng::deserialize(rng);
    return st;
}

}  // namespace lsc

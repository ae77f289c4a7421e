#include "lsc/center_io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace lsc {

namespace {

void put_u32le(std::ostream& out, std::uint32_t v) {
    char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                 static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
    out.write(b, 4);
}

std::uint32_t get_u32le(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f32le(std::ostream& out, float v) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, 4);
    put_u32le(out, bits);
}

float get_f32le(std::istream& in) {
    const std::uint32_t bits = get_u32le(in);
    float v;
    std::memcpy(&v, &bits, 4);
    return v;
}

template <typename T>
std::string join_csv(const std::vector<T>& v, const char* fmt) {
    std::string out;
    char buf[40];
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::snprintf(buf, sizeof(buf), fmt, v[i]);
        if (i) out += ',';
        out += buf;
    }
    return out;
}

std::string meta_path(const std::string& path) { return path + ".meta"; }

}  // namespace

void save_centers(const CenterConfiguration& cfg,
                  const std::optional<std::vector<double>>& radii, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error(errc::io, "cannot open " + path + " for writing");
    out.write("LSC1", 4);
    put_u32le(out, static_cast<std::uint32_t>(cfg.ambient_dim));
    put_u32le(out, static_cast<std::uint32_t>(cfg.count()));
    for (double v : cfg.vectors.data) put_f32le(out, static_cast<float>(v));
    if (!out) throw error(errc::io, "write failed for " + path);

    std::ofstream meta(meta_path(path));
    if (!meta) throw error(errc::io, "cannot open " + meta_path(path) + " for writing");
    meta << "family=" << family_name(cfg.family) << '\n';
    if (cfg.rank > 0) meta << "rank=" << cfg.rank << '\n';
    meta << "projection=" << projection_name(cfg.projection) << '\n';
    if (cfg.seed) meta << "seed=" << *cfg.seed << '\n';
    meta << "interpolation_level=" << cfg.interpolation_level << '\n';
    if (cfg.permutation) meta << "permutation=" << join_csv(*cfg.permutation, "%u") << '\n';
    if (radii) meta << "radii=" << join_csv(*radii, "%.17g") << '\n';
    if (!meta) throw error(errc::io, "write failed for " + meta_path(path));
}

CenterFile load_centers(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::io, "cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "LSC1", 4) != 0)
        throw error(errc::parse, path + " is not an LSC1 center file");
    const std::uint32_t n_dim = get_u32le(in);
    const std::uint32_t n_vectors = get_u32le(in);
    if (!in || n_dim == 0 || n_vectors == 0)
        throw error(errc::parse, path + ": bad LSC1 header");

    CenterFile file;
    file.cfg.ambient_dim = n_dim;
    file.cfg.vectors = Matrix(n_vectors, n_dim);
    for (double& v : file.cfg.vectors.data) v = static_cast<double>(get_f32le(in));
    if (!in) throw error(errc::parse, path + ": truncated LSC1 payload");

    std::ifstream meta(meta_path(path));
    if (!meta) throw error(errc::io, "missing sidecar " + meta_path(path));
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(meta, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw error(errc::parse, meta_path(path) + " line " + std::to_string(line_no) +
                                         ": expected key=value");
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        if (key == "family") {
            const auto f = family_from_name(value);
            if (!f) throw error(errc::parse, "unknown family '" + value + "'");
            file.cfg.family = *f;
        } else if (key == "rank") {
            file.cfg.rank = static_cast<std::uint32_t>(std::stoul(value));
        } else if (key == "projection") {
            const auto p = projection_from_name(value);
            if (!p) throw error(errc::parse, "unknown projection '" + value + "'");
            file.cfg.projection = *p;
        } else if (key == "seed") {
            file.cfg.seed = std::stoull(value);
        } else if (key == "interpolation_level") {
            file.cfg.interpolation_level = static_cast<std::uint32_t>(std::stoul(value));
        } else if (key == "permutation") {
            std::vector<std::uint32_t> perm;
            std::istringstream is(value);
            std::string field;
            while (std::getline(is, field, ',')) perm.push_back(static_cast<std::uint32_t>(std::stoul(field)));
            file.cfg.permutation = std::move(perm);
        } else if (key == "radii") {
            std::vector<double> radii;
            std::istringstream is(value);
            std::string field;
            while (std::getline(is, field, ',')) radii.push_back(std::stod(field));
            file.radii = std::move(radii);
        } else {
            throw error(errc::parse, meta_path(path) + " line " + std::to_string(line_no) +
                                         ": unknown key '" + key + "'");
        }
    }
    if (file.radii && file.radii->size() != file.cfg.count())
        throw error(errc::parse, meta_path(path) + ": radii count != vector count");
    return file;
}

CenterMatrix centers_from_file(const CenterFile& file, std::size_t n_classes) {
    const std::size_t k = n_classes == 0 ? file.cfg.count() : n_classes;
    CenterMatrix C = choose_centers(file.cfg, k);
    if (file.radii)
        C.radii = std::vector<double>(file.radii->begin(), file.radii->begin() + k);
    return C;
}

}  // namespace lsc

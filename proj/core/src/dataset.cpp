#include "lsc/dataset.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "lsc/rng.hpp"

namespace lsc {

Matrix LabeledDataset::rows_as_matrix(std::size_t begin, std::size_t end) const {
    Matrix m(end - begin, feature_dim);
    for (std::size_t i = begin; i < end; ++i) {
        const float* src = row(i);
        double* dst = m.row(i - begin);
        for (std::size_t j = 0; j < feature_dim; ++j) dst[j] = static_cast<double>(src[j]);
    }
    return m;
}

LabeledDataset gen_blobs(std::size_t k, std::size_t d, std::size_t per_class, double spread,
                         std::uint64_t seed) {
    if (k < 1 || d < 1 || per_class < 1)
        throw error(errc::invalid_input, "gen_blobs: k, d and per_class must be >= 1");
    if (spread < 0.0)
        throw error(errc::invalid_input, "gen_blobs: spread must be non-negative");

    Rng rng(seed);
    std::vector<double> anchors(k * d);
    for (std::size_t c = 0; c < k; ++c) {
        double* a = anchors.data() + c * d;
        double norm_sq = 0.0;
        do {
            norm_sq = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                a[j] = rng.normal();
                norm_sq += a[j] * a[j];
            }
        } while (norm_sq == 0.0);
        const double scale = 10.0 / std::sqrt(norm_sq);
        for (std::size_t j = 0; j < d; ++j) a[j] *= scale;
    }

    LabeledDataset ds;
    ds.feature_dim = d;
    ds.n_classes_present = static_cast<std::int32_t>(k);
    ds.features.resize(k * per_class * d);
    ds.labels.resize(k * per_class);
    std::size_t r = 0;
    for (std::size_t c = 0; c < k; ++c) {
        const double* a = anchors.data() + c * d;
        for (std::size_t s = 0; s < per_class; ++s, ++r) {
            ds.labels[r] = static_cast<std::int32_t>(c);
            float* f = ds.features.data() + r * d;
            for (std::size_t j = 0; j < d; ++j)
                f[j] = static_cast<float>(a[j] + spread * rng.normal());
        }
    }
    return ds;
}

LabeledDataset unique_label_expand(const LabeledDataset& ds) {
    LabeledDataset out = ds;
    for (std::size_t i = 0; i < out.labels.size(); ++i)
        out.labels[i] = static_cast<std::int32_t>(i);
    out.n_classes_present = static_cast<std::int32_t>(out.labels.size());
    return out;
}

namespace {

double parse_number(const std::string& field, std::size_t line_no) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0' || errno == ERANGE)
        throw error(errc::parse, "line " + std::to_string(line_no) + ": non-numeric field '" + field + "'");
    return v;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

LabeledDataset load_csv(const std::string& path, bool header) {
    std::ifstream in(path);
    if (!in) throw error(errc::io, "cannot open " + path);

    LabeledDataset ds;
    std::string line;
    std::size_t line_no = 0;
    bool first_row = true;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (header && line_no == 1) continue;
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() < 2)
            throw error(errc::parse, "line " + std::to_string(line_no) + ": expected 'label,f0,...'");
        if (first_row) {
            ds.feature_dim = fields.size() - 1;
            first_row = false;
        } else if (fields.size() - 1 != ds.feature_dim) {
            throw error(errc::parse, "line " + std::to_string(line_no) + ": expected " +
                                         std::to_string(ds.feature_dim + 1) + " fields, got " +
                                         std::to_string(fields.size()));
        }
        const double label = parse_number(fields[0], line_no);
        if (label < 0 || label != std::floor(label))
            throw error(errc::parse,
                        "line " + std::to_string(line_no) + ": label must be a non-negative integer");
        ds.labels.push_back(static_cast<std::int32_t>(label));
        for (std::size_t j = 1; j < fields.size(); ++j)
            ds.features.push_back(static_cast<float>(parse_number(fields[j], line_no)));
    }
    if (ds.labels.empty()) throw error(errc::parse, "empty dataset file " + path);
    std::int32_t max_label = 0;
    for (std::int32_t l : ds.labels) max_label = std::max(max_label, l);
    ds.n_classes_present = max_label + 1;
    return ds;
}

void save_csv(const LabeledDataset& ds, const std::string& path, bool header) {
    std::ofstream out(path);
    if (!out) throw error(errc::io, "cannot open " + path + " for writing");
    if (header) {
        out << "label";
        for (std::size_t j = 0; j < ds.feature_dim; ++j) out << ",f" << j;
        out << '\n';
    }
    char buf[40];
    for (std::size_t i = 0; i < ds.size(); ++i) {
        out << ds.labels[i];
        const float* f = ds.row(i);
        for (std::size_t j = 0; j < ds.feature_dim; ++j) {
            std::snprintf(buf, sizeof(buf), "%.9g", static_cast<double>(f[j]));
            out << ',' << buf;
        }
        out << '\n';
    }
    if (!out) throw error(errc::io, "write failed for " + path);
}

Matrix load_feature_csv(const std::string& path, bool header) {
    std::ifstream in(path);
    if (!in) throw error(errc::io, "cannot open " + path);
    std::vector<double> values;
    std::size_t cols = 0, rows = 0, line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (header && line_no == 1) continue;
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (cols == 0) cols = fields.size();
        else if (fields.size() != cols)
            throw error(errc::parse, "line " + std::to_string(line_no) + ": expected " +
                                         std::to_string(cols) + " fields, got " +
                                         std::to_string(fields.size()));
        for (const auto& f : fields) values.push_back(parse_number(f, line_no));
        ++rows;
    }
    Matrix m(rows, cols);
    m.data = std::move(values);
    return m;
}

}  // namespace lsc

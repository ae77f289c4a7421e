#include "lsc/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace lsc {

const char* family_name(Family f) {
    switch (f) {
        case Family::An: return "an";
        case Family::Anp: return "anp";
        case Family::Anr: return "anr";
        case Family::Rotation2D: return "rotation2d";
        case Family::CEembs: return "ceembs";
        case Family::Custom: return "custom";
    }
    return "custom";
}

const char* projection_name(Projection p) {
    switch (p) {
        case Projection::None: return "none";
        case Projection::DropLast: return "drop";
        case Projection::Isometric: return "isometric";
    }
    return "none";
}

std::optional<Family> family_from_name(const std::string& s) {
    if (s == "an") return Family::An;
    if (s == "anp") return Family::Anp;
    if (s == "anr") return Family::Anr;
    if (s == "rotation2d") return Family::Rotation2D;
    if (s == "ceembs") return Family::CEembs;
    if (s == "custom") return Family::Custom;
    return std::nullopt;
}

std::optional<Projection> projection_from_name(const std::string& s) {
    if (s == "none") return Projection::None;
    if (s == "drop") return Projection::DropLast;
    if (s == "isometric") return Projection::Isometric;
    return std::nullopt;
}

const char* errc_name(errc kind) {
    switch (kind) {
        case errc::invalid_rank: return "invalid-rank";
        case errc::invalid_state: return "invalid-state";
        case errc::invalid_input: return "invalid-input";
        case errc::insufficient_vectors: return "insufficient-vectors";
        case errc::unsupported_level: return "unsupported-level";
        case errc::degenerate_input: return "degenerate-input";
        case errc::label_range: return "label-range";
        case errc::invalid_config: return "invalid-config";
        case errc::inconsistent_provenance: return "inconsistent-provenance";
        case errc::invalid_k: return "invalid-k";
        case errc::invalid_architecture: return "invalid-architecture";
        case errc::shape_mismatch: return "shape-mismatch";
        case errc::divergence: return "divergence";
        case errc::missing_class: return "missing-class";
        case errc::empty_input: return "empty-input";
        case errc::parse: return "parse";
        case errc::center_drift: return "center-drift";
        case errc::capacity: return "capacity";
        case errc::io: return "io";
    }
    return "unknown";
}

bool has_duplicate_rows(const CenterMatrix& m) {
    const std::size_t k = m.n_classes;
    const std::size_t d = m.n_dim;
    std::vector<double> norms(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        double s = 0.0;
        const double* r = m.centers.row(i);
        for (std::size_t j = 0; j < d; ++j) s += r[j] * r[j];
        norms[i] = std::sqrt(s);
    }
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            double dot = 0.0;
            const double* ra = m.centers.row(a);
            const double* rb = m.centers.row(b);
            for (std::size_t j = 0; j < d; ++j) dot += ra[j] * rb[j];
            if (dot / (norms[a] * norms[b]) >= 1.0 - 1e-9) return true;
        }
    }
    return false;
}

CenterConfiguration gen_an_roots(std::uint32_t n) {
    if (n < 1) throw error(errc::invalid_rank, "A_n rank must be >= 1, got 0");
    const std::size_t dim = n + 1;
    const std::size_t count = static_cast<std::size_t>(n) * (n + 1);

    CenterConfiguration cfg;
    cfg.family = Family::An;
    cfg.ambient_dim = dim;
    cfg.rank = n;
    cfg.vectors = Matrix(count, dim);

    // Lexicographic by (i, j), i != j: row = e_i - e_j.
    std::size_t r = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (i == j) continue;
            double* row = cfg.vectors.row(r++);
            row[i] = 1.0;
            row[j] = -1.0;
        }
    }
    return cfg;
}

CenterConfiguration project_drop(const CenterConfiguration& cfg) {
    if (cfg.projection != Projection::None)
        throw error(errc::invalid_state, "configuration is already projected");
    if (cfg.ambient_dim < 2)
        throw error(errc::invalid_input, "cannot drop a coordinate of a 1-dimensional configuration");

    CenterConfiguration out = cfg;
    const std::size_t dim = cfg.ambient_dim - 1;
    out.ambient_dim = dim;
    out.projection = Projection::DropLast;
    out.vectors = Matrix(cfg.count(), dim);
    for (std::size_t r = 0; r < cfg.count(); ++r) {
        const double* src = cfg.vectors.row(r);
        double* dst = out.vectors.row(r);
        bool nonzero = false;
        for (std::size_t j = 0; j < dim; ++j) {
            dst[j] = src[j];
            nonzero |= (src[j] != 0.0);
        }
        if (!nonzero)
            throw error(errc::invalid_input,
                        "drop projection would produce a zero vector at row " + std::to_string(r));
    }
    return out;
}

CenterConfiguration project_isometric(const CenterConfiguration& cfg) {
    if (cfg.family != Family::An && cfg.family != Family::Anp && cfg.family != Family::Anr)
        throw error(errc::invalid_input, "isometric projection applies to the A_n families only");
    if (cfg.projection != Projection::None)
        throw error(errc::invalid_state, "configuration is already projected");

    const std::size_t dim = cfg.ambient_dim;
    for (std::size_t r = 0; r < cfg.count(); ++r) {
        const double* v = cfg.vectors.row(r);
        double s = 0.0;
        for (std::size_t j = 0; j < dim; ++j) s += v[j];
        if (std::abs(s) > 1e-9 * static_cast<double>(dim))
            throw error(errc::invalid_input,
                        "row " + std::to_string(r) + " does not lie in the sum-zero hyperplane");
    }

    // Orthonormalizing the simple roots e_k - e_{k+1} in index order yields
    // the Helmert basis q_k = (1,...,1,-k,0,...)/sqrt(k(k+1)); applying it
    // reduces to running prefix sums, one O(dim) pass per vector.
    CenterConfiguration out = cfg;
    out.ambient_dim = dim - 1;
    out.projection = Projection::Isometric;
    out.vectors = Matrix(cfg.count(), dim - 1);
    std::vector<double> scale(dim - 1);
    for (std::size_t k = 1; k < dim; ++k)
        scale[k - 1] = 1.0 / std::sqrt(static_cast<double>(k) * static_cast<double>(k + 1));
    for (std::size_t r = 0; r < cfg.count(); ++r) {
        const double* v = cfg.vectors.row(r);
        double* dst = out.vectors.row(r);
        double prefix = 0.0;
        for (std::size_t k = 1; k < dim; ++k) {
            prefix += v[k - 1];
            dst[k - 1] = (prefix - static_cast<double>(k) * v[k]) * scale[k - 1];
        }
    }
    return out;
}

namespace {

struct RootPattern {
    std::size_t plus;
    std::size_t minus;
};

// Extracts the (i, j) identity of an unprojected root e_i - e_j.
RootPattern root_pattern(const double* row, std::size_t dim, std::size_t r) {
    std::size_t plus = dim, minus = dim;
    for (std::size_t j = 0; j < dim; ++j) {
        if (row[j] == 1.0 && plus == dim) plus = j;
        else if (row[j] == -1.0 && minus == dim) minus = j;
        else if (row[j] != 0.0)
            throw error(errc::invalid_input,
                        "row " + std::to_string(r) + " is not an A_n root vector");
    }
    if (plus == dim || minus == dim)
        throw error(errc::invalid_input,
                    "row " + std::to_string(r) + " is not an A_n root vector");
    return {plus, minus};
}

}  // namespace

CenterConfiguration positive_subset(const CenterConfiguration& cfg) {
    if (cfg.family != Family::An)
        throw error(errc::invalid_input, "positive subset requires the A_n family");
    if (cfg.projection != Projection::None)
        throw error(errc::invalid_input, "positive subset must be taken before projection");

    std::vector<std::size_t> keep;
    keep.reserve(cfg.count() / 2);
    for (std::size_t r = 0; r < cfg.count(); ++r) {
        RootPattern p = root_pattern(cfg.vectors.row(r), cfg.ambient_dim, r);
        if (p.plus < p.minus) keep.push_back(r);
    }

    CenterConfiguration out = cfg;
    out.family = Family::Anp;
    out.vectors = Matrix(keep.size(), cfg.ambient_dim);
    for (std::size_t k = 0; k < keep.size(); ++k)
        std::copy_n(cfg.vectors.row(keep[k]), cfg.ambient_dim, out.vectors.row(k));
    return out;
}

CenterConfiguration shuffle(const CenterConfiguration& cfg, std::uint64_t seed) {
    if (cfg.family != Family::An && cfg.family != Family::Anp)
        throw error(errc::invalid_input, "shuffle applies to A_n or A_np configurations");

    const std::size_t count = cfg.count();
    std::vector<std::uint32_t> perm(count);
    for (std::size_t i = 0; i < count; ++i) perm[i] = static_cast<std::uint32_t>(i);

    // Explicit Fisher-Yates so the permutation depends only on the seed,
    // not on a library's shuffle implementation.
    std::mt19937_64 rng(seed);
    for (std::size_t i = count; i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(perm[i - 1], perm[j]);
    }

    CenterConfiguration out = cfg;
    out.family = Family::Anr;
    out.seed = seed;
    out.permutation = perm;
    out.vectors = Matrix(count, cfg.ambient_dim);
    for (std::size_t k = 0; k < count; ++k)
        std::copy_n(cfg.vectors.row(perm[k]), cfg.ambient_dim, out.vectors.row(k));
    return out;
}

CenterConfiguration interpolate(const CenterConfiguration& cfg, std::uint32_t levels) {
    if (levels == 0) return cfg;
    if (cfg.family != Family::An && cfg.family != Family::Anr)
        throw error(errc::invalid_input, "interpolation applies to A_n or A_nr configurations");
    if (cfg.interpolation_level + levels > 1)
        throw error(errc::unsupported_level,
                    "only one interpolation level is supported (requested " +
                        std::to_string(cfg.interpolation_level + levels) + ")");
    if (cfg.projection != Projection::None)
        throw error(errc::invalid_state, "interpolate before projecting");

    const std::size_t dim = cfg.ambient_dim;
    const std::size_t count = cfg.count();

    std::vector<RootPattern> pat(count);
    for (std::size_t r = 0; r < count; ++r) pat[r] = root_pattern(cfg.vectors.row(r), dim, r);

    // Positions grouped by shared +1 / -1 coordinate; two roots sit at 60
    // degrees exactly when they share the plus index or the minus index.
    std::vector<std::vector<std::uint32_t>> by_plus(dim), by_minus(dim);
    for (std::size_t r = 0; r < count; ++r) {
        by_plus[pat[r].plus].push_back(static_cast<std::uint32_t>(r));
        by_minus[pat[r].minus].push_back(static_cast<std::uint32_t>(r));
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (const auto& group : {std::cref(by_plus), std::cref(by_minus)}) {
        for (const auto& members : group.get()) {
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b)
                    pairs.emplace_back(std::min(members[a], members[b]),
                                       std::max(members[a], members[b]));
        }
    }
    std::sort(pairs.begin(), pairs.end());

    CenterConfiguration out = cfg;
    out.interpolation_level = cfg.interpolation_level + levels;
    out.vectors = Matrix(count + pairs.size(), dim);
    std::copy(cfg.vectors.data.begin(), cfg.vectors.data.end(), out.vectors.data.begin());

    const double sqrt2 = std::sqrt(2.0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const double* u = cfg.vectors.row(pairs[p].first);
        const double* v = cfg.vectors.row(pairs[p].second);
        double* dst = out.vectors.row(count + p);
        double norm_sq = 0.0;
        for (std::size_t j = 0; j < dim; ++j) {
            dst[j] = u[j] + v[j];
            norm_sq += dst[j] * dst[j];
        }
        const double rescale = sqrt2 / std::sqrt(norm_sq);
        for (std::size_t j = 0; j < dim; ++j) dst[j] *= rescale;
    }
    return out;
}

CenterMatrix choose_centers(const CenterConfiguration& cfg, std::size_t n_classes) {
    if (n_classes == 0)
        throw error(errc::invalid_input, "n_classes must be positive");
    if (n_classes > cfg.count())
        throw error(errc::insufficient_vectors,
                    "requested " + std::to_string(n_classes) + " classes but the configuration has only " +
                        std::to_string(cfg.count()) + " vectors");

    CenterMatrix m;
    m.n_classes = n_classes;
    m.n_dim = cfg.ambient_dim;
    m.centers = Matrix(n_classes, cfg.ambient_dim);
    std::copy_n(cfg.vectors.data.data(), n_classes * cfg.ambient_dim, m.centers.data.data());
    m.source = family_name(cfg.family);
    return m;
}

CenterMatrix gen_rotation_2d(std::size_t n_classes, double circle_radius,
                             double base_cluster_radius) {
    if (n_classes == 0)
        throw error(errc::invalid_input, "n_classes must be positive");
    if (circle_radius <= 0.0 || base_cluster_radius <= 0.0)
        throw error(errc::invalid_input, "radii must be positive");

    std::vector<double> angles{0.0, 90.0, 180.0, 270.0};
    std::vector<double> radii(4, base_cluster_radius);
    double spacing = 90.0;
    while (angles.size() < n_classes) {
        // Rotate everything so far by half the current spacing; the copies
        // form the next generation with half the cluster radius.
        spacing /= 2.0;
        const std::size_t existing = angles.size();
        const double new_radius = radii.back() / 2.0;
        for (std::size_t i = 0; i < existing; ++i) {
            angles.push_back(angles[i] + spacing);
            radii.push_back(new_radius);
        }
    }

    CenterMatrix m;
    m.n_classes = n_classes;
    m.n_dim = 2;
    m.centers = Matrix(n_classes, 2);
    m.radii = std::vector<double>(radii.begin(), radii.begin() + n_classes);
    m.source = family_name(Family::Rotation2D);
    const double deg = std::acos(-1.0) / 180.0;
    for (std::size_t i = 0; i < n_classes; ++i) {
        m.centers.at(i, 0) = circle_radius * std::cos(angles[i] * deg);
        m.centers.at(i, 1) = circle_radius * std::sin(angles[i] * deg);
    }
    return m;
}

std::uint64_t an_capacity(std::uint64_t n, std::uint32_t interpolation_levels) {
    if (interpolation_levels > 1)
        throw error(errc::unsupported_level, "capacity is defined for interpolation levels 0 and 1");
    std::uint64_t cap = n * (n + 1);
    if (interpolation_levels == 1) cap += n * (n * n - 1);
    return cap;
}

std::uint32_t min_n_dim(std::uint64_t n_classes, std::uint32_t interpolation_levels) {
    if (n_classes == 0)
        throw error(errc::invalid_input, "n_classes must be positive");
    for (std::uint64_t n = 1;; ++n) {
        if (an_capacity(n, interpolation_levels) >= n_classes)
            return static_cast<std::uint32_t>(n);
    }
}

}  // namespace lsc

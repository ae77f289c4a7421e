#include "lsc/fastassign.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <queue>
#include <unordered_set>

namespace lsc {

const char* assign_mode_name(AssignMode m) {
    switch (m) {
        case AssignMode::FullRoots: return "full-roots";
        case AssignMode::SubsetRoots: return "subset-roots";
        case AssignMode::BruteForce: return "brute-force";
    }
    return "brute-force";
}

namespace {

// Same accumulation order as the cos_sim norm so candidate similarities
// are bit-identical to the brute-force path.
double query_norm(std::span<const double> z) {
    double s = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k) s += z[k] * z[k];
    return std::sqrt(s);
}

const double kSqrt2 = std::sqrt(2.0);

struct Candidate {
    double sim;
    std::int32_t cls;
};

void consider(Candidate& best, double sim, std::int32_t cls) {
    if (best.cls < 0 || sim > best.sim || (sim == best.sim && cls < best.cls)) {
        best.sim = sim;
        best.cls = cls;
    }
}

struct RowIdentity {
    bool is_pair = false;
    std::size_t i = 0, j = 0;  // pair (i, j): root e_i - e_j
    bool axis_positive = false;
    std::size_t axis = 0;  // drop residue +-e_axis
};

RowIdentity identify_row(const double* row, std::size_t dim, bool dropped, std::size_t cls) {
    std::size_t plus = dim, minus = dim;
    for (std::size_t k = 0; k < dim; ++k) {
        if (row[k] == 0.0) continue;
        if (row[k] == 1.0 && plus == dim) plus = k;
        else if (row[k] == -1.0 && minus == dim) minus = k;
        else
            throw error(errc::inconsistent_provenance,
                        "center row " + std::to_string(cls) + " is not a root-structured vector");
    }
    RowIdentity id;
    if (plus < dim && minus < dim) {
        id.is_pair = true;
        id.i = plus;
        id.j = minus;
        return id;
    }
    if (!dropped || (plus == dim && minus == dim))
        throw error(errc::inconsistent_provenance,
                    "center row " + std::to_string(cls) + " is not a root-structured vector");
    id.axis_positive = (plus < dim);
    id.axis = id.axis_positive ? plus : minus;
    return id;
}

}  // namespace

AssignmentIndex build_index(const CenterConfiguration& cfg, const CenterMatrix& C) {
    if (C.n_dim != cfg.ambient_dim)
        throw error(errc::inconsistent_provenance, "center matrix dimension differs from configuration");
    if (C.n_classes > cfg.count())
        throw error(errc::inconsistent_provenance, "center matrix has more rows than the configuration");
    const std::size_t prefix = C.n_classes * C.n_dim;
    if (std::memcmp(C.centers.data.data(), cfg.vectors.data.data(), prefix * sizeof(double)) != 0)
        throw error(errc::inconsistent_provenance,
                    "center matrix rows are not a prefix of the configuration vectors");

    AssignmentIndex index;
    index.centers = &C;
    index.projection = cfg.projection;
    index.rank = cfg.rank;

    const bool root_family =
        cfg.family == Family::An || cfg.family == Family::Anr || cfg.family == Family::Anp;
    if (!root_family || cfg.interpolation_level > 0 || cfg.projection == Projection::Isometric) {
        index.mode = AssignMode::BruteForce;
        return index;
    }

    const std::size_t n = cfg.rank;
    const bool dropped = cfg.projection == Projection::DropLast;
    const std::uint64_t full_count = static_cast<std::uint64_t>(n) * (n + 1);
    index.mode = (cfg.family != Family::Anp && C.n_classes == full_count) ? AssignMode::FullRoots
                                                                          : AssignMode::SubsetRoots;
    index.axis_pos_class.assign(C.n_dim, -1);
    index.axis_neg_class.assign(C.n_dim, -1);
    for (std::size_t cls = 0; cls < C.n_classes; ++cls) {
        RowIdentity id = identify_row(C.center(cls), C.n_dim, dropped, cls);
        if (id.is_pair) {
            const std::uint64_t key = static_cast<std::uint64_t>(id.i) * (n + 1) + id.j;
            if (!index.pair_to_class.emplace(key, static_cast<std::int32_t>(cls)).second)
                throw error(errc::inconsistent_provenance,
                            "duplicate root in center matrix at row " + std::to_string(cls));
        } else {
            auto& slot = id.axis_positive ? index.axis_pos_class[id.axis] : index.axis_neg_class[id.axis];
            if (slot >= 0)
                throw error(errc::inconsistent_provenance,
                            "duplicate axis residue in center matrix at row " + std::to_string(cls));
            slot = static_cast<std::int32_t>(cls);
        }
    }
    return index;
}

namespace {

struct Extremes {
    double max1 = -std::numeric_limits<double>::infinity(), max2 = -std::numeric_limits<double>::infinity();
    double min1 = std::numeric_limits<double>::infinity(), min2 = std::numeric_limits<double>::infinity();
    std::ptrdiff_t imax1 = -1, imax2 = -1, imin1 = -1, imin2 = -1;
    double norm = 0.0;
};

Extremes scan(std::span<const double> z) {
    Extremes e;
    double s = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k) {
        s += z[k] * z[k];
        if (z[k] > e.max1) {
            e.max2 = e.max1; e.imax2 = e.imax1;
            e.max1 = z[k]; e.imax1 = static_cast<std::ptrdiff_t>(k);
        } else if (z[k] > e.max2) {
            e.max2 = z[k]; e.imax2 = static_cast<std::ptrdiff_t>(k);
        }
        if (z[k] < e.min1) {
            e.min2 = e.min1; e.imin2 = e.imin1;
            e.min1 = z[k]; e.imin1 = static_cast<std::ptrdiff_t>(k);
        } else if (z[k] < e.min2) {
            e.min2 = z[k]; e.imin2 = static_cast<std::ptrdiff_t>(k);
        }
    }
    e.norm = std::sqrt(s);
    return e;
}

std::int32_t pair_class(const AssignmentIndex& index, std::size_t i, std::size_t j) {
    const auto it = index.pair_to_class.find(static_cast<std::uint64_t>(i) * (index.rank + 1) + j);
    return it == index.pair_to_class.end() ? -1 : it->second;
}

std::int32_t assign_full_roots(const AssignmentIndex& index, std::span<const double> z,
                               const Extremes& e, AssignStats* stats) {
    const double nz = e.norm;
    const bool dropped = index.projection == Projection::DropLast;
    Candidate best{0.0, -1};

    auto consider_pair = [&](std::ptrdiff_t a, std::ptrdiff_t b) {
        if (a < 0 || b < 0 || a == b) return;
        const std::int32_t cls = pair_class(index, static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        if (cls < 0) return;
        consider(best, (z[a] - z[b]) / (nz * kSqrt2), cls);
    };
    auto consider_axis = [&](std::ptrdiff_t a, bool positive) {
        if (!dropped || a < 0) return;
        const std::int32_t cls = positive ? index.axis_pos_class[a] : index.axis_neg_class[a];
        if (cls < 0) return;
        const double dot = positive ? z[a] : -z[a];
        consider(best, dot / (nz * 1.0), cls);
    };

    const bool max_dup = e.imax2 >= 0 && e.max2 == e.max1;
    const bool min_dup = e.imin2 >= 0 && e.min2 == e.min1;
    if (!max_dup && !min_dup) {
        consider_pair(e.imax1, e.imin1);
        consider_pair(e.imax1, e.imin2);
        consider_pair(e.imax2, e.imin1);
        consider_pair(e.imax2, e.imin2);
        consider_axis(e.imax1, true);
        consider_axis(e.imax2, true);
        consider_axis(e.imin1, false);
        consider_axis(e.imin2, false);
        return best.cls;
    }

    // Repeated extreme values: ties must resolve to the lowest class index,
    // so enumerate every extreme coordinate.
    if (stats) stats->coordinate_passes++;
    std::vector<std::ptrdiff_t> arg_max, arg_min;
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (z[k] == e.max1) arg_max.push_back(static_cast<std::ptrdiff_t>(k));
        if (z[k] == e.min1) arg_min.push_back(static_cast<std::ptrdiff_t>(k));
    }
    for (std::ptrdiff_t a : arg_max)
        for (std::ptrdiff_t b : arg_min) consider_pair(a, b);
    if (e.imax2 >= 0 && !max_dup) for (std::ptrdiff_t b : arg_min) consider_pair(e.imax2, b);
    if (e.imin2 >= 0 && !min_dup) for (std::ptrdiff_t a : arg_max) consider_pair(a, e.imin2);
    for (std::ptrdiff_t a : arg_max) consider_axis(a, true);
    for (std::ptrdiff_t b : arg_min) consider_axis(b, false);
    if (e.imax2 >= 0 && !max_dup) consider_axis(e.imax2, true);
    if (e.imin2 >= 0 && !min_dup) consider_axis(e.imin2, false);
    return best.cls;
}

std::int32_t assign_subset_roots(const AssignmentIndex& index, std::span<const double> z,
                                 double nz, AssignStats* stats) {
    const std::size_t d = z.size();
    const std::uint64_t probe_bound = static_cast<std::uint64_t>(d) * d;
    std::uint64_t probes = 0;
    Candidate best{0.0, -1};

    std::vector<std::uint32_t> desc(d), asc(d);
    for (std::size_t k = 0; k < d; ++k) desc[k] = asc[k] = static_cast<std::uint32_t>(k);
    std::sort(desc.begin(), desc.end(), [&](std::uint32_t a, std::uint32_t b) {
        return z[a] != z[b] ? z[a] > z[b] : a < b;
    });
    std::sort(asc.begin(), asc.end(), [&](std::uint32_t a, std::uint32_t b) {
        return z[a] != z[b] ? z[a] < z[b] : a < b;
    });
    if (stats) stats->coordinate_passes++;  // the sort reads the query again

    // Drop residues first: walk coordinates in decreasing dot-product order
    // and stop once no remaining axis can beat the best similarity.
    if (index.projection == Projection::DropLast) {
        for (std::uint32_t i : desc) {
            const double sim = z[i] / (nz * 1.0);
            if (best.cls >= 0 && sim < best.sim) break;
            ++probes;
            if (index.axis_pos_class[i] >= 0) consider(best, sim, index.axis_pos_class[i]);
        }
        for (std::uint32_t j : asc) {
            const double sim = -z[j] / (nz * 1.0);
            if (best.cls >= 0 && sim < best.sim) break;
            ++probes;
            if (index.axis_neg_class[j] >= 0) consider(best, sim, index.axis_neg_class[j]);
        }
    }

    // Best-first enumeration of coordinate pairs by z_i - z_j. Raw values
    // are non-increasing along the pops, so the strict `<` cut is exact
    // even when distinct raw values round to the same similarity.
    struct Entry {
        double raw;
        std::uint32_t p, q;
        bool operator<(const Entry& other) const { return raw < other.raw; }
    };
    std::priority_queue<Entry> heap;
    std::unordered_set<std::uint64_t> visited;
    auto push = [&](std::uint32_t p, std::uint32_t q) {
        if (p >= d || q >= d) return;
        const std::uint64_t key = static_cast<std::uint64_t>(p) * d + q;
        if (!visited.insert(key).second) return;
        heap.push({z[desc[p]] - z[asc[q]], p, q});
    };
    push(0, 0);
    while (!heap.empty()) {
        const Entry top = heap.top();
        heap.pop();
        if (probes > probe_bound) {
            if (stats) stats->fell_back = true;
            return assign_label_cos_row(z, *index.centers);
        }
        push(top.p + 1, top.q);
        push(top.p, top.q + 1);
        const std::uint32_t a = desc[top.p], b = asc[top.q];
        if (a == b) continue;
        const double sim = (z[a] - z[b]) / (nz * kSqrt2);
        if (best.cls >= 0 && sim < best.sim) break;
        ++probes;
        const std::int32_t cls = pair_class(index, a, b);
        if (cls >= 0) consider(best, sim, cls);
    }
    if (stats) stats->candidate_probes += probes;

    if (best.cls < 0) {
        if (stats) stats->fell_back = true;
        return assign_label_cos_row(z, *index.centers);
    }
    return best.cls;
}

}  // namespace

std::int32_t assign_fast(const AssignmentIndex& index, std::span<const double> z,
                         AssignStats* stats) {
    if (z.size() != index.n_dim())
        throw error(errc::shape_mismatch, "assign_fast: query dimension != center dimension");
    if (index.mode == AssignMode::BruteForce) return assign_label_cos_row(z, *index.centers);

    if (stats) stats->coordinate_passes++;
    const Extremes e = scan(z);
    if (e.norm == 0.0) throw error(errc::degenerate_input, "assign_fast: zero query vector");

    if (index.mode == AssignMode::FullRoots) return assign_full_roots(index, z, e, stats);
    return assign_subset_roots(index, z, e.norm, stats);
}

std::vector<std::int32_t> assign_topk(const AssignmentIndex& index, std::span<const double> z,
                                      std::size_t k) {
    if (k < 1 || k > index.n_classes())
        throw error(errc::invalid_k, "assign_topk: k must be in [1, " +
                                         std::to_string(index.n_classes()) + "], got " + std::to_string(k));
    const CenterMatrix& C = *index.centers;
    std::vector<std::pair<double, std::int32_t>> sims(C.n_classes);
    for (std::size_t i = 0; i < C.n_classes; ++i)
        sims[i] = {cos_sim(z, std::span<const double>(C.center(i), C.n_dim)),
                   static_cast<std::int32_t>(i)};
    std::partial_sort(sims.begin(), sims.begin() + k, sims.end(),
                      [](const auto& a, const auto& b) {
                          return a.first != b.first ? a.first > b.first : a.second < b.second;
                      });
    std::vector<std::int32_t> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = sims[i].second;
    return out;
}

}  // namespace lsc

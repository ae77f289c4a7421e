#ifndef LSC_FASTASSIGN_HPP
#define LSC_FASTASSIGN_HPP

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "lsc/losses.hpp"
#include "lsc/rootsys.hpp"

namespace lsc {

enum class AssignMode { FullRoots, SubsetRoots, BruteForce };

const char* assign_mode_name(AssignMode m);

/// Per-query instrumentation for the fast paths.
struct AssignStats {
    std::uint64_t coordinate_passes = 0;  // full scans of the query vector
    std::uint64_t candidate_probes = 0;   // pair/axis map lookups
    bool fell_back = false;               // hit the probe bound, used brute force
};

/// Nearest-center index for A_n-family configurations. Exploits the root
/// structure: cosine similarity against e_i - e_j depends only on
/// z_i - z_j, and against a drop-projection residue +-e_i only on z_i.
/// Exact-equivalent to assign_labels_cos, including tie-breaks.
///
/// Holds a reference to the CenterMatrix; the matrix must outlive the
/// index. Queries are pure and safe to run concurrently.
struct AssignmentIndex {
    AssignMode mode = AssignMode::BruteForce;
    std::uint32_t rank = 0;
    Projection projection = Projection::None;
    // key = i * (rank + 1) + j over original root indices (i, j)
    std::unordered_map<std::uint64_t, std::int32_t> pair_to_class;
    std::vector<std::int32_t> axis_pos_class;  // +e_i -> class, -1 if absent
    std::vector<std::int32_t> axis_neg_class;  // -e_i -> class, -1 if absent
    const CenterMatrix* centers = nullptr;

    std::size_t n_dim() const { return centers->n_dim; }
    std::size_t n_classes() const { return centers->n_classes; }
};

/// Classifies the configuration and builds the pair/axis maps by reading
/// the root identity off each center row. C must be choose_centers(cfg, k).
AssignmentIndex build_index(const CenterConfiguration& cfg, const CenterMatrix& C);

/// Nearest center by cosine similarity; identical result to
/// assign_labels_cos on the same centers for every input.
std::int32_t assign_fast(const AssignmentIndex& index, std::span<const double> z,
                         AssignStats* stats = nullptr);

/// Top-k classes by cosine similarity, descending, ties by class index.
std::vector<std::int32_t> assign_topk(const AssignmentIndex& index, std::span<const double> z,
                                      std::size_t k);

}  // namespace lsc

#endif  // LSC_FASTASSIGN_HPP

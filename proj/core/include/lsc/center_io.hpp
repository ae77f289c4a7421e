#ifndef LSC_CENTER_IO_HPP
#define LSC_CENTER_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "lsc/rootsys.hpp"

namespace lsc {

/// LSC1 binary center file: magic "LSC1", u32 LE n_dim, u32 LE n_vectors,
/// then n_vectors x n_dim float32 LE, row-major. A human-readable
/// key=value sidecar at <path>.meta records family, rank, projection,
/// seed, interpolation level, permutation and radii.
struct CenterFile {
    CenterConfiguration cfg;
    std::optional<std::vector<double>> radii;
};

void save_centers(const CenterConfiguration& cfg,
                  const std::optional<std::vector<double>>& radii, const std::string& path);

CenterFile load_centers(const std::string& path);

/// Centers for training/assignment: the first n_classes file vectors
/// (all of them when n_classes is 0), radii attached when present.
CenterMatrix centers_from_file(const CenterFile& file, std::size_t n_classes = 0);

}  // namespace lsc

#endif  // LSC_CENTER_IO_HPP

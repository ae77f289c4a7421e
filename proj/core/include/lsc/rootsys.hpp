#ifndef LSC_ROOTSYS_HPP
#define LSC_ROOTSYS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsc/matrix.hpp"

namespace lsc {

enum class Family { An, Anp, Anr, Rotation2D, CEembs, Custom };
enum class Projection { None, DropLast, Isometric };

const char* family_name(Family f);
const char* projection_name(Projection p);
std::optional<Family> family_from_name(const std::string& s);
std::optional<Projection> projection_from_name(const std::string& s);

/// A named family of center vectors plus the provenance needed to
/// regenerate or index it (rank, projection, shuffle seed, ...).
struct CenterConfiguration {
    Family family = Family::Custom;
    std::size_t ambient_dim = 0;
    Matrix vectors;  // n_vectors x ambient_dim
    std::optional<std::uint64_t> seed;
    std::uint32_t interpolation_level = 0;
    Projection projection = Projection::None;
    std::optional<std::vector<std::uint32_t>> permutation;
    std::uint32_t rank = 0;  // n for the A_n families, 0 otherwise

    std::size_t count() const { return vectors.rows; }
};

/// The n_classes x n_dim matrix of chosen training targets, with
/// optional per-class radii for the distance loss.
struct CenterMatrix {
    std::size_t n_classes = 0;
    std::size_t n_dim = 0;
    Matrix centers;
    std::optional<std::vector<double>> radii;
    std::string source = "Custom";

    const double* center(std::size_t cls) const { return centers.row(cls); }
    double radius(std::size_t cls) const {
        return radii ? (*radii)[cls] : 1.0;
    }
};

/// Checks the no-duplicate-rows invariant (pairwise cosine < 1 - 1e-9).
/// O(n_classes^2); intended for tests and small matrices.
bool has_duplicate_rows(const CenterMatrix& m);

// --- generating and transforming root systems ---------------------------

/// All roots e_i - e_j (i != j) of A_n in n+1 dimensions, ordered
/// lexicographically by (i, j). Count is n(n+1), every vector has norm
/// sqrt(2).
CenterConfiguration gen_an_roots(std::uint32_t n);

/// Removes the last coordinate of every vector.
CenterConfiguration project_drop(const CenterConfiguration& cfg);

/// Re-expresses the vectors in an orthonormal basis of the sum-zero
/// hyperplane. Angles and norms are preserved; dimension drops by one.
CenterConfiguration project_isometric(const CenterConfiguration& cfg);

/// Keeps the positive roots e_i - e_j with i < j; count n(n+1)/2.
CenterConfiguration positive_subset(const CenterConfiguration& cfg);

/// Seed-deterministic reorder of the full vector list (the A_nr family).
CenterConfiguration shuffle(const CenterConfiguration& cfg, std::uint64_t seed);

/// Level 1 appends, for every unordered pair of roots at 60 degrees, the
/// midpoint rescaled to norm sqrt(2). Appends n(n^2-1) vectors, each at
/// 30 degrees from both parents. Level 0 is the identity.
CenterConfiguration interpolate(const CenterConfiguration& cfg, std::uint32_t levels);

/// First n_classes vectors, in configuration order, as class centers.
CenterMatrix choose_centers(const CenterConfiguration& cfg, std::size_t n_classes);

/// 2D generation-doubling configuration: 4 vectors at 90 degrees on a
/// circle, each generation rotates the existing set by half the current
/// spacing and halves the cluster radius of the new vectors.
CenterMatrix gen_rotation_2d(std::size_t n_classes, double circle_radius,
                             double base_cluster_radius);

/// Number of classes a rank-n configuration can host: n(n+1) roots,
/// plus n(n^2-1) interpolated vectors at level 1.
std::uint64_t an_capacity(std::uint64_t n, std::uint32_t interpolation_levels);

/// Smallest rank n with an_capacity(n, levels) >= n_classes.
std::uint32_t min_n_dim(std::uint64_t n_classes, std::uint32_t interpolation_levels);

}  // namespace lsc

#endif  // LSC_ROOTSYS_HPP

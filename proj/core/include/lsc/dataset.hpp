#ifndef LSC_DATASET_HPP
#define LSC_DATASET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lsc/matrix.hpp"

namespace lsc {

enum class Split { Train, Eval };

/// Feature vectors with integer class labels. Features are stored as
/// float32, the precision of the CSV interchange format.
struct LabeledDataset {
    std::size_t feature_dim = 0;
    std::vector<float> features;  // m x feature_dim, row-major
    std::vector<std::int32_t> labels;
    std::int32_t n_classes_present = 0;
    Split split = Split::Train;

    std::size_t size() const { return labels.size(); }
    const float* row(std::size_t i) const { return features.data() + i * feature_dim; }

    /// Rows [begin, end) as a double matrix for the math paths.
    Matrix rows_as_matrix(std::size_t begin, std::size_t end) const;
};

/// k seeded random unit directions scaled to norm 10, each surrounded by
/// per_class isotropic Gaussian samples of the given spread. Classes are
/// exactly balanced and the output is a pure function of the seed.
LabeledDataset gen_blobs(std::size_t k, std::size_t d, std::size_t per_class, double spread,
                         std::uint64_t seed);

/// Replaces labels with 0..m-1 in row order (every sample its own class).
LabeledDataset unique_label_expand(const LabeledDataset& ds);

/// CSV rows "label,f0,f1,...". Parse errors cite the 1-based line number.
LabeledDataset load_csv(const std::string& path, bool header = false);
void save_csv(const LabeledDataset& ds, const std::string& path, bool header = false);

/// Feature-only CSV rows "f0,f1,..." (the assign command's input stream).
Matrix load_feature_csv(const std::string& path, bool header = false);

}  // namespace lsc

#endif  // LSC_DATASET_HPP

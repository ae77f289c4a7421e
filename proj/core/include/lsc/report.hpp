#ifndef LSC_REPORT_HPP
#define LSC_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lsc {

/// One line of the parameter-count comparison between center-matching
/// training (constant size) and a classification head (n_dim * n_classes
/// extra weights).
struct ParamReportRow {
    std::string method;  // "LSC" or "Classification"
    std::uint64_t n_classes = 0;
    std::uint64_t backbone_params = 0;
    std::uint64_t extra_params = 0;
    std::uint64_t total_params = 0;
    std::string output_shape;
    bool crossover = false;  // extra_params > backbone_params
};

struct ParamReport {
    std::uint64_t n_dim = 0;
    std::uint64_t backbone_params = 0;
    std::vector<ParamReportRow> rows;
};

ParamReport build_param_report(std::uint64_t n_dim, std::uint64_t backbone_params,
                               const std::vector<std::uint64_t>& n_classes_list);

std::string format_param_report(const ParamReport& report);  // aligned text table
std::string param_report_csv(const ParamReport& report);

}  // namespace lsc

#endif  // LSC_REPORT_HPP

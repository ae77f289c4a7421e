#include "lsc/report.hpp"

#include <sstream>

#include "lsc/error.hpp"

namespace lsc {

ParamReport build_param_report(std::uint64_t n_dim, std::uint64_t backbone_params,
                               const std::vector<std::uint64_t>& n_classes_list) {
    if (n_dim == 0 || backbone_params == 0)
        throw error(errc::invalid_input, "n_dim and backbone_params must be positive");

    ParamReport report;
    report.n_dim = n_dim;
    report.backbone_params = backbone_params;
    for (std::uint64_t nc : n_classes_list) {
        if (nc == 0) throw error(errc::invalid_input, "n_classes entries must be positive");
        ParamReportRow lsc_row;
        lsc_row.method = "LSC";
        lsc_row.n_classes = nc;
        lsc_row.backbone_params = backbone_params;
        lsc_row.extra_params = 0;
        lsc_row.total_params = backbone_params;
        lsc_row.output_shape = "[b_s, " + std::to_string(n_dim) + "]";
        report.rows.push_back(lsc_row);

        ParamReportRow cls_row;
        cls_row.method = "Classification";
        cls_row.n_classes = nc;
        cls_row.backbone_params = backbone_params;
        cls_row.extra_params = n_dim * nc;
        cls_row.total_params = backbone_params + cls_row.extra_params;
        cls_row.output_shape = "[b_s, " + std::to_string(nc) + "]";
        cls_row.crossover = cls_row.extra_params > backbone_params;
        report.rows.push_back(cls_row);
    }
    return report;
}

std::string format_param_report(const ParamReport& report) {
    std::ostringstream os;
    os << "method          n_classes    backbone       extra          total          out_shape\n";
    for (const auto& r : report.rows) {
        os << r.method;
        for (std::size_t i = r.method.size(); i < 16; ++i) os << ' ';
        std::string cells[4] = {std::to_string(r.n_classes), std::to_string(r.backbone_params),
                                std::to_string(r.extra_params), std::to_string(r.total_params)};
        for (const auto& cell : cells) {
            os << cell;
            for (std::size_t i = cell.size(); i < 13; ++i) os << ' ';
        }
        os << r.output_shape;
        if (r.crossover) os << "  # classification layer exceeds backbone";
        os << '\n';
    }
    return os.str();
}

std::string param_report_csv(const ParamReport& report) {
    std::ostringstream os;
    os << "method,n_classes,backbone_params,extra_params,total_params,output_shape,crossover\n";
    for (const auto& r : report.rows) {
        os << r.method << ',' << r.n_classes << ',' << r.backbone_params << ',' << r.extra_params
           << ',' << r.total_params << ',' << '"' << r.output_shape << '"' << ','
           << (r.crossover ? 1 : 0) << '\n';
    }
    return os.str();
}

}  // namespace lsc

#include <doctest.h>

#include "lsc/report.hpp"
#include "lsc/error.hpp"

using namespace lsc;

TEST_CASE("param report rows") {
    const auto report =
        build_param_report(384, 22000000, {10, 1000, 100000, 1000000});
    REQUIRE(report.rows.size() == 8);

    const std::uint64_t extras[4] = {384ull * 10, 384ull * 1000, 384ull * 100000, 384ull * 1000000};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& lsc_row = report.rows[2 * i];
        const auto& cls_row = report.rows[2 * i + 1];
        CHECK(lsc_row.method == "LSC");
        CHECK(lsc_row.extra_params == 0);
        CHECK(lsc_row.total_params == 22000000);
        CHECK(lsc_row.output_shape == "[b_s, 384]");
        CHECK(cls_row.method == "Classification");
        CHECK(cls_row.extra_params == extras[i]);
        CHECK(cls_row.total_params == 22000000 + extras[i]);
    }

    // the crossover is flagged exactly where the head outgrows the backbone
    CHECK(!report.rows[1].crossover);  // 3840
    CHECK(!report.rows[3].crossover);  // 384k
    CHECK(report.rows[5].crossover);   // 38.4m > 22m
    CHECK(report.rows[7].crossover);   // 384m

    CHECK_THROWS_AS(build_param_report(0, 22000000, {10}), error);
    CHECK_THROWS_AS(build_param_report(384, 22000000, {0}), error);
}

TEST_CASE("param report formats") {
    const auto report = build_param_report(4, 100, {10, 50});
    const std::string text = format_param_report(report);
    CHECK(text.find("LSC") != std::string::npos);
    CHECK(text.find("Classification") != std::string::npos);
    CHECK(text.find("exceeds backbone") != std::string::npos);  // 4*50=200 > 100

    const std::string csv = param_report_csv(report);
    CHECK(csv.rfind("method,n_classes,backbone_params,extra_params,total_params,output_shape,crossover\n", 0) == 0);
    CHECK(csv.find("Classification,50,100,200,300,\"[b_s, 50]\",1") != std::string::npos);
}

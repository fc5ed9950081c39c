#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "seedopt/simulate.hpp"

namespace seedopt {

/// One analytic quantity paired with its Monte Carlo estimate. Agreement
/// means |analytic - mean| <= 3 * std_error.
struct ReportRow {
    std::string quantity;
    double analytic = 0.0;
    double mc_mean = 0.0;
    double mc_stderr = 0.0;
    std::int64_t trials = 0;
    bool agree = false;
};

struct ExperimentReport {
    std::vector<ReportRow> rows;

    bool all_agree() const;
};

ReportRow make_report_row(std::string quantity, double analytic, const SimulationEstimate& est);

std::string report_to_csv(const ExperimentReport& report);

void print_report(std::ostream& out, const ExperimentReport& report);

} // namespace seedopt

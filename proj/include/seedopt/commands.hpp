#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seedopt/optimizer.hpp"
#include "seedopt/report.hpp"

namespace seedopt {

/// Drivers behind the CLI subcommands, kept separate from argument parsing
/// so they can be exercised in-process.

struct AnalyzeResult {
    PercolationProfile profile;
    double lambda1_good = 0.0;
    double lambda1_bad = 0.0;
    Phase phase_good = Phase::Supercritical;
    Phase phase_bad = Phase::Subcritical;
};

AnalyzeResult cmd_analyze(const Scenario& s);
std::string analyze_to_csv(const Scenario& s, const AnalyzeResult& r);
void print_analyze(std::ostream& out, const Scenario& s, const AnalyzeResult& r);

struct OptimizeResult {
    OptimizationResult opt;
    // log(n)/log(1/(1-y(j*))): the only term that survives as n grows.
    double leading_term = 0.0;
    std::optional<std::int64_t> er_closed_form;   // one-type scenarios only
};

OptimizeResult cmd_optimize(const Scenario& s);
std::string optimize_to_csv(const Scenario& s, const OptimizeResult& r);
void print_optimize(std::ostream& out, const Scenario& s, const OptimizeResult& r);

enum class StateFilter { Both, GoodOnly, BadOnly };

struct SimulateOptions {
    std::int64_t n = 20000;
    std::int64_t trials = 100;
    std::uint64_t base_seed = 20240913;
    StateFilter state = StateFilter::Both;
    // Seed counts per type for the adoption rows; defaults to the
    // optimizer's integer plan computed at n.
    std::optional<std::vector<std::int64_t>> plan_override;
    ExecMode mode = ExecMode::Parallel;
};

ExperimentReport cmd_simulate(const Scenario& s, const SimulateOptions& opts);

struct SweepRow {
    std::int64_t n = 0;
    std::int64_t integer_count = 0;
    double count_over_log_n = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    double limit = 0.0;   // 1/log(1/(1-y(j*)))
};

SweepResult cmd_sweep(const Scenario& s, const std::vector<std::int64_t>& n_values);
std::string sweep_to_csv(const SweepResult& r);
void print_sweep(std::ostream& out, const SweepResult& r);

} // namespace seedopt

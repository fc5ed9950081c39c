#pragma once

#include <cstdint>
#include <vector>

#include "seedopt/graph.hpp"

namespace seedopt {

struct SimulationEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t trials = 0;
};

/// Serial runs the trial loop on one thread; Parallel distributes trials
/// over OpenMP threads. Per-trial seeds derive from (base_seed, trial), and
/// estimates reduce over stored per-trial values in index order, so both
/// modes produce bit-identical results.
enum class ExecMode { Serial, Parallel };

SimulationEstimate estimate_from_samples(const std::vector<double>& samples);

/// Mean and standard error of adoption under the plan across independent
/// graph + seed-placement draws.
SimulationEstimate monte_carlo_adoption(const Scenario& s, WorldState state, std::int64_t n,
                                        const SeedingPlan& plan, std::int64_t trials,
                                        std::uint64_t base_seed,
                                        ExecMode mode = ExecMode::Parallel);

/// Mean and standard error of (largest component size) / n.
SimulationEstimate largest_component_fraction(const Scenario& s, WorldState state,
                                              std::int64_t n, std::int64_t trials,
                                              std::uint64_t base_seed,
                                              ExecMode mode = ExecMode::Parallel);

/// Everything the analytic profile predicts, measured in one pass per trial:
/// the largest-component fraction, per-type giant membership, per-type mean
/// component size, and per-type mean component size outside the giant.
struct TypeProfileEstimates {
    SimulationEstimate largest_fraction;
    std::vector<SimulationEstimate> giant_fraction_by_type;
    std::vector<SimulationEstimate> component_size_by_type;
    std::vector<SimulationEstimate> small_component_size_by_type;
};

TypeProfileEstimates monte_carlo_type_profile(const Scenario& s, WorldState state,
                                              std::int64_t n, std::int64_t trials,
                                              std::uint64_t base_seed,
                                              ExecMode mode = ExecMode::Parallel);

} // namespace seedopt

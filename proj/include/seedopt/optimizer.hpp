#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "seedopt/percolation.hpp"

namespace seedopt {

/// Output of the relaxed single-type optimization.
struct OptimizationResult {
    std::size_t best_type = 0;    // j*
    double q_star = 0.0;          // target probability of hitting the giant component
    double relaxed_count = 0.0;   // real-valued seed count on j*
    std::int64_t integer_count = 0;
    SeedingPlan plan;             // all mass on j*, integer_count seeds
    double utility_analytic = 0.0;
    // (k, marginal utility of the k-th seed of type j*), k = 1..integer_count+1
    std::vector<std::pair<std::int64_t, double>> marginal_schedule;
};

/// Closed-form optimal count for the one-type case, ceil of
///   [log n + 2 log y - log(lambda/(1-kb) - (1-y)/(1-(1-y)kg))] / log(1/(1-y)),
/// clamped at zero when the bracket is negative. Throws MarginalCostTooLow
/// when the log argument is non-positive (seeding never stops paying).
std::int64_t er_optimal_seed_count(double kg, double kb, double lambda, std::int64_t n);

/// Optimal probability of reaching the giant component,
/// max_i { 1 - (lambda C^B(i) - (1-y(i)) C^G(i)) / (y(i) y n) }, clamped to [0,1).
double q_star(const PercolationProfile& profile, const Scenario& s);

/// argmin_j (lambda C^B(j) - (1-y(j)) C^G(j)) / (-log(1-y(j))); ties go to
/// the lowest index. A type with y(j) = 1 wins outright (ratio taken as 0).
std::size_t best_type(const PercolationProfile& profile, const Scenario& s);

OptimizationResult relaxed_plan(const PercolationProfile& profile, const Scenario& s);

/// Exhaustive search over integer allocations with total <= budget.
/// Desk-scale only: at most 4 types and budget 40.
SeedingPlan brute_force_plan(const Scenario& s, const PercolationProfile& profile,
                             std::int64_t budget);

/// Integer seed count at each n; n_values must be strictly increasing.
std::vector<std::pair<std::int64_t, std::int64_t>> scaling_sweep(
    const Scenario& s, const std::vector<std::int64_t>& n_values);

} // namespace seedopt

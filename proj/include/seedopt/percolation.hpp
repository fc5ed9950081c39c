#pragma once

#include "seedopt/kernel_model.hpp"
#include "seedopt/types.hpp"

namespace seedopt {

constexpr double kFixedPointTol = 1e-12;
constexpr long kFixedPointIterationCap = 1000000;

/// Giant-component membership probabilities and small-component
/// expectations for one scenario. All quantities are per the branching
/// approximation; n enters only through the adoption formulas.
struct PercolationProfile {
    std::vector<double> y_by_type;   // P(type-i node is in the giant component)
    double y_aggregate = 0.0;        // sum_j y(j) mu(j)
    std::vector<double> c_bad;       // expected component size, bad state
    std::vector<double> c_good;      // expected non-giant component size, good state
    MeanOffspringMatrix dual;        // kappa_G(i,j)(1-y(j))mu(j)
};

/// Maximal solution of 1 - y(i) = exp(-sum_j kappa(i,j) y(j) mu(j)),
/// iterated from y = 1 so the trivial root at zero is avoided.
std::vector<double> solve_giant_fixed_point(const Kernel& kernel_good, const TypeSpace& types,
                                            double tol = kFixedPointTol);

double aggregate_giant_fraction(const std::vector<double>& y_by_type, const TypeSpace& types);

/// c = (I - M)^{-1} 1, the expected component size rooted at each type.
/// Requires spectral_radius(m) < 1.
std::vector<double> small_component_sizes(const MeanOffspringMatrix& m);

MeanOffspringMatrix dual_kernel(const Kernel& kernel_good, const std::vector<double>& y_by_type,
                                const TypeSpace& types);

PercolationProfile build_profile(const Scenario& s, double tol = kFixedPointTol);

/// A^B: each seed collects one expected small component.
double expected_adoption_bad(const SeedingPlan& plan, const PercolationProfile& profile,
                             const Scenario& s);

/// A^G: giant component counted once if any seed lands in it, plus the
/// expected small components of the seeds that miss.
double expected_adoption_good(const SeedingPlan& plan, const PercolationProfile& profile,
                              const Scenario& s);

double designer_utility(const SeedingPlan& plan, const PercolationProfile& profile,
                        const Scenario& s);

} // namespace seedopt

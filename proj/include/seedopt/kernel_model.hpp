#pragma once

#include "seedopt/types.hpp"

namespace seedopt {

enum class Phase { Subcritical, Critical, Supercritical };

constexpr double kPhaseEpsilon = 1e-9;
constexpr double kSpectralTol = 1e-12;
constexpr int kPowerIterationCap = 100000;

MeanOffspringMatrix mean_offspring(const Kernel& kernel, const TypeSpace& types);

/// Perron root of a non-negative matrix. Power iteration on I + M (the
/// shift keeps periodic kernels converging) with Rayleigh-quotient
/// stopping; throws NoConvergence past the iteration cap.
double spectral_radius(const MeanOffspringMatrix& m, double tol = kSpectralTol);

Phase phase(const MeanOffspringMatrix& m);

const char* phase_name(Phase p);

/// Checks every Scenario invariant including the phase assumptions
/// (good kernel supercritical, bad kernel subcritical). Returns its
/// argument untouched so call sites can validate inline.
const Scenario& validate_scenario(const Scenario& s);

} // namespace seedopt

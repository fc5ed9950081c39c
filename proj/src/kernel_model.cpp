#include "seedopt/kernel_model.hpp"

#include <cmath>
#include <set>
#include <string>

namespace seedopt {

namespace {

void check_type_space(const TypeSpace& t) {
    if (t.labels.empty()) throw BadProportions("type space must contain at least one type");
    if (t.labels.size() != t.mu.size())
        throw DimensionMismatch("labels and mu differ in length (" +
                                std::to_string(t.labels.size()) + " vs " +
                                std::to_string(t.mu.size()) + ")");
    std::set<std::string> seen;
    double sum = 0.0;
    for (std::size_t i = 0; i < t.labels.size(); ++i) {
        if (t.labels[i].empty()) throw BadProportions("empty type label at index " + std::to_string(i));
        if (!seen.insert(t.labels[i]).second)
            throw BadProportions("duplicate type label '" + t.labels[i] + "'");
        if (!(t.mu[i] >= 0.0) || !std::isfinite(t.mu[i]))
            throw BadProportions("mu(" + t.labels[i] + ") must be non-negative and finite");
        sum += t.mu[i];
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw BadProportions("mu must sum to 1, got " + std::to_string(sum));
}

void check_kernel(const Kernel& k, const TypeSpace& t, const char* which) {
    if (k.dim() != t.size())
        throw DimensionMismatch(std::string(which) + " kernel is " + std::to_string(k.dim()) +
                                "x" + std::to_string(k.dim()) + " but the type space has " +
                                std::to_string(t.size()) + " types");
    for (std::size_t i = 0; i < k.dim(); ++i)
        for (std::size_t j = 0; j < k.dim(); ++j) {
            const double v = k.entries(i, j);
            if (!std::isfinite(v) || v < 0.0)
                throw InvalidParameter(std::string(which) + " kernel entry (" +
                                       std::to_string(i) + "," + std::to_string(j) +
                                       ") must be finite and non-negative");
            if (v != k.entries(j, i))
                throw AsymmetricKernel(std::string(which) + " kernel is not symmetric at (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
        }
}

} // namespace

MeanOffspringMatrix mean_offspring(const Kernel& kernel, const TypeSpace& types) {
    if (kernel.dim() != types.size())
        throw DimensionMismatch("kernel dimension " + std::to_string(kernel.dim()) +
                                " does not match " + std::to_string(types.size()) + " types");
    Matrix m(kernel.dim());
    for (std::size_t i = 0; i < kernel.dim(); ++i)
        for (std::size_t j = 0; j < kernel.dim(); ++j)
            m(i, j) = kernel.entries(i, j) * types.mu[j];
    return MeanOffspringMatrix{std::move(m)};
}

double spectral_radius(const MeanOffspringMatrix& m, double tol) {
    const std::size_t dim = m.dim();
    if (dim == 0) throw DimensionMismatch("spectral_radius of an empty matrix");
    if (dim == 1) return m.entries(0, 0);

    // Iterate x <- (I + M) x. The all-ones start overlaps the Perron
    // vector of any non-negative matrix.
    std::vector<double> x(dim, 1.0);
    double rq_prev = -1.0;
    for (int it = 0; it < kPowerIterationCap; ++it) {
        std::vector<double> mx = m.entries.apply(x);
        double dot_x_mx = 0.0, dot_x_x = 0.0, norm = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            dot_x_mx += x[i] * (x[i] + mx[i]);
            dot_x_x += x[i] * x[i];
            const double next = x[i] + mx[i];
            norm = std::max(norm, std::abs(next));
            mx[i] = next;
        }
        const double rq = dot_x_mx / dot_x_x;   // Rayleigh quotient of I + M
        if (norm == 0.0) return 0.0;
        for (std::size_t i = 0; i < dim; ++i) x[i] = mx[i] / norm;
        if (it > 0 && std::abs(rq - rq_prev) < tol) return std::max(0.0, rq - 1.0);
        rq_prev = rq;
    }
    throw NoConvergence("power iteration did not converge in " +
                        std::to_string(kPowerIterationCap) + " iterations");
}

Phase phase(const MeanOffspringMatrix& m) {
    const double lambda1 = spectral_radius(m);
    if (lambda1 > 1.0 + kPhaseEpsilon) return Phase::Supercritical;
    if (lambda1 < 1.0 - kPhaseEpsilon) return Phase::Subcritical;
    return Phase::Critical;
}

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Subcritical: return "subcritical";
        case Phase::Critical: return "critical";
        case Phase::Supercritical: return "supercritical";
    }
    return "?";
}

const Scenario& validate_scenario(const Scenario& s) {
    check_type_space(s.types);
    check_kernel(s.kernel_good, s.types, "good");
    check_kernel(s.kernel_bad, s.types, "bad");
    if (!(s.lambda > 0.0) || !std::isfinite(s.lambda))
        throw InvalidParameter("lambda must be positive and finite");
    if (s.n < 1) throw InvalidParameter("n must be at least 1");

    const Phase pg = phase(mean_offspring(s.kernel_good, s.types));
    if (pg != Phase::Supercritical)
        throw PhaseViolation(std::string("good kernel must be supercritical, got ") +
                             phase_name(pg));
    const Phase pb = phase(mean_offspring(s.kernel_bad, s.types));
    if (pb != Phase::Subcritical)
        throw PhaseViolation(std::string("bad kernel must be subcritical, got ") +
                             phase_name(pb));
    return s;
}

} // namespace seedopt

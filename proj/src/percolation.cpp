#include "seedopt/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace seedopt {

std::vector<double> solve_linear(Matrix a, std::vector<double> b) {
    const std::size_t n = a.dim();
    if (b.size() != n) throw DimensionMismatch("solve_linear: rhs length mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (std::abs(a(pivot, col)) < 1e-14)
            throw SingularSystem("singular linear system (pivot " + std::to_string(col) + ")");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
            std::swap(b[col], b[pivot]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a(r, col) / a(col, col);
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
        x[i] = acc / a(i, i);
    }
    return x;
}

std::vector<double> solve_giant_fixed_point(const Kernel& kernel_good, const TypeSpace& types,
                                            double tol) {
    if (kernel_good.dim() != types.size())
        throw DimensionMismatch("fixed point: kernel/type-space dimension mismatch");
    const std::size_t dim = types.size();

    std::vector<double> y(dim, 1.0), next(dim);
    bool converged = false;
    for (long it = 0; it < kFixedPointIterationCap; ++it) {
        double change = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            double exponent = 0.0;
            for (std::size_t j = 0; j < dim; ++j)
                exponent += kernel_good.entries(i, j) * y[j] * types.mu[j];
            next[i] = -std::expm1(-exponent);
            change = std::max(change, std::abs(next[i] - y[i]));
        }
        y.swap(next);
        if (change < tol) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw NoConvergence("giant-component fixed point did not converge in " +
                            std::to_string(kFixedPointIterationCap) + " iterations");

    const double rho = spectral_radius(mean_offspring(kernel_good, types));
    if (rho > 1.0 + kPhaseEpsilon) {
        double ymax = 0.0;
        for (double v : y) ymax = std::max(ymax, v);
        if (ymax < 1e-8)
            throw DegenerateSolution("supercritical kernel but the fixed point collapsed to 0");
    }
    return y;
}

double aggregate_giant_fraction(const std::vector<double>& y_by_type, const TypeSpace& types) {
    if (y_by_type.size() != types.size())
        throw DimensionMismatch("aggregate_giant_fraction: y/type-space length mismatch");
    double agg = 0.0;
    for (std::size_t j = 0; j < types.size(); ++j) agg += y_by_type[j] * types.mu[j];
    return agg;
}

std::vector<double> small_component_sizes(const MeanOffspringMatrix& m) {
    if (spectral_radius(m) >= 1.0)
        throw SingularSystem("small_component_sizes requires a subcritical matrix");
    const std::size_t dim = m.dim();
    Matrix a = Matrix::identity(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) a(i, j) -= m.entries(i, j);
    std::vector<double> c = solve_linear(a, std::vector<double>(dim, 1.0));

    // residual check on (I - M) c = 1
    for (std::size_t i = 0; i < dim; ++i) {
        double lhs = c[i];
        for (std::size_t j = 0; j < dim; ++j) lhs -= m.entries(i, j) * c[j];
        if (std::abs(lhs - 1.0) > 1e-9)
            throw SingularSystem("small-component solve residual too large");
        if (c[i] <= 0.0)
            throw SingularSystem("small-component sizes must be positive");
    }
    return c;
}

MeanOffspringMatrix dual_kernel(const Kernel& kernel_good, const std::vector<double>& y_by_type,
                                const TypeSpace& types) {
    if (kernel_good.dim() != types.size() || y_by_type.size() != types.size())
        throw DimensionMismatch("dual_kernel: dimension mismatch");
    Matrix m(types.size());
    for (std::size_t i = 0; i < types.size(); ++i)
        for (std::size_t j = 0; j < types.size(); ++j)
            m(i, j) = kernel_good.entries(i, j) * (1.0 - y_by_type[j]) * types.mu[j];
    return MeanOffspringMatrix{std::move(m)};
}

PercolationProfile build_profile(const Scenario& s, double tol) {
    PercolationProfile p;
    p.y_by_type = solve_giant_fixed_point(s.kernel_good, s.types, tol);
    p.y_aggregate = aggregate_giant_fraction(p.y_by_type, s.types);
    p.c_bad = small_component_sizes(mean_offspring(s.kernel_bad, s.types));
    p.dual = dual_kernel(s.kernel_good, p.y_by_type, s.types);
    p.c_good = small_component_sizes(p.dual);
    return p;
}

namespace {

void check_plan(const SeedingPlan& plan, const Scenario& s) {
    if (plan.counts.size() != s.types.size())
        throw DimensionMismatch("plan has " + std::to_string(plan.counts.size()) +
                                " entries for " + std::to_string(s.types.size()) + " types");
    for (double c : plan.counts)
        if (!(c >= 0.0) || !std::isfinite(c))
            throw InvalidParameter("seed counts must be non-negative and finite");
    if (plan.total() > static_cast<double>(s.n))
        throw InvalidParameter("plan seeds more than n agents");
}

} // namespace

double expected_adoption_bad(const SeedingPlan& plan, const PercolationProfile& profile,
                             const Scenario& s) {
    check_plan(plan, s);
    double a = 0.0;
    for (std::size_t i = 0; i < plan.counts.size(); ++i) a += plan.counts[i] * profile.c_bad[i];
    return a;
}

double expected_adoption_good(const SeedingPlan& plan, const PercolationProfile& profile,
                              const Scenario& s) {
    check_plan(plan, s);
    // log-space product of per-seed miss probabilities (1-y(i))^counts_i
    double log_miss = 0.0;
    double small = 0.0;
    for (std::size_t i = 0; i < plan.counts.size(); ++i) {
        const double miss = 1.0 - profile.y_by_type[i];
        if (plan.counts[i] > 0.0)
            log_miss += (miss > 0.0) ? plan.counts[i] * std::log(miss)
                                     : -std::numeric_limits<double>::infinity();
        small += plan.counts[i] * (1.0 - profile.y_by_type[i]) * profile.c_good[i];
    }
    const double hit = -std::expm1(log_miss);
    return hit * profile.y_aggregate * static_cast<double>(s.n) + small;
}

double designer_utility(const SeedingPlan& plan, const PercolationProfile& profile,
                        const Scenario& s) {
    return expected_adoption_good(plan, profile, s) -
           s.lambda * expected_adoption_bad(plan, profile, s);
}

} // namespace seedopt

#include "seedopt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace seedopt {

namespace {

// lambda C^B(i) - (1-y(i)) C^G(i): the net cost a type-i seed pays per draw
// that misses the giant component. Must be positive for an interior optimum.
double net_marginal_cost(const PercolationProfile& p, const Scenario& s, std::size_t i) {
    return s.lambda * p.c_bad[i] - (1.0 - p.y_by_type[i]) * p.c_good[i];
}

} // namespace

std::int64_t er_optimal_seed_count(double kg, double kb, double lambda, std::int64_t n) {
    if (!(kb < 1.0) || !(kg > 1.0))
        throw PhaseViolation("er_optimal_seed_count requires kb < 1 < kg");
    if (!(lambda > 0.0)) throw InvalidParameter("lambda must be positive");
    if (n < 1) throw InvalidParameter("n must be at least 1");

    TypeSpace one{{"all"}, {1.0}};
    Kernel good{Matrix(1)};
    good.entries(0, 0) = kg;
    const double y = solve_giant_fixed_point(good, one)[0];

    const double cg = 1.0 / (1.0 - (1.0 - y) * kg);
    const double log_arg = lambda / (1.0 - kb) - (1.0 - y) * cg;
    if (log_arg <= 0.0)
        throw MarginalCostTooLow(
            "marginal utility never turns negative (lambda/(1-kb) <= (1-y) C^G); "
            "the interior optimum does not exist");

    const double bracket =
        std::log(static_cast<double>(n)) + 2.0 * std::log(y) - std::log(log_arg);
    const double count = std::ceil(bracket / std::log(1.0 / (1.0 - y)));
    return std::max<std::int64_t>(0, static_cast<std::int64_t>(count));
}

double q_star(const PercolationProfile& profile, const Scenario& s) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < s.types.size(); ++i) {
        const double num = net_marginal_cost(profile, s, i);
        if (num <= 0.0)
            throw UnboundedSeeding("type '" + s.types.labels[i] +
                                   "' has non-positive net marginal cost; marginal utility "
                                   "stays positive and seeding never stops paying");
        const double denom =
            profile.y_by_type[i] * profile.y_aggregate * static_cast<double>(s.n);
        best = std::max(best, 1.0 - num / denom);
    }
    return std::clamp(best, 0.0, std::nextafter(1.0, 0.0));
}

std::size_t best_type(const PercolationProfile& profile, const Scenario& s) {
    std::size_t arg = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < s.types.size(); ++j) {
        const double num = net_marginal_cost(profile, s, j);
        if (num <= 0.0)
            throw UnboundedSeeding("type '" + s.types.labels[j] +
                                   "' has non-positive net marginal cost");
        // y(j) = 1 would make -log(1-y) infinite; one seed then reaches the
        // giant component surely, so the ratio is taken as zero.
        const double w = -std::log1p(-profile.y_by_type[j]);
        const double ratio = std::isinf(w) ? 0.0 : num / w;
        if (ratio < best) {
            best = ratio;
            arg = j;
        }
    }
    return arg;
}

OptimizationResult relaxed_plan(const PercolationProfile& profile, const Scenario& s) {
    OptimizationResult r;
    r.q_star = q_star(profile, s);
    r.best_type = best_type(profile, s);

    const double yj = profile.y_by_type[r.best_type];
    r.relaxed_count =
        (r.q_star > 0.0) ? std::log1p(-r.q_star) / std::log1p(-yj) : 0.0;
    r.integer_count = static_cast<std::int64_t>(std::ceil(r.relaxed_count));
    r.plan = SeedingPlan::single_type(s.types.size(), r.best_type,
                                      static_cast<double>(r.integer_count));
    r.utility_analytic = designer_utility(r.plan, profile, s);

    const double cost = net_marginal_cost(profile, s, r.best_type);
    const double gain = profile.y_aggregate * static_cast<double>(s.n);
    for (std::int64_t k = 1; k <= r.integer_count + 1; ++k) {
        const double miss_prev = std::pow(1.0 - yj, static_cast<double>(k - 1));
        r.marginal_schedule.emplace_back(k, yj * miss_prev * gain - cost);
    }
    return r;
}

SeedingPlan brute_force_plan(const Scenario& s, const PercolationProfile& profile,
                             std::int64_t budget) {
    if (budget < 0) throw InvalidParameter("budget must be non-negative");
    if (budget > 40)
        throw BudgetTooLarge("exhaustive enumeration capped at budget 40, got " +
                             std::to_string(budget));
    if (s.types.size() > 4)
        throw BudgetTooLarge("exhaustive enumeration capped at 4 types, got " +
                             std::to_string(s.types.size()));

    const std::size_t dim = s.types.size();
    SeedingPlan current{std::vector<double>(dim, 0.0)};
    SeedingPlan best = current;
    double best_utility = designer_utility(best, profile, s);

    // depth-first over allocations in lexicographic order; "<" keeps the
    // lexicographically smallest plan on ties
    auto recurse = [&](auto&& self, std::size_t type_index, std::int64_t remaining) -> void {
        if (type_index == dim) {
            const double u = designer_utility(current, profile, s);
            if (u > best_utility) {
                best_utility = u;
                best = current;
            }
            return;
        }
        for (std::int64_t c = 0; c <= remaining; ++c) {
            current.counts[type_index] = static_cast<double>(c);
            self(self, type_index + 1, remaining - c);
        }
        current.counts[type_index] = 0.0;
    };
    recurse(recurse, 0, std::min<std::int64_t>(budget, s.n));
    return best;
}

std::vector<std::pair<std::int64_t, std::int64_t>> scaling_sweep(
    const Scenario& s, const std::vector<std::int64_t>& n_values) {
    for (std::size_t i = 0; i + 1 < n_values.size(); ++i)
        if (n_values[i] >= n_values[i + 1])
            throw InvalidParameter("n_values must be strictly increasing");

    const PercolationProfile profile = build_profile(s);
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    out.reserve(n_values.size());
    for (std::int64_t n : n_values) {
        if (n < 1) throw InvalidParameter("n must be at least 1");
        Scenario at_n = s;
        at_n.n = n;
        out.emplace_back(n, relaxed_plan(profile, at_n).integer_count);
    }
    return out;
}

} // namespace seedopt

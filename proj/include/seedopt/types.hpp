#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "seedopt/matrix.hpp"

namespace seedopt {

/// Finite type space: ordered labels plus population proportions mu(i).
struct TypeSpace {
    std::vector<std::string> labels;
    std::vector<double> mu;

    std::size_t size() const { return labels.size(); }
};

/// Symmetric contact-rate matrix kappa(i,j); edge probability is kappa/n.
struct Kernel {
    Matrix entries;

    std::size_t dim() const { return entries.dim(); }
};

/// A fully specified experiment: type space, good/bad kernels, designer
/// weight lambda, and network size n.
struct Scenario {
    TypeSpace types;
    Kernel kernel_good;
    Kernel kernel_bad;
    double lambda = 1.0;
    std::int64_t n = 1;
};

/// M(i,j) = kappa(i,j) * mu(j): expected type-j offspring of a type-i node.
struct MeanOffspringMatrix {
    Matrix entries;

    std::size_t dim() const { return entries.dim(); }
};

/// Per-type seed counts. Real-valued for the relaxation, integral for a
/// plan that can actually be placed on a graph.
struct SeedingPlan {
    std::vector<double> counts;

    double total() const {
        double t = 0.0;
        for (double c : counts) t += c;
        return t;
    }

    bool is_integral(double eps = 1e-9) const {
        for (double c : counts)
            if (std::abs(c - std::llround(c)) > eps) return false;
        return true;
    }

    std::vector<std::int64_t> as_integers() const {
        std::vector<std::int64_t> out;
        out.reserve(counts.size());
        for (double c : counts) out.push_back(std::llround(c));
        return out;
    }

    static SeedingPlan single_type(std::size_t num_types, std::size_t type_index, double count) {
        SeedingPlan p;
        p.counts.assign(num_types, 0.0);
        p.counts[type_index] = count;
        return p;
    }
};

} // namespace seedopt

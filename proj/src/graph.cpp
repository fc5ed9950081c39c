#include "seedopt/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "seedopt/kernel_model.hpp"
#include "seedopt/rng.hpp"

namespace seedopt {

const char* world_state_name(WorldState s) {
    return s == WorldState::Good ? "good" : "bad";
}

std::size_t GraphInstance::largest_component() const {
    if (component_sizes.empty()) throw InvalidParameter("components() has not been run");
    return static_cast<std::size_t>(
        std::max_element(component_sizes.begin(), component_sizes.end()) -
        component_sizes.begin());
}

std::vector<std::int64_t> type_allocation(const TypeSpace& types, std::int64_t n) {
    const std::size_t dim = types.size();
    std::vector<std::int64_t> counts(dim);
    std::vector<std::pair<double, std::size_t>> remainders(dim);
    std::int64_t assigned = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        const double target = types.mu[i] * static_cast<double>(n);
        counts[i] = static_cast<std::int64_t>(std::floor(target));
        assigned += counts[i];
        // larger remainder first; ties by lower type index
        remainders[i] = {-(target - std::floor(target)), i};
    }
    std::sort(remainders.begin(), remainders.end());
    for (std::int64_t k = 0; k < n - assigned; ++k)
        ++counts[remainders[static_cast<std::size_t>(k) % dim].second];
    return counts;
}

namespace {

struct BlockRange {
    std::int64_t start_a, count_a;
    std::int64_t start_b, count_b;
    bool diagonal;
};

// Emits the edges of one type-block pair by geometric skips through the
// linearized pair space: O(1) per edge instead of O(pairs) Bernoulli draws.
void sample_block(const BlockRange& blk, double p, Rng& rng,
                  std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    if (p <= 0.0 || blk.count_a == 0 || blk.count_b == 0) return;

    if (blk.diagonal) {
        const std::int64_t m = blk.count_a;
        if (m < 2) return;
        if (p >= 1.0) {
            for (std::int64_t i = 0; i < m; ++i)
                for (std::int64_t j = i + 1; j < m; ++j)
                    edges.emplace_back(static_cast<std::uint32_t>(blk.start_a + i),
                                       static_cast<std::uint32_t>(blk.start_a + j));
            return;
        }
        // triangular walk over pairs (w < v), skipping geometrically
        const double log_q = std::log1p(-p);
        std::int64_t v = 1, w = -1;
        while (v < m) {
            const double u = rng.uniform();
            w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-u) / log_q));
            while (w >= v && v < m) {
                w -= v;
                ++v;
            }
            if (v < m)
                edges.emplace_back(static_cast<std::uint32_t>(blk.start_a + w),
                                   static_cast<std::uint32_t>(blk.start_a + v));
        }
        return;
    }

    const std::int64_t pairs = blk.count_a * blk.count_b;
    if (p >= 1.0) {
        for (std::int64_t i = 0; i < blk.count_a; ++i)
            for (std::int64_t j = 0; j < blk.count_b; ++j)
                edges.emplace_back(static_cast<std::uint32_t>(blk.start_a + i),
                                   static_cast<std::uint32_t>(blk.start_b + j));
        return;
    }
    const double log_q = std::log1p(-p);
    std::int64_t idx = -1;
    for (;;) {
        const double u = rng.uniform();
        const double skip = std::floor(std::log1p(-u) / log_q);
        if (skip > static_cast<double>(pairs)) break;   // cheap overflow guard
        idx += 1 + static_cast<std::int64_t>(skip);
        if (idx >= pairs) break;
        edges.emplace_back(static_cast<std::uint32_t>(blk.start_a + idx / blk.count_b),
                           static_cast<std::uint32_t>(blk.start_b + idx % blk.count_b));
    }
}

} // namespace

GraphInstance sample_graph(const Scenario& s, WorldState state, std::int64_t n,
                           std::uint64_t seed) {
    if (n < 2) throw InvalidParameter("sample_graph requires n >= 2");
    if (n > (std::int64_t{1} << 31))
        throw InvalidParameter("sample_graph supports n up to 2^31");

    const Kernel& kernel = (state == WorldState::Good) ? s.kernel_good : s.kernel_bad;
    const std::size_t dim = s.types.size();

    GraphInstance g;
    g.n = n;
    g.type_counts = type_allocation(s.types, n);
    g.type_starts.assign(dim, 0);
    std::int64_t offset = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        g.type_starts[i] = offset;
        offset += g.type_counts[i];
    }
    g.node_types.resize(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < dim; ++i)
        std::fill_n(g.node_types.begin() + g.type_starts[i], g.type_counts[i],
                    static_cast<std::uint32_t>(i));

    // one derived stream per block keeps the edge list canonical
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = a; b < dim; ++b) {
            const double p =
                std::min(kernel.entries(a, b) / static_cast<double>(n), 1.0);
            Rng rng(derive_seed(seed, 0xb10c, a * dim + b));
            BlockRange blk{g.type_starts[a], g.type_counts[a], g.type_starts[b],
                           g.type_counts[b], a == b};
            sample_block(blk, p, rng, g.edges);
        }
    }
    return g;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];   // path halving
            x = parent_[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

} // namespace

GraphInstance& components(GraphInstance& g) {
    const auto n = static_cast<std::size_t>(g.n);
    UnionFind uf(n);
    for (const auto& [u, v] : g.edges) uf.unite(u, v);

    g.component_id.assign(n, 0);
    g.component_sizes.clear();
    constexpr std::uint32_t kUnset = 0xffffffffu;
    std::vector<std::uint32_t> label_of_root(n, kUnset);
    for (std::size_t u = 0; u < n; ++u) {
        const std::uint32_t root = uf.find(static_cast<std::uint32_t>(u));
        if (label_of_root[root] == kUnset) {
            label_of_root[root] = static_cast<std::uint32_t>(g.component_sizes.size());
            g.component_sizes.push_back(0);
        }
        g.component_id[u] = label_of_root[root];
        ++g.component_sizes[label_of_root[root]];
    }
    return g;
}

std::int64_t measure_adoption(const GraphInstance& g, const SeedingPlan& plan,
                              std::uint64_t seed) {
    if (!g.has_components()) throw InvalidParameter("measure_adoption needs labeled components");
    if (plan.counts.size() != g.type_counts.size())
        throw DimensionMismatch("plan has " + std::to_string(plan.counts.size()) +
                                " entries for " + std::to_string(g.type_counts.size()) +
                                " types");
    if (!plan.is_integral())
        throw InvalidParameter("measure_adoption requires an integer plan");

    const std::vector<std::int64_t> want = plan.as_integers();
    for (std::size_t i = 0; i < want.size(); ++i)
        if (want[i] > g.type_counts[i])
            throw InsufficientNodes("plan wants " + std::to_string(want[i]) +
                                    " seeds of type " + std::to_string(i) + " but only " +
                                    std::to_string(g.type_counts[i]) + " nodes exist");

    Rng rng(derive_seed(seed, 0x5eed));
    std::vector<bool> hit(g.component_sizes.size(), false);
    std::vector<std::uint32_t> pool;
    for (std::size_t i = 0; i < want.size(); ++i) {
        if (want[i] == 0) continue;
        pool.resize(static_cast<std::size_t>(g.type_counts[i]));
        std::iota(pool.begin(), pool.end(), static_cast<std::uint32_t>(g.type_starts[i]));
        // partial Fisher-Yates: the first k slots become the draw, and a
        // larger k keeps the smaller draw as a prefix
        for (std::int64_t k = 0; k < want[i]; ++k) {
            const auto j = k + static_cast<std::int64_t>(
                                   rng.bounded(static_cast<std::uint64_t>(pool.size()) -
                                               static_cast<std::uint64_t>(k)));
            std::swap(pool[static_cast<std::size_t>(k)], pool[static_cast<std::size_t>(j)]);
            hit[g.component_id[pool[static_cast<std::size_t>(k)]]] = true;
        }
    }

    std::int64_t adopted = 0;
    for (std::size_t c = 0; c < hit.size(); ++c)
        if (hit[c]) adopted += g.component_sizes[c];
    return adopted;
}

} // namespace seedopt

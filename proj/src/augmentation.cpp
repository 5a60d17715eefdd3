#include "dyna/augmentation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "dyna/error.hpp"
#include "dyna/rng.hpp"

namespace dyna {

AugmentedNeighborhoods augment_graph(const Graph& g, uint64_t seed) {
    const int64_t n = g.num_nodes();
    AugmentedNeighborhoods aug;
    aug.seed = seed;
    aug.lists.resize(n);
    aug.first_hop_count.resize(n);
    Rng rng(seed);

    // membership stamps: in_set[w] == u+1 means w is currently in S'_u
    std::vector<int64_t> in_set(n, 0);
    std::vector<int32_t> eligible;
    for (int64_t u = 0; u < n; ++u) {
        auto first = g.neighbors(u);
        auto& list = aug.lists[u];
        list.assign(first.begin(), first.end());
        aug.first_hop_count[u] = static_cast<int32_t>(first.size());
        const int64_t stamp = u + 1;
        for (int32_t v : first) in_set[v] = stamp;
        for (int32_t v : first) {
            // one uniform draw among v's neighbors not already in S'_u and != u;
            // if none is eligible this v contributes nothing
            eligible.clear();
            for (int32_t w : g.neighbors(v)) {
                if (w == u || in_set[w] == stamp) continue;
                eligible.push_back(w);
            }
            if (eligible.empty()) continue;
            const int32_t w = eligible[rng.bounded(eligible.size())];
            list.push_back(w);
            in_set[w] = stamp;
        }
    }
    return aug;
}

AugmentedNeighborhoods first_hop_neighborhoods(const Graph& g) {
    const int64_t n = g.num_nodes();
    AugmentedNeighborhoods aug;
    aug.lists.resize(n);
    aug.first_hop_count.resize(n);
    for (int64_t u = 0; u < n; ++u) {
        auto nb = g.neighbors(u);
        aug.lists[u].assign(nb.begin(), nb.end());
        aug.first_hop_count[u] = static_cast<int32_t>(nb.size());
    }
    return aug;
}

LayerPlan build_layer_plan(const Graph& g, const AugmentedNeighborhoods& aug, int depth,
                           uint64_t seed) {
    if (depth < 1) throw InputError("build_layer_plan: depth must be >= 1");
    const int64_t n = g.num_nodes();
    LayerPlan plan;
    plan.depth = depth;
    plan.seed = seed;
    plan.sampled.resize(depth);
    plan.layers.reserve(depth);

    std::vector<int32_t> pool;
    for (int l = 0; l < depth; ++l) {
        Rng rng(mix_seed(seed, static_cast<uint64_t>(l)));  // independent stream per layer
        auto& layer_samples = plan.sampled[l];
        layer_samples.resize(n);
        for (int64_t u = 0; u < n; ++u) {
            const auto& full = aug.lists[u];
            const int64_t sz = static_cast<int64_t>(full.size());
            const int64_t take = (sz + 1) / 2;  // ceil(|S'_u| / 2)
            pool.assign(full.begin(), full.end());
            for (int64_t i = 0; i < take; ++i) {
                const int64_t j = i + static_cast<int64_t>(rng.bounded(sz - i));
                std::swap(pool[i], pool[j]);
            }
            auto& out = layer_samples[u];
            out.assign(pool.begin(), pool.begin() + take);
            std::sort(out.begin(), out.end());
        }
        plan.layers.push_back(normalize_sampled_adjacency(g, layer_samples));
    }
    return plan;
}

LayerPlan build_full_plan(const Graph& g, int depth) {
    if (depth < 1) throw InputError("build_full_plan: depth must be >= 1");
    const int64_t n = g.num_nodes();
    LayerPlan plan;
    plan.depth = depth;
    plan.sampled.resize(depth);
    CsrMatrix full = normalize_adjacency(g);
    for (int l = 0; l < depth; ++l) {
        plan.sampled[l].resize(n);
        for (int64_t u = 0; u < n; ++u) {
            auto nb = g.neighbors(u);
            plan.sampled[l][u].assign(nb.begin(), nb.end());
        }
        plan.layers.push_back(full);
    }
    return plan;
}

LayerPlanStats layer_plan_stats(const LayerPlan& plan, const Graph& g) {
    LayerPlanStats stats;
    const int64_t n = g.num_nodes();
    stats.per_layer.resize(plan.depth);
    for (int l = 0; l < plan.depth; ++l) {
        auto& s = stats.per_layer[l];
        int64_t total = 0, second = 0;
        s.min_sample_size = n > 0 ? static_cast<int64_t>(plan.sampled[l][0].size()) : 0;
        s.max_sample_size = s.min_sample_size;
        for (int64_t u = 0; u < n; ++u) {
            const int64_t sz = static_cast<int64_t>(plan.sampled[l][u].size());
            total += sz;
            s.min_sample_size = std::min(s.min_sample_size, sz);
            s.max_sample_size = std::max(s.max_sample_size, sz);
            auto first = g.neighbors(u);
            for (int32_t v : plan.sampled[l][u])
                if (!std::binary_search(first.begin(), first.end(), v)) ++second;
        }
        s.mean_sample_size = n > 0 ? static_cast<double>(total) / static_cast<double>(n) : 0.0;
        s.second_hop_fraction = total > 0 ? static_cast<double>(second) / static_cast<double>(total) : 0.0;
    }
    (void)aug;

    // mean Jaccard overlap of per-node samples across layer pairs
    double jac_sum = 0.0;
    int64_t jac_count = 0;
    std::vector<int32_t> inter;
    for (int a = 0; a < plan.depth; ++a) {
        for (int b = a + 1; b < plan.depth; ++b) {
            for (int64_t u = 0; u < n; ++u) {
                const auto& sa = plan.sampled[a][u];
                const auto& sb = plan.sampled[b][u];
                if (sa.empty() && sb.empty()) continue;
                inter.clear();
                std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                      std::back_inserter(inter));
                const double uni =
                    static_cast<double>(sa.size() + sb.size() - inter.size());
                jac_sum += static_cast<double>(inter.size()) / uni;
                ++jac_count;
            }
        }
    }
    stats.mean_pairwise_jaccard = jac_count > 0 ? jac_sum / static_cast<double>(jac_count) : 0.0;
    return stats;
}

void write_augmented_tsv(const AugmentedNeighborhoods& aug, const Graph& g,
                         const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open for writing: " + path);
    for (int64_t u = 0; u < static_cast<int64_t>(aug.lists.size()); ++u) {
        out << g.node_id(u) << '\t';
        const auto& list = aug.lists[u];
        for (size_t i = 0; i < list.size(); ++i) {
            if (i) out << ',';
            out << g.node_id(list[i]) << ':' << (aug.is_second_hop(u, static_cast<int64_t>(i)) ? 2 : 1);
        }
        out << '\n';
    }
}

}  // namespace dyna

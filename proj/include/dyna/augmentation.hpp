#ifndef DYNA_AUGMENTATION_HPP
#define DYNA_AUGMENTATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dyna/graph.hpp"
#include "dyna/sparse.hpp"

namespace dyna {

// Per-node augmented neighborhoods: the original neighbors plus, for each
// original neighbor v, at most one extra node drawn from v's neighbors that
// is not already present and not the node itself. Entries before
// first_hop_count[u] are the original (first-hop) neighbors, sorted; the
// appended entries are all at distance exactly 2.
struct AugmentedNeighborhoods {
    std::vector<std::vector<int32_t>> lists;
    std::vector<int32_t> first_hop_count;
    uint64_t seed = 0;

    bool is_second_hop(int64_t u, int64_t pos) const { return pos >= first_hop_count[u]; }
};

// One normalized adjacency per layer, each built from an independent 50%
// sub-sample of the augmented neighborhoods (ceil(|S'_u|/2) per node,
// without replacement), symmetrized and self-looped before normalization.
struct LayerPlan {
    int depth = 0;
    std::vector<CsrMatrix> layers;
    std::vector<std::vector<std::vector<int32_t>>> sampled;  // [layer][node], sorted
    uint64_t seed = 0;
};

AugmentedNeighborhoods augment_graph(const Graph& g, uint64_t seed);

// First-hop lists only (no second-hop augmentation); for dilation-disabled runs.
AugmentedNeighborhoods first_hop_neighborhoods(const Graph& g);

LayerPlan build_layer_plan(const Graph& g, const AugmentedNeighborhoods& aug, int depth,
                           uint64_t seed);

// Every layer is the full normalized adjacency (augmentation and dilation off).
LayerPlan build_full_plan(const Graph& g, int depth);

struct LayerStats {
    double mean_sample_size = 0.0;
    int64_t min_sample_size = 0;
    int64_t max_sample_size = 0;
    double second_hop_fraction = 0.0;  // of sampled entries
};

struct LayerPlanStats {
    std::vector<LayerStats> per_layer;
    double mean_pairwise_jaccard = 0.0;  // sample overlap between layer pairs, averaged over nodes
};

LayerPlanStats layer_plan_stats(const LayerPlan& plan, const Graph& g);

// Debug dump: "u<TAB>v:1,w:2,..." with 1 = first hop, 2 = second hop.
void write_augmented_tsv(const AugmentedNeighborhoods& aug, const Graph& g,
                         const std::string& path);

}  // namespace dyna

#endif

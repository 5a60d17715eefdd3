#ifndef DYNA_GRAPH_HPP
#define DYNA_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dyna/matrix.hpp"
#include "dyna/sparse.hpp"

namespace dyna {

// Undirected simple graph in CSR form: symmetric, no self-loops, no duplicate
// edges, neighbor lists sorted ascending. External node identifiers are
// remapped to dense indices 0..n-1; the mapping is kept for reporting.
class Graph {
public:
    Graph() = default;

    // Canonicalizes: drops self-loops, collapses duplicate/reversed pairs.
    // ids may be empty, in which case nodes are named by their decimal index.
    static Graph from_edges(int64_t n, std::vector<std::pair<int32_t, int32_t>> edges,
                            std::vector<std::string> ids = {});

    int64_t num_nodes() const { return n_; }
    int64_t num_edges() const { return m_; }  // unordered edge count

    std::span<const int32_t> neighbors(int64_t u) const {
        return {cols_.data() + row_ptr_[u], static_cast<size_t>(row_ptr_[u + 1] - row_ptr_[u])};
    }
    int64_t degree(int64_t u) const { return row_ptr_[u + 1] - row_ptr_[u]; }
    bool has_edge(int64_t u, int32_t v) const;

    std::span<const int64_t> row_offsets() const { return row_ptr_; }
    std::span<const int32_t> col_indices() const { return cols_; }

    const std::string& node_id(int64_t u) const { return ids_[u]; }
    const std::vector<std::string>& node_ids() const { return ids_; }
    // Dense index of an external id, or -1.
    int64_t index_of(const std::string& id) const;

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && row_ptr_ == o.row_ptr_ && cols_ == o.cols_ && ids_ == o.ids_;
    }

private:
    int64_t n_ = 0;
    int64_t m_ = 0;
    std::vector<int64_t> row_ptr_;
    std::vector<int32_t> cols_;
    std::vector<std::string> ids_;
    std::unordered_map<std::string, int64_t> id_index_;
};

// A = D~^{-1/2} (A + I) D~^{-1/2} over the full edge set.
CsrMatrix normalize_adjacency(const Graph& g);

// Same normalization over a per-node sampled edge set: the sampled pairs are
// symmetrized first (if u sampled v, the edge appears for both endpoints),
// then self-loops are added and degrees are taken in the sampled edge set.
CsrMatrix normalize_sampled_adjacency(const Graph& g,
                                      const std::vector<std::vector<int32_t>>& sampled);

// Nodes at graph distance exactly 2 from u, sorted ascending.
std::vector<int32_t> two_hop_neighbors(const Graph& g, int64_t u);

// Node features: either an explicit n x d matrix or the implicit identity
// (featureless mode, never materialized).
struct NodeFeatures {
    Matrix X;
    bool is_identity = false;
    int64_t n = 0;

    int64_t dim() const { return is_identity ? n : X.cols(); }

    static NodeFeatures identity(int64_t n) { return {Matrix{}, true, n}; }
    static NodeFeatures dense(Matrix x) {
        NodeFeatures f;
        f.n = x.rows();
        f.X = std::move(x);
        f.is_identity = false;
        return f;
    }
};

}  // namespace dyna

#endif

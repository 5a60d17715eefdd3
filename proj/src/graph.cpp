#include "dyna/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dyna/error.hpp"

namespace dyna {

Graph Graph::from_edges(int64_t n, std::vector<std::pair<int32_t, int32_t>> edges,
                        std::vector<std::string> ids) {
    Graph g;
    g.n_ = n;
    if (ids.empty()) {
        ids.reserve(n);
        for (int64_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
    } else if (static_cast<int64_t>(ids.size()) != n) {
        throw InputError("graph: id list size does not match node count");
    }
    g.ids_ = std::move(ids);
    for (int64_t i = 0; i < n; ++i) g.id_index_.emplace(g.ids_[i], i);

    // canonicalize: orient u<v, drop self-loops, dedupe
    std::vector<std::pair<int32_t, int32_t>> canon;
    canon.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("graph: edge endpoint out of range");
        if (u == v) continue;
        canon.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    g.m_ = static_cast<int64_t>(canon.size());

    std::vector<int64_t> deg(n, 0);
    for (auto [u, v] : canon) {
        ++deg[u];
        ++deg[v];
    }
    g.row_ptr_.assign(n + 1, 0);
    for (int64_t i = 0; i < n; ++i) g.row_ptr_[i + 1] = g.row_ptr_[i] + deg[i];
    g.cols_.resize(g.row_ptr_[n]);
    std::vector<int64_t> cursor(g.row_ptr_.begin(), g.row_ptr_.end() - 1);
    for (auto [u, v] : canon) {
        g.cols_[cursor[u]++] = v;
        g.cols_[cursor[v]++] = u;
    }
    for (int64_t i = 0; i < n; ++i)
        std::sort(g.cols_.begin() + g.row_ptr_[i], g.cols_.begin() + g.row_ptr_[i + 1]);
    return g;
}

bool Graph::has_edge(int64_t u, int32_t v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int64_t Graph::index_of(const std::string& id) const {
    auto it = id_index_.find(id);
    return it == id_index_.end() ? -1 : it->second;
}

CsrMatrix normalize_adjacency(const Graph& g) {
    const int64_t n = g.num_nodes();
    CsrMatrix m;
    m.n = n;
    m.row_ptr.assign(n + 1, 0);
    for (int64_t u = 0; u < n; ++u) m.row_ptr[u + 1] = m.row_ptr[u] + g.degree(u) + 1;
    m.cols.resize(m.row_ptr[n]);
    m.vals.resize(m.row_ptr[n]);

    std::vector<double> inv_sqrt_deg(n);
    for (int64_t u = 0; u < n; ++u)
        inv_sqrt_deg[u] = 1.0 / std::sqrt(static_cast<double>(g.degree(u) + 1));

    for (int64_t u = 0; u < n; ++u) {
        int64_t w = m.row_ptr[u];
        bool placed_diag = false;
        for (int32_t v : g.neighbors(u)) {
            if (!placed_diag && v > u) {
                m.cols[w] = static_cast<int32_t>(u);
                m.vals[w] = inv_sqrt_deg[u] * inv_sqrt_deg[u];
                ++w;
                placed_diag = true;
            }
            m.cols[w] = v;
            m.vals[w] = inv_sqrt_deg[u] * inv_sqrt_deg[v];
            ++w;
        }
        if (!placed_diag) {
            m.cols[w] = static_cast<int32_t>(u);
            m.vals[w] = inv_sqrt_deg[u] * inv_sqrt_deg[u];
        }
    }
    return m;
}

CsrMatrix normalize_sampled_adjacency(const Graph& g,
                                      const std::vector<std::vector<int32_t>>& sampled) {
    const int64_t n = g.num_nodes();
    if (static_cast<int64_t>(sampled.size()) != n)
        throw InputError("normalize_sampled_adjacency: sampled list count != n");

    // symmetrize the sampled pairs, then add self-loops
    std::vector<std::vector<int32_t>> rows(n);
    for (int64_t u = 0; u < n; ++u) {
        for (int32_t v : sampled[u]) {
            if (v < 0 || v >= n) throw InputError("normalize_sampled_adjacency: index out of range");
            if (v == static_cast<int32_t>(u)) continue;
            rows[u].push_back(v);
            rows[v].push_back(static_cast<int32_t>(u));
        }
    }
    for (int64_t u = 0; u < n; ++u) {
        rows[u].push_back(static_cast<int32_t>(u));
        std::sort(rows[u].begin(), rows[u].end());
        rows[u].erase(std::unique(rows[u].begin(), rows[u].end()), rows[u].end());
    }

    std::vector<double> inv_sqrt_deg(n);
    for (int64_t u = 0; u < n; ++u)
        inv_sqrt_deg[u] = 1.0 / std::sqrt(static_cast<double>(rows[u].size()));

    CsrMatrix m;
    m.n = n;
    m.row_ptr.assign(n + 1, 0);
    for (int64_t u = 0; u < n; ++u) m.row_ptr[u + 1] = m.row_ptr[u] + static_cast<int64_t>(rows[u].size());
    m.cols.resize(m.row_ptr[n]);
    m.vals.resize(m.row_ptr[n]);
    for (int64_t u = 0; u < n; ++u) {
        int64_t w = m.row_ptr[u];
        for (int32_t v : rows[u]) {
            m.cols[w] = v;
            m.vals[w] = inv_sqrt_deg[u] * inv_sqrt_deg[v];
            ++w;
        }
    }
    return m;
}

std::vector<int32_t> two_hop_neighbors(const Graph& g, int64_t u) {
    std::vector<int32_t> out;
    auto first = g.neighbors(u);
    for (int32_t v : first) {
        for (int32_t w : g.neighbors(v)) {
            if (w == u) continue;
            if (std::binary_search(first.begin(), first.end(), w)) continue;
            out.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace dyna

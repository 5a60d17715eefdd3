#ifndef DYNA_SPARSE_HPP
#define DYNA_SPARSE_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace dyna {

// Square CSR matrix with sorted column indices per row. Used for the
// normalized adjacency operators; always symmetric with a positive diagonal.
struct CsrMatrix {
    int64_t n = 0;
    std::vector<int64_t> row_ptr;  // n+1 offsets
    std::vector<int32_t> cols;     // sorted within each row
    std::vector<double> vals;

    int64_t nnz() const { return static_cast<int64_t>(cols.size()); }

    std::span<const int32_t> row_cols(int64_t i) const {
        return {cols.data() + row_ptr[i], static_cast<size_t>(row_ptr[i + 1] - row_ptr[i])};
    }
    std::span<const double> row_vals(int64_t i) const {
        return {vals.data() + row_ptr[i], static_cast<size_t>(row_ptr[i + 1] - row_ptr[i])};
    }

    // Dense lookup, O(log row length).
    double at(int64_t i, int32_t j) const;

    static CsrMatrix identity(int64_t n);
};

}  // namespace dyna

#endif

#include "dyna/sparse.hpp"

#include <algorithm>

namespace dyna {

double CsrMatrix::at(int64_t i, int32_t j) const {
    auto begin = cols.begin() + row_ptr[i];
    auto end = cols.begin() + row_ptr[i + 1];
    auto it = std::lower_bound(begin, end, j);
    if (it != end && *it == j) return vals[it - cols.begin()];
    return 0.0;
}

CsrMatrix CsrMatrix::identity(int64_t n) {
    CsrMatrix m;
    m.n = n;
    m.row_ptr.resize(n + 1);
    m.cols.resize(n);
    m.vals.assign(n, 1.0);
    for (int64_t i = 0; i <= n; ++i) m.row_ptr[i] = i;
    for (int64_t i = 0; i < n; ++i) m.cols[i] = static_cast<int32_t>(i);
    return m;
}

}  // namespace dyna

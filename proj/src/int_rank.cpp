#include "pgr/int_rank.hpp"

#include <cstdlib>
#include <utility>

namespace pgr {

int integer_rank(std::vector<IntRow> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();

    std::vector<std::vector<__int128>> m(rows.size(), std::vector<__int128>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = rows[i][j];

    // Bareiss: after each pivot step every entry is an exact minor, so the
    // division by the previous pivot is exact.
    __int128 prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace pgr

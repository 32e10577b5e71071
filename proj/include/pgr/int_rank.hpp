#pragma once

#include <cstdint>
#include <vector>

namespace pgr {

using IntRow = std::vector<std::int64_t>;

// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
// Entries are expected to fit in 32 bits; intermediates use 128-bit integers.
// All rows must have equal length.
int integer_rank(std::vector<IntRow> rows);

}  // namespace pgr

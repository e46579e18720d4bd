#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace rowconvex {

/// Row-convex (equivalently column-convex) polyomino counts for areas
/// 1..12, OEIS A001169.
struct ReferenceTable {
    std::array<std::pair<unsigned, std::uint64_t>, 12> values{{
        {1, 1},
        {2, 2},
        {3, 6},
        {4, 19},
        {5, 61},
        {6, 196},
        {7, 629},
        {8, 2017},
        {9, 6466},
        {10, 20727},
        {11, 66441},
        {12, 212980},
    }};
};

}  // namespace rowconvex

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace lattice {

/// A cell (row, col) of the positive quadrant. Row 0 / col 0 are the first
/// row and column; rows grow upward, columns grow to the right.
struct Cell {
    int row = 0;
    int col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Column-first order: (r1,c1) < (r2,c2) iff c1 < c2, or c1 == c2 and r1 < r2.
/// This is the order in which diagram cells are listed everywhere.
inline bool cell_less(const Cell& a, const Cell& b) {
    if (a.col != b.col) return a.col < b.col;
    return a.row < b.row;
}

inline std::string to_string(const Cell& c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::ostream& operator<<(std::ostream& os, const Cell& c);

}  // namespace lattice

#pragma once

#include <optional>
#include <vector>

#include "lattice/cell.hpp"
#include "lattice/partition.hpp"

namespace lattice {

/// A finite set of distinct cells of the positive quadrant, stored in
/// column-first order. The column list doubles as the exponent list of the
/// associated determinant, so the order matters and is fixed once and for all.
class LatticeDiagram {
public:
    LatticeDiagram() = default;

    /// Cells must already be sorted, distinct and nonnegative; throws otherwise.
    explicit LatticeDiagram(std::vector<Cell> sorted_cells);

    const std::vector<Cell>& cells() const { return cells_; }
    int size() const { return static_cast<int>(cells_.size()); }
    bool empty() const { return cells_.empty(); }
    bool contains(const Cell& c) const;

    /// Sum of row coordinates (the X-degree of the determinant).
    int row_sum() const;
    /// Sum of column coordinates (the Y-degree of the determinant).
    int col_sum() const;

    int max_row() const;
    int max_col() const;

    friend bool operator==(const LatticeDiagram&, const LatticeDiagram&) = default;
    friend bool operator<(const LatticeDiagram& a, const LatticeDiagram& b);

private:
    std::vector<Cell> cells_;
};

struct CanonicalDiagram {
    LatticeDiagram diagram;
    int sign = 1;  // sign of the permutation that sorts the input list
};

/// Sorts a cell list into column-first order and reports the sign of the
/// sorting permutation. Returns nullopt (the determinant is zero) when the
/// list has a repeated cell or a cell with a negative coordinate.
std::optional<CanonicalDiagram> canonicalize(const std::vector<Cell>& cells);

/// The diagram of the partition mu itself.
LatticeDiagram diagram_of(const Partition& mu);

/// Cells (i',j') of mu with i' >= c.row and j' >= c.col, in column-first
/// order. Throws if c is not a cell of mu.
std::vector<Cell> shadow(const Partition& mu, const Cell& c);

inline int shadow_size(const Partition& mu, const Cell& c) {
    return static_cast<int>(shadow(mu, c).size());
}

/// mu minus the given cells. Holes must be distinct cells of mu.
LatticeDiagram remove_cells(const Partition& mu, const std::vector<Cell>& holes);

/// All k-element subsets of shadow(mu, c), each sorted, listed in
/// lexicographic order of index combinations. Throws if k > shadow size.
std::vector<std::vector<Cell>> hole_sets(const Partition& mu, const Cell& c, int k);

/// Complement of L inside its bounding box (rows 0..max_row, cols 0..max_col),
/// column-first order. Outside the box no complement cell can take part in a
/// valid upward move, so the truncation loses nothing.
std::vector<Cell> complement_window(const LatticeDiagram& L);

}  // namespace lattice

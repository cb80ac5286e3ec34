#pragma once

#include <cstdint>
#include <vector>

#include "lattice/diagram.hpp"

namespace lattice {

/// A partition with k circled cells inside the shadow of an anchor cell, each
/// circled cell having either a circled cell or the outside of the partition
/// immediately to its right (so circles form row suffixes).
struct RightDiagram {
    Partition mu;
    Cell anchor;
    std::vector<Cell> circled;  // column-first order

    bool valid() const;
};

/// All Right diagrams with exactly k circles for (mu, anchor), ordered by
/// their sorted circle lists. k = 0 yields the single uncircled diagram.
std::vector<RightDiagram> enumerate_right(const Partition& mu, const Cell& c, int k);

/// The partition left after the circled cells float to the top of their
/// columns and disappear: column heights drop by the circle counts and the
/// surviving row lengths are read off.
Partition float_circles_out(const RightDiagram& F);

/// The k-hole diagram associated to F: in each circled column, the hole for a
/// circle sits at anchor row + (number of rows below the circle that are
/// circled or could carry a circle, i.e. whose right neighbour is outside the
/// partition or circled). Holes always land inside the shadow.
LatticeDiagram holes_diagram(const RightDiagram& F);

/// The hole set itself (column-first order).
std::vector<Cell> hole_positions(const RightDiagram& F);

/// Depths of the holes of (mu minus holes): for each hole, the number of
/// non-hole cells strictly above it in its column; weakly increasing.
std::vector<int> depth_tuple(const Partition& mu, const std::vector<Cell>& holes);

/// Number of injective row-increasing fillings with n entries over all Right
/// diagrams: sum over F of n! / prod(uncircled row lengths)!.
std::uint64_t tableaux_count(const Partition& mu, const Cell& c, int k);

}  // namespace lattice

#pragma once

#include <vector>

#include "lattice/cell.hpp"

namespace lattice {

/// An integer partition mu_1 >= mu_2 >= ... >= mu_h >= 1, identified with its
/// diagram {(i,j) : 0 <= i < h, 0 <= j < mu_{i+1}} (row i has mu_{i+1} cells,
/// rows bottom-justified, left-justified).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }                       // |mu|
    int height() const { return static_cast<int>(parts_.size()); }
    int width() const { return parts_.empty() ? 0 : parts_[0]; }

    bool contains(const Cell& c) const;

    /// Height of column j (number of rows of length > j).
    int column_height(int j) const;

    /// All cells in column-first order.
    std::vector<Cell> cells() const;

    /// mu_1! * mu_2! * ... as an unsigned integer; fits for |mu| <= 20.
    unsigned long long parts_factorial() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of each 1 <= n <= max_size, in a fixed deterministic order
/// (n ascending; within n, parts lexicographically decreasing).
std::vector<Partition> partitions_up_to(int max_size);

/// All partitions of exactly n.
std::vector<Partition> partitions_of(int n);

}  // namespace lattice

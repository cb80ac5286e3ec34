#include "lattice/diagram.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace lattice {

std::ostream& operator<<(std::ostream& os, const Cell& c) {
    return os << to_string(c);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t t = 0; t < parts_.size(); ++t) {
        if (parts_[t] < 1) throw std::invalid_argument("partition parts must be positive");
        if (t + 1 < parts_.size() && parts_[t] < parts_[t + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[t];
    }
}

bool Partition::contains(const Cell& c) const {
    return c.row >= 0 && c.row < height() && c.col >= 0 && c.col < parts_[c.row];
}

int Partition::column_height(int j) const {
    int h = 0;
    while (h < height() && parts_[h] > j) ++h;
    return h;
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(size_);
    for (int j = 0; j < width(); ++j)
        for (int i = 0; i < column_height(j); ++i) out.push_back({i, j});
    return out;
}

unsigned long long Partition::parts_factorial() const {
    unsigned long long f = 1;
    for (int p : parts_)
        for (int t = 2; t <= p; ++t) f *= static_cast<unsigned long long>(t);
    return f;
}

namespace {
void emit_partitions(int n, int max_part, std::vector<int>& acc,
                     std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        emit_partitions(n - p, p, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> acc;
    emit_partitions(n, n, acc, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int n = 1; n <= max_size; ++n) {
        auto ps = partitions_of(n);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

LatticeDiagram::LatticeDiagram(std::vector<Cell> sorted_cells)
    : cells_(std::move(sorted_cells)) {
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i].row < 0 || cells_[i].col < 0)
            throw std::invalid_argument("diagram cell with negative coordinate");
        if (i + 1 < cells_.size() && !cell_less(cells_[i], cells_[i + 1]))
            throw std::invalid_argument("diagram cells not in canonical order");
    }
}

bool LatticeDiagram::contains(const Cell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c, cell_less);
}

int LatticeDiagram::row_sum() const {
    int s = 0;
    for (const Cell& c : cells_) s += c.row;
    return s;
}

int LatticeDiagram::col_sum() const {
    int s = 0;
    for (const Cell& c : cells_) s += c.col;
    return s;
}

int LatticeDiagram::max_row() const {
    int m = 0;
    for (const Cell& c : cells_) m = std::max(m, c.row);
    return m;
}

int LatticeDiagram::max_col() const {
    int m = 0;
    for (const Cell& c : cells_) m = std::max(m, c.col);
    return m;
}

bool operator<(const LatticeDiagram& a, const LatticeDiagram& b) {
    return std::lexicographical_compare(a.cells_.begin(), a.cells_.end(),
                                        b.cells_.begin(), b.cells_.end(), cell_less);
}

std::optional<CanonicalDiagram> canonicalize(const std::vector<Cell>& cells) {
    for (const Cell& c : cells)
        if (c.row < 0 || c.col < 0) return std::nullopt;
    // Insertion sort; count inversions for the sign.
    std::vector<Cell> sorted = cells;
    long inversions = 0;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        Cell key = sorted[i];
        std::size_t j = i;
        while (j > 0 && cell_less(key, sorted[j - 1])) {
            sorted[j] = sorted[j - 1];
            --j;
            ++inversions;
        }
        sorted[j] = key;
    }
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1]) return std::nullopt;
    return CanonicalDiagram{LatticeDiagram(std::move(sorted)),
                            inversions % 2 == 0 ? 1 : -1};
}

LatticeDiagram diagram_of(const Partition& mu) {
    return LatticeDiagram(mu.cells());
}

std::vector<Cell> shadow(const Partition& mu, const Cell& c) {
    if (!mu.contains(c)) throw std::invalid_argument("cell not in partition");
    std::vector<Cell> out;
    for (const Cell& x : mu.cells())
        if (x.row >= c.row && x.col >= c.col) out.push_back(x);
    return out;
}

LatticeDiagram remove_cells(const Partition& mu, const std::vector<Cell>& holes) {
    for (std::size_t i = 0; i < holes.size(); ++i) {
        if (!mu.contains(holes[i]))
            throw std::invalid_argument("hole outside partition");
        for (std::size_t j = i + 1; j < holes.size(); ++j)
            if (holes[i] == holes[j]) throw std::invalid_argument("repeated hole");
    }
    std::vector<Cell> out;
    for (const Cell& x : mu.cells())
        if (std::find(holes.begin(), holes.end(), x) == holes.end()) out.push_back(x);
    return LatticeDiagram(std::move(out));
}

std::vector<std::vector<Cell>> hole_sets(const Partition& mu, const Cell& c, int k) {
    std::vector<Cell> sh = shadow(mu, c);
    int s = static_cast<int>(sh.size());
    if (k < 0 || k > s) throw std::invalid_argument("hole count exceeds shadow size");
    std::vector<std::vector<Cell>> out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<Cell> subset;
        subset.reserve(k);
        for (int i : idx) subset.push_back(sh[i]);
        out.push_back(std::move(subset));
        int t = k - 1;
        while (t >= 0 && idx[t] == s - k + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
    }
    return out;
}

std::vector<Cell> complement_window(const LatticeDiagram& L) {
    std::vector<Cell> out;
    if (L.empty()) return out;
    for (int j = 0; j <= L.max_col(); ++j)
        for (int i = 0; i <= L.max_row(); ++i)
            if (!L.contains({i, j})) out.push_back({i, j});
    return out;
}

}  // namespace lattice

#include "lattice/right_diagram.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lattice {

namespace {

bool right_condition(const Partition& mu, const std::vector<Cell>& circled) {
    for (const Cell& c : circled) {
        Cell east{c.row, c.col + 1};
        if (!mu.contains(east)) continue;
        if (std::find(circled.begin(), circled.end(), east) == circled.end()) return false;
    }
    return true;
}

}  // namespace

bool RightDiagram::valid() const {
    if (!mu.contains(anchor)) return false;
    auto sh = shadow(mu, anchor);
    for (const Cell& c : circled)
        if (std::find(sh.begin(), sh.end(), c) == sh.end()) return false;
    for (std::size_t i = 0; i + 1 < circled.size(); ++i)
        if (!cell_less(circled[i], circled[i + 1])) return false;
    return right_condition(mu, circled);
}

std::vector<RightDiagram> enumerate_right(const Partition& mu, const Cell& c, int k) {
    std::vector<RightDiagram> out;
    for (auto& subset : hole_sets(mu, c, k))
        if (right_condition(mu, subset))
            out.push_back({mu, c, std::move(subset)});
    // hole_sets already lists subsets in lexicographic order of the sorted
    // circle lists, so the order here is deterministic.
    return out;
}

Partition float_circles_out(const RightDiagram& F) {
    const Partition& mu = F.mu;
    std::vector<int> heights(mu.width());
    for (int j = 0; j < mu.width(); ++j) heights[j] = mu.column_height(j);
    for (const Cell& c : F.circled) --heights[c.col];
    std::vector<int> rows;
    for (int i = 0;; ++i) {
        int len = static_cast<int>(std::count_if(heights.begin(), heights.end(),
                                                 [&](int h) { return h > i; }));
        if (len == 0) break;
        rows.push_back(len);
    }
    return Partition(rows);
}

std::vector<Cell> hole_positions(const RightDiagram& F) {
    const Partition& mu = F.mu;
    const int i0 = F.anchor.row;
    auto circled_at = [&](const Cell& c) {
        return std::find(F.circled.begin(), F.circled.end(), c) != F.circled.end();
    };
    std::map<int, std::vector<int>> by_col;
    for (const Cell& c : F.circled) by_col[c.col].push_back(c.row);
    std::vector<Cell> holes;
    for (auto& [col, rows] : by_col) {
        std::sort(rows.begin(), rows.end());
        for (int r : rows) {
            // Rows below the circle that hold a circle or could hold one.
            int slots = 0;
            for (int u = i0; u < r; ++u) {
                Cell pos{u, col};
                if (circled_at(pos) || !mu.contains({u, col + 1}) || circled_at({u, col + 1}))
                    ++slots;
            }
            holes.push_back({i0 + slots, col});
        }
    }
    std::sort(holes.begin(), holes.end(), cell_less);
    for (const Cell& h : holes)
        if (!mu.contains(h) || h.row < i0 || h.col < F.anchor.col)
            throw std::logic_error("hole placement left the shadow");
    for (std::size_t i = 0; i + 1 < holes.size(); ++i)
        if (holes[i] == holes[i + 1]) throw std::logic_error("hole placement collided");
    return holes;
}

LatticeDiagram holes_diagram(const RightDiagram& F) {
    return remove_cells(F.mu, hole_positions(F));
}

std::vector<int> depth_tuple(const Partition& mu, const std::vector<Cell>& holes) {
    std::vector<int> depths;
    depths.reserve(holes.size());
    for (const Cell& h : holes) {
        int d = 0;
        for (int r = h.row + 1; r < mu.column_height(h.col); ++r)
            if (std::find(holes.begin(), holes.end(), Cell{r, h.col}) == holes.end()) ++d;
        depths.push_back(d);
    }
    std::sort(depths.begin(), depths.end());
    return depths;
}

std::uint64_t tableaux_count(const Partition& mu, const Cell& c, int k) {
    const int n = mu.size() - k;
    std::uint64_t total = 0;
    for (const RightDiagram& F : enumerate_right(mu, c, k)) {
        std::uint64_t denom = 1;
        for (int i = 0; i < mu.height(); ++i) {
            int len = 0;
            for (int j = 0; j < mu.parts()[i]; ++j)
                if (std::find(F.circled.begin(), F.circled.end(), Cell{i, j}) ==
                    F.circled.end())
                    ++len;
            for (int t = 2; t <= len; ++t) denom *= static_cast<std::uint64_t>(t);
        }
        std::uint64_t nf = 1;
        for (int t = 2; t <= n; ++t) nf *= static_cast<std::uint64_t>(t);
        total += nf / denom;
    }
    return total;
}

}  // namespace lattice

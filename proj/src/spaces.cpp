#include "lattice/spaces.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

namespace lattice {

namespace {

/// Worklist closure: every row that enlarges the span gets all its first-order
/// derivatives inserted in turn. Higher orders are reached by composition.
void close_under_derivatives(SpanBasis& basis, std::deque<std::pair<Bidegree, std::size_t>>& work,
                             int vars, bool x_only) {
    while (!work.empty()) {
        auto [bd, idx] = work.front();
        work.pop_front();
        const int nops = x_only ? vars : 2 * vars;
        for (int v = 0; v < nops; ++v) {
            Monomial op;
            if (v < vars) op.set_x(v, 1); else op.set_y(v - vars, 1);
            Polynomial d = apply_monomial_operator(op, basis.blocks().at(bd).rows[idx]);
            if (d.is_zero()) continue;
            Bidegree dbd = *d.bidegree();
            if (basis.insert(d))
                work.push_back({dbd, basis.blocks().at(dbd).rows.size() - 1});
        }
    }
}

void seed(SpanBasis& basis, std::deque<std::pair<Bidegree, std::size_t>>& work,
          const Polynomial& g) {
    for (const auto& [bd, comp] : bihomogeneous_components(g))
        if (basis.insert(comp))
            work.push_back({bd, basis.blocks().at(bd).rows.size() - 1});
}

int require_common_alphabet(const std::vector<Polynomial>& gens) {
    if (gens.empty()) return 0;
    int vars = gens.front().vars();
    for (const Polynomial& g : gens)
        if (g.vars() != vars) throw std::invalid_argument("alphabet mismatch");
    return vars;
}

}  // namespace

SpanBasis derivative_closure(const std::vector<Polynomial>& gens) {
    int vars = require_common_alphabet(gens);
    SpanBasis basis(vars);
    std::deque<std::pair<Bidegree, std::size_t>> work;
    for (const Polynomial& g : gens) seed(basis, work, g);
    close_under_derivatives(basis, work, vars, /*x_only=*/false);
    return basis;
}

SpanBasis x_subspace(const std::vector<Polynomial>& gens) {
    int vars = require_common_alphabet(gens);
    SpanBasis basis(vars);
    std::deque<std::pair<Bidegree, std::size_t>> work;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_bihomogeneous())
            throw std::invalid_argument("x_subspace requires bihomogeneous generators");
        // Group the terms of g by their Y-exponent pattern. Differentiating a
        // pattern by its own full Y-order turns each bucket into an X-only
        // polynomial scaled by the factorials of the pattern.
        std::map<std::array<std::uint8_t, kMaxVars>, std::vector<Polynomial::Term>> buckets;
        for (const auto& t : g.terms()) {
            std::array<std::uint8_t, kMaxVars> ypat{};
            std::copy(t.mono.e.begin() + kMaxVars, t.mono.e.end(), ypat.begin());
            Monomial xpart = t.mono;
            for (int i = 0; i < kMaxVars; ++i) xpart.set_y(i, 0);
            Rational scale = 1;
            for (int i = 0; i < kMaxVars; ++i) scale *= factorial(ypat[i]);
            buckets[ypat].push_back({xpart, t.coef * scale});
        }
        for (auto& [ypat, terms] : buckets)
            seed(basis, work, Polynomial::from_terms(vars, std::move(terms)));
    }
    close_under_derivatives(basis, work, vars, /*x_only=*/true);
    return basis;
}

SpanBasis space_mkij(const Partition& mu, const Cell& c, int k, VariableSet vars) {
    int n = mu.size() - k;
    std::vector<Polynomial> gens;
    for (const auto& holes : hole_sets(mu, c, k))
        gens.push_back(delta(remove_cells(mu, holes), n));
    return vars == VariableSet::XY ? derivative_closure(gens) : x_subspace(gens);
}

Rational transition_coefficient(const LatticeDiagram& L, const LatticeDiagram& Lp) {
    if (L.size() != Lp.size()) throw std::invalid_argument("cell-count mismatch");
    Rational num = 1, den = 1;
    for (const Cell& c : L.cells()) num *= factorial(c.row) * factorial(c.col);
    for (const Cell& c : Lp.cells()) den *= factorial(c.row) * factorial(c.col);
    return num / den;
}

namespace {

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k > n || k < 0) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int t = k - 1;
        while (t >= 0 && idx[t] == n - k + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
    }
}

}  // namespace

std::vector<ShiftTerm> shift_expand(SymKind kind, int r, const LatticeDiagram& L) {
    if (r < 1) throw std::invalid_argument("shift order must be >= 1");
    std::vector<ShiftTerm> out;
    const auto& cells = L.cells();
    const int n = L.size();
    switch (kind) {
        case SymKind::PowerSum: {
            for (int i = 0; i < n; ++i) {
                std::vector<Cell> moved = cells;
                moved[i].row -= r;
                auto canon = canonicalize(moved);
                if (!canon) continue;
                Rational coef = transition_coefficient(L, canon->diagram);
                if (canon->sign < 0) coef = -coef;
                out.push_back({std::move(coef), std::move(canon->diagram)});
            }
            break;
        }
        case SymKind::Elementary: {
            for_each_subset(n, r, [&](const std::vector<int>& idx) {
                std::vector<Cell> moved = cells;
                for (int i : idx) moved[i].row -= 1;
                auto canon = canonicalize(moved);
                if (!canon) return;
                // Cells stay in their columns and never cross, so the sorting
                // permutation is the identity.
                out.push_back({transition_coefficient(L, canon->diagram),
                               std::move(canon->diagram)});
            });
            break;
        }
        case SymKind::Homogeneous: {
            std::vector<Cell> window = complement_window(L);
            const int w = static_cast<int>(window.size());
            for_each_subset(w, r, [&](const std::vector<int>& idx) {
                // Moving a window cell up is valid only when its target is a
                // cell of L or the previous position of another moved cell.
                std::vector<Cell> sources;
                sources.reserve(r);
                for (int i : idx) sources.push_back(window[i]);
                for (const Cell& s : sources) {
                    Cell target{s.row + 1, s.col};
                    if (L.contains(target)) continue;
                    if (std::find(sources.begin(), sources.end(), target) != sources.end())
                        continue;
                    return;
                }
                // Result = (L union sources) minus targets.
                auto is_target = [&](const Cell& c) {
                    Cell below{c.row - 1, c.col};
                    return std::find(sources.begin(), sources.end(), below) != sources.end();
                };
                std::vector<Cell> result;
                result.reserve(n);
                for (const Cell& c : cells)
                    if (!is_target(c)) result.push_back(c);
                for (const Cell& s : sources)
                    if (!is_target(s)) result.push_back(s);
                auto canon = canonicalize(result);
                if (!canon) return;  // unreachable for valid selections
                out.push_back({transition_coefficient(L, canon->diagram),
                               std::move(canon->diagram)});
            });
            break;
        }
    }
    return out;
}

ShiftReport verify_shift(SymKind kind, int r, const LatticeDiagram& L) {
    const int n = L.size();
    ShiftReport rep{false, Polynomial(n), Polynomial(n)};
    rep.lhs = apply_operator(sym_function(kind, r, Alphabet::X, n), delta(L, n));
    std::vector<Polynomial> deltas;
    std::vector<std::pair<Rational, const Polynomial*>> parts;
    auto terms = shift_expand(kind, r, L);
    deltas.reserve(terms.size());
    for (const ShiftTerm& t : terms) {
        deltas.push_back(delta(t.diagram, n));
        parts.push_back({t.coef, &deltas.back()});
    }
    rep.rhs = linear_combination(n, parts);
    rep.match = rep.lhs == rep.rhs;
    return rep;
}

ReductionReport verify_sum_reduction(const Partition& mu, const Cell& c) {
    if (!mu.contains(c)) throw std::invalid_argument("cell not in partition");
    ReductionReport rep;
    const int s = shadow_size(mu, c);

    {
        SpanBasis sum = space_mkij(mu, c, 1, VariableSet::XY);
        SpanBasis single = derivative_closure({delta(remove_cells(mu, {c}), mu.size() - 1)});
        rep.k1_dim_sum = sum.dimension();
        rep.k1_dim_single = single.dimension();
        bool equal = sum.dimension() == single.dimension();
        if (equal)
            for (const Polynomial* row : sum.rows())
                if (!single.contains(*row)) { equal = false; break; }
        if (equal)
            for (const Polynomial* row : single.rows())
                if (!sum.contains(*row)) { equal = false; break; }
        rep.k1_equal = equal;
    }

    Cell east{c.row, c.col + 1}, north{c.row + 1, c.col};
    if (s >= 2 && mu.contains(east) && mu.contains(north)) {
        rep.k2_applicable = true;
        SpanBasis sum = space_mkij(mu, c, 2, VariableSet::XY);
        int n = mu.size() - 2;
        SpanBasis pair = derivative_closure({delta(remove_cells(mu, {c, east}), n),
                                             delta(remove_cells(mu, {c, north}), n)});
        rep.k2_dim_sum = sum.dimension();
        rep.k2_dim_pair = pair.dimension();
        bool equal = sum.dimension() == pair.dimension();
        if (equal)
            for (const Polynomial* row : sum.rows())
                if (!pair.contains(*row)) { equal = false; break; }
        if (equal)
            for (const Polynomial* row : pair.rows())
                if (!sum.contains(*row)) { equal = false; break; }
        rep.k2_equal = equal;
    }
    return rep;
}

bool counterexample_probe(const Partition& mu, const std::vector<Cell>& target,
                          const std::vector<std::vector<Cell>>& gens) {
    const int n = mu.size() - static_cast<int>(target.size());
    std::vector<Polynomial> gen_polys;
    for (const auto& holes : gens) {
        if (static_cast<int>(holes.size()) != static_cast<int>(target.size()))
            throw std::invalid_argument("hole sets must have equal size");
        gen_polys.push_back(delta(remove_cells(mu, holes), n));
    }
    SpanBasis space = derivative_closure(gen_polys);
    return space.contains(delta(remove_cells(mu, target), n));
}

}  // namespace lattice

#include "lattice/basis.hpp"

#include <functional>
#include <stdexcept>

namespace lattice {

namespace {

/// Emits all X-monomials of total degree d in `vars` variables, smallest
/// first in the canonical order (mass on the last variables first).
void for_each_x_monomial(int vars, int d, const std::function<bool(const Monomial&)>& fn) {
    std::vector<int> exps(std::max(vars, 1), 0);
    bool stop = false;
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (stop) return;
        if (pos == vars - 1) {
            exps[pos] = rem;
            Monomial m;
            for (int i = 0; i < vars; ++i) m.set_x(i, exps[i]);
            if (!fn(m)) stop = true;
            return;
        }
        for (int e = 0; e <= rem && !stop; ++e) {
            exps[pos] = e;
            rec(pos + 1, rem - e);
        }
    };
    if (vars == 0) {
        if (d == 0) fn(Monomial{});
        return;
    }
    rec(0, d);
}

}  // namespace

std::vector<Monomial> monomial_basis(const Partition& mu) {
    const int n = mu.size();
    const Polynomial dmu = delta(diagram_of(mu), n);
    std::uint64_t target = 1;
    for (int t = 2; t <= n; ++t) target *= static_cast<std::uint64_t>(t);
    target /= mu.parts_factorial();

    // Per-variable exponent ceiling: operators beyond it annihilate dmu.
    Monomial cap;
    for (const auto& t : dmu.terms())
        for (int i = 0; i < kMaxVars; ++i)
            if (t.mono.e[i] > cap.e[i]) cap.e[i] = t.mono.e[i];

    SpanBasis span(n);
    std::vector<Monomial> chosen;
    const int max_degree = diagram_of(mu).row_sum();
    for (int d = 0; d <= max_degree && chosen.size() < target; ++d) {
        for_each_x_monomial(n, d, [&](const Monomial& m) {
            bool in_cap = true;
            for (int i = 0; i < kMaxVars; ++i)
                if (m.e[i] > cap.e[i]) { in_cap = false; break; }
            if (in_cap && span.insert(apply_monomial_operator(m, dmu)))
                chosen.push_back(m);
            return chosen.size() < target;
        });
    }
    if (chosen.size() != target)
        throw std::logic_error("monomial basis construction fell short");
    return chosen;
}

BasisReport build_basis_x(const Partition& mu, const Cell& c, int k) {
    const int n = mu.size() - k;
    BasisReport rep;
    for (const RightDiagram& F : enumerate_right(mu, c, k)) {
        const Polynomial dF = delta(holes_diagram(F), n);
        const Partition shape = float_circles_out(F);
        std::size_t count = 0;
        for (const Monomial& m : monomial_basis(shape)) {
            rep.polys.push_back(apply_monomial_operator(m, dF));
            ++count;
        }
        rep.contributions.push_back({F, count});
    }
    rep.tableaux = tableaux_count(mu, c, k);
    rep.cardinality_ok = rep.polys.size() == rep.tableaux;

    SpanBasis span(n);
    rep.independent = true;
    for (const Polynomial& p : rep.polys)
        if (!span.insert(p)) rep.independent = false;

    rep.dim_x = space_mkij(mu, c, k, VariableSet::X).dimension();
    bool members = true;
    SpanBasis full = space_mkij(mu, c, k, VariableSet::XY);
    for (const Polynomial& p : rep.polys)
        if (!full.contains(p)) { members = false; break; }
    rep.spans_ok = rep.dim_x == span.dimension() && members;
    return rep;
}

}  // namespace lattice

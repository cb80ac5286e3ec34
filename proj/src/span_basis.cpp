#include "lattice/span_basis.hpp"

#include <stdexcept>

namespace lattice {

Polynomial SpanBasis::reduce_in_block(const Block& blk, const Polynomial& p) const {
    // Collect the rows whose pivot occurs in p. Rows carry zero coefficients
    // on all other pivots, so one combined pass fully reduces p.
    std::vector<std::pair<Rational, const Polynomial*>> parts;
    parts.reserve(8);
    parts.push_back({1, &p});
    for (const auto& t : p.terms()) {
        auto it = blk.pivot_of.find(t.mono);
        if (it != blk.pivot_of.end())
            parts.push_back({-t.coef, &blk.rows[it->second]});
    }
    if (parts.size() == 1) return p;
    return linear_combination(vars_, parts);
}

bool SpanBasis::insert(const Polynomial& p) {
    if (p.is_zero()) return false;
    auto bd = p.bidegree();
    if (!bd) throw std::invalid_argument("insert requires a bihomogeneous polynomial");
    Block& blk = blocks_[*bd];
    Polynomial r = reduce_in_block(blk, p);
    if (r.is_zero()) {
        if (blk.rows.empty()) blocks_.erase(*bd);
        return false;
    }
    r *= Rational(1) / r.leading_coefficient();
    const Monomial pivot = r.leading_monomial();
    // Back-substitute the new pivot out of the existing rows.
    for (auto& row : blk.rows) {
        const Rational& c = row.coefficient(pivot);
        if (c != 0) row.add_scaled(-c, r);
    }
    blk.pivot_of.emplace(pivot, blk.rows.size());
    blk.rows.push_back(std::move(r));
    ++dimension_;
    return true;
}

Polynomial SpanBasis::reduce(const Polynomial& p) const {
    std::vector<Polynomial> reduced;
    for (const auto& [bd, comp] : bihomogeneous_components(p)) {
        auto it = blocks_.find(bd);
        reduced.push_back(it == blocks_.end() ? comp : reduce_in_block(it->second, comp));
    }
    std::vector<std::pair<Rational, const Polynomial*>> sum;
    sum.reserve(reduced.size());
    for (const Polynomial& c : reduced) sum.push_back({1, &c});
    return linear_combination(vars_, sum);
}

bool SpanBasis::contains(const Polynomial& p) const {
    if (p.is_zero()) return true;
    if (p.vars() != vars_) throw std::invalid_argument("alphabet mismatch");
    for (const auto& [bd, comp] : bihomogeneous_components(p)) {
        auto it = blocks_.find(bd);
        if (it == blocks_.end()) return false;
        if (!reduce_in_block(it->second, comp).is_zero()) return false;
    }
    return true;
}

std::map<Bidegree, std::size_t> SpanBasis::bigraded_hilbert() const {
    std::map<Bidegree, std::size_t> out;
    for (const auto& [bd, blk] : blocks_)
        if (!blk.rows.empty()) out[bd] = blk.rows.size();
    return out;
}

std::vector<const Polynomial*> SpanBasis::rows() const {
    std::vector<const Polynomial*> out;
    out.reserve(dimension_);
    for (const auto& [bd, blk] : blocks_)
        for (const Polynomial& r : blk.rows) out.push_back(&r);
    return out;
}

}  // namespace lattice

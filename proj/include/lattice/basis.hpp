#pragma once

#include <cstdint>
#include <vector>

#include "lattice/right_diagram.hpp"
#include "lattice/spaces.hpp"

namespace lattice {

/// A deterministic set of n!/mu! X-monomials whose operator images on the
/// determinant of mu are linearly independent: monomials are scanned by total
/// degree, then lexicographically smallest first, and kept greedily.
std::vector<Monomial> monomial_basis(const Partition& mu);

struct BasisReport {
    std::vector<Polynomial> polys;
    bool cardinality_ok = false;  // |B| == tableaux_count
    bool independent = false;     // exact rank of B equals |B|
    bool spans_ok = false;        // dim of the X space == |B|, and B lies in the XY space
    std::uint64_t tableaux = 0;
    std::uint64_t dim_x = 0;
    /// One (diagram, contribution count) entry per Right diagram.
    std::vector<std::pair<RightDiagram, std::size_t>> contributions;

    bool all_ok() const { return cardinality_ok && independent && spans_ok; }
};

/// Assembles the candidate basis {m(d) delta(holes_diagram(F))} over all Right
/// diagrams F and monomials m from monomial_basis(float_circles_out(F)), and
/// verifies cardinality, independence and the dimension match against the X
/// space built independently from all hole sets.
BasisReport build_basis_x(const Partition& mu, const Cell& c, int k);

}  // namespace lattice

#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "lattice/polynomial.hpp"

namespace lattice {

/// Echelonized span of bihomogeneous polynomials, blocked by bidegree.
/// Within a block every stored row is monic on its pivot (its greatest
/// monomial) and fully reduced against every other row, so membership testing
/// is a single reduction pass.
class SpanBasis {
public:
    struct Block {
        std::vector<Polynomial> rows;
        std::unordered_map<Monomial, std::size_t, MonomialHash> pivot_of;
    };

    explicit SpanBasis(int vars = 0) : vars_(vars) {}

    int vars() const { return vars_; }
    std::size_t dimension() const { return dimension_; }

    /// Inserts a bihomogeneous (or zero) polynomial. Returns true when the
    /// element enlarged the span. Throws on nonzero non-bihomogeneous input.
    bool insert(const Polynomial& p);

    /// Membership test; general polynomials are checked component by component.
    bool contains(const Polynomial& p) const;

    /// Reduces p against the basis without modifying it.
    Polynomial reduce(const Polynomial& p) const;

    /// Block sizes keyed by bidegree; values sum to dimension().
    std::map<Bidegree, std::size_t> bigraded_hilbert() const;

    const std::map<Bidegree, Block>& blocks() const { return blocks_; }

    /// Flat view of all stored rows, by ascending bidegree.
    std::vector<const Polynomial*> rows() const;

private:
    Polynomial reduce_in_block(const Block& blk, const Polynomial& p) const;

    int vars_;
    std::size_t dimension_ = 0;
    std::map<Bidegree, Block> blocks_;
};

}  // namespace lattice

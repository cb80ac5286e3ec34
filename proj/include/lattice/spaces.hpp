#pragma once

#include <vector>

#include "lattice/diagram.hpp"
#include "lattice/polynomial.hpp"
#include "lattice/span_basis.hpp"

namespace lattice {

enum class VariableSet { XY, X };

/// Span of all iterated partial derivatives (all orders) of the generators.
/// Generators are decomposed into bihomogeneous components first; for
/// bihomogeneous generators this is exactly the closure under derivations.
SpanBasis derivative_closure(const std::vector<Polynomial>& gens);

/// The part of the derivative closure of zero Y-degree. Computed directly:
/// for a bihomogeneous generator of Y-degree b, the only operators x^a y^c(d)
/// whose images have Y-degree zero are those with |c| = b, and the nonzero
/// images are read off term by term; their X-derivative closure is the result.
SpanBasis x_subspace(const std::vector<Polynomial>& gens);

/// The sum of the derivative closures of the determinants of mu with k holes
/// chosen in the shadow of c. vars = XY gives the full space, X its zero
/// Y-degree part. Alphabet size is |mu| - k.
SpanBasis space_mkij(const Partition& mu, const Cell& c, int k, VariableSet vars);

/// Coefficient quotient prod(row! col!) over L divided by the same product
/// over Lp. Requires equal cell counts.
Rational transition_coefficient(const LatticeDiagram& L, const LatticeDiagram& Lp);

struct ShiftTerm {
    Rational coef;
    LatticeDiagram diagram;
};

/// Predicted expansion of sym_function(kind, r, X)(d) applied to the
/// determinant of L, as signed multiples of determinants of shifted diagrams:
///   - PowerSum: one cell moves down r steps; sign of the resorting permutation.
///   - Elementary: r distinct cells move down one step each; sign always +1.
///   - Homogeneous: r distinct complement-window cells move up one step each;
///     a selection only counts when every moved cell lands on a cell of L or
///     on the previous position of another moved cell.
/// Degenerate results (repeated cells, negative coordinates) are dropped.
std::vector<ShiftTerm> shift_expand(SymKind kind, int r, const LatticeDiagram& L);

struct ShiftReport {
    bool match = false;
    Polynomial lhs;
    Polynomial rhs;
};

/// Compares sym_function(kind,r,X)(d) delta(L) with the expansion above.
ShiftReport verify_shift(SymKind kind, int r, const LatticeDiagram& L);

struct ReductionReport {
    bool k1_equal = false;
    std::size_t k1_dim_sum = 0;     // dim of the k=1 hole-sum space
    std::size_t k1_dim_single = 0;  // dim of the single-hole closure
    bool k2_applicable = false;
    bool k2_equal = false;
    std::size_t k2_dim_sum = 0;
    std::size_t k2_dim_pair = 0;
};

/// Checks that the k=1 hole-sum space equals the single-hole closure, and
/// (when both neighbour cells exist) that the k=2 hole-sum space equals the
/// closure of the two axis-neighbour hole pairs.
ReductionReport verify_sum_reduction(const Partition& mu, const Cell& c);

/// True iff the determinant of mu minus `target` lies in the sum of the
/// closures generated by mu minus each hole set in `gens`.
bool counterexample_probe(const Partition& mu, const std::vector<Cell>& target,
                          const std::vector<std::vector<Cell>>& gens);

}  // namespace lattice

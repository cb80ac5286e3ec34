#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "lattice/diagram.hpp"
#include "lattice/monomial.hpp"

namespace lattice {

using Rational = mpq_class;

enum class Alphabet { X, Y };
enum class SymKind { PowerSum, Elementary, Homogeneous };

struct Bidegree {
    int x = 0;
    int y = 0;
    friend bool operator==(const Bidegree&, const Bidegree&) = default;
    /// Report order: by total degree, then X-degree.
    friend bool operator<(const Bidegree& a, const Bidegree& b) {
        if (a.x + a.y != b.x + b.y) return a.x + a.y < b.x + b.y;
        return a.x < b.x;
    }
};

/// Sparse polynomial over Q in x_1..x_m, y_1..y_m. Terms are kept sorted with
/// the leading (greatest) monomial first; coefficients are nonzero and in
/// lowest terms (mpq keeps them canonical).
class Polynomial {
public:
    struct Term {
        Monomial mono;
        Rational coef;
    };

    explicit Polynomial(int vars = 0);

    static Polynomial zero(int vars) { return Polynomial(vars); }
    static Polynomial constant(int vars, const Rational& c);
    static Polynomial monomial(int vars, const Monomial& m, const Rational& c = 1);
    static Polynomial variable(int vars, Alphabet a, int index);  // 0-based index

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;
    const Rational& coefficient(const Monomial& m) const;  // 0 if absent

    int x_degree() const;  // max over terms; -1 for zero
    int y_degree() const;

    /// Bidegree (a,b) when every term has X-degree a and Y-degree b.
    std::optional<Bidegree> bidegree() const;
    bool is_bihomogeneous() const { return bidegree().has_value(); }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    /// *this += c * o, single merge pass.
    void add_scaled(const Rational& c, const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { a *= c; return a; }
    friend Polynomial operator-(Polynomial a) { a *= -1; return a; }
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// Builds from unsorted (monomial, coefficient) pairs, combining duplicates.
    static Polynomial from_terms(int vars, std::vector<Term> terms);

    /// Terms in ascending order, e.g. "x2 - x1", "1/2*x1^2*y2".
    std::string to_text() const;

private:
    int vars_;
    std::vector<Term> terms_;  // sorted descending, no zero coefficients
};

/// Sum of c_i * p_i in one merge pass over the sorted term lists.
Polynomial linear_combination(int vars,
                              const std::vector<std::pair<Rational, const Polynomial*>>& parts);

/// The determinant whose columns are the cells of L: row i holds
/// x_i^{row(cell_j)} y_i^{col(cell_j)}. Requires vars == L.size(); expanded
/// over all permutations, so diagrams are capped at 8 cells.
Polynomial delta(const LatticeDiagram& L, int vars);

/// Determinant of the zero-marker-or-diagram result of canonicalize: the sign
/// is folded in, and a zero marker yields the zero polynomial.
Polynomial delta(const std::optional<CanonicalDiagram>& c, int vars);

/// Q(d)P: substitute each variable of Q by the matching partial derivative and
/// apply to P. Linear in both arguments.
Polynomial apply_operator(const Polynomial& Q, const Polynomial& P);

/// Image of P under the single monomial operator m(d).
Polynomial apply_monomial_operator(const Monomial& m, const Polynomial& P);

/// Power sums (r >= 1), elementary (r >= 0) and complete homogeneous (r >= 0)
/// symmetric polynomials in the chosen alphabet.
Polynomial sym_function(SymKind kind, int r, Alphabet alphabet, int vars);

/// <P,Q> = constant term of P(d)Q. Distinct monomials are orthogonal and
/// <m,m> is the product of the factorials of the exponents of m.
Rational scalar_product(const Polynomial& P, const Polynomial& Q);

/// Simultaneous substitution x_i -> x_{perm[i]}, y_i -> y_{perm[i]};
/// perm is 0-based and must be a bijection on {0..vars-1}.
Polynomial diagonal_action(const std::vector<int>& perm, const Polynomial& P);

/// Sum of the terms of exact bidegree (a,b).
Polynomial bihomogeneous_component(const Polynomial& P, int a, int b);

/// All bihomogeneous components of P, in ascending Bidegree order.
std::vector<std::pair<Bidegree, Polynomial>> bihomogeneous_components(const Polynomial& P);

/// Re-embeds P into a larger alphabet (new variables unused).
Polynomial extend_alphabet(const Polynomial& P, int vars);

/// n! as a rational (helper for coefficients).
Rational factorial(int n);

}  // namespace lattice

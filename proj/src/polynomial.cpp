#include "lattice/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace lattice {

namespace {

void check_vars(int vars) {
    if (vars < 0 || vars > kMaxVars)
        throw std::invalid_argument("alphabet size must be between 0 and " +
                                    std::to_string(kMaxVars));
}

const Rational kZero = 0;

// Factorials as mpz, memoized.
const mpz_class& factorial_z(int n) {
    static std::vector<mpz_class> table = {1};
    while (static_cast<int>(table.size()) <= n)
        table.push_back(table.back() * static_cast<int>(table.size()));
    return table[n];
}

}  // namespace

Polynomial::Polynomial(int vars) : vars_(vars) { check_vars(vars); }

Polynomial Polynomial::constant(int vars, const Rational& c) {
    Polynomial p(vars);
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
}

Polynomial Polynomial::monomial(int vars, const Monomial& m, const Rational& c) {
    Polynomial p(vars);
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::variable(int vars, Alphabet a, int index) {
    check_vars(vars);
    if (index < 0 || index >= vars) throw std::invalid_argument("variable index out of range");
    Monomial m;
    if (a == Alphabet::X) m.set_x(index, 1); else m.set_y(index, 1);
    return monomial(vars, m);
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading monomial");
    return terms_.front().mono;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return terms_.front().coef;
}

const Rational& Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) {
                                   return mono_greater(t.mono, key);
                               });
    if (it != terms_.end() && it->mono == m) return it->coef;
    return kZero;
}

int Polynomial::x_degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.x_degree());
    return d;
}

int Polynomial::y_degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.y_degree());
    return d;
}

std::optional<Bidegree> Polynomial::bidegree() const {
    if (terms_.empty()) return std::nullopt;
    Bidegree bd{terms_.front().mono.x_degree(), terms_.front().mono.y_degree()};
    for (const Term& t : terms_)
        if (t.mono.x_degree() != bd.x || t.mono.y_degree() != bd.y) return std::nullopt;
    return bd;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    add_scaled(1, o);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    add_scaled(-1, o);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (Term& t : terms_) t.coef *= c;
    return *this;
}

void Polynomial::add_scaled(const Rational& c, const Polynomial& o) {
    if (vars_ != o.vars_) throw std::invalid_argument("alphabet mismatch");
    if (c == 0 || o.terms_.empty()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            Rational v = terms_[i].coef + c * o.terms_[j].coef;
            if (v != 0) out.push_back({terms_[i].mono, std::move(v)});
            ++i; ++j;
        } else if (mono_greater(terms_[i].mono, o.terms_[j].mono)) {
            out.push_back(std::move(terms_[i]));
            ++i;
        } else {
            out.push_back({o.terms_[j].mono, c * o.terms_[j].coef});
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
    for (; j < o.terms_.size(); ++j) out.push_back({o.terms_[j].mono, c * o.terms_[j].coef});
    terms_ = std::move(out);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("alphabet mismatch");
    std::vector<Polynomial::Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            Monomial m = ta.mono;
            for (int v = 0; v < 2 * kMaxVars; ++v) {
                int e = m.e[v] + tb.mono.e[v];
                check_exponent(e);
                m.e[v] = static_cast<std::uint8_t>(e);
            }
            m.deg = static_cast<std::uint16_t>(ta.mono.deg + tb.mono.deg);
            prod.push_back({m, ta.coef * tb.coef});
        }
    return Polynomial::from_terms(a.vars_, std::move(prod));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef)
            return false;
    return true;
}

Polynomial Polynomial::from_terms(int vars, std::vector<Term> terms) {
    if (!std::is_sorted(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
            return mono_greater(a.mono, b.mono);
        }))
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return mono_greater(a.mono, b.mono); });
    Polynomial p(vars);
    p.terms_.reserve(terms.size());
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coef += t.coef;
        else
            p.terms_.push_back(std::move(t));
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.coef == 0; });
    return p;
}

Polynomial linear_combination(
    int vars, const std::vector<std::pair<Rational, const Polynomial*>>& parts) {
    struct Cursor {
        std::size_t part;
        std::size_t pos;
    };
    auto mono_at = [&](const Cursor& c) -> const Monomial& {
        return parts[c.part].second->terms()[c.pos].mono;
    };
    auto cmp = [&](const Cursor& a, const Cursor& b) {
        return mono_less(mono_at(a), mono_at(b));  // max-heap on monomials
    };
    std::priority_queue<Cursor, std::vector<Cursor>, decltype(cmp)> heap(cmp);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].second->vars() != vars) throw std::invalid_argument("alphabet mismatch");
        if (parts[p].first != 0 && !parts[p].second->is_zero()) heap.push({p, 0});
    }
    std::vector<Polynomial::Term> out;
    Rational acc;
    while (!heap.empty()) {
        Cursor top = heap.top();
        heap.pop();
        Monomial m = mono_at(top);
        acc = parts[top.part].first * parts[top.part].second->terms()[top.pos].coef;
        if (++top.pos < parts[top.part].second->term_count()) heap.push(top);
        while (!heap.empty() && mono_at(heap.top()) == m) {
            Cursor nxt = heap.top();
            heap.pop();
            acc += parts[nxt.part].first * parts[nxt.part].second->terms()[nxt.pos].coef;
            if (++nxt.pos < parts[nxt.part].second->term_count()) heap.push(nxt);
        }
        if (acc != 0) out.push_back({m, acc});
    }
    // out is already sorted descending and duplicate-free
    return Polynomial::from_terms(vars, std::move(out));
}

Polynomial delta(const LatticeDiagram& L, int vars) {
    int n = L.size();
    if (vars != n) throw std::invalid_argument("alphabet size must equal cell count");
    check_vars(vars);
    if (n == 0) return Polynomial::constant(0, 1);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Polynomial::Term> terms;
    // Iterate permutations; track sign by inversion count of each state.
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Monomial m;
        for (int i = 0; i < n; ++i) {
            const Cell& c = L.cells()[perm[i]];
            check_exponent(c.row);
            check_exponent(c.col);
            m.set_x(i, c.row);
            m.set_y(i, c.col);
        }
        terms.push_back({m, inv % 2 == 0 ? 1 : -1});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Polynomial::from_terms(vars, std::move(terms));
}

Polynomial delta(const std::optional<CanonicalDiagram>& c, int vars) {
    if (!c) return Polynomial::zero(vars);
    Polynomial p = delta(c->diagram, vars);
    if (c->sign < 0) p *= -1;
    return p;
}

Polynomial apply_monomial_operator(const Monomial& op, const Polynomial& P) {
    std::vector<Polynomial::Term> out;
    out.reserve(P.term_count());
    mpz_class scale;
    for (const auto& t : P.terms()) {
        bool ok = true;
        for (int v = 0; v < 2 * kMaxVars; ++v)
            if (t.mono.e[v] < op.e[v]) { ok = false; break; }
        if (!ok) continue;
        scale = 1;
        Monomial m = t.mono;
        for (int v = 0; v < 2 * kMaxVars; ++v) {
            int e = t.mono.e[v], d = op.e[v];
            if (d == 0) continue;
            // falling factorial e(e-1)...(e-d+1)
            for (int u = 0; u < d; ++u) scale *= e - u;
            m.e[v] = static_cast<std::uint8_t>(e - d);
        }
        m.deg = static_cast<std::uint16_t>(t.mono.deg - op.deg);
        out.push_back({m, t.coef * Rational(scale)});
    }
    // Shifting all exponents down by the same op preserves the term order.
    return Polynomial::from_terms(P.vars(), std::move(out));
}

Polynomial apply_operator(const Polynomial& Q, const Polynomial& P) {
    if (Q.vars() != P.vars()) throw std::invalid_argument("alphabet mismatch");
    std::vector<Polynomial> images;
    images.reserve(Q.term_count());
    std::vector<std::pair<Rational, const Polynomial*>> parts;
    for (const auto& tq : Q.terms()) {
        images.push_back(apply_monomial_operator(tq.mono, P));
        parts.push_back({tq.coef, &images.back()});
    }
    return linear_combination(P.vars(), parts);
}

Polynomial sym_function(SymKind kind, int r, Alphabet alphabet, int vars) {
    check_vars(vars);
    auto mono_for = [&](const std::vector<int>& exps) {
        Monomial m;
        for (int i = 0; i < vars; ++i) {
            if (alphabet == Alphabet::X) m.set_x(i, exps[i]); else m.set_y(i, exps[i]);
        }
        return m;
    };
    std::vector<Polynomial::Term> terms;
    switch (kind) {
        case SymKind::PowerSum: {
            if (r < 1) throw std::invalid_argument("power sums are defined for r >= 1");
            for (int i = 0; i < vars; ++i) {
                std::vector<int> exps(vars, 0);
                exps[i] = r;
                terms.push_back({mono_for(exps), 1});
            }
            break;
        }
        case SymKind::Elementary: {
            if (r < 0) throw std::invalid_argument("negative degree");
            if (r == 0) return Polynomial::constant(vars, 1);
            if (r > vars) return Polynomial::zero(vars);
            std::vector<int> idx(r);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                std::vector<int> exps(vars, 0);
                for (int i : idx) exps[i] = 1;
                terms.push_back({mono_for(exps), 1});
                int t = r - 1;
                while (t >= 0 && idx[t] == vars - r + t) --t;
                if (t < 0) break;
                ++idx[t];
                for (int u = t + 1; u < r; ++u) idx[u] = idx[u - 1] + 1;
            }
            break;
        }
        case SymKind::Homogeneous: {
            if (r < 0) throw std::invalid_argument("negative degree");
            if (r == 0) return Polynomial::constant(vars, 1);
            if (vars == 0) return Polynomial::zero(vars);
            // all exponent vectors of total degree r
            std::vector<int> exps(vars, 0);
            exps[0] = r;
            while (true) {
                terms.push_back({mono_for(exps), 1});
                // next composition of r into `vars` parts
                int t = vars - 2;
                while (t >= 0 && exps[t] == 0) --t;
                if (t < 0) break;
                --exps[t];
                int tail = 1;
                for (int u = t + 1; u < vars; ++u) { tail += exps[u]; exps[u] = 0; }
                exps[t + 1] = tail;
            }
            break;
        }
    }
    return Polynomial::from_terms(vars, std::move(terms));
}

Rational scalar_product(const Polynomial& P, const Polynomial& Q) {
    if (P.vars() != Q.vars()) throw std::invalid_argument("alphabet mismatch");
    // Only equal monomials contribute: <m,m> = prod of exponent factorials.
    Rational total = 0;
    const auto& a = P.terms();
    const auto& b = Q.terms();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].mono == b[j].mono) {
            mpz_class f = 1;
            for (int v = 0; v < 2 * kMaxVars; ++v) f *= factorial_z(a[i].mono.e[v]);
            total += a[i].coef * b[j].coef * Rational(f);
            ++i; ++j;
        } else if (mono_greater(a[i].mono, b[j].mono)) {
            ++i;
        } else {
            ++j;
        }
    }
    return total;
}

Polynomial diagonal_action(const std::vector<int>& perm, const Polynomial& P) {
    int m = P.vars();
    if (static_cast<int>(perm.size()) != m)
        throw std::invalid_argument("permutation size must equal alphabet size");
    std::vector<bool> seen(m, false);
    for (int v : perm) {
        if (v < 0 || v >= m || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
    std::vector<Polynomial::Term> out;
    out.reserve(P.term_count());
    for (const auto& t : P.terms()) {
        Monomial nm;
        for (int i = 0; i < m; ++i) {
            nm.set_x(perm[i], t.mono.x(i));
            nm.set_y(perm[i], t.mono.y(i));
        }
        out.push_back({nm, t.coef});
    }
    return Polynomial::from_terms(m, std::move(out));
}

Polynomial bihomogeneous_component(const Polynomial& P, int a, int b) {
    std::vector<Polynomial::Term> out;
    for (const auto& t : P.terms())
        if (t.mono.x_degree() == a && t.mono.y_degree() == b) out.push_back(t);
    return Polynomial::from_terms(P.vars(), std::move(out));
}

std::vector<std::pair<Bidegree, Polynomial>> bihomogeneous_components(const Polynomial& P) {
    std::map<Bidegree, std::vector<Polynomial::Term>> buckets;
    for (const auto& t : P.terms())
        buckets[{t.mono.x_degree(), t.mono.y_degree()}].push_back(t);
    std::vector<std::pair<Bidegree, Polynomial>> out;
    for (auto& [bd, terms] : buckets)
        out.emplace_back(bd, Polynomial::from_terms(P.vars(), std::move(terms)));
    return out;
}

Polynomial extend_alphabet(const Polynomial& P, int vars) {
    if (vars < P.vars()) throw std::invalid_argument("alphabet can only grow");
    check_vars(vars);
    Polynomial q(vars);
    std::vector<Polynomial::Term> ts(P.terms().begin(), P.terms().end());
    return Polynomial::from_terms(vars, std::move(ts));
}

Rational factorial(int n) { return Rational(factorial_z(n)); }

std::string Polynomial::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    // ascending canonical order
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Term& t = *it;
        bool first = it == terms_.rbegin();
        Rational c = t.coef;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string vars_part;
        for (int i = 0; i < vars_; ++i) {
            if (int e = t.mono.x(i); e > 0) {
                if (!vars_part.empty()) vars_part += "*";
                vars_part += "x" + std::to_string(i + 1);
                if (e > 1) vars_part += "^" + std::to_string(e);
            }
        }
        for (int i = 0; i < vars_; ++i) {
            if (int e = t.mono.y(i); e > 0) {
                if (!vars_part.empty()) vars_part += "*";
                vars_part += "y" + std::to_string(i + 1);
                if (e > 1) vars_part += "^" + std::to_string(e);
            }
        }
        if (vars_part.empty()) {
            os << c.get_str();
        } else if (c == 1) {
            os << vars_part;
        } else {
            os << c.get_str() << "*" << vars_part;
        }
    }
    return os.str();
}

}  // namespace lattice

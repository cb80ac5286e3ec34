#include <doctest.h>

#include <algorithm>
#include <random>

#include "lattice/span_basis.hpp"
#include "lattice/spaces.hpp"
#include "rank_oracle.hpp"

using namespace lattice;

namespace {
Polynomial var(int m, Alphabet a, int i) { return Polynomial::variable(m, a, i); }
}

TEST_CASE("insert") {
    SpanBasis b(2);
    CHECK(b.insert(Polynomial::constant(2, 1)));
    CHECK(b.dimension() == 1);

    CHECK(b.insert(var(2, Alphabet::X, 0)));
    CHECK(!b.insert(var(2, Alphabet::X, 0) * Rational(2)));
    CHECK(b.insert(var(2, Alphabet::X, 1)));
    CHECK(b.dimension() == 3);

    CHECK(!b.insert(Polynomial::zero(2)));
    CHECK_THROWS_AS(b.insert(Polynomial::constant(2, 1) + var(2, Alphabet::X, 0)),
                    std::invalid_argument);
}

TEST_CASE("contains") {
    SpanBasis b(2);
    CHECK(b.contains(Polynomial::zero(2)));
    b.insert(var(2, Alphabet::X, 0));
    CHECK(!b.contains(var(2, Alphabet::X, 1)));
    b.insert(var(2, Alphabet::X, 1));
    Polynomial combo = var(2, Alphabet::X, 0) * Rational(3) - var(2, Alphabet::X, 1) * Rational(5);
    CHECK(b.contains(combo));
    // a general polynomial is tested component by component
    CHECK(!b.contains(combo + Polynomial::constant(2, 1)));
    b.insert(Polynomial::constant(2, 1));
    CHECK(b.contains(combo + Polynomial::constant(2, 1)));
}

TEST_CASE("insert and contains agree") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coef(-3, 3);
    SpanBasis b(3);
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(var(3, Alphabet::X, i));
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial p(3);
        for (const Polynomial& g : gens) p.add_scaled(coef(rng), g);
        if (p.is_zero()) continue;
        std::size_t before = b.dimension();
        bool fresh = b.insert(p);
        CHECK(b.contains(p));
        CHECK(b.dimension() == before + (fresh ? 1 : 0));
    }
}

TEST_CASE("bigraded_hilbert") {
    SpanBasis unit(1);
    unit.insert(Polynomial::constant(1, 1));
    CHECK(unit.bigraded_hilbert() == std::map<Bidegree, std::size_t>{{{0, 0}, 1}});

    SpanBasis col(2);
    col.insert(var(2, Alphabet::X, 1) - var(2, Alphabet::X, 0));
    col.insert(Polynomial::constant(2, 1));
    CHECK(col.bigraded_hilbert() ==
          std::map<Bidegree, std::size_t>{{{0, 0}, 1}, {{1, 0}, 1}});
}

TEST_CASE("closure of the (2,1) determinant matches the brute-force oracle") {
    Polynomial d = delta(diagram_of(Partition({2, 1})), 3);
    SpanBasis space = derivative_closure({d});
    CHECK(space.dimension() == 6);
    CHECK(space.dimension() == oracle::closure_dim({d}));

    std::map<Bidegree, std::size_t> want{
        {{0, 0}, 1}, {{1, 0}, 2}, {{0, 1}, 2}, {{1, 1}, 1}};
    CHECK(space.bigraded_hilbert() == want);
    auto oracle_h = oracle::closure_hilbert({d});
    for (const auto& [bd, dim] : want)
        CHECK(oracle_h[{bd.x, bd.y}] == dim);
}

TEST_CASE("dimension does not depend on insertion order") {
    auto x = [](int i) { return Polynomial::variable(3, Alphabet::X, i); };
    auto y = [](int i) { return Polynomial::variable(3, Alphabet::Y, i); };
    std::vector<Polynomial> gens = {x(0) - x(1), x(1) - x(2), x(0) + x(2),
                                    x(2) * Rational(4), y(0), y(0) + y(1),
                                    x(0) * y(1) - x(1) * y(0), x(0) * y(1)};

    std::vector<int> order(gens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);

    std::optional<std::size_t> dim;
    std::optional<std::map<Bidegree, std::size_t>> hilbert;
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 12; ++trial) {
        std::shuffle(order.begin(), order.end(), rng);
        SpanBasis b(3);
        for (int i : order) b.insert(gens[i]);
        if (!dim) {
            dim = b.dimension();
            hilbert = b.bigraded_hilbert();
        } else {
            CHECK(b.dimension() == *dim);
            CHECK(b.bigraded_hilbert() == *hilbert);
        }
    }
}

TEST_CASE("contains is monotone under span growth") {
    Polynomial p = var(3, Alphabet::X, 0) - var(3, Alphabet::X, 2);
    SpanBasis small(3);
    small.insert(var(3, Alphabet::X, 0) - var(3, Alphabet::X, 1));
    small.insert(var(3, Alphabet::X, 1) - var(3, Alphabet::X, 2));
    REQUIRE(small.contains(p));
    SpanBasis big(3);
    for (const Polynomial* row : small.rows()) big.insert(*row);
    big.insert(var(3, Alphabet::Y, 0));
    CHECK(big.contains(p));
}

TEST_CASE("stored rows re-insert as dependent") {
    SpanBasis space = derivative_closure({delta(diagram_of(Partition({2, 2})), 4)});
    std::size_t dim = space.dimension();
    for (const Polynomial* row : space.rows()) {
        CHECK(!space.insert(*row));
        CHECK(space.contains(*row));
    }
    CHECK(space.dimension() == dim);
}

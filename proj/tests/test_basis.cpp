#include <doctest.h>

#include "lattice/basis.hpp"
#include "rank_oracle.hpp"

using namespace lattice;

TEST_CASE("monomial_basis") {
    auto one = monomial_basis(Partition({1}));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == Monomial{});

    // the row shape has X-degree zero, a single constant operator suffices
    auto row = monomial_basis(Partition({2}));
    REQUIRE(row.size() == 1);
    CHECK(row[0] == Monomial{});

    auto hook = monomial_basis(Partition({2, 1}));
    REQUIRE(hook.size() == 3);
    CHECK(hook[0] == Monomial{});
    for (const Monomial& m : hook) CHECK(m.y_degree() == 0);
}

TEST_CASE("monomial_basis images are independent and exhaust the X span") {
    for (const Partition& mu :
         {Partition({2, 1}), Partition({2, 2}), Partition({3, 1}), Partition({1, 1, 1})}) {
        Polynomial d = delta(diagram_of(mu), mu.size());
        std::vector<Polynomial> images;
        for (const Monomial& m : monomial_basis(mu))
            images.push_back(apply_monomial_operator(m, d));
        CHECK(oracle::dense_rank(images) == images.size());
        // the span of all X-monomial images has the same dimension
        std::uint64_t nf = 1;
        for (int t = 2; t <= mu.size(); ++t) nf *= t;
        CHECK(images.size() == nf / mu.parts_factorial());
    }
}

TEST_CASE("build_basis_x on the worked shapes") {
    auto r1 = build_basis_x(Partition({2, 1}), {0, 0}, 1);
    CHECK(r1.polys.size() == 3);
    CHECK(r1.cardinality_ok);
    CHECK(r1.independent);
    CHECK(r1.spans_ok);
    CHECK(r1.dim_x == 3);
    CHECK(r1.contributions.size() == 2);

    auto r2 = build_basis_x(Partition({2, 2}), {0, 0}, 1);
    CHECK(r2.cardinality_ok);
    CHECK(r2.independent);
    CHECK(r2.spans_ok);
    CHECK(r2.polys.size() == tableaux_count(Partition({2, 2}), {0, 0}, 1));

    // k = 0 reduces to the plain monomial basis of the partition space
    auto r0 = build_basis_x(Partition({2, 1}), {0, 0}, 0);
    CHECK(r0.polys.size() == 3);
    CHECK(r0.all_ok());
}

TEST_CASE("build_basis_x across anchors and hole counts") {
    for (auto [mu, c, k] : std::vector<std::tuple<Partition, Cell, int>>{
             {Partition({2, 2}), {0, 0}, 2},
             {Partition({3, 2}), {0, 0}, 2},
             {Partition({3, 2}), {1, 0}, 1},
             {Partition({2, 2, 1}), {0, 0}, 3},
             {Partition({2, 1, 1}), {0, 1}, 1},
             {Partition({4, 1}), {0, 2}, 2}}) {
        CAPTURE(mu.parts());
        CAPTURE(c);
        CAPTURE(k);
        auto rep = build_basis_x(mu, c, k);
        CHECK(rep.cardinality_ok);
        CHECK(rep.independent);
        CHECK(rep.spans_ok);
        CHECK(rep.dim_x == rep.tableaux);
    }
}

#include "doctest.h"

#include "matroidkl/bigint.hpp"
#include "matroidkl/errors.hpp"
#include "matroidkl/families.hpp"

using namespace matroidkl;

TEST_CASE("uniform matroids") {
    Matroid u = uniform(2, 4);
    CHECK(u.n() == 4);
    CHECK(u.rank() == 2);
    CHECK(u.bases().size() == 6);
    CHECK(boolean_matroid(3) == uniform(3, 3));
    CHECK(uniform(0, 3).rank() == 0);
    CHECK_THROWS_AS(uniform(4, 3), BadParameters);
    CHECK_THROWS_AS(uniform(-1, 3), BadParameters);
}

TEST_CASE("v_matroid is the prescribed direct sum") {
    Matroid v = v_matroid(3, 4, 6);
    CHECK(v.n() == 6);
    CHECK(v.rank() == 3);
    // bases pick k-1 of the first h elements plus one of the rest
    CHECK(Int(v.bases().size()) == binomial(4, 2) * 2);
    for (Subset b : v.bases()) {
        CHECK(popcount(b & subset_from({0, 1, 2, 3})) == 2);
        CHECK(popcount(b & subset_from({4, 5})) == 1);
    }
    CHECK_THROWS_AS(v_matroid(0, 2, 4), BadParameters);
    CHECK_THROWS_AS(v_matroid(2, 0, 4), BadParameters);
    CHECK_THROWS_AS(v_matroid(2, 4, 4), BadParameters);
}

TEST_CASE("graphic matroids from explicit graphs") {
    // triangle
    Matroid tri = graphic({3, {{0, 1}, {1, 2}, {2, 0}}});
    CHECK(tri == uniform(2, 3));
    // a loop edge is a matroid loop, a bridge is a coloop
    Matroid g = graphic({3, {{0, 0}, {0, 1}, {1, 2}}});
    CHECK(g.rank() == 2);
    CHECK(g.loops() == subset_from({0}));
    // disconnected graph
    CHECK(graphic({4, {{0, 1}, {2, 3}}}).rank() == 2);
    CHECK(graphic({2, {}}).rank() == 0);
    CHECK_THROWS_AS(graphic({2, {{0, 5}}}), BadParameters);
}

TEST_CASE("named graph families") {
    CHECK(thagomizer(1) == uniform(2, 3));  // K_{1,1,1} is a triangle
    Matroid t2 = thagomizer(2);
    CHECK(t2.n() == 5);
    CHECK(t2.rank() == 3);
    CHECK(t2.bases().size() == 8);  // spanning trees of K_4 minus one edge

    Matroid k22 = complete_bipartite_2n(2);
    CHECK(k22 == uniform(3, 4));  // K_{2,2} is a 4-cycle

    CHECK(fan(1) == uniform(1, 1));
    CHECK(fan(2) == uniform(2, 3));
    Matroid f3 = fan(3);
    CHECK(f3.n() == 5);
    CHECK(f3.rank() == 3);

    Matroid w3 = wheel(3);
    CHECK(w3.n() == 6);
    CHECK(w3.rank() == 3);
    CHECK(w3.bases().size() == 16);  // spanning trees of K_4
    CHECK_THROWS_AS(wheel(2), BadParameters);
}

TEST_CASE("whirl relaxes the rim of the wheel") {
    Matroid w = wheel(3), wh = whirl(3);
    Subset rim = subset_from({3, 4, 5});
    CHECK(!w.is_basis(rim));
    CHECK(wh.is_basis(rim));
    CHECK(wh.bases().size() == w.bases().size() + 1);
}

TEST_CASE("projective geometries") {
    Matroid fano = projective_geometry(2, 2);
    CHECK(fano.n() == 7);
    CHECK(fano.rank() == 3);
    CHECK(fano.bases().size() == 28);  // C(7,3) minus the 7 lines

    CHECK(projective_geometry(1, 2) == uniform(2, 3));
    CHECK(projective_geometry(1, 4) == uniform(2, 5));

    Matroid pg23 = projective_geometry(2, 3);
    CHECK(pg23.n() == 13);
    CHECK(pg23.rank() == 3);
    CHECK(pg23.bases().size() == 234);  // C(13,3) minus 13 lines of 4 points

    CHECK_THROWS_AS(projective_geometry(2, 6), UnsupportedFieldOrder);
    CHECK_THROWS_AS(projective_geometry(0, 2), BadParameters);
}

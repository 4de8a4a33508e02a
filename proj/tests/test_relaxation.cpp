#include "doctest.h"

#include <algorithm>

#include "matroidkl/errors.hpp"
#include "matroidkl/families.hpp"
#include "matroidkl/relaxation.hpp"

using namespace matroidkl;

TEST_CASE("stressed hyperplanes of the split uniform matroid") {
    Matroid v = v_matroid(3, 4, 6);
    Subset big = subset_from({0, 1, 2, 3});
    CHECK(is_stressed_hyperplane(v, big));
    // {i,4,5} is a hyperplane but contains the circuit {4,5}
    CHECK(!is_stressed_hyperplane(v, subset_from({0, 4, 5})));
    std::vector<Subset> sh = stressed_hyperplanes(v);
    CHECK(std::count(sh.begin(), sh.end(), big) == 1);
    // the only stressed hyperplane with at least rank-many elements
    for (Subset h : sh)
        if (h != big) CHECK(popcount(h) < v.rank());
}

TEST_CASE("relaxation adds exactly the rank-subsets of the hyperplane") {
    Matroid v = v_matroid(3, 4, 6);
    Subset big = subset_from({0, 1, 2, 3});
    RelaxationStep step = relaxation_step(v, big);
    CHECK(step.h == 4);
    CHECK(step.k == 3);
    CHECK(step.added_bases.size() == 4);  // C(4,3)
    Matroid r = relax(v, big);
    CHECK(r.bases().size() == v.bases().size() + 4);
    for (Subset b : step.added_bases) {
        CHECK(is_subset(b, big));
        CHECK(!v.is_basis(b));
        CHECK(r.is_basis(b));
    }
    // the relaxed hyperplane is no longer a flat of rank k-1
    CHECK(r.rank_of(big) == 3);
}

TEST_CASE("relaxation error cases") {
    Matroid v = v_matroid(3, 4, 6);
    CHECK_THROWS_AS(relax(v, subset_from({0})), NotAHyperplane);
    CHECK_THROWS_AS(relax(v, v.ground()), NotAHyperplane);
    CHECK_THROWS_AS(relax(v, subset_from({0, 4, 5})), NotStressed);
}

TEST_CASE("free subsets undo relaxations") {
    Matroid v = v_matroid(3, 4, 6);
    Subset big = subset_from({0, 1, 2, 3});
    Matroid r = relax(v, big);
    CHECK(is_free_subset(r, big));
    std::vector<Subset> fs = free_subsets(r);
    CHECK(std::count(fs.begin(), fs.end(), big) == 1);
    CHECK(unrelax(r, big) == v);
    CHECK_THROWS_AS(unrelax(r, r.ground()), NotAFreeSubset);
    CHECK_THROWS_AS(unrelax(v, big), NotAFreeSubset);
}

TEST_CASE("relaxing a three-point line of a rank-2 uniform matroid") {
    // in reverse: removing the rank-subsets of a free set creates a matroid
    // whose relaxation restores the uniform one
    Matroid u = uniform(2, 4);
    Subset a = subset_from({0, 1, 2});
    CHECK(is_free_subset(u, a));
    Matroid line = unrelax(u, a);
    CHECK(line.bases().size() == 3);
    CHECK(is_stressed_hyperplane(line, a));
    CHECK(relax(line, a) == u);
}

TEST_CASE("uniform matroids have no stressed hyperplane worth relaxing") {
    for (Subset h : stressed_hyperplanes(uniform(3, 6)))
        CHECK(popcount(h) < 3);  // only vacuous ones below rank size
}

TEST_CASE("relax_all flattens a paving matroid onto the uniform one") {
    Matroid fano = projective_geometry(2, 2);
    RelaxAllResult res = relax_all(fano);
    CHECK(res.result == uniform(3, 7));
    CHECK(res.profile == std::map<int, int>{{3, 7}});

    RelaxAllResult rw = relax_all(wheel(3));
    CHECK(rw.result == uniform(3, 6));

    CHECK_THROWS_AS(relax_all(v_matroid(3, 4, 6)), NotPaving);
}

TEST_CASE("wheel to whirl is a single rim relaxation") {
    Matroid w = wheel(3);
    Subset rim = subset_from({3, 4, 5});
    CHECK(is_stressed_hyperplane(w, rim));
    CHECK(relax(w, rim) == whirl(3));
    CHECK(unrelax(whirl(3), rim) == w);
}

#include "matroidkl/relaxation.hpp"

#include <algorithm>

#include "matroidkl/bigint.hpp"
#include "matroidkl/errors.hpp"

namespace matroidkl {

namespace {

std::string set_str(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int e : elements_of(s)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

}  // namespace

bool is_stressed_hyperplane(const Matroid& m, Subset h) {
    int k = m.rank();
    if (k == 0) return false;
    if (m.rank_of(h) != k - 1 || m.closure(h) != h) return false;
    // every k-subset of H is a circuit <=> every (k-1)-subset is independent
    bool ok = true;
    for_each_ksubset_of(h, k - 1, [&](Subset s) {
        if (!m.is_independent(s)) ok = false;
    });
    return ok;
}

std::vector<Subset> stressed_hyperplanes(const Matroid& m) {
    std::vector<Subset> out;
    if (m.rank() == 0) return out;
    FlatLattice lat = m.flats();
    for (Subset h : lat.hyperplanes())
        if (is_stressed_hyperplane(m, h)) out.push_back(h);
    return out;
}

RelaxationStep relaxation_step(const Matroid& m, Subset h) {
    int k = m.rank();
    if (m.rank_of(h) != k - 1 || m.closure(h) != h)
        throw NotAHyperplane(set_str(h) + " is not a hyperplane");
    if (!is_stressed_hyperplane(m, h))
        throw NotStressed(set_str(h) +
                          " has a dependent (rank-1)-subset, so some rank-size "
                          "subset is not a circuit");
    RelaxationStep step;
    step.hyperplane = h;
    step.h = popcount(h);
    step.k = k;
    for_each_ksubset_of(h, k,
                        [&](Subset s) { step.added_bases.push_back(s); });
    return step;
}

Matroid relax(const Matroid& m, Subset h) {
    RelaxationStep step = relaxation_step(m, h);
    std::vector<Subset> bases = m.bases();
    bases.insert(bases.end(), step.added_bases.begin(), step.added_bases.end());
    return Matroid(m.n(), std::move(bases));
}

bool is_free_subset(const Matroid& m, Subset a) {
    int k = m.rank();
    if (a == m.ground() || popcount(a) < k) return false;
    // every k-subset of A must be a basis, and a proper subfamily
    bool all_bases = true;
    for_each_ksubset_of(a, k, [&](Subset s) {
        if (!m.is_basis(s)) all_bases = false;
    });
    if (!all_bases) return false;
    if (binomial(popcount(a), k) >= Int(m.bases().size())) return false;
    // B'∪{x} a circuit for all k-subsets B' of A, x outside A; equivalently
    // every {x} ∪ (k-1)-subset-of-A is a basis
    bool ok = true;
    for (int x : elements_of(m.ground() & ~a)) {
        Subset xbit = Subset{1} << x;
        for_each_ksubset_of(a, k - 1, [&](Subset s) {
            if (!m.is_basis(s | xbit)) ok = false;
        });
        if (!ok) return false;
    }
    return ok;
}

std::vector<Subset> free_subsets(const Matroid& m) {
    std::vector<Subset> out;
    Subset limit = Subset{1} << m.n();
    for (Subset a = 0; a < limit; ++a)
        if (is_free_subset(m, a)) out.push_back(a);
    return out;
}

Matroid unrelax(const Matroid& m, Subset a) {
    if (!is_free_subset(m, a))
        throw NotAFreeSubset(set_str(a) + " fails the free-subset conditions");
    std::vector<Subset> bases;
    for (Subset b : m.bases())
        if (!is_subset(b, a)) bases.push_back(b);
    return Matroid(m.n(), std::move(bases));
}

RelaxAllResult relax_all(const Matroid& m) {
    if (!is_paving(m)) throw NotPaving("relax_all needs a paving matroid");
    int k = m.rank();
    std::vector<Subset> todo;
    FlatLattice lat = m.flats();
    for (Subset h : lat.hyperplanes())
        if (popcount(h) >= k) todo.push_back(h);
    std::sort(todo.begin(), todo.end(), [](Subset x, Subset y) {
        if (popcount(x) != popcount(y)) return popcount(x) > popcount(y);
        return x < y;
    });
    RelaxAllResult res{m, {}};
    for (Subset h : todo) {
        res.result = relax(res.result, h);
        res.profile[popcount(h)] += 1;
    }
    return res;
}

}  // namespace matroidkl

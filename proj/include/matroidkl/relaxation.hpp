#pragma once

#include <map>
#include <vector>

#include "matroidkl/matroid.hpp"

namespace matroidkl {

struct RelaxationStep {
    Subset hyperplane = 0;
    int h = 0;  // |hyperplane|
    int k = 0;  // rank
    std::vector<Subset> added_bases;
};

// Hyperplanes H with every rank-size subset a circuit; includes |H| < k
// (vacuously stressed). Ascending bitmask order.
std::vector<Subset> stressed_hyperplanes(const Matroid& m);

bool is_stressed_hyperplane(const Matroid& m, Subset h);

Matroid relax(const Matroid& m, Subset h);
RelaxationStep relaxation_step(const Matroid& m, Subset h);

// All A ⊊ E whose k-subsets form a nonempty proper subfamily of the bases
// with every B'∪{x} (x outside A) a circuit.
std::vector<Subset> free_subsets(const Matroid& m);

bool is_free_subset(const Matroid& m, Subset a);

// Inverse relaxation: removes the k-subsets of a free subset from the bases.
Matroid unrelax(const Matroid& m, Subset a);

struct RelaxAllResult {
    Matroid result;
    std::map<int, int> profile;  // h -> number of size-h hyperplanes relaxed
};

// Relaxes every stressed hyperplane of size >= k of a paving matroid
// (decreasing cardinality, then lexicographic); lands on U_{k,n}.
RelaxAllResult relax_all(const Matroid& m);

}  // namespace matroidkl

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace matroidkl {

// Subsets of a ground set {0,...,n-1}, n <= 64, as bit masks.
using Subset = std::uint64_t;

inline int popcount(Subset s) { return std::popcount(s); }

inline Subset full_set(int n) {
    return n == 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

inline bool contains(Subset s, int e) { return (s >> e) & 1u; }

inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

inline std::vector<int> elements_of(Subset s) {
    std::vector<int> out;
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

inline Subset subset_from(const std::vector<int>& elems) {
    Subset s = 0;
    for (int e : elems) s |= Subset{1} << e;
    return s;
}

// Visits all k-subsets of {0..n-1} in increasing numeric (= colex) order.
template <class F>
void for_each_ksubset(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        f(Subset{0});
        return;
    }
    Subset s = full_set(k);
    Subset limit = Subset{1} << n;
    while (s < limit) {
        f(s);
        // Gosper's hack
        Subset c = s & -s;
        Subset r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
        if (r == 0) break;  // overflow guard at n = 64
    }
}

// All k-subsets of an arbitrary mask, ascending by the packed combination.
template <class F>
void for_each_ksubset_of(Subset mask, int k, F&& f) {
    std::vector<int> elems = elements_of(mask);
    int m = static_cast<int>(elems.size());
    for_each_ksubset(m, k, [&](Subset packed) {
        Subset s = 0;
        for (int i : elements_of(packed)) s |= Subset{1} << elems[i];
        f(s);
    });
}

}  // namespace matroidkl

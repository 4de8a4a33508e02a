#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matroidkl/subset.hpp"

namespace matroidkl {

// All flats of a matroid grouped by rank; by_rank[r] lists the rank-r flats
// in ascending bitmask order.
struct FlatLattice {
    int k = 0;
    Subset top = 0, bottom = 0;
    std::vector<std::vector<Subset>> by_rank;

    const std::vector<Subset>& hyperplanes() const { return by_rank[k - 1]; }

    // flattened view, rank-ascending then mask-ascending
    std::vector<Subset> all;
    std::vector<int> rank_of;  // aligned with all
    std::unordered_map<Subset, int> index;

    int index_of(Subset f) const {
        auto it = index.find(f);
        return it == index.end() ? -1 : it->second;
    }
};

struct GraphSpec {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

// A matroid given by its bases over ground set {0..n-1}. Validated on
// construction (basis-exchange via the equivalent rank-axiom check for
// n <= 16, direct pair scanning otherwise).
class Matroid {
  public:
    Matroid(int n, std::vector<Subset> bases);
    Matroid(int n, const std::vector<std::vector<int>>& bases);

    int n() const { return n_; }
    int rank() const { return k_; }
    Subset ground() const { return full_set(n_); }
    const std::vector<Subset>& bases() const { return bases_; }

    bool is_basis(Subset s) const;
    int rank_of(Subset a) const;
    bool is_independent(Subset a) const { return rank_of(a) == popcount(a); }
    Subset closure(Subset a) const;
    bool is_flat(Subset a) const { return closure(a) == a; }
    Subset loops() const { return closure(0); }

    FlatLattice flats() const;
    std::vector<Subset> circuits() const;
    bool is_circuit(Subset c) const;

    Matroid dual() const;
    Matroid simplify() const;
    Matroid localization(Subset flat) const;  // restriction to a flat
    Matroid contraction(Subset flat) const;

    bool operator==(const Matroid& o) const {
        return n_ == o.n_ && bases_ == o.bases_;
    }

  private:
    void validate();
    void exchange_scan() const;  // throws ExchangeViolation with a witness

    int n_ = 0;
    int k_ = 0;
    std::vector<Subset> bases_;
    std::vector<std::uint8_t> rank_table_;  // 2^n entries when n <= 16
};

Matroid direct_sum(const Matroid& m1, const Matroid& m2);

bool is_paving(const Matroid& m);
bool is_sparse_paving(const Matroid& m);
bool is_connected(const Matroid& m);

// Exact isomorphism test of two geometric lattices (atom-bijection search);
// intended for lattices with <= 200 flats.
bool lattice_isomorphic(const FlatLattice& a, const FlatLattice& b);

}  // namespace matroidkl

#include "matroidkl/matroid.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

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

Matroid::Matroid(int n, std::vector<Subset> bases)
    : n_(n), bases_(std::move(bases)) {
    validate();
}

Matroid::Matroid(int n, const std::vector<std::vector<int>>& bases) : n_(n) {
    bases_.reserve(bases.size());
    for (const auto& b : bases) bases_.push_back(subset_from(b));
    validate();
}

void Matroid::validate() {
    if (n_ < 0 || n_ > 64)
        throw GroundSetTooLarge("ground set size " + std::to_string(n_));
    if (bases_.empty()) throw EmptyFamily("no bases given");
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    k_ = popcount(bases_[0]);
    for (Subset b : bases_) {
        if (!is_subset(b, full_set(n_)))
            throw BadParameters("basis " + set_str(b) +
                                " exceeds ground set of size " +
                                std::to_string(n_));
        if (popcount(b) != k_)
            throw MixedCardinality("bases " + set_str(bases_[0]) + " and " +
                                   set_str(b) + " differ in size");
    }
    if (n_ <= 16) {
        rank_table_.assign(std::size_t{1} << n_, 0);
        for (Subset a = 0; a < (Subset{1} << n_); ++a) {
            int best = 0;
            for (Subset b : bases_) best = std::max(best, popcount(a & b));
            rank_table_[a] = static_cast<std::uint8_t>(best);
        }
        // r(A) = max_B |A∩B| is normalized, monotone and unit-increasing by
        // construction; local submodularity then makes it a matroid rank
        // function whose bases are exactly the stored family.
        Subset all = full_set(n_);
        for (Subset a = 0; a < (Subset{1} << n_); ++a) {
            Subset rest = all & ~a;
            auto outside = elements_of(rest);
            for (size_t ei = 0; ei < outside.size(); ++ei)
                for (size_t fi = ei + 1; fi < outside.size(); ++fi) {
                    Subset ae = a | (Subset{1} << outside[ei]);
                    Subset af = a | (Subset{1} << outside[fi]);
                    if (rank_table_[ae] + rank_table_[af] <
                        rank_table_[ae | af] + rank_table_[a]) {
                        exchange_scan();  // produce the required witness
                        throw ExchangeViolation(
                            "rank function of the family is not submodular at " +
                            set_str(a) + " with elements " +
                            std::to_string(outside[ei]) + "," +
                            std::to_string(outside[fi]));
                    }
                }
        }
    } else {
        exchange_scan();
    }
}

void Matroid::exchange_scan() const {
    std::unordered_set<Subset> family(bases_.begin(), bases_.end());
    for (Subset b1 : bases_)
        for (Subset b2 : bases_) {
            if (b1 == b2) continue;
            for (int a : elements_of(b1 & ~b2)) {
                Subset base = b1 & ~(Subset{1} << a);
                bool ok = false;
                for (int b : elements_of(b2 & ~b1))
                    if (family.count(base | (Subset{1} << b))) {
                        ok = true;
                        break;
                    }
                if (!ok)
                    throw ExchangeViolation(
                        "no element of B2 repairs removing " +
                        std::to_string(a) + " from B1; B1=" + set_str(b1) +
                        " B2=" + set_str(b2));
            }
        }
}

bool Matroid::is_basis(Subset s) const {
    return std::binary_search(bases_.begin(), bases_.end(), s);
}

int Matroid::rank_of(Subset a) const {
    if (!rank_table_.empty()) return rank_table_[a];
    int best = 0;
    for (Subset b : bases_) best = std::max(best, popcount(a & b));
    return best;
}

Subset Matroid::closure(Subset a) const {
    int r = rank_of(a);
    Subset c = a;
    for (int e : elements_of(ground() & ~a))
        if (rank_of(a | (Subset{1} << e)) == r) c |= Subset{1} << e;
    return c;
}

FlatLattice Matroid::flats() const {
    FlatLattice lat;
    lat.k = k_;
    lat.top = ground();
    lat.bottom = closure(0);
    lat.by_rank.assign(k_ + 1, {});
    // closures of independent sets give every flat
    std::unordered_set<Subset> seen;
    std::vector<Subset> stack = {0};
    std::unordered_set<Subset> visited_ind = {0};
    while (!stack.empty()) {
        Subset ind = stack.back();
        stack.pop_back();
        Subset cl = closure(ind);
        if (seen.insert(cl).second) lat.by_rank[rank_of(cl)].push_back(cl);
        int sz = popcount(ind);
        if (sz == k_) continue;
        int start = ind == 0 ? 0 : 64 - std::countl_zero(ind);
        for (int e = start; e < n_; ++e) {
            Subset next = ind | (Subset{1} << e);
            if (rank_of(next) == sz + 1 && visited_ind.insert(next).second)
                stack.push_back(next);
        }
    }
    for (int r = 0; r <= k_; ++r) {
        std::sort(lat.by_rank[r].begin(), lat.by_rank[r].end());
        for (Subset f : lat.by_rank[r]) {
            lat.index.emplace(f, static_cast<int>(lat.all.size()));
            lat.all.push_back(f);
            lat.rank_of.push_back(r);
        }
    }
    return lat;
}

bool Matroid::is_circuit(Subset c) const {
    if (c == 0 || is_independent(c)) return false;
    for (int e : elements_of(c))
        if (!is_independent(c & ~(Subset{1} << e))) return false;
    return true;
}

std::vector<Subset> Matroid::circuits() const {
    std::vector<Subset> out;
    for (int sz = 1; sz <= k_ + 1 && sz <= n_; ++sz)
        for_each_ksubset(n_, sz, [&](Subset s) {
            if (is_circuit(s)) out.push_back(s);
        });
    return out;
}

Matroid Matroid::dual() const {
    std::vector<Subset> duals;
    duals.reserve(bases_.size());
    for (Subset b : bases_) duals.push_back(ground() & ~b);
    return Matroid(n_, std::move(duals));
}

Matroid Matroid::simplify() const {
    std::vector<int> reps;
    Subset covered = loops();
    for (int e = 0; e < n_; ++e) {
        if (contains(covered, e)) continue;
        reps.push_back(e);
        covered |= closure(Subset{1} << e);
    }
    // relabel rep elements to 0..|reps|-1
    std::vector<Subset> new_bases;
    for_each_ksubset(static_cast<int>(reps.size()), k_, [&](Subset packed) {
        Subset s = 0;
        for (int i : elements_of(packed)) s |= Subset{1} << reps[i];
        if (rank_of(s) == k_) new_bases.push_back(packed);
    });
    return Matroid(static_cast<int>(reps.size()), std::move(new_bases));
}

Matroid Matroid::localization(Subset flat) const {
    if (!is_flat(flat)) throw NotAFlat(set_str(flat) + " is not a flat");
    std::vector<int> elems = elements_of(flat);
    int kf = rank_of(flat);
    std::vector<Subset> new_bases;
    for_each_ksubset(static_cast<int>(elems.size()), kf, [&](Subset packed) {
        Subset s = 0;
        for (int i : elements_of(packed)) s |= Subset{1} << elems[i];
        if (rank_of(s) == kf) new_bases.push_back(packed);
    });
    return Matroid(static_cast<int>(elems.size()), std::move(new_bases));
}

Matroid Matroid::contraction(Subset flat) const {
    if (!is_flat(flat)) throw NotAFlat(set_str(flat) + " is not a flat");
    std::vector<int> elems = elements_of(ground() & ~flat);
    int kf = rank_of(flat);
    std::vector<Subset> new_bases;
    for_each_ksubset(static_cast<int>(elems.size()), k_ - kf,
                     [&](Subset packed) {
                         Subset s = 0;
                         for (int i : elements_of(packed))
                             s |= Subset{1} << elems[i];
                         if (rank_of(s | flat) == k_) new_bases.push_back(packed);
                     });
    return Matroid(static_cast<int>(elems.size()), std::move(new_bases));
}

Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
    std::vector<Subset> bases;
    bases.reserve(m1.bases().size() * m2.bases().size());
    for (Subset b1 : m1.bases())
        for (Subset b2 : m2.bases()) bases.push_back(b1 | (b2 << m1.n()));
    return Matroid(m1.n() + m2.n(), std::move(bases));
}

bool is_paving(const Matroid& m) {
    // paving <=> every (k-1)-subset independent <=> no circuit smaller than k
    bool ok = true;
    if (m.rank() == 0) return true;
    for_each_ksubset(m.n(), m.rank() - 1, [&](Subset s) {
        if (!m.is_independent(s)) ok = false;
    });
    return ok;
}

bool is_sparse_paving(const Matroid& m) {
    return is_paving(m) && is_paving(m.dual());
}

bool is_connected(const Matroid& m) {
    if (m.n() <= 1) return true;
    // connected <=> no proper separator A with rk(A) + rk(E\A) = rk(E)
    Subset all = full_set(m.n());
    for (Subset a = 1; a < all; ++a) {
        if (!contains(a, 0)) continue;  // fix element 0 on one side
        if (m.rank_of(a) + m.rank_of(all & ~a) == m.rank()) return false;
    }
    return true;
}

namespace {

// atom-set encoding of a lattice: for each flat, the mask of atoms below it
struct AtomView {
    std::vector<Subset> atoms;
    std::vector<std::vector<Subset>> flats_by_rank;  // as atom masks
    std::vector<std::unordered_set<Subset>> sets_by_rank;
    // join structure of atom pairs: atom mask of closure(atom_i, atom_j)
    std::vector<std::vector<Subset>> pair_join;
};

AtomView atom_view(const FlatLattice& l) {
    AtomView v;
    v.atoms = l.k >= 1 ? l.by_rank[1] : std::vector<Subset>{};
    int na = static_cast<int>(v.atoms.size());
    v.flats_by_rank.assign(l.k + 1, {});
    v.sets_by_rank.assign(l.k + 1, {});
    for (size_t i = 0; i < l.all.size(); ++i) {
        Subset am = 0;
        for (int a = 0; a < na; ++a)
            if (is_subset(v.atoms[a], l.all[i])) am |= Subset{1} << a;
        v.flats_by_rank[l.rank_of[i]].push_back(am);
        v.sets_by_rank[l.rank_of[i]].insert(am);
    }
    v.pair_join.assign(na, std::vector<Subset>(na, 0));
    if (l.k >= 2)
        for (int i = 0; i < na; ++i)
            for (int j = i + 1; j < na; ++j) {
                Subset pair = (Subset{1} << i) | (Subset{1} << j);
                Subset best = 0;
                for (int r = 2; r <= l.k && best == 0; ++r)
                    for (Subset f : v.flats_by_rank[r])
                        if (is_subset(pair, f)) {
                            best = f;
                            break;
                        }
                v.pair_join[i][j] = v.pair_join[j][i] = best;
            }
    return v;
}

bool extend_bijection(const AtomView& a, const AtomView& b, std::vector<int>& map,
                      std::vector<bool>& used, size_t next) {
    size_t na = a.atoms.size();
    if (next == na) {
        // full verification: every flat maps onto a flat of equal rank
        for (size_t r = 0; r < a.flats_by_rank.size(); ++r)
            for (Subset f : a.flats_by_rank[r]) {
                Subset img = 0;
                for (int i : elements_of(f)) img |= Subset{1} << map[i];
                if (!b.sets_by_rank[r].count(img)) return false;
            }
        return true;
    }
    for (size_t cand = 0; cand < na; ++cand) {
        if (used[cand]) continue;
        map[next] = static_cast<int>(cand);
        bool ok = true;
        // prune on the pairwise join structure (line sizes must agree)
        for (size_t prev = 0; prev < next && ok; ++prev) {
            Subset ja = a.pair_join[next][prev];
            Subset jb = b.pair_join[cand][map[prev]];
            if (popcount(ja) != popcount(jb)) ok = false;
        }
        if (ok) {
            used[cand] = true;
            if (extend_bijection(a, b, map, used, next + 1)) return true;
            used[cand] = false;
        }
    }
    map[next] = -1;
    return false;
}

}  // namespace

bool lattice_isomorphic(const FlatLattice& la, const FlatLattice& lb) {
    if (la.k != lb.k) return false;
    for (int r = 0; r <= la.k; ++r)
        if (la.by_rank[r].size() != lb.by_rank[r].size()) return false;
    AtomView a = atom_view(la), b = atom_view(lb);
    if (a.atoms.size() != b.atoms.size()) return false;
    std::vector<int> map(a.atoms.size(), -1);
    std::vector<bool> used(a.atoms.size(), false);
    return extend_bijection(a, b, map, used, 0);
}

}  // namespace matroidkl

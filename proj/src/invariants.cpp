#include "matroidkl/invariants.hpp"

#include <map>
#include <string>
#include <utility>

#include "matroidkl/errors.hpp"

namespace matroidkl {

BiPoly tutte(const Matroid& m, int cap) {
    if (m.n() > cap)
        throw GroundSetTooLarge("tutte subset sum needs n <= " +
                                std::to_string(cap) + ", got " +
                                std::to_string(m.n()));
    int k = m.rank();
    // tally subsets by (corank, nullity) before expanding the binomials
    std::map<std::pair<int, int>, Int> counts;
    Subset limit = m.n() == 0 ? 1 : Subset{1} << m.n();
    for (Subset a = 0; a < limit; ++a) {
        int r = m.rank_of(a);
        counts[{k - r, popcount(a) - r}] += 1;
    }
    BiPoly t;
    std::map<int, BiPoly> xpow, ypow;  // (x-1)^a, (y-1)^b
    auto power = [](std::map<int, BiPoly>& memo, int e, bool in_x) -> BiPoly& {
        auto it = memo.find(e);
        if (it != memo.end()) return it->second;
        BiPoly p = BiPoly::constant(1);
        BiPoly base = in_x ? BiPoly::monomial(1, 1, 0) - BiPoly::constant(1)
                           : BiPoly::monomial(1, 0, 1) - BiPoly::constant(1);
        for (int i = 0; i < e; ++i) p = p * base;
        return memo.emplace(e, std::move(p)).first->second;
    };
    for (const auto& [key, cnt] : counts) {
        BiPoly term = power(xpow, key.first, true) * power(ypow, key.second, false);
        std::vector<std::vector<Int>> scaled = term.coeffs();
        for (auto& row : scaled)
            for (auto& v : row) v *= cnt;
        t = t + BiPoly(std::move(scaled));
    }
    return t;
}

Int beta(const Matroid& m) { return tutte(m).coeff(1, 0); }

namespace {

// Möbius row: mu[(F, G)] for all G >= F, given the up-set of F listed in
// rank-ascending order starting with F itself.
std::vector<Int> mobius_row(const FlatLattice& lat, const std::vector<int>& up) {
    std::vector<Int> mu(up.size());
    mu[0] = 1;
    for (size_t t = 1; t < up.size(); ++t) {
        Int s = 0;
        for (size_t u = 0; u < t; ++u)
            if (is_subset(lat.all[up[u]], lat.all[up[t]])) s += mu[u];
        mu[t] = -s;
    }
    return mu;
}

IntPoly chi_from_lattice(const FlatLattice& lat) {
    std::vector<int> up(lat.all.size());
    for (size_t i = 0; i < up.size(); ++i) up[i] = static_cast<int>(i);
    std::vector<Int> mu = mobius_row(lat, up);
    IntPoly chi;
    for (size_t i = 0; i < up.size(); ++i)
        chi = chi + IntPoly::monomial(mu[i], lat.k - lat.rank_of[i]);
    return chi;
}

}  // namespace

IntPoly characteristic(const Matroid& m) {
    BiPoly t = tutte(m);
    // chi = (-1)^k sum_i [x^i y^0]T (1-t)^i
    IntPoly one_minus_t(std::vector<Int>{1, -1});
    IntPoly chi_tutte;
    IntPoly pw = IntPoly::constant(1);
    for (int i = 0; i < static_cast<int>(t.coeffs().size()); ++i) {
        chi_tutte = chi_tutte + pw.scale(t.coeff(i, 0));
        pw = pw * one_minus_t;
    }
    if (m.rank() % 2) chi_tutte = -chi_tutte;
    IntPoly chi_mobius;  // zero when loops exist (standard convention)
    if (m.loops() == 0) chi_mobius = chi_from_lattice(m.flats());
    if (chi_tutte != chi_mobius)
        throw FatalInconsistency("characteristic polynomial routes disagree: " +
                                 chi_tutte.text() + " vs " + chi_mobius.text());
    return chi_tutte;
}

KLCache::KLCache(const Matroid& m) : m_(m), lat_(m.flats()) {
    loopless_ = lat_.bottom == 0;
    compute_pz();
}

void KLCache::compute_pz() {
    int n_flats = static_cast<int>(lat_.all.size());
    int k = lat_.k;
    p_contr_.assign(n_flats, IntPoly{});
    z_contr_.assign(n_flats, IntPoly{});
    for (int idx = n_flats - 1; idx >= 0; --idx) {
        Subset f = lat_.all[idx];
        int rf = lat_.rank_of[idx];
        int kf = k - rf;
        if (kf == 0) {
            p_contr_[idx] = IntPoly::constant(1);
            z_contr_[idx] = IntPoly::constant(1);
            continue;
        }
        std::vector<int> up;
        for (int j = idx; j < n_flats; ++j)
            if (is_subset(f, lat_.all[j])) up.push_back(j);
        std::vector<Int> mu = mobius_row(lat_, up);
        // Thm 2.5 rearranged over the interval [F, top]:
        //   t^{kf} P_{M_F}(1/t) - P_{M_F}(t) = Y + sum_{G > F} mu(F,G) Z_{M_G}
        // with Y = sum_{F' > F} t^{rk F' - rk F} P_{M_{F'}}.
        IntPoly r;
        for (size_t u = 1; u < up.size(); ++u) {
            int j = up[u];
            r = r + p_contr_[j].shift(lat_.rank_of[j] - rf);
            if (mu[u] != 0) r = r + z_contr_[j].scale(mu[u]);
        }
        IntPoly y;
        for (size_t u = 1; u < up.size(); ++u)
            y = y + p_contr_[up[u]].shift(lat_.rank_of[up[u]] - rf);
        // degree bound deg P < kf/2 pins the coefficients to the top half
        std::vector<Int> pc((kf - 1) / 2 + 1, Int(0));
        for (int i = 0; i <= (kf - 1) / 2; ++i) pc[i] = r.coeff(kf - i);
        IntPoly p(std::move(pc));
        if (p.reverse(kf) - p != r)
            throw FatalInconsistency(
                "P recursion identity failed at a flat of rank " +
                std::to_string(rf));
        p_contr_[idx] = p;
        z_contr_[idx] = y + p;
    }
}

void KLCache::compute_q() const {
    if (q_done_) return;
    int n_flats = static_cast<int>(lat_.all.size());
    q_loc_.assign(n_flats, IntPoly{});
    q_v_.assign(n_flats, IntPoly{});
    for (int idx = 0; idx < n_flats; ++idx) {
        int rf = lat_.rank_of[idx];
        Subset f = lat_.all[idx];
        if (rf == 0) {
            // localization at the bottom: empty matroid if loopless, a
            // rank-0 nonempty matroid (Q = 0) otherwise
            q_loc_[idx] = loopless_ ? IntPoly::constant(1) : IntPoly{};
            q_v_[idx] = q_loc_[idx];
            continue;
        }
        std::vector<int> down;
        for (int j = 0; j <= idx; ++j)
            if (is_subset(lat_.all[j], f)) down.push_back(j);
        // Möbius column mu(F', F) via the dual recursion
        std::vector<Int> mu(down.size());
        mu[down.size() - 1] = 1;
        for (int s = static_cast<int>(down.size()) - 2; s >= 0; --s) {
            Int acc = 0;
            for (size_t u = s + 1; u < down.size(); ++u)
                if (is_subset(lat_.all[down[s]], lat_.all[down[u]]))
                    acc += mu[u];
            mu[s] = -acc;
        }
        // Thm 2.6 rearranged: t^r Q(1/t) - Q = (-1)^r (sum_{G < F} V_G + V_F')
        // where V_F' is V_F minus its unknown (-1)^r Q term.
        IntPoly r_known;
        for (size_t s = 0; s + 1 < down.size(); ++s) {
            int j = down[s];
            r_known = r_known + q_v_[j];
            if (mu[s] != 0) {
                IntPoly term =
                    q_loc_[j].shift(rf - lat_.rank_of[j]).scale(mu[s]);
                if (lat_.rank_of[j] % 2) term = -term;
                r_known = r_known + term;
            }
        }
        IntPoly rhs = rf % 2 ? -r_known : r_known;
        std::vector<Int> qc((rf - 1) / 2 + 1, Int(0));
        for (int i = 0; i <= (rf - 1) / 2; ++i) qc[i] = rhs.coeff(rf - i);
        IntPoly q(std::move(qc));
        if (q.reverse(rf) - q != rhs)
            throw FatalInconsistency(
                "Q recursion identity failed at a flat of rank " +
                std::to_string(rf));
        q_loc_[idx] = q;
        // finalize V_F: add back mu(F,F) (-1)^{rk F} Q_{M^F} and the partial sums
        IntPoly vf;
        for (size_t s = 0; s + 1 < down.size(); ++s) {
            int j = down[s];
            if (mu[s] == 0) continue;
            IntPoly term = q_loc_[j].shift(rf - lat_.rank_of[j]).scale(mu[s]);
            if (lat_.rank_of[j] % 2) term = -term;
            vf = vf + term;
        }
        q_v_[idx] = vf + (rf % 2 ? -q : q);
    }
    q_done_ = true;
}

const IntPoly& KLCache::P() const {
    return loopless_ ? p_contr_[0] : zero_;
}

const IntPoly& KLCache::Z() const { return z_contr_[0]; }

const IntPoly& KLCache::Q() const {
    if (!loopless_) return zero_;
    compute_q();
    return q_loc_.back();
}

GammaVector KLCache::gamma() const { return gamma_expand(Z(), lat_.k); }

const IntPoly& KLCache::P_contraction(Subset flat) const {
    int idx = lat_.index_of(flat);
    if (idx < 0) throw NotAFlat("P_contraction key is not a flat");
    return p_contr_[idx];
}

const IntPoly& KLCache::Q_localization(Subset flat) const {
    int idx = lat_.index_of(flat);
    if (idx < 0) throw NotAFlat("Q_localization key is not a flat");
    compute_q();
    return q_loc_[idx];
}

namespace {

void check_kl_sanity(const char* name, const IntPoly& f, int k, bool top_half) {
    if (!nonnegative_coeffs(f))
        throw FatalInconsistency(std::string(name) +
                                 " has a negative coefficient: " + f.text());
    if (top_half && k > 0 && 2 * f.degree() >= k)
        throw FatalInconsistency(std::string(name) + " degree bound violated: " +
                                 f.text());
}

}  // namespace

IntPoly kl_P(const Matroid& m) {
    KLCache c(m);
    IntPoly p = c.P();
    check_kl_sanity("P", p, m.rank(), true);
    return p;
}

IntPoly kl_Q(const Matroid& m) {
    KLCache c(m);
    IntPoly q = c.Q();
    check_kl_sanity("Q", q, m.rank(), true);
    return q;
}

IntPoly kl_Z(const Matroid& m) {
    KLCache c(m);
    IntPoly z = c.Z();
    check_kl_sanity("Z", z, m.rank(), false);
    if (!is_palindromic(z, m.rank()))
        throw FatalInconsistency("Z not palindromic: " + z.text());
    if (!is_unimodal(z))
        throw FatalInconsistency("Z not unimodal: " + z.text());
    return z;
}

GammaVector gamma(const Matroid& m) {
    return gamma_expand(kl_Z(m), m.rank());
}

}  // namespace matroidkl

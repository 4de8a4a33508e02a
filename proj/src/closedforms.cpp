#include "matroidkl/closedforms.hpp"

#include <string>

#include "matroidkl/errors.hpp"
#include "matroidkl/relaxation.hpp"
#include "matroidkl/tableaux.hpp"

namespace matroidkl {

namespace {

void need(bool cond, const std::string& msg) {
    if (!cond) throw BadParameters(msg);
}

void consistent(bool cond, const std::string& msg) {
    if (!cond) throw FatalInconsistency(msg);
}

}  // namespace

IntPoly gamma_poly(const GammaVector& g) {
    return IntPoly(std::vector<Int>(g.gammas.begin(), g.gammas.end()));
}

IntPoly p_uniform(int k, int n) {
    need(0 <= k && k <= n, "p_uniform needs 0 <= k <= n");
    if (k == 0) return n == 0 ? IntPoly::constant(1) : IntPoly{};
    std::vector<Int> c((k - 1) / 2 + 1, Int(0));
    for (int i = 0; i <= (k - 1) / 2; ++i)
        c[i] = skyt_count(n - k + 1, i, k - 2 * i + 1);
    return IntPoly(std::move(c));
}

IntPoly q_uniform(int k, int n) {
    need(0 <= k && k <= n, "q_uniform needs 0 <= k <= n");
    if (k == 0) return n == 0 ? IntPoly::constant(1) : IntPoly{};
    std::vector<Int> c((k - 1) / 2 + 1, Int(0));
    for (int i = 0; i <= (k - 1) / 2; ++i)
        c[i] = syt_count(n - k + 1, i, k - 2 * i - 1);
    return IntPoly(std::move(c));
}

IntPoly z_uniform(int k, int n) {
    need(0 <= k && k <= n, "z_uniform needs 0 <= k <= n");
    if (k == 0) return IntPoly::constant(1);
    IntPoly z = IntPoly::monomial(1, k);
    for (int j = 0; j <= k - 1; ++j)
        for (int i = 0; i <= (k - j) / 2; ++i) {
            Int v = binomial(n, j) * skyt_count(n - k + 1, i, k - j - 2 * i + 1);
            if (v != 0) z = z + IntPoly::monomial(v, i + j);
        }
    return z;
}

GammaVector gamma_uniform(int k, int n) {
    need(1 <= k && k <= n, "gamma_uniform needs 1 <= k <= n");
    GammaVector g;
    g.d = k;
    g.gammas.assign(k / 2 + 1, Int(0));
    g.gammas[0] = 1;
    for (int i = 1; i <= k / 2; ++i) {
        Int sum = 0;
        for (int j = i; j <= k - 1; ++j)
            sum += Int(k - j) * binomial(j - 1, i - 1) *
                   binomial(n - k + j - 1, j);
        Int num = binomial(k - i, i) * sum;
        consistent(num % (k - i) == 0,
                   "Eq (5.4) prefactor does not divide exactly");
        g.gammas[i] = num / (k - i);
    }
    return g;
}

IntPoly p_kh(int k, int h) {
    need(1 <= k && k <= h, "p_kh needs 1 <= k <= h");
    IntPoly diff = p_uniform(k, h + 1) - p_uniform(k - 1, h);
    IntPoly tab;
    if (k == 1) {
        tab = IntPoly::constant(1);  // Thm 4.1 proof; the bskyt sum misses k=1
    } else {
        std::vector<Int> c((k - 1) / 2 + 1, Int(0));
        for (int i = 0; i <= (k - 1) / 2; ++i)
            c[i] = bskyt_count(h - k + 2, i, k - 2 * i + 1);
        tab = IntPoly(std::move(c));
    }
    consistent(diff == tab, "p_kh routes disagree at k=" + std::to_string(k) +
                                " h=" + std::to_string(h));
    consistent(nonnegative_coeffs(diff), "p_kh negative coefficient");
    return diff;
}

IntPoly q_kh(int k, int h) {
    need(1 <= k && k <= h, "q_kh needs 1 <= k <= h");
    IntPoly diff = q_uniform(k, h + 1) - q_uniform(k - 1, h);
    std::vector<Int> c((k - 1) / 2 + 1, Int(0));
    for (int i = 0; i <= (k - 1) / 2; ++i)
        c[i] = bsyt_count(h - k + 2, i, k - 2 * i - 1);
    IntPoly tab(std::move(c));
    consistent(diff == tab, "q_kh routes disagree at k=" + std::to_string(k) +
                                " h=" + std::to_string(h));
    consistent(nonnegative_coeffs(diff), "q_kh negative coefficient");
    return diff;
}

IntPoly z_kh(int k, int h) {
    need(1 <= k && k <= h, "z_kh needs 1 <= k <= h");
    IntPoly one_plus_t(std::vector<Int>{1, 1});
    IntPoly diff = z_uniform(k, h + 1) - one_plus_t * z_uniform(k - 1, h);
    IntPoly tab = IntPoly::monomial(binomial(h, k - 1) - 1, k - 1);
    for (int j = 0; j <= k - 2; ++j)
        for (int i = 1; i <= (k - j) / 2; ++i) {
            Int v = binomial(h, j) * bskyt_count(h - k + 2, i, k - j - 2 * i + 1);
            if (v != 0) tab = tab + IntPoly::monomial(v, i + j);
        }
    consistent(diff == tab, "z_kh routes disagree at k=" + std::to_string(k) +
                                " h=" + std::to_string(h));
    consistent(nonnegative_coeffs(diff), "z_kh negative coefficient");
    return diff;
}

IntPoly g_kh(int k, int h) {
    need(1 <= k && k <= h, "g_kh needs 1 <= k <= h");
    IntPoly diff;
    if (k == 1) {
        diff = IntPoly{};  // gamma(U_{1,h+1}) = gamma(U_{0,h}) = (1)
    } else {
        diff = gamma_poly(gamma_uniform(k, h + 1)) -
               gamma_poly(gamma_uniform(k - 1, h));
    }
    // second route: z_kh is palindromic for d = k, and its gamma vector is g
    GammaVector via_z = gamma_expand(z_kh(k, h), k);
    consistent(diff == gamma_poly(via_z),
               "g_kh routes disagree at k=" + std::to_string(k) +
                   " h=" + std::to_string(h));
    consistent(nonnegative_coeffs(diff), "g_kh negative coefficient");
    return diff;
}

namespace {

void check_profile(const PavingProfile& prof) {
    if (prof.k < 1 || prof.k > prof.n)
        throw BadProfile("need 1 <= k <= n in profile");
    for (const auto& [h, lam] : prof.lambda) {
        if (lam < 0) throw BadProfile("negative multiplicity");
        if (h < prof.k || h > prof.n)
            throw BadProfile("hyperplane size h=" + std::to_string(h) +
                             " out of range for k=" + std::to_string(prof.k));
    }
}

template <class F>
IntPoly paving_combine(const PavingProfile& prof, F&& uniform_part,
                       IntPoly (*delta)(int, int)) {
    check_profile(prof);
    IntPoly out = uniform_part(prof.k, prof.n);
    for (const auto& [h, lam] : prof.lambda)
        if (lam > 0) out = out - delta(prof.k, h).scale(lam);
    return out;
}

}  // namespace

IntPoly paving_P(const PavingProfile& prof) {
    return paving_combine(prof, p_uniform, p_kh);
}
IntPoly paving_Q(const PavingProfile& prof) {
    return paving_combine(prof, q_uniform, q_kh);
}
IntPoly paving_Z(const PavingProfile& prof) {
    return paving_combine(prof, z_uniform, z_kh);
}

GammaVector paving_gamma(const PavingProfile& prof) {
    check_profile(prof);
    GammaVector g = gamma_uniform(prof.k, prof.n);
    for (const auto& [h, lam] : prof.lambda) {
        if (lam == 0) continue;
        IntPoly d = g_kh(prof.k, h).scale(lam);
        for (int i = 0; i < static_cast<int>(g.gammas.size()); ++i)
            g.gammas[i] -= d.coeff(i);
    }
    return g;
}

IntPoly thagomizer_P(int n) {
    need(n >= 1, "thagomizer_P needs n >= 1");
    IntPoly sum;
    for (int k = 1; k <= n; ++k)
        sum = sum + p_uniform(k - 1, k).scale(binomial(n, k));
    return IntPoly::constant(1) + sum.shift(1);
}

GammaVector thagomizer_gamma(int n) {
    need(n >= 1, "thagomizer_gamma needs n >= 1");
    GammaVector g;
    g.d = n + 1;  // rank of T_n
    g.gammas.assign((n + 1) / 2 + 1, Int(0));
    g.gammas[0] = 1;
    for (int k = 1; k <= n; ++k) {
        // gamma of U_{k-1,k}; for k = 1 this is gamma(Z_{U_{0,1}}) = (1)
        std::vector<Int> inner = {Int(1)};
        if (k >= 2) inner = gamma_uniform(k - 1, k).gammas;
        for (size_t i = 0; i < inner.size(); ++i)
            if (i + 1 < g.gammas.size())
                g.gammas[i + 1] += binomial(n, k) * inner[i];
            else
                consistent(inner[i] == 0, "thagomizer gamma overflowed d/2");
    }
    return g;
}

bool domination_check(const PavingProfile& prof) {
    return coeffwise_leq(paving_P(prof), p_uniform(prof.k, prof.n)) &&
           coeffwise_leq(paving_Q(prof), q_uniform(prof.k, prof.n)) &&
           coeffwise_leq(paving_Z(prof), z_uniform(prof.k, prof.n));
}

PavingProfile profile_from_matroid(const Matroid& m) {
    if (!is_paving(m)) throw NotPaving("profile needs a paving matroid");
    PavingProfile prof;
    prof.k = m.rank();
    prof.n = m.n();
    for (Subset h : stressed_hyperplanes(m)) {
        int sz = popcount(h);
        if (sz >= prof.k) prof.lambda[sz] += 1;
    }
    return prof;
}

}  // namespace matroidkl

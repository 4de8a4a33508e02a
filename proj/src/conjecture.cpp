#include "matroidkl/conjecture.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "matroidkl/closedforms.hpp"
#include "matroidkl/errors.hpp"
#include "matroidkl/invariants.hpp"
#include "matroidkl/poly.hpp"
#include "matroidkl/relaxation.hpp"
#include "matroidkl/tableaux.hpp"

#include "json.hpp"

namespace matroidkl {

int Report::failures() const {
    int n = 0;
    for (const auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

std::string check_json(const CheckResult& c) {
    nlohmann::json j;
    j["check"] = c.check;
    j["params"] = c.params;
    j["verdict"] = c.pass ? "pass" : "fail";
    if (!c.witness.empty()) j["witness"] = c.witness;
    return j.dump();
}

std::string report_json_lines(const Report& r) {
    std::string out;
    for (const auto& c : r.checks) {
        out += check_json(c);
        out += '\n';
    }
    return out;
}

int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("MATROID_KL_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
    }
    return hw;
}

Int lambda_bound(int k, int n) {
    if (k < 1 || k > n - 1)
        throw BadParameters("lambda_bound needs 1 <= k <= n-1");
    int c = std::max(k, n - k) + 1;  // c_{k,n}
    return binomial(n, k) / c;
}

SparsePavingSpec random_sparse_paving_spec(int k, int n, const Int& target_lambda,
                                           std::uint64_t seed) {
    if (k < 2 || k > n - 2)
        throw BadParameters("random_sparse_paving needs 2 <= k <= n-2");
    if (n > 20) throw GroundSetTooLarge("random_sparse_paving caps n at 20");
    if (target_lambda < 0 || target_lambda > lambda_bound(k, n))
        throw BadParameters("target_lambda outside [0, lambda_bound]");
    std::vector<Subset> pool;
    for_each_ksubset(n, k, [&](Subset s) { pool.push_back(s); });
    std::mt19937_64 gen(seed);
    for (size_t i = pool.size() - 1; i > 0; --i) {
        size_t j = static_cast<size_t>(gen() % (i + 1));
        std::swap(pool[i], pool[j]);
    }
    SparsePavingSpec spec;
    spec.k = k;
    spec.n = n;
    spec.seed = seed;
    for (Subset s : pool) {
        if (Int(static_cast<long>(spec.circuit_hyperplanes.size())) >=
            target_lambda)
            break;
        bool ok = true;
        for (Subset c : spec.circuit_hyperplanes)
            if (popcount(s & c) > k - 2) {
                ok = false;
                break;
            }
        if (ok) spec.circuit_hyperplanes.push_back(s);
    }
    return spec;
}

Matroid matroid_from_spec(const SparsePavingSpec& spec) {
    std::vector<Subset> removed = spec.circuit_hyperplanes;
    std::sort(removed.begin(), removed.end());
    std::vector<Subset> bases;
    for_each_ksubset(spec.n, spec.k, [&](Subset s) {
        if (!std::binary_search(removed.begin(), removed.end(), s))
            bases.push_back(s);
    });
    return Matroid(spec.n, std::move(bases));
}

Matroid random_sparse_paving(int k, int n, const Int& target_lambda,
                             std::uint64_t seed) {
    return matroid_from_spec(random_sparse_paving_spec(k, n, target_lambda, seed));
}

namespace {

std::string matroid_json_text(const Matroid& m) {
    nlohmann::json j;
    j["n"] = m.n();
    auto& arr = j["bases"] = nlohmann::json::array();
    for (Subset b : m.bases()) arr.push_back(elements_of(b));
    return j.dump();
}

std::string set_text(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int e : elements_of(s)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

// run f(i) for i in [0, count) over capped worker threads
template <class F>
void parallel_for(int count, F&& f) {
    int workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                    f(i);
            } catch (...) {
                errs[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

}  // namespace

Report gamma_positivity_sweep(
    const std::vector<std::pair<std::string, Matroid>>& corpus) {
    Report rep;
    rep.checks.resize(corpus.size());
    parallel_for(static_cast<int>(corpus.size()), [&](int i) {
        const auto& [name, m] = corpus[i];
        CheckResult c;
        c.check = "gamma-positivity";
        c.params["matroid"] = name;
        c.params["k"] = std::to_string(m.rank());
        c.params["n"] = std::to_string(m.n());
        try {
            IntPoly z = kl_Z(m);  // asserts palindromic + unimodal internally
            GammaVector g = gamma_expand(z, m.rank());
            c.pass = is_gamma_positive(g);
            if (!c.pass) {
                c.witness = "Z = " + z.text() + "; gamma = " +
                            gamma_poly(g).text() +
                            "; matroid = " + matroid_json_text(m);
            }
        } catch (const std::exception& e) {
            c.pass = false;
            c.witness = std::string(e.what()) +
                        "; matroid = " + matroid_json_text(m);
        }
        rep.checks[i] = c;
    });
    return rep;
}

namespace {

Rat rat(const Int& num, const Int& den) { return Rat(num, den); }

struct StatementTally {
    std::string name;
    long cases = 0;
    std::string first_fail;

    void record(bool ok, const std::string& where) {
        ++cases;
        if (!ok && first_fail.empty()) first_fail = where;
    }

    CheckResult result(int n_max) const {
        CheckResult c;
        c.check = name;
        c.params["n_max"] = std::to_string(n_max);
        c.params["cases"] = std::to_string(cases);
        c.pass = first_fail.empty();
        c.witness = first_fail;
        return c;
    }
};

std::string ikn(int i, int k, int n) {
    return "i=" + std::to_string(i) + " k=" + std::to_string(k) +
           " n=" + std::to_string(n);
}

}  // namespace

Report verify_appendix(int n_max) {
    if (n_max < 3) throw BadParameters("verify_appendix needs n_max >= 3");
    StatementTally a1a{"appendix-A1a"}, a1b{"appendix-A1b"}, a1c{"appendix-A1c"},
        a2{"appendix-A2-identity"}, a3{"appendix-A3-identity"},
        a4{"appendix-A4-lower-bound"}, a5{"appendix-A5-inequality"},
        a6{"appendix-A6-key-i-ge-2"}, a7{"appendix-A7-key-i-eq-1"},
        alt{"alternating-binomial-identity"};

    for (int n = 3; n <= n_max; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            Int c = std::max(k, n - k) + 1;  // c_{k,n}

            // (n/(k c) + (n-k)/(n-k+1))(k-1) <= k - k/C(n-1,k-1)
            {
                Rat lhs = (rat(n, Int(k) * c) + rat(n - k, n - k + 1)) * (k - 1);
                Rat rhs = Rat(k) - rat(k, binomial(n - 1, k - 1));
                a1a.record(lhs <= rhs, ikn(0, k, n));
            }
            if (k >= 2) {
                Rat rhs = rat(Int(k) * (n - 2) * (n - k), Int(k - 1) * (n - 1));
                if (n >= 7) {
                    // n(n-k+2)/(2kc) + (n-k)(1 - 2/(2n-k)) <= rhs
                    Rat lhs = rat(Int(n) * (n - k + 2), 2 * Int(k) * c) +
                              Rat(n - k) * (Rat(1) - rat(2, 2 * n - k));
                    a1b.record(lhs <= rhs, ikn(0, k, n));
                }
                if (n >= 15) {
                    Rat lhs = rat(2 * Int(n) * (n - k + 1), 3 * Int(k) * c) +
                              rat(Int(n - k) * (n - k + 1), n - k + 2);
                    a1c.record(lhs <= rhs, ikn(0, k, n));
                }
            }

            for (int i = 1; i <= k; ++i) {
                Int s1 = 0, s2 = 0, s3 = 0;  // the three binomial sums
                for (int j = i; j <= k - 1; ++j) {
                    Int t = binomial(j - 1, i - 1);
                    s1 += Int(j) * t * binomial(n - k + j - 1, j);
                    s2 += t * binomial(n - k + j - 2, j - 1);
                    s3 += t * binomial(n - k + j - 1, j);
                }
                Int bb = binomial(n - 1, k - 1) * binomial(k - 1, i);
                a2.record(Rat(s1) == rat(Int(i) * (n - k), n + i - k) * bb,
                          ikn(i, k, n));
                a3.record(Rat(s2) == rat(Int(i) * (n - k),
                                         Int(n - 1) * (n + i - k - 1)) * bb,
                          ikn(i, k, n));
                // cleared-denominator form so k = 1 stays well-defined
                a4.record(s3 * (k - 1) * (n - 1) * (n + i - k - 1) >=
                              Int(n - 2) * i * (n - k) * bb,
                          ikn(i, k, n));
            }

            // key inequality behind the i >= 2 gamma coefficients
            for (int i = 2; i <= k / 2; ++i) {
                if (i == 2 && n < 15) continue;
                Rat lhs = rat(2 * Int(n) * (n + i - k - 1),
                              Int(k) * (i + 1) * c) +
                          rat(Int(n - k) * (n + i - k - 1), n + i - k);
                Rat rhs = rat(Int(k) * (n - 2) * (n - k), Int(k - 1) * (n - 1));
                a5.record(lhs <= rhs, ikn(i, k, n));
            }
            for (int i = 2; i <= k / 2; ++i) {
                Int s = 0;
                for (int j = i; j <= k - 1; ++j)
                    s += Int(k - j) * binomial(j - 1, i - 1) *
                         binomial(n - k + j - 1, j);
                Rat lhs = rat(2 * Int(i), Int(k) * c) * binomial(n, k) *
                          binomial(k, i + 1);
                a6.record(lhs <= Rat(s), ikn(i, k, n));
            }
            {
                Int s = 0;
                for (int j = 1; j <= k - 1; ++j)
                    s += Int(k - j) * binomial(n - k + j - 1, j);
                Rat lhs = rat(2, Int(k) * c) * binomial(n, k) * binomial(k, 2);
                a7.record(lhs <= Rat(s), ikn(1, k, n));
            }
        }
    }

    // sum_{j=k}^{h} (-1)^{j-k} C(h,j) = C(h-1,k-1)
    for (int h = 1; h <= std::max(n_max, 30); ++h)
        for (int k = 1; k <= h; ++k) {
            Int s = 0;
            for (int j = k; j <= h; ++j) {
                Int t = binomial(h, j);
                s += (j - k) % 2 ? -t : t;
            }
            alt.record(s == binomial(h - 1, k - 1),
                       "k=" + std::to_string(k) + " h=" + std::to_string(h));
        }

    Report rep;
    for (const auto* t : {&a1a, &a1b, &a1c, &a2, &a3, &a4, &a5, &a6, &a7, &alt})
        rep.checks.push_back(t->result(n_max));
    return rep;
}

namespace {

CheckResult hp_check(const char* name, Subset h, bool pass,
                     const std::string& witness) {
    CheckResult c;
    c.check = name;
    c.params["hyperplane"] = set_text(h);
    c.pass = pass;
    if (!pass) c.witness = witness;
    return c;
}

}  // namespace

Report relaxation_theorem_suite(const Matroid& m) {
    Report rep;
    int k = m.rank();
    for (Subset hp : stressed_hyperplanes(m)) {
        int h = popcount(hp);
        if (h < k) continue;
        Matroid mr = relax(m, hp);

        // rank function: +1 exactly on the size->=k subsets of the hyperplane
        {
            bool ok = mr.rank() == k;
            std::string w;
            Subset limit = m.n() == 0 ? 1 : Subset{1} << m.n();
            for (Subset a = 0; ok && a < limit; ++a) {
                int expect = m.rank_of(a) +
                             ((is_subset(a, hp) && popcount(a) >= k) ? 1 : 0);
                if (mr.rank_of(a) != expect) {
                    ok = false;
                    w = "rank mismatch at A=" + set_text(a);
                }
            }
            rep.checks.push_back(hp_check("rank-delta", hp, ok, w));
        }

        // flats: L(relaxed) = (L(M) minus H) plus the (k-1)-subsets of H
        {
            std::vector<Subset> expect;
            for (Subset f : m.flats().all)
                if (f != hp) expect.push_back(f);
            for_each_ksubset_of(hp, k - 1, [&](Subset s) { expect.push_back(s); });
            std::sort(expect.begin(), expect.end());
            expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
            std::vector<Subset> got = mr.flats().all;
            std::sort(got.begin(), got.end());
            rep.checks.push_back(hp_check("flat-delta", hp, got == expect,
                                          "flat families differ"));
        }

        // Tutte: T~ = T + (x+y-xy) sum_{j=k}^{h} C(h,j)(y-1)^{j-k}
        {
            BiPoly y_minus_1 = BiPoly::monomial(1, 0, 1) - BiPoly::constant(1);
            BiPoly s, pw = BiPoly::constant(1);
            for (int j = k; j <= h; ++j) {
                BiPoly term = pw;
                std::vector<std::vector<Int>> sc = term.coeffs();
                for (auto& row : sc)
                    for (auto& v : row) v *= binomial(h, j);
                s = s + BiPoly(std::move(sc));
                pw = pw * y_minus_1;
            }
            BiPoly factor = BiPoly::monomial(1, 1, 0) + BiPoly::monomial(1, 0, 1) -
                            BiPoly::monomial(1, 1, 1);
            BiPoly expect = tutte(m) + factor * s;
            BiPoly got = tutte(mr);
            rep.checks.push_back(hp_check("tutte-delta", hp, got == expect,
                                          "got " + got.text() + " expected " +
                                              expect.text()));
        }

        // beta delta C(h-1,k-1) and connectivity of the relaxation
        {
            Int expect = beta(m) + binomial(h - 1, k - 1);
            bool ok = beta(mr) == expect && is_connected(mr);
            rep.checks.push_back(hp_check("beta-delta", hp, ok,
                                          "beta or connectivity mismatch"));
        }

        // chi~ = chi + (-1)^k (1-t) C(h-1,k-1)
        {
            IntPoly delta =
                IntPoly(std::vector<Int>{1, -1}).scale(binomial(h - 1, k - 1));
            if (k % 2) delta = -delta;
            IntPoly expect = characteristic(m) + delta;
            IntPoly got = characteristic(mr);
            rep.checks.push_back(hp_check("chi-delta", hp, got == expect,
                                          "got " + got.text() + " expected " +
                                              expect.text()));
        }

        // P/Q/Z deltas against the closed forms
        {
            KLCache cm(m), cr(mr);
            struct Row {
                const char* name;
                IntPoly got, expect;
            };
            Row rows[] = {
                {"P-delta", cr.P() - cm.P(), p_kh(k, h)},
                {"Q-delta", cr.Q() - cm.Q(), q_kh(k, h)},
                {"Z-delta", cr.Z() - cm.Z(), z_kh(k, h)},
            };
            for (const Row& r : rows)
                rep.checks.push_back(hp_check(r.name, hp, r.got == r.expect,
                                              "got " + r.got.text() +
                                                  " expected " + r.expect.text()));
        }
    }
    return rep;
}

Report verify_tableaux(int max_cells) {
    if (max_cells < 1 || max_cells > 22)
        throw BadParameters("verify_tableaux needs 1 <= max_cells <= 22");
    StatementTally skew{"skew-to-standard-expansion"},
        bskyt_diff{"bskyt-difference"}, bsyt_diff{"bsyt-difference"},
        conv{"degenerate-conventions"};

    // syt(a,i,b-2i-1) = sum_{j=1}^{b} (-1)^{j+1} C(a+b-1,b-j) skyt(a,i,j-2i+1);
    // the j = 0 term vanishes for i >= 1 and must be omitted at i = 0, where
    // the skyt(a,0,1) = 1 convention would otherwise pollute the sum
    for (int a = 1; a <= max_cells; ++a)
        for (int i = 0; 2 * i + a <= max_cells + 1; ++i)
            for (int b = 2 * i + 1; a + b - 1 <= max_cells; ++b) {
                Int rhs = 0;
                for (int j = 1; j <= b; ++j) {
                    Int t = binomial(a + b - 1, b - j) *
                            skyt_count(a, i, j - 2 * i + 1);
                    rhs += (j % 2) ? t : -t;
                }
                skew.record(syt_count(a, i, b - 2 * i - 1) == rhs,
                            "a=" + std::to_string(a) + " i=" + std::to_string(i) +
                                " b=" + std::to_string(b));
            }

    // barred counts as consecutive differences (including degenerate params;
    // the bskyt identity concerns real skew shapes, so i >= 1 there)
    for (int a = 0; a <= max_cells + 2; ++a)
        for (int i = 0; i <= max_cells / 2 + 1; ++i)
            for (int b = 0; b <= max_cells + 2; ++b) {
                std::string where = "a=" + std::to_string(a) +
                                    " i=" + std::to_string(i) +
                                    " b=" + std::to_string(b);
                if (i >= 1 && a + 2 * i + b - 2 <= max_cells)
                    bskyt_diff.record(bskyt_count(a, i, b) ==
                                          skyt_count(a, i, b) -
                                              skyt_count(a, i, b - 1),
                                      where);
                if (a + 2 * i + b <= max_cells)
                    bsyt_diff.record(bsyt_count(a, i, b) ==
                                         syt_count(a, i, b) -
                                             syt_count(a, i, b - 1),
                                     where);
            }

    // spelled-out conventions at degenerate parameters
    struct Conv {
        const char* what;
        bool ok;
    };
    Conv cases[] = {
        {"skyt i=0 is 1", skyt_count(3, 0, 5) == 1 && skyt_count(1, 0, 0) == 1},
        {"skyt a<2 is 0", skyt_count(1, 2, 3) == 0 && skyt_count(0, 1, 2) == 0},
        {"skyt b<2 is 0", skyt_count(3, 2, 1) == 0 && skyt_count(4, 1, 0) == 0},
        {"skyt negative b is 0", skyt_count(3, 1, -2) == 0},
        {"bskyt i=0 is 0", bskyt_count(3, 0, 5) == 0},
        {"syt b=0 column shape", syt_count(3, 0, 0) == 1},
        {"syt negative b is 0", syt_count(3, 1, -1) == 0},
        {"bsyt of single column", bsyt_count(3, 0, 0) == 1},
    };
    for (const Conv& c : cases) conv.record(c.ok, c.what);

    Report rep;
    for (const auto* t : {&skew, &bskyt_diff, &bsyt_diff, &conv})
        rep.checks.push_back(t->result(max_cells));
    return rep;
}

}  // namespace matroidkl

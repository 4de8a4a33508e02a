#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "matroidkl/bigint.hpp"
#include "matroidkl/matroid.hpp"

namespace matroidkl {

struct CheckResult {
    std::string check;
    std::map<std::string, std::string> params;
    bool pass = false;
    std::string witness;  // empty on pass
};

struct Report {
    std::vector<CheckResult> checks;
    int failures() const;
    bool all_pass() const { return failures() == 0; }
};

// one JSON object per check: {"check":..., "params":..., "verdict":..., "witness":...}
std::string check_json(const CheckResult& c);
std::string report_json_lines(const Report& r);

// worker cap: min(hardware threads, MATROID_KL_THREADS if set), at least 1
int worker_count();

// floor(C(n,k) * min(1/(k+1), 1/(n-k+1)))
Int lambda_bound(int k, int n);

struct SparsePavingSpec {
    int k = 0, n = 0;
    std::vector<Subset> circuit_hyperplanes;  // k-subsets, pairwise |A∩B| <= k-2
    std::uint64_t seed = 0;
};

// Greedy random selection over a Fisher-Yates-shuffled list of all k-subsets
// (mt19937_64, modulo indexing); may achieve fewer than target_lambda.
SparsePavingSpec random_sparse_paving_spec(int k, int n, const Int& target_lambda,
                                           std::uint64_t seed);
Matroid matroid_from_spec(const SparsePavingSpec& spec);
Matroid random_sparse_paving(int k, int n, const Int& target_lambda,
                             std::uint64_t seed);

// Z/gamma per matroid; parallel across entries, merged in input order.
Report gamma_positivity_sweep(const std::vector<std::pair<std::string, Matroid>>& corpus);

// Appendix lemmas A.1(a-c), identities A.2/A.3, inequality A.4, the i>=2 and
// i=1 key inequalities, plus the alternating binomial-sum identity; all in
// exact rational/integer arithmetic, one aggregated check per statement.
Report verify_appendix(int n_max);

// Per stressed hyperplane H (|H| >= rank): rank/flat/Tutte/beta/chi deltas and
// the P/Q/Z deltas against the closed forms.
Report relaxation_theorem_suite(const Matroid& m);

// Tableaux identities (skew-to-standard expansion, the two barred-count
// differences) over every shape with at most max_cells cells, plus the
// degenerate-parameter conventions.
Report verify_tableaux(int max_cells);

}  // namespace matroidkl

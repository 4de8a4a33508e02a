#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matroidkl/closedforms.hpp"
#include "matroidkl/conjecture.hpp"
#include "matroidkl/errors.hpp"
#include "matroidkl/families.hpp"
#include "matroidkl/invariants.hpp"
#include "matroidkl/json_io.hpp"
#include "matroidkl/relaxation.hpp"
#include "matroidkl/tableaux.hpp"

using namespace matroidkl;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;    // parse / validation failure
constexpr int kExitSizeCap = 2;  // size-cap breach
constexpr int kExitFailed = 3;   // failed verification / inconsistency

struct SourceOpts {
    std::string file;
    std::string inline_json;
    std::string family;
    int k = -1, n = -1, h = -1, r = -1, q = -1;
};

void add_source_opts(CLI::App* cmd, SourceOpts& src) {
    // --h is a spec'd parameter name, so drop the default -h help alias here
    cmd->set_help_flag("--help", "print help and exit");
    cmd->add_option("--file", src.file, "matroid or graph JSON file");
    cmd->add_option("--inline", src.inline_json, "matroid or graph JSON text");
    cmd->add_option("--family", src.family,
                    "uniform | boolean | v | thagomizer | k2n | fan | wheel | "
                    "whirl | pg");
    cmd->add_option("--k", src.k, "rank parameter");
    cmd->add_option("--n", src.n, "size parameter");
    cmd->add_option("--h", src.h, "hyperplane-size parameter (family v)");
    cmd->add_option("--r", src.r, "projective dimension (family pg)");
    cmd->add_option("--q", src.q, "field order (family pg)");
}

int need_param(int v, const char* name) {
    if (v < 0) throw BadParameters(std::string("family needs --") + name);
    return v;
}

Matroid load_matroid(const SourceOpts& src) {
    int given = (!src.file.empty()) + (!src.inline_json.empty()) +
                (!src.family.empty());
    if (given != 1)
        throw BadParameters("give exactly one of --file, --inline, --family");
    if (!src.file.empty()) return matroid_from_file(src.file);
    if (!src.inline_json.empty()) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(src.inline_json);
        } catch (const nlohmann::json::exception& e) {
            throw BadParameters(std::string("invalid inline JSON: ") + e.what());
        }
        return matroid_from_input_json(j);
    }
    const std::string& f = src.family;
    if (f == "uniform")
        return uniform(need_param(src.k, "k"), need_param(src.n, "n"));
    if (f == "boolean") return boolean_matroid(need_param(src.n, "n"));
    if (f == "v")
        return v_matroid(need_param(src.k, "k"), need_param(src.h, "h"),
                         need_param(src.n, "n"));
    if (f == "thagomizer") return thagomizer(need_param(src.n, "n"));
    if (f == "k2n") return complete_bipartite_2n(need_param(src.n, "n"));
    if (f == "fan") return fan(need_param(src.n, "n"));
    if (f == "wheel") return wheel(need_param(src.n, "n"));
    if (f == "whirl") return whirl(need_param(src.n, "n"));
    if (f == "pg")
        return projective_geometry(need_param(src.r, "r"),
                                   need_param(src.q, "q"));
    throw BadParameters("unknown family: " + f);
}

void check_recursion_cap(const Matroid& m, int max_n) {
    if (m.n() > max_n)
        throw GroundSetTooLarge("recursion cap is n <= " +
                                std::to_string(max_n) + ", got n = " +
                                std::to_string(m.n()) +
                                " (raise with --max-n)");
}

nlohmann::json sets_to_json(const std::vector<Subset>& sets) {
    nlohmann::json arr = nlohmann::json::array();
    for (Subset s : sets) arr.push_back(elements_of(s));
    return arr;
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

int run_compute(const SourceOpts& src, const std::vector<std::string>& targets,
                bool as_json, int max_n, int max_n_tutte) {
    Matroid m = load_matroid(src);
    nlohmann::json out;
    std::string text;
    auto emit = [&](const std::string& key, const nlohmann::json& jval,
                    const std::string& tval) {
        out[key] = jval;
        text += key + " = " + tval + "\n";
    };
    for (const std::string& t : targets) {
        if (t == "tutte") {
            BiPoly tp = tutte(m, max_n_tutte);
            emit("tutte", bipoly_to_json(tp), tp.text());
        } else if (t == "char") {
            if (m.n() > max_n_tutte)
                throw GroundSetTooLarge("char needs n <= " +
                                        std::to_string(max_n_tutte));
            IntPoly chi = characteristic(m);
            emit("char", poly_to_json(chi), chi.text());
        } else if (t == "beta") {
            if (m.n() > max_n_tutte)
                throw GroundSetTooLarge("beta needs n <= " +
                                        std::to_string(max_n_tutte));
            emit("beta", beta(m).str(), beta(m).str());
        } else if (t == "P" || t == "Q" || t == "Z" || t == "gamma") {
            check_recursion_cap(m, max_n);
            KLCache cache(m);
            if (t == "P")
                emit("P", poly_to_json(cache.P()), cache.P().text());
            else if (t == "Q")
                emit("Q", poly_to_json(cache.Q()), cache.Q().text());
            else if (t == "Z")
                emit("Z", poly_to_json(cache.Z()), cache.Z().text());
            else {
                GammaVector g = cache.gamma();
                emit("gamma", gamma_to_json(g), gamma_poly(g).text());
            }
        } else if (t == "stressed") {
            std::vector<Subset> hs = stressed_hyperplanes(m);
            std::string tv;
            for (Subset h : hs) tv += set_text(h) + " ";
            emit("stressed", sets_to_json(hs), tv);
        } else if (t == "free") {
            std::vector<Subset> fs = free_subsets(m);
            std::string tv;
            for (Subset f : fs) tv += set_text(f) + " ";
            emit("free", sets_to_json(fs), tv);
        } else if (t == "profile") {
            PavingProfile prof = profile_from_matroid(m);
            nlohmann::json jp;
            jp["k"] = prof.k;
            jp["n"] = prof.n;
            std::string tv =
                "k=" + std::to_string(prof.k) + " n=" + std::to_string(prof.n);
            auto& lam = jp["lambda"] = nlohmann::json::object();
            for (auto [h, cnt] : prof.lambda) {
                lam[std::to_string(h)] = cnt;
                tv += " lambda_" + std::to_string(h) + "=" + std::to_string(cnt);
            }
            emit("profile", jp, tv);
        } else {
            throw BadParameters("unknown target: " + t);
        }
    }
    if (as_json)
        std::cout << out.dump() << "\n";
    else
        std::cout << text;
    return kExitOk;
}

int run_relax(const SourceOpts& src, const std::vector<int>& hyperplane,
              bool all, int max_n) {
    Matroid m = load_matroid(src);
    int k = m.rank();
    nlohmann::json out;
    std::map<int, int> profile;
    if (all) {
        RelaxAllResult res = relax_all(m);
        out["matroid"] = matroid_to_json(res.result);
        profile = res.profile;
    } else {
        if (hyperplane.empty())
            throw BadParameters("give --hyperplane or --all");
        RelaxationStep step = relaxation_step(m, subset_from(hyperplane));
        out["matroid"] = matroid_to_json(relax(m, step.hyperplane));
        out["added_bases"] = sets_to_json(step.added_bases);
        profile[step.h] = 1;
    }
    auto& jp = out["profile"] = nlohmann::json::object();
    IntPoly dp, dq, dz;
    for (auto [h, cnt] : profile) {
        jp[std::to_string(h)] = cnt;
        dp = dp + p_kh(k, h).scale(cnt);
        dq = dq + q_kh(k, h).scale(cnt);
        dz = dz + z_kh(k, h).scale(cnt);
    }
    (void)max_n;
    out["p_delta"] = poly_to_json(dp);
    out["q_delta"] = poly_to_json(dq);
    out["z_delta"] = poly_to_json(dz);
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int emit_report(const Report& rep) {
    std::cout << report_json_lines(rep);
    return rep.all_pass() ? kExitOk : kExitFailed;
}

int run_gamma_sweep(bool sparse_paving, int n, int samples, std::uint64_t seed,
                    int max_n) {
    if (!sparse_paving)
        throw BadParameters("gamma-sweep currently requires --sparse-paving");
    if (n < 4) throw BadParameters("--n must be at least 4");
    if (n > max_n)
        throw GroundSetTooLarge("gamma-sweep cap is n <= " +
                                std::to_string(max_n));
    std::mt19937_64 gen(seed);
    std::vector<std::pair<std::string, Matroid>> corpus;
    for (int i = 0; i < samples; ++i) {
        int ni = 4 + static_cast<int>(gen() % (n - 3));
        int ki = 2 + static_cast<int>(gen() % (ni - 3));
        std::uint64_t si = gen();
        Matroid m = random_sparse_paving(ki, ni, lambda_bound(ki, ni), si);
        corpus.emplace_back("sparse-paving[seed=" + std::to_string(si) +
                                ",k=" + std::to_string(ki) +
                                ",n=" + std::to_string(ni) + "]",
                            std::move(m));
    }
    return emit_report(gamma_positivity_sweep(corpus));
}

int run_tableaux_count(const std::string& kind, int a, int i, int b,
                       bool barred) {
    TableauShape s;
    if (kind == "syt")
        s.kind = ShapeKind::SYT;
    else if (kind == "skyt")
        s.kind = ShapeKind::SKYT;
    else
        throw BadParameters("--kind must be syt or skyt");
    s.a = a;
    s.i = i;
    s.b = b;
    s.barred = barred;
    std::cout << tableau_count(s).str() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact matroid Kazhdan-Lusztig toolbox"};
    app.require_subcommand(1);

    // compute
    SourceOpts comp_src;
    std::string targets_csv;
    bool as_json = false;
    int max_n = 14, max_n_tutte = 20;
    CLI::App* comp = app.add_subcommand("compute", "evaluate invariants");
    add_source_opts(comp, comp_src);
    comp->add_option("--targets", targets_csv,
                     "comma list of tutte,char,beta,P,Q,Z,gamma,stressed,"
                     "free,profile")
        ->required();
    comp->add_flag("--json", as_json, "emit one JSON object");
    comp->add_option("--max-n", max_n, "recursion size cap (default 14)");
    comp->add_option("--max-n-tutte", max_n_tutte,
                     "Tutte/char/beta size cap (default 20)");

    // relax
    SourceOpts rel_src;
    std::vector<int> hyperplane;
    bool relax_everything = false;
    CLI::App* rel = app.add_subcommand("relax", "relax stressed hyperplanes");
    add_source_opts(rel, rel_src);
    rel->add_option("--hyperplane", hyperplane,
                    "elements of the hyperplane to relax")
        ->delimiter(',');
    rel->add_flag("--all", relax_everything,
                  "relax every size->=rank stressed hyperplane (paving only)");

    // verify
    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->require_subcommand(1);
    int n_max = 30;
    CLI::App* vap = ver->add_subcommand("appendix", "appendix inequalities");
    vap->add_option("--n-max", n_max, "largest ground-set size (default 30)");

    SourceOpts vrel_src;
    CLI::App* vrel =
        ver->add_subcommand("relaxation", "per-hyperplane delta checks");
    add_source_opts(vrel, vrel_src);

    bool sweep_sparse = false;
    int sweep_n = 10, sweep_samples = 100;
    std::uint64_t sweep_seed = 0;
    int sweep_max_n = 14;
    CLI::App* vg = ver->add_subcommand("gamma-sweep", "gamma positivity sweep");
    vg->add_flag("--sparse-paving", sweep_sparse,
                 "random sparse paving corpus");
    vg->add_option("--n", sweep_n, "max ground-set size (default 10)");
    vg->add_option("--samples", sweep_samples, "corpus size (default 100)");
    vg->add_option("--seed", sweep_seed, "RNG seed")->required();
    vg->add_option("--max-n", sweep_max_n, "recursion size cap (default 14)");

    int max_cells = 16;
    CLI::App* vt = ver->add_subcommand("tableaux", "tableaux identities");
    vt->add_option("--max-cells", max_cells, "cell cap (default 16)");

    // tableaux count
    CLI::App* tab = app.add_subcommand("tableaux", "tableaux utilities");
    tab->require_subcommand(1);
    CLI::App* cnt = tab->add_subcommand("count", "count legal fillings");
    std::string kind;
    int ta = 0, ti = 0, tb = 0;
    bool barred = false;
    cnt->add_option("--kind", kind, "syt | skyt")->required();
    cnt->add_option("--a", ta)->required();
    cnt->add_option("--i", ti)->required();
    cnt->add_option("--b", tb)->required();
    cnt->add_flag("--barred", barred, "first/last entry pinned variant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (comp->parsed()) {
            std::vector<std::string> targets;
            std::stringstream ss(targets_csv);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) targets.push_back(item);
            if (targets.empty()) throw BadParameters("empty --targets");
            return run_compute(comp_src, targets, as_json, max_n, max_n_tutte);
        }
        if (rel->parsed())
            return run_relax(rel_src, hyperplane, relax_everything, max_n);
        if (ver->parsed()) {
            if (vap->parsed()) return emit_report(verify_appendix(n_max));
            if (vrel->parsed())
                return emit_report(relaxation_theorem_suite(load_matroid(vrel_src)));
            if (vg->parsed())
                return run_gamma_sweep(sweep_sparse, sweep_n, sweep_samples,
                                       sweep_seed, sweep_max_n);
            if (vt->parsed()) return emit_report(verify_tableaux(max_cells));
        }
        if (cnt->parsed()) return run_tableaux_count(kind, ta, ti, tb, barred);
        throw BadParameters("no subcommand");
    } catch (const GroundSetTooLarge& e) {
        std::cerr << e.what() << "\n";
        return kExitSizeCap;
    } catch (const ShapeTooLarge& e) {
        std::cerr << e.what() << "\n";
        return kExitSizeCap;
    } catch (const FatalInconsistency& e) {
        std::cerr << e.what() << "\n";
        return kExitFailed;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }
}

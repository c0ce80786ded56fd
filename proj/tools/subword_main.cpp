#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "subword/combinatorics.hpp"
#include "subword/conjectures.hpp"
#include "subword/homology.hpp"
#include "subword/normal_poset.hpp"
#include "subword/report.hpp"
#include "subword/symfunc.hpp"
#include "subword/tensor_poly.hpp"

using nlohmann::ordered_json;
using namespace subword;

namespace {

struct Options {
    int n = 0;
    int k = 0;
    std::vector<int> ranks;
    std::string format = "json";
    std::string out;
    long long chain_cap = 0; // 0 = unset, fall back to env then default
};

std::size_t resolve_chain_cap(long long flag_value) {
    if (flag_value > 0) return static_cast<std::size_t>(flag_value);
    if (const char* env = std::getenv("SUBWORD_CHAIN_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return default_chain_cap;
}

RankSet resolve_ranks(const Options& opt) {
    if (opt.ranks.empty()) return RankSet::full(opt.k);
    return RankSet(opt.k, opt.ranks);
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

ordered_json ranks_json(const RankSet& T) {
    ordered_json arr = ordered_json::array();
    for (int r : T.ranks) arr.push_back(r);
    return arr;
}

ordered_json poly_json(const TensorPowerPoly& p) {
    ordered_json obj = ordered_json::object();
    for (int j = 0; j <= p.degree(); ++j)
        if (p.coeff(j) != 0) obj[std::to_string(j)] = to_string(p.coeff(j));
    return obj;
}

ordered_json hook_json(const HookHVector& v) {
    ordered_json obj = ordered_json::object();
    for (const auto& [d, c] : v.coeffs)
        if (c != 0) obj[std::to_string(d)] = to_string(c);
    return obj;
}

ordered_json character_json(const FixCharacter& chi) {
    ordered_json obj = ordered_json::object();
    for (const auto& [f, v] : chi.values) obj[std::to_string(f)] = to_string(v);
    return obj;
}

ordered_json integer_array(const std::vector<Integer>& v) {
    ordered_json arr = ordered_json::array();
    for (const Integer& x : v) arr.push_back(to_string(x));
    return arr;
}

ordered_json assemble(const std::string& command, ordered_json params, ordered_json results,
                      const std::vector<CheckResult>& checks) {
    ordered_json rep;
    rep["command"] = command;
    rep["params"] = std::move(params);
    rep["results"] = std::move(results);
    ordered_json arr = ordered_json::array();
    for (const CheckResult& c : checks)
        arr.push_back({{"name", c.name},
                       {"status", c.pass() ? "pass" : "fail"},
                       {"expected", c.expected},
                       {"actual", c.actual}});
    rep["checks"] = std::move(arr);
    return rep;
}

std::string scalar_str(const ordered_json& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
}

void flatten_tsv(const ordered_json& j, const std::string& path, const char* kind,
                 std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten_tsv(value, path.empty() ? key : path + "." + key, kind, os);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& value : j)
            flatten_tsv(value, path + "." + std::to_string(i++), kind, os);
        if (j.empty()) os << kind << '\t' << path << "\t[]\n";
    } else {
        os << kind << '\t' << path << '\t' << scalar_str(j) << '\n';
    }
}

void render(const ordered_json& rep, const std::string& format, std::ostream& os) {
    if (format == "json") {
        os << rep.dump(2) << '\n';
        return;
    }
    os << "command\t" << rep["command"].get<std::string>() << '\n';
    for (const auto& [key, value] : rep["params"].items())
        flatten_tsv(value, key, "param", os);
    for (const auto& [key, value] : rep["results"].items())
        flatten_tsv(value, key, "result", os);
    for (const auto& c : rep["checks"])
        os << "check\t" << c["name"].get<std::string>() << '\t' << c["status"].get<std::string>()
           << '\t' << c["expected"].get<std::string>() << '\t' << c["actual"].get<std::string>()
           << '\n';
}

int emit(const ordered_json& rep, const Options& opt, int exit_code) {
    if (opt.out.empty()) {
        render(rep, opt.format, std::cout);
    } else {
        std::ofstream os(opt.out);
        if (!os) {
            std::cerr << "cannot open output file: " << opt.out << '\n';
            return 1;
        }
        render(rep, opt.format, os);
    }
    return exit_code;
}

int finish(const std::string& command, ordered_json params, ordered_json results,
           const std::vector<CheckResult>& checks, const Options& opt, int force_exit = -1) {
    int code = all_pass(checks) ? 0 : 2;
    if (force_exit >= 0) code = force_exit;
    return emit(assemble(command, std::move(params), std::move(results), checks), opt, code);
}

// ---------------------------------------------------------------- commands

int run_mobius(const Options& opt) {
    const RankSet T = resolve_ranks(opt);
    ordered_json params{{"n", opt.n}, {"k", opt.k}, {"ranks", ranks_json(T)}};
    ordered_json results;
    std::vector<CheckResult> checks;
    Integer recursive = poset_mobius(build_poset(opt.n, opt.k, T));
    if (T == RankSet::full(opt.k)) {
        Integer closed = ipow(Integer(opt.n - 1), static_cast<unsigned>(opt.k));
        if (opt.k % 2 == 0) closed = -closed;
        results["closed_form"] = to_string(closed);
        results["recursive"] = to_string(recursive);
        checks.push_back(make_check("mobius closed form equals recursion", closed, recursive));
    } else {
        results["mobius"] = to_string(recursive);
    }
    return finish("mobius", std::move(params), std::move(results), checks, opt);
}

int run_betti(const Options& opt) {
    const RankSet T = resolve_ranks(opt);
    const std::size_t cap = resolve_chain_cap(opt.chain_cap);
    ordered_json params{{"n", opt.n},
                        {"k", opt.k},
                        {"ranks", ranks_json(T)},
                        {"chain_cap", std::to_string(cap)}};
    SubwordPoset P = build_poset(opt.n, opt.k, T);
    ChainComplexSummary s = betti_numbers(P, cap);
    ordered_json results;
    results["face_counts"] = integer_array(s.face_counts);
    results["betti"] = integer_array(s.betti);
    results["reduced_euler"] = to_string(s.reduced_euler);

    std::vector<CheckResult> checks;
    checks.push_back(make_check("top betti equals dimension formula",
                                beta_poly(T).eval(Integer(opt.n - 1)), s.top_betti()));
    Integer lower = 0;
    for (std::size_t d = 0; d + 1 < s.betti.size(); ++d) lower += s.betti[d];
    checks.push_back(make_check("homology concentrated in top degree", Integer(0), lower));
    checks.push_back(
        make_check("reduced euler equals mobius", poset_mobius(P), s.reduced_euler));
    return finish("betti", std::move(params), std::move(results), checks, opt);
}

int run_chains(const Options& opt) {
    const RankSet T = resolve_ranks(opt);
    ordered_json params{{"n", opt.n}, {"k", opt.k}, {"ranks", ranks_json(T)}};
    FixCharacter chi = chain_character(opt.n, opt.k, T);
    Integer count = maximal_chain_count(build_poset(opt.n, opt.k, T));
    ordered_json results;
    results["dimension"] = to_string(chi.dimension());
    results["character"] = character_json(chi);
    results["chain_count"] = to_string(count);

    std::vector<CheckResult> checks;
    TensorPowerPoly alpha = alpha_poly(T);
    for (int f : admissible_fix_counts(opt.n))
        checks.push_back(make_check("chain character at fix count " + std::to_string(f),
                                    alpha.eval(Integer(f - 1)), chi.values.at(f)));
    checks.push_back(make_check("chain count equals dimension", chi.dimension(), count));
    return finish("chains", std::move(params), std::move(results), checks, opt);
}

int run_beta(const Options& opt) {
    const RankSet T = resolve_ranks(opt);
    ordered_json params{{"n", opt.n}, {"k", opt.k}, {"ranks", ranks_json(T)}};
    TensorPowerPoly beta = beta_poly(T);
    ordered_json results;
    results["beta"] = poly_json(beta);
    results["dimension"] = to_string(beta.eval(Integer(opt.n - 1)));
    results["alternating_coeff_sum"] = to_string(alternating_coeff_sum(beta));
    return finish("beta", std::move(params), std::move(results), {}, opt);
}

int run_hbasis(const Options& opt) {
    const RankSet T = resolve_ranks(opt);
    ordered_json params{{"n", opt.n}, {"k", opt.k}, {"ranks", ranks_json(T)}};
    TensorPowerPoly beta = beta_poly(T);
    const Rational sign = T.size() % 2 == 0 ? 1 : -1;
    SymFunc corrected =
        add(frobenius_of_fixpoly(beta, opt.n), scale(reflection_char(opt.n), sign));
    std::optional<HookHVector> hook = to_hook_h(corrected);

    ordered_json results;
    results["beta"] = poly_json(beta);
    std::vector<CheckResult> checks;
    checks.push_back(
        make_check("corrected module lies in the hook h span", "true", bool_str(hook.has_value())));
    if (hook) {
        results["hook"] = hook_json(*hook);
        checks.push_back(make_check("hook coordinates are integers", "true",
                                    bool_str(hook->integral())));
        checks.push_back(make_check("hook support starts at degree 2", "true",
                                    bool_str(hook->min_support() >= 2)));
        results["h_positive"] = bool_str(hook->nonnegative());
    }
    return finish("hbasis", std::move(params), std::move(results), checks, opt);
}

int run_reduce(const Options& opt) {
    ordered_json params{{"n", opt.n}};
    ReductionIdentity red = reduction_polynomial(opt.n);
    ordered_json results;
    ordered_json pj = ordered_json::object();
    for (std::size_t j = 0; j < red.poly.size(); ++j)
        if (red.poly[j] != 0) pj[std::to_string(j)] = to_string(red.poly[j]);
    results["p"] = pj;
    ordered_json aj = ordered_json::object();
    for (const auto& [j, v] : red.a) aj[std::to_string(j)] = to_string(v);
    results["a"] = aj;

    std::vector<CheckResult> checks;
    for (int f : admissible_fix_counts(opt.n)) {
        Integer x = f - 1, value = 0;
        for (std::size_t j = red.poly.size(); j-- > 0;) value = value * x + red.poly[j];
        checks.push_back(
            make_check("vanishes at fix count " + std::to_string(f), Integer(0), value));
    }
    return finish("reduce", std::move(params), std::move(results), checks, opt);
}

int run_conjectures(const Options& opt) {
    ordered_json params{{"n", opt.n}, {"k", opt.k}};
    ConjectureReport rep = scan(opt.n, opt.k);
    ordered_json records = ordered_json::array();
    for (const ConjectureRecord& rec : rep.records) {
        ordered_json r;
        r["ranks"] = ranks_json(rec.T);
        r["beta"] = poly_json(rec.beta);
        r["hook"] = hook_json(rec.hook);
        r["conj1"] = to_string(rec.conj1);
        r["conj2"] = to_string(rec.conj2);
        if (rec.rewrite_searched) r["rewrite_found"] = bool_str(rec.rewrite_found);
        records.push_back(std::move(r));
    }
    ordered_json results;
    results["records"] = std::move(records);
    results["conj1_failures"] = rep.conj1_failures;
    results["conj2_failures"] = rep.conj2_failures;

    std::vector<CheckResult> checks;
    checks.push_back(
        make_check("no counterexample to conjecture 1", Integer(0), Integer(rep.conj1_failures)));
    checks.push_back(
        make_check("no counterexample to conjecture 2", Integer(0), Integer(rep.conj2_failures)));
    int force = -1;
    if (rep.has_failure()) {
        results["witness"] = ranks_json(rep.first_failure()->T);
        force = 3;
    }
    return finish("conjectures", std::move(params), std::move(results), checks, opt, force);
}

int run_identities(const Options& opt) {
    ordered_json params{{"n", opt.n}, {"k", opt.k}};
    const int k = opt.k;
    std::vector<CheckResult> checks;
    checks.push_back(make_check("proven families: vanishing alternating sums", "true",
                                bool_str(check_proven_cases(opt.n, k))));

    bool consecutive = true;
    for (int r = 1; r <= k; ++r) {
        std::vector<int> run;
        for (int i = r; i <= k; ++i) run.push_back(i);
        consecutive = consecutive && consecutive_ranks_poly(r, k) == beta_poly(RankSet(k, run));
    }
    checks.push_back(
        make_check("consecutive ranks closed form", "true", bool_str(consecutive)));

    bool deletion = true;
    for (int r = 1; r <= k && k >= 2; ++r) {
        std::vector<int> rest;
        for (int i = 1; i <= k; ++i)
            if (i != r) rest.push_back(i);
        deletion = deletion && rank_deletion_poly(r, k) == beta_poly(RankSet(k, rest));
    }
    checks.push_back(make_check("rank deletion closed form", "true", bool_str(deletion)));

    bool pairs = true;
    for (int s1 = 1; s1 < k; ++s1)
        for (int s2 = s1 + 1; s2 <= k; ++s2)
            pairs = pairs && two_ranks_poly(s1, s2) == beta_poly(RankSet(k, {s1, s2}));
    checks.push_back(make_check("two ranks closed form", "true", bool_str(pairs)));

    bool g_nonneg = true;
    for (int kk = 1; kk <= k; ++kk)
        for (int d = 2; d <= kk; ++d) g_nonneg = g_nonneg && g_coeff(opt.n, kk, d) >= 0;
    checks.push_back(
        make_check("tensor power h coefficients nonnegative", "true", bool_str(g_nonneg)));

    return finish("identities", std::move(params), ordered_json::object(), checks, opt);
}

int run_normal(const Options& opt) {
    const RankSet T = resolve_ranks(opt);
    ordered_json params{{"n", opt.n}, {"k", opt.k}, {"ranks", ranks_json(T)}};
    SubwordPoset N = build_normal(opt.n, opt.k, T);
    Integer mu = poset_mobius(N);
    ordered_json results;
    results["mobius"] = to_string(mu);
    ordered_json sizes = ordered_json::array();
    for (const auto& level : N.levels) sizes.push_back(std::to_string(level.size()));
    results["level_sizes"] = std::move(sizes);

    std::vector<CheckResult> checks;
    for (int j = 0; j < N.level_count(); ++j)
        checks.push_back(make_check("normal words at rank " + std::to_string(T.ranks[static_cast<size_t>(j)]),
                                    count_normal(opt.n, T.ranks[static_cast<size_t>(j)]),
                                    Integer(N.levels[static_cast<size_t>(j)].size())));
    if (T == RankSet::full(opt.k)) {
        Integer closed = ipow(Integer(opt.n - 1), static_cast<unsigned>(opt.k));
        if (opt.k % 2 == 0) closed = -closed;
        checks.push_back(make_check("mobius matches closed form", closed, mu));
        checks.push_back(make_check("mobius agrees with the full subword poset",
                                    poset_mobius(build_poset(opt.n, opt.k, T)), mu));
    }
    return finish("normal", std::move(params), std::move(results), checks, opt);
}

int run_selftest(const Options& opt) {
    std::vector<CheckResult> checks;

    int mobius_mismatches = 0;
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k) {
            Integer closed = ipow(Integer(n - 1), static_cast<unsigned>(k));
            if (k % 2 == 0) closed = -closed;
            if (poset_mobius(build_poset(n, k, RankSet::full(k))) != closed) ++mobius_mismatches;
        }
    checks.push_back(make_check("mobius closed form n<=4 k<=4", Integer(0),
                                Integer(mobius_mismatches)));

    checks.push_back(
        make_check("polynomial calculus vs chain complexes", "true", bool_str(cross_validate(3, 3))));
    checks.push_back(make_check("whitney sums agree with normal poset", "true",
                                bool_str(compare_whitney(3, 3))));

    DualWhitneyCounterexample ce = dual_whitney_counterexample();
    checks.push_back(make_check("dual whitney subword mobius", Integer(3), ce.subword_mobius));
    checks.push_back(make_check("dual whitney normal mobius", Integer(1), ce.normal_mobius));

    checks.push_back(
        make_check("normal intervals eulerian", "true", bool_str(eulerian_intervals(3, 3))));
    checks.push_back(make_check("lower interval homology agrees", "true",
                                bool_str(lower_interval_homology_agrees(3, 3))));
    checks.push_back(
        make_check("proven families through k=6", "true", bool_str(check_proven_cases(5, 6))));

    int stable_mismatches = 0;
    for (int k = 1; k <= 5; ++k)
        for (int n = std::max(k, 2); n <= 6; ++n)
            if (trivial_multiplicity(n, k) != bell_no_singletons(k)) ++stable_mismatches;
    checks.push_back(make_check("stable trivial multiplicity", Integer(0),
                                Integer(stable_mismatches)));

    for (const CheckResult& c : n2_examples()) checks.push_back(c);

    return finish("selftest", ordered_json::object(), ordered_json::object(), checks, opt);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for rank-selected subword posets"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_n, bool needs_k, bool takes_ranks,
                          bool takes_cap = false) {
        if (needs_n) cmd->add_option("--n", opt.n, "alphabet size")->required();
        if (needs_k) cmd->add_option("--k", opt.k, "maximum rank")->required();
        if (takes_ranks)
            cmd->add_option("--ranks", opt.ranks, "selected ranks, comma separated")
                ->delimiter(',');
        if (takes_cap)
            cmd->add_option("--chain-cap", opt.chain_cap, "maximum number of chains to enumerate");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "tsv"}));
        cmd->add_option("--out", opt.out, "output path (default: standard output)");
    };

    CLI::App* mobius = app.add_subcommand("mobius", "Mobius number of a rank selection");
    add_common(mobius, true, true, true);
    CLI::App* betti = app.add_subcommand("betti", "reduced homology of a rank selection");
    add_common(betti, true, true, true, true);
    CLI::App* chains = app.add_subcommand("chains", "maximal chain module character");
    add_common(chains, true, true, true);
    CLI::App* beta = app.add_subcommand("beta", "canonical tensor power expansion of homology");
    add_common(beta, true, true, true);
    CLI::App* hbasis = app.add_subcommand("hbasis", "hook h coordinates of the corrected module");
    add_common(hbasis, true, true, true);
    CLI::App* reduce = app.add_subcommand("reduce", "tensor power reduction identity");
    add_common(reduce, true, false, false);
    CLI::App* conjectures = app.add_subcommand("conjectures", "scan both conjectures");
    add_common(conjectures, true, true, false);
    CLI::App* identities = app.add_subcommand("identities", "closed form formula battery");
    add_common(identities, true, true, false);
    CLI::App* normal = app.add_subcommand("normal", "normal word poset computations");
    add_common(normal, true, true, true);
    CLI::App* selftest = app.add_subcommand("selftest", "built-in verification battery");
    add_common(selftest, false, false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (mobius->parsed()) return run_mobius(opt);
        if (betti->parsed()) return run_betti(opt);
        if (chains->parsed()) return run_chains(opt);
        if (beta->parsed()) return run_beta(opt);
        if (hbasis->parsed()) return run_hbasis(opt);
        if (reduce->parsed()) return run_reduce(opt);
        if (conjectures->parsed()) return run_conjectures(opt);
        if (identities->parsed()) return run_identities(opt);
        if (normal->parsed()) return run_normal(opt);
        if (selftest->parsed()) return run_selftest(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

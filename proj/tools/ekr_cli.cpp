// Command-line front end: verification scans, family inspection, spectral
// profiles, coefficient tables, and min-degree searches. JSON reports go to
// stdout, a human summary to stderr; exit code 0 iff nothing failed.

#include "ekr/family_gen.hpp"
#include "ekr/lemmas.hpp"
#include "ekr/report_json.hpp"
#include "ekr/runtime.hpp"
#include "ekr/scheme.hpp"
#include "ekr/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <functional>
#include <iostream>
#include <thread>

using namespace ekr;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Output {
    std::string format = "json";  // "json" or "csv"
    bool verbose = false;         // include every grid entry in the JSON report
};

json summary_json(const ScanSummary& s) {
    json j;
    j["total"] = s.total;
    j["pass"] = s.pass;
    j["equality"] = s.equality;
    j["fail"] = s.fail;
    j["out_of_range"] = s.out_of_range;
    return j;
}

int emit_scan(const std::string& command, const json& params, const ScanSummary& summary,
              const std::vector<LemmaReport>& entries, const Output& out, double wall) {
    if (out.format == "csv") {
        std::cout << report_csv_header() << "\n";
        for (const LemmaReport& r : entries) std::cout << report_csv_row(r) << "\n";
    } else {
        json doc;
        doc["command"] = command;
        doc["params"] = params;
        doc["summary"] = summary_json(summary);
        if (out.verbose) {
            json arr = json::array();
            for (const LemmaReport& r : entries) arr.push_back(report_to_json(r));
            doc["entries"] = std::move(arr);
        } else {
            json arr = json::array();
            for (const LemmaReport& r : summary.failures) arr.push_back(report_to_json(r));
            doc["failures"] = std::move(arr);
        }
        doc["wall_time_s"] = wall;
        std::cout << doc.dump(2) << "\n";
    }
    std::cerr << command << ": " << summary.total << " checks, " << summary.pass << " pass, "
              << summary.equality << " equality, " << summary.fail << " fail"
              << " (" << wall << " s)\n";
    return summary.fail == 0 ? 0 : 1;
}

struct VerifyOptions {
    std::string lemma = "all";
    int kmax = 0;  // 0: per-lemma default
    int nmax = 0;
    std::size_t families = 100;
    std::uint64_t seed = 20240904;
};

int run_verify(const VerifyOptions& opt, const Output& out) {
    auto start = Clock::now();
    ScanSummary total;
    std::vector<LemmaReport> entries;
    ReportSink sink;
    if (out.verbose || out.format == "csv")
        sink = [&entries](const LemmaReport& r) { entries.push_back(r); };

    auto merge = [&total](const ScanSummary& s) {
        total.total += s.total;
        total.pass += s.pass;
        total.equality += s.equality;
        total.fail += s.fail;
        total.out_of_range += s.out_of_range;
        total.failures.insert(total.failures.end(), s.failures.begin(), s.failures.end());
    };

    bool all = opt.lemma == "all";
    std::vector<std::pair<std::string, std::function<ScanSummary()>>> jobs;
    auto queue = [&](const std::string& name, std::function<ScanSummary()> job) {
        if (all || opt.lemma == name) jobs.emplace_back(name, std::move(job));
    };
    queue("lemma31", [&] {
        return scan_binomial_compare(opt.kmax ? opt.kmax : 25, opt.nmax ? opt.nmax : 80, sink);
    });
    queue("hahn",
          [&] { return scan_hahn(opt.nmax ? opt.nmax : 40, opt.kmax ? opt.kmax : 20, sink); });
    queue("claims",
          [&] { return scan_claims(opt.kmax ? opt.kmax : 20, opt.nmax ? opt.nmax : 80, sink); });
    queue("technical", [&] {
        return scan_technical(opt.kmax ? opt.kmax : 20, opt.nmax ? opt.nmax : 80, sink);
    });
    queue("factorization", [&] {
        return scan_factorization(opt.kmax ? opt.kmax : 15, opt.nmax ? opt.nmax : 60, sink);
    });
    queue("lemma32", [&] { return scan_hoffman(opt.families, opt.seed, sink); });
    queue("lemma33", [&] { return scan_degree_quadratic(opt.families, opt.seed, sink); });
    if (jobs.empty()) {
        std::cerr << "unknown --lemma selector: " << opt.lemma << "\n";
        return 2;
    }

    // Scans are independent; without an entry sink they may run concurrently.
    // Summaries merge in queue order either way, so output is deterministic.
    std::vector<ScanSummary> results(jobs.size());
    if (!sink && thread_count() > 1 && jobs.size() > 1) {
        std::vector<std::thread> threads;
        std::atomic<std::size_t> next{0};
        unsigned workers = std::min<unsigned>(thread_count(), jobs.size());
        for (unsigned w = 0; w < workers; ++w)
            threads.emplace_back([&] {
                for (;;) {
                    std::size_t idx = next.fetch_add(1);
                    if (idx >= jobs.size()) return;
                    results[idx] = jobs[idx].second();
                }
            });
        for (auto& t : threads) t.join();
    } else {
        for (std::size_t idx = 0; idx < jobs.size(); ++idx) results[idx] = jobs[idx].second();
    }
    for (const ScanSummary& s : results) merge(s);

    json params;
    params["lemma"] = opt.lemma;
    if (opt.kmax) params["kmax"] = opt.kmax;
    if (opt.nmax) params["nmax"] = opt.nmax;
    params["families"] = opt.families;
    params["seed"] = opt.seed;
    return emit_scan("verify", params, total, entries, out, seconds_since(start));
}

int run_profile(const std::string& path) {
    auto start = Clock::now();
    SetFamily f = load_family(path);
    SpectralProfile p = spectral_profile(f);
    QuadraticValue kq = kneser_quadratic(f);

    json doc;
    doc["command"] = "profile";
    doc["params"] = {{"file", path}};
    doc["n"] = p.n;
    doc["k"] = p.k;
    doc["family_size"] = to_string(p.family_size);
    json norms = json::array();
    for (const BigRational& q : p.norms) norms.push_back(to_string(q));
    doc["norms"] = std::move(norms);

    bool sum_ok = (p.sum() == BigRational(p.family_size));
    bool h0_ok = (p.norms[0] ==
                  make_rational(p.family_size * p.family_size, binom(p.n, p.k)));
    doc["checks"] = {{"sum_equals_family_size", sum_ok},
                     {"h0_equals_size_squared_over_binom", h0_ok},
                     {"kneser_quadratic_direct", to_string(kq.direct)},
                     {"kneser_quadratic_spectral", to_string(kq.spectral)}};
    doc["wall_time_s"] = seconds_since(start);
    std::cout << doc.dump(2) << "\n";
    std::cerr << "profile: |F| = " << to_string(p.family_size) << ", " << p.norms.size()
              << " eigenspace norms (" << doc["wall_time_s"].get<double>() << " s)\n";
    return (sum_ok && h0_ok) ? 0 : 1;
}

int run_check(const std::string& path, int d) {
    auto start = Clock::now();
    SetFamily f = load_family(path);
    LemmaReport r = theorem_check(f, d);  // rejects non-intersecting input
    json doc;
    doc["command"] = "check";
    doc["params"] = {{"file", path}, {"d", d}};
    doc["intersecting"] = true;
    doc["report"] = report_to_json(r);
    doc["wall_time_s"] = seconds_since(start);
    std::cout << doc.dump(2) << "\n";
    std::cerr << "check: verdict " << verdict_name(r.verdict) << ", min degree " << to_string(r.lhs)
              << " vs bound " << to_string(r.rhs) << "\n";
    return r.failed() ? 1 : 0;
}

int run_coeffs(int n, int k, int d) {
    CoefficientSet cs = coefficients(n, k, d);
    json doc;
    doc["command"] = "coeffs";
    doc["params"] = {{"n", n}, {"k", k}, {"d", d}};
    json a = json::array(), b = json::array();
    for (const BigRational& q : cs.a) a.push_back(to_string(q));
    for (const BigRational& q : cs.b) b.push_back(to_string(q));
    doc["a"] = std::move(a);
    doc["b"] = std::move(b);
    doc["c"] = to_string(cs.c);
    doc["f"] = to_string(cs.f);
    doc["g"] = to_string(cs.g);
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int run_search(const SearchProblem& p, const std::string& out_path) {
    auto start = Clock::now();
    SearchOutcome outcome = search_min_degree(p);
    json doc;
    doc["command"] = "search";
    doc["params"] = {{"n", p.n},
                     {"k", p.k},
                     {"d", p.d},
                     {"target", p.target},
                     {"symmetry_pruning", p.symmetry_pruning}};
    doc["result"] = outcome_to_json(outcome);
    doc["wall_time_s"] = seconds_since(start);
    if (outcome.witness && !out_path.empty()) {
        save_family(*outcome.witness, out_path);
        doc["witness_file"] = out_path;
    }
    std::cout << doc.dump(2) << "\n";
    std::cerr << "search: " << search_status_name(outcome.status) << " after "
              << outcome.nodes_explored << " nodes (" << doc["wall_time_s"].get<double>()
              << " s)\n";
    return 0;  // caps are a distinct status, not a failure
}

int run_scan_theorem(int nmax, int kmax, int dmax, std::uint64_t cap) {
    auto start = Clock::now();
    auto entries = scan_theorem(nmax, kmax, dmax, cap);
    json doc;
    doc["command"] = "scan-theorem";
    doc["params"] = {{"nmax", nmax}, {"kmax", kmax}, {"dmax", dmax}, {"binom_cap", cap}};
    json arr = json::array();
    std::uint64_t witnesses = 0, exhausted = 0, capped = 0;
    for (const auto& e : entries) {
        json je;
        je["n"] = e.n;
        je["k"] = e.k;
        je["d"] = e.d;
        je["bound"] = to_string(e.bound);
        je["in_theorem_range"] = e.in_theorem_range;
        je["status"] = search_status_name(e.outcome.status);
        je["nodes"] = e.outcome.nodes_explored;
        if (e.outcome.witness) je["witness"] = family_to_json(*e.outcome.witness);
        arr.push_back(std::move(je));
        switch (e.outcome.status) {
            case SearchStatus::Witness: ++witnesses; break;
            case SearchStatus::Exhausted: ++exhausted; break;
            case SearchStatus::Capped: ++capped; break;
        }
    }
    doc["entries"] = std::move(arr);
    doc["summary"] = {{"witness", witnesses}, {"exhausted", exhausted}, {"capped", capped}};
    doc["wall_time_s"] = seconds_since(start);
    std::cout << doc.dump(2) << "\n";
    std::cerr << "scan-theorem: " << entries.size() << " instances, " << exhausted
              << " exhausted, " << witnesses << " witnesses (outside range), " << capped
              << " capped\n";
    return 0;
}

int run_chvatal(int n, int d_opt) {
    auto start = Clock::now();
    json doc;
    doc["command"] = "chvatal";
    doc["params"] = {{"n", n}};
    json arr = json::array();
    int fails = 0;
    int dmin = d_opt > 0 ? d_opt : 1;
    int dmax = d_opt > 0 ? d_opt : (n - 1) / 2;
    for (int d = dmin; d <= dmax; ++d) {
        LemmaReport r = chvatal_check(n, d);
        if (r.failed()) ++fails;
        arr.push_back(report_to_json(r));
    }
    std::size_t checks = arr.size();
    doc["entries"] = std::move(arr);
    doc["summary"] = {{"fail", fails}};
    doc["wall_time_s"] = seconds_since(start);
    std::cout << doc.dump(2) << "\n";
    std::cerr << "chvatal: n=" << n << ", " << checks << " checks, " << fails << " fail\n";
    return fails == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the spectral minimum-degree bound for intersecting "
                 "set families: eigenspace projections, lemma scans, and extremal searches"};
    app.require_subcommand(1);

    Output out;
    auto add_output_options = [&out](CLI::App* sub) {
        sub->add_option("--format", out.format, "Report format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--verbose", out.verbose, "Include every grid entry in the JSON report");
    };

    VerifyOptions vopt;
    auto* verify = app.add_subcommand(
        "verify", "Run a lemma verifier over its default grid (override with --kmax/--nmax)");
    add_output_options(verify);
    verify->add_option("--lemma", vopt.lemma,
                       "lemma31|lemma32|lemma33|claims|hahn|technical|factorization|all");
    verify->add_option("--kmax", vopt.kmax,
                       "Grid bound on k (defaults: lemma31 25, claims/technical/hahn 20, "
                       "factorization 15)");
    verify->add_option("--nmax", vopt.nmax,
                       "Grid bound on n (defaults: lemma31/claims/technical 80, factorization 60, "
                       "hahn 40)");
    verify->add_option("--families", vopt.families,
                       "Seeded random families for lemma32/lemma33 (default 100)");
    verify->add_option("--seed", vopt.seed, "Seed for random families");

    std::string profile_file;
    auto* profile = app.add_subcommand("profile", "Exact eigenspace-projection norms of a family");
    profile->add_option("file", profile_file, "Family file (JSON)")->required();

    std::string check_file;
    int check_d = 2;
    auto* check = app.add_subcommand("check", "Theorem check for a family file");
    check->add_option("file", check_file, "Family file (JSON)")->required();
    check->add_option("--d", check_d, "Degree parameter d")->required();

    int cn = 0, ck = 0, cd = 0;
    auto* coeffs = app.add_subcommand("coeffs", "Exact proof coefficients a_i, b_i, c, f, g");
    coeffs->add_option("--n", cn)->required();
    coeffs->add_option("--k", ck)->required();
    coeffs->add_option("--d", cd)->required();

    SearchProblem sp;
    std::string search_out;
    double time_limit = 0;
    std::uint64_t node_limit = 0;
    bool no_symmetry = false;
    auto* search = app.add_subcommand("search", "Branch-and-bound search for an intersecting "
                                                "family with min d-degree >= target");
    search->add_option("--n", sp.n)->required();
    search->add_option("--k", sp.k)->required();
    search->add_option("--d", sp.d)->required();
    search->add_option("--target", sp.target)->required();
    search->add_flag("--no-symmetry", no_symmetry, "Disable symmetry pruning");
    search->add_option("--time-limit", time_limit, "Wall-clock cap in seconds");
    search->add_option("--node-limit", node_limit, "Node cap");
    search->add_option("--out", search_out, "Write the witness family to this file");

    int tn = 8, tk = 4, td = 2;
    std::uint64_t tcap = 40;
    auto* scan = app.add_subcommand("scan-theorem",
                                    "Exhaustive search at target = bound+1 over a small grid");
    scan->add_option("--nmax", tn);
    scan->add_option("--kmax", tk);
    scan->add_option("--dmax", td);
    scan->add_option("--binom-cap", tcap, "Skip instances with C(n,k) above this cap");

    int chv_n = 5, chv_d = 0;
    auto* chv = app.add_subcommand("chvatal", "Upper-half family vs element stars of 2^[n]");
    chv->add_option("--n", chv_n, "Odd ground-set size")->required();
    chv->add_option("--d", chv_d, "Degree (default: all 1 <= d <= (n-1)/2)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return run_verify(vopt, out);
        if (*profile) return run_profile(profile_file);
        if (*check) return run_check(check_file, check_d);
        if (*coeffs) return run_coeffs(cn, ck, cd);
        if (*search) {
            sp.symmetry_pruning = !no_symmetry;
            if (time_limit > 0) sp.time_limit_s = time_limit;
            if (node_limit > 0) sp.node_limit = node_limit;
            return run_search(sp, search_out);
        }
        if (*scan) return run_scan_theorem(tn, tk, td, tcap);
        if (*chv) return run_chvatal(chv_n, chv_d);
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        std::cout << err.dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#include "zccs/cli.hpp"

#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zccs/codeset_io.hpp"
#include "zccs/parse.hpp"
#include "zccs/pmepr.hpp"
#include "zccs/verify.hpp"

namespace zccs {

namespace {

using json = nlohmann::ordered_json;

void write_report(const std::string& path, const json& doc) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open report file: " + path);
    out << doc.dump(2) << '\n';
}

json violations_to_json(const std::vector<Violation>& vs) {
    json arr = json::array();
    for (const auto& v : vs) {
        json o;
        o["delta1"] = v.delta1;
        o["delta2"] = v.delta2;
        o["tau"] = v.tau;
        o["magnitude"] = v.magnitude;
        arr.push_back(std::move(o));
    }
    return arr;
}

struct GenerateArgs {
    long q = 2;
    int m = 1;
    std::string g_expr = "0";
    std::vector<int> deleted;
    bool deleted_given = false;
    int n = 0;
    bool n_given = false;
    std::optional<int> gamma;
    std::vector<long> primes;
    std::vector<int> widths;
    long length = 0;  // alternative to --primes
    std::vector<long> h_table;
    std::vector<int> h_perm;
    std::vector<long> h_u;
    long h_const = 0;
    bool h_path = false;
    bool literal_tail = false;
    bool strict_widths = false;
    std::string out_path;
    std::string report_path;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
    Gbf g = parse_gbf_expr(a.g_expr, a.q, a.m);

    std::vector<int> deleted = a.deleted;
    if (!a.deleted_given) {
        const int want = a.n_given ? a.n : 0;
        auto found = find_deletion_set(g, want);
        if (!found)
            throw std::invalid_argument("no deletion set of size " + std::to_string(want) +
                                        " leaves a path with edge weight q/2");
        deleted = *found;
    }
    if (a.n_given && static_cast<int>(deleted.size()) != a.n)
        throw std::invalid_argument("--n disagrees with the --delete list size");

    int gamma;
    if (a.gamma) {
        gamma = *a.gamma;
    } else {
        const PathReport rep = check_path_reduction(g, deleted);
        if (!rep.ok)
            throw std::invalid_argument(std::string("deletion set check failed: ") +
                                        to_string(rep.failure));
        gamma = rep.end_vertices.front();
    }

    std::vector<long> primes = a.primes;
    std::vector<int> widths = a.widths;
    if (a.length > 0) {
        if (!primes.empty())
            throw std::invalid_argument("--length and --primes are mutually exclusive");
        const PlanResult plan = plan_parameters(a.length, a.m);
        primes = plan.primes;
        widths = plan.widths;
    } else if (widths.empty()) {
        for (long p : primes) {
            int s = 0;
            while ((1L << s) < p) ++s;
            widths.push_back(s == 0 ? 1 : s);
        }
    }

    const int n = static_cast<int>(deleted.size());
    HFunction h = HFunction::from_table(a.q, n,
                                        std::vector<long>(1ull << (n + 1), 0));
    if (a.h_path) {
        h = HFunction::from_path(a.q, n, a.h_perm, a.h_u, a.h_const);
    } else if (!a.h_table.empty()) {
        h = HFunction::from_table(a.q, n, a.h_table);
    }

    const HConditionResult hc = check_h_condition(h);
    if (!hc.ok)
        err << "warning: h takes values outside a single {c, c+q/2} pair; "
               "the zero-correlation zone is not guaranteed\n";

    ConstructionParams cp(a.q, std::move(g), deleted, gamma, primes, widths, h,
                          a.literal_tail, a.strict_widths);
    const CodeSet set = generate_zccs(cp);
    write_codeset(set, a.out_path);
    out << "wrote " << a.out_path << ": M=" << set.params.M << " codes, K=" << set.params.K
        << " rows, N=" << set.params.N << " columns, Z=" << set.params.Z
        << ", sigma=" << set.params.sigma << "\n";
    if (hc.ok) out << "h condition: ok (c=" << *hc.c << ")\n";

    json rep;
    rep["command"] = "generate";
    rep["file"] = a.out_path;
    rep["M"] = set.params.M;
    rep["K"] = set.params.K;
    rep["N"] = set.params.N;
    rep["Z"] = set.params.Z;
    rep["sigma"] = set.params.sigma;
    rep["h_condition_ok"] = hc.ok;
    if (hc.ok) rep["h_c"] = *hc.c;
    write_report(a.report_path, rep);
    return 0;
}

int print_check_report(const CorrelationReport& rep, long Z, const CodeSet& set,
                       const std::string& label, const std::string& report_path,
                       std::ostream& out) {
    out << label << ": engine=" << (rep.engine == Engine::Exact ? "exact" : "float")
        << " Z=" << Z << " peak=" << rep.peak << " (expected " << rep.expected_peak
        << ") violations=" << rep.violations.size() << " -> "
        << (rep.passed ? "PASS" : "FAIL") << "\n";
    if (!rep.note.empty()) out << "note: " << rep.note << "\n";
    for (std::size_t i = 0; i < rep.violations.size() && i < 10; ++i) {
        const auto& v = rep.violations[i];
        out << "  violation: codes (" << v.delta1 << "," << v.delta2 << ") tau=" << v.tau
            << " |value|=" << v.magnitude << "\n";
    }
    const Optimality opt =
        check_optimality(set.params.M, set.params.K, set.params.N, Z);
    out << "set size: M=" << set.params.M << " vs K*floor(N/Z)="
        << set.params.K * (set.params.N / Z) << " -> " << to_string(opt) << "\n";

    json jr;
    jr["command"] = label;
    jr["passed"] = rep.passed;
    jr["engine"] = rep.engine == Engine::Exact ? "exact" : "float";
    jr["Z"] = Z;
    jr["peak"] = rep.peak;
    jr["expected_peak"] = rep.expected_peak;
    jr["violations"] = violations_to_json(rep.violations);
    jr["optimality"] = to_string(opt);
    if (!rep.note.empty()) jr["note"] = rep.note;
    write_report(report_path, jr);
    return rep.passed ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Z-complementary code set toolkit"};
    app.require_subcommand(1);

    // ---- generate
    GenerateArgs ga;
    auto* gen = app.add_subcommand("generate", "construct a code set and write it to a file");
    gen->add_option("--q", ga.q, "phase alphabet size (even)")->required();
    gen->add_option("--m", ga.m, "seed variable count")->required();
    gen->add_option("--g", ga.g_expr, "seed function, e.g. 'y1*y2+y0'")->required();
    auto* del_opt = gen->add_option("--delete", ga.deleted, "vertices to delete")->delimiter(',');
    auto* n_opt = gen->add_option("--n", ga.n, "deletion set size (auto-search)");
    gen->add_option("--gamma", [&ga](const CLI::results_t& rs) {
        try {
            ga.gamma = std::stoi(rs.front());
        } catch (...) {
            return false;
        }
        return true;
    }, "chosen path end");
    gen->add_option("--primes", ga.primes, "tail primes p_1..p_l")->delimiter(',');
    gen->add_option("--widths", ga.widths, "tail widths s_1..s_l")->delimiter(',');
    gen->add_option("--length", ga.length, "target code length (plans primes/widths)");
    gen->add_option("--h-table", ga.h_table, "row offset table, 2^(n+1) values")->delimiter(',');
    auto* hp = gen->add_flag("--h-path", ga.h_path, "build h from path form");
    gen->add_option("--h-path-perm", ga.h_perm, "path order over 0..n")->delimiter(',')->needs(hp);
    gen->add_option("--h-path-u", ga.h_u, "linear weights")->delimiter(',')->needs(hp);
    gen->add_option("--h-path-const", ga.h_const, "constant offset")->needs(hp);
    gen->add_flag("--literal-reversal-tail", ga.literal_tail,
                  "keep the last carrier variable uncomplemented in the second family");
    gen->add_flag("--strict-widths", ga.strict_widths, "require p < 2^s instead of p <= 2^s");
    gen->add_option("--out", ga.out_path, "output file")->required();
    gen->add_option("--report", ga.report_path, "write a JSON summary");

    // ---- plan
    long plan_length = 0;
    int plan_m = 1;
    std::string plan_report;
    auto* plan = app.add_subcommand("plan", "factor a target length into construction parameters");
    plan->add_option("--length", plan_length, "target code length")->required();
    plan->add_option("--m", plan_m, "seed variable count (ZCZ is 2^m)")->required();
    plan->add_option("--report", plan_report, "write a JSON summary");

    // ---- shared flags for the checking subcommands
    struct CheckArgs {
        std::string in_path;
        std::string engine = "exact";
        long Z = 0;
        bool fast = false;
        int jobs = 1;
        std::string report_path;
    } ca;
    auto add_check_flags = [&ca](CLI::App* cmd, bool with_z) {
        cmd->add_option("--in", ca.in_path, "code set file")->required();
        cmd->add_option("--engine", ca.engine, "exact|float")
            ->check(CLI::IsMember({"exact", "float"}));
        if (with_z) cmd->add_option("--zcz", ca.Z, "zone width (default: claimed Z)");
        cmd->add_flag("--fast", ca.fast, "unordered pairs, positive shifts only");
        cmd->add_option("--jobs", ca.jobs, "worker threads")->envname("ZCCS_JOBS");
        cmd->add_option("--report", ca.report_path, "write a JSON report");
    };
    auto* verify_cmd = app.add_subcommand("verify", "check the zero-correlation-zone definition");
    add_check_flags(verify_cmd, true);
    auto* ccc_cmd = app.add_subcommand("ccc", "check the complete complementary definition");
    add_check_flags(ccc_cmd, false);
    auto* zcz_cmd = app.add_subcommand("zcz-measure", "measure the widest passing zone");
    zcz_cmd->add_option("--in", ca.in_path, "code set file")->required();
    zcz_cmd->add_option("--jobs", ca.jobs, "worker threads")->envname("ZCCS_JOBS");
    zcz_cmd->add_option("--report", ca.report_path, "write a JSON report");

    // ---- pmepr
    double pm_bound = 2.0;
    int pm_oversample = 64;
    auto* pm = app.add_subcommand("pmepr", "check the column envelope power bound");
    pm->add_option("--in", ca.in_path, "code set file")->required();
    pm->add_option("--bound", pm_bound, "PMEPR bound (default 2.0)");
    pm->add_option("--oversample", pm_oversample, "grid density per column symbol");
    pm->add_option("--jobs", ca.jobs, "worker threads")->envname("ZCCS_JOBS");
    pm->add_option("--report", ca.report_path, "write a JSON report");

    // ---- export-csv
    std::string csv_in, csv_out;
    auto* csv = app.add_subcommand("export-csv", "write complex symbols as CSV");
    csv->add_option("--in", csv_in, "code set file")->required();
    csv->add_option("--out", csv_out, "CSV file")->required();

    // ---- golay-scan
    auto* gs = app.add_subcommand("golay-scan", "count columns with an autocorrelation partner");
    gs->add_option("--in", ca.in_path, "code set file")->required();
    gs->add_option("--report", ca.report_path, "write a JSON report");

    std::vector<std::string> argv_like = args;
    argv_like.insert(argv_like.begin(), "zccs");
    std::vector<const char*> argv;
    argv.reserve(argv_like.size());
    for (const auto& s : argv_like) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        const int code = app.exit(e, msg, msg);  // reuse CLI11's formatting
        (code == 0 ? out : err) << msg.str();
        return code == 0 ? 0 : 2;
    }

    ga.deleted_given = del_opt->count() > 0;
    ga.n_given = n_opt->count() > 0;

    try {
        if (gen->parsed()) return cmd_generate(ga, out, err);

        if (plan->parsed()) {
            const PlanResult p = plan_parameters(plan_length, plan_m);
            out << "length " << p.target_length << " = 2^" << p.m << " * " << p.cofactor << "\n";
            out << "primes:";
            for (long v : p.primes) out << " " << v;
            out << "\nwidths:";
            for (int v : p.widths) out << " " << v;
            long sigma = 2;
            for (long v : p.primes) sigma = std::lcm(sigma, v);
            out << "\nzcz width: " << (1L << p.m) << ", minimum sigma (q=2): " << sigma << "\n";
            json jr;
            jr["command"] = "plan";
            jr["length"] = p.target_length;
            jr["m"] = p.m;
            jr["cofactor"] = p.cofactor;
            jr["primes"] = p.primes;
            jr["widths"] = p.widths;
            write_report(plan_report, jr);
            return 0;
        }

        if (verify_cmd->parsed()) {
            const CodeSet set = read_codeset(ca.in_path);
            const long Z = ca.Z > 0 ? ca.Z : set.params.Z;
            CheckOptions opts;
            opts.engine = ca.engine == "float" ? Engine::Float : Engine::Exact;
            opts.fast = ca.fast;
            opts.jobs = ca.jobs;
            const CorrelationReport rep = check_zccs(set, Z, opts);
            return print_check_report(rep, Z, set, "verify", ca.report_path, out);
        }

        if (ccc_cmd->parsed()) {
            const CodeSet set = read_codeset(ca.in_path);
            CheckOptions opts;
            opts.engine = ca.engine == "float" ? Engine::Float : Engine::Exact;
            opts.fast = ca.fast;
            opts.jobs = ca.jobs;
            const CorrelationReport rep = check_ccc(set, opts);
            return print_check_report(rep, set.params.N, set, "ccc", ca.report_path, out);
        }

        if (zcz_cmd->parsed()) {
            const CodeSet set = read_codeset(ca.in_path);
            const long z = measure_zcz(set, ca.jobs);
            out << "measured zone: " << z << " (claimed " << set.params.Z << ")\n";
            json jr;
            jr["command"] = "zcz-measure";
            jr["measured"] = z;
            jr["claimed"] = set.params.Z;
            write_report(ca.report_path, jr);
            return 0;
        }

        if (pm->parsed()) {
            const CodeSet set = read_codeset(ca.in_path);
            const PmeprReport rep = check_pmepr_bound(set, pm_bound, pm_oversample, ca.jobs);
            out << "worst column PMEPR " << rep.worst.value << " at code " << rep.worst.code
                << " column " << rep.worst.column << " (bound " << rep.bound << ") -> "
                << (rep.passed ? "PASS" : "FAIL") << "\n";
            json jr;
            jr["command"] = "pmepr";
            jr["passed"] = rep.passed;
            jr["bound"] = rep.bound;
            jr["oversample"] = rep.oversample;
            json w;
            w["code"] = rep.worst.code;
            w["column"] = rep.worst.column;
            w["value"] = rep.worst.value;
            jr["worst"] = w;
            write_report(ca.report_path, jr);
            return rep.passed ? 0 : 1;
        }

        if (csv->parsed()) {
            const CodeSet set = read_codeset(csv_in);
            export_csv(set, csv_out);
            out << "wrote " << csv_out << "\n";
            return 0;
        }

        if (gs->parsed()) {
            const CodeSet set = read_codeset(ca.in_path);
            std::vector<PhaseSequence> pool;
            for (const auto& code : set.codes)
                for (long i = 0; i < code.length(); ++i) pool.push_back(extract_column(code, i));
            // Float prefilter over precomputed autocorrelations, then the
            // exact test confirms each candidate pair; an exact zero always
            // survives the prefilter, so no partner can be missed.
            const long k = pool.empty() ? 0 : pool.front().length();
            std::vector<std::vector<std::complex<double>>> ac(pool.size());
            for (std::size_t i = 0; i < pool.size(); ++i)
                for (long tau = 1; tau < k; ++tau)
                    ac[i].push_back(accf_float(pool[i], pool[i], tau));
            const double tol = 1e-6 * static_cast<double>(k);
            long matched = 0;
            for (std::size_t i = 0; i < pool.size(); ++i) {
                bool found = false;
                for (std::size_t j = 0; j < pool.size() && !found; ++j) {
                    bool plausible = true;
                    for (long t = 0; t + 1 < k && plausible; ++t)
                        plausible = std::abs(ac[i][static_cast<std::size_t>(t)] +
                                             ac[j][static_cast<std::size_t>(t)]) < tol;
                    if (!plausible) continue;
                    bool exact = true;
                    for (long tau = 1; tau < k && exact; ++tau) {
                        CycloSum sum = accf_exact(pool[i], pool[i], tau);
                        sum.add(accf_exact(pool[j], pool[j], tau));
                        exact = sum.is_zero_exact();
                    }
                    found = exact;
                }
                if (found) ++matched;
            }
            out << "columns with a partner: " << matched << "/" << pool.size() << "\n";
            json jr;
            jr["command"] = "golay-scan";
            jr["total"] = pool.size();
            jr["matched"] = matched;
            write_report(ca.report_path, jr);
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // unreachable: require_subcommand(1)
}

}  // namespace zccs

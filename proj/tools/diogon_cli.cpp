// Command-line front end: lemma sweeps, circle construction, frame search,
// the brute-force oracle, bound checks, and figure rendering.
//
// Exit status: 0 all checks passed, 1 mathematical inconsistency found
// (counterexample, failed certificate, exceeded bound), 2 usage or I/O
// error. Every subcommand is deterministic: same flags, byte-identical
// outputs. The environment is never consulted.

#include "diogon/bounds.hpp"
#include "diogon/circle_construct.hpp"
#include "diogon/ngon_search.hpp"
#include "diogon/serialize.hpp"
#include "diogon/svg.hpp"
#include "diogon/trigon_laws.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace diogon;

// CLI11 consults a config option only on the root app, never on a
// subcommand, so --config is expanded into argv ahead of parsing: every
// key=value line becomes "--key value" appended after the explicit flags,
// and keys the user already passed are skipped. Explicit flags therefore
// always win. Lines that are blank or start with '#' are ignored.
std::vector<std::string> expand_config_args(std::vector<std::string> args) {
    std::size_t sub = 0;
    while (sub < args.size() && !args[sub].empty() && args[sub][0] == '-') ++sub;
    if (sub == args.size()) return args;

    std::vector<std::string> files;
    for (std::size_t i = sub + 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            files.push_back(args[i + 1]);
        else if (args[i].rfind("--config=", 0) == 0)
            files.push_back(args[i].substr(9));
    }

    auto trim = [](const std::string& t) {
        const char* ws = " \t\r";
        auto b = t.find_first_not_of(ws);
        if (b == std::string::npos) return std::string();
        return t.substr(b, t.find_last_not_of(ws) - b + 1);
    };
    auto has_flag = [&](const std::string& flag) {
        for (std::size_t i = sub + 1; i < args.size(); ++i)
            if (args[i] == flag || args[i].rfind(flag + "=", 0) == 0) return true;
        return false;
    };

    for (const auto& file : files) {
        std::istringstream in(read_text(file));
        std::string line;
        while (std::getline(in, line)) {
            line = trim(line);
            if (line.empty() || line[0] == '#') continue;
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error("config line without '=': " + line);
            std::string key = trim(line.substr(0, eq));
            if (key.empty()) throw std::runtime_error("config line without a key");
            std::string flag = "--" + key;
            if (flag == "--config" || has_flag(flag)) continue;
            args.push_back(flag);
            args.push_back(trim(line.substr(eq + 1)));
        }
    }
    return args;
}

struct VerifyOpts {
    std::uint64_t a_max = 40, b_max = 40, k_max = 15, m_max = 15;
    std::uint64_t b_max_tasks = 60, m_max_tasks = 30;
    std::uint64_t crossing_count = 1000;
    std::uint64_t crossing_seed = 112358;
    std::uint64_t consequence_max = 20;
    unsigned threads = 1;
    std::string out;  // directory for CSV reports, optional
};

int run_verify(const VerifyOpts& o) {
    if (o.a_max < 1 || o.b_max < 1 || o.k_max < 1 || o.m_max < 1 || o.b_max_tasks < 1 ||
        o.m_max_tasks < 1 || o.crossing_count < 1 || o.consequence_max < 1) {
        std::cerr << "error: every sweep bound must be >= 1\n";
        return 2;
    }

    auto l1 = lemma1_sweep(Int(o.a_max), Int(o.b_max), Int(o.k_max), Int(o.m_max), o.threads);
    auto t1 = task1_sweep(Int(o.b_max_tasks), o.threads);
    auto t2 = task2_sweep(Int(o.b_max_tasks), Int(o.m_max_tasks), o.threads);
    auto cr = crossing_random_sweep(o.crossing_count, o.crossing_seed);

    std::size_t cons_checked = 0, cons_bad = 0;
    std::vector<std::array<std::uint64_t, 4>> cons_failures;
    for (std::uint64_t b = 1; b <= o.consequence_max; ++b)
        for (std::uint64_t a = 1; a <= o.consequence_max; ++a)
            for (std::uint64_t m = 1; m <= o.consequence_max; ++m)
                for (std::uint64_t t = 1; t <= o.consequence_max; ++t) {
                    if (!(b + (a + m) > a + (b + t))) continue;  // hypothesis chain
                    ++cons_checked;
                    if (!lemma2_integer_consequence(Int(b), Int(a), Int(m), Int(t))) {
                        ++cons_bad;
                        cons_failures.push_back({b, a, m, t});
                    }
                }

    // counterexamples, if any, come before the summaries
    for (const auto& r : l1.rows)
        if (!r.holds)
            std::cout << "counterexample lemma1 a=" << r.a << " b=" << r.b << " k=" << r.k
                      << " m=" << r.m << "\n";
    for (const auto& r : t1.rows)
        if (!r.holds)
            std::cout << "counterexample task1 a=" << r.a << " b=" << r.b << " c=" << r.c
                      << "\n";
    for (const auto& r : t2.rows)
        if (!r.holds)
            std::cout << "counterexample task2 a=" << r.a << " b=" << r.b << " c=" << r.c
                      << "\n";
    if (cr.counterexamples > 0)
        std::cout << "counterexample crossings count=" << cr.counterexamples << " seed="
                  << o.crossing_seed << "\n";
    for (const auto& f : cons_failures)
        std::cout << "counterexample consequence b=" << f[0] << " a=" << f[1] << " m=" << f[2]
                  << " t=" << f[3] << "\n";

    std::cout << "lemma1: instances=" << l1.rows.size()
              << " counterexamples=" << l1.counterexamples << "\n";
    std::cout << "task1: instances=" << t1.rows.size() << " skipped="
              << t1.skipped_out_of_hypothesis << " counterexamples=" << t1.counterexamples
              << "\n";
    std::cout << "task2: instances=" << t2.rows.size() << " skipped="
              << t2.skipped_out_of_hypothesis << " counterexamples=" << t2.counterexamples
              << "\n";
    std::cout << "crossings: checked=" << cr.checked
              << " counterexamples=" << cr.counterexamples << "\n";
    std::cout << "consequence: checked=" << cons_checked << " counterexamples=" << cons_bad
              << "\n";

    if (!o.out.empty()) {
        std::filesystem::path dir(o.out);
        write_text_atomic(dir / "lemma1.csv", lemma1_csv(l1.rows));
        write_text_atomic(dir / "task1.csv", task_csv(t1.rows));
        write_text_atomic(dir / "task2.csv", task_csv(t2.rows));
    }

    bool bad = l1.counterexamples || t1.counterexamples || t2.counterexamples ||
               cr.counterexamples || cons_bad;
    return bad ? 1 : 0;
}

struct ConstructOpts {
    std::uint64_t n = 0;
    std::string out;
    std::string rational_out;
};

int run_construct(const ConstructOpts& o) {
    if (o.n < 1) {
        std::cerr << "error: --n must be >= 1\n";
        return 2;
    }
    DiophantineSet set = construct_diophantine(o.n);
    std::string why;
    if (!verify_certificate(set, &why)) {
        std::cerr << "certificate failed: " << why << "\n";
        return 1;
    }
    write_text_atomic(o.out, canonical_dump(to_json(set)));
    if (!o.rational_out.empty()) {
        QuasiDiophantineSet qs = place_on_circle(gen_pythagorean_angles(o.n));
        write_text_atomic(o.rational_out, canonical_dump(to_json(qs)));
    }
    std::cout << "scale=" << (set.scale_note ? set.scale_note->str() : std::string("1"))
              << "\n";
    return 0;
}

struct SearchOpts {
    std::uint64_t k = 1, max_dist = 1;
    std::string mode = "sets";
    std::uint64_t target_n = 0;  // 0 = unset
    std::string out;
    std::string csv;
    unsigned threads = 1;
};

int emit_search_report(const SearchReport& rep, const std::string& out,
                       const std::string& csv) {
    BoundReport bounds = check_claims(rep);
    if (!out.empty()) write_text_atomic(out, canonical_dump(to_json(rep)));
    if (!csv.empty()) write_text_atomic(csv, witness_summary_csv(rep));
    std::cout << "k=" << rep.k << " M=" << rep.M << " max_n=" << rep.max_n_found
              << " bound=" << rep.bound_4k
              << " consistent=" << (bounds.consistent ? "true" : "false") << "\n";
    return bounds.consistent ? 0 : 1;
}

int run_search(const SearchOpts& o) {
    if (o.k < 1 || o.max_dist < o.k) {
        std::cerr << "error: need --max-dist >= --k >= 1\n";
        return 2;
    }
    auto mode = search_mode_from_string(o.mode);
    if (!mode) {
        std::cerr << "error: --mode must be sets, convex or concave\n";
        return 2;
    }
    SearchConfig cfg;
    cfg.k = Int(o.k);
    cfg.M = Int(o.max_dist);
    cfg.mode = *mode;
    if (o.target_n > 0) cfg.target_n = static_cast<std::size_t>(o.target_n);
    SearchReport rep = search(cfg, o.threads);
    return emit_search_report(rep, o.out, o.csv);
}

int run_oracle(const SearchOpts& o) {
    if (o.k < 1 || o.max_dist < o.k) {
        std::cerr << "error: need --max-dist >= --k >= 1\n";
        return 2;
    }
    if (o.max_dist > 12) {
        std::cerr << "error: the oracle enumerates subsets; --max-dist is capped at 12\n";
        return 2;
    }
    auto mode = search_mode_from_string(o.mode);
    if (!mode) {
        std::cerr << "error: --mode must be sets, convex or concave\n";
        return 2;
    }
    SearchConfig cfg;
    cfg.k = Int(o.k);
    cfg.M = Int(o.max_dist);
    cfg.mode = *mode;
    if (o.target_n > 0) cfg.target_n = static_cast<std::size_t>(o.target_n);
    SearchReport rep = brute_force_oracle(cfg);
    return emit_search_report(rep, o.out, o.csv);
}

struct CheckBoundsOpts {
    std::uint64_t k = 0;  // 0 = unset
    std::string report;
    std::string out;
};

int run_check_bounds(const CheckBoundsOpts& o) {
    BoundReport rep;
    if (!o.report.empty()) {
        SearchReport sr = report_from_json(nlohmann::json::parse(read_text(o.report)));
        if (o.k > 0 && Int(o.k) != sr.k) {
            std::cerr << "error: --k disagrees with the report's k\n";
            return 2;
        }
        rep = check_claims(sr);
    } else {
        if (o.k < 1) {
            std::cerr << "error: need --k >= 1 or --report\n";
            return 2;
        }
        rep = make_bound_report(Int(o.k));
    }
    if (!o.out.empty()) write_text_atomic(o.out, canonical_dump(to_json(rep)));
    std::cout << bound_report_table(rep);
    return rep.consistent ? 0 : 1;
}

struct RenderOpts {
    std::string in;
    std::string out;
};

int run_render(const RenderOpts& o) {
    DiophantineSet set = set_from_json(nlohmann::json::parse(read_text(o.in)));
    if (set.points.empty()) {
        std::cerr << "error: the set file has no points\n";
        return 2;
    }
    write_text_atomic(o.out, render_svg(set));
    std::cout << "rendered " << set.points.size() << " points to " << o.out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic laboratory for integer-distance point sets"};
    app.require_subcommand(1);

    VerifyOpts vo;
    auto* verify = app.add_subcommand(
        "verify-lemmas", "sweep the angle-comparison laws over parameter grids");
    verify->add_option("--a-max", vo.a_max, "largest shorter third side");
    verify->add_option("--b-max", vo.b_max, "largest longer third side");
    verify->add_option("--k-max", vo.k_max, "largest shared base side");
    verify->add_option("--m-max", vo.m_max, "largest base offset");
    verify->add_option("--b-max-tasks", vo.b_max_tasks, "largest b in the task sweeps");
    verify->add_option("--m-max-tasks", vo.m_max_tasks, "largest m in the second task sweep");
    verify->add_option("--crossing-count", vo.crossing_count, "random crossing instances");
    verify->add_option("--crossing-seed", vo.crossing_seed, "seed for the crossing sweep");
    verify->add_option("--consequence-max", vo.consequence_max,
                       "grid bound for the integer consequence");
    verify->add_option("--threads", vo.threads, "worker threads");
    verify->add_option("--out", vo.out, "directory for CSV sweep reports");
    verify->add_option("--config", "key=value file of long flag names; explicit flags win");

    ConstructOpts co;
    auto* construct =
        app.add_subcommand("construct", "build a certified concyclic integer-distance set");
    construct->add_option("--n", co.n, "number of points")->required();
    construct->add_option("--out", co.out, "output JSON path")->required();
    construct->add_option("--rational-out", co.rational_out,
                          "also write the unscaled rational-distance set");
    construct->add_option("--config", "key=value file of long flag names; explicit flags win");

    SearchOpts so;
    auto* search_cmd =
        app.add_subcommand("search", "exhaustive frame search for maximum sets");
    search_cmd->add_option("--k", so.k, "baseline length");
    search_cmd->add_option("--max-dist", so.max_dist, "distance budget M");
    search_cmd->add_option("--mode", so.mode, "sets, convex or concave");
    search_cmd->add_option("--target-n", so.target_n, "report witnesses only at this size");
    search_cmd->add_option("--out", so.out, "JSON report path");
    search_cmd->add_option("--csv", so.csv, "witness summary CSV path");
    search_cmd->add_option("--threads", so.threads, "worker threads");
    search_cmd->add_option("--config", "key=value file of long flag names; explicit flags win");

    SearchOpts oo;
    auto* oracle_cmd = app.add_subcommand(
        "oracle", "subset-enumeration ground truth for small frames (M <= 12)");
    oracle_cmd->add_option("--k", oo.k, "baseline length");
    oracle_cmd->add_option("--max-dist", oo.max_dist, "distance budget M");
    oracle_cmd->add_option("--mode", oo.mode, "sets, convex or concave");
    oracle_cmd->add_option("--target-n", oo.target_n, "report witnesses only at this size");
    oracle_cmd->add_option("--out", oo.out, "JSON report path");
    oracle_cmd->add_option("--csv", oo.csv, "witness summary CSV path");
    oracle_cmd->add_option("--config", "key=value file of long flag names; explicit flags win");

    CheckBoundsOpts bo;
    auto* bounds_cmd =
        app.add_subcommand("check-bounds", "derived bounds and claim consistency");
    bounds_cmd->add_option("--k", bo.k, "baseline length");
    bounds_cmd->add_option("--report", bo.report, "search report JSON to check");
    bounds_cmd->add_option("--out", bo.out, "bound report JSON path");
    bounds_cmd->add_option("--config", "key=value file of long flag names; explicit flags win");

    RenderOpts ro;
    auto* render_cmd = app.add_subcommand("render", "SVG figure of a certified set");
    render_cmd->add_option("--in", ro.in, "set or witness JSON path")->required();
    render_cmd->add_option("--out", ro.out, "SVG output path")->required();
    render_cmd->add_option("--config", "key=value file of long flag names; explicit flags win");

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = expand_config_args(std::move(args));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::reverse(args.begin(), args.end());  // parse(vector) takes reversed argv

    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(verify)) return run_verify(vo);
        if (app.got_subcommand(construct)) return run_construct(co);
        if (app.got_subcommand(search_cmd)) return run_search(so);
        if (app.got_subcommand(oracle_cmd)) return run_oracle(oo);
        if (app.got_subcommand(bounds_cmd)) return run_check_bounds(bo);
        if (app.got_subcommand(render_cmd)) return run_render(ro);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
